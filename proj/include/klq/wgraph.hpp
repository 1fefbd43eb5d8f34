#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "klq/kl.hpp"
#include "klq/perm.hpp"
#include "klq/rsk.hpp"

namespace klq {

/// Weighted mu-graph on one left cell.  Vertices are sorted by one-line word;
/// edges join unordered vertex pairs.
struct CellGraph {
  std::vector<Permutation> vertices;
  std::map<std::pair<int, int>, std::int64_t> edges;  // (i,j) with i < j

  int index_of(const Permutation& p) const;
  std::int64_t weight(int i, int j) const;
  /// Vertex list, then one "x w weight" line per edge.
  std::string dump() const;
};

/// Edges are the comparable pairs with nonzero mu, weighted by mu.
CellGraph kl_graph(const std::vector<Permutation>& cell, KLCache& cache);

/// Edges are the weak-left-cover pairs inside the cell together with every
/// pair reachable from them by simultaneous cell-preserving Knuth moves
/// applied to both endpoints.  All weights are 1.
CellGraph ls_graph(const std::vector<Permutation>& cell);

struct GeneratorMatrix {
  int gen = -1;
  std::vector<std::vector<std::int64_t>> entries;  // entries[row][col]

  std::string dump() const;
};

/// The q = 1 cell action of one generator.  Column x is -e_x when s is a left
/// descent of x, and otherwise e_x plus weight(x,y) e_y over the neighbors y
/// having s as a left descent.
GeneratorMatrix action_matrix(const CellGraph& graph, int s);
std::vector<GeneratorMatrix> action_matrices(const CellGraph& graph);

struct RelationReport {
  struct Violation {
    std::string relation;  // "involution", "commutation", "braid"
    int s = -1, t = -1;
    int row = -1, col = -1;
    std::int64_t lhs = 0, rhs = 0;
  };
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string str() const;
};

/// Checks A(s)^2 = I, commutation for |s-t| >= 2 and the braid relation for
/// |s-t| = 1, reporting each failing entry.
RelationReport check_relations(const std::vector<GeneratorMatrix>& matrices);

}  // namespace klq
