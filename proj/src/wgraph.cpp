#include "klq/wgraph.hpp"

#include <algorithm>
#include <set>

namespace klq {

int CellGraph::index_of(const Permutation& p) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), p);
  if (it == vertices.end() || *it != p)
    throw std::invalid_argument("not a vertex: " + p.str());
  return static_cast<int>(it - vertices.begin());
}

std::int64_t CellGraph::weight(int i, int j) const {
  if (i > j) std::swap(i, j);
  auto it = edges.find({i, j});
  return it == edges.end() ? 0 : it->second;
}

std::string CellGraph::dump() const {
  std::string out;
  for (const auto& v : vertices) out += v.str() + "\n";
  for (const auto& [e, wgt] : edges)
    out += vertices[static_cast<std::size_t>(e.first)].str() + " " +
           vertices[static_cast<std::size_t>(e.second)].str() + " " +
           std::to_string(wgt) + "\n";
  return out;
}

namespace {
std::vector<Permutation> sorted_vertices(std::vector<Permutation> cell) {
  std::sort(cell.begin(), cell.end());
  return cell;
}
}  // namespace

CellGraph kl_graph(const std::vector<Permutation>& cell, KLCache& cache) {
  CellGraph g;
  g.vertices = sorted_vertices(cell);
  const int m = static_cast<int>(g.vertices.size());
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const Permutation &a = g.vertices[static_cast<std::size_t>(i)],
                        &b = g.vertices[static_cast<std::size_t>(j)];
      std::int64_t wgt = 0;
      if (bruhat_leq(a, b))
        wgt = mu(a, b, cache);
      else if (bruhat_leq(b, a))
        wgt = mu(b, a, cache);
      if (wgt != 0) g.edges[{i, j}] = wgt;
    }
  }
  return g;
}

CellGraph ls_graph(const std::vector<Permutation>& cell) {
  CellGraph g;
  g.vertices = sorted_vertices(cell);
  const int n = g.vertices.empty() ? 0 : g.vertices.front().degree();

  std::set<std::pair<int, int>> edges;
  std::vector<std::pair<int, int>> queue;
  const auto add = [&](const Permutation& a, const Permutation& b) {
    int i = g.index_of(a), j = g.index_of(b);
    if (i > j) std::swap(i, j);
    if (edges.insert({i, j}).second) queue.push_back({i, j});
  };

  for (const auto& [x, w] : weak_left_covers(g.vertices)) add(x, w);

  while (!queue.empty()) {
    const auto [i, j] = queue.back();
    queue.pop_back();
    const Permutation &a = g.vertices[static_cast<std::size_t>(i)],
                      &b = g.vertices[static_cast<std::size_t>(j)];
    for (int k = 0; k + 2 < n; ++k) {
      if (!star_applicable(k, a) || !star_applicable(k, b)) continue;
      add(star_apply(k, a), star_apply(k, b));
    }
  }
  for (const auto& e : edges) g.edges[e] = 1;
  return g;
}

GeneratorMatrix action_matrix(const CellGraph& graph, int s) {
  const int m = static_cast<int>(graph.vertices.size());
  GeneratorMatrix out;
  out.gen = s;
  out.entries.assign(static_cast<std::size_t>(m),
                     std::vector<std::int64_t>(static_cast<std::size_t>(m), 0));
  std::vector<char> has_descent(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i)
    has_descent[static_cast<std::size_t>(i)] =
        (graph.vertices[static_cast<std::size_t>(i)].left_descent_mask() >> s & 1) != 0;

  for (int col = 0; col < m; ++col) {
    if (has_descent[static_cast<std::size_t>(col)]) {
      out.entries[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)] = -1;
      continue;
    }
    out.entries[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)] = 1;
    for (const auto& [e, wgt] : graph.edges) {
      int other = -1;
      if (e.first == col)
        other = e.second;
      else if (e.second == col)
        other = e.first;
      if (other < 0 || !has_descent[static_cast<std::size_t>(other)]) continue;
      out.entries[static_cast<std::size_t>(other)][static_cast<std::size_t>(col)] = wgt;
    }
  }
  return out;
}

std::vector<GeneratorMatrix> action_matrices(const CellGraph& graph) {
  const int n = graph.vertices.empty() ? 0 : graph.vertices.front().degree();
  std::vector<GeneratorMatrix> out;
  for (int s = 0; s + 1 < n; ++s) out.push_back(action_matrix(graph, s));
  return out;
}

std::string GeneratorMatrix::dump() const {
  std::string out;
  for (const auto& row : entries) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ' ';
      out += std::to_string(row[c]);
    }
    out += '\n';
  }
  return out;
}

namespace {

using Mat = std::vector<std::vector<std::int64_t>>;

Mat multiply(const Mat& a, const Mat& b) {
  const std::size_t m = a.size();
  Mat c(m, std::vector<std::int64_t>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k) {
      const std::int64_t v = a[i][k];
      if (v == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += v * b[k][j];
    }
  return c;
}

void compare(const Mat& lhs, const Mat& rhs, const std::string& relation, int s, int t,
             std::vector<RelationReport::Violation>& out) {
  for (std::size_t i = 0; i < lhs.size(); ++i)
    for (std::size_t j = 0; j < lhs.size(); ++j)
      if (lhs[i][j] != rhs[i][j])
        out.push_back({relation, s, t, static_cast<int>(i), static_cast<int>(j),
                       lhs[i][j], rhs[i][j]});
}

}  // namespace

RelationReport check_relations(const std::vector<GeneratorMatrix>& matrices) {
  RelationReport report;
  const int g = static_cast<int>(matrices.size());
  if (g == 0) return report;
  const std::size_t m = matrices.front().entries.size();
  Mat identity(m, std::vector<std::int64_t>(m, 0));
  for (std::size_t i = 0; i < m; ++i) identity[i][i] = 1;

  for (int s = 0; s < g; ++s)
    compare(multiply(matrices[static_cast<std::size_t>(s)].entries,
                     matrices[static_cast<std::size_t>(s)].entries),
            identity, "involution", s, s, report.violations);

  for (int s = 0; s < g; ++s) {
    for (int t = s + 1; t < g; ++t) {
      const Mat& a = matrices[static_cast<std::size_t>(s)].entries;
      const Mat& b = matrices[static_cast<std::size_t>(t)].entries;
      if (t - s >= 2) {
        compare(multiply(a, b), multiply(b, a), "commutation", s, t, report.violations);
      } else {
        compare(multiply(a, multiply(b, a)), multiply(b, multiply(a, b)), "braid", s, t,
                report.violations);
      }
    }
  }
  return report;
}

std::string RelationReport::str() const {
  if (ok()) return "all relations hold\n";
  std::string out;
  for (const auto& v : violations)
    out += v.relation + " s=" + std::to_string(v.s) + " t=" + std::to_string(v.t) +
           " entry(" + std::to_string(v.row) + "," + std::to_string(v.col) +
           "): " + std::to_string(v.lhs) + " != " + std::to_string(v.rhs) + "\n";
  return out;
}

}  // namespace klq
