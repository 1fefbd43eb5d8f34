#include "klq/wgraph.hpp"

#include <map>

#include "doctest.h"
#include "klq/search.hpp"

using klq::CellGraph;
using klq::KLCache;
using klq::Permutation;
using klq::Shape;
using klq::Tableau;

TEST_CASE("small cells") {
  KLCache cache;
  for (const Shape& sh : klq::partitions_of(3))
    for (const Tableau& q : klq::standard_tableaux(sh)) {
      const auto cell = klq::left_cell(q);
      const CellGraph g = klq::kl_graph(cell, cache);
      if (cell.size() == 1) {
        CHECK(g.edges.empty());
      } else {
        REQUIRE(cell.size() == 2);  // the two mixed-shape cells are paths
        CHECK(g.edges.size() == 1);
        CHECK(g.edges.begin()->second == 1);
      }
    }
}

TEST_CASE("every cell edge weight is 1 through degree 5") {
  KLCache cache;
  for (int n = 3; n <= 5; ++n)
    for (const Shape& sh : klq::partitions_of(n))
      for (const Tableau& q : klq::standard_tableaux(sh)) {
        const CellGraph g = klq::kl_graph(klq::left_cell(q), cache);
        for (const auto& [e, w] : g.edges) CHECK(w == 1);
      }
}

TEST_CASE("cover-plus-Knuth closure reproduces the mu graph through degree 5") {
  KLCache cache;
  for (int n = 3; n <= 5; ++n)
    for (const Shape& sh : klq::partitions_of(n))
      for (const Tableau& q : klq::standard_tableaux(sh)) {
        const auto cell = klq::left_cell(q);
        const CellGraph kg = klq::kl_graph(cell, cache);
        const CellGraph lg = klq::ls_graph(cell);
        CHECK(kg.edges == lg.edges);
        for (const auto& [e, w] : lg.edges) {
          CHECK(w == 1);
          CHECK(klq::mu_sym(lg.vertices[static_cast<std::size_t>(e.first)],
                            lg.vertices[static_cast<std::size_t>(e.second)], cache) == 1);
        }
      }
}

TEST_CASE("generator matrices square to the identity") {
  KLCache cache;
  for (const Shape& sh : klq::partitions_of(4))
    for (const Tableau& q : klq::standard_tableaux(sh)) {
      const auto cell = klq::left_cell(q);
      const CellGraph g = klq::kl_graph(cell, cache);
      for (const auto& m : klq::action_matrices(g)) {
        const std::size_t d = m.entries.size();
        CHECK(d == cell.size());
        for (std::size_t i = 0; i < d; ++i) {
          for (std::size_t j = 0; j < d; ++j) {
            std::int64_t acc = 0;
            for (std::size_t k = 0; k < d; ++k) acc += m.entries[i][k] * m.entries[k][j];
            CHECK(acc == (i == j ? 1 : 0));
          }
          CHECK((m.entries[i][i] == 1 || m.entries[i][i] == -1));
        }
      }
    }
}

TEST_CASE("the shape (2,2) cell acts in dimension 2") {
  KLCache cache;
  const auto tabs = klq::standard_tableaux(Shape{{2, 2}});
  REQUIRE(tabs.size() == 2);
  const auto cell = klq::left_cell(tabs.front());
  CHECK(cell.size() == 2);  // character at the identity = dimension = 2
  const CellGraph g = klq::kl_graph(cell, cache);
  for (const auto& m : klq::action_matrices(g)) CHECK(m.entries.size() == 2);
}

TEST_CASE("group relations hold on cell matrices through degree 5") {
  KLCache cache;
  for (int n = 3; n <= 5; ++n)
    for (const Shape& sh : klq::partitions_of(n))
      for (const Tableau& q : klq::standard_tableaux(sh)) {
        const CellGraph g = klq::kl_graph(klq::left_cell(q), cache);
        const auto report = klq::check_relations(klq::action_matrices(g));
        CHECK(report.ok());
      }
}

TEST_CASE("relation violations are reported with indices") {
  klq::GeneratorMatrix bad0{0, {{0, 1}, {1, 0}}};
  klq::GeneratorMatrix bad1{1, {{1, 1}, {0, -1}}};
  klq::GeneratorMatrix bad2{2, {{2, 0}, {0, 1}}};  // not an involution
  const auto report = klq::check_relations({bad0, bad1, bad2});
  CHECK_FALSE(report.ok());
  bool saw_involution = false, saw_commutation = false;
  for (const auto& v : report.violations) {
    if (v.relation == "involution" && v.s == 2) saw_involution = true;
    if (v.relation == "commutation" && v.s == 0 && v.t == 2) saw_commutation = true;
  }
  CHECK(saw_involution);
  CHECK(saw_commutation);
  CHECK(report.str().find("involution") != std::string::npos);
}

TEST_CASE("cells of one shape carry isomorphic weighted graphs") {
  KLCache cache;
  for (int n = 3; n <= 5; ++n)
    for (const Shape& sh : klq::partitions_of(n)) {
      const auto tabs = klq::standard_tableaux(sh);
      // edge weights keyed by the insertion-tableau pair must agree across cells
      std::map<std::pair<std::string, std::string>, std::int64_t> reference_weights;
      bool first = true;
      for (const Tableau& q : tabs) {
        const auto cell = klq::left_cell(q);
        const CellGraph g = klq::kl_graph(cell, cache);
        std::map<std::pair<std::string, std::string>, std::int64_t> weights;
        for (const auto& [e, w] : g.edges) {
          const auto a = klq::rsk(g.vertices[static_cast<std::size_t>(e.first)]).first.str();
          const auto b = klq::rsk(g.vertices[static_cast<std::size_t>(e.second)]).first.str();
          weights[a < b ? std::make_pair(a, b) : std::make_pair(b, a)] = w;
        }
        if (first) {
          reference_weights = weights;
          first = false;
        } else {
          CHECK(weights == reference_weights);
        }
      }
    }
}

TEST_CASE("graph dump format") {
  KLCache cache;
  const auto cell = klq::left_cell(Tableau::parse("02/1"));
  const CellGraph g = klq::kl_graph(cell, cache);
  const std::string d = g.dump();
  CHECK(d.find("102") != std::string::npos);
  CHECK(d.find(" 1\n") != std::string::npos);
}
