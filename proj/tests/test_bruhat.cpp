#include "klq/bruhat.hpp"

#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "klq/reference.hpp"

using klq::Permutation;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

// Independent order oracle: transitive closure of the covering relation.
struct CoverOracle {
  std::map<std::vector<int>, std::set<std::vector<int>>> below;  // w -> all x <= w

  explicit CoverOracle(int n) {
    auto perms = klq::all_permutations(n);
    std::stable_sort(perms.begin(), perms.end(),
                     [](const Permutation& a, const Permutation& b) {
                       return a.length() < b.length();
                     });
    for (const auto& w : perms) {
      auto& set = below[w.images()];
      set.insert(w.images());
      for (const auto& z : klq::coatoms(w)) {
        const auto& zset = below.at(z.images());
        set.insert(zset.begin(), zset.end());
      }
    }
  }

  bool leq(const Permutation& x, const Permutation& w) const {
    return below.at(w.images()).count(x.images()) != 0;
  }
};

}  // namespace

TEST_CASE("rank function") {
  CHECK(klq::rank_fn(Permutation::identity(3), 2, 0) == 3);
  CHECK(klq::rank_fn(P("523140"), 0, 3) == 1);
  for (int q = -2; q < 8; ++q) CHECK(klq::rank_fn(P("523140"), -1, q) == 0);
}

TEST_CASE("order agrees with the cover-closure oracle on S5") {
  const CoverOracle oracle(5);
  const auto perms = klq::all_permutations(5);
  for (const auto& x : perms) {
    CHECK(klq::bruhat_leq(x, x));
    for (const auto& w : perms) {
      CHECK(klq::bruhat_leq(x, w) == oracle.leq(x, w));
      // antisymmetry and inverse invariance
      if (klq::bruhat_leq(x, w) && klq::bruhat_leq(w, x)) CHECK(x == w);
      CHECK(klq::bruhat_leq(x, w) == klq::bruhat_leq(x.inverse(), w.inverse()));
    }
  }
}

TEST_CASE("figure pair") {
  CHECK(klq::bruhat_leq(P("204135"), P("523140")));
  // the shaded region is nonempty and peaks at exactly 1 on this pair
  const auto g = klq::difference_grid(P("204135"), P("523140"));
  int mx = 0;
  for (int p = 0; p < 6; ++p)
    for (int q = 0; q < 6; ++q) mx = std::max(mx, g.at(p, q));
  CHECK(mx == 1);
  const auto gww = klq::difference_grid(P("523140"), P("523140"));
  for (int v : gww.values) CHECK(v == 0);
}

TEST_CASE("forced positions") {
  const Permutation x = P("6491082753"), w = P("9461782350");
  const auto forced = klq::forced_positions(x, w);
  std::vector<std::pair<int, int>> want{{1, 4}, {3, 1}, {5, 8}, {8, 5}};
  CHECK(forced == want);

  const auto f2 = klq::forced_positions(P("315042"), P("534102"));
  bool has = false;
  for (auto& [i, v] : f2) has |= (i == 5 && v == 2);
  CHECK(has);

  const Permutation u = P("10325476");
  CHECK(klq::forced_positions(u, u).size() == 8);
  CHECK_THROWS_AS(klq::forced_positions(P("2103"), P("1032")), std::invalid_argument);
}

TEST_CASE("interval enumeration matches the direct filter on S5") {
  const auto perms = klq::all_permutations(5);
  for (const auto& x : perms)
    for (const auto& w : perms) {
      std::set<std::vector<int>> direct;
      for (const auto& z : perms)
        if (klq::bruhat_leq(x, z) && klq::bruhat_leq(z, w)) direct.insert(z.images());
      std::set<std::vector<int>> dfs;
      for (const auto& z : klq::enumerate_interval(x, w))
        CHECK(dfs.insert(z.images()).second);
      CHECK(dfs == direct);
    }
  // whole group and singleton cases
  CHECK(klq::enumerate_interval(P("0123"), P("3210")).size() == 24);
  CHECK(klq::enumerate_interval(P("3210"), P("3210")).size() == 1);
  CHECK(klq::enumerate_interval(P("2103"), P("1032")).empty());
}

TEST_CASE("interval elements respect forced positions") {
  const Permutation x = P("315042"), w = P("534120");
  const auto forced = klq::forced_positions(x, w);
  for (const auto& z : klq::enumerate_interval(x, w))
    for (auto& [i, v] : forced) CHECK(z(i) == v);
}

TEST_CASE("pair reduction") {
  const auto red = klq::reduce_pair(P("6491082753"), P("9461782350"));
  CHECK(red.x.str() == "350142");
  CHECK(red.w.str() == "534120");
  CHECK(red.kept == std::vector<int>{0, 2, 4, 6, 7, 9});

  // the intermediate pair of the published derivation
  const auto red2 = klq::reduce_pair(P("315042"), P("534102"));
  CHECK(red2.x.str() == "21403");
  CHECK(red2.w.str() == "42310");

  const auto self = klq::reduce_pair(P("3120"), P("3120"));
  CHECK(self.x.degree() == 0);
  CHECK(self.kept.empty());

  std::mt19937 rng(23);
  auto s7 = klq::all_permutations(7);
  std::uniform_int_distribution<std::size_t> pick(0, s7.size() - 1);
  int done = 0;
  while (done < 40) {
    const Permutation &x = s7[pick(rng)], &w = s7[pick(rng)];
    if (!klq::bruhat_leq(x, w)) continue;
    ++done;
    const auto r1 = klq::reduce_pair(x, w);
    const auto r2 = klq::reduce_pair(r1.x, r1.w);
    CHECK(r2.x == r1.x);  // reducing a reduced pair changes nothing
    CHECK(r2.w == r1.w);
    CHECK(w.length() - x.length() == r1.w.length() - r1.x.length());
  }
}

TEST_CASE("flush set matches the nonzero-mu support below the coatoms") {
  klq::reference::Table oracle;
  const auto perms = klq::all_permutations(5);
  for (const auto& w : perms) {
    CHECK(klq::is_flush(w, w));
    for (const auto& z : perms) {
      if (!klq::bruhat_leq(z, w) || z == w) continue;
      if (w.length() - z.length() <= 1) continue;
      if (oracle.mu(z, w) != 0) CHECK(klq::is_flush(z, w));
    }
  }
}

TEST_CASE("weak left covers") {
  const std::vector<Permutation> single{P("0123")};
  CHECK(klq::weak_left_covers(single).empty());

  const auto s3 = klq::all_permutations(3);
  const auto covers3 = klq::weak_left_covers(s3);
  int from_identity = 0;
  for (const auto& [x, w] : covers3)
    if (x == Permutation::identity(3)) ++from_identity;
  CHECK(from_identity == 2);

  const auto s4 = klq::all_permutations(4);
  const auto covers = klq::weak_left_covers(s4);
  std::size_t brute = 0;
  for (const auto& x : s4)
    for (int s = 0; s < 3; ++s)
      if (x.left_mult(s).length() == x.length() + 1) ++brute;
  CHECK(covers.size() == brute);
}

TEST_CASE("picture rendering") {
  const std::string self = klq::render_picture(P("201"), P("201"));
  CHECK(self.find("◉") != std::string::npos);
  CHECK(self.find("●") == std::string::npos);
  CHECK(self.find("○") == std::string::npos);

  // digits in the picture agree with the raw grid
  const Permutation x = P("204135"), w = P("523140");
  const std::string grid = klq::grid_dump(x, w);
  std::vector<std::vector<int>> rows;
  rows.emplace_back();
  for (char c : grid) {
    if (c == '\n') rows.emplace_back();
    else if (c != ' ') rows.back().push_back(c - '0');
  }
  rows.pop_back();
  const auto g = klq::difference_grid(x, w);
  for (int q = 5; q >= 0; --q)
    for (int p = 0; p < 6; ++p)
      CHECK(rows[static_cast<std::size_t>(5 - q)][static_cast<std::size_t>(p)] == g.at(p, q));

  // forced positions of the headline pair appear as capitols on zero cells
  const Permutation hx = P("6491082753"), hw = P("9461782350");
  const auto gg = klq::difference_grid(hx, hw);
  for (auto& [i, v] : klq::forced_positions(hx, hw)) CHECK(gg.at(i, v) == 0);
  const std::string pic = klq::render_picture(hx, hw);
  std::size_t capitols = 0, pos = 0;
  while ((pos = pic.find("◉", pos)) != std::string::npos) {
    ++capitols;
    pos += 1;
  }
  std::size_t agree = 0;
  for (int i = 0; i < 10; ++i)
    if (hx(i) == hw(i)) ++agree;
  CHECK(capitols == agree);
  // one capitol (position 6) sits inside the shaded region and so survives
  // the reduction; the four forced ones are the zero-shaded capitols
  CHECK(agree == 5);
  CHECK(klq::forced_positions(hx, hw).size() == 4);
}
