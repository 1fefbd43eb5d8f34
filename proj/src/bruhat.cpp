#include "klq/bruhat.hpp"

#include <algorithm>
#include <set>

namespace klq {

namespace {

// Rank tables r[p][q] for p,q in [0,n-1]; r(p,0) = p+1 is included so the
// interval DFS can index uniformly.
std::vector<int> rank_table(const Permutation& w) {
  const int n = w.degree();
  std::vector<int> r(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (int q = 0; q < n; ++q) {
    int count = 0;
    for (int p = 0; p < n; ++p) {
      if (w(p) >= q) ++count;
      r[static_cast<std::size_t>(p) * static_cast<std::size_t>(n) +
        static_cast<std::size_t>(q)] = count;
    }
  }
  return r;
}

}  // namespace

int rank_fn(const Permutation& w, int p, int q) {
  if (p < 0) return 0;
  const int n = w.degree();
  const int pe = std::min(p, n - 1);
  int count = 0;
  for (int i = 0; i <= pe; ++i)
    if (w(i) >= q) ++count;
  return count;
}

DifferenceGrid difference_grid(const Permutation& x, const Permutation& w) {
  if (x.degree() != w.degree()) throw degree_mismatch(x.degree(), w.degree());
  const int n = x.degree();
  DifferenceGrid g;
  g.n = n;
  g.values.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  const std::vector<int> rx = rank_table(x), rw = rank_table(w);
  for (std::size_t i = 0; i < g.values.size(); ++i)
    g.values[i] = rw[i] - rx[i];
  return g;
}

bool bruhat_leq(const Permutation& x, const Permutation& w) {
  if (x.degree() != w.degree()) throw degree_mismatch(x.degree(), w.degree());
  const int n = x.degree();
  // Incremental d(p,q) over q as p advances; adding position p raises
  // r(p,q) by one for q <= word(p).
  std::vector<int> d(static_cast<std::size_t>(n) + 1, 0);
  for (int p = 0; p + 1 < n; ++p) {
    const int a = x(p), b = w(p);
    if (a == b) continue;  // increments cancel
    if (b > a) {
      for (int q = a + 1; q <= b; ++q) ++d[static_cast<std::size_t>(q)];
    } else {
      for (int q = b + 1; q <= a; ++q)
        if (--d[static_cast<std::size_t>(q)] < 0) return false;
    }
  }
  return true;
}

std::vector<std::pair<int, int>> forced_positions(const Permutation& x,
                                                  const Permutation& w) {
  if (!bruhat_leq(x, w))
    throw std::invalid_argument("forced_positions: " + x.str() + " is not <= " + w.str());
  const DifferenceGrid g = difference_grid(x, w);
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < x.degree(); ++i)
    if (x(i) == w(i) && g.at(i, x(i)) == 0) out.emplace_back(i, x(i));
  return out;
}

ReducedPair reduce_pair(const Permutation& x, const Permutation& w) {
  if (x.degree() != w.degree()) throw degree_mismatch(x.degree(), w.degree());
  const DifferenceGrid g = difference_grid(x, w);
  ReducedPair out;
  std::vector<int> xs, ws;
  for (int i = 0; i < x.degree(); ++i) {
    if (x(i) == w(i) && g.at(i, x(i)) == 0) continue;
    out.kept.push_back(i);
    xs.push_back(x(i));
    ws.push_back(w(i));
  }
  out.x = flatten(xs);
  out.w = flatten(ws);
  return out;
}

bool is_flush(const Permutation& x, const Permutation& w) {
  const std::uint64_t rw = w.right_descent_mask(), lw = w.left_descent_mask();
  if ((x.right_descent_mask() & rw) != rw) return false;
  if ((x.left_descent_mask() & lw) != lw) return false;
  return bruhat_leq(x, w);
}

namespace {

struct IntervalDfs {
  int n;
  const std::vector<int>* rx;
  const std::vector<int>* rw;
  IntervalConstraints cons;
  const std::function<void(const Permutation&)>* yield;

  std::vector<int> word;     // prefix z(0..p-1)
  std::vector<char> used;    // by value
  std::vector<int> rz;       // r_z(p-1, q), q in [0,n-1]
  std::vector<int> forced;   // forced value per position, -1 if free

  void run() {
    word.clear();
    used.assign(static_cast<std::size_t>(n), 0);
    rz.assign(static_cast<std::size_t>(n), 0);
    descend(0);
  }

  void descend(int p) {
    if (p == n) {
      (*yield)(Permutation(word));
      return;
    }
    const int lo = forced[static_cast<std::size_t>(p)] >= 0
                       ? forced[static_cast<std::size_t>(p)]
                       : 0;
    const int hi = forced[static_cast<std::size_t>(p)] >= 0
                       ? forced[static_cast<std::size_t>(p)]
                       : n - 1;
    for (int v = lo; v <= hi; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      // Required right descent at p-1: word[p-1] > v.
      if (p > 0 && (cons.need_right >> (p - 1) & 1) && word[static_cast<std::size_t>(p) - 1] < v)
        continue;
      // Required left descent at value v: v+1 must already be placed.
      if (v + 1 < n && (cons.need_left >> v & 1) && !used[static_cast<std::size_t>(v) + 1])
        continue;
      if (!feasible(p, v)) continue;
      word.push_back(v);
      used[static_cast<std::size_t>(v)] = 1;
      for (int q = 1; q <= v; ++q) ++rz[static_cast<std::size_t>(q)];
      descend(p + 1);
      for (int q = 1; q <= v; ++q) --rz[static_cast<std::size_t>(q)];
      used[static_cast<std::size_t>(v)] = 0;
      word.pop_back();
    }
  }

  bool feasible(int p, int v) const {
    const std::size_t row = static_cast<std::size_t>(p) * static_cast<std::size_t>(n);
    for (int q = 1; q < n; ++q) {
      const int t = rz[static_cast<std::size_t>(q)] + (v >= q ? 1 : 0);
      if (t < (*rx)[row + static_cast<std::size_t>(q)]) return false;
      if (t > (*rw)[row + static_cast<std::size_t>(q)]) return false;
    }
    return true;
  }
};

}  // namespace

void for_each_in_interval(const Permutation& x, const Permutation& w,
                          const std::function<void(const Permutation&)>& yield,
                          const IntervalConstraints& c) {
  if (x.degree() != w.degree()) throw degree_mismatch(x.degree(), w.degree());
  if (!bruhat_leq(x, w)) return;
  const int n = x.degree();
  IntervalDfs dfs;
  dfs.n = n;
  const std::vector<int> rx = rank_table(x), rw = rank_table(w);
  dfs.rx = &rx;
  dfs.rw = &rw;
  dfs.cons = c;
  dfs.yield = &yield;
  dfs.forced.assign(static_cast<std::size_t>(n), -1);
  for (const auto& [i, v] : forced_positions(x, w))
    dfs.forced[static_cast<std::size_t>(i)] = v;
  dfs.run();
}

std::vector<Permutation> enumerate_interval(const Permutation& x, const Permutation& w) {
  std::vector<Permutation> out;
  for_each_in_interval(x, w, [&](const Permutation& z) { out.push_back(z); });
  return out;
}

std::vector<Permutation> coatoms(const Permutation& w) {
  const int n = w.degree();
  std::vector<Permutation> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (w(i) <= w(j)) continue;
      bool cover = true;
      for (int k = i + 1; k < j && cover; ++k)
        if (w(j) < w(k) && w(k) < w(i)) cover = false;
      if (!cover) continue;
      std::vector<int> word = w.images();
      std::swap(word[static_cast<std::size_t>(i)], word[static_cast<std::size_t>(j)]);
      out.push_back(Permutation(std::move(word)));
    }
  }
  return out;
}

std::vector<std::pair<Permutation, Permutation>> weak_left_covers(
    std::span<const Permutation> elements) {
  std::set<std::vector<int>> present;
  for (const auto& p : elements) present.insert(p.images());
  std::vector<std::pair<Permutation, Permutation>> out;
  for (const auto& x : elements) {
    const std::uint64_t dl = x.left_descent_mask();
    for (int s = 0; s + 1 < x.degree(); ++s) {
      if (dl >> s & 1) continue;  // s*x would be shorter
      Permutation w = x.left_mult(s);
      if (present.count(w.images())) out.emplace_back(x, w);
    }
  }
  return out;
}

namespace {
char level_digit(int d) {
  if (d < 10) return static_cast<char>('0' + d);
  if (d < 36) return static_cast<char>('a' + d - 10);
  return '#';
}
}  // namespace

std::string render_picture(const Permutation& x, const Permutation& w) {
  const DifferenceGrid g = difference_grid(x, w);
  const int n = x.degree();
  std::string out;
  for (int q = n - 1; q >= 0; --q) {
    for (int p = 0; p < n; ++p) {
      if (p) out += ' ';
      const bool xe = x(p) == q, we = w(p) == q;
      if (xe && we)
        out += "◉";
      else if (xe)
        out += "●";
      else if (we)
        out += "○";
      else {
        const int d = g.at(p, q);
        out += d == 0 ? '.' : level_digit(d);
      }
    }
    out += '\n';
  }
  return out;
}

std::string grid_dump(const Permutation& x, const Permutation& w) {
  const DifferenceGrid g = difference_grid(x, w);
  std::string out;
  for (int q = g.n - 1; q >= 0; --q) {
    for (int p = 0; p < g.n; ++p) {
      if (p) out += ' ';
      out += std::to_string(g.at(p, q));
    }
    out += '\n';
  }
  return out;
}

}  // namespace klq
