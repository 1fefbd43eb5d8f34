#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "klq/perm.hpp"

namespace klq {

/*
  Bruhat-Chevalley order machinery.

  The order is decided through the rank function
      r_w(p,q) = #{ i <= p : w(i) >= q }
  and the difference function d_{x,w}(p,q) = r_w(p,q) - r_x(p,q):
  x <= w exactly when d_{x,w} is nonnegative everywhere.  d vanishes off the
  finite window p in [0,n-2], q in [1,n-1], so only the n-by-n grid is stored.

  Positions i with x(i) = w(i) and d_{x,w}(i,x(i)) = 0 are "forced": every z
  in the interval [x,w] has z(i) = x(i).  Dropping the forced positions and
  flattening what remains gives the reduced pair (x~,w~), which carries the
  same Kazhdan-Lusztig data as (x,w).
*/

/// r_w(p,q) for arbitrary integers p,q.
int rank_fn(const Permutation& w, int p, int q);

/// The n-by-n table of d_{x,w}(p,q), p,q in [0,n-1].
struct DifferenceGrid {
  int n = 0;
  std::vector<int> values;  // row-major [p][q]

  int at(int p, int q) const {
    if (p < 0 || q <= 0 || p >= n - 1 || q >= n) return 0;
    return values[static_cast<std::size_t>(p) * static_cast<std::size_t>(n) +
                  static_cast<std::size_t>(q)];
  }
};

DifferenceGrid difference_grid(const Permutation& x, const Permutation& w);

/// x <= w in Bruhat-Chevalley order.
bool bruhat_leq(const Permutation& x, const Permutation& w);

/// Positions (i, x(i)) fixed across the whole interval [x,w].
/// Requires x <= w.
std::vector<std::pair<int, int>> forced_positions(const Permutation& x,
                                                  const Permutation& w);

struct ReducedPair {
  Permutation x;              // x~
  Permutation w;              // w~
  std::vector<int> kept;      // the positions kept (increasing)
};

/// Flattens x and w on the disagreement set (the complement of the forced
/// positions).  Defined for any equal-degree pair.
ReducedPair reduce_pair(const Permutation& x, const Permutation& w);

/// x <= w with both descent-set containments D_R(x) >= D_R(w),
/// D_L(x) >= D_L(w).
bool is_flush(const Permutation& x, const Permutation& w);

/// Optional descent-set requirements imposed on interval elements during
/// enumeration.  Bits index generators.
struct IntervalConstraints {
  std::uint64_t need_right = 0;
  std::uint64_t need_left = 0;
};

/// Calls yield(z) for every z with x <= z <= w satisfying the constraints.
/// Position-by-position DFS pruned by forced positions and by partial rank
/// feasibility against both endpoints.
void for_each_in_interval(const Permutation& x, const Permutation& w,
                          const std::function<void(const Permutation&)>& yield,
                          const IntervalConstraints& c = {});

std::vector<Permutation> enumerate_interval(const Permutation& x,
                                            const Permutation& w);

/// All z covered by w in Bruhat order (z = w * t, l(z) = l(w) - 1).
std::vector<Permutation> coatoms(const Permutation& w);

/// Pairs (x, w) within the given set with w = s*x for some generator s and
/// l(w) = l(x) + 1.
std::vector<std::pair<Permutation, Permutation>> weak_left_covers(
    std::span<const Permutation> elements);

/// Text Bruhat picture.  Rows are values q = n-1 (top) down to 0; columns are
/// positions p = 0..n-1.  Glyphs: '●' x-entry, '○' w-entry, '◉' capitol,
/// otherwise the digit of d_{x,w} with 0 drawn as '.'.
std::string render_picture(const Permutation& x, const Permutation& w);

/// Raw integer grid, one row per q from n-1 down to 0.
std::string grid_dump(const Permutation& x, const Permutation& w);

}  // namespace klq
