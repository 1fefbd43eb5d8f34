#pragma once

#include <map>
#include <vector>

#include "klq/perm.hpp"
#include "klq/qpoly.hpp"

namespace klq::reference {

/// Reduction-free evaluation of the defining recursion, kept deliberately
/// independent of the production engine: no pair canonicalization, the
/// correction sum runs over the whole interval [x, ws] (every z with zs < z,
/// no flush/coatomic restriction), and the generator is always the largest
/// right descent.  Memoized on raw pairs; intended for small degrees.
class Table {
 public:
  QPoly kl(const Permutation& x, const Permutation& w);
  std::int64_t mu(const Permutation& x, const Permutation& w);

 private:
  std::map<std::pair<std::vector<int>, std::vector<int>>, QPoly> memo_;
};

}  // namespace klq::reference
