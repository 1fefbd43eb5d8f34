#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "klq/bruhat.hpp"
#include "klq/perm.hpp"
#include "klq/qpoly.hpp"

namespace klq {

/*
  Kazhdan-Lusztig engine.

  P_{x,w} is computed by the defining recursion: for s a right descent of w,

    P_{x,w} = q^{c} P_{x,ws} + q^{1-c} P_{xs,ws}
              - sum over z of mu(z,ws) q^{(l(w)-l(z))/2} P_{x,z},

  c = 1 if xs < x else 0, with the mirror form for left descents.  The
  correction sum only needs z that are either coatomic (l(z) = l(ws)-1 with
  zs < z) or flush in [x,ws) with zs < z; everything else has mu(z,ws) = 0.

  Before recursing, a pair is canonicalized: x is pushed up by any descent of
  w it is missing (P is unchanged), the pair is reduced by flattening away
  forced positions, and the lexicographically smaller of the pair and its
  inverse pair is kept.  The canonical text doubles as the cache key.
*/

class cache_io_error : public std::runtime_error {
 public:
  explicit cache_io_error(const std::string& what) : std::runtime_error(what) {}
};

/// Append-only memo from canonical pair keys to polynomials.  Concurrent
/// lookups and idempotent inserts are safe; a key can only ever be bound to
/// one value.
class KLCache {
 public:
  KLCache() = default;
  KLCache(const KLCache&) = delete;
  KLCache& operator=(const KLCache&) = delete;

  std::optional<QPoly> lookup(const std::string& key) const;
  void insert(const std::string& key, const QPoly& value);

  struct Stats {
    std::uint64_t hits = 0;
    std::uint64_t misses = 0;
    std::uint64_t entries = 0;
  };
  Stats stats() const;
  void reset_counters();

  /// File format: header line "klq-cache 1", then one "key TAB polynomial"
  /// record per line.  Files merge by concatenation plus dedup.
  void save(const std::string& path) const;
  void load(const std::string& path);  // replaces contents; throws cache_io_error

  /// Loads when the file exists; a missing file leaves the cache empty, a
  /// corrupt one still throws.  Returns whether anything was loaded.
  bool load_if_present(const std::string& path);

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, QPoly> map_;
  mutable std::atomic<std::uint64_t> hits_{0};
  mutable std::atomic<std::uint64_t> misses_{0};
};

enum class GeneratorStrategy {
  smallest_right,  // default
  largest_right,
  smallest_left,
  largest_left,
};

std::optional<GeneratorStrategy> strategy_from_name(const std::string& name);
std::string strategy_name(GeneratorStrategy s);

/// Result of normalizing a pair before recursion/caching.
struct Canonical {
  enum class Kind { zero, one, pair };
  Kind kind;
  Permutation x, w;  // meaningful when kind == pair
  std::string key;
};

Canonical canonicalize(const Permutation& x, const Permutation& w);

enum class Side { right, left };

/// Data of one correction sum: v is ws (right) or sw (left) for the w being
/// expanded, so gen must not be a descent of v on the given side.
struct ThetaSpec {
  Side side;
  int gen;
  Permutation x, v;

  static ThetaSpec make(Side side, int gen, Permutation x, Permutation v);
};

struct ThetaSets {
  std::vector<Permutation> omega;  // flush, zs < z, l(z) < l(v)-1
  std::vector<Permutation> delta;  // coatomic: l(z) = l(v)-1, zs < z, z >= x
};

ThetaSets theta_sets(const ThetaSpec& spec);

QPoly theta_sum(const ThetaSpec& spec, KLCache& cache,
                GeneratorStrategy strategy = GeneratorStrategy::smallest_right);

QPoly kl_poly(const Permutation& x, const Permutation& w, KLCache& cache,
              GeneratorStrategy strategy = GeneratorStrategy::smallest_right);

/// One application of the defining recursion at (x,w) with the given
/// generator, subcalls going through the normal engine.  gen must be a
/// descent of w on the given side.
QPoly kl_poly_via(const Permutation& x, const Permutation& w, Side side, int gen,
                  KLCache& cache,
                  GeneratorStrategy strategy = GeneratorStrategy::smallest_right);

/// Coefficient of q^{(l(w)-l(x)-1)/2}; zero for equal, incomparable, or
/// even-length-difference pairs.
std::int64_t mu(const Permutation& x, const Permutation& w, KLCache& cache,
                GeneratorStrategy strategy = GeneratorStrategy::smallest_right);

/// mu of the Bruhat-smaller element against the larger; throws on
/// incomparable input.
std::int64_t mu_sym(const Permutation& x, const Permutation& w, KLCache& cache,
                    GeneratorStrategy strategy = GeneratorStrategy::smallest_right);

}  // namespace klq
