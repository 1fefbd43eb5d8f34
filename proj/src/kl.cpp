#include "klq/kl.hpp"

#include <bit>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>

namespace klq {

std::optional<QPoly> KLCache::lookup(const std::string& key) const {
  std::shared_lock lock(mutex_);
  auto it = map_.find(key);
  if (it == map_.end()) {
    misses_.fetch_add(1, std::memory_order_relaxed);
    return std::nullopt;
  }
  hits_.fetch_add(1, std::memory_order_relaxed);
  return it->second;
}

void KLCache::insert(const std::string& key, const QPoly& value) {
  std::unique_lock lock(mutex_);
  auto [it, fresh] = map_.emplace(key, value);
  if (!fresh && it->second != value)
    throw std::logic_error("cache determinism violation for key " + key);
}

KLCache::Stats KLCache::stats() const {
  std::shared_lock lock(mutex_);
  return {hits_.load(), misses_.load(), map_.size()};
}

void KLCache::reset_counters() {
  hits_.store(0);
  misses_.store(0);
}

void KLCache::save(const std::string& path) const {
  std::shared_lock lock(mutex_);
  std::vector<const std::string*> keys;
  keys.reserve(map_.size());
  for (const auto& [k, v] : map_) keys.push_back(&k);
  std::sort(keys.begin(), keys.end(),
            [](const std::string* a, const std::string* b) { return *a < *b; });
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw cache_io_error("cannot open cache file for writing: " + path);
  out << "klq-cache 1\n";
  for (const std::string* k : keys) out << *k << '\t' << map_.at(*k).str() << '\n';
  if (!out) throw cache_io_error("write failure on cache file: " + path);
}

void KLCache::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw cache_io_error("cannot open cache file: " + path);
  std::string line;
  if (!std::getline(in, line) || line != "klq-cache 1")
    throw cache_io_error("bad cache header in " + path);
  std::unordered_map<std::string, QPoly> fresh;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw cache_io_error("missing field separator at " + path + ":" +
                           std::to_string(lineno));
    QPoly p;
    try {
      p = QPoly::parse(std::string_view(line).substr(tab + 1));
    } catch (const std::exception& e) {
      throw cache_io_error("bad polynomial at " + path + ":" + std::to_string(lineno) +
                           ": " + e.what());
    }
    std::string key = line.substr(0, tab);
    auto it = fresh.find(key);
    if (it != fresh.end()) {
      if (it->second != p)
        throw cache_io_error("conflicting records for key " + key + " in " + path);
    } else {
      fresh.emplace(std::move(key), std::move(p));
    }
  }
  if (in.bad()) throw cache_io_error("read failure on cache file: " + path);
  std::unique_lock lock(mutex_);
  map_ = std::move(fresh);  // all-or-nothing
}

bool KLCache::load_if_present(const std::string& path) {
  if (!std::filesystem::exists(path)) return false;
  load(path);
  return true;
}

std::optional<GeneratorStrategy> strategy_from_name(const std::string& name) {
  if (name == "smallest-right") return GeneratorStrategy::smallest_right;
  if (name == "largest-right") return GeneratorStrategy::largest_right;
  if (name == "smallest-left") return GeneratorStrategy::smallest_left;
  if (name == "largest-left") return GeneratorStrategy::largest_left;
  return std::nullopt;
}

std::string strategy_name(GeneratorStrategy s) {
  switch (s) {
    case GeneratorStrategy::smallest_right: return "smallest-right";
    case GeneratorStrategy::largest_right: return "largest-right";
    case GeneratorStrategy::smallest_left: return "smallest-left";
    case GeneratorStrategy::largest_left: return "largest-left";
  }
  return "?";
}

Canonical canonicalize(const Permutation& x0, const Permutation& w0) {
  if (x0.degree() != w0.degree()) throw degree_mismatch(x0.degree(), w0.degree());
  Permutation x = x0, w = w0;
  if (x == w) return {Canonical::Kind::one, {}, {}, {}};
  if (!bruhat_leq(x, w)) return {Canonical::Kind::zero, {}, {}, {}};
  for (;;) {
    // Push x up by every descent of w it lacks; P_{x,w} is unchanged and the
    // lifting property keeps x <= w.
    for (;;) {
      const std::uint64_t r = w.right_descent_mask() & ~x.right_descent_mask();
      if (r) {
        x = x.right_mult(std::countr_zero(r));
        continue;
      }
      const std::uint64_t l = w.left_descent_mask() & ~x.left_descent_mask();
      if (l) {
        x = x.left_mult(std::countr_zero(l));
        continue;
      }
      break;
    }
    if (x == w) return {Canonical::Kind::one, {}, {}, {}};
    ReducedPair red = reduce_pair(x, w);
    if (static_cast<int>(red.kept.size()) == x.degree()) break;
    x = std::move(red.x);
    w = std::move(red.w);
    if (x == w) return {Canonical::Kind::one, {}, {}, {}};
  }
  const std::string direct = x.str() + ":" + w.str();
  const Permutation xi = x.inverse(), wi = w.inverse();
  const std::string inverted = xi.str() + ":" + wi.str();
  if (inverted < direct) return {Canonical::Kind::pair, xi, wi, inverted};
  return {Canonical::Kind::pair, x, w, direct};
}

ThetaSpec ThetaSpec::make(Side side, int gen, Permutation x, Permutation v) {
  if (x.degree() != v.degree()) throw degree_mismatch(x.degree(), v.degree());
  if (gen < 0 || gen + 1 >= v.degree())
    throw std::out_of_range("generator index " + std::to_string(gen));
  const std::uint64_t bit = std::uint64_t{1} << gen;
  if (side == Side::right && (v.right_descent_mask() & bit))
    throw std::invalid_argument("gen is a right descent of v; v must be ws for w = v*s > v");
  if (side == Side::left && (v.left_descent_mask() & bit))
    throw std::invalid_argument("gen is a left descent of v; v must be sw for w = s*v > v");
  return ThetaSpec{side, gen, std::move(x), std::move(v)};
}

ThetaSets theta_sets(const ThetaSpec& spec) {
  ThetaSets out;
  const Permutation& v = spec.v;
  const std::uint64_t bit = std::uint64_t{1} << spec.gen;

  IntervalConstraints cons;
  cons.need_right = v.right_descent_mask();
  cons.need_left = v.left_descent_mask();
  if (spec.side == Side::right)
    cons.need_right |= bit;
  else
    cons.need_left |= bit;

  const int coatom_length = v.length() - 1;
  for_each_in_interval(spec.x, v,
                       [&](const Permutation& z) {
                         if (z.length() < coatom_length) out.omega.push_back(z);
                       },
                       cons);

  for (Permutation& z : coatoms(v)) {
    const std::uint64_t mask = spec.side == Side::right ? z.right_descent_mask()
                                                        : z.left_descent_mask();
    if ((mask & bit) && bruhat_leq(spec.x, z)) out.delta.push_back(std::move(z));
  }
  return out;
}

QPoly theta_sum(const ThetaSpec& spec, KLCache& cache, GeneratorStrategy strategy) {
  const ThetaSets sets = theta_sets(spec);
  const int lv = spec.v.length();
  QPoly total;
  for (const Permutation& z : sets.delta) {
    // mu(z,v) = 1 for a coatom; the exponent (l(w)-l(z))/2 is 1.
    total = total + kl_poly(spec.x, z, cache, strategy).shift(1);
  }
  for (const Permutation& z : sets.omega) {
    const int diff = lv - z.length();
    if (diff % 2 == 0) continue;  // mu vanishes on even length difference
    const std::int64_t m = mu(z, spec.v, cache, strategy);
    if (m == 0) continue;
    const QPoly term = QPoly(m) * kl_poly(spec.x, z, cache, strategy);
    total = total + term.shift((lv + 1 - z.length()) / 2);
  }
  return total;
}

namespace {

struct Step {
  Side side;
  int gen;
};

Step choose_generator(const Permutation& w, GeneratorStrategy strategy) {
  switch (strategy) {
    case GeneratorStrategy::smallest_right:
      return {Side::right, std::countr_zero(w.right_descent_mask())};
    case GeneratorStrategy::largest_right:
      return {Side::right, 63 - std::countl_zero(w.right_descent_mask())};
    case GeneratorStrategy::smallest_left:
      return {Side::left, std::countr_zero(w.left_descent_mask())};
    case GeneratorStrategy::largest_left:
      return {Side::left, 63 - std::countl_zero(w.left_descent_mask())};
  }
  throw std::logic_error("unknown strategy");
}

QPoly recursion_step(const Permutation& x, const Permutation& w, Side side, int gen,
                     KLCache& cache, GeneratorStrategy strategy) {
  const std::uint64_t bit = std::uint64_t{1} << gen;
  if (side == Side::right) {
    const Permutation v = w.right_mult(gen);
    const Permutation xs = x.right_mult(gen);
    const int c = (x.right_descent_mask() & bit) ? 1 : 0;
    const QPoly a = kl_poly(x, v, cache, strategy).shift(c);
    const QPoly b = kl_poly(xs, v, cache, strategy).shift(1 - c);
    return a + b - theta_sum(ThetaSpec::make(side, gen, x, v), cache, strategy);
  }
  const Permutation v = w.left_mult(gen);
  const Permutation sx = x.left_mult(gen);
  const int c = (x.left_descent_mask() & bit) ? 1 : 0;
  const QPoly a = kl_poly(x, v, cache, strategy).shift(c);
  const QPoly b = kl_poly(sx, v, cache, strategy).shift(1 - c);
  return a + b - theta_sum(ThetaSpec::make(side, gen, x, v), cache, strategy);
}

}  // namespace

QPoly kl_poly(const Permutation& x, const Permutation& w, KLCache& cache,
              GeneratorStrategy strategy) {
  const Canonical c = canonicalize(x, w);
  if (c.kind == Canonical::Kind::zero) return QPoly();
  if (c.kind == Canonical::Kind::one) return QPoly::one();
  if (auto hit = cache.lookup(c.key)) return *hit;

  const Step step = choose_generator(c.w, strategy);
  const QPoly p = recursion_step(c.x, c.w, step.side, step.gen, cache, strategy);

  const int diff = c.w.length() - c.x.length();
  if (p.coeff(0) != 1)
    throw std::logic_error("constant term of P_{" + c.key + "} is not 1");
  if (p.degree() > (diff - 1) / 2)
    throw std::logic_error("degree bound violated for P_{" + c.key + "}");
  cache.insert(c.key, p);
  return p;
}

QPoly kl_poly_via(const Permutation& x, const Permutation& w, Side side, int gen,
                  KLCache& cache, GeneratorStrategy strategy) {
  const std::uint64_t mask =
      side == Side::right ? w.right_descent_mask() : w.left_descent_mask();
  if (!(mask >> gen & 1))
    throw std::invalid_argument("generator is not a descent of w on that side");
  if (x == w) return QPoly::one();
  if (!bruhat_leq(x, w)) return QPoly();
  return recursion_step(x, w, side, gen, cache, strategy);
}

std::int64_t mu(const Permutation& x, const Permutation& w, KLCache& cache,
                GeneratorStrategy strategy) {
  if (x.degree() != w.degree()) throw degree_mismatch(x.degree(), w.degree());
  if (x == w) return 0;
  const int diff = w.length() - x.length();
  if (diff <= 0 || diff % 2 == 0) return 0;
  if (!bruhat_leq(x, w)) return 0;
  return kl_poly(x, w, cache, strategy).coeff((diff - 1) / 2);
}

std::int64_t mu_sym(const Permutation& x, const Permutation& w, KLCache& cache,
                    GeneratorStrategy strategy) {
  if (bruhat_leq(x, w)) return mu(x, w, cache, strategy);
  if (bruhat_leq(w, x)) return mu(w, x, cache, strategy);
  throw std::invalid_argument("mu_sym: incomparable pair " + x.str() + ", " + w.str());
}

}  // namespace klq
