#include "klq/reference.hpp"

#include "klq/bruhat.hpp"

namespace klq::reference {

QPoly Table::kl(const Permutation& x, const Permutation& w) {
  if (x.degree() != w.degree()) throw degree_mismatch(x.degree(), w.degree());
  if (x == w) return QPoly::one();
  if (!bruhat_leq(x, w)) return QPoly();
  const auto key = std::make_pair(x.images(), w.images());
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  const std::vector<int> descents = w.right_descents();
  const int s = descents.back();
  const Permutation v = w.right_mult(s);
  const Permutation xs = x.right_mult(s);
  const int c = x(s) > x(s + 1) ? 1 : 0;

  QPoly p = kl(x, v).shift(c) + kl(xs, v).shift(1 - c);
  const int lw = w.length();
  for (const Permutation& z : enumerate_interval(x, v)) {
    if (z(s) < z(s + 1)) continue;  // need zs < z
    const std::int64_t m = mu(z, v);
    if (m == 0) continue;
    p = p - (QPoly(m) * kl(x, z)).shift((lw - z.length()) / 2);
  }
  memo_.emplace(key, p);
  return p;
}

std::int64_t Table::mu(const Permutation& x, const Permutation& w) {
  const int diff = w.length() - x.length();
  if (diff <= 0 || diff % 2 == 0) return 0;
  return kl(x, w).coeff((diff - 1) / 2);
}

}  // namespace klq::reference
