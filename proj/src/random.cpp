#include "ii/random.hpp"

namespace ii {

Rational random_rational(Rng& rng, int max_num, int max_den) {
  long long num = rng.range(-max_num, max_num);
  long long den = rng.range(1, max_den);
  return Rational(num, den);
}

Scalar random_scalar(Rng& rng, int max_num, int max_den) {
  Rational re = random_rational(rng, max_num, max_den);
  if (field_mode() == Field::real) return Scalar(re);
  return Scalar(re, random_rational(rng, max_num, max_den));
}

DyadicStep random_step(Rng& rng, int max_lvl, int max_num, int max_den) {
  int lvl = static_cast<int>(rng.range(0, max_lvl));
  std::vector<Scalar> cs(size_t{1} << lvl);
  for (auto& c : cs) c = random_scalar(rng, max_num, max_den);
  return DyadicStep(lvl, std::move(cs));
}

DyadicStep random_nonzero_step(Rng& rng, int max_lvl) {
  for (;;) {
    DyadicStep f = random_step(rng, max_lvl);
    for (const auto& c : f.coeffs)
      if (!c.is_zero()) return f;
  }
}

} // namespace ii
