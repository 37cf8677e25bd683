#include <doctest.h>

#include "ii/dyadic.hpp"
#include "ii/random.hpp"
#include "oracles.hpp"

using namespace ii;

namespace {

DyadicStep step(int lvl, std::vector<long long> cs) {
  std::vector<Scalar> s(cs.begin(), cs.end());
  return DyadicStep(lvl, std::move(s));
}

} // namespace

TEST_CASE("refine duplicates cell values") {
  CHECK(refine(step(0, {5}), 2).coeffs == step(2, {5, 5, 5, 5}).coeffs);
  CHECK(refine(step(1, {1, 2}), 1).coeffs == step(1, {1, 2}).coeffs);
  CHECK(refine(step(1, {1, 2}), 2).coeffs == oracle::refine_naive(step(1, {1, 2}), 2).coeffs);
  CHECK(refine(step(1, {1, 2}), 2).coeffs == step(2, {1, 1, 2, 2}).coeffs);
  CHECK_THROWS_WITH_AS(refine(step(1, {1, 2}), 0), "cannot coarsen by refine", error);
}

TEST_CASE("canonicalize reaches the minimal level and is idempotent") {
  CHECK(canonicalize(step(1, {3, 3})).level == 0);
  CHECK(canonicalize(step(1, {3, 3})).coeffs == step(0, {3}).coeffs);
  CHECK(canonicalize(step(1, {1, 2})).coeffs == step(1, {1, 2}).coeffs);
  // only a full adjacent-pair collapse permits reduction; (2,3) blocks it
  CHECK(canonicalize(step(2, {1, 1, 2, 3})).level == 2);
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    DyadicStep f = random_step(rng, 6);
    DyadicStep once = canonicalize(f);
    CHECK(canonicalize(once).coeffs == once.coeffs);
    CHECK(is_canonical(once));
    CHECK(equal(once, f));
    CHECK(canonicalize(refine(f, f.level + 2)).coeffs == once.coeffs);
  }
}

TEST_CASE("juxtapose concatenates at the next level") {
  CHECK(juxtapose(step(0, {2}), step(0, {4})).coeffs == step(1, {2, 4}).coeffs);
  CHECK(juxtapose(step(0, {2}), step(0, {4})).level == 1);
  CHECK(equal(juxtapose(unit_step(), unit_step()), unit_step()));
  DyadicStep j = juxtapose(step(1, {1, 2}), step(0, {5}));
  CHECK(j.level == 2);
  CHECK(j.coeffs == step(2, {1, 2, 5, 5}).coeffs);
  CHECK(j.coeffs == oracle::juxtapose_naive(step(1, {1, 2}), step(0, {5})).coeffs);
}

TEST_CASE("split undoes juxtapose") {
  auto halves = split(step(2, {1, 2, 5, 5}));
  CHECK(halves.first.coeffs == step(1, {1, 2}).coeffs);
  CHECK(halves.second.coeffs == step(1, {5, 5}).coeffs);
  auto unit_halves = split(unit_step());
  CHECK(equal(unit_halves.first, unit_step()));
  CHECK(equal(unit_halves.second, unit_step()));
  auto pm = split(step(1, {7, -3}));
  CHECK(pm.first.coeffs == step(0, {7}).coeffs);
  CHECK(pm.second.coeffs == step(0, {-3}).coeffs);

  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    DyadicStep f = random_step(rng, 6);
    DyadicStep g = random_step(rng, 6);
    auto s = split(juxtapose(f, g));
    CHECK(equal(s.first, f));
    CHECK(equal(s.second, g));
    DyadicStep h = random_step(rng, 6);
    auto hs = split(h);
    CHECK(equal(juxtapose(hs.first, hs.second), h));
  }
}

TEST_CASE("pointwise algebra") {
  CHECK(add(step(1, {1, 2}), step(0, {10})).coeffs == step(1, {11, 12}).coeffs);
  CHECK(equal(scale(Scalar(0), step(2, {1, 2, 3, 4})), zero_step()));
  CHECK(pointwise_mul(step(1, {1, 2}), step(1, {3, 4})).coeffs == step(1, {3, 8}).coeffs);
}

TEST_CASE("p-norms: frozen values") {
  DyadicStep f = step(1, {3, 4});
  PNormValue n2 = p_norm(f, Exponent::of(2));
  CHECK(n2.exact_pow == Rational(25, 2));
  CHECK(n2.value == doctest::Approx(3.5355339059327378).epsilon(1e-15));
  for (const auto& p : {Exponent::of(1), Exponent::of(2), Exponent::infinity()})
    CHECK(p_norm(unit_step(), p).value == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(p_norm(f, Exponent::infinity()).exact == Rational(4));
  CHECK(p_norm(f, Exponent::of(1)).exact == Rational(7, 2));
  CHECK_THROWS_WITH_AS(p_norm(f, Exponent::of(1, 2)), "not a norm exponent", error);
}

TEST_CASE("direct sum norm combination") {
  PNormValue a = p_norm(step(0, {3}), Exponent::of(1));
  PNormValue b = p_norm(step(0, {4}), Exponent::of(1));
  CHECK(direct_sum_norm(a, b, Exponent::of(1)).exact == Rational(7, 2));
  CHECK(direct_sum_norm(a, a, Exponent::of(1)).exact == Rational(3));
  PNormValue ai = p_norm(step(0, {3}), Exponent::infinity());
  PNormValue bi = p_norm(step(0, {4}), Exponent::infinity());
  CHECK(direct_sum_norm(ai, bi, Exponent::infinity()).exact == Rational(4));
  CHECK_THROWS_AS(direct_sum_norm(a, bi, Exponent::of(1)), error);
}

TEST_CASE("elementary integral") {
  CHECK(integrate_exact(step(2, {1, 0, 2, 5})) == Scalar(2));
  CHECK(integrate_exact(unit_step()) == Scalar(1));
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    DyadicStep f = random_step(rng, 6);
    CHECK(integrate_exact(scale(Scalar(-1), f)) == -integrate_exact(f));
    CHECK(integrate_exact(f) == oracle::integrate_naive(f));
    CHECK(integrate_exact(refine(f, f.level + 1)) == integrate_exact(f));
    // |integral| <= 1-norm, exactly
    auto mag = integrate_exact(f).abs_rational();
    REQUIRE(mag.has_value());
    CHECK(*mag <= *p_norm(f, Exponent::of(1)).exact);
  }
}

TEST_CASE("juxtaposition is an isometry for every exponent") {
  Rng rng(6);
  for (int i = 0; i < 200; ++i) {
    DyadicStep f = random_step(rng, 5);
    DyadicStep g = random_step(rng, 5);
    DyadicStep h = juxtapose(f, g);
    for (const auto& p : {Exponent::of(1), Exponent::infinity()}) {
      CHECK(*p_norm(h, p).exact == *direct_sum_norm(p_norm(f, p), p_norm(g, p), p).exact);
    }
    PNormValue h2 = p_norm(h, Exponent::of(2));
    PNormValue c2 = direct_sum_norm(p_norm(f, Exponent::of(2)), p_norm(g, Exponent::of(2)),
                                    Exponent::of(2));
    CHECK(*h2.exact_pow == *c2.exact_pow);
    PNormValue h32 = p_norm(h, Exponent::of(3, 2));
    PNormValue c32 = direct_sum_norm(p_norm(f, Exponent::of(3, 2)), p_norm(g, Exponent::of(3, 2)),
                                     Exponent::of(3, 2));
    CHECK(close_rel(h32.value, c32.value, 1e-12));
  }
}

TEST_CASE("level cap is enforced and configurable") {
  int saved = max_level();
  set_max_level(4);
  CHECK_THROWS_AS(refine(unit_step(), 5), error);
  CHECK_THROWS_AS(juxtapose(refine(unit_step(), 4), unit_step()), error);
  set_max_level(saved);
  CHECK_NOTHROW(refine(unit_step(), 5));
}

TEST_CASE("complex coefficients keep exact linear structure") {
  Scalar i(Rational(0), Rational(1));
  DyadicStep f(1, {Scalar(1) + i, Scalar(2)});
  CHECK(integrate_exact(f) == div_pow2(Scalar(3) + i, 1));
  CHECK(p_norm(f, Exponent::of(2)).exact_pow == Rational(3));  // (|1+i|^2 + |2|^2)/2
  CHECK(p_norm(f, Exponent::infinity()).exact == Rational(2));
}
