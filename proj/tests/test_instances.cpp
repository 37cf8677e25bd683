#include <doctest.h>

#include "ii/instances.hpp"
#include "ii/random.hpp"
#include "oracles.hpp"

using namespace ii;

namespace {

DyadicStep step(int lvl, std::vector<long long> cs) {
  std::vector<Scalar> s(cs.begin(), cs.end());
  return DyadicStep(lvl, std::move(s));
}

PiecewiseLinear pl(int lvl, std::vector<Rational> vals) {
  std::vector<Scalar> s(vals.begin(), vals.end());
  return PiecewiseLinear(lvl, std::move(s));
}

} // namespace

TEST_CASE("indefinite integral: frozen node values") {
  CHECK(equal(indefinite_integral(unit_step()), identity_pl(0)));
  PiecewiseLinear tent = indefinite_integral(step(1, {2, -2}));
  CHECK(tent.values == pl(1, {Rational(0), Rational(1), Rational(0)}).values);
  CHECK(equal(indefinite_integral(zero_step()), zero_pl()));
  Rng rng(21);
  for (int i = 0; i < 100; ++i) {
    DyadicStep f = random_step(rng, 6);
    CHECK(indefinite_integral(f).values == oracle::cumulative_naive(f));
  }
}

TEST_CASE("derivative recovers the step") {
  CHECK(equal(derivative(identity_pl(2)), unit_step()));
  CHECK(derivative(pl(1, {Rational(0), Rational(1), Rational(0)})).coeffs ==
        step(1, {2, -2}).coeffs);
  CHECK(equal(derivative(zero_pl()), zero_step()));
  Rng rng(22);
  for (int i = 0; i < 200; ++i) {
    DyadicStep f = random_step(rng, 6);
    CHECK(equal(derivative(indefinite_integral(f)), f));
  }
}

TEST_CASE("cumulative juxtaposition: fixed point and frozen example") {
  for (int k = 0; k <= 3; ++k) CHECK(equal(juxtapose(identity_pl(k), identity_pl(k)), identity_pl(k + 1)));
  CHECK(equal(juxtapose(zero_pl(), zero_pl()), zero_pl()));

  PiecewiseLinear tent = pl(1, {Rational(0), Rational(1), Rational(0)});
  PiecewiseLinear glued = juxtapose(tent, zero_pl());
  CHECK(glued.values == std::vector<Scalar>{Scalar(0), Scalar(1, 2), Scalar(0), Scalar(0),
                                            Scalar(0)});
  Rng rng(23);
  for (int i = 0; i < 100; ++i) {
    PiecewiseLinear F = indefinite_integral(random_step(rng, 5));
    PiecewiseLinear G = indefinite_integral(random_step(rng, 5));
    CHECK(juxtapose(F, G).values == oracle::cumulative_juxtapose_naive(F, G));
  }
}

TEST_CASE("integration is the universal route and matches the elementary sum") {
  CHECK(integrate(step(2, {1, 0, 2, 5})) == Scalar(2));
  CHECK(integrate(unit_step()) == Scalar(1));
  Rng rng(24);
  for (int i = 0; i < 100; ++i) {
    DyadicStep f = random_step(rng, 6);
    DyadicStep g = random_step(rng, 6);
    CHECK(integrate(f) == integrate_exact(f));
    CHECK(integrate(juxtapose(f, g)) == div_pow2(integrate(f) + integrate(g), 1));
  }
}

TEST_CASE("pairing: frozen values and exponent gate") {
  CHECK(pairing(step(1, {1, 1}), step(1, {1, -1}), Exponent::of(2), Exponent::of(2)) == Scalar(0));
  Rng rng(25);
  DyadicStep g = random_step(rng, 5);
  CHECK(pairing(unit_step(), g, Exponent::of(2), Exponent::of(2)) == integrate(g));
  CHECK(pairing(step(1, {3, 4}), step(1, {3, 4}), Exponent::of(2), Exponent::of(2)) ==
        Scalar(25, 2));
  CHECK(pairing(g, g, Exponent::of(3), Exponent::of(3, 2)) == integrate(pointwise_mul(g, g)));
  CHECK_THROWS_WITH_AS(pairing(g, g, Exponent::of(2), Exponent::of(3)),
                       "non-conjugate exponents", error);
  CHECK_THROWS_AS(pairing(g, g, Exponent::of(1), Exponent::infinity()), error);
}

TEST_CASE("inclusion certificates") {
  InclusionCert c = inclusion(step(1, {3, 4}), Exponent::of(2), Exponent::of(1));
  CHECK(c.certified);
  CHECK(c.norm_p.exact == Rational(7, 2));
  CHECK(c.norm_r.value == doctest::Approx(3.5355339059327378));
  CHECK(inclusion(unit_step(), Exponent::of(3), Exponent::of(2)).certified);
  InclusionCert constant = inclusion(step(0, {-7}), Exponent::of(4), Exponent::of(2));
  CHECK(constant.certified);
  CHECK(constant.norm_p.value == doctest::Approx(7.0));
  CHECK(constant.norm_r.value == doctest::Approx(7.0));
  CHECK_THROWS_WITH_AS(inclusion(unit_step(), Exponent::of(1), Exponent::of(2)),
                       "wrong direction: inclusion goes r into p", error);
  CHECK_THROWS_AS(inclusion(unit_step(), Exponent::infinity(), Exponent::of(1)), error);
}

TEST_CASE("operator assembly blocks") {
  Mat j2 = Mat::identity(2);
  CHECK(juxtapose_hom(j2, j2) == Mat::identity(4));
  CHECK(juxtapose_hom(Mat::zero(2, 2), Mat::zero(2, 2)) == Mat::zero(4, 4));
  Mat phi{{Scalar(1), Scalar(2)}, {Scalar(0), Scalar(1)}};
  Mat assembled = juxtapose_hom(phi, Mat::zero(2, 2));
  Vec g = {Scalar(1), Scalar(1), Scalar(5), Scalar(7)};
  Vec out = mul(assembled, g);
  CHECK(out == Vec{Scalar(3), Scalar(1), Scalar(0), Scalar(0)});
  CHECK_THROWS_WITH_AS(juxtapose_hom(Mat::identity(2), Mat::identity(3)),
                       "operator shape mismatch", error);
}

TEST_CASE("cylinder projections") {
  CylinderFunction f{step(2, {1, 2, 3, 4})};
  CHECK(cantor_project(f, 1).step.coeffs == step(2, {1, 1, 3, 3}).coeffs);
  CHECK(cantor_project(f, 2).step.coeffs == f.step.coeffs);
  CHECK(cantor_project(f, 5).step.coeffs == f.step.coeffs);
  CylinderFunction unit{unit_step()};
  CHECK(equal(cantor_project(unit, 0).step, unit_step()));
  CHECK_THROWS_WITH_AS(cantor_project(f, -1), "negative bit count", error);
}

TEST_CASE("cylinder functions include into the step world with norm domination") {
  CHECK(equal(cantor_to_interval(CylinderFunction{unit_step()}), unit_step()));
  DyadicStep g = step(1, {1, 2});
  CHECK(p_norm(cantor_to_interval(CylinderFunction{g}), Exponent::of(1)).exact == Rational(3, 2));
  CHECK(sup_norm(CylinderFunction{g}).exact == Rational(2));
  DyadicStep h = step(2, {0, 1, 0, 0});
  CHECK(p_norm(h, Exponent::of(1)).exact == Rational(1, 4));
  CHECK(sup_norm(CylinderFunction{h}).exact == Rational(1));
}

TEST_CASE("cumulative target agrees with direct sums at a small level") {
  const int top = 4;
  MorphismTable table = compile_universal(cumulative_target(top), top);
  Rng rng(26);
  for (int i = 0; i < 100; ++i) {
    DyadicStep f = random_step(rng, top);
    Vec got = indefinite_via_universal(table, f);
    PiecewiseLinear want = refine(indefinite_integral(f), top);
    REQUIRE(got.size() + 1 == want.values.size());
    for (size_t k = 0; k < got.size(); ++k) CHECK(got[k] == want.values[k + 1]);
  }
}
