#include <doctest.h>

#include "ii/random.hpp"
#include "ii/sequences.hpp"

using namespace ii;

namespace {

FiniteSeq seq(std::vector<long long> cs) {
  std::vector<Scalar> s(cs.begin(), cs.end());
  return FiniteSeq(std::move(s));
}

SeqTarget scalar_target(Rational head, Rational tail, Exponent p) {
  SeqTarget t;
  t.dim = 1;
  t.p = p;
  t.delta = Mat{{Scalar(head), Scalar(tail)}};
  t.norm = NormSpec::sup_norm();
  return t;
}

} // namespace

TEST_CASE("prepend and canonical trimming") {
  CHECK(seq_prepend(Scalar(5), FiniteSeq()).coeffs == seq({5}).coeffs);
  CHECK(seq_prepend(Scalar(1), seq({2, 3})).coeffs == seq({1, 2, 3}).coeffs);
  CHECK(equal(seq({1, 0, 0}), seq({1})));
  CHECK(trim(seq({0, 0})).coeffs.empty());
}

TEST_CASE("sequence norms") {
  CHECK(seq_norm(seq({3, 4}), Exponent::of(2)).exact_pow == Rational(25));
  CHECK(seq_norm(seq({3, 4}), Exponent::of(2)).value == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(seq_norm(FiniteSeq(), Exponent::of(1)).value == 0);
  CHECK(seq_norm(seq({1, 1, 1}), Exponent::infinity()).exact == Rational(1));
  CHECK(seq_norm(seq_prepend(Scalar(3), seq({4})), Exponent::of(2)).value ==
        doctest::Approx(5.0).epsilon(1e-15));
  CHECK_THROWS_WITH_AS(seq_norm(seq({1}), Exponent::of(1, 2)), "not a norm exponent", error);
}

TEST_CASE("head target evaluates the leading coefficient") {
  SeqTarget head = scalar_target(Rational(1), Rational(0), Exponent::of(1));
  CHECK(seq_universal(head, seq({7, 1, 2})) == Vec{Scalar(7)});
  CHECK(seq_universal(head, FiniteSeq()) == Vec{Scalar(0)});
}

TEST_CASE("halving fold computes the geometric sum") {
  SeqTarget halving = scalar_target(Rational(1, 2), Rational(1, 2), Exponent::of(1));
  // independent direct-sum oracle: sum of a_k 2^-(k+1)
  Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    std::vector<Scalar> cs(static_cast<size_t>(rng.range(0, 10)));
    for (auto& c : cs) c = random_scalar(rng, 8, 8);
    FiniteSeq a(cs);
    Scalar want;
    for (size_t k = 0; k < cs.size(); ++k) want += div_pow2(cs[k], static_cast<int>(k) + 1);
    CHECK(seq_universal(halving, a) == Vec{want});
  }
  CHECK(seq_universal(halving, seq({1, 1})) == Vec{Scalar(3, 4)});
}

TEST_CASE("prepend square holds for every shipped flavour") {
  std::vector<SeqTarget> targets = {
      scalar_target(Rational(1), Rational(0), Exponent::of(1)),
      scalar_target(Rational(1, 2), Rational(1, 2), Exponent::of(1)),
      scalar_target(Rational(3, 5), Rational(4, 5), Exponent::of(2)),
      scalar_target(Rational(0), Rational(1), Exponent::of(1)),
      scalar_target(Rational(1, 3), Rational(2, 3), Exponent::infinity()),
  };
  Rng rng(32);
  for (const auto& t : targets) {
    SeqMorphismTable table = compile_seq_universal(t, 12);
    for (int i = 0; i < 100; ++i) {
      std::vector<Scalar> cs(static_cast<size_t>(rng.range(0, 10)));
      for (auto& c : cs) c = random_scalar(rng, 8, 8);
      FiniteSeq a(cs);
      Scalar c = random_scalar(rng, 8, 8);
      CHECK(apply_seq_universal(table, seq_prepend(c, a)) ==
            t.apply_delta(c, apply_seq_universal(table, a)));
      CHECK(table.target.norm.eval(apply_seq_universal(table, a)).value <=
            seq_norm(a, t.p).value + 1e-9);
    }
  }
}

TEST_CASE("tail projection sends every finite sequence to zero") {
  SeqTarget tail = scalar_target(Rational(0), Rational(1), Exponent::of(1));
  CHECK(seq_universal(tail, seq({4, 5, 6})) == Vec{Scalar(0)});
}

TEST_CASE("construction gate rejects expanding folds") {
  SeqTarget bad = scalar_target(Rational(2), Rational(0), Exponent::of(1));
  CHECK_THROWS_AS(validate_seq_target(bad), error);
  SeqTarget bad2 = scalar_target(Rational(3, 5), Rational(9, 10), Exponent::of(2));
  CHECK_THROWS_AS(validate_seq_target(bad2), error);
  CHECK_NOTHROW(validate_seq_target(scalar_target(Rational(3, 5), Rational(4, 5), Exponent::of(2))));
}

TEST_CASE("vanishing-at-infinity mode works on finitely supported data") {
  SeqTarget c0 = scalar_target(Rational(1, 3), Rational(2, 3), Exponent::infinity());
  SeqMorphismTable table = compile_seq_universal(c0, 8);
  CHECK(apply_seq_universal(table, seq({1})) == Vec{Scalar(1, 3)});
  CHECK(apply_seq_universal(table, seq({1, 1})) ==
        Vec{Scalar(Rational(1, 3) + Rational(2, 9))});
}
