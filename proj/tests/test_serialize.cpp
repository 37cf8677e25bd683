#include <doctest.h>

#include "ii/serialize.hpp"

using namespace ii;

TEST_CASE("scalar wire format") {
  CHECK(to_json(Scalar(2)) == "\"2\"");
  CHECK(to_json(Scalar(-3, 4)) == "\"-3/4\"");
  CHECK(scalar_from_json("\"7/2\"") == Scalar(7, 2));
  Scalar z(Rational(1, 2), Rational(-1, 3));
  CHECK(scalar_from_json(to_json(z)) == z);
  CHECK(to_json(z).find("\"im\"") != std::string::npos);
}

TEST_CASE("step wire format and field errors") {
  DyadicStep f = step_from_json(R"({"level": 1, "coeffs": ["1", "2"]})");
  CHECK(f.level == 1);
  CHECK(f.coeffs == Vec{Scalar(1), Scalar(2)});
  CHECK(step_from_json(to_json(f)).coeffs == f.coeffs);
  CHECK_THROWS_WITH_AS(step_from_json(R"({"coeffs": ["1"]})"),
                       "field 'level' missing or not an integer", error);
  CHECK_THROWS_AS(step_from_json(R"({"level": 1, "coeffs": ["1"]})"), error);  // wrong count
  CHECK_THROWS_AS(step_from_json("not json"), error);
}

TEST_CASE("space and function wire formats") {
  FiniteMeasureSpace X = space_from_json(
      R"({"points": ["a", "b"], "weights": {"a": "1/2", "b": "1/2"}})");
  CHECK(X.total() == Rational(1));
  CHECK(space_from_json(to_json(X)) == X);
  CHECK_THROWS_WITH_AS(space_from_json(R"({"points": ["a"], "weights": {}})"),
                       "field 'weights.a' missing", error);

  SimpleFn f = simple_fn_from_json(
      R"({"space": {"points": ["a"], "weights": {"a": "2"}}, "values": {"a": "3"}})");
  CHECK(integrate(f) == Scalar(6));

  PartialMap pm = partial_map_from_json(to_json(identity_partial(X)));
  CHECK(partial_maps_equal(pm, identity_partial(X)));
}

TEST_CASE("target selectors") {
  CHECK(functor_target_from_json(R"({"kind": "field-total"})")->name() == "field-total");
  CHECK(functor_target_from_json(R"({"kind": "simple", "p": "2"})")->is_hilbert());
  CHECK_FALSE(functor_target_from_json(R"({"kind": "measures"})")->has_pres_action());
  CHECK(functor_target_from_json(R"({"kind": "hilbert", "seed": 3})")->is_hilbert());
  CHECK_THROWS_WITH_AS(functor_target_from_json(R"({"kind": "mystery"})"),
                       "field 'kind' has unknown value: mystery", error);
}

TEST_CASE("algebra target and table wire formats") {
  AlgebraTarget t = algebra_target_from_json(R"({
    "dim": 1, "p": "1", "basepoint": ["1"],
    "delta": [["1/2", "1/2"]], "norm": {"kind": "sup"}})");
  CHECK(t.dim == 1);
  MorphismTable table = compile_universal(t, 3);
  MorphismTable back = morphism_table_from_json(to_json(table));
  CHECK(back.levels == table.levels);
  CHECK(uniqueness_probe(t, back));
}

TEST_CASE("17-digit float formatting") {
  CHECK(format_double17(0.1) == "0.10000000000000001");
  CHECK(format_double17(1.0) == "1");
}
