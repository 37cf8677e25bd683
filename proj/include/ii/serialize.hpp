#pragma once

#include <string>

#include "ii/dyadic.hpp"
#include "ii/instances.hpp"
#include "ii/measures.hpp"
#include "ii/sequences.hpp"
#include "ii/universal.hpp"

namespace ii {

// JSON wire formats. Rationals travel as "n" / "n/d" strings; a scalar with a
// nonzero imaginary part becomes {"re": ..., "im": ...}. Floats print with 17
// significant digits. Round trips reproduce canonical forms exactly.

std::string to_json(const Scalar& c);
std::string to_json(const DyadicStep& f);
std::string to_json(const PiecewiseLinear& F);
std::string to_json(const FiniteSeq& a);
std::string to_json(const AlgebraTarget& t);
std::string to_json(const MorphismTable& t);
std::string to_json(const SeqTarget& t);
std::string to_json(const FiniteMeasureSpace& X);
std::string to_json(const PartialMap& f);
std::string to_json(const SimpleFn& f);
std::string to_json(const SignedMeasure& nu);

Scalar scalar_from_json(const std::string& text);
DyadicStep step_from_json(const std::string& text);
PiecewiseLinear pl_from_json(const std::string& text);
FiniteSeq seq_from_json(const std::string& text);
AlgebraTarget algebra_target_from_json(const std::string& text);
MorphismTable morphism_table_from_json(const std::string& text);
SeqTarget seq_target_from_json(const std::string& text);
FiniteMeasureSpace space_from_json(const std::string& text);
PartialMap partial_map_from_json(const std::string& text);
SimpleFn simple_fn_from_json(const std::string& text);
SignedMeasure signed_measure_from_json(const std::string& text);

// Selector for the shipped functor targets:
// {"kind": "field-total" | "simple" | "measures" | "hilbert", "p": ..., "seed": ...}
FunctorTargetPtr functor_target_from_json(const std::string& text);

std::string format_double17(double v);

} // namespace ii
