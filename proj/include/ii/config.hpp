#pragma once

namespace ii {

enum class Field { real, complex };

// Level cap for dyadic refinement (2^level coefficients). Default 24,
// overridable via INITIAL_INTEGRALS_MAX_LEVEL.
int max_level();
void set_max_level(int n);

// Ground-field mode. Affects random generation and input validation only;
// arithmetic is field-generic throughout.
Field field_mode();
void set_field_mode(Field f);

} // namespace ii
