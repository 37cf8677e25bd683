#include "ii/config.hpp"

#include <atomic>
#include <cstdlib>

#include "ii/error.hpp"

namespace ii {

namespace {

int initial_max_level() {
  if (const char* env = std::getenv("INITIAL_INTEGRALS_MAX_LEVEL")) {
    int v = std::atoi(env);
    if (v < 0 || v > 30) throw error("INITIAL_INTEGRALS_MAX_LEVEL out of range");
    return v;
  }
  return 24;
}

std::atomic<int>& level_cap() {
  static std::atomic<int> cap{initial_max_level()};
  return cap;
}

std::atomic<Field>& field_flag() {
  static std::atomic<Field> f{Field::real};
  return f;
}

} // namespace

int max_level() { return level_cap().load(std::memory_order_relaxed); }
void set_max_level(int n) { level_cap().store(n, std::memory_order_relaxed); }

Field field_mode() { return field_flag().load(std::memory_order_relaxed); }
void set_field_mode(Field f) { field_flag().store(f, std::memory_order_relaxed); }

} // namespace ii
