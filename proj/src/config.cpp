#include "tamb/config.hpp"

#include <cstdlib>
#include <string>

#include "tamb/error.hpp"

namespace tamb {

Limits& limits() {
  static Limits l;
  return l;
}

namespace {

template <typename T>
void read_env(const char* name, T& out) {
  const char* v = std::getenv(name);
  if (!v || !*v) return;
  try {
    auto parsed = std::stoull(v);
    if (parsed == 0) throw InputError("BadConfig", std::string(name) + " must be positive");
    out = static_cast<T>(parsed);
  } catch (const std::logic_error&) {
    throw InputError("BadConfig", std::string(name) + " is not a positive integer");
  }
}

}  // namespace

void apply_env_overrides(Limits& l) {
  read_env("TAMB_MAX_SYM_DEGREE", l.max_sym_degree);
  read_env("TAMB_SECTION_CAP", l.section_cap);
  read_env("TAMB_EXP_CAP", l.exp_cap);
  read_env("TAMB_ENUM_CAP", l.enum_cap);
  read_env("TAMB_COEFF_CAP", l.coeff_cap);
}

}  // namespace tamb
