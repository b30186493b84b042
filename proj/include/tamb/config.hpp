#pragma once

#include <cstddef>
#include <cstdint>

namespace tamb {

// Resource caps. All enumerations check against these and throw
// ResourceBound instead of truncating.
struct Limits {
  int max_sym_degree = 4;                  // n for Sigma_n (n! elements)
  std::uint64_t section_cap = 1'000'000;   // candidate sections in a dependent product
  std::uint64_t exp_cap = 200'000;         // |T|^n for exponential H-sets
  std::uint64_t enum_cap = 5'000'000;      // generic enumeration budget (maps, bases)
  std::uint64_t coeff_cap = 1u << 22;      // coefficient vectors in polynomial enumeration
};

// Process-wide limits. Set once (e.g. by the CLI) before any parallel work.
Limits& limits();

// Applies TAMB_MAX_SYM_DEGREE, TAMB_SECTION_CAP, TAMB_EXP_CAP,
// TAMB_ENUM_CAP and TAMB_COEFF_CAP from the environment when set.
void apply_env_overrides(Limits& l);

enum class ExecPolicy { serial, parallel };

}  // namespace tamb
