#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cyw/linalg.hpp"
#include "cyw/weight_system.hpp"

namespace cyw {

// Bit i of a subset mask selects weight i (canonical order).
using IndexMask = uint32_t;

// Is there x >= 0 supported on `subset` with sum n_j x_j = d - deficit?
bool subset_monomial_exists(const WeightSystem& ws, IndexMask subset, int64_t deficit);

// For every nonempty J: a monomial in the variables of J alone, or at least
// |J| indices k outside J with a monomial of degree d - n_k in J.
bool is_transverse(const WeightSystem& ws);

// Row i is the exponent vector of (X^i)^a_i or (X^i)^a_i X^j with a_i >= 2.
struct MonomialMatrix {
  std::vector<std::vector<int64_t>> rows;
  // Each variable is the extra factor of at most one row.
  bool injective_pointers = false;
  // (1,...,1) = sum_j qbar_j rows[j]; sum qbar = 1.
  RatForm qbar;
};

// Pure powers are preferred; among the remaining choices an assignment with
// injective pointers is returned when one exists.
std::optional<MonomialMatrix> lemma2_matrix(const WeightSystem& ws);

}  // namespace cyw
