#pragma once

#include <numeric>
#include <vector>

#include "cboom/function.hpp"

namespace cboom {

/// Named functions used across the checks: identity, x^2, Gold and
/// half-Gold for k <= 3, the dob pair (p = 3) and the inverse.
inline std::vector<FunctionTable> catalog(const std::shared_ptr<const Field>& field) {
  std::vector<FunctionTable> out;
  out.push_back(family::identity(field));
  out.push_back(family::square(field));
  for (std::uint32_t k = 1; k <= 3; ++k) out.push_back(family::gold(field, k));
  if (field->p() == 3) {
    for (std::uint32_t k = 1; k <= 3; ++k) out.push_back(family::half_gold(field, k));
    out.push_back(family::dob(field, field->one()));
    out.push_back(family::dob(field, field->neg(field->one())));
  }
  if (field->order() > 2) out.push_back(family::inverse(field));
  return out;
}

inline std::vector<FunctionTable> catalog_permutations(const std::shared_ptr<const Field>& field) {
  std::vector<FunctionTable> out;
  for (auto& fn : catalog(field)) {
    if (fn.is_perm()) out.push_back(std::move(fn));
  }
  // Frobenius x^p is always a permutation; include it when the families miss it.
  if (field->n() > 1) out.push_back(monomial(field, field->p(), "x^" + std::to_string(field->p())));
  return out;
}

}  // namespace cboom
