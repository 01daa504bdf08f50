#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aont/field.hpp"
#include "aont/matrix.hpp"

namespace aont {

/// c_ij = 1 / (a_i - b_j). Every square submatrix is invertible, so the
/// result is a (t,s,q)-AONT for every t. Defaults: a_i = i, b_j = s + j.
/// Throws std::invalid_argument when q < 2s or the elements repeat.
Matrix cauchy(const FieldPtr& field, int s, std::optional<std::vector<Element>> a = std::nullopt,
              std::optional<std::vector<Element>> b = std::nullopt);

/// m_rc = alpha^(rc) over GF(2^n), alpha the smallest primitive element.
/// Requires 2^n - 1 prime and 2 <= s <= 2^n - 1.
Matrix vandermonde_aont(unsigned n, int s);

/// m_rc = r + c with r, c running over the element codes. All 2x2
/// submatrices are invertible; the matrix is singular for q > 2.
Matrix additive_matrix(const FieldPtr& field);

/// Transcribed example matrices: E1 (2,3,3), E2 (2,4,4), E3 (2,5,5),
/// E4 (2,7,7), E289 (2,8,9) and E5 (2,11,11).
Matrix builtin_example(std::string_view name);
const std::vector<std::string>& builtin_example_names();

}  // namespace aont
