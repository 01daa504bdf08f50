#pragma once

#include <vector>

#include "aont/field.hpp"
#include "aont/matrix.hpp"

namespace aont {

/// All reduced matrices reachable from the reduced matrix m by moving an
/// ordered pair of distinct rows (r1, r2) to the front, renormalizing the
/// first row and column, and re-sorting row 2; then the same on the
/// transpose. At most 2q^2 - 2q matrices; sorted, without duplicates, and
/// always containing m. Throws std::invalid_argument if m is not reduced.
std::vector<Matrix> equivalent_reduced_set(const Matrix& m, const ElementOrder& order);
std::vector<Matrix> equivalent_reduced_set(const Matrix& m);

/// The reduced forms of m with every entry outside the first row and column
/// multiplied by the same nonzero constant (rescaling row 1 and column 1 and
/// renormalizing). Sorted, without duplicates, contains m.
std::vector<Matrix> interior_scaled_set(const Matrix& m, const ElementOrder& order);
std::vector<Matrix> interior_scaled_set(const Matrix& m);

/// Every reduced matrix reachable from m by repeated generation, sorted.
/// With scale_interior the interior scalings are included at each step.
std::vector<Matrix> equivalence_closure(const Matrix& m, bool scale_interior = true);

/// True iff b lies in equivalence_closure(a). Throws on field mismatch.
bool are_equivalent(const Matrix& a, const Matrix& b);

struct EquivalenceClass {
  /// Lexicographically least member.
  Matrix representative;
  /// Sorted input matrices belonging to this class.
  std::vector<Matrix> members;
};

struct Classification {
  std::vector<EquivalenceClass> classes;
  /// Number of matrices in the closure of each class, including ones that
  /// were not part of the input.
  std::vector<std::size_t> closure_sizes;
  /// True if some class needed more than one expansion round to close.
  bool needed_extra_pass = false;
};

/// Partitions reduced matrices over a common field into equivalence classes,
/// expanding each newly found member until a fixed point is reached. Classes
/// are ordered by representative. With scale_interior the expansion also uses
/// interior_scaled_set, which makes the classes full equivalence classes;
/// without it only equivalent_reduced_set is used.
Classification classify(const std::vector<Matrix>& matrices, const ElementOrder& order, bool scale_interior = true);
Classification classify(const std::vector<Matrix>& matrices, bool scale_interior = true);

}  // namespace aont
