#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "aont/field.hpp"

namespace aont {

/// Square matrix over GF(q), row-major. This is the matrix M with x = yM,
/// i.e. the inverse of the forward transform y = x M^-1.
class Matrix {
 public:
  Matrix(FieldPtr field, int size);
  Matrix(FieldPtr field, int size, std::vector<std::uint8_t> codes);
  /// Builds from nested rows of element codes; rows must be square.
  static Matrix from_rows(FieldPtr field, const std::vector<std::vector<unsigned>>& rows);

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  int size() const { return size_; }

  Element at(int r, int c) const { return Element{codes_[index(r, c)]}; }
  void set(int r, int c, Element e);
  std::uint8_t code(int r, int c) const { return codes_[index(r, c)]; }
  std::span<const std::uint8_t> codes() const { return codes_; }
  std::span<const std::uint8_t> row(int r) const {
    return std::span<const std::uint8_t>(codes_).subspan(index(r, 0), static_cast<std::size_t>(size_));
  }

  Matrix transposed() const;
  /// Square submatrix on the given (equal-length) row and column index lists.
  Matrix submatrix(std::span<const int> rows, std::span<const int> cols) const;
  /// Removes one row and one column.
  Matrix minor(int row, int col) const;

  /// Same field and identical entries.
  friend bool operator==(const Matrix& a, const Matrix& b);
  /// Lexicographic on the row-major code sequence.
  friend bool operator<(const Matrix& a, const Matrix& b) { return a.codes_ < b.codes_; }

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(size_) + static_cast<std::size_t>(c);
  }

  FieldPtr field_;
  int size_;
  std::vector<std::uint8_t> codes_;
};

Matrix identity_matrix(FieldPtr field, int size);

/// Determinant by Gaussian elimination with exact field arithmetic.
Element determinant(const Matrix& m);
bool is_invertible(const Matrix& m);
/// Inverse by Gauss-Jordan elimination; throws std::domain_error if singular.
Matrix inverse(const Matrix& m);

/// Outcome of the linear AONT test. Indices are 0-based here; the JSON and
/// text renderings are 1-based.
struct VerifyReport {
  bool valid = false;
  int t = 0;
  int s = 0;
  unsigned q = 0;
  bool singular = false;
  std::vector<int> witness_rows;
  std::vector<int> witness_cols;
  std::optional<int> mu;
  std::optional<Element> tau;

  bool has_witness() const { return singular || !witness_rows.empty(); }
};

/// M is a linear (t,s,q)-AONT iff M is invertible and every t x t submatrix
/// is invertible. The witness is "matrix singular" when M itself fails,
/// otherwise the lexicographically first failing (rows, cols) pair. For a
/// valid t = 2 report, mu is the standard-form type and tau the skew
/// parameter when m is already in type-full standard form.
/// Throws std::invalid_argument unless 1 <= t <= s.
VerifyReport verify_linear_aont(const Matrix& m, int t);
bool is_linear_aont(const Matrix& m, int t);

/// Number of zero entries on the main diagonal, counting from the top-left,
/// before the first nonzero one.
int leading_diagonal_zeros(const Matrix& m);

struct StandardFormInfo {
  int mu = 0;
  /// Bottom-right entry of the normalized matrix when s = q.
  std::optional<Element> chi;
  /// normalized(i, j) = row_scales[i] * m(row_perm[i], col_perm[j]) * col_scales[j]
  std::vector<int> row_perm;
  std::vector<int> col_perm;
  std::vector<Element> row_scales;
  std::vector<Element> col_scales;
};

struct StandardForm {
  Matrix matrix;
  StandardFormInfo info;
};

/// Moves the zeros onto the leading diagonal (zero rows in original index
/// order) and scales the first row and column to ones, except a 0 corner when
/// mu > 0. Throws std::invalid_argument if a row or column holds two zeros.
StandardForm to_standard_form(const Matrix& m);
/// Replays recorded normalizing operations on m.
Matrix apply_standard_form_ops(const Matrix& m, const StandardFormInfo& info);

/// Zero diagonal and ones elsewhere in the first row and column.
bool is_type_full_standard_form(const Matrix& m);
/// Type-full standard form with row 2 increasing in columns 3..s.
bool is_reduced(const Matrix& m, const ElementOrder& order);
bool is_reduced(const Matrix& m);

/// Sorts columns 3..s by their row-2 entries and applies the same permutation
/// to rows 3..s. Throws std::invalid_argument when m is not in type-full
/// standard form or row 2 repeats an entry.
Matrix to_reduced(const Matrix& m, const ElementOrder& order);
Matrix to_reduced(const Matrix& m);

/// tau with m(i,j) + m(j,i) = tau for all i != j, i,j >= 2 (1-based), if any.
std::optional<Element> skew_parameter(const Matrix& m);
bool is_symmetric(const Matrix& m);

/// Deletes the first column and the first row whose removal leaves an
/// invertible matrix. Requires m to be a (t,s,q)-AONT with t < s.
Matrix shrink_aont(const Matrix& m, int t);

namespace ops {

struct PermuteRows {
  std::vector<int> perm;  // new row i = old row perm[i]
};
struct PermuteCols {
  std::vector<int> perm;
};
struct ScaleRow {
  int index;
  Element scalar;
};
struct ScaleCol {
  int index;
  Element scalar;
};
struct Transpose {};

}  // namespace ops

using EquivalenceOp = std::variant<ops::PermuteRows, ops::PermuteCols, ops::ScaleRow, ops::ScaleCol, ops::Transpose>;

/// Throws std::invalid_argument for a zero scalar or an invalid permutation.
Matrix apply_equivalence_op(const Matrix& m, const EquivalenceOp& op);

}  // namespace aont
