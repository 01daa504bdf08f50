#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "aont/field.hpp"
#include "aont/matrix.hpp"

namespace aont {

using Tuple = std::vector<std::uint8_t>;

/// Largest table (in rows) built by default.
inline constexpr std::uint64_t kDefaultTableCeiling = 1'000'000;

/// Thrown when a table or enumeration would exceed its ceiling.
class CeilingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mixed-radix rank of a tuple over {0..v-1}, first coordinate most
/// significant.
std::uint64_t tuple_rank(std::span<const std::uint8_t> x, unsigned v);
Tuple tuple_unrank(std::uint64_t rank, unsigned v, int s);

/// A bijection on X^s, X = {0..v-1}, stored as v^s output tuples in input
/// rank order.
class GeneralTransform {
 public:
  /// `table` holds v^s * s symbols. Throws std::invalid_argument if the
  /// shape is wrong, a symbol is out of range, or the table is not a
  /// bijection.
  GeneralTransform(unsigned v, int s, std::vector<std::uint8_t> table);

  unsigned v() const { return v_; }
  int s() const { return s_; }
  std::uint64_t rows() const { return rows_; }
  std::span<const std::uint8_t> output(std::uint64_t rank) const {
    return std::span<const std::uint8_t>(table_).subspan(rank * static_cast<std::uint64_t>(s_), static_cast<std::size_t>(s_));
  }
  std::span<const std::uint8_t> table() const { return table_; }

  friend bool operator==(const GeneralTransform& a, const GeneralTransform& b) = default;

 private:
  unsigned v_;
  int s_;
  std::uint64_t rows_;
  std::vector<std::uint8_t> table_;
};

GeneralTransform identity_transform(unsigned v, int s);

/// The forward transform y = x M^-1 of a linear AONT with matrix M.
/// Throws std::domain_error if M is singular, CeilingError if q^s > ceiling.
GeneralTransform linear_to_general(const Matrix& m, std::uint64_t ceiling = kDefaultTableCeiling);

/// An (N,k,v)-array, row-major.
struct Array {
  std::uint64_t n_rows = 0;
  int k = 0;
  unsigned v = 0;
  std::vector<std::uint8_t> cells;

  std::span<const std::uint8_t> row(std::uint64_t i) const {
    return std::span<const std::uint8_t>(cells).subspan(i * static_cast<std::uint64_t>(k), static_cast<std::size_t>(k));
  }
};

/// True iff every |D|-tuple appears exactly N / v^|D| times in the columns D
/// (0-based). False when v^|D| does not divide N.
bool is_unbiased(const Array& a, std::span<const int> columns);

struct OrthogonalArray {
  Array array;
  int t = 0;
  std::uint64_t lambda = 0;
};

/// Unbiased with respect to every t-subset of columns.
bool is_orthogonal_array(const Array& a, int t);

/// The (v^s, 2s, v)-array with rows (x, phi(x)) in input rank order.
Array transform_array(const GeneralTransform& phi);

struct GeneralVerifyReport {
  bool valid = false;
  int t = 0;
  /// First column set of the array (0-based, inputs 0..s-1, outputs
  /// s..2s-1) that is not unbiased.
  std::vector<int> witness_columns;
};

/// Checks that the array of phi is unbiased on the inputs, on the outputs,
/// and on I together with all outputs outside J for every |I| = |J| = t.
/// Throws std::invalid_argument unless 1 <= t <= s.
GeneralVerifyReport verify_general_aont(const GeneralTransform& phi, int t);

/// The v^t inputs whose image ends in `suffix` (length s - t), as an
/// OA(t,s,v). Throws std::invalid_argument if phi is not a t-AONT or the
/// suffix has the wrong length or symbols.
OrthogonalArray extract_oa(const GeneralTransform& phi, int t, std::span<const std::uint8_t> suffix);

/// One array per suffix, in suffix rank order; together they hold every
/// input tuple exactly once.
std::vector<OrthogonalArray> aont_to_large_set(const GeneralTransform& phi, int t);

/// A function X^n -> X^m, either linear (x -> x G^T with G an m x n matrix
/// over `field`) or given by a table of v^n output tuples.
struct ResilientFunction {
  int n = 0;
  int m = 0;
  int t = 0;
  unsigned v = 0;
  FieldPtr field;
  /// m x n, row-major; set for linear functions.
  std::vector<std::uint8_t> generator;
  /// v^n * m symbols in input rank order; set for tabulated functions.
  std::vector<std::uint8_t> table;

  bool is_linear() const { return field != nullptr; }
  Tuple evaluate(std::span<const std::uint8_t> x) const;
};

/// Row-reduced basis of the right null space {y : A y^T = 0} of a
/// rows x cols matrix A; returned as (cols - rank) x cols, row-major.
std::vector<std::uint8_t> null_space_basis(const Field& f, int rows, int cols, std::span<const std::uint8_t> a);

/// Keeps the t rows of M not listed in delete_rows (default: the last
/// s - t rows), takes a generator N of the dual of the code they span, and
/// returns x -> x N^T as an (s, s-t, t, q)-resilient function. Throws
/// std::invalid_argument if M is not a (t,s,q)-AONT or delete_rows is not
/// s - t distinct valid indices.
ResilientFunction linear_aont_to_rf(const Matrix& m, int t, std::optional<std::vector<int>> delete_rows = std::nullopt);

/// The last s - t output coordinates of phi, an (s, s-t, t, v)-resilient
/// function when phi is a t-AONT.
ResilientFunction aont_to_rf(const GeneralTransform& phi, int t);

/// Exhaustive check: for every t-set of input positions and every value
/// assignment on it, the free inputs map evenly onto all output m-tuples.
/// Throws CeilingError if v^n > ceiling.
bool verify_resilient(const ResilientFunction& f, std::uint64_t ceiling = kDefaultTableCeiling);

struct BruteForceResult {
  std::vector<GeneralTransform> transforms;
  /// Bijections tested (find_all) or search nodes visited (existence mode).
  std::uint64_t explored = 0;
};

inline constexpr std::uint64_t kBruteForceAllCeiling = 9;
inline constexpr std::uint64_t kBruteForceExistsCeiling = 32;

/// find_all: every bijection of X^s passing verify_general_aont(t), by raw
/// enumeration; requires v^s <= 9. Otherwise stops at the first hit, with
/// phi(0..0) fixed to 0..0 (outputs may be relabeled per coordinate) and
/// partial-count pruning; requires v^s <= 32. Throws CeilingError beyond.
BruteForceResult brute_force_general_search(unsigned v, int s, int t, bool find_all);

/// False iff an OA(t,s,v), and hence a (t,s,v)-AONT, is ruled out by the
/// Bush bound. Requires t >= 1, s >= t, v >= 2.
bool bush_admissible(int t, int s, unsigned v);

}  // namespace aont
