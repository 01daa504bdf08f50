#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace aont {

/// A field element, identified by its integer code in [0, q).
///
/// The code is the base-p digit vector of the polynomial representative,
/// little-endian: the coefficient of x^i is the i-th base-p digit. Code 0 is
/// the additive identity and code 1 the multiplicative identity.
struct Element {
  std::uint8_t code = 0;

  constexpr Element() = default;
  constexpr explicit Element(unsigned c) : code(static_cast<std::uint8_t>(c)) {}

  friend constexpr auto operator<=>(Element, Element) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Exact arithmetic in GF(p^n), q = p^n <= 256.
///
/// All operations are table lookups; tables are built once in the
/// constructor and the object is immutable afterwards, so a FieldPtr can be
/// shared freely across threads.
class Field {
 public:
  static constexpr unsigned kMaxOrder = 256;

  /// Throws std::invalid_argument when p is not prime, n < 1, q > 256, or the
  /// supplied modulus is not a monic irreducible polynomial of degree n.
  /// Without a modulus the irreducible polynomial of smallest code is used
  /// (x^2+x+1 for GF(4), x^3+x+1 for GF(8), x^2+1 for GF(9)).
  Field(unsigned p, unsigned n, std::optional<unsigned> modulus = std::nullopt);

  static FieldPtr make(unsigned p, unsigned n, std::optional<unsigned> modulus = std::nullopt);

  /// Parses "q", "p^n" or "p^n/modulusCode" (e.g. "9", "3^2", "3^2/10").
  static FieldPtr parse(std::string_view designation);

  unsigned p() const { return p_; }
  unsigned n() const { return n_; }
  unsigned q() const { return q_; }
  /// Modulus code; for prime fields this is the code of "x", i.e. p.
  unsigned modulus() const { return modulus_; }

  /// "p^n/modulus", the inverse of parse().
  std::string designation() const;

  Element zero() const { return Element{0}; }
  Element one() const { return Element{1}; }
  bool contains(Element a) const { return a.code < q_; }

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  Element div(Element a, Element b) const;
  /// Throws std::domain_error for a = 0.
  Element inv(Element a) const;
  Element pow(Element a, unsigned long long e) const;

  /// Smallest k > 0 with a^k = 1; a must be nonzero.
  unsigned multiplicative_order(Element a) const;
  /// The primitive element of smallest code.
  Element primitive_element() const;
  Element sum_all_elements() const;

  // Raw tables, indexed [a * q + b]. Used by the search hot paths.
  const std::uint8_t* add_table() const { return add_.data(); }
  const std::uint8_t* mul_table() const { return mul_.data(); }
  const std::uint8_t* neg_table() const { return neg_.data(); }
  const std::uint8_t* inv_table() const { return inv_.data(); }

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.n_ == b.n_ && a.modulus_ == b.modulus_;
  }

 private:
  void check(Element a) const;

  unsigned p_;
  unsigned n_;
  unsigned q_;
  unsigned modulus_;
  std::vector<std::uint8_t> add_;
  std::vector<std::uint8_t> mul_;
  std::vector<std::uint8_t> neg_;
  std::vector<std::uint8_t> inv_;
};

/// Deterministic trial division.
bool is_prime(unsigned long long v);

/// Polynomials over GF(p) encoded as integer codes (base-p digits,
/// little-endian). Exposed for tests and for the field designation parser.
namespace poly {

std::vector<unsigned> digits(unsigned long long code, unsigned p);
unsigned long long encode(const std::vector<unsigned>& coeffs, unsigned p);
int degree(const std::vector<unsigned>& coeffs);
/// Remainder of a modulo a monic b over GF(p).
std::vector<unsigned> remainder(std::vector<unsigned> a, const std::vector<unsigned>& b, unsigned p);
/// Trial division against every monic polynomial of degree 1..n/2.
bool is_irreducible(unsigned long long code, unsigned p);
/// Smallest code of a monic irreducible polynomial of degree n over GF(p).
unsigned long long default_modulus(unsigned p, unsigned n);

}  // namespace poly

/// The canonical linear order on field elements used for the reduced form.
/// Natural order compares codes; other orders exist only to check that
/// enumeration results do not depend on the choice.
class ElementOrder {
 public:
  static ElementOrder natural(unsigned q);
  /// Keeps 0 first and reverses the nonzero codes.
  static ElementOrder reversed(unsigned q);
  /// Elements from smallest to largest; must be a permutation of 0..q-1
  /// starting with 0. Throws std::invalid_argument otherwise.
  static ElementOrder from_sequence(std::vector<std::uint8_t> sequence);

  bool less(Element a, Element b) const { return rank_[a.code] < rank_[b.code]; }
  unsigned rank(Element a) const { return rank_[a.code]; }
  /// Elements listed from smallest to largest.
  const std::vector<std::uint8_t>& sequence() const { return sequence_; }
  unsigned size() const { return static_cast<unsigned>(rank_.size()); }
  bool is_natural() const;

 private:
  explicit ElementOrder(std::vector<std::uint8_t> sequence);

  std::vector<std::uint8_t> sequence_;
  std::vector<std::uint8_t> rank_;
};

}  // namespace aont
