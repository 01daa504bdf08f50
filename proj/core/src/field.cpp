#include "aont/field.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace aont {

bool is_prime(unsigned long long v) {
  if (v < 2) return false;
  for (unsigned long long d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

namespace poly {

std::vector<unsigned> digits(unsigned long long code, unsigned p) {
  std::vector<unsigned> out;
  while (code > 0) {
    out.push_back(static_cast<unsigned>(code % p));
    code /= p;
  }
  return out;
}

unsigned long long encode(const std::vector<unsigned>& coeffs, unsigned p) {
  unsigned long long code = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) code = code * p + *it;
  return code;
}

int degree(const std::vector<unsigned>& coeffs) {
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    if (coeffs[static_cast<std::size_t>(i)] != 0) return i;
  }
  return -1;
}

std::vector<unsigned> remainder(std::vector<unsigned> a, const std::vector<unsigned>& b, unsigned p) {
  const int db = degree(b);
  if (db < 0) throw std::invalid_argument("polynomial division by zero");
  for (int da = degree(a); da >= db; da = degree(a)) {
    // b is monic, so the quotient term is a's leading coefficient.
    const unsigned lead = a[static_cast<std::size_t>(da)];
    const int shift = da - db;
    for (int i = 0; i <= db; ++i) {
      auto& slot = a[static_cast<std::size_t>(i + shift)];
      slot = (slot + p - (lead * b[static_cast<std::size_t>(i)]) % p) % p;
    }
  }
  a.resize(static_cast<std::size_t>(std::max(db, 0)));
  return a;
}

bool is_irreducible(unsigned long long code, unsigned p) {
  const auto f = digits(code, p);
  const int n = degree(f);
  if (n < 1 || f[static_cast<std::size_t>(n)] != 1) return false;
  for (int d = 1; d <= n / 2; ++d) {
    unsigned long long lo = 1;
    for (int i = 0; i < d; ++i) lo *= p;
    // Monic divisors of degree d have codes p^d .. 2p^d - 1.
    for (unsigned long long g = lo; g < 2 * lo; ++g) {
      if (degree(remainder(f, digits(g, p), p)) < 0) return false;
    }
  }
  return true;
}

unsigned long long default_modulus(unsigned p, unsigned n) {
  unsigned long long lo = 1;
  for (unsigned i = 0; i < n; ++i) lo *= p;
  for (unsigned long long code = lo; code < 2 * lo; ++code) {
    if (is_irreducible(code, p)) return code;
  }
  throw std::logic_error("no irreducible polynomial found");
}

}  // namespace poly

Field::Field(unsigned p, unsigned n, std::optional<unsigned> modulus) : p_(p), n_(n) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (n < 1) throw std::invalid_argument("field degree must be at least 1");
  unsigned long long q = 1;
  for (unsigned i = 0; i < n; ++i) {
    q *= p;
    if (q > kMaxOrder) throw std::invalid_argument("field order exceeds 256");
  }
  q_ = static_cast<unsigned>(q);

  if (n == 1) {
    modulus_ = p;
  } else if (modulus) {
    const auto deg = poly::degree(poly::digits(*modulus, p));
    if (deg != static_cast<int>(n)) {
      throw std::invalid_argument("modulus " + std::to_string(*modulus) + " does not have degree " + std::to_string(n));
    }
    if (!poly::is_irreducible(*modulus, p)) {
      throw std::invalid_argument("modulus " + std::to_string(*modulus) + " is not monic irreducible");
    }
    modulus_ = *modulus;
  } else {
    modulus_ = static_cast<unsigned>(poly::default_modulus(p, n));
  }

  const auto modulus_digits = poly::digits(modulus_, p);
  std::vector<std::vector<unsigned>> elems(q_);
  for (unsigned a = 0; a < q_; ++a) {
    elems[a] = poly::digits(a, p);
    elems[a].resize(n, 0);
  }

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (unsigned a = 0; a < q_; ++a) {
    std::vector<unsigned> na(n);
    for (unsigned i = 0; i < n; ++i) na[i] = (p - elems[a][i]) % p;
    neg_[a] = static_cast<std::uint8_t>(poly::encode(na, p));
    for (unsigned b = 0; b < q_; ++b) {
      std::vector<unsigned> sum(n);
      for (unsigned i = 0; i < n; ++i) sum[i] = (elems[a][i] + elems[b][i]) % p;
      add_[a * q_ + b] = static_cast<std::uint8_t>(poly::encode(sum, p));

      std::vector<unsigned> prod(2 * n, 0);
      for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + elems[a][i] * elems[b][j]) % p;
      }
      const auto reduced = (n == 1) ? std::vector<unsigned>{prod[0]} : poly::remainder(prod, modulus_digits, p);
      mul_[a * q_ + b] = static_cast<std::uint8_t>(poly::encode(reduced, p));
    }
  }
  for (unsigned a = 1; a < q_; ++a) {
    for (unsigned b = 1; b < q_; ++b) {
      if (mul_[a * q_ + b] == 1) {
        inv_[a] = static_cast<std::uint8_t>(b);
        break;
      }
    }
  }
}

FieldPtr Field::make(unsigned p, unsigned n, std::optional<unsigned> modulus) {
  return std::make_shared<const Field>(p, n, modulus);
}

namespace {

unsigned parse_uint(std::string_view text, std::string_view whole) {
  unsigned value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw std::invalid_argument("malformed field designation '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

FieldPtr Field::parse(std::string_view designation) {
  const auto slash = designation.find('/');
  const auto head = designation.substr(0, slash);
  std::optional<unsigned> modulus;
  if (slash != std::string_view::npos) modulus = parse_uint(designation.substr(slash + 1), designation);

  const auto caret = head.find('^');
  if (caret != std::string_view::npos) {
    return make(parse_uint(head.substr(0, caret), designation), parse_uint(head.substr(caret + 1), designation),
                modulus);
  }
  const unsigned q = parse_uint(head, designation);
  if (q < 2) throw std::invalid_argument("field order must be a prime power");
  unsigned p = 2;
  while (q % p != 0) ++p;
  unsigned n = 0;
  for (unsigned rest = q; rest > 1; rest /= p) {
    if (rest % p != 0) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    ++n;
  }
  return make(p, n, modulus);
}

std::string Field::designation() const {
  return std::to_string(p_) + "^" + std::to_string(n_) + "/" + std::to_string(modulus_);
}

void Field::check(Element a) const {
  if (a.code >= q_) {
    throw std::invalid_argument("element " + std::to_string(a.code) + " does not belong to GF(" +
                                std::to_string(q_) + ")");
  }
}

Element Field::add(Element a, Element b) const {
  check(a);
  check(b);
  return Element{add_[a.code * q_ + b.code]};
}

Element Field::sub(Element a, Element b) const { return add(a, neg(b)); }

Element Field::neg(Element a) const {
  check(a);
  return Element{neg_[a.code]};
}

Element Field::mul(Element a, Element b) const {
  check(a);
  check(b);
  return Element{mul_[a.code * q_ + b.code]};
}

Element Field::div(Element a, Element b) const { return mul(a, inv(b)); }

Element Field::inv(Element a) const {
  check(a);
  if (a.code == 0) throw std::domain_error("zero has no multiplicative inverse");
  return Element{inv_[a.code]};
}

Element Field::pow(Element a, unsigned long long e) const {
  check(a);
  Element result = one();
  Element base = a;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

unsigned Field::multiplicative_order(Element a) const {
  check(a);
  if (a.code == 0) throw std::domain_error("zero has no multiplicative order");
  unsigned k = 1;
  for (Element x = a; x != one(); x = mul(x, a)) ++k;
  return k;
}

Element Field::primitive_element() const {
  for (unsigned c = 1; c < q_; ++c) {
    if (multiplicative_order(Element{c}) == q_ - 1) return Element{c};
  }
  throw std::logic_error("field without primitive element");
}

Element Field::sum_all_elements() const {
  Element total = zero();
  for (unsigned c = 0; c < q_; ++c) total = add(total, Element{c});
  return total;
}

ElementOrder::ElementOrder(std::vector<std::uint8_t> sequence)
    : sequence_(std::move(sequence)), rank_(sequence_.size()) {
  for (std::size_t i = 0; i < sequence_.size(); ++i) rank_[sequence_[i]] = static_cast<std::uint8_t>(i);
}

ElementOrder ElementOrder::natural(unsigned q) {
  std::vector<std::uint8_t> seq(q);
  std::iota(seq.begin(), seq.end(), std::uint8_t{0});
  return ElementOrder(std::move(seq));
}

ElementOrder ElementOrder::reversed(unsigned q) {
  std::vector<std::uint8_t> seq{0};
  for (unsigned c = q - 1; c >= 1; --c) seq.push_back(static_cast<std::uint8_t>(c));
  return ElementOrder(std::move(seq));
}

ElementOrder ElementOrder::from_sequence(std::vector<std::uint8_t> sequence) {
  std::vector<bool> seen(sequence.size(), false);
  for (auto c : sequence) {
    if (c >= sequence.size() || seen[c]) throw std::invalid_argument("element order is not a permutation");
    seen[c] = true;
  }
  if (sequence.empty() || sequence.front() != 0) throw std::invalid_argument("element order must start with 0");
  return ElementOrder(std::move(sequence));
}

bool ElementOrder::is_natural() const {
  for (std::size_t i = 0; i < sequence_.size(); ++i) {
    if (sequence_[i] != i) return false;
  }
  return true;
}

}  // namespace aont
