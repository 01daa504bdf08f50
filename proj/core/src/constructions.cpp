#include "aont/constructions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace aont {

Matrix cauchy(const FieldPtr& field, int s, std::optional<std::vector<Element>> a,
              std::optional<std::vector<Element>> b) {
  const Field& f = *field;
  if (s < 1) throw std::invalid_argument("Cauchy dimension must be positive");
  if (f.q() < 2U * static_cast<unsigned>(s)) {
    throw std::invalid_argument("Cauchy matrix needs q >= 2s (q=" + std::to_string(f.q()) + ", s=" + std::to_string(s) + ")");
  }
  std::vector<Element> xs = a.value_or(std::vector<Element>{});
  std::vector<Element> ys = b.value_or(std::vector<Element>{});
  if (!a) {
    for (int i = 0; i < s; ++i) xs.emplace_back(static_cast<unsigned>(i));
  }
  if (!b) {
    for (int j = 0; j < s; ++j) ys.emplace_back(static_cast<unsigned>(s + j));
  }
  if (static_cast<int>(xs.size()) != s || static_cast<int>(ys.size()) != s) {
    throw std::invalid_argument("Cauchy sequences must each have s elements");
  }
  std::vector<Element> all = xs;
  all.insert(all.end(), ys.begin(), ys.end());
  for (auto e : all) {
    if (!f.contains(e)) throw std::invalid_argument("Cauchy element outside field");
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw std::invalid_argument("Cauchy sequences must be 2s distinct elements");
  }
  Matrix m(field, s);
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) {
      m.set(i, j, f.inv(f.sub(xs[static_cast<std::size_t>(i)], ys[static_cast<std::size_t>(j)])));
    }
  }
  return m;
}

Matrix vandermonde_aont(unsigned n, int s) {
  if (n < 1 || n > 8) throw std::invalid_argument("Vandermonde construction supports 1 <= n <= 8");
  const unsigned q = 1U << n;
  if (!is_prime(q - 1)) {
    throw std::invalid_argument("2^" + std::to_string(n) + " - 1 = " + std::to_string(q - 1) + " is not prime");
  }
  if (s < 2 || s > static_cast<int>(q - 1)) {
    throw std::invalid_argument("Vandermonde dimension must satisfy 2 <= s <= 2^n - 1");
  }
  auto field = Field::make(2, n);
  const Element alpha = field->primitive_element();
  Matrix m(field, s);
  for (int r = 0; r < s; ++r) {
    for (int c = 0; c < s; ++c) m.set(r, c, field->pow(alpha, static_cast<unsigned long long>(r * c)));
  }
  return m;
}

Matrix additive_matrix(const FieldPtr& field) {
  const Field& f = *field;
  const int q = static_cast<int>(f.q());
  Matrix m(field, q);
  for (int r = 0; r < q; ++r) {
    for (int c = 0; c < q; ++c) {
      m.set(r, c, f.add(Element{static_cast<unsigned>(r)}, Element{static_cast<unsigned>(c)}));
    }
  }
  return m;
}

namespace {

struct Example {
  unsigned p;
  unsigned n;
  unsigned modulus;
  std::vector<std::vector<unsigned>> rows;
};

// GF(4) = Z2[x]/(x^2+x+1): x -> 2, x+1 -> 3.
// GF(9) = Z3[x]/(x^2+1):   x -> 3, x+1 -> 4, x+2 -> 5, 2x -> 6, 2x+1 -> 7, 2x+2 -> 8.
const std::map<std::string, Example, std::less<>>& examples() {
  static const std::map<std::string, Example, std::less<>> table{
      {"E1", {3, 1, 3, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}}},
      {"E2", {2, 2, 7, {{0, 1, 1, 1}, {1, 0, 1, 2}, {1, 2, 0, 3}, {1, 1, 2, 0}}}},
      {"E3",
       {5, 1, 5, {{0, 1, 1, 1, 1}, {1, 0, 1, 2, 3}, {1, 3, 0, 1, 2}, {1, 2, 3, 0, 1}, {1, 1, 2, 3, 0}}}},
      {"E4",
       {7,
        1,
        7,
        {{0, 1, 1, 1, 1, 1, 1},
         {1, 0, 1, 2, 3, 4, 5},
         {1, 5, 0, 3, 4, 2, 1},
         {1, 4, 3, 0, 5, 1, 2},
         {1, 3, 2, 1, 0, 5, 4},
         {1, 2, 4, 5, 1, 0, 3},
         {1, 1, 5, 4, 2, 3, 0}}}},
      {"E289",
       {3,
        2,
        10,
        {{0, 1, 1, 1, 1, 1, 1, 1},
         {1, 0, 1, 2, 3, 4, 5, 6},
         {1, 1, 0, 7, 4, 5, 2, 3},
         {1, 6, 3, 0, 5, 2, 7, 4},
         {1, 5, 2, 3, 0, 1, 6, 7},
         {1, 4, 5, 6, 7, 0, 1, 2},
         {1, 3, 4, 1, 2, 7, 0, 5},
         {1, 2, 7, 4, 1, 6, 3, 0}}}},
      {"E5",
       {11,
        1,
        11,
        {{0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
         {1, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9},
         {1, 9, 0, 7, 8, 1, 3, 2, 5, 4, 6},
         {1, 8, 3, 0, 2, 5, 6, 1, 9, 7, 4},
         {1, 7, 2, 8, 0, 6, 1, 3, 4, 9, 5},
         {1, 6, 9, 5, 4, 0, 8, 7, 3, 1, 2},
         {1, 5, 7, 4, 9, 2, 0, 8, 1, 6, 3},
         {1, 4, 8, 9, 7, 3, 2, 0, 6, 5, 1},
         {1, 3, 5, 1, 6, 7, 9, 4, 0, 2, 8},
         {1, 2, 6, 3, 1, 9, 4, 5, 8, 0, 7},
         {1, 1, 4, 6, 5, 8, 7, 9, 2, 3, 0}}}},
  };
  return table;
}

}  // namespace

Matrix builtin_example(std::string_view name) {
  const auto& table = examples();
  const auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("unknown example '" + std::string(name) + "'");
  const Example& ex = it->second;
  return Matrix::from_rows(Field::make(ex.p, ex.n, ex.modulus), ex.rows);
}

const std::vector<std::string>& builtin_example_names() {
  static const std::vector<std::string> names{"E1", "E2", "E3", "E4", "E289", "E5"};
  return names;
}

}  // namespace aont
