#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <stdexcept>

#include "aont/combinatorics.hpp"
#include "aont/constructions.hpp"
#include "aont/transforms.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace aont;

namespace {

// Counts tuples in the chosen columns with a map, independent of
// is_unbiased's indexing.
bool unbiased_by_map(const Array& a, const std::vector<int>& cols) {
  std::map<std::vector<std::uint8_t>, std::uint64_t> tally;
  for (std::uint64_t i = 0; i < a.n_rows; ++i) {
    std::vector<std::uint8_t> key;
    for (int c : cols) key.push_back(a.row(i)[static_cast<std::size_t>(c)]);
    ++tally[key];
  }
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < cols.size(); ++i) total *= a.v;
  if (tally.size() != total) return false;
  const auto first = tally.begin()->second;
  return std::all_of(tally.begin(), tally.end(), [&](const auto& kv) { return kv.second == first; });
}

bool oa_by_map(const Array& a, int t) {
  bool ok = true;
  oracle::subsets(static_cast<unsigned>(a.k), static_cast<unsigned>(t), [&](const std::vector<unsigned>& s) {
    ok = ok && unbiased_by_map(a, std::vector<int>(s.begin(), s.end()));
  });
  return ok;
}

// x -> x M^-1 by solving x = yM with the oracle field: try every y.
std::vector<std::vector<unsigned>> oracle_table(const Matrix& m) {
  const Field& f = m.field();
  const oracle::Gf o(f.p(), f.n(), f.n() == 1 ? f.p() : f.modulus());
  const unsigned q = f.q();
  const int s = m.size();
  std::uint64_t rows = 1;
  for (int i = 0; i < s; ++i) rows *= q;
  std::vector<std::vector<unsigned>> table(rows);
  for (std::uint64_t yr = 0; yr < rows; ++yr) {
    std::vector<unsigned> y(static_cast<std::size_t>(s));
    std::uint64_t r = yr;
    for (int i = s; i-- > 0;) {
      y[static_cast<std::size_t>(i)] = static_cast<unsigned>(r % q);
      r /= q;
    }
    std::uint64_t xr = 0;
    for (int c = 0; c < s; ++c) {
      unsigned acc = 0;
      for (int k = 0; k < s; ++k) acc = o.add(acc, o.mul(y[static_cast<std::size_t>(k)], m.code(k, c)));
      xr = xr * q + acc;
    }
    table[xr] = y;
  }
  return table;
}

Array array_of(const OrthogonalArray& oa) { return oa.array; }

// Every t-subset of inputs with every value assignment, tallied by map.
bool resilient_by_map(const ResilientFunction& f) {
  std::uint64_t rows = 1;
  for (int i = 0; i < f.n; ++i) rows *= f.v;
  bool ok = true;
  oracle::subsets(static_cast<unsigned>(f.n), static_cast<unsigned>(f.t), [&](const std::vector<unsigned>& pos) {
    std::map<std::pair<std::vector<std::uint8_t>, std::vector<std::uint8_t>>, std::uint64_t> tally;
    for (std::uint64_t r = 0; r < rows; ++r) {
      const auto x = tuple_unrank(r, f.v, f.n);
      std::vector<std::uint8_t> fixed;
      for (auto p : pos) fixed.push_back(x[p]);
      ++tally[{fixed, f.evaluate(x)}];
    }
    std::uint64_t expected = rows;
    for (int i = 0; i < f.t + f.m; ++i) expected /= f.v;
    std::uint64_t keys = rows / expected;
    ok = ok && tally.size() == keys;
    for (const auto& kv : tally) ok = ok && kv.second == expected;
  });
  return ok;
}

}  // namespace

TEST_CASE("tuple ranks are mixed radix, first coordinate most significant") {
  CHECK(tuple_rank(Tuple{0, 0, 1}, 3) == 1);
  CHECK(tuple_rank(Tuple{1, 0, 0}, 3) == 9);
  CHECK(tuple_rank(Tuple{2, 2, 2}, 3) == 26);
  for (std::uint64_t r = 0; r < 125; ++r) CHECK(tuple_rank(tuple_unrank(r, 5, 3), 5) == r);
}

TEST_CASE("general transforms") {
  const auto id = linear_to_general(Matrix::from_rows(Field::make(3, 1), {{1}}));
  CHECK(id.rows() == 3);
  CHECK(id == identity_transform(3, 1));

  const auto e1 = builtin_example("E1");
  const auto phi = linear_to_general(e1);
  CHECK(phi.rows() == 27);
  std::vector<std::vector<std::uint8_t>> outs;
  for (std::uint64_t r = 0; r < phi.rows(); ++r) outs.emplace_back(phi.output(r).begin(), phi.output(r).end());
  std::sort(outs.begin(), outs.end());
  CHECK(std::adjacent_find(outs.begin(), outs.end()) == outs.end());

  const auto expected = oracle_table(e1);
  for (std::uint64_t r = 0; r < phi.rows(); ++r) {
    CHECK(std::vector<unsigned>(phi.output(r).begin(), phi.output(r).end()) == expected[r]);
  }

  CHECK_THROWS_AS(linear_to_general(additive_matrix(Field::make(3, 1))), std::domain_error);
  CHECK_THROWS_AS(linear_to_general(cauchy(Field::make(13, 1), 6), 1000), CeilingError);
  CHECK_THROWS_AS(GeneralTransform(2, 1, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(GeneralTransform(2, 1, {0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(GeneralTransform(2, 2, {0, 1}), std::invalid_argument);
}

TEST_CASE("unbiased arrays") {
  const Array pairs{4, 2, 2, {0, 0, 0, 1, 1, 0, 1, 1}};
  CHECK(is_unbiased(pairs, std::vector<int>{0, 1}));
  CHECK(is_unbiased(pairs, std::vector<int>{0}));
  CHECK(is_unbiased(pairs, std::vector<int>{}));
  const Array three{3, 2, 2, {0, 0, 0, 1, 1, 0}};
  CHECK_FALSE(is_unbiased(three, std::vector<int>{0}));
  CHECK_FALSE(is_unbiased(three, std::vector<int>{0, 1}));
  const Array skewed{4, 2, 2, {0, 0, 0, 0, 1, 1, 1, 1}};
  CHECK(is_unbiased(skewed, std::vector<int>{0}));
  CHECK_FALSE(is_unbiased(skewed, std::vector<int>{0, 1}));
  CHECK(is_orthogonal_array(pairs, 2));
  CHECK_FALSE(is_orthogonal_array(skewed, 2));
}

TEST_CASE("unbiased-array verification") {
  const auto phi = linear_to_general(builtin_example("E1"));
  CHECK(verify_general_aont(phi, 2).valid);
  const auto id = identity_transform(2, 2);
  const auto r = verify_general_aont(id, 1);
  CHECK_FALSE(r.valid);
  CHECK(r.witness_columns == std::vector<int>{0, 2});
  CHECK(verify_general_aont(linear_to_general(identity_matrix(Field::make(3, 1), 3)), 3).valid);
  CHECK(verify_general_aont(identity_transform(2, 3), 3).valid);
  CHECK_THROWS_AS(verify_general_aont(id, 0), std::invalid_argument);
  CHECK_THROWS_AS(verify_general_aont(id, 3), std::invalid_argument);
}

TEST_CASE("matrix test agrees with the array test") {
  // Exhaustive over every invertible matrix for the smallest fields.
  for (auto [p, n] : {std::pair{2U, 1U}, std::pair{3U, 1U}, std::pair{2U, 2U}}) {
    const auto f = Field::make(p, n);
    const unsigned q = f->q();
    for (int s = 1; s <= (q == 4 ? 2 : 3); ++s) {
      const std::uint64_t cells = static_cast<std::uint64_t>(s) * static_cast<std::uint64_t>(s);
      std::uint64_t total = 1;
      for (std::uint64_t i = 0; i < cells; ++i) total *= q;
      for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<std::uint8_t> codes(cells);
        std::uint64_t c = code;
        for (auto& e : codes) {
          e = static_cast<std::uint8_t>(c % q);
          c /= q;
        }
        const Matrix m(f, s, codes);
        if (!is_invertible(m)) continue;
        const auto phi = linear_to_general(m);
        for (int t = 1; t <= s; ++t) {
          CAPTURE(code);
          CHECK(is_linear_aont(m, t) == verify_general_aont(phi, t).valid);
        }
      }
    }
  }
  for (const auto& name : {"E1", "E2", "E3"}) {
    const auto m = builtin_example(name);
    const auto phi = linear_to_general(m);
    for (int t = 1; t <= m.size(); ++t) CHECK(is_linear_aont(m, t) == verify_general_aont(phi, t).valid);
  }
}

TEST_CASE("orthogonal arrays from an AONT") {
  const auto phi = linear_to_general(builtin_example("E1"));
  for (std::uint8_t u = 0; u < 3; ++u) {
    const auto oa = extract_oa(phi, 2, Tuple{u});
    CHECK(oa.array.n_rows == 9);
    CHECK(oa.lambda == 1);
    CHECK(oa.t == 2);
    CHECK(oa_by_map(array_of(oa), 2));
    CHECK(is_orthogonal_array(oa.array, 2));
  }
  const auto full = extract_oa(identity_transform(2, 2), 2, Tuple{});
  CHECK(full.array.n_rows == 4);
  CHECK(oa_by_map(full.array, 2));
  CHECK_THROWS_AS(extract_oa(phi, 2, Tuple{0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(extract_oa(phi, 2, Tuple{3}), std::invalid_argument);
  CHECK_THROWS_AS(extract_oa(identity_transform(2, 2), 1, Tuple{0}), std::invalid_argument);
}

TEST_CASE("large sets partition the input space") {
  struct Case {
    const char* name;
    std::size_t arrays;
    std::uint64_t rows;
  };
  for (const auto& c : {Case{"E1", 3, 9}, Case{"E3", 125, 25}}) {
    const auto phi = linear_to_general(builtin_example(c.name));
    const auto set = aont_to_large_set(phi, 2);
    CHECK(set.size() == c.arrays);
    std::set<Tuple> seen;
    std::uint64_t total = 0;
    for (const auto& oa : set) {
      CHECK(oa.array.n_rows == c.rows);
      CHECK(is_orthogonal_array(oa.array, 2));
      for (std::uint64_t i = 0; i < oa.array.n_rows; ++i) {
        seen.insert(Tuple(oa.array.row(i).begin(), oa.array.row(i).end()));
        ++total;
      }
    }
    CHECK(total == phi.rows());
    CHECK(seen.size() == phi.rows());
  }
  CHECK(aont_to_large_set(identity_transform(2, 2), 2).size() == 1);
}

TEST_CASE("resilient functions from linear AONT") {
  struct Case {
    Matrix m;
    int t;
    int n;
    int out;
  };
  const std::vector<Case> cases{{builtin_example("E3"), 2, 5, 3},
                                {builtin_example("E1"), 2, 3, 1},
                                {cauchy(Field::make(7, 1), 3), 1, 3, 2}};
  for (const auto& c : cases) {
    const auto f = linear_aont_to_rf(c.m, c.t);
    CHECK(f.n == c.n);
    CHECK(f.m == c.out);
    CHECK(f.t == c.t);
    CHECK(f.is_linear());
    CHECK(verify_resilient(f));
    CHECK(resilient_by_map(f));
    // Each generator row is orthogonal to each kept row of M.
    const Field& fld = c.m.field();
    for (int g = 0; g < f.m; ++g) {
      for (int r = 0; r < c.t; ++r) {
        Element acc{0};
        for (int k = 0; k < f.n; ++k) {
          acc = fld.add(acc, fld.mul(Element{f.generator[static_cast<std::size_t>(g * f.n + k)]}, c.m.at(r, k)));
        }
        CHECK(acc == Element{0});
      }
    }
  }
  const auto e3 = builtin_example("E3");
  for_each_combination(5, 3, [&](std::span<const int> del) {
    const auto f = linear_aont_to_rf(e3, 2, std::vector<int>(del.begin(), del.end()));
    CHECK(verify_resilient(f));
    return true;
  });
  CHECK_THROWS_AS(linear_aont_to_rf(e3, 2, std::vector<int>{0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(linear_aont_to_rf(e3, 2, std::vector<int>{0, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(linear_aont_to_rf(e3, 2, std::vector<int>{0, 1, 5}), std::invalid_argument);
  CHECK_THROWS_AS(linear_aont_to_rf(additive_matrix(Field::make(5, 1)), 2), std::invalid_argument);
}

TEST_CASE("tabulated resilient functions") {
  const auto rf = aont_to_rf(linear_to_general(builtin_example("E1")), 2);
  CHECK(rf.n == 3);
  CHECK(rf.m == 1);
  CHECK_FALSE(rf.is_linear());
  CHECK(verify_resilient(rf));
  CHECK(resilient_by_map(rf));

  ResilientFunction constant{2, 1, 1, 2, nullptr, {}, {0, 0, 0, 0}};
  CHECK_FALSE(verify_resilient(constant));
  ResilientFunction identity{1, 1, 0, 3, nullptr, {}, {0, 1, 2}};
  CHECK(verify_resilient(identity));
  CHECK_THROWS_AS(verify_resilient(rf, 10), CeilingError);
}

TEST_CASE("null space") {
  const auto f = Field::make(5, 1);
  const std::vector<std::uint8_t> a{1, 2, 3, 0, 1, 4};
  const auto basis = null_space_basis(*f, 2, 3, a);
  REQUIRE(basis.size() == 3);
  for (int r = 0; r < 2; ++r) {
    Element acc{0};
    for (int k = 0; k < 3; ++k) acc = f->add(acc, f->mul(Element{a[static_cast<std::size_t>(r * 3 + k)]}, Element{basis[static_cast<std::size_t>(k)]}));
    CHECK(acc == Element{0});
  }
  CHECK(null_space_basis(*f, 2, 3, std::vector<std::uint8_t>{1, 2, 3, 2, 4, 1}).size() == 6);
  CHECK(null_space_basis(*f, 1, 3, std::vector<std::uint8_t>{0, 0, 0}).size() == 9);
}

TEST_CASE("brute-force search over all bijections") {
  const auto a = brute_force_general_search(2, 2, 1, true);
  CHECK(a.transforms.empty());
  CHECK(a.explored == 24);
  const auto b = brute_force_general_search(2, 3, 1, true);
  CHECK(b.transforms.empty());
  CHECK(b.explored == 40320);
  const auto c = brute_force_general_search(3, 2, 1, true);
  CHECK_FALSE(c.transforms.empty());
  CHECK(c.explored == 362880);
  // Every invertible linear (1,2,3)-AONT shows up among them.
  std::set<std::vector<std::uint8_t>> found;
  for (const auto& phi : c.transforms) found.emplace(phi.table().begin(), phi.table().end());
  const auto f3 = Field::make(3, 1);
  std::size_t linear = 0;
  for (unsigned code = 0; code < 81; ++code) {
    const Matrix m(f3, 2, {static_cast<std::uint8_t>(code % 3), static_cast<std::uint8_t>(code / 3 % 3),
                           static_cast<std::uint8_t>(code / 9 % 3), static_cast<std::uint8_t>(code / 27)});
    if (!is_linear_aont(m, 1)) continue;
    ++linear;
    const auto phi = linear_to_general(m);
    CHECK(found.count(std::vector<std::uint8_t>(phi.table().begin(), phi.table().end())) == 1);
  }
  CHECK(linear > 0);
  for (const auto& phi : c.transforms) CHECK(verify_general_aont(phi, 1).valid);
  CHECK_THROWS_AS(brute_force_general_search(2, 4, 1, true), CeilingError);
  CHECK_THROWS_AS(brute_force_general_search(2, 6, 1, false), CeilingError);
}

TEST_CASE("brute-force existence mode") {
  const auto hit = brute_force_general_search(3, 2, 1, false);
  REQUIRE(hit.transforms.size() == 1);
  CHECK(verify_general_aont(hit.transforms[0], 1).valid);
  CHECK(brute_force_general_search(2, 2, 1, false).transforms.empty());
  CHECK(brute_force_general_search(2, 3, 1, false).transforms.empty());
  const auto r = brute_force_general_search(2, 3, 2, false);
  for (const auto& phi : r.transforms) CHECK(verify_general_aont(phi, 2).valid);
  // Existence mode agrees with raw enumeration wherever the latter is feasible.
  for (auto [v, s, t] : {std::tuple{2U, 3, 2}, std::tuple{2U, 3, 3}, std::tuple{2U, 2, 2}, std::tuple{3U, 2, 2},
                         std::tuple{2U, 1, 1}, std::tuple{3U, 2, 1}}) {
    CAPTURE(v);
    CAPTURE(s);
    CAPTURE(t);
    CHECK(brute_force_general_search(v, s, t, false).transforms.empty() ==
          brute_force_general_search(v, s, t, true).transforms.empty());
  }
  MESSAGE("general (2,3,2) transforms found: " << r.transforms.size() << " after " << r.explored << " nodes");
}

TEST_CASE("Bush bound") {
  for (unsigned v : {2U, 3U, 4U, 5U, 7U, 8U, 9U}) {
    CHECK_FALSE(bush_admissible(2, static_cast<int>(v) + 2, v));
    CHECK(bush_admissible(2, static_cast<int>(v) + 1, v));
    CHECK(bush_admissible(1, 50, v));
  }
  CHECK(bush_admissible(3, 8, 6));
  CHECK_FALSE(bush_admissible(3, 9, 6));
  CHECK_FALSE(bush_admissible(3, 7, 5));
  CHECK(bush_admissible(3, 6, 5));
  CHECK(bush_admissible(4, 4, 2));
}
