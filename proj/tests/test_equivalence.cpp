#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "aont/constructions.hpp"
#include "aont/equivalence.hpp"
#include "aont/search.hpp"
#include "doctest.h"

using namespace aont;

namespace {

// Every reduced matrix equivalent to m, by brute force: each row
// permutation, column permutation and optional transpose that puts zeros
// on the diagonal, followed by every border-fixing diagonal scaling.
std::set<Matrix> brute_force_class(const Matrix& m) {
  const Field& f = m.field();
  const int s = m.size();
  std::set<Matrix> out;
  std::vector<int> rows(static_cast<std::size_t>(s));
  std::vector<int> cols(static_cast<std::size_t>(s));
  for (const Matrix& base : {m, m.transposed()}) {
    std::iota(rows.begin(), rows.end(), 0);
    do {
      std::iota(cols.begin(), cols.end(), 0);
      do {
        bool zero_diag = true;
        for (int i = 0; i < s; ++i) zero_diag = zero_diag && base.at(rows[i], cols[i]).code == 0;
        if (!zero_diag) continue;
        // With row scalars r and column scalars c, the border becomes all
        // ones exactly when c_j = 1/(r_0 m_0j) and r_i = 1/(c_0 m_i0); the
        // remaining freedom is g = 1/(r_0 c_0).
        for (unsigned g = 1; g < f.q(); ++g) {
          Matrix cand = base;
          for (int i = 0; i < s; ++i) {
            for (int j = 0; j < s; ++j) {
              const Element e = base.at(rows[i], cols[j]);
              Element v = e;
              if (i > 0 && j > 0 && e.code != 0) {
                const Element denom = f.mul(base.at(rows[i], cols[0]), base.at(rows[0], cols[j]));
                v = f.mul(Element{g}, f.mul(e, f.inv(denom)));
              } else if (e.code != 0) {
                v = Element{1};
              }
              cand.set(i, j, v);
            }
          }
          if (is_reduced(cand)) out.insert(cand);
        }
      } while (std::next_permutation(cols.begin(), cols.end()));
    } while (std::next_permutation(rows.begin(), rows.end()));
  }
  return out;
}

}  // namespace

TEST_CASE("generated set contains the seed") {
  const auto e1 = builtin_example("E1");
  const auto set = equivalent_reduced_set(e1);
  CHECK(std::find(set.begin(), set.end(), e1) != set.end());
  for (const auto& name : builtin_example_names()) {
    const auto m = builtin_example(name);
    if (m.size() != static_cast<int>(m.field().q())) continue;
    const auto s = equivalent_reduced_set(m);
    CHECK(std::find(s.begin(), s.end(), m) != s.end());
    CHECK(s.size() <= static_cast<std::size_t>(2 * m.size() * m.size() - 2 * m.size()));
    for (const auto& e : s) {
      CHECK(is_reduced(e));
      CHECK(is_linear_aont(e, 2));
    }
  }
  CHECK_THROWS_AS(equivalent_reduced_set(identity_matrix(Field::make(3, 1), 3)), std::invalid_argument);
}

TEST_CASE("GF(3) reduced matrices form one class") {
  const auto r = search_reduced(Field::parse("3"));
  REQUIRE(r.matrices.size() == 2);
  CHECK(are_equivalent(r.matrices[0], r.matrices[1]));
  CHECK(are_equivalent(r.matrices[1], r.matrices[0]));
  // Row and column moves alone keep them apart; scaling the interior joins them.
  const auto literal = equivalent_reduced_set(r.matrices[0]);
  CHECK_FALSE(std::binary_search(literal.begin(), literal.end(), r.matrices[1]));
  const auto scaled = interior_scaled_set(r.matrices[0]);
  CHECK(std::binary_search(scaled.begin(), scaled.end(), r.matrices[1]));
  CHECK(classify(r.matrices, false).classes.size() == 2);
  CHECK(classify(r.matrices).classes.size() == 1);
}

TEST_CASE("classification partitions its input") {
  for (const char* name : {"3", "4", "5", "7"}) {
    CAPTURE(name);
    const auto r = search_reduced(Field::parse(name));
    for (bool scale : {true, false}) {
      const auto c = classify(r.matrices, scale);
      std::size_t total = 0;
      std::set<Matrix> seen;
      for (std::size_t i = 0; i < c.classes.size(); ++i) {
        const auto& cls = c.classes[i];
        total += cls.members.size();
        CHECK(cls.representative == cls.members.front());
        CHECK(std::is_sorted(cls.members.begin(), cls.members.end()));
        for (const auto& m : cls.members) CHECK(seen.insert(m).second);
        if (i > 0) CHECK(c.classes[i - 1].representative < cls.representative);
        CHECK(c.closure_sizes[i] >= cls.members.size());
      }
      CHECK(total == r.matrices.size());
    }
  }
}

TEST_CASE("generated sets are symmetric and members share a closure") {
  for (const char* name : {"3", "4", "5"}) {
    const auto r = search_reduced(Field::parse(name));
    for (const auto& m : r.matrices) {
      for (const auto& e : equivalent_reduced_set(m)) {
        const auto back = equivalent_reduced_set(e);
        CHECK(std::binary_search(back.begin(), back.end(), m));
      }
    }
    const auto c = classify(r.matrices);
    for (const auto& cls : c.classes) {
      const auto other = classify(cls.members);
      CHECK(other.classes.size() == 1);
    }
  }
}

TEST_CASE("classes match brute-force equivalence for q <= 5") {
  for (const char* name : {"3", "4", "5"}) {
    CAPTURE(name);
    const auto r = search_reduced(Field::parse(name));
    const auto c = classify(r.matrices);
    for (const auto& cls : c.classes) {
      const auto brute = brute_force_class(cls.representative);
      CHECK(brute == std::set<Matrix>(cls.members.begin(), cls.members.end()));
    }
  }
}

TEST_CASE("are_equivalent") {
  const auto e1 = builtin_example("E1");
  CHECK(are_equivalent(e1, e1));
  const auto c = classify(search_reduced(Field::parse("5")).matrices);
  const auto e3 = builtin_example("E3");
  int hits = 0;
  for (const auto& cls : c.classes) hits += are_equivalent(e3, cls.representative);
  CHECK(hits == 1);
  const auto closure = equivalence_closure(e3);
  CHECK(std::binary_search(closure.begin(), closure.end(), e3));
}

TEST_CASE("class counts") {
  CHECK(classify(search_reduced(Field::parse("4")).matrices).classes.size() == 2);
  CHECK(classify(search_reduced(Field::parse("5")).matrices).classes.size() == 5);
  CHECK(classify(search_reduced(Field::parse("7")).matrices).classes.size() == 1);
  CHECK(classify(std::vector<Matrix>{}).classes.empty());
}

TEST_CASE("interior scaling stays reduced") {
  const auto e3 = builtin_example("E3");
  const auto s = interior_scaled_set(e3);
  CHECK(std::binary_search(s.begin(), s.end(), e3));
  for (const auto& m : s) CHECK(is_linear_aont(m, 2));
}

TEST_CASE("mixed fields are rejected") {
  CHECK_THROWS_AS(are_equivalent(builtin_example("E1"), builtin_example("E3")), std::invalid_argument);
  CHECK_THROWS_AS(classify(std::vector<Matrix>{builtin_example("E1"), builtin_example("E3")}), std::invalid_argument);
}
