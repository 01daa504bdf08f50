#include <set>
#include <stdexcept>

#include "aont/field.hpp"
#include "doctest.h"
#include "oracles.hpp"

using aont::Element;
using aont::Field;

namespace {

const std::vector<std::pair<unsigned, unsigned>> kSmallFields{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3},
                                                              {3, 2}, {11, 1}, {13, 1}, {2, 4}};

}  // namespace

TEST_CASE("default moduli") {
  CHECK(Field::make(2, 2)->modulus() == 7);
  CHECK(Field::make(3, 2)->modulus() == 10);
  CHECK(Field::make(2, 3)->modulus() == 11);
  CHECK(Field::make(2, 2, 7)->designation() == "2^2/7");
  CHECK(Field::make(3, 2, 10)->q() == 9);
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(Field(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(Field(2, 2, 4), std::invalid_argument);  // x^2 = x * x
  CHECK_THROWS_AS(Field(2, 2, 5), std::invalid_argument);  // x^2 + 1 = (x + 1)^2
  CHECK_THROWS_AS(Field(2, 2, 11), std::invalid_argument);  // degree 3
  CHECK_THROWS_AS(Field(2, 9), std::invalid_argument);
  CHECK_THROWS_AS(Field(3, 0), std::invalid_argument);
}

TEST_CASE("designation parsing") {
  CHECK(Field::parse("9")->designation() == "3^2/10");
  CHECK(Field::parse("3^2")->designation() == "3^2/10");
  CHECK(Field::parse("3^2/17")->modulus() == 17);
  CHECK(Field::parse("7")->q() == 7);
  CHECK_THROWS(Field::parse("6"));
  CHECK_THROWS(Field::parse("abc"));
  CHECK_THROWS(Field::parse("2^2/4"));
  for (auto [p, n] : kSmallFields) {
    const auto f = Field::make(p, n);
    CHECK(Field::parse(f->designation())->designation() == f->designation());
  }
}

TEST_CASE("point values") {
  CHECK(Field::make(5, 1)->add(Element{3}, Element{4}) == Element{2});
  CHECK(Field::make(2, 2)->mul(Element{2}, Element{2}) == Element{3});
  for (auto [p, n] : kSmallFields) CHECK(Field::make(p, n)->inv(Element{1}) == Element{1});
  CHECK_THROWS_AS(Field::make(5, 1)->inv(Element{0}), std::domain_error);
}

TEST_CASE("arithmetic agrees with schoolbook polynomial oracle") {
  for (auto [p, n] : kSmallFields) {
    const auto f = Field::make(p, n);
    const oracle::Gf o(p, n, n == 1 ? p : f->modulus());
    CAPTURE(f->designation());
    for (unsigned a = 0; a < f->q(); ++a) {
      for (unsigned b = 0; b < f->q(); ++b) {
        CHECK(f->add(Element{a}, Element{b}).code == o.add(a, b));
        CHECK(f->sub(Element{a}, Element{b}).code == o.sub(a, b));
        CHECK(f->mul(Element{a}, Element{b}).code == o.mul(a, b));
      }
    }
  }
}

TEST_CASE("field axioms for every q <= 16") {
  for (unsigned q = 2; q <= 16; ++q) {
    unsigned p = 0, n = 0;
    for (unsigned cand = 2; cand <= q && p == 0; ++cand) {
      unsigned x = 1, k = 0;
      while (x < q) {
        x *= cand;
        ++k;
      }
      if (x == q && aont::is_prime(cand)) p = cand, n = k;
    }
    if (p == 0) continue;
    const auto f = Field::make(p, n);
    CAPTURE(q);
    for (unsigned a = 0; a < q; ++a) {
      const Element ea{a};
      CHECK(f->add(ea, f->zero()) == ea);
      CHECK(f->mul(ea, f->one()) == ea);
      CHECK(f->add(ea, f->neg(ea)) == f->zero());
      if (a != 0) {
        CHECK(f->mul(ea, f->inv(ea)) == f->one());
        CHECK(f->pow(ea, q - 1) == f->one());
      }
      for (unsigned b = 0; b < q; ++b) {
        const Element eb{b};
        CHECK(f->add(ea, eb) == f->add(eb, ea));
        CHECK(f->mul(ea, eb) == f->mul(eb, ea));
        for (unsigned c = 0; c < q; ++c) {
          const Element ec{c};
          CHECK(f->mul(ea, f->add(eb, ec)) == f->add(f->mul(ea, eb), f->mul(ea, ec)));
          CHECK(f->mul(f->mul(ea, eb), ec) == f->mul(ea, f->mul(eb, ec)));
          CHECK(f->add(f->add(ea, eb), ec) == f->add(ea, f->add(eb, ec)));
        }
      }
    }
  }
}

TEST_CASE("sum of all elements vanishes exactly when q > 2") {
  CHECK(Field::make(5, 1)->sum_all_elements() == Element{0});
  CHECK(Field::make(2, 1)->sum_all_elements() == Element{1});
  CHECK(Field::make(2, 2)->sum_all_elements() == Element{0});
  for (auto [p, n] : kSmallFields) {
    const auto f = Field::make(p, n);
    CHECK((f->sum_all_elements() == Element{0}) == (f->q() > 2));
  }
}

TEST_CASE("primitive element is the smallest code of full order") {
  CHECK(Field::make(7, 1)->primitive_element() == Element{3});
  CHECK(Field::make(2, 1)->primitive_element() == Element{1});
  CHECK(Field::make(2, 3)->primitive_element() == Element{2});
  for (auto [p, n] : kSmallFields) {
    const auto f = Field::make(p, n);
    const oracle::Gf o(p, n, n == 1 ? p : f->modulus());
    unsigned expected = 0;
    for (unsigned a = 1; a < f->q() && expected == 0; ++a) {
      if (o.order(a) == f->q() - 1) expected = a;
    }
    CHECK(f->primitive_element().code == expected);
  }
}

TEST_CASE("polynomial encoding round trip") {
  for (auto [p, n] : kSmallFields) {
    for (unsigned code = 0; code < 300; ++code) {
      CHECK(aont::poly::encode(aont::poly::digits(code, p), p) == code);
    }
  }
}

TEST_CASE("irreducibility by trial division") {
  // Degree-2 monic irreducibles over GF(3): x^2+1, x^2+x+2, x^2+2x+2.
  std::set<unsigned long long> found;
  for (unsigned code = 9; code < 18; ++code) {
    if (aont::poly::is_irreducible(code, 3)) found.insert(code);
  }
  CHECK(found == std::set<unsigned long long>{10, 14, 17});
}

TEST_CASE("element orders") {
  const auto nat = aont::ElementOrder::natural(5);
  const auto rev = aont::ElementOrder::reversed(5);
  CHECK(nat.is_natural());
  CHECK_FALSE(rev.is_natural());
  CHECK(rev.sequence() == std::vector<std::uint8_t>{0, 4, 3, 2, 1});
  CHECK(rev.less(Element{0}, Element{4}));
  CHECK(rev.less(Element{4}, Element{1}));
  CHECK(nat.less(Element{1}, Element{4}));
  const auto rot = aont::ElementOrder::from_sequence({0, 2, 3, 4, 1});
  CHECK(rot.rank(Element{1}) == 4);
  CHECK_THROWS_AS(aont::ElementOrder::from_sequence({1, 0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(aont::ElementOrder::from_sequence({0, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(aont::ElementOrder::from_sequence({0, 3, 1}), std::invalid_argument);
}
