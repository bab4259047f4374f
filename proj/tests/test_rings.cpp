#include <catch_amalgamated.hpp>

#include <random>

#include "fglforge/rings.hpp"
#include "oracles.hpp"

using namespace fglforge;

namespace {

Element beta_in(const RingPtr& r) { return Element::variable(r, "beta"); }

Element random_laurent(std::mt19937& rng, const RingPtr& r, int lo = -2, int hi = 2) {
  std::uniform_int_distribution<long> c(-4, 4);
  Element out = Element::zero(r);
  const Element b = beta_in(r);
  for (int e = lo; e <= hi; ++e) out += Element::integer(r, c(rng)) * pow(b, e);
  return out;
}

}  // namespace

TEST_CASE("integer and Laurent arithmetic") {
  const RingPtr z = integers();
  CHECK(Element::integer(z, 2) + Element::integer(z, 3) == Element::integer(z, 5));
  const RingPtr zb = laurent(z);
  const Element b = beta_in(zb);
  CHECK(b * pow(b, -1) == Element::one(zb));
  CHECK((b + Element::one(zb)) * (b - Element::one(zb)) == pow(b, 2) - Element::one(zb));
  CHECK(pow(b, -2).to_string() == "beta^-2");
}

TEST_CASE("monomials over a prime field are units") {
  for (long p : {2L, 3L, 5L, 7L}) {
    const RingPtr fb = laurent(integers_mod(p));
    const Element m = pow(beta_in(fb), p - 1);
    CHECK(is_unit(m));
    CHECK(inverse(m) * m == Element::one(fb));
    CHECK_FALSE(is_zero_divisor(m));
  }
}

TEST_CASE("zero divisors in Z/m agree with brute force") {
  for (long m = 2; m <= 60; ++m) {
    const RingPtr r = integers_mod(m);
    for (long a = 0; a < m; ++a) {
      const Element e = Element::integer(r, a);
      const auto w = annihilator_witness(e);
      INFO("a = " << a << ", m = " << m);
      CHECK(w.has_value() == oracle::zero_divisor_mod(a, m));
      if (w) {
        CHECK_FALSE(w->is_zero());
        CHECK((e * *w).is_zero());
      }
      CHECK(is_unit(e) == oracle::unit_mod(a, m));
    }
  }
  CHECK(is_zero_divisor(Element::integer(integers_mod(6), 2)));
  CHECK_FALSE(is_zero_divisor(Element::integer(integers(), 5)));
  CHECK(is_zero_divisor(Element::zero(integers())));
}

TEST_CASE("units of Laurent polynomials over Z/m invert exactly") {
  std::mt19937 rng(11);
  for (long m : {4L, 6L, 12L, 30L}) {
    const RingPtr r = laurent(integers_mod(m));
    int units = 0;
    for (int t = 0; t < 300; ++t) {
      const Element a = random_laurent(rng, r, -1, 2);
      if (is_unit(a)) {
        ++units;
        CHECK(a * inverse(a) == Element::one(r));
        CHECK_FALSE(is_zero_divisor(a));
      } else {
        CHECK_THROWS_AS(inverse(a), Error);
      }
    }
    CHECK(units > 0);
  }
  const RingPtr z6 = laurent(integers_mod(6));
  const Element b = beta_in(z6);
  const Element a = Element::integer(z6, 4) * pow(b, 2) + Element::integer(z6, 3) * b;
  CHECK(inverse(a) == Element::integer(z6, 3) * pow(b, -1) + Element::integer(z6, 4) * pow(b, -2));
  CHECK_FALSE(is_unit(Element::integer(z6, 2) * pow(b, 2) + Element::integer(z6, 3) * b + Element::integer(z6, 2)));
}

TEST_CASE("quotients by principal ideals") {
  const RingPtr z = integers();
  const RingPtr fp = quotient_by_element(z, Element::integer(z, 5));
  CHECK(Element::integer(fp, 7) == Element::integer(fp, 2));
  CHECK(is_field(fp));
  CHECK(inverse(Element::integer(fp, 2)) == Element::integer(fp, 3));

  const RingPtr zb = laurent(z);
  const RingPtr fb = quotient_by_element(zb, Element::integer(zb, 3));
  const Element b = Element::variable(fb, "beta");
  CHECK(Element::integer(fb, 4) * b == b);
  CHECK(is_unit(b));

  for (long p : {2L, 3L, 5L}) {
    const RingPtr f = laurent(integers_mod(p));
    CHECK(is_zero_ring(quotient_by_element(f, pow(beta_in(f), p - 1))));
  }
  CHECK_FALSE(is_zero_ring(z));
  CHECK(is_zero_ring(integers_mod(1)));
  const RingPtr f2 = laurent(integers_mod(2));
  CHECK(is_zero_ring(quotient_by_element(f2, beta_in(f2))));
  CHECK_FALSE(is_zero_ring(quotient_by_element(f2, beta_in(f2) + Element::one(f2))));
  CHECK(is_zero_ring(quotient_by_element(rationals(), Element::integer(rationals(), 7))));
  CHECK_FALSE(is_zero_ring(quotient_by_element(p_local(3), Element::integer(p_local(3), 9))));
}

TEST_CASE("non-monomial quotients of Laurent rings over a field") {
  const RingPtr f = laurent(integers_mod(5));
  const Element b = beta_in(f);
  const Element g = pow(b, 2) + Element::one(f);  // (beta - 2)(beta + 2) over F_5
  const RingPtr q = quotient_by_element(f, g);
  const Element bq = Element::variable(q, "beta");
  CHECK(pow(bq, 2) == Element::integer(q, -1));
  CHECK(pow(bq, 4) == Element::one(q));
  CHECK(is_zero_divisor(bq - Element::integer(q, 2)));
  CHECK_FALSE(is_zero_divisor(bq));
}

TEST_CASE("p-local integers") {
  const RingPtr z2 = p_local(2);
  CHECK(is_unit(Element::rational(z2, mpq_class(1, 3))));
  CHECK_FALSE(is_unit(Element::integer(z2, 6)));
  CHECK_THROWS_AS(Element::rational(z2, mpq_class(1, 2)), Error);
  CHECK_THROWS_AS(p_local(4), Error);
}

TEST_CASE("ring axioms on random elements") {
  std::mt19937 rng(3);
  const std::vector<RingPtr> rings{laurent(integers()), laurent(integers_mod(12)), laurent(rationals()),
                                   quotient_by_element(laurent(integers()), Element::integer(laurent(integers()), 4))};
  for (const auto& r : rings) {
    for (int t = 0; t < 40; ++t) {
      const Element a = random_laurent(rng, r), b = random_laurent(rng, r), c = random_laurent(rng, r);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == Element::zero(r));
    }
  }
}

TEST_CASE("mixing rings is an error") {
  CHECK_THROWS_AS(Element::one(integers()) + Element::one(rationals()), Error);
  try {
    (void)(Element::one(integers()) * Element::one(laurent(integers())));
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RingMismatch);
  }
}

TEST_CASE("graded polynomial rings and homogeneity") {
  const RingPtr q = polynomial(rationals(), {{"m1", 1}, {"m2", 2}});
  const Element m1 = Element::variable(q, "m1"), m2 = Element::variable(q, "m2");
  const Homogeneity h = homogeneity(m1 * m1 - m2, declared_degrees(q));
  CHECK(h.homogeneous);
  CHECK(h.degree == 2);
  CHECK_FALSE(homogeneity(m1 + m2, declared_degrees(q)).homogeneous);
  CHECK((m1 + m2) * (m1 - m2) == m1 * m1 - m2 * m2);
}
