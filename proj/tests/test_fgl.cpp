#include <catch_amalgamated.hpp>

#include <random>

#include "fglforge/fgl.hpp"
#include "oracles.hpp"

using namespace fglforge;

namespace {

RingPtr zb() { return laurent(integers()); }
RingPtr qb() { return laurent(rationals()); }
Element beta(const RingPtr& r) { return Element::variable(r, "beta"); }

FormalGroupLaw law(const RingPtr& r, int n, const std::vector<std::tuple<int, int, Element>>& terms) {
  Series2 body(r, n);
  body.set(1, 0, Element::one(r));
  body.set(0, 1, Element::one(r));
  for (const auto& [i, j, c] : terms) body.set(i, j, c);
  return FormalGroupLaw(body);
}

const AxiomResult& axiom(const AxiomReport& r, const std::string& name) {
  for (const auto& a : r.axioms)
    if (a.name == name) return a;
  throw std::runtime_error("no axiom " + name);
}

Series q(const oracle::QVec& v) { return Series::from_rationals(rationals(), v); }

}  // namespace

TEST_CASE("named laws") {
  CHECK(fgl_named(NamedLaw::Additive, integers(), 5).to_string() == "x + y");
  CHECK(fgl_named(NamedLaw::Multiplicative, zb(), 5).to_string() == "x + y - beta*x*y");
  CHECK(fgl_named(NamedLaw::HondaH1, integers_mod(2), 5).to_string() == "x + y + x*y");
  CHECK_THROWS_AS(fgl_named(NamedLaw::Multiplicative, integers(), 5), Error);
  CHECK_THROWS_AS(fgl_named(NamedLaw::HondaH1, integers_mod(4), 5), Error);
  for (const auto& f : {fgl_named(NamedLaw::Additive, integers(), 8), fgl_named(NamedLaw::Multiplicative, zb(), 8),
                        fgl_named(NamedLaw::HondaH1, integers_mod(3), 8),
                        fgl_named(NamedLaw::UniversalRational, rationals(), 6)}) {
    CHECK(check_axioms(f).pass());
  }
}

TEST_CASE("axiom failures carry witnesses") {
  const RingPtr z = integers();
  const AxiomReport a = check_axioms(law(z, 3, {{2, 0, Element::one(z)}}));
  CHECK_FALSE(a.pass());
  CHECK_FALSE(axiom(a, "unitality").pass);
  CHECK(axiom(a, "unitality").witness == std::vector<int>{2, 0});

  const AxiomReport s = check_axioms(law(z, 3, {{1, 1, Element::one(z)}, {2, 1, Element::one(z)}}));
  CHECK_FALSE(axiom(s, "symmetry").pass);
  CHECK(axiom(s, "symmetry").witness == std::vector<int>{2, 1});

  const AxiomReport c = check_axioms(law(z, 4, {{3, 1, Element::one(z)}, {1, 3, Element::one(z)}}));
  CHECK(axiom(c, "unitality").pass);
  CHECK(axiom(c, "symmetry").pass);
  CHECK_FALSE(axiom(c, "associativity").pass);
  CHECK_THROWS_AS(validate(law(z, 3, {{2, 0, Element::one(z)}})), Error);
}

TEST_CASE("formal inverse") {
  CHECK(formal_inverse(validate(fgl_named(NamedLaw::Additive, integers(), 5))).to_string() == "-x");
  const FormalGroupLaw m = validate(fgl_named(NamedLaw::Multiplicative, zb(), 6));
  const Series i = formal_inverse(m);
  for (int k = 1; k <= 6; ++k) CHECK(i[k] == -pow(beta(zb()), k - 1));
  CHECK(substitute(m.body(), Series::x(zb(), 6), i).is_zero());
  const FormalGroupLaw u = validate(fgl_named(NamedLaw::UniversalRational, rationals(), 2));
  CHECK(formal_inverse(u).to_string() == "-x - 2*m1*x^2");
  CHECK(substitute(u.body(), Series::x(u.ring(), 2), formal_inverse(u)).is_zero());
}

TEST_CASE("n-series against the binomial closed form") {
  const int n = 10;
  const FormalGroupLaw m = validate(fgl_named(NamedLaw::Multiplicative, zb(), n));
  CHECK(n_series(m, 2).to_string() == "2x - beta*x^2");
  for (int k = -4; k <= 7; ++k) {
    // (1 - (1 - beta x)^k) / beta
    const Series s = n_series(m, k);
    for (int i = 1; i <= n; ++i) {
      const mpz_class c = -oracle::binomial(k, i) * ((i % 2 == 0) ? 1 : -1);
      CHECK(s[i] == Element::integer(zb(), c) * pow(beta(zb()), i - 1));
    }
  }
  const FormalGroupLaw a = validate(fgl_named(NamedLaw::Additive, integers(), 6));
  CHECK(n_series(a, 5).to_string() == "5x");
  CHECK(n_series(m, 0).is_zero());
  CHECK(n_series(validate(fgl_named(NamedLaw::HondaH1, integers_mod(2), 4)), 2).to_string() == "x^2");
}

TEST_CASE("v_n coefficients") {
  const FormalGroupLaw m = validate(fgl_named(NamedLaw::Multiplicative, zb(), 8));
  CHECK(v_coefficient(m, 2, 1) == -beta(zb()));
  CHECK(v_coefficient(m, 3, 1) == pow(beta(zb()), 2));
  CHECK(v_coefficient(m, 7, 0) == Element::integer(zb(), 7));
  const FormalGroupLaw a = validate(fgl_named(NamedLaw::Additive, integers(), 8));
  for (long p : {2L, 3L, 5L, 7L}) CHECK(v_coefficient(a, p, 1).is_zero());
  try {
    v_coefficient(m, 3, 2);
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InsufficientPrecision);
  }
}

TEST_CASE("logarithm and exponential") {
  const FormalGroupLaw m = validate(fgl_named(NamedLaw::Multiplicative, qb(), 3));
  CHECK(fgl_log(m).to_string() == "x + 1/2*beta*x^2 + 1/3*beta^2*x^3");
  CHECK(fgl_log(validate(fgl_named(NamedLaw::Additive, rationals(), 4))) == Series::x(rationals(), 4));
  CHECK_THROWS_AS(fgl_log(validate(fgl_named(NamedLaw::Additive, integers(), 4))), Error);

  CHECK(fgl_exp(Series::x(rationals(), 4)).to_string() == "x + y");
  Series l(qb(), 4);
  for (int i = 1; i <= 4; ++i) l.set(i, Element::rational(qb(), mpq_class(1, i)) * pow(beta(qb()), i - 1));
  CHECK(fgl_exp(l).to_string() == "x + y - beta*x*y");

  std::mt19937 rng(6);
  for (int t = 0; t < 10; ++t) {
    const int n = 6;
    oracle::QVec c = oracle::random_rationals(rng, n);
    c[0] = 0;
    c[1] = 1;
    const FormalGroupLaw f = fgl_exp(q(c));
    const oracle::QMat expected = oracle::law_from_log(c, n);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; i + j <= n; ++j) CHECK(f.coefficient(i, j) == Element::rational(rationals(), expected[i][j]));
    CHECK(check_axioms(f).pass());
    CHECK(fgl_log(validate(f)) == q(c));
  }
  oracle::QVec bad{0, 2, 1};
  CHECK_THROWS_AS(fgl_exp(q(bad)), Error);
}

TEST_CASE("coordinate changes") {
  const FormalGroupLaw a = validate(fgl_named(NamedLaw::Additive, rationals(), 2));
  CHECK(change_coordinates(a, q({0, 1, 1})).to_string() == "x + y + 2x*y");
  const FormalGroupLaw m = validate(fgl_named(NamedLaw::Multiplicative, qb(), 6));
  CHECK(change_coordinates(m, Series::x(qb(), 6)) == m);
  CHECK(change_coordinates(m, fgl_log(m)) == fgl_named(NamedLaw::Additive, qb(), 6));
  CHECK_THROWS_AS(change_coordinates(a, q({1, 1, 0})), Error);

  std::mt19937 rng(8);
  const FormalGroupLaw mz = validate(fgl_named(NamedLaw::Multiplicative, zb(), 6));
  std::uniform_int_distribution<long> d(-3, 3);
  for (int t = 0; t < 10; ++t) {
    Series b(zb(), 6);
    b.set(1, Element::one(zb()));
    for (int i = 2; i <= 6; ++i) b.set(i, Element::integer(zb(), d(rng)) * pow(beta(zb()), i - 1));
    CHECK(check_axioms(change_coordinates(mz, b)).pass());
  }
}

TEST_CASE("grading") {
  const FormalGroupLaw m = fgl_named(NamedLaw::Multiplicative, zb(), 6);
  CHECK(grade_check(m, {{"beta", 1}}));
  CHECK(grade_check(fgl_named(NamedLaw::Additive, integers(), 6), {}));
  CHECK_FALSE(grade_check(m, {{"beta", 2}}));
  CHECK(grading_violation(m, {{"beta", 2}}) == std::optional<std::pair<int, int>>({1, 1}));
}
