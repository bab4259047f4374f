#include <catch_amalgamated.hpp>

#include <random>

#include "fglforge/series.hpp"
#include "oracles.hpp"

using namespace fglforge;

namespace {

Series q(const oracle::QVec& v) { return Series::from_rationals(rationals(), v); }
Series z(std::vector<long> v) {
  oracle::QVec c(v.begin(), v.end());
  return Series::from_rationals(integers(), c);
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Io;
}

}  // namespace

TEST_CASE("series arithmetic") {
  CHECK(z({1, 1, 0, 0, 0}) * z({1, -1, 0, 0, 0}) == z({1, 0, -1, 0, 0}));
  CHECK(z({0, 1, 1, 0}) * z({0, 1, 1, 0}) == z({0, 0, 1, 2}));
  const RingPtr zb = laurent(integers());
  const Element b = Element::variable(zb, "beta");
  Series f(zb, 2);
  f.set(1, Element::one(zb));
  f.set(2, -b);
  const Series g = b * f;
  CHECK(g.to_string() == "beta*x - beta^2*x^2");
  CHECK(f.to_string() == "x - beta*x^2");
  CHECK(z({0, 2, -1}).to_string() == "2x - x^2");
  CHECK_THROWS_AS(f + z({0, 1, 0}), Error);
}

TEST_CASE("composition") {
  CHECK(compose(z({0, 0, 1, 0, 0}), z({0, 1, 0, 1, 0})) == z({0, 0, 1, 0, 2}));
  CHECK(compose(z({1, 1, 1, 1, 1}), z({0, 0, 1, 0, 0})) == z({1, 0, 1, 0, 1}));
  const Series f = z({3, 1, -2, 5});
  CHECK(compose(f, Series::x(integers(), 3)) == f);
  CHECK(code_of([&] { compose(f, z({1, 1, 0, 0})); }) == ErrorCode::NonzeroConstantTerm);

  std::mt19937 rng(1);
  for (int t = 0; t < 30; ++t) {
    const int n = 8;
    oracle::QVec a = oracle::random_rationals(rng, n), c = oracle::random_rationals(rng, n);
    c[0] = 0;
    CHECK(compose(q(a), q(c)) == q(oracle::compose(a, c, n)));
  }
}

TEST_CASE("reversion against Lagrange inversion") {
  CHECK(revert(Series::x(integers(), 5)) == Series::x(integers(), 5));
  CHECK(revert(z({0, 1, 1, 0, 0})) == z({0, 1, -1, 2, -5}));
  const RingPtr zb = laurent(integers());
  const Element b = Element::variable(zb, "beta");
  Series f(zb, 3);
  f.set(1, Element::one(zb));
  f.set(2, b);
  CHECK(revert(f).to_string() == "x - beta*x^2 + 2*beta^2*x^3");
  CHECK(code_of([] { revert(z({0, 2, 1})); }) == ErrorCode::NonUnitLinearCoefficient);
  CHECK(code_of([] { revert(z({1, 1, 1})); }) == ErrorCode::NonzeroConstantTerm);

  std::mt19937 rng(2);
  for (int t = 0; t < 40; ++t) {
    const int n = 3 + t % 8;
    oracle::QVec a = oracle::random_rationals(rng, n);
    a[0] = 0;
    if (a[1] == 0) a[1] = 1;
    const Series r = revert(q(a));
    CHECK(r == q(oracle::lagrange_revert(a, n)));
    CHECK(compose(q(a), r) == Series::x(rationals(), n));
    CHECK(compose(r, q(a)) == Series::x(rationals(), n));
  }
}

TEST_CASE("derivative and antiderivative") {
  CHECK(derive(z({0, 0, 0, 1})) == z({0, 0, 3}));
  CHECK(derive(z({1, 0})) == z({0}));
  oracle::QVec log{0};
  for (int i = 1; i <= 5; ++i) log.emplace_back(1, i);
  CHECK(derive(q(log)) == coerce(z({1, 1, 1, 1, 1}), rationals()));
  CHECK(integrate(coerce(z({1, 1, 1, 1, 1}), rationals())) == q(log));
  CHECK(code_of([] { integrate(z({1, 1})); }) == ErrorCode::NotRepresentable);
  CHECK(code_of([] { derive(z({1})); }) == ErrorCode::InsufficientPrecision);
}

TEST_CASE("reciprocal and powers") {
  std::mt19937 rng(9);
  for (int t = 0; t < 20; ++t) {
    oracle::QVec a = oracle::random_rationals(rng, 7);
    if (a[0] == 0) a[0] = 2;
    CHECK(reciprocal(q(a)) * q(a) == Series::constant(Element::one(rationals()), 7));
    CHECK(pow(q(a), 3) == q(oracle::power(a, 3, 7)));
  }
}

TEST_CASE("bivariate series") {
  std::mt19937 rng(4);
  const int n = 6;
  for (int t = 0; t < 10; ++t) {
    oracle::QVec f = oracle::random_rationals(rng, n), g = oracle::random_rationals(rng, n);
    f[0] = 0;
    g[0] = 0;
    oracle::QMat s(n + 1, oracle::QVec(n + 1));
    for (int i = 0; i <= n; ++i)
      for (int j = 0; i + j <= n; ++j) s[i][j] = f[i] * (j == 0 ? 1 : 0) + g[j] * (i == 0 ? 1 : 0) + mpq_class(i * j, 1);
    Series2 s2(rationals(), n);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; i + j <= n; ++j) s2.set(i, j, Element::rational(rationals(), s[i][j]));
    const oracle::QVec h = oracle::random_rationals(rng, n);
    const oracle::QMat expected = oracle::compose2(h, s, n);
    const Series2 got = compose(q(h), s2);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; i + j <= n; ++j) CHECK(got.at(i, j) == Element::rational(rationals(), expected[i][j]));
    CHECK(s2.swapped().swapped() == s2);
  }
}
