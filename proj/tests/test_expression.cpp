#include <catch_amalgamated.hpp>

#include <random>

#include "fglforge/expression.hpp"

using namespace fglforge;

namespace {

ErrorCode code_of(const std::string& src, const RingPtr& r) {
  try {
    parse_expression(src, r);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error for " << src);
  return ErrorCode::Io;
}

}  // namespace

TEST_CASE("literals, variables and powers") {
  const RingPtr zb = laurent(integers());
  const Element b = Element::variable(zb, "beta");
  CHECK(parse_expression("-beta", zb) == -b);
  CHECK(parse_expression("-beta^2", zb) == -(b * b));
  CHECK(parse_expression("(beta + 1)^2", zb) == b * b + b + b + Element::one(zb));
  CHECK(parse_expression("2*beta^-1 - 3", zb) == Element::integer(zb, 2) * pow(b, -1) - Element::integer(zb, 3));
  const RingPtr qb = laurent(rationals());
  CHECK(parse_expression("3/4 * beta^-2", qb) == Element::rational(qb, mpq_class(3, 4)) * pow(Element::variable(qb, "beta"), -2));
  CHECK(parse_expression("beta^(-2)", qb) == pow(Element::variable(qb, "beta"), -2));
}

TEST_CASE("parse errors") {
  const RingPtr zb = laurent(integers());
  CHECK(code_of("beta^(1/2)", zb) == ErrorCode::NonIntegerExponent);
  CHECK(code_of("gamma + 1", zb) == ErrorCode::UnknownVariable);
  CHECK(code_of("1 +", zb) == ErrorCode::SyntaxError);
  CHECK(code_of("(beta", zb) == ErrorCode::SyntaxError);
  CHECK(code_of("1/2", zb) == ErrorCode::NotRepresentable);
  try {
    parse_expression("1 +\n  * 2", zb);
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 2, column 3") != std::string::npos);
  }
}

TEST_CASE("print then parse is the identity") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> c(-5, 5);
  const RingPtr poly = polynomial(rationals(), {{"m1", 1}, {"m2", 2}});
  const RingPtr zb = laurent(integers());
  const std::vector<RingPtr> rings{zb, laurent(rationals()), laurent(integers_mod(6)),
                                   quotient_by_element(zb, Element::integer(zb, 4)), poly};
  for (const auto& r : rings) {
    const bool lau = r->kind() != RingKind::Polynomial;
    for (int t = 0; t < 50; ++t) {
      Element a = Element::zero(r);
      for (int e = -2; e <= 2; ++e) {
        if (lau) {
          a += Element::rational(r, r->kind() == RingKind::Laurent && r->base()->kind() == RingKind::Rationals
                                        ? mpq_class(c(rng), 3)
                                        : mpq_class(c(rng))) *
               pow(Element::variable(r, "beta"), e);
        } else if (e >= 0) {
          a += Element::rational(r, mpq_class(c(rng), 2)) * pow(Element::variable(r, "m1"), e) *
               Element::variable(r, "m2");
        }
      }
      const std::string printed = a.to_string();
      const Element back = parse_expression(printed, r);
      CHECK(back == a);
      CHECK(back.to_string() == printed);
    }
  }
}
