#include <catch_amalgamated.hpp>

#include "fglforge/landweber.hpp"
#include "oracles.hpp"

using namespace fglforge;

namespace {

FormalGroupLaw named(NamedLaw n, const RingPtr& r, int precision = 10) { return validate(fgl_named(n, r, precision)); }

}  // namespace

TEST_CASE("multiplicative law over Z[beta^+-1] has height 1 everywhere") {
  const LandweberReport r = landweber_check({named(NamedLaw::Multiplicative, laurent(integers())), std::nullopt, {2, 3, 5, 7}, 3});
  CHECK(r.exact());
  for (const auto& p : r.primes) {
    CHECK(p.verdict == PrimeVerdict::ExactHeight);
    CHECK(p.height == 1);
    REQUIRE(p.stages.size() == 3);
    CHECK(p.stages[0].status == StageStatus::Injective);
    CHECK(p.stages[1].status == StageStatus::Injective);
    CHECK(p.stages[2].status == StageStatus::QuotientZero);
    CHECK(p.stages[1].v->to_string() == (p.prime == 2 ? "beta" : "beta^" + std::to_string(p.prime - 1)));
  }
}

TEST_CASE("additive laws") {
  const LandweberReport z = landweber_check({named(NamedLaw::Additive, integers()), std::nullopt, {2, 3, 5, 7}, 2});
  CHECK_FALSE(z.exact());
  for (const auto& p : z.primes) {
    CHECK(p.verdict == PrimeVerdict::Fails);
    CHECK(p.height == 1);
    CHECK(p.stages.back().witness->to_string() == "1");
  }
  const LandweberReport q = landweber_check({named(NamedLaw::Additive, rationals()), std::nullopt, {2, 3, 5, 7}, 2});
  CHECK(q.exact());
  for (const auto& p : q.primes) CHECK((p.verdict == PrimeVerdict::ExactHeight && p.height == 0));
  for (long p : {2L, 3L, 5L, 7L}) {
    const LandweberReport f = landweber_check({named(NamedLaw::Additive, integers_mod(p)), std::nullopt, {p}, 2});
    CHECK(f.primes[0].verdict == PrimeVerdict::Fails);
    CHECK(f.primes[0].height == 0);
  }
}

TEST_CASE("additive laws over Z/m against brute force") {
  // v_0 = p and v_1 = 0, so the verdict is decided by whether p is a zero divisor mod m
  for (long m = 2; m <= 40; ++m) {
    const LandweberReport r = landweber_check({named(NamedLaw::Additive, integers_mod(m)), std::nullopt, {2, 3, 5, 7}, 2});
    for (const auto& p : r.primes) {
      INFO("m = " << m << ", p = " << p.prime);
      if (oracle::zero_divisor_mod(p.prime, m)) {
        CHECK(p.verdict == PrimeVerdict::Fails);
        CHECK(p.height == 0);
      } else {
        CHECK(p.verdict == PrimeVerdict::ExactHeight);
        CHECK(oracle::unit_mod(p.prime, m));
        CHECK(p.height == 0);
      }
    }
  }
}

TEST_CASE("quotient modules and parallel evaluation") {
  const FormalGroupLaw m = named(NamedLaw::Multiplicative, laurent(integers()));
  const Element three = Element::integer(m.ring(), 3);
  const LandweberReport r = landweber_check({m, three, {2, 3}, 1});
  CHECK(r.primes[0].verdict == PrimeVerdict::ExactHeight);
  CHECK(r.primes[0].height == 0);
  CHECK(r.primes[1].verdict == PrimeVerdict::Fails);

  const LandweberReport a = landweber_check({m, std::nullopt, {7, 2, 5, 3, 2}, 2, true});
  const LandweberReport b = landweber_check({m, std::nullopt, {2, 3, 5, 7}, 2, false});
  REQUIRE(a.primes.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(a.primes[i].prime == b.primes[i].prime);
    CHECK(a.primes[i].height == b.primes[i].height);
    CHECK(a.primes[i].stages.size() == b.primes[i].stages.size());
  }
}

TEST_CASE("input errors") {
  auto code = [](const LandweberInput& in) {
    try {
      landweber_check(in);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Io;
  };
  const FormalGroupLaw m1 = named(NamedLaw::Multiplicative, laurent(integers()), 1);
  CHECK(code({m1, std::nullopt, {2}, 2}) == ErrorCode::InsufficientPrecision);
  CHECK(code({FormalGroupLaw(fgl_named(NamedLaw::Additive, integers(), 4).body()), std::nullopt, {2}, 1}) == ErrorCode::NotValidated);
  CHECK(code({named(NamedLaw::Additive, integers()), std::nullopt, {4}, 1}) == ErrorCode::InvalidArgument);
}

TEST_CASE("v-sequence report") {
  const auto m = v_sequence_report(named(NamedLaw::Multiplicative, laurent(integers()), 4), 2, 2);
  REQUIRE(m.size() == 3);
  CHECK(m[0].v.to_string() == "2");
  CHECK(m[1].v.to_string() == "-beta");
  CHECK(m[2].v.is_zero());
  CHECK(m[2].degree == 3);
  for (const auto& e : m) CHECK(e.homogeneous.value_or(false));
  const auto a = v_sequence_report(named(NamedLaw::Additive, integers(), 3), 3, 1);
  CHECK(a[0].v.to_string() == "3");
  CHECK(a[1].v.is_zero());
  CHECK(a[1].degree == 2);
  const auto h = v_sequence_report(named(NamedLaw::HondaH1, integers_mod(2), 2), 2, 1);
  CHECK(h[0].v.is_zero());
  CHECK(h[1].v.to_string() == "1");
  CHECK_THROWS_AS(v_sequence_report(named(NamedLaw::Additive, integers(), 3), 2, 2), Error);
}
