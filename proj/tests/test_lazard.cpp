#include <catch_amalgamated.hpp>

#include <random>

#include "fglforge/lazard.hpp"
#include "oracles.hpp"

using namespace fglforge;

namespace {

Element var(const RingPtr& r, const std::string& n) { return Element::variable(r, n); }

}  // namespace

TEST_CASE("monomial counts are partition numbers") {
  const RingPtr a = lazard_ring_rational(10);
  for (int d = 1; d <= 10; ++d) CHECK(static_cast<long>(monomials_of_degree(a->generators(), d).size()) == oracle::partitions(d));
}

TEST_CASE("universal law") {
  const FormalGroupLaw u2 = universal_fgl_rational(2);
  CHECK(u2.coefficient(1, 1) == Element::integer(u2.ring(), -2) * var(u2.ring(), "m1"));
  const FormalGroupLaw u = universal_fgl_rational(7);
  CHECK(check_axioms(u).pass());

  const std::vector<Element> zeros(6, Element::zero(rationals()));
  CHECK(push_forward(u.body(), zeros, rationals()) == fgl_named(NamedLaw::Additive, rationals(), 7).body());

  const RingPtr qb = laurent(rationals());
  std::vector<Element> images;
  for (int i = 1; i <= 6; ++i) images.push_back(Element::rational(qb, mpq_class(1, i + 1)) * pow(var(qb, "beta"), i));
  CHECK(push_forward(u.body(), images, qb) == fgl_named(NamedLaw::Multiplicative, qb, 7).body());
}

TEST_CASE("classification") {
  const RingPtr qb = laurent(rationals());
  const auto m = classify_rational(validate(fgl_named(NamedLaw::Multiplicative, qb, 4)));
  REQUIRE(m.size() == 3);
  CHECK(m[0].to_string() == "1/2*beta");
  CHECK(m[1].to_string() == "1/3*beta^2");
  for (const auto& e : classify_rational(validate(fgl_named(NamedLaw::Additive, rationals(), 6)))) CHECK(e.is_zero());
  CHECK_THROWS_AS(classify_rational(validate(fgl_named(NamedLaw::Additive, integers(), 6))), Error);

  // F^b for F additive has logarithm b^{-1}
  std::mt19937 rng(12);
  const int n = 7;
  for (int t = 0; t < 10; ++t) {
    oracle::QVec b = oracle::random_rationals(rng, n);
    b[0] = 0;
    b[1] = 1;
    const FormalGroupLaw f = change_coordinates(validate(fgl_named(NamedLaw::Additive, rationals(), n)),
                                                Series::from_rationals(rationals(), b));
    const auto images = classify_rational(validate(f));
    const oracle::QVec inv = oracle::lagrange_revert(b, n);
    for (int i = 1; i < n; ++i) CHECK(images[i - 1] == Element::rational(rationals(), inv[i + 1]));
  }
}

TEST_CASE("structure maps of (L, LB)") {
  const LazardHopf h = lb_structure_maps(4);
  const Element m1 = var(h.gamma, "m1"), b1 = var(h.gamma, "b1");
  CHECK(h.eta_right[0] == m1 - b1);
  std::vector<Element> counit;
  for (const auto& g : h.gamma->generators())
    counit.push_back(g.name[0] == 'b' ? Element::zero(h.a) : var(h.a, g.name));
  for (int i = 0; i < 4; ++i) CHECK(push_forward(h.eta_right[i], counit, h.a) == var(h.a, "m" + std::to_string(i + 1)));
  CHECK(h.delta[0] == var(h.gamma2, "bL1") + var(h.gamma2, "bR1"));
  CHECK(h.delta[1] == Element::integer(h.gamma2, 2) * var(h.gamma2, "bL1") * var(h.gamma2, "bR1") + var(h.gamma2, "bL2") +
                          var(h.gamma2, "bR2"));
}

TEST_CASE("rationally the additive point is an isomorphism") {
  const HqReport r = hq_idempotence_check(8);
  REQUIRE(r.degrees.size() == 8);
  for (const auto& d : r.degrees) {
    CHECK(d.source_dimension == oracle::partitions(d.degree));
    CHECK(d.target_dimension == oracle::partitions(d.degree));
    CHECK(d.full_rank());
  }
  CHECK(r.pass());
  auto images = hq_right_unit_images(4);
  images[0] = Element::zero(images[0].ring());
  const HqReport bad = hq_rank_report(images, 4);
  CHECK_FALSE(bad.pass());
  CHECK(bad.degrees[0].rank == 0);
}

TEST_CASE("exact rank") {
  CHECK(rational_rank({{1, 2}, {2, 4}}) == 1);
  CHECK(rational_rank({{1, 2, 3}, {0, 1, 4}, {5, 6, 0}}) == 3);
  CHECK(rational_rank({{0, 0}, {0, 0}}) == 0);
}
