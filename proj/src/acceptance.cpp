#include "fglforge/acceptance.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "fglforge/hopf.hpp"
#include "fglforge/kgl.hpp"
#include "fglforge/landweber.hpp"

namespace fglforge {

namespace {

// Each check returns an empty string on success, else the first discrepancy.
using Check = std::function<std::string()>;

struct Criterion {
  const char* name;
  double limit;
  Check run;
};

mpz_class binomial(long n, long k) {
  mpz_class r;
  mpz_bin_ui(r.get_mpz_t(), mpz_class(n).get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

std::string axiom_suite() {
  const int n = 10;
  const std::vector<std::pair<std::string, FormalGroupLaw>> laws{
      {"additive/Z", fgl_named(NamedLaw::Additive, integers(), n)},
      {"multiplicative/Z[beta^+-1]", fgl_named(NamedLaw::Multiplicative, laurent(integers()), n)},
      {"universal_rational", fgl_named(NamedLaw::UniversalRational, rationals(), n)},
      {"honda_h1/F_2", fgl_named(NamedLaw::HondaH1, integers_mod(2), n)},
  };
  for (const auto& [name, f] : laws) {
    const AxiomReport r = check_axioms(f);
    for (const auto& a : r.axioms)
      if (!a.pass) return name + ": " + a.name + " fails";
  }
  return {};
}

std::string conner_floyd() {
  const int n = 10;
  const RingPtr r = laurent(rationals());
  const FormalGroupLaw mult = validate(fgl_named(NamedLaw::Multiplicative, r, n));
  const std::vector<Element> m = classify_rational(mult);
  if (m.size() != static_cast<std::size_t>(n - 1)) return "expected m_1..m_9";
  const Element beta = Element::variable(r, "beta");
  for (int i = 1; i < n; ++i) {
    const Element expected = Element::rational(r, mpq_class(1, i + 1)) * pow(beta, i);
    if (m[i - 1] != expected) return "m_" + std::to_string(i) + " = " + m[i - 1].to_string();
  }
  const FormalGroupLaw universal = universal_fgl_rational(n);
  const Series2 image = push_forward(universal.body(), m, r);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) {
      Element expected = Element::zero(r);
      if (i + j == 1) expected = Element::one(r);
      if (i == 1 && j == 1) expected = -beta;
      if (image.at(i, j) != expected) {
        return "coefficient (" + std::to_string(i) + "," + std::to_string(j) + ") = " + image.at(i, j).to_string();
      }
    }
  return {};
}

std::string n_series_closed_form() {
  const int n = 10;
  const RingPtr r = laurent(integers());
  const FormalGroupLaw f = validate(fgl_named(NamedLaw::Multiplicative, r, n));
  const Element beta = Element::variable(r, "beta");
  for (int k = 1; k <= 6; ++k) {
    // (1 - (1 - beta x)^k) / beta = sum_{i>=1} (-1)^{i+1} C(k,i) beta^{i-1} x^i
    const Series s = n_series(f, k);
    for (int i = 0; i <= n; ++i) {
      Element expected = Element::zero(r);
      if (i >= 1 && i <= k) {
        const mpz_class c = binomial(k, i) * (i % 2 == 1 ? 1 : -1);
        expected = Element::integer(r, c) * pow(beta, i - 1);
      }
      if (s[i] != expected) return "[" + std::to_string(k) + "](x) coefficient " + std::to_string(i);
    }
  }
  return {};
}

Series random_integral(std::mt19937& rng, int n) {
  std::uniform_int_distribution<long> d(-3, 3);
  std::vector<Element> c;
  for (int i = 0; i <= n; ++i) c.push_back(Element::integer(integers(), d(rng)));
  return Series(integers(), std::move(c));
}

Series random_rational(std::mt19937& rng, int n) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  std::vector<mpq_class> c;
  for (int i = 0; i <= n; ++i) c.emplace_back(num(rng), den(rng));
  for (auto& q : c) q.canonicalize();
  return Series::from_rationals(rationals(), c);
}

std::string composition_suite() {
  const int n = 16;
  for (long k = -5; k <= 5; ++k)
    for (long l = -5; l <= 5; ++l) {
      if (circ_compose(geometric_series(k, n), geometric_series(l, n)) != geometric_series(k * l, n)) {
        return "(1-x)^-" + std::to_string(k) + " o (1-x)^-" + std::to_string(l);
      }
    }
  std::mt19937 rng(20240601);
  for (int t = 0; t < 200; ++t) {
    const Series f = random_integral(rng, n), g = random_integral(rng, n), h = random_integral(rng, n);
    const Series fg = circ_compose(f, g);
    if (fg.ring()->kind() != RingKind::Integers) return "non-integral product";
    if (fg != circ_compose(g, f)) return "not commutative on sample " + std::to_string(t);
    if (circ_compose(fg, h) != circ_compose(f, circ_compose(g, h))) return "not associative on sample " + std::to_string(t);
    if (circ_compose(geometric_series(1, n), f) != f) return "(1-x)^-1 is not a unit";
  }
  return {};
}

std::string transform_suite() {
  const int n = 16;
  std::mt19937 rng(7);
  for (int t = 0; t < 100; ++t) {
    const Series f = random_rational(rng, n), g = random_rational(rng, n);
    const AdamsSequence a = adams_transform(f), b = adams_transform(g);
    if (adams_transform_inv(a) != f) return "inverse after transform, sample " + std::to_string(t);
    if (adams_transform(adams_transform_inv(b)) != b) return "transform after inverse, sample " + std::to_string(t);
    if (adams_transform(f + g) != a + b) return "not additive, sample " + std::to_string(t);
    if (adams_transform(circ_compose(f, g)) != a * b) return "not multiplicative, sample " + std::to_string(t);
    const AdamsSequence w = adams_transform(omega(f));
    for (int i = 0; i < n; ++i)
      if (w.at(i) != a.at(i + 1)) return "intertwining fails at index " + std::to_string(i);
  }
  return {};
}

SequenceLaurent beta_power(int j, int lo, int hi) {
  SequenceLaurent s;
  s.terms.emplace(j, AdamsSequence::filled(lo, hi, 1));
  return s;
}

SequenceLaurent degree_zero(AdamsSequence a) {
  SequenceLaurent s;
  s.terms.emplace(0, std::move(a));
  return s;
}

std::string adams_relations() {
  const int lo = -8, hi = 8;
  const SequenceLaurent beta = beta_power(1, lo, hi), beta_inv = beta_power(-1, lo, hi);
  for (long k = -4; k <= 4; ++k) {
    if (k == 0) continue;
    const SequenceLaurent psi = adams_op_sequence(k, lo, hi);
    for (long l = -4; l <= 4; ++l) {
      if (l == 0) continue;
      if (!agree(psi * adams_op_sequence(l, lo, hi), adams_op_sequence(k * l, lo, hi))) {
        return "psi^" + std::to_string(k) + " psi^" + std::to_string(l) + " (sequences)";
      }
      const TowerLaurent tk = adams_op_tower(k, hi, hi), tl = adams_op_tower(l, hi, hi);
      if (!agree(tk * tl, adams_op_tower(k * l, hi, hi))) {
        return "psi^" + std::to_string(k) + " psi^" + std::to_string(l) + " (towers)";
      }
      if (!agree(mult_add_iso(tk * tl), mult_add_iso(tk) * mult_add_iso(tl))) return "iso is not multiplicative";
    }
    SequenceLaurent scaled = psi;
    scaled.terms.at(0) = mpq_class(k) * scaled.terms.at(0);
    if (!agree(beta_inv * psi * beta, scaled)) return "beta^-1 psi^" + std::to_string(k) + " beta (sequences)";
    TowerLaurent tb, tbi;
    tb.terms.emplace(1, adams_op_tower(1, hi, hi).terms.at(0));
    tbi.terms.emplace(-1, adams_op_tower(1, hi, hi).terms.at(0));
    TowerLaurent tpsi = adams_op_tower(k, hi, hi), tscaled = tpsi;
    tscaled.terms.at(0) = mpq_class(k) * tscaled.terms.at(0);
    if (!agree(tbi * tpsi * tb, tscaled)) return "beta^-1 psi^" + std::to_string(k) + " beta (towers)";

    AdamsSequence sum = AdamsSequence::filled(lo, hi, 0);
    for (int m = lo; m <= hi; ++m) {
      mpq_class km = 1;
      for (int i = 0; i < std::abs(m); ++i) km *= k;
      if (m < 0) km = 1 / km;
      sum = sum + km * idempotent_sequence(m, lo, hi);
      const auto action = eigenspace_action(psi, m);
      if (action.size() != 1 || action.begin()->first != m || action.begin()->second != km) {
        return "psi^" + std::to_string(k) + " on beta^" + std::to_string(m);
      }
    }
    if (!agree(degree_zero(sum), psi)) return "psi^" + std::to_string(k) + " != sum k^n e_n";
  }
  for (int a = lo; a <= hi; ++a) {
    const AdamsSequence ea = idempotent_sequence(a, lo, hi);
    for (int b = lo; b <= hi; ++b) {
      const AdamsSequence prod = ea * idempotent_sequence(b, lo, hi);
      if (prod != (a == b ? ea : AdamsSequence::filled(lo, hi, 0))) {
        return "e_" + std::to_string(a) + " e_" + std::to_string(b);
      }
    }
    if (a < hi) {
      SequenceLaurent lhs = degree_zero(idempotent_sequence(a + 1, lo, hi)) * beta;
      SequenceLaurent rhs;
      rhs.terms.emplace(1, idempotent_sequence(a, lo, hi));
      if (!agree(lhs, rhs)) return "e_" + std::to_string(a + 1) + " beta != beta e_" + std::to_string(a);
    }
  }
  return {};
}

std::string landweber_table() {
  const int n = 10, h = 2;
  auto run = [&](const FormalGroupLaw& f, std::vector<long> primes) {
    return landweber_check({validate(f), std::nullopt, std::move(primes), h});
  };
  const LandweberReport mult = run(fgl_named(NamedLaw::Multiplicative, laurent(integers()), n), {2, 3, 5, 7});
  for (const auto& p : mult.primes)
    if (p.verdict != PrimeVerdict::ExactHeight || p.height != 1) {
      return "multiplicative over Z[beta^+-1] at p = " + std::to_string(p.prime);
    }
  const LandweberReport add_z = run(fgl_named(NamedLaw::Additive, integers(), n), {2, 3, 5, 7});
  for (const auto& p : add_z.primes) {
    if (p.verdict != PrimeVerdict::Fails || p.height != 1 || p.stages.back().witness->to_string() != "1") {
      return "additive over Z at p = " + std::to_string(p.prime);
    }
  }
  const LandweberReport add_q = run(fgl_named(NamedLaw::Additive, rationals(), n), {2, 3, 5, 7});
  for (const auto& p : add_q.primes)
    if (p.verdict != PrimeVerdict::ExactHeight || p.height != 0) return "additive over Q at p = " + std::to_string(p.prime);
  for (long p : {2L, 3L, 5L, 7L}) {
    const LandweberReport r = run(fgl_named(NamedLaw::Additive, integers_mod(p), n), {p});
    if (r.primes[0].verdict != PrimeVerdict::Fails || r.primes[0].height != 0) {
      return "additive over F_" + std::to_string(p);
    }
  }
  return {};
}

std::string hq_core() {
  const HqReport r = hq_idempotence_check(6);
  const int partitions[] = {1, 2, 3, 5, 7, 11};
  if (r.degrees.size() != 6) return "expected degrees 1..6";
  for (std::size_t d = 0; d < 6; ++d) {
    const HqDegree& e = r.degrees[d];
    if (e.source_dimension != partitions[d] || e.target_dimension != partitions[d] || !e.full_rank()) {
      return "degree " + std::to_string(e.degree);
    }
  }
  return {};
}

std::string hopf_suite() {
  for (int n = 1; n <= 5; ++n) {
    if (!hopf_axiom_check(lb_structure_maps(n)).pass()) return "LB at degree " + std::to_string(n);
    if (!hopf_axiom_check(groupoid_fixture(n)).pass()) return "groupoid with " + std::to_string(n) + " objects";
  }
  const GroupoidHopf g = groupoid_fixture(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          // matrix units: E_ij E_kl = [j == k] E_il
          RationalMatrix expected(2, RationalVector(2, 0));
          if (j == k) expected[i][l] = 1;
          const GroupoidFunctional got =
              dual_compose(g, groupoid_dual_basis(g, i, j), groupoid_dual_basis(g, k, l));
          if (got.values != expected) return "groupoid composition table";
        }
  const RationalVector u{2, mpq_class(-1, 3)};
  for (const mpq_class& c : {mpq_class(0), mpq_class(1), mpq_class(5, 2)}) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const GroupoidFunctional phi = groupoid_dual_basis(g, i, j), psi = groupoid_dual_basis(g, j, 1 - j);
        const RationalMatrix lhs = twisted_ring_multiply(g, u, phi, RationalVector(2, c), psi);
        RationalVector cu = u;
        for (auto& x : cu) x *= c;
        if (lhs != twisted_element(g, cu, dual_compose(g, phi, psi))) return "central scalars (groupoid)";
      }
  }
  const LazardHopf lb = lb_structure_maps(3);
  const Element u_lb = Element::variable(lb.a, "m1") + Element::integer(lb.a, 2);
  const std::vector<Monomial> basis{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {2, 0, 0}};
  for (const auto& a : basis)
    for (const auto& b : basis) {
      int weight = 0;
      for (std::size_t k = 0; k < 3; ++k) weight += static_cast<int>(k + 1) * (a[k] + b[k]);
      if (weight > 3) continue;
      const LbFunctional phi = lb_dual_basis(lb, a), psi = lb_dual_basis(lb, b);
      for (long c : {0L, 3L}) {
        const Element ce = Element::integer(lb.a, c);
        const LbFunctional lhs = twisted_ring_multiply(lb, u_lb, phi, ce, psi);
        if (!equal(lhs, scale(ce * u_lb, dual_compose(lb, phi, psi)))) return "central scalars (LB)";
      }
    }
  return {};
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {"FGL axiom suite", 10, axiom_suite},
      {"Conner-Floyd classification", 10, conner_floyd},
      {"n-series closed form", 0, n_series_closed_form},
      {"composition-ring suite", 30, composition_suite},
      {"transform suite", 0, transform_suite},
      {"Adams-operation relations", 0, adams_relations},
      {"Landweber verdict table", 30, landweber_table},
      {"HQ idempotence core", 60, hq_core},
      {"Hopf suite", 0, hopf_suite},
  };
  return all;
}

}  // namespace

CriterionResult run_criterion(int id) {
  const auto& all = criteria();
  if (id < 1 || id > static_cast<int>(all.size())) throw Error(ErrorCode::InvalidArgument, "no criterion " + std::to_string(id));
  const Criterion& c = all[static_cast<std::size_t>(id - 1)];
  CriterionResult r;
  r.id = id;
  r.name = c.name;
  r.limit_seconds = c.limit;
  const auto start = std::chrono::steady_clock::now();
  try {
    r.detail = c.run();
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.pass = r.detail.empty();
  if (r.pass && c.limit > 0 && r.seconds > c.limit) {
    r.pass = false;
    r.detail = "time limit exceeded";
  }
  return r;
}

std::vector<CriterionResult> run_acceptance() {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= static_cast<int>(criteria().size()); ++id) out.push_back(run_criterion(id));
  return out;
}

}  // namespace fglforge
