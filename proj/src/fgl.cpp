#include "fglforge/fgl.hpp"

#include <algorithm>

#include "fglforge/lazard.hpp"

namespace fglforge {

namespace {

void require_validated(const FormalGroupLaw& f) {
  if (!f.validated()) throw Error(ErrorCode::NotValidated, "formal group law has not passed check_axioms");
}

std::string tuple_string(const std::vector<int>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

AxiomResult check_unitality(const Series2& F) {
  AxiomResult r{"unitality", true, {}, ""};
  const int n = F.precision();
  for (int pass = 0; pass < 2; ++pass) {
    for (int i = 0; i <= n; ++i) {
      const Element& c = pass == 0 ? F.at(i, 0) : F.at(0, i);
      const bool ok = (i == 1) ? c.is_one() : c.is_zero();
      if (ok) continue;
      r.pass = false;
      r.witness = pass == 0 ? std::vector<int>{i, 0} : std::vector<int>{0, i};
      r.detail = "coefficient " + tuple_string(r.witness) + " is " + c.to_string();
      return r;
    }
  }
  return r;
}

AxiomResult check_symmetry(const Series2& F) {
  AxiomResult r{"symmetry", true, {}, ""};
  for (int d = 0; d <= F.precision(); ++d) {
    for (int i = d; 2 * i > d; --i) {
      const int j = d - i;
      if (F.at(i, j) == F.at(j, i)) continue;
      r.pass = false;
      r.witness = {i, j};
      r.detail = tuple_string({i, j}) + " = " + F.at(i, j).to_string() + " but " + tuple_string({j, i}) + " = " +
                 F.at(j, i).to_string();
      return r;
    }
  }
  return r;
}

// Compares coefficients of x^a y^b z^c in F(F(x,y),z) and F(x,F(y,z)) using the
// bivariate powers of F; LHS = sum_i F_{i,c} [x^a y^b] F^i and symmetrically.
AxiomResult check_associativity(const Series2& F) {
  AxiomResult r{"associativity", true, {}, ""};
  const int n = F.precision();
  std::vector<Series2> powers;
  powers.reserve(static_cast<std::size_t>(n) + 1);
  Series2 one(F.ring(), n);
  one.set(0, 0, Element::one(F.ring()));
  powers.push_back(one);
  for (int i = 1; i <= n; ++i) powers.push_back(powers.back() * F);
  const Element zero = Element::zero(F.ring());
  for (int d = 0; d <= n; ++d) {
    for (int a = d; a >= 0; --a) {
      for (int b = d - a; b >= 0; --b) {
        const int c = d - a - b;
        Element lhs = zero, rhs = zero;
        for (int i = 0; i <= a + b; ++i) {
          const Element& coef = F.at(i, c);
          if (!coef.is_zero() && !powers[i].at(a, b).is_zero()) lhs += coef * powers[i].at(a, b);
        }
        for (int j = 0; j <= b + c; ++j) {
          const Element& coef = F.at(a, j);
          if (!coef.is_zero() && !powers[j].at(b, c).is_zero()) rhs += coef * powers[j].at(b, c);
        }
        if (lhs == rhs) continue;
        r.pass = false;
        r.witness = {a, b, c};
        r.detail = "x^" + std::to_string(a) + " y^" + std::to_string(b) + " z^" + std::to_string(c) + ": " +
                   lhs.to_string() + " vs " + rhs.to_string();
        return r;
      }
    }
  }
  return r;
}

}  // namespace

FormalGroupLaw::FormalGroupLaw(Series2 body, std::optional<DegreeMap> grading)
    : body_(std::move(body)), grading_(std::move(grading)) {}

FormalGroupLaw FormalGroupLaw::truncated(int precision) const {
  FormalGroupLaw f(body_.truncated(precision), grading_);
  f.validated_ = validated_;
  return f;
}

bool AxiomReport::pass() const {
  return std::all_of(axioms.begin(), axioms.end(), [](const AxiomResult& a) { return a.pass; });
}

AxiomReport check_axioms(const FormalGroupLaw& f) {
  AxiomReport report;
  report.axioms.push_back(check_unitality(f.body()));
  report.axioms.push_back(check_symmetry(f.body()));
  report.axioms.push_back(check_associativity(f.body()));
  if (f.grading()) {
    AxiomResult g{"grading", true, {}, ""};
    if (const auto bad = grading_violation(f, *f.grading())) {
      g.pass = false;
      g.witness = {bad->first, bad->second};
      g.detail = "coefficient " + f.coefficient(bad->first, bad->second).to_string() + " is not of degree " +
                 std::to_string(bad->first + bad->second - 1);
    }
    report.axioms.push_back(g);
  }
  return report;
}

FormalGroupLaw validate(FormalGroupLaw f) {
  const AxiomReport report = check_axioms(f);
  for (const auto& a : report.axioms) {
    if (!a.pass) throw Error(ErrorCode::InvalidArgument, a.name + " fails: " + a.detail);
  }
  f.validated_ = true;
  return f;
}

FormalGroupLaw assume_valid(FormalGroupLaw f) {
  f.validated_ = true;
  return f;
}

NamedLaw named_law_from_string(const std::string& name) {
  if (name == "additive") return NamedLaw::Additive;
  if (name == "multiplicative") return NamedLaw::Multiplicative;
  if (name == "universal_rational" || name == "universal") return NamedLaw::UniversalRational;
  if (name == "honda_h1") return NamedLaw::HondaH1;
  throw Error(ErrorCode::InvalidArgument, "unknown formal group law '" + name + "'");
}

std::string to_string(NamedLaw name) {
  switch (name) {
    case NamedLaw::Additive: return "additive";
    case NamedLaw::Multiplicative: return "multiplicative";
    case NamedLaw::UniversalRational: return "universal_rational";
    case NamedLaw::HondaH1: return "honda_h1";
  }
  return "?";
}

FormalGroupLaw fgl_named(NamedLaw name, const RingPtr& ring, int precision) {
  if (precision < 1) throw Error(ErrorCode::InvalidArgument, "precision must be at least 1");
  if (name == NamedLaw::UniversalRational) return universal_fgl_rational(std::max(precision, 2)).truncated(precision);
  Series2 body(ring, precision);
  body.set(1, 0, Element::one(ring));
  body.set(0, 1, Element::one(ring));
  std::optional<DegreeMap> grading;
  switch (name) {
    case NamedLaw::Additive: grading = DegreeMap{}; break;
    case NamedLaw::Multiplicative: {
      Element beta;
      try {
        beta = Element::variable(ring, "beta");
      } catch (const Error&) {
        throw Error(ErrorCode::IncompatibleRing, "multiplicative law needs beta in " + ring->description());
      }
      if (precision >= 2) body.set(1, 1, -beta);
      grading = declared_degrees(ring);
      break;
    }
    case NamedLaw::HondaH1: {
      const RingPtr c = concrete(ring);
      if (c->kind() != RingKind::IntegersMod || !is_prime(c->modulus())) {
        throw Error(ErrorCode::IncompatibleRing, "honda_h1 needs a prime field, got " + ring->description());
      }
      if (precision >= 2) body.set(1, 1, Element::one(ring));
      break;
    }
    case NamedLaw::UniversalRational: break;
  }
  return assume_valid(FormalGroupLaw(std::move(body), std::move(grading)));
}

Series formal_inverse(const FormalGroupLaw& f) {
  require_validated(f);
  const RingPtr& ring = f.ring();
  const int n = f.precision();
  const Series x = Series::x(ring, n);
  Series iota = -x;
  for (int m = 2; m <= n; ++m) {
    const Series h = substitute(f.body().truncated(m), x.truncated(m), iota.truncated(m));
    iota.set(m, -h[m]);
  }
  return iota;
}

Series n_series(const FormalGroupLaw& f, int k) {
  require_validated(f);
  const int n = f.precision();
  if (k == 0) return Series(f.ring(), n);
  const Series unit = k > 0 ? Series::x(f.ring(), n) : formal_inverse(f);
  unsigned m = static_cast<unsigned>(k > 0 ? k : -k);
  // left-to-right double and add
  int top = 31;
  while (!((m >> top) & 1U)) --top;
  Series acc = unit;
  for (int bit = top - 1; bit >= 0; --bit) {
    acc = substitute(f.body(), acc, acc);
    if ((m >> bit) & 1U) acc = substitute(f.body(), acc, unit);
  }
  return acc;
}

std::optional<long> checked_power(long p, int n, long limit) {
  long value = 1;
  for (int i = 0; i < n; ++i) {
    if (value > limit / p) return std::nullopt;
    value *= p;
  }
  return value <= limit ? std::optional<long>(value) : std::nullopt;
}

Element v_coefficient(const FormalGroupLaw& f, long p, int n) {
  if (p < 2 || !is_prime(mpz_class(p))) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative stage");
  const auto pn = checked_power(p, n, f.precision());
  if (!pn) {
    throw Error(ErrorCode::InsufficientPrecision, "v_" + std::to_string(n) + " at p=" + std::to_string(p) +
                                                      " needs precision p^n, have " + std::to_string(f.precision()));
  }
  const Series ps = n_series(f.truncated(static_cast<int>(*pn)), static_cast<int>(p));
  return ps[static_cast<int>(*pn)];
}

Series fgl_log(const FormalGroupLaw& f) {
  if (!is_q_algebra(f.ring())) throw Error(ErrorCode::NotQAlgebra, f.ring()->description());
  require_validated(f);
  return integrate(reciprocal(partial_y_at_zero(f.body())));
}

FormalGroupLaw fgl_exp(const Series& log) {
  const RingPtr& ring = log.ring();
  if (!is_q_algebra(ring)) throw Error(ErrorCode::NotQAlgebra, ring->description());
  const int n = log.precision();
  if (n < 1 || !log[0].is_zero() || !log[1].is_one()) {
    throw Error(ErrorCode::BadLogShape, "logarithm must be t + O(t^2)");
  }
  // l^{-1}(l(x) + l(y)) = sum_{a,b} C(a+b, a) g_{a+b} l(x)^a l(y)^b with g = l^{-1}
  const Series g = revert(log);
  std::vector<Series> powers{Series::constant(Element::one(ring), n)};
  for (int k = 1; k <= n; ++k) powers.push_back(powers.back() * log);
  Series2 body(ring, n);
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; a + b <= n; ++b) {
      if (a + b == 0 || g[a + b].is_zero()) continue;
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(a + b), static_cast<unsigned long>(a));
      body = body + (Element::integer(ring, binom) * g[a + b]) * outer(powers[a], powers[b]);
    }
  }
  return assume_valid(FormalGroupLaw(std::move(body)));
}

FormalGroupLaw change_coordinates(const FormalGroupLaw& f, const Series& b) {
  require_validated(f);
  if (!same_ring(f.ring(), b.ring())) {
    throw Error(ErrorCode::RingMismatch, f.ring()->description() + " vs " + b.ring()->description());
  }
  if (b.precision() < 1 || !b[0].is_zero() || !b[1].is_one()) {
    throw Error(ErrorCode::BadCoordinate, "coordinate change must be t + O(t^2)");
  }
  const int n = std::min(f.precision(), b.precision());
  const Series bt = b.truncated(n);
  const Series binv = revert(bt);
  const Series2 inner = substitute_separately(f.body().truncated(n), binv, binv);
  FormalGroupLaw g(compose(bt, inner));
  if (f.grading() && grade_check(g, *f.grading())) g = FormalGroupLaw(g.body(), f.grading());
  return assume_valid(g);
}

std::optional<std::pair<int, int>> grading_violation(const FormalGroupLaw& f, const DegreeMap& degrees) {
  const int n = f.precision();
  for (int d = 0; d <= n; ++d) {
    for (int i = d; i >= 0; --i) {
      const int j = d - i;
      const Homogeneity h = homogeneity(f.coefficient(i, j), degrees);
      if (h.zero) continue;
      if (!h.homogeneous || h.degree != i + j - 1) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

bool grade_check(const FormalGroupLaw& f, const DegreeMap& degrees) { return !grading_violation(f, degrees); }

}  // namespace fglforge
