#include "fglforge/hopf.hpp"

#include <algorithm>

namespace fglforge {

bool HopfReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const HopfCheck& c) { return c.pass; });
}

namespace {

// ---- (L, LB) ---------------------------------------------------------------

std::vector<Element> vars(const RingPtr& ring, const std::string& prefix, int n) {
  std::vector<Element> v;
  for (int i = 1; i <= n; ++i) v.push_back(Element::variable(ring, prefix + std::to_string(i)));
  return v;
}

std::vector<Element> concat(std::initializer_list<std::vector<Element>> parts) {
  std::vector<Element> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::vector<Element> zeros(const RingPtr& ring, int n) {
  return std::vector<Element>(static_cast<std::size_t>(n), Element::zero(ring));
}

std::vector<Element> push_all(const std::vector<Element>& xs, const std::vector<Element>& images, const RingPtr& target) {
  std::vector<Element> out;
  for (const auto& x : xs) out.push_back(push_forward(x, images, target));
  return out;
}

void record(HopfReport& report, const std::string& name, const std::string& generator, int degree,
            const Element& got, const Element& want) {
  auto it = std::find_if(report.checks.begin(), report.checks.end(), [&](const HopfCheck& c) { return c.name == name; });
  if (it == report.checks.end()) {
    report.checks.push_back(HopfCheck{name, true, "", 0, ""});
    it = report.checks.end() - 1;
  }
  if (!it->pass || got == want) return;
  it->pass = false;
  it->generator = generator;
  it->degree = degree;
  it->detail = got.to_string() + " != " + want.to_string();
}

int b_degree(const Monomial& b) {
  int d = 0;
  for (std::size_t i = 0; i < b.size(); ++i) d += b[i] * static_cast<int>(i + 1);
  return d;
}

void require_same_algebroid(const LazardHopf& h, const LbFunctional& f) {
  if (f.truncation != h.truncation) {
    throw Error(ErrorCode::AlgebroidMismatch, "functional truncated at " + std::to_string(f.truncation) +
                                                  ", algebroid at " + std::to_string(h.truncation));
  }
}

// f on an element of Gamma, pulling m-parts out as scalars.
Element apply(const LazardHopf& h, const LbFunctional& f, const Element& gamma) {
  const int n = h.truncation;
  Element acc = Element::zero(h.a);
  for (const auto& [mono, c] : gamma.poly_terms()) {
    Monomial m(mono.begin(), mono.begin() + n);
    Monomial b(mono.begin() + n, mono.end());
    if (b_degree(b) > n) {
      throw Error(ErrorCode::InsufficientPrecision, "functional needed beyond degree " + std::to_string(n));
    }
    const Element value = f.value(b, h.a);
    if (value.is_zero()) continue;
    PolyTerms t;
    t.emplace(std::move(m), c);
    acc += Element::from_poly(h.a, std::move(t)) * value;
  }
  return acc;
}

Element right_unit(const LazardHopf& h, const Element& a) { return push_forward(a, h.eta_right, h.gamma); }

std::vector<Monomial> b_monomials(const LazardHopf& h) {
  std::vector<Generator> gens;
  for (int i = 1; i <= h.truncation; ++i) gens.push_back(Generator{"b" + std::to_string(i), i});
  std::vector<Monomial> out;
  for (int d = 0; d <= h.truncation; ++d)
    for (auto& m : monomials_of_degree(gens, d)) out.push_back(std::move(m));
  return out;
}

Element gamma_b_monomial(const LazardHopf& h, const Monomial& b, const Element& coeff_in_a) {
  // coeff_in_a * b^beta inside Gamma
  const int n = h.truncation;
  Element acc = Element::zero(h.gamma);
  for (const auto& [m, c] : coeff_in_a.poly_terms()) {
    Monomial mono(m);
    mono.insert(mono.end(), b.begin(), b.end());
    PolyTerms t;
    t.emplace(std::move(mono), c);
    acc += Element::from_poly(h.gamma, std::move(t));
  }
  (void)n;
  return acc;
}

}  // namespace

HopfReport hopf_axiom_check(const LazardHopf& h) {
  HopfReport report;
  report.flavor = "lazard_lb_rational";
  const int n = h.truncation;
  const auto m_a = vars(h.a, "m", n);
  const auto m_g = vars(h.gamma, "m", n);
  const auto b_g = vars(h.gamma, "b", n);
  const auto m_g2 = vars(h.gamma2, "m", n);
  const auto bl = vars(h.gamma2, "bL", n);
  const auto br = vars(h.gamma2, "bR", n);

  const std::vector<Element> eps = concat({m_a, zeros(h.a, n)});
  for (int i = 0; i < n; ++i) {
    const std::string g = "m" + std::to_string(i + 1);
    record(report, "counit_left_unit", g, i + 1, push_forward(m_g[i], eps, h.a), m_a[i]);
    record(report, "counit_right_unit", g, i + 1, push_forward(h.eta_right[i], eps, h.a), m_a[i]);
  }

  const std::vector<Element> eps_left = concat({m_g, zeros(h.gamma, n), b_g});
  const std::vector<Element> eps_right = concat({m_g, b_g, zeros(h.gamma, n)});
  for (int k = 0; k < n; ++k) {
    const std::string g = "b" + std::to_string(k + 1);
    record(report, "left_counit", g, k + 1, push_forward(h.delta[k], eps_left, h.gamma), b_g[k]);
    record(report, "right_counit", g, k + 1, push_forward(h.delta[k], eps_right, h.gamma), b_g[k]);
  }

  // Gamma (x)_A Gamma (x)_A Gamma as Q[m, bA, bB, bC]
  std::vector<Generator> gens;
  for (int i = 1; i <= n; ++i) gens.push_back(Generator{"m" + std::to_string(i), i});
  for (const char* p : {"bA", "bB", "bC"})
    for (int i = 1; i <= n; ++i) gens.push_back(Generator{p + std::to_string(i), i});
  const RingPtr triple = polynomial(rationals(), gens);
  const auto m3 = vars(triple, "m", n);
  const auto ba = vars(triple, "bA", n);
  const auto bb = vars(triple, "bB", n);
  const auto bc = vars(triple, "bC", n);
  // eta_R(m) of the first factor, i.e. the m of the middle factor
  const auto middle_m = push_all(h.eta_right, concat({m3, ba}), triple);
  const auto delta_ab = push_all(h.delta, concat({m3, ba, bb}), triple);
  const auto delta_bc = push_all(h.delta, concat({middle_m, bb, bc}), triple);
  const std::vector<Element> left_images = concat({m3, delta_ab, bc});
  const std::vector<Element> right_images = concat({m3, ba, delta_bc});
  for (int k = 0; k < n; ++k) {
    record(report, "coassociativity", "b" + std::to_string(k + 1), k + 1,
           push_forward(h.delta[k], left_images, triple), push_forward(h.delta[k], right_images, triple));
  }

  // Delta(eta_R(m)) = 1 (x) eta_R(m)
  const std::vector<Element> delta_images = concat({m_g2, h.delta});
  const auto right_m = push_all(h.eta_right, concat({m_g2, bl}), h.gamma2);
  const std::vector<Element> right_factor = concat({right_m, br});
  for (int i = 0; i < n; ++i) {
    record(report, "coproduct_right_unit", "m" + std::to_string(i + 1), i + 1,
           push_forward(h.eta_right[i], delta_images, h.gamma2), push_forward(h.eta_right[i], right_factor, h.gamma2));
  }
  return report;
}

Element LbFunctional::value(const Monomial& b, const RingPtr& a) const {
  const auto it = values.find(b);
  return it == values.end() ? Element::zero(a) : it->second;
}

LbFunctional lb_unit(const LazardHopf& h) {
  LbFunctional f{h.truncation, {}};
  f.values.emplace(Monomial(static_cast<std::size_t>(h.truncation), 0), Element::one(h.a));
  return f;
}

LbFunctional lb_dual_basis(const LazardHopf& h, const Monomial& alpha) {
  if (alpha.size() != static_cast<std::size_t>(h.truncation) || b_degree(alpha) > h.truncation) {
    throw Error(ErrorCode::InvalidArgument, "monomial outside the truncation");
  }
  LbFunctional f{h.truncation, {}};
  f.values.emplace(alpha, Element::one(h.a));
  return f;
}

LbFunctional dual_compose(const LazardHopf& h, const LbFunctional& f, const LbFunctional& g) {
  require_same_algebroid(h, f);
  require_same_algebroid(h, g);
  const int n = h.truncation;
  LbFunctional out{n, {}};
  for (const auto& alpha : b_monomials(h)) {
    Element delta = Element::one(h.gamma2);
    for (int k = 0; k < n; ++k)
      if (alpha[k]) delta = delta * pow(h.delta[k], alpha[k]);
    Element acc = Element::zero(h.a);
    for (const auto& [mono, c] : delta.poly_terms()) {
      const Monomial m(mono.begin(), mono.begin() + n);
      const Monomial beta(mono.begin() + n, mono.begin() + 2 * n);
      const Monomial gamma(mono.begin() + 2 * n, mono.end());
      const Element gv = g.value(gamma, h.a);
      if (gv.is_zero()) continue;
      PolyTerms mt;
      mt.emplace(m, c);
      const Element scalar = Element::from_poly(h.a, std::move(mt));
      const Element inner = gamma_b_monomial(h, beta, scalar) * right_unit(h, gv);
      acc += apply(h, f, inner);
    }
    if (!acc.is_zero()) out.values.emplace(alpha, acc);
  }
  return out;
}

Element coaction_to_action(const LazardHopf& h, const LbFunctional& f, const Element& r) {
  require_same_algebroid(h, f);
  return apply(h, f, right_unit(h, r));
}

LbFunctional scale(const Element& a, const LbFunctional& f) {
  LbFunctional out{f.truncation, {}};
  for (const auto& [m, v] : f.values) {
    Element x = a * v;
    if (!x.is_zero()) out.values.emplace(m, std::move(x));
  }
  return out;
}

LbFunctional add(const LbFunctional& f, const LbFunctional& g) {
  if (f.truncation != g.truncation) throw Error(ErrorCode::AlgebroidMismatch, "truncations differ");
  LbFunctional out = f;
  for (const auto& [m, v] : g.values) {
    auto it = out.values.find(m);
    if (it == out.values.end()) {
      out.values.emplace(m, v);
    } else {
      it->second = it->second + v;
      if (it->second.is_zero()) out.values.erase(it);
    }
  }
  return out;
}

bool equal(const LbFunctional& f, const LbFunctional& g) {
  if (f.truncation != g.truncation) return false;
  auto nonzero = [](const LbFunctional& x) {
    std::map<Monomial, Element> out;
    for (const auto& [m, v] : x.values)
      if (!v.is_zero()) out.emplace(m, v);
    return out;
  };
  return nonzero(f) == nonzero(g);
}

LbFunctional twisted_ring_multiply(const LazardHopf& h, const Element& u, const LbFunctional& phi, const Element& v,
                                   const LbFunctional& psi) {
  require_same_algebroid(h, phi);
  require_same_algebroid(h, psi);
  const int n = h.truncation;
  const Element eta_v = right_unit(h, v);
  LbFunctional out{n, {}};
  for (const auto& [alpha, coefficient] : phi.values) {
    if (coefficient.is_zero()) continue;
    // Delta((b^alpha)^dual) = sum over beta + gamma = alpha of (b^beta)^dual (x) (b^gamma)^dual
    std::vector<Monomial> betas{Monomial{}};
    for (int k = 0; k < n; ++k) {
      std::vector<Monomial> next;
      for (const auto& partial : betas) {
        for (int e = 0; e <= alpha[k]; ++e) {
          Monomial m = partial;
          m.push_back(e);
          next.push_back(std::move(m));
        }
      }
      betas = std::move(next);
    }
    for (const auto& beta : betas) {
      Monomial gamma(alpha);
      for (int k = 0; k < n; ++k) gamma[k] -= beta[k];
      const Element lambda = apply(h, lb_dual_basis(h, gamma), eta_v);
      if (lambda.is_zero()) continue;
      const LbFunctional composite = dual_compose(h, lb_dual_basis(h, beta), psi);
      out = add(out, scale(u * coefficient * lambda, composite));
    }
  }
  return out;
}

// ---- groupoid --------------------------------------------------------------

namespace {

std::size_t arrows(const GroupoidHopf& h) { return static_cast<std::size_t>(h.objects * h.objects); }

RationalVector unit_vector(std::size_t size, std::size_t i) {
  RationalVector v(size);
  v[i] = 1;
  return v;
}

RationalVector pointwise(const RationalVector& a, const RationalVector& b) {
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

// Applies a [row][col] matrix to a vector indexed by col.
RationalVector apply_matrix(const RationalMatrix& m, const RationalVector& v) {
  RationalVector out(m.size());
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c)
      if (v[c] != 0 && m[r][c] != 0) out[r] += m[r][c] * v[c];
  return out;
}

void add_into(RationalVector& acc, const RationalVector& v, const mpq_class& scale) {
  for (std::size_t i = 0; i < acc.size(); ++i)
    if (v[i] != 0) acc[i] += scale * v[i];
}

bool composable(const GroupoidHopf& h, int y, int z) {
  for (int a = 0; a < h.objects; ++a)
    if (h.eta_right[y][a] != 0 && h.eta_left[z][a] != 0) return true;
  return false;
}

std::string arrow_name(const GroupoidHopf& h, std::size_t x) {
  return "delta_(" + std::to_string(x / static_cast<std::size_t>(h.objects)) + "," +
         std::to_string(x % static_cast<std::size_t>(h.objects)) + ")";
}

void record_vector(HopfReport& report, const std::string& name, const std::string& generator, bool ok) {
  auto it = std::find_if(report.checks.begin(), report.checks.end(), [&](const HopfCheck& c) { return c.name == name; });
  if (it == report.checks.end()) {
    report.checks.push_back(HopfCheck{name, true, "", 0, ""});
    it = report.checks.end() - 1;
  }
  if (!it->pass || ok) return;
  it->pass = false;
  it->generator = generator;
  it->detail = "law fails on " + generator;
}

RationalVector apply_functional(const GroupoidHopf& h, const GroupoidFunctional& f, const RationalVector& gamma) {
  const std::size_t n = static_cast<std::size_t>(h.objects);
  RationalVector out(n);
  for (std::size_t w = 0; w < gamma.size(); ++w)
    if (gamma[w] != 0) out[w / n] += gamma[w] * f.values[w / n][w % n];
  return out;
}

void require_shape(const GroupoidHopf& h, const GroupoidFunctional& f) {
  const std::size_t n = static_cast<std::size_t>(h.objects);
  if (f.values.size() != n || std::any_of(f.values.begin(), f.values.end(), [&](const RationalVector& r) { return r.size() != n; })) {
    throw Error(ErrorCode::AlgebroidMismatch, "functional is not " + std::to_string(n) + "x" + std::to_string(n));
  }
}

}  // namespace

GroupoidHopf groupoid_fixture(int objects) {
  if (objects < 1 || objects > 5) throw Error(ErrorCode::InvalidArgument, "groupoid fixture supports 1..5 objects");
  GroupoidHopf h;
  const int n = objects;
  h.objects = n;
  const std::size_t na = static_cast<std::size_t>(n * n);
  h.eta_left.assign(na, RationalVector(static_cast<std::size_t>(n)));
  h.eta_right = h.eta_left;
  h.coaction = h.eta_left;
  h.counit.assign(static_cast<std::size_t>(n), RationalVector(na));
  h.delta.resize(na);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int x = i * n + j;
      h.eta_left[x][i] = 1;   // source
      h.eta_right[x][j] = 1;  // target
      h.coaction[x][j] = 1;   // rho(chi_j) = sum_i delta_(i,j)
      if (i == j) h.counit[i][x] = 1;
      for (int k = 0; k < n; ++k) h.delta[i * n + k][{x, j * n + k}] = 1;
    }
  }
  return h;
}

HopfReport hopf_axiom_check(const GroupoidHopf& h) {
  HopfReport report;
  report.flavor = "finite_groupoid";
  const std::size_t n = static_cast<std::size_t>(h.objects);
  const std::size_t na = arrows(h);
  auto eta_l = [&](const RationalVector& a) { return apply_matrix(h.eta_left, a); };
  auto eta_r = [&](const RationalVector& a) { return apply_matrix(h.eta_right, a); };
  auto eps = [&](const RationalVector& g) { return apply_matrix(h.counit, g); };

  for (std::size_t a = 0; a < n; ++a) {
    const RationalVector chi = unit_vector(n, a);
    const std::string g = "chi_" + std::to_string(a);
    record_vector(report, "counit_left_unit", g, eps(eta_l(chi)) == chi);
    record_vector(report, "counit_right_unit", g, eps(eta_r(chi)) == chi);
  }
  for (std::size_t x = 0; x < na; ++x) {
    const RationalVector dx = unit_vector(na, x);
    RationalVector left(na), right(na);
    for (const auto& [pair, c] : h.delta[x]) {
      const RationalVector dy = unit_vector(na, static_cast<std::size_t>(pair.first));
      const RationalVector dz = unit_vector(na, static_cast<std::size_t>(pair.second));
      add_into(left, pointwise(eta_l(eps(dy)), dz), c);
      add_into(right, pointwise(dy, eta_r(eps(dz))), c);
    }
    record_vector(report, "left_counit", arrow_name(h, x), left == dx);
    record_vector(report, "right_counit", arrow_name(h, x), right == dx);

    std::map<std::tuple<int, int, int>, mpq_class> lhs, rhs;
    for (const auto& [pair, c] : h.delta[x]) {
      const auto [y, z] = pair;
      for (const auto& [inner, c2] : h.delta[static_cast<std::size_t>(y)])
        if (composable(h, inner.second, z)) lhs[{inner.first, inner.second, z}] += c * c2;
      for (const auto& [inner, c2] : h.delta[static_cast<std::size_t>(z)])
        if (composable(h, y, inner.first)) rhs[{y, inner.first, inner.second}] += c * c2;
    }
    std::erase_if(lhs, [](const auto& kv) { return kv.second == 0; });
    std::erase_if(rhs, [](const auto& kv) { return kv.second == 0; });
    record_vector(report, "coassociativity", arrow_name(h, x), lhs == rhs);
  }
  return report;
}

GroupoidFunctional groupoid_unit(const GroupoidHopf& h) {
  GroupoidFunctional f;
  const std::size_t n = static_cast<std::size_t>(h.objects);
  f.values.assign(n, RationalVector(n));
  // eps(delta_(i,j)) = [i = j] chi_i
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) f.values[i][j] = h.counit[i][i * n + j];
  return f;
}

GroupoidFunctional groupoid_dual_basis(const GroupoidHopf& h, int i, int j) {
  if (i < 0 || j < 0 || i >= h.objects || j >= h.objects) throw Error(ErrorCode::InvalidArgument, "arrow out of range");
  GroupoidFunctional f;
  const std::size_t n = static_cast<std::size_t>(h.objects);
  f.values.assign(n, RationalVector(n));
  f.values[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
  return f;
}

GroupoidFunctional dual_compose(const GroupoidHopf& h, const GroupoidFunctional& f, const GroupoidFunctional& g) {
  require_shape(h, f);
  require_shape(h, g);
  const std::size_t n = static_cast<std::size_t>(h.objects);
  const std::size_t na = arrows(h);
  GroupoidFunctional out;
  out.values.assign(n, RationalVector(n));
  for (std::size_t x = 0; x < na; ++x) {
    RationalVector acc(n);
    for (const auto& [pair, c] : h.delta[x]) {
      const RationalVector gz = apply_functional(h, g, unit_vector(na, static_cast<std::size_t>(pair.second)));
      const RationalVector inner = pointwise(unit_vector(na, static_cast<std::size_t>(pair.first)), apply_matrix(h.eta_right, gz));
      add_into(acc, apply_functional(h, f, inner), c);
    }
    out.values[x / n][x % n] = acc[x / n];
  }
  return out;
}

RationalVector coaction_to_action(const GroupoidHopf& h, const GroupoidFunctional& f, const RationalVector& r) {
  require_shape(h, f);
  const std::size_t n = static_cast<std::size_t>(h.objects);
  if (r.size() != n) throw Error(ErrorCode::InvalidArgument, "element has the wrong length");
  for (std::size_t m = 0; m < n; ++m) {
    RationalVector rho(arrows(h));
    for (std::size_t w = 0; w < rho.size(); ++w) rho[w] = h.coaction[w][m];
    if (apply_matrix(h.counit, rho) != unit_vector(n, m)) {
      throw Error(ErrorCode::NotACoaction, "(id x eps) rho(chi_" + std::to_string(m) + ") != chi_" + std::to_string(m));
    }
  }
  return apply_functional(h, f, apply_matrix(h.coaction, r));
}

RationalVector eta_left_dual(const GroupoidHopf& h, const GroupoidFunctional& f) {
  require_shape(h, f);
  return apply_functional(h, f, RationalVector(arrows(h), mpq_class(1)));
}

RationalMatrix twisted_element(const GroupoidHopf& h, const RationalVector& u, const GroupoidFunctional& phi) {
  require_shape(h, phi);
  const std::size_t n = static_cast<std::size_t>(h.objects);
  RationalMatrix out(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) out[i][l] = u[i] * phi.values[i][l];
  return out;
}

RationalMatrix twisted_ring_multiply(const GroupoidHopf& h, const RationalVector& u, const GroupoidFunctional& phi,
                                     const RationalVector& v, const GroupoidFunctional& psi) {
  require_shape(h, phi);
  require_shape(h, psi);
  const std::size_t n = static_cast<std::size_t>(h.objects);
  RationalMatrix out(n, RationalVector(n));
  // Gamma multiplies pointwise, so Delta(delta_x^dual) = delta_x^dual (x) delta_x^dual.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const mpq_class& c = phi.values[i][j];
      if (c == 0) continue;
      const GroupoidFunctional e = groupoid_dual_basis(h, static_cast<int>(i), static_cast<int>(j));
      RationalVector scalar = pointwise(u, coaction_to_action(h, e, v));
      for (auto& s : scalar) s *= c;
      const RationalMatrix term = twisted_element(h, scalar, dual_compose(h, e, psi));
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) out[a][b] += term[a][b];
    }
  }
  return out;
}

}  // namespace fglforge
