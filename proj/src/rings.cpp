#include "fglforge/rings.hpp"

#include "fglforge/format.hpp"

#include <algorithm>
#include <tuple>
#include <utility>

namespace fglforge {

namespace detail {
struct ElementAccess {
  using Payload = Element::Payload;
  static Element make(RingPtr ring, Payload data) { return Element(std::move(ring), std::move(data)); }
  static const Payload& data(const Element& e) { return e.data_; }
  static std::shared_ptr<Ring> new_ring() { return std::shared_ptr<Ring>(new Ring()); }
};
}  // namespace detail

using detail::ElementAccess;

namespace {
bool is_compound(const std::string& s) {
  return s.find(" + ") != std::string::npos || s.find(" - ") != std::string::npos;
}

}  // namespace

std::string format_term(const std::string& coeff, const std::string& mono) {
  if (mono.empty()) return coeff;
  if (coeff == "1") return mono;
  if (coeff == "-1") return "-" + mono;
  if (is_compound(coeff)) return "(" + coeff + ")*" + mono;
  return coeff + "*" + mono;
}

std::string join_terms(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string out = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) {
    const auto& t = terms[i];
    if (!t.empty() && t[0] == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out;
}

std::string power_string(const std::string& name, int e) {
  if (e == 0) return "";
  if (e == 1) return name;
  return name + "^" + std::to_string(e);
}

namespace {

using Payload = ElementAccess::Payload;
using Poly = std::vector<Element>;  // dense, low to high, over a field

mpz_class mod_floor(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

mpz_class gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

mpz_class mod_inverse(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw Error(ErrorCode::NotInvertible, a.get_str() + " mod " + m.get_str());
  }
  return r;
}

void require_valid(const Element& a) {
  if (!a.valid()) throw Error(ErrorCode::InvalidArgument, "element is not attached to a ring");
}

void require_same(const Element& a, const Element& b) {
  require_valid(a);
  require_valid(b);
  if (!same_ring(a.ring(), b.ring())) {
    throw Error(ErrorCode::RingMismatch, a.ring()->description() + " vs " + b.ring()->description());
  }
}

const detail::LaurentData& laurent_data(const Element& e) {
  return std::get<detail::LaurentData>(ElementAccess::data(e));
}
const detail::ResidueData& residue_data(const Element& e) {
  return std::get<detail::ResidueData>(ElementAccess::data(e));
}

Element wrap(const RingPtr& quotient, Element rep) {
  return ElementAccess::make(quotient,
                             detail::CosetData{std::make_shared<const Element>(std::move(rep))});
}

Element make_laurent(const RingPtr& ring, const std::map<int, Element>& terms) {
  detail::LaurentData d;
  for (const auto& [e, c] : terms) {
    if (c.is_zero()) continue;
    d.exponents.push_back(e);
    d.coefficients.push_back(c);
  }
  return ElementAccess::make(ring, std::move(d));
}

Element make_poly(const RingPtr& ring, PolyTerms terms) {
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->second == 0) {
      it = terms.erase(it);
    } else {
      if (ring->base()->kind() == RingKind::Integers && it->second.get_den() != 1) {
        throw Error(ErrorCode::NotRepresentable, "non-integral coefficient in " + ring->description());
      }
      ++it;
    }
  }
  return ElementAccess::make(ring, detail::PolyData{std::move(terms)});
}

// ---- dense polynomials over a field --------------------------------------

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly padd(const Poly& a, const Poly& b) {
  Poly r = a.size() >= b.size() ? a : b;
  const Poly& s = a.size() >= b.size() ? b : a;
  for (std::size_t i = 0; i < s.size(); ++i) r[i] = r[i] + s[i];
  trim(r);
  return r;
}

Poly pneg(const Poly& a) {
  Poly r;
  r.reserve(a.size());
  for (const auto& c : a) r.push_back(-c);
  return r;
}

Poly pmul(const Poly& a, const Poly& b, const RingPtr& field) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Element::zero(field));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  trim(r);
  return r;
}

std::pair<Poly, Poly> pdivmod(Poly a, const Poly& b, const RingPtr& field) {
  if (b.empty()) throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
  const Element lead_inv = inverse(b.back());
  trim(a);
  if (a.size() < b.size()) return {Poly{}, a};
  Poly q(a.size() - b.size() + 1, Element::zero(field));
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Element c = a.back() * lead_inv;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = a[shift + i] - c * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

Poly pmonic(Poly a) {
  if (a.empty()) return a;
  const Element inv = inverse(a.back());
  for (auto& c : a) c = c * inv;
  return a;
}

// Returns (g, s) with s*a = g (mod b), g monic gcd.
std::pair<Poly, Poly> pxgcd(const Poly& a, const Poly& b, const RingPtr& field) {
  Poly r0 = b, r1 = a;
  Poly s0, s1{Element::one(field)};
  trim(r1);
  while (!r1.empty()) {
    auto [q, r] = pdivmod(r0, r1, field);
    Poly s2 = padd(s0, pneg(pmul(q, s1, field)));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.empty()) return {r0, s0};
  const Element inv = inverse(r0.back());
  for (auto& c : r0) c = c * inv;
  for (auto& c : s0) c = c * inv;
  return {r0, s0};
}

Poly preduce(const Poly& a, const Poly& f, const RingPtr& field) { return pdivmod(a, f, field).second; }

Element make_residue(const RingPtr& ring, Poly p) {
  Poly r = preduce(p, ring->reduction_polynomial(), ring->base());
  return ElementAccess::make(ring, detail::ResidueData{std::move(r)});
}

// ---- printing -------------------------------------------------------------

std::string rational_string(const mpq_class& q) { return q.get_str(); }

int monomial_degree(const Monomial& m, const std::vector<Generator>& gens) {
  int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * gens[i].degree;
  return d;
}

std::string monomial_string(const Monomial& m, const std::vector<Generator>& gens) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += power_string(gens[i].name, m[i]);
  }
  return out;
}

std::string poly_string(const PolyTerms& terms, const std::vector<Generator>& gens) {
  std::vector<std::pair<const Monomial*, const mpq_class*>> order;
  for (const auto& [m, c] : terms) order.emplace_back(&m, &c);
  std::sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
    const int da = monomial_degree(*a.first, gens);
    const int db = monomial_degree(*b.first, gens);
    if (da != db) return da > db;
    return *a.first > *b.first;
  });
  std::vector<std::string> parts;
  for (const auto& [m, c] : order) parts.push_back(format_term(rational_string(*c), monomial_string(*m, gens)));
  return join_terms(parts);
}

std::string univariate_string(const std::vector<std::pair<int, const Element*>>& terms, const std::string& var) {
  // terms sorted by descending exponent
  std::vector<std::string> parts;
  for (const auto& [e, c] : terms) parts.push_back(format_term(c->to_string(), power_string(var, e)));
  return join_terms(parts);
}

std::string dense_poly_string(const Poly& p, const std::string& var) {
  std::vector<std::pair<int, const Element*>> terms;
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (!p[i].is_zero()) terms.emplace_back(i, &p[i]);
  return univariate_string(terms, var);
}

RingPtr zero_ring() { return integers_mod(1); }

RingPtr quotient_model(const RingPtr& m, const Element& r);

}  // namespace

RingPtr make_poly_quotient(const RingPtr& field, std::string variable, int degree, std::vector<Element> monic) {
  auto r = ElementAccess::new_ring();
  r->kind_ = RingKind::PolyQuotient;
  r->base_ = field;
  r->variable_ = std::move(variable);
  r->variable_degree_ = degree;
  r->reduction_ = std::move(monic);
  r->description_ = field->description() + "[" + r->variable_ + "]/(" +
                    dense_poly_string(r->reduction_, r->variable_) + ")";
  return r;
}

// ---- Ring accessors -------------------------------------------------------

namespace {
[[noreturn]] void wrong_kind(const Ring& r, const char* what) {
  throw Error(ErrorCode::Unsupported, std::string(what) + " is not defined for " + r.description());
}
}  // namespace

const mpz_class& Ring::modulus() const {
  if (kind_ != RingKind::IntegersMod) wrong_kind(*this, "modulus");
  return number_;
}
const mpz_class& Ring::prime() const {
  if (kind_ != RingKind::PLocal) wrong_kind(*this, "prime");
  return number_;
}
const RingPtr& Ring::base() const {
  if (!base_) wrong_kind(*this, "base");
  return base_;
}
const std::string& Ring::variable_name() const {
  if (kind_ != RingKind::Laurent && kind_ != RingKind::PolyQuotient) wrong_kind(*this, "variable");
  return variable_;
}
int Ring::variable_degree() const {
  if (kind_ != RingKind::Laurent && kind_ != RingKind::PolyQuotient) wrong_kind(*this, "variable degree");
  return variable_degree_;
}
const std::vector<Generator>& Ring::generators() const {
  if (kind_ != RingKind::Polynomial) wrong_kind(*this, "generators");
  return generators_;
}
std::optional<std::size_t> Ring::generator_index(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].name == name) return i;
  return std::nullopt;
}
const Element& Ring::quotient_generator() const {
  if (kind_ != RingKind::Quotient) wrong_kind(*this, "quotient generator");
  return *quotient_generator_;
}
const RingPtr& Ring::model() const {
  if (kind_ != RingKind::Quotient) wrong_kind(*this, "model");
  return model_;
}
const std::vector<Element>& Ring::reduction_polynomial() const {
  if (kind_ != RingKind::PolyQuotient) wrong_kind(*this, "reduction polynomial");
  return reduction_;
}

// ---- factories ------------------------------------------------------------

RingPtr integers() {
  static const RingPtr ring = [] {
    auto r = ElementAccess::new_ring();
    r->kind_ = RingKind::Integers;
    r->description_ = "Z";
    return RingPtr(r);
  }();
  return ring;
}

RingPtr rationals() {
  static const RingPtr ring = [] {
    auto r = ElementAccess::new_ring();
    r->kind_ = RingKind::Rationals;
    r->description_ = "Q";
    return RingPtr(r);
  }();
  return ring;
}

RingPtr integers_mod(const mpz_class& m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "modulus must be positive");
  auto r = ElementAccess::new_ring();
  r->kind_ = RingKind::IntegersMod;
  r->number_ = m;
  r->description_ = "Z/" + m.get_str();
  return r;
}

RingPtr p_local(const mpz_class& p) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, p.get_str() + " is not prime");
  auto r = ElementAccess::new_ring();
  r->kind_ = RingKind::PLocal;
  r->number_ = p;
  r->description_ = "Z_(" + p.get_str() + ")";
  return r;
}

RingPtr laurent(const RingPtr& base, std::string variable, int degree) {
  if (!base) throw Error(ErrorCode::InvalidArgument, "Laurent extension needs a base ring");
  if (variable.empty()) throw Error(ErrorCode::InvalidArgument, "empty variable name");
  if (base->kind() == RingKind::Laurent && base->variable_name() == variable) {
    throw Error(ErrorCode::InvalidArgument, "base is already a Laurent ring in " + variable);
  }
  auto r = ElementAccess::new_ring();
  r->kind_ = RingKind::Laurent;
  r->base_ = base;
  r->variable_ = std::move(variable);
  r->variable_degree_ = degree;
  r->description_ = base->description() + "[" + r->variable_ + "^+-1]";
  if (degree != 1) r->description_ += "{" + std::to_string(degree) + "}";
  return r;
}

RingPtr polynomial(const RingPtr& base, std::vector<Generator> generators) {
  if (!base || (base->kind() != RingKind::Integers && base->kind() != RingKind::Rationals)) {
    throw Error(ErrorCode::Unsupported, "polynomial rings are supported over Z and Q only");
  }
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].name.empty()) throw Error(ErrorCode::InvalidArgument, "empty generator name");
    for (std::size_t j = 0; j < i; ++j)
      if (generators[j].name == generators[i].name)
        throw Error(ErrorCode::InvalidArgument, "duplicate generator " + generators[i].name);
  }
  auto r = ElementAccess::new_ring();
  r->kind_ = RingKind::Polynomial;
  r->base_ = base;
  r->generators_ = std::move(generators);
  std::string d = base->description() + "[";
  for (std::size_t i = 0; i < r->generators_.size(); ++i) {
    if (i) d += ",";
    d += r->generators_[i].name + "(" + std::to_string(r->generators_[i].degree) + ")";
  }
  r->description_ = d + "]";
  return r;
}

RingPtr quotient_by_element(const RingPtr& ring, const Element& r) {
  require_valid(r);
  if (!same_ring(r.ring(), ring)) {
    throw Error(ErrorCode::RingMismatch, "generator lives in " + r.ring()->description());
  }
  if (r.is_zero()) throw Error(ErrorCode::InvalidArgument, "quotient generator must be nonzero");
  const RingPtr m = concrete(ring);
  auto q = ElementAccess::new_ring();
  q->kind_ = RingKind::Quotient;
  q->base_ = ring;
  q->quotient_generator_ = std::make_shared<const Element>(r);
  q->model_ = quotient_model(m, coerce(r, m));
  q->description_ = "(" + ring->description() + ")/(" + r.to_string() + ")";
  return q;
}

namespace {

RingPtr quotient_model(const RingPtr& m, const Element& r) {
  switch (m->kind()) {
    case RingKind::Integers: return integers_mod(abs(r.integer_value()));
    case RingKind::Rationals: return zero_ring();
    case RingKind::IntegersMod: return integers_mod(gcd(r.integer_value(), m->modulus()));
    case RingKind::PLocal: {
      mpz_class num = abs(r.rational_value().get_num());
      mpz_class pk = 1;
      while (num % m->prime() == 0) {
        num /= m->prime();
        pk *= m->prime();
      }
      return integers_mod(pk);
    }
    case RingKind::Laurent: {
      const auto& d = laurent_data(r);
      const RingPtr base = concrete(m->base());
      if (d.exponents.size() == 1) {
        const RingPtr inner = quotient_model(base, coerce(d.coefficients[0], base));
        if (is_zero_ring(inner)) return zero_ring();
        return laurent(inner, m->variable_name(), m->variable_degree());
      }
      if (is_field(base)) {
        const int lo = d.exponents.front();
        Poly f(d.exponents.back() - lo + 1, Element::zero(base));
        for (std::size_t i = 0; i < d.exponents.size(); ++i)
          f[d.exponents[i] - lo] = coerce(d.coefficients[i], base);
        return make_poly_quotient(base, m->variable_name(), m->variable_degree(), pmonic(std::move(f)));
      }
      throw Error(ErrorCode::Unsupported,
                  "no normal form for " + m->description() + " modulo non-monomial " + r.to_string());
    }
    case RingKind::PolyQuotient: {
      const auto [g, s] = pxgcd(residue_data(r).coefficients, m->reduction_polynomial(), m->base());
      (void)s;
      if (g.size() <= 1) return zero_ring();
      return make_poly_quotient(m->base(), m->variable_name(), m->variable_degree(), g);
    }
    case RingKind::Polynomial:
      if (is_unit(r)) return zero_ring();
      throw Error(ErrorCode::Unsupported, "no normal form for quotients of " + m->description());
    case RingKind::Quotient: break;
  }
  throw Error(ErrorCode::Unsupported, "quotient of " + m->description());
}

}  // namespace

// ---- ring predicates ------------------------------------------------------

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->description() == b->description();
}

RingPtr concrete(const RingPtr& ring) {
  RingPtr r = ring;
  while (r->kind() == RingKind::Quotient) r = r->model();
  return r;
}

bool is_zero_ring(const RingPtr& ring) {
  switch (ring->kind()) {
    case RingKind::IntegersMod: return ring->modulus() == 1;
    case RingKind::Laurent: return is_zero_ring(ring->base());
    case RingKind::Quotient: return is_zero_ring(ring->model());
    default: return false;
  }
}

bool is_q_algebra(const RingPtr& ring) {
  switch (ring->kind()) {
    case RingKind::Rationals: return true;
    case RingKind::IntegersMod: return ring->modulus() == 1;
    case RingKind::Laurent:
    case RingKind::Polynomial:
    case RingKind::PolyQuotient: return is_q_algebra(ring->base());
    case RingKind::Quotient: return is_q_algebra(ring->model());
    default: return false;
  }
}

bool is_field(const RingPtr& ring) {
  switch (ring->kind()) {
    case RingKind::Rationals: return true;
    case RingKind::IntegersMod: return is_prime(ring->modulus());
    case RingKind::Quotient: return is_field(ring->model());
    default: return false;
  }
}

bool is_domain(const RingPtr& ring) {
  switch (ring->kind()) {
    case RingKind::Integers:
    case RingKind::Rationals:
    case RingKind::PLocal:
    case RingKind::Polynomial: return true;
    case RingKind::IntegersMod: return is_prime(ring->modulus());
    case RingKind::Laurent: return is_domain(ring->base());
    case RingKind::Quotient: return is_domain(ring->model());
    case RingKind::PolyQuotient: return false;
  }
  return false;
}

bool is_prime(const mpz_class& n) { return n > 1 && mpz_probab_prime_p(n.get_mpz_t(), 40) > 0; }

std::vector<mpz_class> prime_divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> out;
  for (mpz_class d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// ---- Element construction -------------------------------------------------

Element Element::integer(const RingPtr& ring, const mpz_class& n) {
  if (!ring) throw Error(ErrorCode::InvalidArgument, "null ring");
  switch (ring->kind()) {
    case RingKind::Integers: return Element(ring, n);
    case RingKind::Rationals:
    case RingKind::PLocal: return Element(ring, mpq_class(n));
    case RingKind::IntegersMod: return Element(ring, mod_floor(n, ring->modulus()));
    case RingKind::Laurent: {
      std::map<int, Element> t;
      t.emplace(0, integer(ring->base(), n));
      return make_laurent(ring, t);
    }
    case RingKind::Polynomial: {
      PolyTerms t;
      t.emplace(Monomial(ring->generators().size(), 0), mpq_class(n));
      return make_poly(ring, std::move(t));
    }
    case RingKind::PolyQuotient: {
      Poly p{integer(ring->base(), n)};
      trim(p);
      return make_residue(ring, std::move(p));
    }
    case RingKind::Quotient: return wrap(ring, integer(ring->model(), n));
  }
  throw Error(ErrorCode::Unsupported, "integer in " + ring->description());
}

Element Element::rational(const RingPtr& ring, const mpq_class& value) {
  mpq_class q = value;
  q.canonicalize();
  if (q.get_den() == 1) return integer(ring, q.get_num());
  switch (ring->kind()) {
    case RingKind::Integers: break;
    case RingKind::Rationals: return Element(ring, q);
    case RingKind::PLocal:
      if (q.get_den() % ring->prime() == 0) break;
      return Element(ring, q);
    case RingKind::IntegersMod: {
      const mpz_class& m = ring->modulus();
      if (m == 1) return zero(ring);
      if (gcd(q.get_den(), m) != 1) break;
      return Element(ring, mod_floor(q.get_num() * mod_inverse(q.get_den(), m), m));
    }
    case RingKind::Laurent: {
      std::map<int, Element> t;
      t.emplace(0, rational(ring->base(), q));
      return make_laurent(ring, t);
    }
    case RingKind::Polynomial: {
      if (ring->base()->kind() != RingKind::Rationals) break;
      PolyTerms t;
      t.emplace(Monomial(ring->generators().size(), 0), q);
      return make_poly(ring, std::move(t));
    }
    case RingKind::PolyQuotient: return make_residue(ring, Poly{rational(ring->base(), q)});
    case RingKind::Quotient: return wrap(ring, rational(ring->model(), q));
  }
  throw Error(ErrorCode::NotRepresentable, q.get_str() + " in " + ring->description());
}

Element Element::variable(const RingPtr& ring, std::string_view name) {
  switch (ring->kind()) {
    case RingKind::Laurent: {
      if (ring->variable_name() == name) {
        std::map<int, Element> t;
        t.emplace(1, one(ring->base()));
        return make_laurent(ring, t);
      }
      std::map<int, Element> t;
      t.emplace(0, variable(ring->base(), name));
      return make_laurent(ring, t);
    }
    case RingKind::Polynomial: {
      const auto idx = ring->generator_index(name);
      if (!idx) break;
      Monomial m(ring->generators().size(), 0);
      m[*idx] = 1;
      PolyTerms t;
      t.emplace(std::move(m), mpq_class(1));
      return make_poly(ring, std::move(t));
    }
    case RingKind::PolyQuotient:
      if (ring->variable_name() != name) break;
      return make_residue(ring, Poly{zero(ring->base()), one(ring->base())});
    case RingKind::Quotient: return coerce(variable(ring->base(), name), ring);
    default: break;
  }
  throw Error(ErrorCode::UnknownVariable, std::string(name) + " in " + ring->description());
}

Element Element::from_laurent(const RingPtr& ring, const std::map<int, Element>& terms) {
  if (ring->kind() != RingKind::Laurent) wrong_kind(*ring, "Laurent construction");
  for (const auto& [e, c] : terms)
    if (!same_ring(c.ring(), ring->base())) throw Error(ErrorCode::RingMismatch, "Laurent coefficient ring");
  return make_laurent(ring, terms);
}

Element Element::from_poly(const RingPtr& ring, PolyTerms terms) {
  if (ring->kind() != RingKind::Polynomial) wrong_kind(*ring, "polynomial construction");
  for (const auto& [m, c] : terms)
    if (m.size() != ring->generators().size()) throw Error(ErrorCode::InvalidArgument, "monomial arity");
  return make_poly(ring, std::move(terms));
}

// ---- payload views --------------------------------------------------------

const mpz_class& Element::integer_value() const {
  if (const auto* v = std::get_if<mpz_class>(&data_)) return *v;
  wrong_kind(*ring_, "integer value");
}
const mpq_class& Element::rational_value() const {
  if (const auto* v = std::get_if<mpq_class>(&data_)) return *v;
  wrong_kind(*ring_, "rational value");
}
std::map<int, Element> Element::laurent_terms() const {
  const auto* d = std::get_if<detail::LaurentData>(&data_);
  if (!d) wrong_kind(*ring_, "Laurent terms");
  std::map<int, Element> out;
  for (std::size_t i = 0; i < d->exponents.size(); ++i) out.emplace(d->exponents[i], d->coefficients[i]);
  return out;
}
const PolyTerms& Element::poly_terms() const {
  const auto* d = std::get_if<detail::PolyData>(&data_);
  if (!d) wrong_kind(*ring_, "polynomial terms");
  return d->terms;
}
const std::vector<Element>& Element::residue_coefficients() const {
  const auto* d = std::get_if<detail::ResidueData>(&data_);
  if (!d) wrong_kind(*ring_, "residue coefficients");
  return d->coefficients;
}
const Element& Element::representative() const {
  const auto* d = std::get_if<detail::CosetData>(&data_);
  if (!d) wrong_kind(*ring_, "coset representative");
  return *d->representative;
}

bool Element::is_zero() const {
  require_valid(*this);
  return std::visit(
      [](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, mpz_class> || std::is_same_v<T, mpq_class>) {
          return v == 0;
        } else if constexpr (std::is_same_v<T, detail::LaurentData>) {
          return v.exponents.empty();
        } else if constexpr (std::is_same_v<T, detail::PolyData>) {
          return v.terms.empty();
        } else if constexpr (std::is_same_v<T, detail::ResidueData>) {
          return v.coefficients.empty();
        } else {
          return v.representative->is_zero();
        }
      },
      data_);
}

bool Element::is_one() const { return *this == one(ring_); }

// ---- arithmetic -----------------------------------------------------------

Element operator+(const Element& a, const Element& b) {
  require_same(a, b);
  const RingPtr& r = a.ring_;
  switch (r->kind()) {
    case RingKind::Integers: return Element(r, mpz_class(a.integer_value() + b.integer_value()));
    case RingKind::Rationals:
    case RingKind::PLocal: return Element(r, mpq_class(a.rational_value() + b.rational_value()));
    case RingKind::IntegersMod:
      return Element(r, mod_floor(a.integer_value() + b.integer_value(), r->modulus()));
    case RingKind::Laurent: {
      std::map<int, Element> t = a.laurent_terms();
      const auto& bd = laurent_data(b);
      for (std::size_t i = 0; i < bd.exponents.size(); ++i) {
        auto it = t.find(bd.exponents[i]);
        if (it == t.end()) {
          t.emplace(bd.exponents[i], bd.coefficients[i]);
        } else {
          it->second = it->second + bd.coefficients[i];
        }
      }
      return make_laurent(r, t);
    }
    case RingKind::Polynomial: {
      PolyTerms t = a.poly_terms();
      for (const auto& [m, c] : b.poly_terms()) t[m] += c;
      return make_poly(r, std::move(t));
    }
    case RingKind::PolyQuotient:
      return Element(r, detail::ResidueData{padd(a.residue_coefficients(), b.residue_coefficients())});
    case RingKind::Quotient: return wrap(r, a.representative() + b.representative());
  }
  throw Error(ErrorCode::Unsupported, "addition");
}

Element operator-(const Element& a) {
  require_valid(a);
  const RingPtr& r = a.ring_;
  switch (r->kind()) {
    case RingKind::Integers: return Element(r, mpz_class(-a.integer_value()));
    case RingKind::Rationals:
    case RingKind::PLocal: return Element(r, mpq_class(-a.rational_value()));
    case RingKind::IntegersMod: return Element(r, mod_floor(-a.integer_value(), r->modulus()));
    case RingKind::Laurent: {
      detail::LaurentData d = laurent_data(a);
      for (auto& c : d.coefficients) c = -c;
      return Element(r, std::move(d));
    }
    case RingKind::Polynomial: {
      PolyTerms t = a.poly_terms();
      for (auto& [m, c] : t) c = -c;
      return Element(r, detail::PolyData{std::move(t)});
    }
    case RingKind::PolyQuotient: return Element(r, detail::ResidueData{pneg(a.residue_coefficients())});
    case RingKind::Quotient: return wrap(r, -a.representative());
  }
  throw Error(ErrorCode::Unsupported, "negation");
}

Element operator-(const Element& a, const Element& b) { return a + (-b); }

Element operator*(const Element& a, const Element& b) {
  require_same(a, b);
  const RingPtr& r = a.ring_;
  switch (r->kind()) {
    case RingKind::Integers: return Element(r, mpz_class(a.integer_value() * b.integer_value()));
    case RingKind::Rationals:
    case RingKind::PLocal: return Element(r, mpq_class(a.rational_value() * b.rational_value()));
    case RingKind::IntegersMod:
      return Element(r, mod_floor(a.integer_value() * b.integer_value(), r->modulus()));
    case RingKind::Laurent: {
      const auto& ad = laurent_data(a);
      const auto& bd = laurent_data(b);
      std::map<int, Element> t;
      for (std::size_t i = 0; i < ad.exponents.size(); ++i) {
        for (std::size_t j = 0; j < bd.exponents.size(); ++j) {
          const int e = ad.exponents[i] + bd.exponents[j];
          Element c = ad.coefficients[i] * bd.coefficients[j];
          auto it = t.find(e);
          if (it == t.end()) {
            t.emplace(e, std::move(c));
          } else {
            it->second = it->second + c;
          }
        }
      }
      return make_laurent(r, t);
    }
    case RingKind::Polynomial: {
      PolyTerms t;
      const std::size_t n = r->generators().size();
      Monomial m(n);
      for (const auto& [ma, ca] : a.poly_terms()) {
        for (const auto& [mb, cb] : b.poly_terms()) {
          for (std::size_t k = 0; k < n; ++k) m[k] = ma[k] + mb[k];
          t[m] += ca * cb;
        }
      }
      return make_poly(r, std::move(t));
    }
    case RingKind::PolyQuotient:
      return make_residue(r, pmul(a.residue_coefficients(), b.residue_coefficients(), r->base()));
    case RingKind::Quotient: return wrap(r, a.representative() * b.representative());
  }
  throw Error(ErrorCode::Unsupported, "multiplication");
}

bool operator==(const Element& a, const Element& b) {
  if (!a.valid() || !b.valid()) return a.valid() == b.valid();
  if (!same_ring(a.ring_, b.ring_)) return false;
  return std::visit(
      [&](const auto& va) -> bool {
        using T = std::decay_t<decltype(va)>;
        const auto& vb = std::get<T>(b.data_);
        if constexpr (std::is_same_v<T, mpz_class> || std::is_same_v<T, mpq_class>) {
          return va == vb;
        } else if constexpr (std::is_same_v<T, detail::LaurentData>) {
          return va.exponents == vb.exponents && va.coefficients == vb.coefficients;
        } else if constexpr (std::is_same_v<T, detail::PolyData>) {
          return va.terms == vb.terms;
        } else if constexpr (std::is_same_v<T, detail::ResidueData>) {
          return va.coefficients == vb.coefficients;
        } else {
          return *va.representative == *vb.representative;
        }
      },
      a.data_);
}

std::string Element::to_string() const {
  require_valid(*this);
  switch (ring_->kind()) {
    case RingKind::Integers:
    case RingKind::IntegersMod: return integer_value().get_str();
    case RingKind::Rationals:
    case RingKind::PLocal: return rational_string(rational_value());
    case RingKind::Laurent: {
      const auto& d = laurent_data(*this);
      std::vector<std::pair<int, const Element*>> terms;
      for (std::size_t i = d.exponents.size(); i-- > 0;) terms.emplace_back(d.exponents[i], &d.coefficients[i]);
      return univariate_string(terms, ring_->variable_name());
    }
    case RingKind::Polynomial: return poly_string(poly_terms(), ring_->generators());
    case RingKind::PolyQuotient: return dense_poly_string(residue_coefficients(), ring_->variable_name());
    case RingKind::Quotient: return representative().to_string();
  }
  return "?";
}

// ---- units, inverses, zero divisors --------------------------------------

namespace {

struct PrimePower {
  mpz_class prime;
  unsigned exponent;
  mpz_class value;
};

std::vector<PrimePower> factor(const mpz_class& n) {
  std::vector<PrimePower> out;
  mpz_class rest = n;
  for (const auto& p : prime_divisors(n)) {
    PrimePower pp{p, 0, 1};
    while (rest % p == 0) {
      rest /= p;
      ++pp.exponent;
      pp.value *= p;
    }
    out.push_back(pp);
  }
  return out;
}

// Coefficients of a Laurent element viewed in the concrete base ring.
std::vector<std::pair<int, Element>> concrete_terms(const Element& a) {
  const RingPtr base = concrete(a.ring()->base());
  const auto& d = laurent_data(a);
  std::vector<std::pair<int, Element>> out;
  for (std::size_t i = 0; i < d.exponents.size(); ++i) out.emplace_back(d.exponents[i], coerce(d.coefficients[i], base));
  return out;
}

bool laurent_is_unit(const Element& a) {
  const RingPtr base = concrete(a.ring()->base());
  const auto terms = concrete_terms(a);
  if (is_domain(base)) return terms.size() == 1 && is_unit(terms.front().second);
  if (base->kind() == RingKind::IntegersMod) {
    for (const auto& q : prime_divisors(base->modulus())) {
      int units = 0;
      for (const auto& [e, c] : terms)
        if (c.integer_value() % q != 0) ++units;
      if (units != 1) return false;
    }
    return true;
  }
  throw Error(ErrorCode::Undecidable, "unit test in " + a.ring()->description());
}

Element laurent_inverse(const Element& a) {
  const RingPtr& ring = a.ring();
  const RingPtr base = concrete(ring->base());
  const auto terms = concrete_terms(a);
  if (is_domain(base)) {
    if (terms.size() != 1) throw Error(ErrorCode::NotInvertible, a.to_string());
    std::map<int, Element> t;
    t.emplace(-terms.front().first, coerce(inverse(terms.front().second), ring->base()));
    return make_laurent(ring, t);
  }
  if (base->kind() != RingKind::IntegersMod) {
    throw Error(ErrorCode::Undecidable, "inverse in " + ring->description());
  }
  if (!laurent_is_unit(a)) throw Error(ErrorCode::NotInvertible, a.to_string());
  // Invert modulo each prime power: u = c*v^k*(1 + n) with n nilpotent, then
  // glue the local inverses coefficientwise by CRT.
  const mpz_class& m = base->modulus();
  const RingPtr concrete_laurent = laurent(base, ring->variable_name(), ring->variable_degree());
  std::map<int, Element> lifted;
  for (const auto& [e, c] : terms) lifted.emplace(e, c);
  const Element u_m = make_laurent(concrete_laurent, lifted);
  std::map<int, mpz_class> combined;
  for (const auto& pp : factor(m)) {
    const RingPtr local = laurent(integers_mod(pp.value), ring->variable_name(), ring->variable_degree());
    const Element u = coerce(u_m, local);
    const auto& ud = laurent_data(u);
    std::size_t lead = ud.exponents.size();
    for (std::size_t i = 0; i < ud.exponents.size(); ++i)
      if (ud.coefficients[i].integer_value() % pp.prime != 0) lead = i;
    std::map<int, Element> lt;
    lt.emplace(-ud.exponents[lead], inverse(ud.coefficients[lead]));
    const Element lead_inv = make_laurent(local, lt);
    const Element n = lead_inv * u - Element::one(local);
    Element sum = Element::one(local);
    Element power = Element::one(local);
    for (unsigned i = 1; i < pp.exponent; ++i) {
      power = power * (-n);
      sum = sum + power;
    }
    const Element inv_local = lead_inv * sum;
    const mpz_class cofactor = m / pp.value;
    const mpz_class weight = cofactor * mod_inverse(cofactor % pp.value, pp.value);
    for (const auto& [e, c] : inv_local.laurent_terms()) combined[e] += c.integer_value() * weight;
  }
  std::map<int, Element> out;
  for (const auto& [e, c] : combined) out.emplace(e, Element::integer(base, c));
  return coerce(make_laurent(concrete_laurent, out), ring);
}

}  // namespace

bool is_unit(const Element& a) {
  require_valid(a);
  const RingPtr& r = a.ring();
  switch (r->kind()) {
    case RingKind::Integers: return abs(a.integer_value()) == 1;
    case RingKind::Rationals: return a.rational_value() != 0;
    case RingKind::PLocal: return gcd(a.rational_value().get_num(), r->prime()) == 1;
    case RingKind::IntegersMod: return gcd(a.integer_value(), r->modulus()) == 1;
    case RingKind::Laurent: return laurent_is_unit(a);
    case RingKind::Polynomial: {
      const auto& t = a.poly_terms();
      if (t.size() != 1) return false;
      const auto& [m, c] = *t.begin();
      if (std::any_of(m.begin(), m.end(), [](int e) { return e != 0; })) return false;
      return r->base()->kind() == RingKind::Rationals || abs(c) == 1;
    }
    case RingKind::PolyQuotient: {
      const auto [g, s] = pxgcd(a.residue_coefficients(), r->reduction_polynomial(), r->base());
      (void)s;
      return g.size() == 1;
    }
    case RingKind::Quotient: return is_unit(a.representative());
  }
  return false;
}

Element inverse(const Element& a) {
  require_valid(a);
  const RingPtr& r = a.ring();
  switch (r->kind()) {
    case RingKind::Integers:
      if (!is_unit(a)) break;
      return a;
    case RingKind::Rationals:
    case RingKind::PLocal:
      if (!is_unit(a)) break;
      return Element::rational(r, 1 / a.rational_value());
    case RingKind::IntegersMod:
      if (r->modulus() == 1) return a;
      if (!is_unit(a)) break;
      return Element::integer(r, mod_inverse(a.integer_value(), r->modulus()));
    case RingKind::Laurent: return laurent_inverse(a);
    case RingKind::Polynomial: {
      if (!is_unit(a)) break;
      PolyTerms t;
      t.emplace(a.poly_terms().begin()->first, 1 / a.poly_terms().begin()->second);
      return Element::from_poly(r, std::move(t));
    }
    case RingKind::PolyQuotient: {
      const auto [g, s] = pxgcd(a.residue_coefficients(), r->reduction_polynomial(), r->base());
      if (g.size() != 1) break;
      return make_residue(r, s);
    }
    case RingKind::Quotient: return wrap(r, inverse(a.representative()));
  }
  throw Error(ErrorCode::NotInvertible, a.to_string() + " in " + r->description());
}

Element pow(const Element& a, long exponent) {
  Element base = exponent < 0 ? inverse(a) : a;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  Element result = Element::one(a.ring());
  while (e) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::optional<Element> annihilator_witness(const Element& a) {
  require_valid(a);
  const RingPtr& r = a.ring();
  if (is_zero_ring(r)) return std::nullopt;
  switch (r->kind()) {
    case RingKind::IntegersMod: {
      const mpz_class g = gcd(a.integer_value(), r->modulus());
      if (g == 1) return std::nullopt;
      return Element::integer(r, r->modulus() / g);
    }
    case RingKind::Laurent: {
      const RingPtr base = concrete(r->base());
      if (is_domain(base)) break;
      if (base->kind() == RingKind::IntegersMod) {
        // McCoy: a Laurent polynomial is a zero divisor iff a nonzero constant kills it.
        mpz_class g = base->modulus();
        for (const auto& [e, c] : concrete_terms(a)) g = gcd(g, c.integer_value());
        if (g == 1) return std::nullopt;
        return Element::integer(r, base->modulus() / g);
      }
      throw Error(ErrorCode::Undecidable, "zero-divisor test in " + r->description());
    }
    case RingKind::PolyQuotient: {
      const auto& f = r->reduction_polynomial();
      const auto [g, s] = pxgcd(a.residue_coefficients(), f, r->base());
      (void)s;
      if (g.size() == 1) return std::nullopt;
      return make_residue(r, pdivmod(f, g, r->base()).first);
    }
    case RingKind::Quotient: {
      auto w = annihilator_witness(a.representative());
      if (!w) return std::nullopt;
      return wrap(r, *w);
    }
    default: break;
  }
  if (!is_domain(r)) throw Error(ErrorCode::Undecidable, "zero-divisor test in " + r->description());
  if (a.is_zero()) return Element::one(r);
  return std::nullopt;
}

// ---- coercion -------------------------------------------------------------

namespace {
Element embed_constant(const RingPtr& target, const Element& c) {
  if (target->kind() == RingKind::Laurent) {
    std::map<int, Element> t;
    t.emplace(0, c);
    return make_laurent(target, t);
  }
  Poly p{c};
  trim(p);
  return make_residue(target, std::move(p));
}
}  // namespace

Element coerce(const Element& a, const RingPtr& target) {
  require_valid(a);
  const RingPtr& source = a.ring();
  if (same_ring(source, target)) return a;
  if (target->kind() == RingKind::Quotient) {
    std::optional<Element> in_base;
    try {
      in_base = coerce(a, target->base());
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotRepresentable) throw;
    }
    return wrap(target, in_base ? coerce(*in_base, target->model()) : coerce(a, target->model()));
  }
  if (source->kind() == RingKind::Quotient) return coerce(a.representative(), target);
  if (target->kind() == RingKind::IntegersMod && target->modulus() == 1) return Element::zero(target);

  switch (source->kind()) {
    case RingKind::Integers: return Element::integer(target, a.integer_value());
    case RingKind::Rationals:
    case RingKind::PLocal: return Element::rational(target, a.rational_value());
    case RingKind::IntegersMod:
      if (target->kind() == RingKind::IntegersMod && source->modulus() % target->modulus() == 0) {
        return Element::integer(target, a.integer_value());
      }
      if (target->kind() == RingKind::Laurent || target->kind() == RingKind::PolyQuotient) {
        return embed_constant(target, coerce(a, target->base()));
      }
      break;
    case RingKind::Laurent:
      if (target->kind() == RingKind::Laurent && target->variable_name() == source->variable_name()) {
        std::map<int, Element> t;
        for (const auto& [e, c] : a.laurent_terms()) t.emplace(e, coerce(c, target->base()));
        return make_laurent(target, t);
      }
      if (target->kind() == RingKind::PolyQuotient && target->variable_name() == source->variable_name()) {
        const Element v = Element::variable(target, target->variable_name());
        Element out = Element::zero(target);
        for (const auto& [e, c] : a.laurent_terms())
          out = out + embed_constant(target, coerce(c, target->base())) * pow(v, e);
        return out;
      }
      if (target->kind() == RingKind::Laurent) break;
      break;
    case RingKind::Polynomial:
      if (target->kind() == RingKind::Polynomial) {
        const auto& gens = source->generators();
        std::vector<std::size_t> map(gens.size());
        for (std::size_t i = 0; i < gens.size(); ++i) {
          const auto idx = target->generator_index(gens[i].name);
          if (!idx) throw Error(ErrorCode::NotRepresentable, gens[i].name + " in " + target->description());
          map[i] = *idx;
        }
        PolyTerms t;
        for (const auto& [m, c] : a.poly_terms()) {
          Monomial tm(target->generators().size(), 0);
          for (std::size_t i = 0; i < m.size(); ++i) tm[map[i]] += m[i];
          t[tm] += c;
        }
        return make_poly(target, std::move(t));
      }
      break;
    case RingKind::PolyQuotient:
      if (target->kind() == RingKind::PolyQuotient && target->variable_name() == source->variable_name()) {
        Poly p;
        for (const auto& c : a.residue_coefficients()) p.push_back(coerce(c, target->base()));
        trim(p);
        return make_residue(target, std::move(p));
      }
      break;
    case RingKind::Quotient: break;
  }
  throw Error(ErrorCode::NotRepresentable,
              a.to_string() + " from " + source->description() + " into " + target->description());
}

std::variant<Element, bool> ring_arithmetic(const Element& a, const Element& b, ArithmeticOp op) {
  switch (op) {
    case ArithmeticOp::Add: return a + b;
    case ArithmeticOp::Mul: return a * b;
    case ArithmeticOp::Neg: return -a;
    case ArithmeticOp::Eq: require_same(a, b); return a == b;
    case ArithmeticOp::IsUnit: return is_unit(a);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown operation");
}

// ---- grading --------------------------------------------------------------

namespace {
int lookup_degree(const DegreeMap& degrees, const std::string& name, int fallback) {
  const auto it = degrees.find(name);
  return it == degrees.end() ? fallback : it->second;
}

Homogeneity combine(Homogeneity acc, int term_degree, bool first) {
  if (first) return Homogeneity{false, true, term_degree};
  if (!acc.homogeneous || acc.degree != term_degree) acc.homogeneous = false;
  return acc;
}
}  // namespace

Homogeneity homogeneity(const Element& a, const DegreeMap& degrees) {
  require_valid(a);
  if (a.is_zero()) return Homogeneity{true, true, 0};
  const RingPtr& r = a.ring();
  switch (r->kind()) {
    case RingKind::Laurent:
    case RingKind::PolyQuotient: {
      const int vd = lookup_degree(degrees, r->variable_name(), r->variable_degree());
      std::vector<std::pair<int, Element>> terms;
      if (r->kind() == RingKind::Laurent) {
        for (auto& t : a.laurent_terms()) terms.emplace_back(t.first, t.second);
      } else {
        const auto& c = a.residue_coefficients();
        for (std::size_t i = 0; i < c.size(); ++i)
          if (!c[i].is_zero()) terms.emplace_back(static_cast<int>(i), c[i]);
      }
      Homogeneity acc;
      bool first = true;
      for (const auto& [e, c] : terms) {
        const Homogeneity h = homogeneity(c, degrees);
        if (!h.homogeneous) return Homogeneity{false, false, 0};
        acc = combine(acc, e * vd + h.degree, first);
        first = false;
      }
      return acc;
    }
    case RingKind::Polynomial: {
      const auto& gens = r->generators();
      Homogeneity acc;
      bool first = true;
      for (const auto& [m, c] : a.poly_terms()) {
        int d = 0;
        for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * lookup_degree(degrees, gens[i].name, gens[i].degree);
        acc = combine(acc, d, first);
        first = false;
      }
      return acc;
    }
    case RingKind::Quotient: return homogeneity(a.representative(), degrees);
    default: return Homogeneity{false, true, 0};
  }
}

DegreeMap declared_degrees(const RingPtr& ring) {
  DegreeMap out;
  switch (ring->kind()) {
    case RingKind::Laurent:
      out = declared_degrees(ring->base());
      out[ring->variable_name()] = ring->variable_degree();
      break;
    case RingKind::PolyQuotient: out[ring->variable_name()] = ring->variable_degree(); break;
    case RingKind::Polynomial:
      for (const auto& g : ring->generators()) out[g.name] = g.degree;
      break;
    case RingKind::Quotient: out = declared_degrees(ring->base()); break;
    default: break;
  }
  return out;
}

}  // namespace fglforge
