#include "fglforge/series.hpp"

#include <algorithm>
#include <cctype>

#include "fglforge/format.hpp"

namespace fglforge {

namespace {

void require_precision(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative precision");
}

void require_same(const RingPtr& a, const RingPtr& b) {
  if (!a || !b) throw Error(ErrorCode::InvalidArgument, "coefficient without a ring");
  if (!same_ring(a, b)) throw Error(ErrorCode::RingMismatch, a->description() + " vs " + b->description());
}

bool is_integer_literal(const std::string& s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<long>(i), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::string series_term(const std::string& coeff, const std::string& mono) {
  if (!mono.empty() && coeff != "1" && coeff != "-1" && is_integer_literal(coeff)) return coeff + mono;
  return format_term(coeff, mono);
}

}  // namespace

Series::Series(RingPtr ring, int precision) : ring_(std::move(ring)) {
  require_precision(precision);
  coeffs_.assign(static_cast<std::size_t>(precision) + 1, Element::zero(ring_));
}

Series::Series(RingPtr ring, std::vector<Element> coefficients) : ring_(std::move(ring)), coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw Error(ErrorCode::InvalidArgument, "series needs at least one coefficient");
  for (const auto& c : coeffs_) require_same(c.ring(), ring_);
}

Series Series::x(const RingPtr& ring, int precision) {
  Series s(ring, precision);
  if (precision >= 1) s.coeffs_[1] = Element::one(ring);
  return s;
}

Series Series::constant(const Element& c, int precision) {
  Series s(c.ring(), precision);
  s.coeffs_[0] = c;
  return s;
}

Series Series::from_rationals(const RingPtr& ring, const std::vector<mpq_class>& coefficients) {
  std::vector<Element> c;
  c.reserve(coefficients.size());
  for (const auto& q : coefficients) c.push_back(Element::rational(ring, q));
  return Series(ring, std::move(c));
}

void Series::set(int i, Element value) {
  require_same(value.ring(), ring_);
  coeffs_.at(static_cast<std::size_t>(i)) = std::move(value);
}

bool Series::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Element& c) { return c.is_zero(); });
}

Series Series::truncated(int precision) const {
  require_precision(precision);
  if (precision > this->precision()) {
    throw Error(ErrorCode::InsufficientPrecision,
                "cannot extend precision " + std::to_string(this->precision()) + " to " + std::to_string(precision));
  }
  return Series(ring_, std::vector<Element>(coeffs_.begin(), coeffs_.begin() + precision + 1));
}

std::string Series::to_string(const std::string& var) const {
  std::vector<std::string> terms;
  for (int i = 0; i <= precision(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    terms.push_back(series_term(coeffs_[i].to_string(), power_string(var, i)));
  }
  return join_terms(terms);
}

Series operator+(const Series& a, const Series& b) {
  require_same(a.ring_, b.ring_);
  const int n = std::min(a.precision(), b.precision());
  Series r(a.ring_, n);
  for (int i = 0; i <= n; ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
  return r;
}

Series operator-(const Series& a) {
  Series r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Series operator-(const Series& a, const Series& b) { return a + (-b); }

Series operator*(const Series& a, const Series& b) {
  require_same(a.ring_, b.ring_);
  const int n = std::min(a.precision(), b.precision());
  Series r(a.ring_, n);
  for (int i = 0; i <= n; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return r;
}

Series operator*(const Element& c, const Series& f) {
  require_same(c.ring(), f.ring_);
  Series r = f;
  for (auto& x : r.coeffs_) x = c * x;
  return r;
}

bool operator==(const Series& a, const Series& b) {
  return same_ring(a.ring_, b.ring_) && a.coeffs_ == b.coeffs_;
}

Series map_coefficients(const Series& f, const RingPtr& target, const std::function<Element(const Element&)>& fn) {
  std::vector<Element> c;
  c.reserve(f.coefficients().size());
  for (const auto& x : f.coefficients()) c.push_back(fn(x));
  return Series(target, std::move(c));
}

Series coerce(const Series& f, const RingPtr& target) {
  return map_coefficients(f, target, [&](const Element& c) { return coerce(c, target); });
}

Series compose(const Series& f, const Series& g) {
  require_same(f.ring(), g.ring());
  if (!g[0].is_zero()) throw Error(ErrorCode::NonzeroConstantTerm, "inner series has constant term " + g[0].to_string());
  const int n = std::min(f.precision(), g.precision());
  const Series inner = g.truncated(n);
  Series acc = Series::constant(f[n], n);
  for (int i = n - 1; i >= 0; --i) {
    acc = acc * inner;
    acc.set(0, acc[0] + f[i]);
  }
  return acc;
}

Series revert(const Series& f) {
  const RingPtr& ring = f.ring();
  const int n = f.precision();
  if (!f[0].is_zero()) throw Error(ErrorCode::NonzeroConstantTerm, "series has constant term " + f[0].to_string());
  if (n < 1) return Series(ring, n);
  if (!is_unit(f[1])) throw Error(ErrorCode::NonUnitLinearCoefficient, f[1].to_string());
  const Element u = inverse(f[1]);
  // powers[k][m] = [x^m] g^k, filled one degree at a time; [x^m] g^k for k >= 2
  // only involves coefficients of g below m.
  const Element zero = Element::zero(ring);
  std::vector<std::vector<Element>> powers(static_cast<std::size_t>(n) + 1,
                                           std::vector<Element>(static_cast<std::size_t>(n) + 1, zero));
  powers[1][1] = u;
  for (int m = 2; m <= n; ++m) {
    Element h = zero;
    for (int k = 2; k <= m; ++k) {
      Element c = zero;
      for (int i = 1; i <= m - k + 1; ++i) {
        if (powers[1][i].is_zero() || powers[k - 1][m - i].is_zero()) continue;
        c += powers[1][i] * powers[k - 1][m - i];
      }
      powers[k][m] = c;
      if (!f[k].is_zero() && !c.is_zero()) h += f[k] * c;
    }
    powers[1][m] = -(u * h);
  }
  return Series(ring, powers[1]);
}

Series derive(const Series& f) {
  if (f.precision() < 1) throw Error(ErrorCode::InsufficientPrecision, "derivative needs precision >= 1");
  Series r(f.ring(), f.precision() - 1);
  for (int i = 1; i <= f.precision(); ++i) r.set(i - 1, Element::integer(f.ring(), i) * f[i]);
  return r;
}

Series integrate(const Series& f) {
  Series r(f.ring(), f.precision() + 1);
  for (int i = 0; i <= f.precision(); ++i) {
    if (f[i].is_zero()) continue;
    r.set(i + 1, Element::rational(f.ring(), mpq_class(1, i + 1)) * f[i]);
  }
  return r;
}

Series reciprocal(const Series& f) {
  const Element g0 = inverse(f[0]);
  Series g(f.ring(), f.precision());
  g.set(0, g0);
  for (int m = 1; m <= f.precision(); ++m) {
    Element acc = Element::zero(f.ring());
    for (int i = 1; i <= m; ++i)
      if (!f[i].is_zero()) acc += f[i] * g[m - i];
    g.set(m, -(g0 * acc));
  }
  return g;
}

Series pow(const Series& f, int k) {
  Series base = k < 0 ? reciprocal(f) : f;
  unsigned e = k < 0 ? static_cast<unsigned>(-k) : static_cast<unsigned>(k);
  Series acc = Series::constant(Element::one(f.ring()), f.precision());
  while (e) {
    if (e & 1U) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

// ---- two variables --------------------------------------------------------

Series2::Series2(RingPtr ring, int precision) : ring_(std::move(ring)), precision_(precision) {
  require_precision(precision);
  zero_ = Element::zero(ring_);
  const std::size_t n = static_cast<std::size_t>(precision) + 1;
  coeffs_.assign(n * (n + 1) / 2, zero_);
}

std::size_t Series2::index(int i, int j) const {
  const std::size_t ui = static_cast<std::size_t>(i);
  const std::size_t n = static_cast<std::size_t>(precision_) + 1;
  return ui * n - ui * (ui - 1) / 2 + static_cast<std::size_t>(j);
}

const Element& Series2::at(int i, int j) const {
  if (i < 0 || j < 0 || i + j > precision_) return zero_;
  return coeffs_[index(i, j)];
}

void Series2::set(int i, int j, Element value) {
  if (i < 0 || j < 0 || i + j > precision_) {
    throw Error(ErrorCode::InvalidArgument, "coefficient (" + std::to_string(i) + "," + std::to_string(j) + ") beyond precision");
  }
  require_same(value.ring(), ring_);
  coeffs_[index(i, j)] = std::move(value);
}

Series2 Series2::in_x(const Series& f) {
  Series2 r(f.ring(), f.precision());
  for (int i = 0; i <= f.precision(); ++i) r.coeffs_[r.index(i, 0)] = f[i];
  return r;
}

Series2 Series2::in_y(const Series& f) {
  Series2 r(f.ring(), f.precision());
  for (int j = 0; j <= f.precision(); ++j) r.coeffs_[r.index(0, j)] = f[j];
  return r;
}

Series2 Series2::truncated(int precision) const {
  if (precision > precision_) throw Error(ErrorCode::InsufficientPrecision, "cannot extend precision");
  Series2 r(ring_, precision);
  for (int i = 0; i <= precision; ++i)
    for (int j = 0; i + j <= precision; ++j) r.coeffs_[r.index(i, j)] = at(i, j);
  return r;
}

Series2 Series2::swapped() const {
  Series2 r(ring_, precision_);
  for (int i = 0; i <= precision_; ++i)
    for (int j = 0; i + j <= precision_; ++j) r.coeffs_[r.index(j, i)] = at(i, j);
  return r;
}

std::string Series2::to_string() const {
  std::vector<std::string> terms;
  for (int d = 0; d <= precision_; ++d) {
    for (int i = d; i >= 0; --i) {
      const Element& c = at(i, d - i);
      if (c.is_zero()) continue;
      std::string mono = power_string("x", i);
      const std::string y = power_string("y", d - i);
      if (!y.empty()) mono = mono.empty() ? y : mono + "*" + y;
      terms.push_back(series_term(c.to_string(), mono));
    }
  }
  return join_terms(terms);
}

Series2 operator+(const Series2& a, const Series2& b) {
  require_same(a.ring_, b.ring_);
  const int n = std::min(a.precision_, b.precision_);
  Series2 r(a.ring_, n);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) r.coeffs_[r.index(i, j)] = a.at(i, j) + b.at(i, j);
  return r;
}

Series2 operator-(const Series2& a, const Series2& b) {
  require_same(a.ring_, b.ring_);
  const int n = std::min(a.precision_, b.precision_);
  Series2 r(a.ring_, n);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) r.coeffs_[r.index(i, j)] = a.at(i, j) - b.at(i, j);
  return r;
}

Series2 operator*(const Series2& a, const Series2& b) {
  require_same(a.ring_, b.ring_);
  const int n = std::min(a.precision_, b.precision_);
  Series2 r(a.ring_, n);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; i + j <= n; ++j) {
      const Element& x = a.at(i, j);
      if (x.is_zero()) continue;
      for (int k = 0; i + j + k <= n; ++k) {
        for (int l = 0; i + j + k + l <= n; ++l) {
          const Element& y = b.at(k, l);
          if (y.is_zero()) continue;
          Element& slot = r.coeffs_[r.index(i + k, j + l)];
          slot += x * y;
        }
      }
    }
  }
  return r;
}

Series2 operator*(const Element& c, const Series2& f) {
  require_same(c.ring(), f.ring_);
  Series2 r = f;
  for (auto& x : r.coeffs_) x = c * x;
  return r;
}

bool operator==(const Series2& a, const Series2& b) {
  return same_ring(a.ring_, b.ring_) && a.precision_ == b.precision_ && a.coeffs_ == b.coeffs_;
}

Series2 map_coefficients(const Series2& f, const RingPtr& target, const std::function<Element(const Element&)>& fn) {
  Series2 r(target, f.precision());
  for (int i = 0; i <= f.precision(); ++i)
    for (int j = 0; i + j <= f.precision(); ++j) r.set(i, j, fn(f.at(i, j)));
  return r;
}

Series2 coerce(const Series2& f, const RingPtr& target) {
  return map_coefficients(f, target, [&](const Element& c) { return coerce(c, target); });
}

Series2 outer(const Series& f, const Series& g) {
  require_same(f.ring(), g.ring());
  const int n = std::min(f.precision(), g.precision());
  Series2 r(f.ring(), n);
  for (int i = 0; i <= n; ++i) {
    if (f[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j)
      if (!g[j].is_zero()) r.set(i, j, f[i] * g[j]);
  }
  return r;
}

Series2 compose(const Series& f, const Series2& s) {
  require_same(f.ring(), s.ring());
  if (!s.at(0, 0).is_zero()) throw Error(ErrorCode::NonzeroConstantTerm, "inner series has constant term");
  const int n = std::min(f.precision(), s.precision());
  const Series2 inner = s.truncated(n);
  // sum f_k S^k; S^k has no terms below total degree k
  Series2 acc(f.ring(), n);
  Series2 power(f.ring(), n);
  power.set(0, 0, Element::one(f.ring()));
  for (int k = 0; k <= n; ++k) {
    if (k > 0) power = power * inner;
    if (!f[k].is_zero()) acc = acc + f[k] * power;
  }
  return acc;
}

namespace {

std::vector<Series> powers_of(const Series& a, int n) {
  std::vector<Series> p;
  p.reserve(static_cast<std::size_t>(n) + 1);
  p.push_back(Series::constant(Element::one(a.ring()), n));
  for (int k = 1; k <= n; ++k) p.push_back(p.back() * a);
  return p;
}

}  // namespace

Series substitute(const Series2& F, const Series& a, const Series& b) {
  require_same(F.ring(), a.ring());
  require_same(F.ring(), b.ring());
  if (!a[0].is_zero() || !b[0].is_zero()) throw Error(ErrorCode::NonzeroConstantTerm, "substituted series must vanish at 0");
  const int n = std::min({F.precision(), a.precision(), b.precision()});
  const auto pa = powers_of(a.truncated(n), n);
  const auto pb = powers_of(b.truncated(n), n);
  Series acc(F.ring(), n);
  for (int i = 0; i <= n; ++i) {
    Series inner(F.ring(), n);
    bool any = false;
    for (int j = 0; i + j <= n; ++j) {
      if (F.at(i, j).is_zero()) continue;
      inner = inner + F.at(i, j) * pb[j];
      any = true;
    }
    if (any) acc = acc + pa[i] * inner;
  }
  return acc;
}

Series2 substitute_separately(const Series2& F, const Series& a, const Series& b) {
  require_same(F.ring(), a.ring());
  require_same(F.ring(), b.ring());
  if (!a[0].is_zero() || !b[0].is_zero()) throw Error(ErrorCode::NonzeroConstantTerm, "substituted series must vanish at 0");
  const int n = std::min({F.precision(), a.precision(), b.precision()});
  const auto pa = powers_of(a.truncated(n), n);
  const auto pb = powers_of(b.truncated(n), n);
  Series2 acc(F.ring(), n);
  for (int i = 0; i <= n; ++i) {
    Series inner(F.ring(), n);
    bool any = false;
    for (int j = 0; i + j <= n; ++j) {
      if (F.at(i, j).is_zero()) continue;
      inner = inner + F.at(i, j) * pb[j];
      any = true;
    }
    if (any) acc = acc + outer(pa[i], inner);
  }
  return acc;
}

Series partial_y_at_zero(const Series2& F) {
  if (F.precision() < 1) throw Error(ErrorCode::InsufficientPrecision, "partial derivative needs precision >= 1");
  Series r(F.ring(), F.precision() - 1);
  for (int i = 0; i < F.precision(); ++i) r.set(i, F.at(i, 1));
  return r;
}

}  // namespace fglforge
