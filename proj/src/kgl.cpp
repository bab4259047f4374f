#include "fglforge/kgl.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace fglforge {

namespace {

using QVec = std::vector<mpq_class>;

bool over_integers(const Series& f) { return f.ring()->kind() == RingKind::Integers; }

QVec to_rationals(const Series& f) {
  QVec out;
  out.reserve(f.coefficients().size());
  switch (f.ring()->kind()) {
    case RingKind::Integers:
      for (const auto& c : f.coefficients()) out.emplace_back(c.integer_value());
      break;
    case RingKind::Rationals:
      for (const auto& c : f.coefficients()) out.push_back(c.rational_value());
      break;
    default:
      throw Error(ErrorCode::InvalidArgument, "expected a series over Z or Q, got " + f.ring()->description());
  }
  return out;
}

bool integral(const QVec& v) {
  return std::all_of(v.begin(), v.end(), [](const mpq_class& q) { return q.get_den() == 1; });
}

Series from_rationals(const QVec& v, bool want_integers) {
  return Series::from_rationals(want_integers ? integers() : rationals(), v);
}

// Lower-triangular transform matrices, grown on demand and shared.
class TransformTables {
 public:
  // forward[n][k] = n! [y^n] (1 - e^{-y})^k, inverse[m][n] = [x^m] L^n / n!, L = -log(1 - x).
  void ensure(int n) {
    std::lock_guard lock(mutex_);
    if (n <= size_) return;
    const int m = std::max(n, 2 * size_);
    build(m);
  }
  mpq_class forward(int n, int k) const { return forward_[n][k]; }
  mpq_class inverse(int m, int n) const { return inverse_[m][n]; }

  QVec apply_forward(const QVec& f) {
    const int n = static_cast<int>(f.size()) - 1;
    ensure(n);
    std::lock_guard lock(mutex_);
    QVec a(f.size());
    for (int i = 0; i <= n; ++i)
      for (int k = 0; k <= i; ++k) a[i] += forward_[i][k] * f[k];
    return a;
  }
  QVec apply_inverse(const QVec& a) {
    const int n = static_cast<int>(a.size()) - 1;
    ensure(n);
    std::lock_guard lock(mutex_);
    QVec f(a.size());
    for (int i = 0; i <= n; ++i)
      for (int k = 0; k <= i; ++k) f[i] += inverse_[i][k] * a[k];
    return f;
  }

 private:
  void build(int n) {
    const std::size_t s = static_cast<std::size_t>(n) + 1;
    QVec fact(s, 1);
    for (std::size_t i = 1; i < s; ++i) fact[i] = fact[i - 1] * static_cast<unsigned long>(i);
    auto mul = [&](const QVec& a, const QVec& b) {
      QVec c(s);
      for (std::size_t i = 0; i < s; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j < s; ++j) c[i + j] += a[i] * b[j];
      }
      return c;
    };
    QVec u(s), log(s);  // 1 - e^{-y}, -log(1 - x)
    for (std::size_t i = 1; i < s; ++i) {
      u[i] = mpq_class((i % 2 == 1) ? 1 : -1) / fact[i];
      log[i] = mpq_class(1, static_cast<unsigned long>(i));
    }
    forward_.assign(s, QVec(s));
    inverse_.assign(s, QVec(s));
    QVec up(s), lp(s);
    up[0] = lp[0] = 1;
    for (std::size_t k = 0; k < s; ++k) {
      for (std::size_t i = 0; i < s; ++i) {
        forward_[i][k] = fact[i] * up[i];
        inverse_[i][k] = lp[i] / fact[k];
      }
      up = mul(up, u);
      lp = mul(lp, log);
    }
    size_ = n;
  }

  std::mutex mutex_;
  int size_ = -1;
  std::vector<QVec> forward_, inverse_;
};

TransformTables& tables() {
  static TransformTables t;
  return t;
}

void require_same_model(bool ok) {
  if (!ok) throw Error(ErrorCode::ModelMismatch, "operands use different models");
}

}  // namespace

Series omega(const Series& f) {
  const Series d = derive(f);
  Series out(f.ring(), d.precision());
  for (int i = 0; i <= d.precision(); ++i) {
    Element c = d[i];
    if (i > 0) c -= d[i - 1];
    out.set(i, std::move(c));
  }
  return out;
}

Series omega_solve(const Series& f, const mpq_class& constant) {
  if (!is_q_algebra(f.ring()) && f.ring()->kind() != RingKind::Integers) {
    throw Error(ErrorCode::NotQAlgebra, "omega_solve needs a Q-algebra, got " + f.ring()->description());
  }
  const QVec c = to_rationals(f);
  // g' = f / (1 - x), so (n+1) g_{n+1} = f_0 + ... + f_n.
  QVec g(c.size());
  g[0] = constant;
  mpq_class partial = 0;
  for (std::size_t n = 0; n + 1 < c.size(); ++n) {
    partial += c[n];
    g[n + 1] = partial / static_cast<unsigned long>(n + 1);
  }
  if (over_integers(f) && !integral(g)) {
    throw Error(ErrorCode::Inconsistent, "omega(g) = f has no integral solution at this precision");
  }
  return from_rationals(g, over_integers(f));
}

Series geometric_series(long k, int precision) {
  if (precision < 0) throw Error(ErrorCode::InvalidArgument, "negative precision");
  QVec c(static_cast<std::size_t>(precision) + 1);
  c[0] = 1;
  for (int n = 1; n <= precision; ++n) c[n] = c[n - 1] * mpq_class(k + n - 1, n);
  return from_rationals(c, true);
}

AdamsSequence::AdamsSequence(int lo, std::vector<mpq_class> values) : lo_(lo), values_(std::move(values)) {
  for (auto& v : values_) v.canonicalize();
}

AdamsSequence AdamsSequence::filled(int lo, int hi, const mpq_class& value) {
  if (hi < lo) return AdamsSequence(lo, {});
  return AdamsSequence(lo, QVec(static_cast<std::size_t>(hi - lo + 1), value));
}

const mpq_class& AdamsSequence::at(int n) const {
  if (!contains(n)) {
    throw Error(ErrorCode::WindowMiss,
                "index " + std::to_string(n) + " outside [" + std::to_string(lo()) + ", " + std::to_string(hi()) + "]");
  }
  return values_[static_cast<std::size_t>(n - lo_)];
}

bool AdamsSequence::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const mpq_class& q) { return q == 0; });
}

AdamsSequence AdamsSequence::restricted(int lo, int hi) const {
  const int a = std::max(lo, this->lo()), b = std::min(hi, this->hi());
  if (b < a) return AdamsSequence(a, {});
  return AdamsSequence(a, QVec(values_.begin() + (a - lo_), values_.begin() + (b - lo_ + 1)));
}

AdamsSequence AdamsSequence::shifted(int j) const { return AdamsSequence(lo_ - j, values_); }

std::string AdamsSequence::to_string() const {
  std::ostringstream os;
  os << "[" << lo() << ".." << hi() << ": ";
  for (std::size_t i = 0; i < values_.size(); ++i) os << (i ? ", " : "") << values_[i].get_str();
  os << "]";
  return os.str();
}

namespace {
template <class Op>
AdamsSequence pointwise(const AdamsSequence& a, const AdamsSequence& b, Op op) {
  const int lo = std::max(a.lo(), b.lo()), hi = std::min(a.hi(), b.hi());
  if (hi < lo) return AdamsSequence(lo, {});
  QVec v;
  for (int n = lo; n <= hi; ++n) v.push_back(op(a.at(n), b.at(n)));
  return AdamsSequence(lo, std::move(v));
}
}  // namespace

AdamsSequence operator+(const AdamsSequence& a, const AdamsSequence& b) {
  return pointwise(a, b, [](const mpq_class& x, const mpq_class& y) { return mpq_class(x + y); });
}
AdamsSequence operator-(const AdamsSequence& a, const AdamsSequence& b) {
  return pointwise(a, b, [](const mpq_class& x, const mpq_class& y) { return mpq_class(x - y); });
}
AdamsSequence operator*(const AdamsSequence& a, const AdamsSequence& b) {
  return pointwise(a, b, [](const mpq_class& x, const mpq_class& y) { return mpq_class(x * y); });
}
AdamsSequence operator*(const mpq_class& c, const AdamsSequence& a) {
  QVec v = a.values();
  for (auto& x : v) x *= c;
  return AdamsSequence(a.lo(), std::move(v));
}

bool agree(const AdamsSequence& a, const AdamsSequence& b) {
  const int lo = std::max(a.lo(), b.lo()), hi = std::min(a.hi(), b.hi());
  for (int n = lo; n <= hi; ++n)
    if (a.at(n) != b.at(n)) return false;
  return true;
}

AdamsSequence adams_transform(const Series& f) { return AdamsSequence(0, tables().apply_forward(to_rationals(f))); }

Series adams_transform_inv(const AdamsSequence& a) {
  if (a.lo() != 0) throw Error(ErrorCode::InvalidArgument, "inverse transform needs a window starting at 0");
  if (a.empty()) throw Error(ErrorCode::InvalidArgument, "empty window");
  return from_rationals(tables().apply_inverse(a.values()), false);
}

Series circ_compose(const Series& f, const Series& g) {
  const int n = std::min(f.precision(), g.precision());
  const QVec a = tables().apply_forward(to_rationals(f.truncated(n)));
  const QVec b = tables().apply_forward(to_rationals(g.truncated(n)));
  QVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] * b[i];
  QVec h = tables().apply_inverse(c);
  const bool want_integers = over_integers(f) && over_integers(g);
  if (want_integers && !integral(h)) {
    throw Error(ErrorCode::IntegralityViolation, "composition product of integral series is not integral");
  }
  return from_rationals(h, want_integers);
}

OmegaTower::OmegaTower(std::vector<Series> levels) : levels_(std::move(levels)) {
  if (levels_.empty()) throw Error(ErrorCode::InvalidArgument, "a tower needs at least one level");
  const int n = levels_[0].precision();
  bool rational = false;
  for (const auto& l : levels_) {
    if (l.precision() != n) throw Error(ErrorCode::InvalidArgument, "tower levels must share one precision");
    to_rationals(l);
    rational = rational || !over_integers(l);
  }
  if (rational)
    for (auto& l : levels_) l = coerce(l, rationals());
  for (std::size_t j = 0; j + 1 < levels_.size(); ++j) {
    if (n >= 1 && omega(levels_[j + 1]) != levels_[j].truncated(n - 1)) {
      throw Error(ErrorCode::Inconsistent, "omega(f_" + std::to_string(j + 1) + ") != f_" + std::to_string(j));
    }
  }
}

bool OmegaTower::is_zero() const {
  return std::all_of(levels_.begin(), levels_.end(), [](const Series& s) { return s.is_zero(); });
}

OmegaTower OmegaTower::truncated(int depth, int precision) const {
  if (depth > this->depth() || precision > this->precision()) {
    throw Error(ErrorCode::InvalidArgument, "cannot extend a tower by truncation");
  }
  std::vector<Series> out;
  for (int j = 0; j <= depth; ++j) out.push_back(levels_[j].truncated(precision));
  OmegaTower t;
  t.levels_ = std::move(out);
  return t;
}

OmegaTower operator+(const OmegaTower& a, const OmegaTower& b) {
  const int d = std::min(a.depth(), b.depth()), n = std::min(a.precision(), b.precision());
  const bool z = over_integers(a.level(0)) && over_integers(b.level(0));
  std::vector<Series> out;
  for (int j = 0; j <= d; ++j) {
    QVec x = to_rationals(a.level(j).truncated(n)), y = to_rationals(b.level(j).truncated(n));
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
    out.push_back(from_rationals(x, z));
  }
  return OmegaTower(std::move(out));
}

OmegaTower operator*(const mpq_class& c, const OmegaTower& a) {
  std::vector<Series> out;
  for (const auto& l : a.levels()) {
    QVec x = to_rationals(l);
    for (auto& v : x) v *= c;
    out.push_back(from_rationals(x, over_integers(l) && integral(x)));
  }
  return OmegaTower(std::move(out));
}

OmegaTower omega(const OmegaTower& t) {
  const int n = t.precision();
  if (n < 1) throw Error(ErrorCode::InsufficientPrecision, "omega needs precision >= 1");
  std::vector<Series> out{omega(t.level(0))};
  for (const auto& l : t.levels()) out.push_back(l.truncated(n - 1));
  return OmegaTower(std::move(out));
}

OmegaTower omega_inverse(const OmegaTower& t) {
  if (t.depth() < 1) throw Error(ErrorCode::InsufficientDepth, "omega inverse needs depth >= 1");
  return OmegaTower(std::vector<Series>(t.levels().begin() + 1, t.levels().end()));
}

OmegaTower circ_compose(const OmegaTower& a, const OmegaTower& b) {
  const int d = std::min(a.depth(), b.depth());
  std::vector<Series> out;
  for (int j = 0; j <= d; ++j) out.push_back(circ_compose(a.level(j), b.level(j)));
  return OmegaTower(std::move(out));
}

bool agree(const OmegaTower& a, const OmegaTower& b) {
  const int d = std::min(a.depth(), b.depth()), n = std::min(a.precision(), b.precision());
  for (int j = 0; j <= d; ++j)
    if (to_rationals(a.level(j).truncated(n)) != to_rationals(b.level(j).truncated(n))) return false;
  return true;
}

namespace {

OmegaTower twist(const OmegaTower& t, int j) {
  OmegaTower out = t;
  for (; j > 0; --j) out = omega(out);
  for (; j < 0; ++j) out = omega_inverse(out);
  return out;
}

template <class T, class Add>
void accumulate(std::map<int, T>& terms, int power, T value, Add add) {
  auto it = terms.find(power);
  if (it == terms.end()) {
    terms.emplace(power, std::move(value));
  } else {
    it->second = add(it->second, value);
  }
}

template <class T>
void drop_zeros(std::map<int, T>& terms) {
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->second.is_zero()) {
      it = terms.erase(it);
    } else {
      ++it;
    }
  }
}

}  // namespace

SequenceLaurent operator*(const SequenceLaurent& u, const SequenceLaurent& v) {
  SequenceLaurent out;
  for (const auto& [i, a] : u.terms)
    for (const auto& [j, b] : v.terms)
      accumulate(out.terms, i + j, a.shifted(j) * b, [](const auto& x, const auto& y) { return x + y; });
  for (auto it = out.terms.begin(); it != out.terms.end();) {
    if (!it->second.empty() && it->second.is_zero()) {
      it = out.terms.erase(it);
    } else {
      ++it;
    }
  }
  return out;
}

TowerLaurent operator*(const TowerLaurent& u, const TowerLaurent& v) {
  TowerLaurent out;
  for (const auto& [i, a] : u.terms)
    for (const auto& [j, b] : v.terms)
      accumulate(out.terms, i + j, circ_compose(twist(a, j), b), [](const auto& x, const auto& y) { return x + y; });
  drop_zeros(out.terms);
  return out;
}

TwistedLaurent twisted_laurent_multiply(const TwistedLaurent& u, const TwistedLaurent& v) {
  require_same_model(u.index() == v.index());
  if (const auto* s = std::get_if<SequenceLaurent>(&u)) return *s * std::get<SequenceLaurent>(v);
  return std::get<TowerLaurent>(u) * std::get<TowerLaurent>(v);
}

namespace {
template <class L>
bool agree_terms(const L& a, const L& b) {
  for (const auto& [j, x] : a.terms) {
    auto it = b.terms.find(j);
    if (it == b.terms.end() ? !x.is_zero() : !agree(x, it->second)) return false;
  }
  for (const auto& [j, y] : b.terms)
    if (!a.terms.count(j) && !y.is_zero()) return false;
  return true;
}
}  // namespace

bool agree(const SequenceLaurent& a, const SequenceLaurent& b) { return agree_terms(a, b); }
bool agree(const TowerLaurent& a, const TowerLaurent& b) { return agree_terms(a, b); }

std::string to_string(const SequenceLaurent& u) {
  if (u.terms.empty()) return "0";
  std::string out;
  for (const auto& [j, a] : u.terms) {
    if (!out.empty()) out += " + ";
    out += (j == 0 ? std::string() : (j == 1 ? "beta*" : "beta^" + std::to_string(j) + "*")) + a.to_string();
  }
  return out;
}

TowerLaurent adams_op_tower(long k, int depth, int precision, bool integral_coefficients) {
  if (k == 0) throw Error(ErrorCode::NonInvertibleK, "k = 0 is not invertible");
  if (integral_coefficients && k != 1 && k != -1) {
    throw Error(ErrorCode::NonInvertibleK, std::to_string(k) + " is not invertible in Z");
  }
  if (depth < 0) throw Error(ErrorCode::InvalidArgument, "negative depth");
  const QVec base = to_rationals(geometric_series(k, precision));
  std::vector<Series> levels;
  mpq_class scale = 1;
  for (int n = 0; n <= depth; ++n) {
    QVec c = base;
    for (auto& v : c) v *= scale;
    levels.push_back(from_rationals(c, integral_coefficients));
    scale /= k;
  }
  TowerLaurent out;
  out.terms.emplace(0, OmegaTower(std::move(levels)));
  return out;
}

SequenceLaurent adams_op_sequence(long k, int lo, int hi) {
  if (hi < lo) throw Error(ErrorCode::InvalidArgument, "empty window");
  if (k == 0 && lo < 0) throw Error(ErrorCode::NonInvertibleK, "0^n is undefined for n < 0");
  QVec v;
  for (int n = lo; n <= hi; ++n) {
    mpq_class p = 1;
    if (n >= 0) {
      mpz_class z;
      mpz_pow_ui(z.get_mpz_t(), mpz_class(k).get_mpz_t(), static_cast<unsigned long>(n));
      p = z;
    } else {
      mpz_class z;
      mpz_pow_ui(z.get_mpz_t(), mpz_class(k).get_mpz_t(), static_cast<unsigned long>(-n));
      p = 1 / mpq_class(z);
    }
    v.push_back(p);
  }
  SequenceLaurent out;
  out.terms.emplace(0, AdamsSequence(lo, std::move(v)));
  return out;
}

AdamsSequence idempotent_sequence(int n, int lo, int hi) {
  AdamsSequence e = AdamsSequence::filled(lo, hi, 0);
  if (!e.contains(n)) {
    throw Error(ErrorCode::WindowMiss,
                "index " + std::to_string(n) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  QVec v = e.values();
  v[static_cast<std::size_t>(n - lo)] = 1;
  return AdamsSequence(lo, std::move(v));
}

SequenceLaurent mult_add_iso(const TowerLaurent& u, std::optional<int> lo) {
  SequenceLaurent out;
  for (const auto& [j, t] : u.terms) {
    const int low = lo.value_or(-t.depth());
    if (low < -t.depth()) {
      throw Error(ErrorCode::InsufficientDepth,
                  "window starts at " + std::to_string(low) + " but the tower has depth " + std::to_string(t.depth()));
    }
    const QVec a0 = tables().apply_forward(to_rationals(t.level(0)));
    QVec v;
    for (int n = low; n < 0; ++n) v.push_back(to_rationals(t.level(-n))[0]);
    v.insert(v.end(), a0.begin() + std::max(low, 0), a0.end());
    out.terms.emplace(j, AdamsSequence(low, std::move(v)));
  }
  return out;
}

TowerLaurent add_mult_iso(const SequenceLaurent& u) {
  TowerLaurent out;
  for (const auto& [j, a] : u.terms) {
    if (a.lo() > 0 || a.hi() < 0) throw Error(ErrorCode::WindowMiss, "sequence window must contain 0");
    const int depth = -a.lo(), n = a.hi();
    std::vector<Series> levels;
    for (int level = 0; level <= depth; ++level) {
      QVec v;
      for (int m = 0; m <= n; ++m) v.push_back(a.at(m - level));
      levels.push_back(from_rationals(tables().apply_inverse(v), false));
    }
    out.terms.emplace(j, OmegaTower(std::move(levels)));
  }
  return out;
}

std::map<int, mpq_class> eigenspace_action(const SequenceLaurent& op, int m) {
  std::map<int, mpq_class> out;
  for (const auto& [j, a] : op.terms) {
    const mpq_class c = a.at(m);
    if (c != 0) out[m + j] += c;
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second == 0) {
      it = out.erase(it);
    } else {
      ++it;
    }
  }
  return out;
}

}  // namespace fglforge
