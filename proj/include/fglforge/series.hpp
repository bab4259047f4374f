#pragma once

// Truncated power series in one variable (mod x^{N+1}) and two variables
// (mod total degree > N) over any coefficient ring.

#include <functional>
#include <string>
#include <vector>

#include "fglforge/rings.hpp"

namespace fglforge {

class Series {
 public:
  Series() = default;
  /// The zero series at precision N.
  Series(RingPtr ring, int precision);
  /// Coefficients c_0..c_N; precision is size - 1.
  Series(RingPtr ring, std::vector<Element> coefficients);

  static Series x(const RingPtr& ring, int precision);
  static Series constant(const Element& c, int precision);
  /// Coefficients given as rationals mapped into `ring`.
  static Series from_rationals(const RingPtr& ring, const std::vector<mpq_class>& coefficients);

  const RingPtr& ring() const noexcept { return ring_; }
  int precision() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const Element& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  void set(int i, Element value);
  const std::vector<Element>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const;

  Series truncated(int precision) const;
  /// "2x - beta*x^2"; zero prints as "0".
  std::string to_string(const std::string& var = "x") const;

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator-(const Series& a);
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(const Element& c, const Series& f);
  friend bool operator==(const Series& a, const Series& b);
  friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

 private:
  RingPtr ring_;
  std::vector<Element> coeffs_;
};

/// Coefficientwise image under a ring map.
Series map_coefficients(const Series& f, const RingPtr& target, const std::function<Element(const Element&)>& fn);
Series coerce(const Series& f, const RingPtr& target);

/// f(g(x)); requires g(0) = 0. Precision is the smaller of the two.
Series compose(const Series& f, const Series& g);
/// Compositional inverse by triangular solve; requires f(0) = 0 and f'(0) a unit.
Series revert(const Series& f);
/// df/dx at precision N - 1 (N >= 1).
Series derive(const Series& f);
/// Termwise antiderivative with zero constant term at precision N + 1. Needs
/// each 1/n to exist in the ring.
Series integrate(const Series& f);
/// 1/f; requires f(0) a unit.
Series reciprocal(const Series& f);
Series pow(const Series& f, int k);

class Series2 {
 public:
  Series2() = default;
  Series2(RingPtr ring, int precision);

  /// f(x) viewed as a bivariate series.
  static Series2 in_x(const Series& f);
  static Series2 in_y(const Series& f);

  const RingPtr& ring() const noexcept { return ring_; }
  int precision() const noexcept { return precision_; }
  /// c_{ij}, zero outside i + j <= N.
  const Element& at(int i, int j) const;
  void set(int i, int j, Element value);

  Series2 truncated(int precision) const;
  Series2 swapped() const;
  std::string to_string() const;

  friend Series2 operator+(const Series2& a, const Series2& b);
  friend Series2 operator-(const Series2& a, const Series2& b);
  friend Series2 operator*(const Series2& a, const Series2& b);
  friend Series2 operator*(const Element& c, const Series2& f);
  friend bool operator==(const Series2& a, const Series2& b);
  friend bool operator!=(const Series2& a, const Series2& b) { return !(a == b); }

 private:
  std::size_t index(int i, int j) const;

  RingPtr ring_;
  int precision_ = -1;
  Element zero_;
  std::vector<Element> coeffs_;  // row i holds j = 0..N-i
};

Series2 map_coefficients(const Series2& f, const RingPtr& target,
                         const std::function<Element(const Element&)>& fn);
Series2 coerce(const Series2& f, const RingPtr& target);

/// f(x) * g(y).
Series2 outer(const Series& f, const Series& g);
/// f(S(x,y)); requires S(0,0) = 0.
Series2 compose(const Series& f, const Series2& s);
/// F(a(x), b(x)); requires a(0) = b(0) = 0.
Series substitute(const Series2& F, const Series& a, const Series& b);
/// F(a(x), b(y)); requires a(0) = b(0) = 0.
Series2 substitute_separately(const Series2& F, const Series& a, const Series& b);
/// dF/dy at y = 0, as a series in x of precision N - 1.
Series partial_y_at_zero(const Series2& F);

}  // namespace fglforge
