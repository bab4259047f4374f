#pragma once

// Degree-0 operations on algebraic K-theory in two models: towers of power
// series along omega (multiplicative side) and windowed sequences (additive side).

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fglforge/series.hpp"

namespace fglforge {

/// (1 - x) f' at precision N - 1.
Series omega(const Series& f);
/// g with omega(g) = f through index N - 1 and g(0) = constant, at precision N.
/// Over Z the solution must be integral (Inconsistent otherwise).
Series omega_solve(const Series& f, const mpq_class& constant = 0);

/// (1 - x)^{-k} at precision N over Z.
Series geometric_series(long k, int precision);

class AdamsSequence {
 public:
  AdamsSequence() = default;
  /// Values for indices lo, lo + 1, ...
  AdamsSequence(int lo, std::vector<mpq_class> values);
  static AdamsSequence filled(int lo, int hi, const mpq_class& value);

  int lo() const noexcept { return lo_; }
  int hi() const noexcept { return lo_ + static_cast<int>(values_.size()) - 1; }
  bool empty() const noexcept { return values_.empty(); }
  bool contains(int n) const noexcept { return n >= lo() && n <= hi(); }
  const mpq_class& at(int n) const;
  const std::vector<mpq_class>& values() const noexcept { return values_; }
  bool is_zero() const;

  AdamsSequence restricted(int lo, int hi) const;
  /// sigma^j: index n carries the old value at n + j.
  AdamsSequence shifted(int j) const;
  std::string to_string() const;

  friend AdamsSequence operator+(const AdamsSequence& a, const AdamsSequence& b);
  friend AdamsSequence operator-(const AdamsSequence& a, const AdamsSequence& b);
  friend AdamsSequence operator*(const AdamsSequence& a, const AdamsSequence& b);
  friend AdamsSequence operator*(const mpq_class& c, const AdamsSequence& a);
  friend bool operator==(const AdamsSequence& a, const AdamsSequence& b) {
    return a.lo_ == b.lo_ && a.values_ == b.values_;
  }

 private:
  int lo_ = 0;
  std::vector<mpq_class> values_;
};

/// Equal on the intersection of the windows.
bool agree(const AdamsSequence& a, const AdamsSequence& b);

/// a_n = n! [y^n] f(1 - e^{-y}) on [0, N].
AdamsSequence adams_transform(const Series& f);
/// sum a_n / n! (-log(1 - x))^n over Q; the window must start at 0.
Series adams_transform_inv(const AdamsSequence& a);

/// The continuous bi-additive product with (1-x)^{-k} o (1-x)^{-l} = (1-x)^{-kl}.
/// Over Z when both inputs are over Z (IntegralityViolation if that fails).
Series circ_compose(const Series& f, const Series& g);

class OmegaTower {
 public:
  OmegaTower() = default;
  /// Levels f_0..f_D over Z or Q at a common precision; throws Inconsistent
  /// unless omega(f_{j+1}) = f_j through index N - 1.
  explicit OmegaTower(std::vector<Series> levels);

  int depth() const noexcept { return static_cast<int>(levels_.size()) - 1; }
  int precision() const { return levels_.at(0).precision(); }
  const Series& level(int j) const { return levels_.at(static_cast<std::size_t>(j)); }
  const std::vector<Series>& levels() const noexcept { return levels_; }
  bool is_zero() const;
  OmegaTower truncated(int depth, int precision) const;

  friend OmegaTower operator+(const OmegaTower& a, const OmegaTower& b);
  friend OmegaTower operator*(const mpq_class& c, const OmegaTower& a);

 private:
  std::vector<Series> levels_;
};

/// The twist beta^{-1} a beta: prepends omega(f_0); depth + 1, precision - 1.
OmegaTower omega(const OmegaTower& t);
/// Inverse twist: drops level 0 (InsufficientDepth at depth 0).
OmegaTower omega_inverse(const OmegaTower& t);
/// Levelwise composition product on the common depth and precision.
OmegaTower circ_compose(const OmegaTower& a, const OmegaTower& b);
/// Equal on the common depth and precision.
bool agree(const OmegaTower& a, const OmegaTower& b);

/// sum_j beta^j a_j, beta powers on the left.
struct SequenceLaurent {
  std::map<int, AdamsSequence> terms;
};
struct TowerLaurent {
  std::map<int, OmegaTower> terms;
};
using TwistedLaurent = std::variant<SequenceLaurent, TowerLaurent>;

SequenceLaurent operator*(const SequenceLaurent& u, const SequenceLaurent& v);
TowerLaurent operator*(const TowerLaurent& u, const TowerLaurent& v);
/// ModelMismatch unless both operands use the same model.
TwistedLaurent twisted_laurent_multiply(const TwistedLaurent& u, const TwistedLaurent& v);
bool agree(const SequenceLaurent& a, const SequenceLaurent& b);
bool agree(const TowerLaurent& a, const TowerLaurent& b);
std::string to_string(const SequenceLaurent& u);

/// psi^k as the tower (k^{-n} (1-x)^{-k})_{n <= D}; over Z only k = +-1.
TowerLaurent adams_op_tower(long k, int depth, int precision, bool integral = false);
/// psi^k as (k^n) on [lo, hi], with 0^0 = 1.
SequenceLaurent adams_op_sequence(long k, int lo, int hi);
/// Indicator of n on [lo, hi].
AdamsSequence idempotent_sequence(int n, int lo, int hi);

/// Tower to sequence: index -k is read from level k. The window is [-D, N]
/// unless a lower end is requested (InsufficientDepth below -D).
SequenceLaurent mult_add_iso(const TowerLaurent& u, std::optional<int> lo = std::nullopt);
/// Sequence on [lo, hi] with lo <= 0 <= hi to a tower of depth -lo, precision hi.
TowerLaurent add_mult_iso(const SequenceLaurent& u);

/// Action on the test module Q[beta^+-1]: the image of beta^m as power -> coefficient.
std::map<int, mpq_class> eigenspace_action(const SequenceLaurent& op, int m);

}  // namespace fglforge
