#pragma once

// One-dimensional commutative formal group laws given by a coordinate.

#include <optional>
#include <string>
#include <vector>

#include "fglforge/series.hpp"

namespace fglforge {

class FormalGroupLaw {
 public:
  /// Unvalidated law with the given body; run check_axioms (or validate) before
  /// using operations that need the group structure.
  explicit FormalGroupLaw(Series2 body, std::optional<DegreeMap> grading = std::nullopt);

  const RingPtr& ring() const noexcept { return body_.ring(); }
  int precision() const noexcept { return body_.precision(); }
  const Series2& body() const noexcept { return body_; }
  const Element& coefficient(int i, int j) const { return body_.at(i, j); }
  const std::optional<DegreeMap>& grading() const noexcept { return grading_; }
  bool validated() const noexcept { return validated_; }

  FormalGroupLaw truncated(int precision) const;
  std::string to_string() const { return body_.to_string(); }

  friend bool operator==(const FormalGroupLaw& a, const FormalGroupLaw& b) { return a.body_ == b.body_; }

 private:
  Series2 body_;
  std::optional<DegreeMap> grading_;
  bool validated_ = false;

  friend FormalGroupLaw validate(FormalGroupLaw f);
  friend FormalGroupLaw assume_valid(FormalGroupLaw f);
};

struct AxiomResult {
  std::string name;
  bool pass = true;
  std::vector<int> witness;  // first offending index tuple
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomResult> axioms;
  bool pass() const;
};

/// Unitality, symmetry, associativity (and the grading when one is attached).
AxiomReport check_axioms(const FormalGroupLaw& f);
/// Returns a validated copy; throws InvalidArgument naming the first failing axiom.
FormalGroupLaw validate(FormalGroupLaw f);
/// Marks a law validated without checking; for laws that hold by construction.
FormalGroupLaw assume_valid(FormalGroupLaw f);

enum class NamedLaw { Additive, Multiplicative, UniversalRational, HondaH1 };
NamedLaw named_law_from_string(const std::string& name);
std::string to_string(NamedLaw name);

/// The named law at precision N. The ring is ignored for UniversalRational.
FormalGroupLaw fgl_named(NamedLaw name, const RingPtr& ring, int precision);

/// iota with F(x, iota(x)) = 0.
Series formal_inverse(const FormalGroupLaw& f);
/// [k](x).
Series n_series(const FormalGroupLaw& f, int k);
/// Coefficient of x^{p^n} in [p](x).
Element v_coefficient(const FormalGroupLaw& f, long p, int n);

Series fgl_log(const FormalGroupLaw& f);
/// l^{-1}(l(x) + l(y)).
FormalGroupLaw fgl_exp(const Series& log);
/// b(F(b^{-1}(x), b^{-1}(y))). Keeps the grading of F only when the result still satisfies it.
FormalGroupLaw change_coordinates(const FormalGroupLaw& f, const Series& b);
/// Every a_ij homogeneous of degree i + j - 1; names missing from `degrees`
/// fall back to the ring's own declarations.
bool grade_check(const FormalGroupLaw& f, const DegreeMap& degrees);
/// First (i, j) violating the grading, if any.
std::optional<std::pair<int, int>> grading_violation(const FormalGroupLaw& f, const DegreeMap& degrees);

/// p^n, or nullopt when it exceeds `limit`.
std::optional<long> checked_power(long p, int n, long limit);

}  // namespace fglforge
