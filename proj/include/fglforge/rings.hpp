#pragma once

// Exact coefficient rings.
//
// A Ring is an immutable descriptor shared by every Element that lives in it.
// The supported family is closed: integers, rationals, Z/m, p-local integers,
// Laurent extensions in one graded variable, graded polynomial rings over Z or
// Q, and quotients by a principal element. Quotients carry a concrete "model"
// ring (for example Z[beta^±1]/(p) is modelled by F_p[beta^±1]) and cosets are
// stored as canonical elements of that model.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fglforge/error.hpp"

namespace fglforge {

class Ring;
class Element;
using RingPtr = std::shared_ptr<const Ring>;

enum class RingKind {
  Integers,
  Rationals,
  IntegersMod,
  PLocal,
  Laurent,
  Polynomial,
  Quotient,
  PolyQuotient,  // K[v]/(f) over a field K, f monic with f(0) != 0; only built as a quotient model
};

struct Generator {
  std::string name;
  int degree = 1;
  bool operator==(const Generator&) const = default;
};

/// Exponent vector over the generators of a polynomial ring.
using Monomial = std::vector<int>;
using PolyTerms = std::map<Monomial, mpq_class>;
/// Degree assignment for graded checks: generator / variable name -> degree.
using DegreeMap = std::map<std::string, int>;

namespace detail {
struct LaurentData {
  std::vector<int> exponents;          // strictly increasing
  std::vector<Element> coefficients;   // nonzero, same length
};
struct PolyData {
  PolyTerms terms;  // no zero coefficients
};
struct ResidueData {
  std::vector<Element> coefficients;  // low to high, no trailing zeros, length < deg f
};
struct CosetData {
  std::shared_ptr<const Element> representative;  // element of the model ring
};
struct ElementAccess;
}  // namespace detail

class Element {
 public:
  /// A default-constructed element belongs to no ring; only assignment is valid.
  Element() = default;

  static Element integer(const RingPtr& ring, const mpz_class& n);
  static Element integer(const RingPtr& ring, long n) { return integer(ring, mpz_class(n)); }
  static Element rational(const RingPtr& ring, const mpq_class& q);
  static Element zero(const RingPtr& ring) { return integer(ring, 0L); }
  static Element one(const RingPtr& ring) { return integer(ring, 1L); }
  static Element variable(const RingPtr& ring, std::string_view name);
  static Element from_laurent(const RingPtr& ring, const std::map<int, Element>& terms);
  static Element from_poly(const RingPtr& ring, PolyTerms terms);

  const RingPtr& ring() const noexcept { return ring_; }
  bool valid() const noexcept { return static_cast<bool>(ring_); }
  bool is_zero() const;
  bool is_one() const;

  /// Canonical expression in the CLI grammar.
  std::string to_string() const;

  // Payload views; each throws Unsupported when the ring kind does not match.
  const mpz_class& integer_value() const;   // Integers, IntegersMod
  const mpq_class& rational_value() const;  // Rationals, PLocal
  std::map<int, Element> laurent_terms() const;
  const PolyTerms& poly_terms() const;
  const std::vector<Element>& residue_coefficients() const;
  const Element& representative() const;  // Quotient

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator-(const Element& a);
  friend bool operator==(const Element& a, const Element& b);
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  Element& operator+=(const Element& o) { return *this = *this + o; }
  Element& operator-=(const Element& o) { return *this = *this - o; }
  Element& operator*=(const Element& o) { return *this = *this * o; }

 private:
  using Payload = std::variant<mpz_class, mpq_class, detail::LaurentData, detail::PolyData,
                               detail::ResidueData, detail::CosetData>;
  Element(RingPtr ring, Payload data) : ring_(std::move(ring)), data_(std::move(data)) {}

  RingPtr ring_;
  Payload data_;
  friend struct detail::ElementAccess;
};

class Ring {
 public:
  RingKind kind() const noexcept { return kind_; }
  const std::string& description() const noexcept { return description_; }

  const mpz_class& modulus() const;  // IntegersMod
  const mpz_class& prime() const;    // PLocal
  const RingPtr& base() const;       // Laurent, Polynomial, Quotient, PolyQuotient
  const std::string& variable_name() const;  // Laurent, PolyQuotient
  int variable_degree() const;               // Laurent, PolyQuotient
  const std::vector<Generator>& generators() const;  // Polynomial
  std::optional<std::size_t> generator_index(std::string_view name) const;
  const Element& quotient_generator() const;  // Quotient
  const RingPtr& model() const;               // Quotient
  const std::vector<Element>& reduction_polynomial() const;  // PolyQuotient, monic, low to high

 private:
  Ring() = default;

  RingKind kind_ = RingKind::Integers;
  std::string description_;
  mpz_class number_;  // modulus or prime
  RingPtr base_;
  RingPtr model_;
  std::string variable_;
  int variable_degree_ = 0;
  std::vector<Generator> generators_;
  std::shared_ptr<const Element> quotient_generator_;
  std::vector<Element> reduction_;

  friend struct detail::ElementAccess;
  friend RingPtr integers();
  friend RingPtr rationals();
  friend RingPtr integers_mod(const mpz_class& m);
  friend RingPtr p_local(const mpz_class& p);
  friend RingPtr laurent(const RingPtr& base, std::string variable, int degree);
  friend RingPtr polynomial(const RingPtr& base, std::vector<Generator> generators);
  friend RingPtr quotient_by_element(const RingPtr& ring, const Element& r);
  friend RingPtr make_poly_quotient(const RingPtr& field, std::string variable, int degree,
                                    std::vector<Element> monic);
};

// Ring factories.
RingPtr integers();
RingPtr rationals();
RingPtr integers_mod(const mpz_class& m);
RingPtr p_local(const mpz_class& p);
RingPtr laurent(const RingPtr& base, std::string variable = "beta", int degree = 1);
RingPtr polynomial(const RingPtr& base, std::vector<Generator> generators);
/// R/(r) with a canonical normal form for cosets. Throws Unsupported when no
/// normal form is implemented for the (family, generator shape) pair.
RingPtr quotient_by_element(const RingPtr& ring, const Element& r);

bool same_ring(const RingPtr& a, const RingPtr& b);
/// The concrete ring elements are stored in (the model of a quotient, recursively).
RingPtr concrete(const RingPtr& ring);
bool is_zero_ring(const RingPtr& ring);
bool is_q_algebra(const RingPtr& ring);
bool is_field(const RingPtr& ring);
bool is_domain(const RingPtr& ring);

bool is_unit(const Element& a);
Element inverse(const Element& a);
Element pow(const Element& a, long exponent);

/// Some s != 0 with a*s = 0, if one exists. Throws Undecidable outside the
/// implemented decision routines.
std::optional<Element> annihilator_witness(const Element& a);
inline bool is_zero_divisor(const Element& a) { return annihilator_witness(a).has_value(); }

/// The canonical map into `target` (inclusions, reductions, quotient maps).
/// Throws NotRepresentable when no such map applies to this element.
Element coerce(const Element& a, const RingPtr& target);

enum class ArithmeticOp { Add, Mul, Neg, Eq, IsUnit };
std::variant<Element, bool> ring_arithmetic(const Element& a, const Element& b, ArithmeticOp op);

/// Degree bookkeeping for graded checks. Zero is homogeneous of every degree.
struct Homogeneity {
  bool zero = false;
  bool homogeneous = true;
  int degree = 0;
};
Homogeneity homogeneity(const Element& a, const DegreeMap& degrees);

/// Degree table implied by a ring's own declarations (Laurent variables,
/// polynomial generators), merged outward-in.
DegreeMap declared_degrees(const RingPtr& ring);

/// Every prime divisor of |n| (n != 0), ascending, by trial division.
std::vector<mpz_class> prime_divisors(mpz_class n);
bool is_prime(const mpz_class& n);

}  // namespace fglforge
