#pragma once

// Hopf algebroid axiom checks, dual functionals (the composition algebra of
// Gamma^dual), coactions and the twisted ring R (x)_A Gamma^dual, for the two
// shipped flavours: truncated (L, LB) and the indiscrete groupoid on n objects.

#include <map>
#include <string>
#include <vector>

#include "fglforge/lazard.hpp"

namespace fglforge {

struct HopfCheck {
  std::string name;
  bool pass = true;
  std::string generator;  // offending generator, empty on success
  int degree = 0;
  std::string detail;
};

struct HopfReport {
  std::string flavor;
  std::vector<HopfCheck> checks;
  bool pass() const;
};

HopfReport hopf_axiom_check(const LazardHopf& h);

// ---- (L, LB) functionals ---------------------------------------------------

/// A left A-linear functional Gamma -> A, given on the b-monomials of degree
/// <= truncation. Absent monomials map to 0.
struct LbFunctional {
  int truncation = 0;
  std::map<Monomial, Element> values;  // b-exponent vector -> element of A

  Element value(const Monomial& b, const RingPtr& a) const;
};

/// The counit as a functional: b^0 -> 1, everything else -> 0.
LbFunctional lb_unit(const LazardHopf& h);
/// The dual basis functional (b^alpha)^dual.
LbFunctional lb_dual_basis(const LazardHopf& h, const Monomial& alpha);
/// f o g = f . (id (x) g) . Delta. Requires the values of g on b^gamma to have
/// m-degree at most |gamma|, so that the result stays inside the truncation.
LbFunctional dual_compose(const LazardHopf& h, const LbFunctional& f, const LbFunctional& g);
/// lambda(f, r) = f(eta_R(r)), the action through the right unit coaction on A.
Element coaction_to_action(const LazardHopf& h, const LbFunctional& f, const Element& r);
/// (u.phi)(v.psi) = sum u . lambda(phi'', v) . (phi' o psi) with the coproduct
/// dual to multiplication of b-monomials; the result lives in A (x)_A Gamma^dual.
LbFunctional twisted_ring_multiply(const LazardHopf& h, const Element& u, const LbFunctional& phi, const Element& v,
                                   const LbFunctional& psi);
LbFunctional scale(const Element& a, const LbFunctional& f);
LbFunctional add(const LbFunctional& f, const LbFunctional& g);
bool equal(const LbFunctional& f, const LbFunctional& g);

// ---- finite groupoid -------------------------------------------------------

using RationalMatrix = std::vector<std::vector<mpq_class>>;
using RationalVector = std::vector<mpq_class>;

/// Functions on the indiscrete groupoid with n objects. A = Q^n with basis
/// chi_i, Gamma = Q^{n x n} with basis delta_(i,j) (index i*n + j); both rings
/// multiply pointwise. Structure maps are stored as data so that corrupted
/// fixtures can be checked.
struct GroupoidHopf {
  int objects = 0;
  RationalMatrix eta_left;   // [arrow][object]: coefficient of delta_arrow in eta_L(chi_object)
  RationalMatrix eta_right;  // same shape
  RationalMatrix counit;     // [object][arrow]: coefficient of chi_object in eps(delta_arrow)
  /// Delta(delta_x) = sum c . delta_y (x) delta_z over composable pairs.
  std::vector<std::map<std::pair<int, int>, mpq_class>> delta;
  RationalMatrix coaction;  // [arrow][object]: rho(chi_object) in A (x)_A Gamma = Gamma
};

GroupoidHopf groupoid_fixture(int objects);
HopfReport hopf_axiom_check(const GroupoidHopf& h);

/// f(delta_(i,j)) = values[i][j] chi_i; A-linearity forces support at the source.
struct GroupoidFunctional {
  RationalMatrix values;
};

GroupoidFunctional groupoid_unit(const GroupoidHopf& h);
/// Dual of the arrow (i, j).
GroupoidFunctional groupoid_dual_basis(const GroupoidHopf& h, int i, int j);
GroupoidFunctional dual_compose(const GroupoidHopf& h, const GroupoidFunctional& f, const GroupoidFunctional& g);
/// lambda(f (x) r) = (id (x) f)(rho(r)); throws NotACoaction unless (id (x) eps) rho = id.
RationalVector coaction_to_action(const GroupoidHopf& h, const GroupoidFunctional& f, const RationalVector& r);
/// eta_L^dual(f) = f(1).
RationalVector eta_left_dual(const GroupoidHopf& h, const GroupoidFunctional& f);
/// Element of A (x)_A Gamma^dual in normal form: entry (i, l) is the scalar on
/// chi_i (x) delta_(i,l)^dual.
RationalMatrix twisted_ring_multiply(const GroupoidHopf& h, const RationalVector& u, const GroupoidFunctional& phi,
                                     const RationalVector& v, const GroupoidFunctional& psi);
/// Normal form of u . phi.
RationalMatrix twisted_element(const GroupoidHopf& h, const RationalVector& u, const GroupoidFunctional& phi);

}  // namespace fglforge
