#pragma once

// The rational Lazard ring Q[m_1, m_2, ...] (|m_i| = i), its universal formal
// group law, and the Hopf algebroid (L, LB) truncated at a finite degree.

#include <vector>

#include "fglforge/fgl.hpp"

namespace fglforge {

/// Q[prefix1..prefixN] with |prefix_i| = i.
RingPtr graded_polynomial_ring(const std::string& prefix, int count);
/// Q[m1..mN].
RingPtr lazard_ring_rational(int count);

/// Every monomial of weighted degree d.
std::vector<Monomial> monomials_of_degree(const std::vector<Generator>& generators, int degree);

/// Ring map out of a polynomial ring: generator k goes to images[k].
Element push_forward(const Element& p, const std::vector<Element>& images, const RingPtr& target);
Series2 push_forward(const Series2& s, const std::vector<Element>& images, const RingPtr& target);

/// l^{-1}(l(x) + l(y)) for l = t + m_1 t^2 + ... + m_{N-1} t^N over Q[m_1..m_{N-1}].
FormalGroupLaw universal_fgl_rational(int precision);
/// m_i = [t^{i+1}] log F for i = 1..N-1 (entry i-1).
std::vector<Element> classify_rational(const FormalGroupLaw& f);

/// (L, LB) through degree N: A = Q[m1..mN], Gamma = Q[m1..mN, b1..bN].
/// Gamma (x)_A Gamma is Q[m, bL, bR], where the right factor's copy of A has
/// been moved across the tensor sign (m_i of the right factor = eta_R(m_i) of
/// the left factor), so the polynomial ring is free on the listed generators.
struct LazardHopf {
  int truncation = 0;
  RingPtr a;
  RingPtr gamma;
  RingPtr gamma2;
  std::vector<Element> eta_right;  // eta_R(m_i) in gamma
  std::vector<Element> delta;      // Delta(b_k) in gamma2
};

LazardHopf lb_structure_maps(int truncation);

/// eta_R(m_i) specialized to m = 0, i.e. the additive point; lives in Q[b1..bN].
std::vector<Element> hq_right_unit_images(int truncation);

struct HqDegree {
  int degree = 0;
  int source_dimension = 0;
  int target_dimension = 0;
  int rank = 0;
  bool full_rank() const { return rank == source_dimension && rank == target_dimension; }
};

struct HqReport {
  std::vector<HqDegree> degrees;
  bool pass() const;
};

/// Degreewise rank of Q[m_*]_d -> Q[b_*]_d, m_j -> images[j-1].
HqReport hq_rank_report(const std::vector<Element>& images, int truncation);
HqReport hq_idempotence_check(int truncation);

/// Exact rank of a rational matrix.
int rational_rank(std::vector<std::vector<mpq_class>> rows);

}  // namespace fglforge
