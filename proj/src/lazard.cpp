#include "fglforge/lazard.hpp"

#include <map>
#include <mutex>

namespace fglforge {

RingPtr graded_polynomial_ring(const std::string& prefix, int count) {
  std::vector<Generator> gens;
  for (int i = 1; i <= count; ++i) gens.push_back(Generator{prefix + std::to_string(i), i});
  return polynomial(rationals(), std::move(gens));
}

RingPtr lazard_ring_rational(int count) { return graded_polynomial_ring("m", count); }

namespace {

void enumerate(const std::vector<Generator>& gens, std::size_t k, int remaining, Monomial& current,
               std::vector<Monomial>& out) {
  if (k == gens.size()) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  const int d = gens[k].degree;
  if (d <= 0) throw Error(ErrorCode::InvalidArgument, "monomial enumeration needs positive degrees");
  for (int e = remaining / d; e >= 0; --e) {
    current[k] = e;
    enumerate(gens, k + 1, remaining - e * d, current, out);
  }
  current[k] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(const std::vector<Generator>& generators, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  Monomial current(generators.size(), 0);
  enumerate(generators, 0, degree, current, out);
  return out;
}

Element push_forward(const Element& p, const std::vector<Element>& images, const RingPtr& target) {
  const RingPtr& source = p.ring();
  if (source->kind() != RingKind::Polynomial) throw Error(ErrorCode::InvalidArgument, "push_forward needs a polynomial");
  if (images.size() != source->generators().size()) {
    throw Error(ErrorCode::InvalidArgument, "push_forward needs one image per generator");
  }
  std::vector<std::vector<Element>> powers(images.size());
  auto power = [&](std::size_t k, int e) -> const Element& {
    auto& cache = powers[k];
    if (cache.empty()) cache.push_back(Element::one(target));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[k]);
    return cache[static_cast<std::size_t>(e)];
  };
  Element acc = Element::zero(target);
  for (const auto& [m, c] : p.poly_terms()) {
    Element term = Element::rational(target, c);
    for (std::size_t k = 0; k < m.size(); ++k)
      if (m[k]) term = term * power(k, m[k]);
    acc += term;
  }
  return acc;
}

Series2 push_forward(const Series2& s, const std::vector<Element>& images, const RingPtr& target) {
  return map_coefficients(s, target, [&](const Element& c) { return push_forward(c, images, target); });
}

FormalGroupLaw universal_fgl_rational(int precision) {
  if (precision < 2) throw Error(ErrorCode::InvalidArgument, "universal law needs precision >= 2");
  static std::mutex mutex;
  static std::map<int, FormalGroupLaw> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(precision); it != cache.end()) return it->second;
  }
  const RingPtr ring = lazard_ring_rational(precision - 1);
  std::vector<Element> log{Element::zero(ring), Element::one(ring)};
  for (int i = 1; i < precision; ++i) log.push_back(Element::variable(ring, "m" + std::to_string(i)));
  FormalGroupLaw f = assume_valid(FormalGroupLaw(fgl_exp(Series(ring, log)).body(), declared_degrees(ring)));
  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(precision, f);
  return f;
}

std::vector<Element> classify_rational(const FormalGroupLaw& f) {
  const Series log = fgl_log(f);
  std::vector<Element> m;
  for (int i = 2; i <= log.precision(); ++i) m.push_back(log[i]);
  return m;
}

namespace {

std::vector<Generator> lb_generators(int n, const std::vector<std::string>& b_prefixes) {
  std::vector<Generator> gens;
  for (int i = 1; i <= n; ++i) gens.push_back(Generator{"m" + std::to_string(i), i});
  for (const auto& prefix : b_prefixes)
    for (int i = 1; i <= n; ++i) gens.push_back(Generator{prefix + std::to_string(i), i});
  return gens;
}

Series coordinate_series(const RingPtr& ring, const std::string& prefix, int n) {
  std::vector<Element> c{Element::zero(ring), Element::one(ring)};
  for (int i = 1; i <= n; ++i) c.push_back(Element::variable(ring, prefix + std::to_string(i)));
  return Series(ring, std::move(c));
}

}  // namespace

LazardHopf lb_structure_maps(int truncation) {
  if (truncation < 1) throw Error(ErrorCode::InvalidArgument, "truncation must be at least 1");
  const int n = truncation;
  LazardHopf h;
  h.truncation = n;
  h.a = lazard_ring_rational(n);
  h.gamma = polynomial(rationals(), lb_generators(n, {"b"}));
  h.gamma2 = polynomial(rationals(), lb_generators(n, {"bL", "bR"}));

  const FormalGroupLaw u = universal_fgl_rational(n + 1);
  const FormalGroupLaw u_gamma = assume_valid(FormalGroupLaw(coerce(u.body(), h.gamma)));
  const Series b = coordinate_series(h.gamma, "b", n);
  h.eta_right = classify_rational(change_coordinates(u_gamma, b));

  const Series left = coordinate_series(h.gamma2, "bL", n);
  const Series right = coordinate_series(h.gamma2, "bR", n);
  const Series composite = compose(right, left);
  for (int k = 1; k <= n; ++k) h.delta.push_back(composite[k + 1]);
  return h;
}

std::vector<Element> hq_right_unit_images(int truncation) {
  const RingPtr ring = graded_polynomial_ring("b", truncation);
  const FormalGroupLaw additive = fgl_named(NamedLaw::Additive, ring, truncation + 1);
  return classify_rational(change_coordinates(additive, coordinate_series(ring, "b", truncation)));
}

bool HqReport::pass() const {
  for (const auto& d : degrees)
    if (!d.full_rank()) return false;
  return !degrees.empty();
}

int rational_rank(std::vector<std::vector<mpq_class>> rows) {
  int rank = 0;
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows.size(); ++c) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
    const auto& prow = rows[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const mpq_class factor = rows[r][c] / prow[c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * prow[k];
    }
    ++rank;
  }
  return rank;
}

HqReport hq_rank_report(const std::vector<Element>& images, int truncation) {
  if (images.empty()) throw Error(ErrorCode::InvalidArgument, "no images");
  const RingPtr target = images.front().ring();
  const RingPtr source = lazard_ring_rational(static_cast<int>(images.size()));
  HqReport report;
  for (int d = 1; d <= truncation; ++d) {
    const auto src = monomials_of_degree(source->generators(), d);
    const auto dst = monomials_of_degree(target->generators(), d);
    std::map<Monomial, std::size_t> column;
    for (std::size_t i = 0; i < dst.size(); ++i) column.emplace(dst[i], i);
    std::vector<std::vector<mpq_class>> rows;
    for (const auto& mono : src) {
      PolyTerms t;
      t.emplace(mono, mpq_class(1));
      const Element image = push_forward(Element::from_poly(source, std::move(t)), images, target);
      std::vector<mpq_class> row(dst.size());
      for (const auto& [m, c] : image.poly_terms()) {
        if (auto it = column.find(m); it != column.end()) row[it->second] = c;
      }
      rows.push_back(std::move(row));
    }
    HqDegree deg;
    deg.degree = d;
    deg.source_dimension = static_cast<int>(src.size());
    deg.target_dimension = static_cast<int>(dst.size());
    deg.rank = rational_rank(std::move(rows));
    report.degrees.push_back(deg);
  }
  return report;
}

HqReport hq_idempotence_check(int truncation) {
  if (truncation < 1) throw Error(ErrorCode::InvalidArgument, "truncation must be at least 1");
  return hq_rank_report(hq_right_unit_images(truncation), truncation);
}

}  // namespace fglforge
