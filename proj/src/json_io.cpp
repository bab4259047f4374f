#include "fglforge/json_io.hpp"

#include <cctype>

#include "fglforge/expression.hpp"

namespace fglforge {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidArgument, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string str(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) bad(std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

int integer(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) bad(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

mpq_class rational(const Json& v) {
  if (!v.is_string()) bad("rationals are serialized as strings");
  mpq_class q;
  if (q.set_str(v.get<std::string>(), 10) != 0) bad("not a rational: " + v.get<std::string>());
  if (q.get_den() == 0) bad("zero denominator");
  q.canonicalize();
  return q;
}

mpz_class big(const std::string& s) {
  mpz_class z;
  if (z.set_str(s, 10) != 0) bad("not an integer: " + s);
  return z;
}

// ---- ring descriptors ------------------------------------------------------

class RingSpecParser {
 public:
  explicit RingSpecParser(std::string_view s) : s_(s) {}

  RingPtr parse() {
    RingPtr r = ring();
    if (pos_ != s_.size()) fail("trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::InvalidArgument,
                "ring \"" + std::string(s_) + "\": " + what + " at column " + std::to_string(pos_ + 1));
  }
  bool eat(std::string_view t) {
    if (s_.substr(pos_, t.size()) == t) {
      pos_ += t.size();
      return true;
    }
    return false;
  }
  std::string number() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(s_.substr(start, pos_ - start));
  }
  std::string ident() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_ || std::isdigit(static_cast<unsigned char>(s_[start]))) fail("expected a variable name");
    return std::string(s_.substr(start, pos_ - start));
  }

  RingPtr ring() {
    RingPtr r;
    if (eat("Z_(")) {
      const mpz_class p = big(number());
      if (!eat(")")) fail("expected ')'");
      r = p_local(p);
    } else if (eat("F_")) {
      r = integers_mod(big(number()));
    } else if (eat("Z/")) {
      r = integers_mod(big(number()));
    } else if (eat("Z")) {
      r = integers();
    } else if (eat("Q")) {
      r = rationals();
    } else {
      fail("expected Z, Q, Z/m, F_p or Z_(p)");
    }
    while (eat("[")) r = adjoin(r);
    return r;
  }

  RingPtr adjoin(const RingPtr& base) {
    std::vector<Generator> gens;
    for (;;) {
      Generator g{ident(), 1};
      if (eat("^+-1")) {
        int degree = 1;
        if (eat("{")) {
          const bool neg = eat("-");
          degree = std::stoi(number()) * (neg ? -1 : 1);
          if (!eat("}")) fail("expected '}'");
        }
        if (!gens.empty() || !eat("]")) fail("a Laurent variable must be adjoined alone");
        return laurent(base, g.name, degree);
      }
      if (eat("(")) {
        g.degree = std::stoi(number());
        if (!eat(")")) fail("expected ')'");
      }
      gens.push_back(std::move(g));
      if (eat("]")) break;
      if (!eat(",")) fail("expected ',' or ']'");
    }
    return polynomial(base, std::move(gens));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string element_string(const Element& e) { return e.to_string(); }

}  // namespace

RingPtr parse_ring(std::string_view spec) { return RingSpecParser(spec).parse(); }

Json to_json(const RingPtr& ring) {
  switch (ring->kind()) {
    case RingKind::Integers: return {{"kind", "integers"}};
    case RingKind::Rationals: return {{"kind", "rationals"}};
    case RingKind::IntegersMod: return {{"kind", "integers_mod"}, {"modulus", ring->modulus().get_str()}};
    case RingKind::PLocal: return {{"kind", "p_local"}, {"prime", ring->prime().get_str()}};
    case RingKind::Laurent:
      return {{"kind", "laurent"},
              {"base", to_json(ring->base())},
              {"variable", ring->variable_name()},
              {"degree", ring->variable_degree()}};
    case RingKind::Polynomial: {
      Json gens = Json::array();
      for (const auto& g : ring->generators()) gens.push_back({{"name", g.name}, {"degree", g.degree}});
      return {{"kind", "polynomial"}, {"base", to_json(ring->base())}, {"generators", gens}};
    }
    case RingKind::Quotient:
      return {{"kind", "quotient"},
              {"ring", to_json(ring->base())},
              {"generator", element_string(ring->quotient_generator())}};
    case RingKind::PolyQuotient: break;
  }
  throw Error(ErrorCode::Unsupported, "no JSON form for " + ring->description());
}

RingPtr ring_from_json(const Json& j) {
  if (j.is_string()) return parse_ring(j.get<std::string>());
  const std::string kind = str(j, "kind");
  if (kind == "integers") return integers();
  if (kind == "rationals") return rationals();
  if (kind == "integers_mod") return integers_mod(big(str(j, "modulus")));
  if (kind == "p_local") return p_local(big(str(j, "prime")));
  if (kind == "laurent") {
    return laurent(ring_from_json(field(j, "base")), str(j, "variable"), j.contains("degree") ? integer(j, "degree") : 1);
  }
  if (kind == "polynomial") {
    std::vector<Generator> gens;
    for (const auto& g : field(j, "generators")) gens.push_back({str(g, "name"), g.contains("degree") ? integer(g, "degree") : 1});
    return polynomial(ring_from_json(field(j, "base")), std::move(gens));
  }
  if (kind == "quotient") {
    const RingPtr r = ring_from_json(field(j, "ring"));
    return quotient_by_element(r, parse_expression(str(j, "generator"), r));
  }
  bad("unknown ring kind \"" + kind + "\"");
}

Json to_json(const Element& e) { return {{"ring", to_json(e.ring())}, {"value", element_string(e)}}; }

Element element_from_json(const Json& j) {
  const RingPtr r = ring_from_json(field(j, "ring"));
  return parse_expression(str(j, "value"), r);
}

Json to_json(const Series& s) {
  Json c = Json::array();
  for (const auto& e : s.coefficients()) c.push_back(element_string(e));
  return {{"ring", to_json(s.ring())}, {"precision", s.precision()}, {"coeffs", c}};
}

Series series_from_json(const Json& j) {
  const RingPtr r = ring_from_json(field(j, "ring"));
  const Json& c = field(j, "coeffs");
  if (!c.is_array() || c.empty()) bad("\"coeffs\" must be a non-empty array");
  std::vector<Element> coeffs;
  for (const auto& v : c) {
    if (!v.is_string()) bad("coefficients are expression strings");
    coeffs.push_back(parse_expression(v.get<std::string>(), r));
  }
  if (j.contains("precision") && integer(j, "precision") != static_cast<int>(coeffs.size()) - 1) {
    bad("\"precision\" does not match the number of coefficients");
  }
  return Series(r, std::move(coeffs));
}

Json to_json(const FormalGroupLaw& f) {
  Json coeffs = Json::array();
  for (int i = 1; i <= f.precision(); ++i)
    for (int j = 1; i + j <= f.precision(); ++j)
      if (!f.coefficient(i, j).is_zero()) {
        coeffs.push_back({{"i", i}, {"j", j}, {"value", element_string(f.coefficient(i, j))}});
      }
  Json out{{"ring", to_json(f.ring())}, {"precision", f.precision()}, {"coefficients", coeffs}};
  if (f.grading()) out["grading"] = *f.grading();
  return out;
}

FormalGroupLaw fgl_from_json(const Json& j) {
  const RingPtr r = ring_from_json(field(j, "ring"));
  const int n = integer(j, "precision");
  if (n < 1) bad("precision must be positive");
  Series2 body(r, n);
  body.set(1, 0, Element::one(r));
  body.set(0, 1, Element::one(r));
  if (j.contains("coefficients")) {
    for (const auto& c : j.at("coefficients")) {
      const int a = integer(c, "i"), b = integer(c, "j");
      if (a < 1 || b < 1 || a + b > n) {
        bad("coefficient (" + std::to_string(a) + "," + std::to_string(b) + ") is outside i,j >= 1, i+j <= N");
      }
      body.set(a, b, parse_expression(str(c, "value"), r));
    }
  }
  std::optional<DegreeMap> grading;
  if (j.contains("grading")) grading = j.at("grading").get<DegreeMap>();
  return FormalGroupLaw(std::move(body), std::move(grading));
}

Json to_json(const AxiomReport& r) {
  Json axioms = Json::array();
  for (const auto& a : r.axioms) {
    Json e{{"name", a.name}, {"pass", a.pass}};
    if (!a.pass) {
      e["witness"] = a.witness;
      e["detail"] = a.detail;
    }
    axioms.push_back(std::move(e));
  }
  return {{"pass", r.pass()}, {"axioms", axioms}};
}

Json to_json(const LandweberReport& r) {
  Json primes = Json::array();
  for (const auto& p : r.primes) {
    Json stages = Json::array();
    for (const auto& s : p.stages) {
      Json e{{"n", s.n}, {"quotient", s.quotient}, {"status", to_string(s.status)}};
      if (s.v) e["v"] = element_string(*s.v);
      if (s.witness) e["witness"] = element_string(*s.witness);
      stages.push_back(std::move(e));
    }
    Json summary{{"verdict", to_string(p.verdict)}};
    if (p.verdict == PrimeVerdict::Fails) {
      summary["n"] = p.height;
      summary["witness"] = element_string(*p.stages.back().witness);
    } else {
      summary["height"] = p.height;
    }
    primes.push_back({{"prime", p.prime}, {"stages", stages}, {"summary", summary}});
  }
  return {{"exact", r.exact()}, {"max_height", r.max_height}, {"precision", r.precision}, {"primes", primes}};
}

Json to_json(const std::vector<VEntry>& v) {
  Json out = Json::array();
  for (const auto& e : v) {
    Json x{{"n", e.n}, {"v", element_string(e.v)}, {"degree", e.degree}};
    if (e.homogeneous) x["homogeneous"] = *e.homogeneous;
    out.push_back(std::move(x));
  }
  return out;
}

Json to_json(const HqReport& r) {
  Json degrees = Json::array();
  for (const auto& d : r.degrees) {
    degrees.push_back({{"degree", d.degree},
                       {"source_dimension", d.source_dimension},
                       {"target_dimension", d.target_dimension},
                       {"rank", d.rank},
                       {"isomorphism", d.full_rank()}});
  }
  return {{"pass", r.pass()}, {"degrees", degrees}};
}

Json to_json(const HopfReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json e{{"name", c.name}, {"pass", c.pass}};
    if (!c.pass) {
      e["generator"] = c.generator;
      e["degree"] = c.degree;
      e["detail"] = c.detail;
    }
    checks.push_back(std::move(e));
  }
  return {{"flavor", r.flavor}, {"pass", r.pass()}, {"checks", checks}};
}

Json to_json(const AdamsSequence& a) {
  Json values = Json::array();
  for (const auto& v : a.values()) values.push_back(v.get_str());
  return {{"window", {a.lo(), a.hi()}}, {"values", values}};
}

AdamsSequence sequence_from_json(const Json& j) {
  const Json& w = field(j, "window");
  if (!w.is_array() || w.size() != 2 || !w[0].is_number_integer() || !w[1].is_number_integer()) {
    bad("\"window\" must be [lo, hi]");
  }
  const int lo = w[0].get<int>(), hi = w[1].get<int>();
  std::vector<mpq_class> values;
  for (const auto& v : field(j, "values")) values.push_back(rational(v));
  if (static_cast<int>(values.size()) != hi - lo + 1) bad("window and value count disagree");
  return AdamsSequence(lo, std::move(values));
}

Json to_json(const OmegaTower& t) {
  Json levels = Json::array();
  for (const auto& l : t.levels()) levels.push_back(to_json(l));
  return {{"depth", t.depth()}, {"precision", t.precision()}, {"levels", levels}};
}

OmegaTower tower_from_json(const Json& j) {
  std::vector<Series> levels;
  for (const auto& l : field(j, "levels")) levels.push_back(series_from_json(l));
  OmegaTower t(std::move(levels));
  if (j.contains("depth") && integer(j, "depth") != t.depth()) bad("\"depth\" does not match the levels");
  return t;
}

Json to_json(const TwistedLaurent& u) {
  Json terms = Json::array();
  if (const auto* s = std::get_if<SequenceLaurent>(&u)) {
    for (const auto& [p, a] : s->terms) terms.push_back({{"power", p}, {"sequence", to_json(a)}});
    return {{"model", "sequence"}, {"terms", terms}};
  }
  for (const auto& [p, t] : std::get<TowerLaurent>(u).terms) terms.push_back({{"power", p}, {"tower", to_json(t)}});
  return {{"model", "tower"}, {"terms", terms}};
}

TwistedLaurent twisted_laurent_from_json(const Json& j) {
  const std::string model = str(j, "model");
  if (model == "sequence") {
    SequenceLaurent s;
    for (const auto& t : field(j, "terms")) {
      if (!s.terms.emplace(integer(t, "power"), sequence_from_json(field(t, "sequence"))).second) bad("repeated power");
    }
    return s;
  }
  if (model == "tower") {
    TowerLaurent s;
    for (const auto& t : field(j, "terms")) {
      if (!s.terms.emplace(integer(t, "power"), tower_from_json(field(t, "tower"))).second) bad("repeated power");
    }
    return s;
  }
  bad("unknown model \"" + model + "\"");
}

}  // namespace fglforge
