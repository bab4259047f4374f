#include "fglforge/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fglforge/acceptance.hpp"
#include "fglforge/expression.hpp"
#include "fglforge/json_io.hpp"

namespace fglforge {

namespace {

constexpr int kMaxPrecision = 64;
constexpr int kMaxDepth = 16;
constexpr long kMaxPrime = 97;

struct Outcome {
  Outcome(Json r, bool p = true, std::string t = {}) : result(std::move(r)), pass(p), text(std::move(t)) {}
  Json result;
  bool pass;
  std::string text;  // used with --format text
};

int default_precision() {
  if (const char* env = std::getenv("FGLFORGE_PRECISION")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > kMaxPrecision) {
      throw Error(ErrorCode::InvalidArgument, "FGLFORGE_PRECISION must be an integer in [1, 64]");
    }
    return static_cast<int>(v);
  }
  return 10;
}

void require_range(const char* what, long v, long lo, long hi) {
  if (v < lo || v > hi) {
    throw Error(ErrorCode::InvalidArgument,
                std::string(what) + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + path);
  try {
    Json j = Json::parse(in);
    if (j.is_object() && j.contains("tool") && j.contains("result")) return j.at("result");
    return j;
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::InvalidArgument, path + ": " + e.what());
  }
}

RingPtr default_ring(NamedLaw name) {
  switch (name) {
    case NamedLaw::Multiplicative: return laurent(integers());
    case NamedLaw::HondaH1: return integers_mod(2);
    case NamedLaw::UniversalRational: return rationals();
    case NamedLaw::Additive: break;
  }
  return integers();
}

// A file path holding FGL JSON, "name-over-RING", or a bare law name.
FormalGroupLaw load_fgl(const std::string& spec, const std::string& ring, int precision) {
  if (const auto at = spec.find("-over-"); at != std::string::npos) {
    return fgl_named(named_law_from_string(spec.substr(0, at)), parse_ring(spec.substr(at + 6)), precision);
  }
  if (std::filesystem::is_regular_file(spec)) return fgl_from_json(read_json_file(spec));
  const NamedLaw name = named_law_from_string(spec);
  return fgl_named(name, ring.empty() ? default_ring(name) : parse_ring(ring), precision);
}

FormalGroupLaw checked(const FormalGroupLaw& f) {
  const AxiomReport r = check_axioms(f);
  for (const auto& a : r.axioms)
    if (!a.pass) throw Error(ErrorCode::InvalidArgument, "input is not a formal group law: " + a.name + " fails");
  return validate(f);
}

std::pair<int, int> parse_window(const std::string& s) {
  const auto colon = s.find(':', 1);
  try {
    if (colon == std::string::npos) throw std::invalid_argument("");
    std::size_t used = 0;
    const int lo = std::stoi(s.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument("");
    const std::string rest = s.substr(colon + 1);
    const int hi = std::stoi(rest, &used);
    if (used != rest.size() || hi < lo) throw std::invalid_argument("");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::InvalidArgument, "window must be lo:hi with lo <= hi, got '" + s + "'");
  }
}

// "geom(e)" is (1-x)^e.
Series load_composition_series(const std::string& spec, int precision) {
  if (spec.rfind("geom(", 0) == 0 && spec.back() == ')') {
    try {
      std::size_t used = 0;
      const std::string inner = spec.substr(5, spec.size() - 6);
      const long k = std::stol(inner, &used);
      if (used == inner.size()) return geometric_series(-k, precision);
    } catch (const std::logic_error&) {
    }
    throw Error(ErrorCode::InvalidArgument, "expected geom(<integer>), got '" + spec + "'");
  }
  return series_from_json(read_json_file(spec));
}

Json series_result(const Series& s) {
  return {{"series", to_json(s)}, {"text", s.to_string()}};
}

std::string selftest_text(const std::vector<CriterionResult>& results) {
  std::ostringstream os;
  bool all = true;
  for (const auto& r : results) {
    os << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  " << r.name;
    if (!r.pass) os << "  (" << r.detail << ")";
    os << "\n";
    all = all && r.pass;
  }
  os << (all ? "all criteria passed" : "some criteria failed") << "\n";
  return os.str();
}

std::string landweber_text(const LandweberReport& r) {
  std::ostringstream os;
  for (const auto& p : r.primes) {
    os << "p = " << p.prime << ": ";
    switch (p.verdict) {
      case PrimeVerdict::ExactHeight: os << "exact, height " << p.height; break;
      case PrimeVerdict::RegularThrough: os << "regular through n = " << p.height; break;
      case PrimeVerdict::Fails: os << "fails at n = " << p.height << ", witness " << p.stages.back().witness->to_string(); break;
    }
    os << "\n";
    for (const auto& s : p.stages) {
      os << "  n = " << s.n << "  " << to_string(s.status) << "  in " << s.quotient;
      if (s.v) os << "  v = " << s.v->to_string();
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with formal group laws and K-theory operations", kToolName};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  std::string command;
  std::function<Outcome()> action;
  std::string format = "json";
  int precision = -1;
  auto precision_option = [&](CLI::App* sub) {
    sub->add_option("--precision,-N", precision, "truncation degree (default $FGLFORGE_PRECISION or 10)");
  };
  auto format_option = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
  };
  auto bind = [&](CLI::App* sub, std::string name, std::function<Outcome()> f) {
    sub->callback([&command, &action, name = std::move(name), f = std::move(f)] {
      command = name;
      action = f;
    });
  };

  // ---- fgl ----
  auto* fgl = app.add_subcommand("fgl", "formal group laws")->require_subcommand(1);
  std::string fgl_spec, ring_spec;
  long k = 2;
  long prime = 2;
  int max_height = 2;
  auto law_options = [&](CLI::App* sub) {
    sub->add_option("--fgl,--name", fgl_spec, "JSON file, law name, or name-over-RING")->required();
    sub->add_option("--ring", ring_spec, "coefficient ring, e.g. Z[beta^+-1]");
    precision_option(sub);
  };
  auto* fgl_named_cmd = fgl->add_subcommand("named", "emit a named law");
  law_options(fgl_named_cmd);
  bind(fgl_named_cmd, "fgl named", [&] { return Outcome{to_json(load_fgl(fgl_spec, ring_spec, precision))}; });

  auto* fgl_check = fgl->add_subcommand("check", "check the axioms");
  law_options(fgl_check);
  format_option(fgl_check);
  bind(fgl_check, "fgl check", [&] {
    const AxiomReport r = check_axioms(load_fgl(fgl_spec, ring_spec, precision));
    std::string text;
    for (const auto& a : r.axioms) text += (a.pass ? "PASS  " : "FAIL  ") + a.name + "\n";
    return Outcome{to_json(r), r.pass(), text};
  });

  auto* fgl_pseries = fgl->add_subcommand("pseries", "the k-series [k](x)");
  law_options(fgl_pseries);
  fgl_pseries->add_option("--k", k, "multiplier")->required();
  bind(fgl_pseries, "fgl pseries", [&] {
    Outcome o{series_result(n_series(checked(load_fgl(fgl_spec, ring_spec, precision)), static_cast<int>(k)))};
    o.result["k"] = k;
    return o;
  });

  auto* fgl_log_cmd = fgl->add_subcommand("log", "the logarithm (Q-algebras)");
  law_options(fgl_log_cmd);
  bind(fgl_log_cmd, "fgl log", [&] { return Outcome{series_result(fgl_log(checked(load_fgl(fgl_spec, ring_spec, precision))))}; });

  auto* fgl_vn = fgl->add_subcommand("vseq", "v_0..v_H with their degrees");
  law_options(fgl_vn);
  fgl_vn->add_option("--prime,-p", prime)->required();
  fgl_vn->add_option("--max-height,-H", max_height)->required();
  bind(fgl_vn, "fgl vseq", [&] {
    require_range("prime", prime, 2, kMaxPrime);
    require_range("max-height", max_height, 0, kMaxPrecision);
    if (!is_prime(mpz_class(prime))) throw Error(ErrorCode::InvalidArgument, std::to_string(prime) + " is not prime");
    return Outcome{to_json(v_sequence_report(checked(load_fgl(fgl_spec, ring_spec, precision)), prime, max_height))};
  });

  // ---- landweber ----
  auto* lw = app.add_subcommand("landweber", "Landweber exactness")->require_subcommand(1);
  auto* lw_check = lw->add_subcommand("check", "check (v_0, v_1, ...) stagewise");
  std::string module_spec = "self";
  std::vector<long> primes;
  bool serial = false;
  law_options(lw_check);
  format_option(lw_check);
  lw_check->add_option("--module", module_spec, "self, or a generator g for R/(g)");
  lw_check->add_option("--primes", primes)->delimiter(',')->required();
  lw_check->add_option("--max-height,-H", max_height)->required();
  lw_check->add_flag("--serial", serial, "check primes one at a time");
  bind(lw_check, "landweber check", [&] {
    require_range("max-height", max_height, 0, kMaxPrecision);
    for (long p : primes) require_range("prime", p, 2, kMaxPrime);
    const FormalGroupLaw f = checked(load_fgl(fgl_spec, ring_spec, precision));
    std::optional<Element> generator;
    if (module_spec != "self") generator = parse_expression(module_spec, f.ring());
    const LandweberReport r = landweber_check({f, generator, primes, max_height, !serial});
    Json j = to_json(r);
    j["module"] = generator ? generator->to_string() : "self";
    j["ring"] = f.ring()->description();
    return Outcome{j, r.exact(), landweber_text(r)};
  });

  // ---- lazard ----
  auto* lz = app.add_subcommand("lazard", "the Lazard ring and (L, LB)")->require_subcommand(1);
  int degree = 4, groupoid = 0;
  auto* lz_universal = lz->add_subcommand("universal", "the universal law over Q[m1, m2, ...]");
  precision_option(lz_universal);
  bind(lz_universal, "lazard universal", [&] { return Outcome{to_json(universal_fgl_rational(precision))}; });

  auto* lz_classify = lz->add_subcommand("classify", "the images of m_i classifying a law over a Q-algebra");
  law_options(lz_classify);
  bind(lz_classify, "lazard classify", [&] {
    const auto m = classify_rational(checked(load_fgl(fgl_spec, ring_spec, precision)));
    Json list = Json::array();
    for (std::size_t i = 0; i < m.size(); ++i) list.push_back({{"generator", "m" + std::to_string(i + 1)}, {"value", m[i].to_string()}});
    return Outcome{Json{{"images", list}}};
  });

  auto* lz_hq = lz->add_subcommand("hq", "degreewise rank of Q[m] -> Q[b] at the additive point");
  lz_hq->add_option("--degree,-d", degree)->required();
  format_option(lz_hq);
  bind(lz_hq, "lazard hq", [&] {
    require_range("degree", degree, 1, kMaxDepth);
    const HqReport r = hq_idempotence_check(degree);
    std::ostringstream text;
    for (const auto& d : r.degrees) {
      text << "degree " << d.degree << ": dim " << d.source_dimension << " -> " << d.target_dimension << ", rank " << d.rank
           << (d.full_rank() ? "" : "  NOT AN ISOMORPHISM") << "\n";
    }
    return Outcome{to_json(r), r.pass(), text.str()};
  });

  auto* lz_hopf = lz->add_subcommand("hopf", "Hopf algebroid axioms");
  auto* hopf_degree = lz_hopf->add_option("--degree,-d", degree, "truncation of (L, LB)");
  lz_hopf->add_option("--groupoid", groupoid, "use the indiscrete groupoid on n objects instead")->excludes(hopf_degree);
  format_option(lz_hopf);
  bind(lz_hopf, "lazard hopf", [&] {
    HopfReport r;
    if (groupoid > 0) {
      require_range("groupoid", groupoid, 1, kMaxDepth);
      r = hopf_axiom_check(groupoid_fixture(groupoid));
    } else {
      require_range("degree", degree, 1, 8);
      r = hopf_axiom_check(lb_structure_maps(degree));
    }
    std::string text;
    for (const auto& c : r.checks) text += (c.pass ? "PASS  " : "FAIL  ") + c.name + "\n";
    return Outcome{to_json(r), r.pass(), text};
  });

  // ---- ops ----
  auto* ops = app.add_subcommand("ops", "K-theory operations")->require_subcommand(1);
  std::string model = "sequence", window, lhs, rhs, input, direction;
  int depth = 3;
  int index = 0;
  bool integral = false;
  auto* ops_adams = ops->add_subcommand("adams", "the Adams operation psi^k");
  ops_adams->add_option("--k", k)->required();
  ops_adams->add_option("--model", model)->check(CLI::IsMember({"tower", "sequence"}));
  ops_adams->add_option("--depth,-D", depth);
  ops_adams->add_option("--window", window, "lo:hi for the sequence model (default -D:N)");
  ops_adams->add_flag("--integral", integral, "tower over Z (k = +-1)");
  precision_option(ops_adams);
  bind(ops_adams, "ops adams", [&] {
    require_range("depth", depth, 0, kMaxDepth);
    if (model == "tower") return Outcome{to_json(TwistedLaurent(adams_op_tower(k, depth, precision, integral)))};
    const auto [lo, hi] = window.empty() ? std::pair{-depth, precision} : parse_window(window);
    return Outcome{to_json(TwistedLaurent(adams_op_sequence(k, lo, hi)))};
  });

  auto* ops_compose = ops->add_subcommand("compose", "the composition product of two series");
  ops_compose->add_option("--lhs", lhs, "geom(e) for (1-x)^e, or a series JSON file")->required();
  ops_compose->add_option("--rhs", rhs, "geom(e) for (1-x)^e, or a series JSON file")->required();
  precision_option(ops_compose);
  bind(ops_compose, "ops compose", [&] {
    const Series h = circ_compose(load_composition_series(lhs, precision), load_composition_series(rhs, precision));
    Outcome o{series_result(h)};
    if (h.precision() >= 1 && h[0] == Element::one(h.ring()) && h.ring()->kind() == RingKind::Integers) {
      const long c = h[1].integer_value().get_si();
      if (coerce(geometric_series(c, h.precision()), h.ring()) == h) o.result["recognized"] = "geom(" + std::to_string(-c) + ")";
    }
    return o;
  });

  auto* ops_idem = ops->add_subcommand("idempotent", "the Adams idempotent e_n on a window");
  ops_idem->add_option("--n", index)->required();
  ops_idem->add_option("--window", window, "lo:hi")->required();
  bind(ops_idem, "ops idempotent", [&] {
    const auto [lo, hi] = parse_window(window);
    return Outcome{to_json(idempotent_sequence(index, lo, hi))};
  });

  auto* ops_iso = ops->add_subcommand("iso", "transport between the tower and sequence models");
  ops_iso->add_option("--input", input, "element JSON file")->required();
  ops_iso->add_option("--direction", direction)->required()->check(CLI::IsMember({"mult2add", "add2mult"}));
  bind(ops_iso, "ops iso", [&] {
    const TwistedLaurent u = twisted_laurent_from_json(read_json_file(input));
    if (direction == "mult2add") {
      const auto* t = std::get_if<TowerLaurent>(&u);
      if (!t) throw Error(ErrorCode::ModelMismatch, "mult2add needs a tower-model element");
      return Outcome{to_json(TwistedLaurent(mult_add_iso(*t)))};
    }
    const auto* s = std::get_if<SequenceLaurent>(&u);
    if (!s) throw Error(ErrorCode::ModelMismatch, "add2mult needs a sequence-model element");
    return Outcome{to_json(TwistedLaurent(add_mult_iso(*s)))};
  });

  // ---- selftest ----
  auto* self = app.add_subcommand("selftest", "run the acceptance suite");
  format_option(self);
  bind(self, "selftest", [&] {
    const auto results = run_acceptance();
    Json list = Json::array();
    bool all = true;
    for (const auto& r : results) {
      Json e{{"id", r.id}, {"name", r.name}, {"pass", r.pass}};
      if (!r.pass) e["detail"] = r.detail;
      list.push_back(std::move(e));
      all = all && r.pass;
    }
    return Outcome{Json{{"pass", all}, {"criteria", list}}, all, selftest_text(results)};
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (precision == -1) precision = default_precision();
    require_range("precision", precision, 1, kMaxPrecision);
    const Outcome o = action();
    if (format == "text" && !o.text.empty()) {
      out << o.text;
    } else {
      const Json envelope{{"tool", kToolName}, {"version", kToolVersion}, {"command", command}, {"result", o.result}};
      out << envelope.dump(2) << "\n";
    }
    return o.pass ? 0 : 1;
  } catch (const Error& e) {
    err << kToolName << ": " << e.what() << "\n";
    return e.code() == ErrorCode::IntegralityViolation ? 1 : 2;
  } catch (const std::exception& e) {
    err << kToolName << ": " << e.what() << "\n";
    return 2;
  }
}

}  // namespace fglforge
