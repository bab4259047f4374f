#include "fglforge/landweber.hpp"

#include <algorithm>
#include <future>

namespace fglforge {

std::string to_string(StageStatus s) {
  switch (s) {
    case StageStatus::Injective: return "injective";
    case StageStatus::Fails: return "fails";
    case StageStatus::QuotientZero: return "quotient_zero";
  }
  return "?";
}

std::string to_string(PrimeVerdict v) {
  switch (v) {
    case PrimeVerdict::ExactHeight: return "exact_height";
    case PrimeVerdict::RegularThrough: return "regular_through";
    case PrimeVerdict::Fails: return "fails";
  }
  return "?";
}

bool LandweberReport::exact() const {
  return std::none_of(primes.begin(), primes.end(), [](const PrimeReport& p) { return p.verdict == PrimeVerdict::Fails; });
}

namespace {

PrimeReport check_prime(const FormalGroupLaw& f, const std::optional<Element>& generator, long p, int max_height) {
  PrimeReport report;
  report.prime = p;
  RingPtr q = generator ? quotient_by_element(f.ring(), *generator) : f.ring();
  for (int n = 0; n <= max_height + 1; ++n) {
    LandweberStage stage;
    stage.n = n;
    stage.quotient = q->description();
    if (is_zero_ring(q)) {
      stage.status = StageStatus::QuotientZero;
      report.stages.push_back(std::move(stage));
      report.verdict = PrimeVerdict::ExactHeight;
      report.height = n - 1;
      return report;
    }
    if (n > max_height) break;
    const Element v = coerce(v_coefficient(f, p, n), q);
    stage.v = v;
    if (auto witness = annihilator_witness(v)) {
      stage.status = StageStatus::Fails;
      stage.witness = std::move(*witness);
      report.stages.push_back(std::move(stage));
      report.verdict = PrimeVerdict::Fails;
      report.height = n;
      return report;
    }
    report.stages.push_back(std::move(stage));
    q = quotient_by_element(q, v);
  }
  report.verdict = PrimeVerdict::RegularThrough;
  report.height = max_height;
  return report;
}

}  // namespace

LandweberReport landweber_check(const LandweberInput& input) {
  if (!input.fgl.validated()) throw Error(ErrorCode::NotValidated, "formal group law has not passed check_axioms");
  if (input.max_height < 0) throw Error(ErrorCode::InvalidArgument, "negative height bound");
  if (input.primes.empty()) throw Error(ErrorCode::InvalidArgument, "no primes requested");
  for (long p : input.primes)
    if (p < 2 || !is_prime(mpz_class(p))) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
  if (input.module_generator && !same_ring(input.module_generator->ring(), input.fgl.ring())) {
    throw Error(ErrorCode::RingMismatch, "module generator is not in the coefficient ring");
  }
  LandweberReport report;
  report.max_height = input.max_height;
  report.precision = input.fgl.precision();
  std::vector<long> primes = input.primes;
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  if (input.parallel && primes.size() > 1) {
    std::vector<std::future<PrimeReport>> jobs;
    for (long p : primes)
      jobs.push_back(std::async(std::launch::async, check_prime, std::cref(input.fgl), std::cref(input.module_generator),
                                p, input.max_height));
    for (auto& j : jobs) report.primes.push_back(j.get());
  } else {
    for (long p : primes) report.primes.push_back(check_prime(input.fgl, input.module_generator, p, input.max_height));
  }
  return report;
}

std::vector<VEntry> v_sequence_report(const FormalGroupLaw& f, long p, int max_height) {
  if (!checked_power(p, max_height, f.precision())) {
    throw Error(ErrorCode::InsufficientPrecision, "need precision >= p^H");
  }
  std::vector<VEntry> out;
  for (int n = 0; n <= max_height; ++n) {
    VEntry e;
    e.n = n;
    e.v = v_coefficient(f, p, n);
    e.degree = static_cast<int>(*checked_power(p, n, f.precision())) - 1;
    if (f.grading()) {
      const Homogeneity h = homogeneity(e.v, *f.grading());
      e.homogeneous = h.zero || (h.homogeneous && h.degree == e.degree);
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace fglforge
