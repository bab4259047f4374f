#pragma once

// Stagewise regular-sequence check of (v_0, v_1, ...) on R or R/(g), per prime.

#include <optional>
#include <string>
#include <vector>

#include "fglforge/fgl.hpp"

namespace fglforge {

struct LandweberInput {
  FormalGroupLaw fgl;
  std::optional<Element> module_generator;  // nullopt: R itself
  std::vector<long> primes;
  int max_height = 0;
  bool parallel = true;
};

enum class StageStatus { Injective, Fails, QuotientZero };
std::string to_string(StageStatus s);

struct LandweberStage {
  int n = 0;
  std::string quotient;                // description of Q_n = M/(v_0..v_{n-1})
  std::optional<Element> v;            // image of v_n in Q_n (absent for quotient_zero)
  StageStatus status = StageStatus::Injective;
  std::optional<Element> witness;      // s != 0 with v_n s = 0 (fails only)
};

enum class PrimeVerdict { ExactHeight, RegularThrough, Fails };
std::string to_string(PrimeVerdict v);

struct PrimeReport {
  long prime = 0;
  std::vector<LandweberStage> stages;
  PrimeVerdict verdict = PrimeVerdict::RegularThrough;
  /// ExactHeight: the height; RegularThrough: the last stage checked; Fails: failing stage.
  int height = 0;
};

struct LandweberReport {
  std::vector<PrimeReport> primes;
  int max_height = 0;
  int precision = 0;
  /// No prime failed (exact within the requested primes, heights and precision).
  bool exact() const;
};

/// Stages are evaluated lazily: v_n is only needed (and precision N >= p^n only
/// required) for stages that are actually reached.
LandweberReport landweber_check(const LandweberInput& input);

struct VEntry {
  int n = 0;
  Element v;
  int degree = 0;                   // p^n - 1
  std::optional<bool> homogeneous;  // when the law carries a grading
};

/// v_0..v_H with their weights; requires N >= p^H.
std::vector<VEntry> v_sequence_report(const FormalGroupLaw& f, long p, int max_height);

}  // namespace fglforge
