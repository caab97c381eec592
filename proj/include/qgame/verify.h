#ifndef QGAME_VERIFY_H_
#define QGAME_VERIFY_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qgame/scheme.h"

// Seeded numerical certification of the closed forms against the state
// simulation, and of the structural properties of the operators.

namespace qgame {

// Reproducible draws. Uniforms are built from raw 53-bit engine output so the
// sequence does not depend on the standard library's distribution code.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi);
  // alpha > beta > sigma, each in [-10, 10], pairwise at least 1e-3 apart.
  GameMatrix battle_of_sexes();
  double angle_quarter() { return uniform(0.0, kHalfPi); }
  double theta() { return uniform(0.0, kPi); }
  StrategyParams strategy() { return StrategyParams(theta(), angle_quarter()); }

 private:
  std::mt19937_64 engine_;
};

struct CheckResult {
  std::string name;
  std::size_t draws = 0;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  // Informational checks are reported but never fail the run.
  bool required = true;
  bool passed = true;
  std::string note;
};

struct VerificationReport {
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool all_required_passed() const;
};

VerificationReport run_verification(std::uint64_t seed);

std::string format_report(const VerificationReport& report);

}  // namespace qgame

#endif  // QGAME_VERIFY_H_
