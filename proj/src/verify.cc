#include "qgame/verify.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

#include "qgame/closed_form.h"

namespace qgame {
namespace {

constexpr double kFormulaTol = 1e-9;
constexpr double kReductionTol = 1e-12;

double pair_dev(const PayoffPair& x, const PayoffPair& y) {
  return std::max(std::abs(x.alice - y.alice), std::abs(x.bob - y.bob));
}

std::string fmt(const char* pattern, double a, double b) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

// Runs `draw` n times and keeps the largest deviation it returns.
CheckResult measure(std::string name, std::size_t n, double tol,
                    const std::function<double()>& draw) {
  CheckResult c;
  c.name = std::move(name);
  c.draws = n;
  c.tolerance = tol;
  for (std::size_t k = 0; k < n; ++k) c.max_deviation = std::max(c.max_deviation, draw());
  c.passed = c.max_deviation <= tol;
  return c;
}

double gram_and_completeness_dev(double delta) {
  const MeasurementBasis b = measurement_basis(delta);
  double dev = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const Complex expected = i == j ? 1.0 : 0.0;
      dev = std::max(dev, std::abs(inner_product(b.states[i], b.states[j]) - expected));
      Complex proj = 0.0;
      for (const TwoQubitState& s : b.states) proj += s.amp[i] * std::conj(s.amp[j]);
      dev = std::max(dev, std::abs(proj - expected));
    }
  }
  return dev;
}

}  // namespace

double Sampler::uniform(double lo, double hi) {
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

GameMatrix Sampler::battle_of_sexes() {
  while (true) {
    std::array<double, 3> v{uniform(-10, 10), uniform(-10, 10), uniform(-10, 10)};
    std::sort(v.begin(), v.end());
    if (v[1] - v[0] >= 1e-3 && v[2] - v[1] >= 1e-3) {
      return GameMatrix::battle_of_sexes(v[2], v[1], v[0]);
    }
  }
}

bool VerificationReport::all_required_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) {
    return !c.required || c.passed;
  });
}

VerificationReport run_verification(std::uint64_t seed) {
  VerificationReport report;
  report.seed = seed;
  Sampler rng(seed);
  auto& out = report.checks;

  out.push_back(measure("strategy_unitarity", 1000, kReductionTol, [&] {
    const Mat2 u = strategy_op(rng.strategy());
    return max_abs_diff(u * u.adjoint(), Mat2::identity());
  }));

  out.push_back(measure("measurement_orthonormal_complete", 100, kFormulaTol,
                        [&] { return gram_and_completeness_dev(rng.angle_quarter()); }));

  out.push_back(measure("probability_normalization", 1000, kFormulaTol, [&] {
    const TwoQubitState f =
        final_state(rng.angle_quarter(), rng.strategy(), rng.strategy());
    const OutcomeProbabilities p =
        outcome_probabilities(f, measurement_basis(rng.angle_quarter()));
    double sum = 0.0, dev = 0.0;
    for (double x : p) {
      sum += x;
      if (x < 0.0) dev = std::max(dev, -x);
    }
    return std::max(dev, std::abs(sum - 1.0));
  }));

  out.push_back(measure("oracle_vs_general", 10000, kFormulaTol, [&] {
    const GameMatrix g = rng.battle_of_sexes();
    const SchemeParams sc(rng.angle_quarter(), rng.angle_quarter());
    const StrategyParams s1 = rng.strategy(), s2 = rng.strategy();
    return pair_dev(payoffs_oracle(g, sc, s1, s2), payoff_general(g, sc, s1, s2));
  }));

  out.push_back(measure("payoff_convex_hull", 1000, 0.0, [&] {
    const GameMatrix g = rng.battle_of_sexes();
    const SchemeParams sc(rng.angle_quarter(), rng.angle_quarter());
    const PayoffPair p = payoffs_oracle(g, sc, rng.strategy(), rng.strategy());
    const BosPayoffs& b = *g.bos();
    // Allow rounding at the hull boundary.
    const double slack = 1e-12 * (1.0 + std::abs(b.alpha) + std::abs(b.sigma));
    const double lo = b.sigma - slack, hi = b.alpha + slack;
    double dev = 0.0;
    for (double x : {p.alice, p.bob}) dev = std::max({dev, lo - x, x - hi});
    return dev;
  }));

  out.push_back(measure("case_a_i_vs_general", 1000, kReductionTol, [&] {
    const GameMatrix g = rng.battle_of_sexes();
    const double gamma = rng.angle_quarter(), t1 = rng.theta(), t2 = rng.theta();
    return pair_dev(payoff_case_a_i(g, gamma, t1, t2),
                    payoff_general(g, SchemeParams(gamma, 0.0),
                                   StrategyParams(t1, 0.0), StrategyParams(t2, 0.0)));
  }));

  out.push_back(measure("case_a_ii_vs_general", 1000, kReductionTol, [&] {
    const GameMatrix g = rng.battle_of_sexes();
    const double gamma = rng.angle_quarter(), t1 = rng.theta(), t2 = rng.theta();
    const double phi1 = rng.angle_quarter();
    return pair_dev(payoff_case_a_ii(g, gamma, t1, t2),
                    payoff_general(g, SchemeParams(gamma, 0.0), StrategyParams(t1, phi1),
                                   StrategyParams(t2, kHalfPi - phi1)));
  }));

  out.push_back(measure("case_b_i_vs_general", 1000, kReductionTol, [&] {
    const GameMatrix g = rng.battle_of_sexes();
    const double gamma = rng.angle_quarter();
    const StrategyParams s1 = rng.strategy(), s2 = rng.strategy();
    return pair_dev(payoff_case_b_i(g, gamma, s1, s2),
                    payoff_general(g, SchemeParams(gamma, gamma), s1, s2));
  }));

  out.push_back(measure("case_b_ii_vs_general", 1000, kReductionTol, [&] {
    const GameMatrix g = rng.battle_of_sexes();
    const double t1 = rng.theta(), t2 = rng.theta();
    return pair_dev(payoff_case_b_ii(g, t1, t2),
                    payoff_general(g, SchemeParams(kHalfPi, kHalfPi),
                                   StrategyParams(t1, 0.0), StrategyParams(t2, 0.0)));
  }));

  out.push_back(measure("case_c_vs_general", 1000, kReductionTol, [&] {
    const GameMatrix g = rng.battle_of_sexes();
    const double gamma = rng.angle_quarter(), delta = rng.angle_quarter();
    const double t1 = rng.theta(), t2 = rng.theta();
    return pair_dev(payoff_case_c(g, gamma, delta, t1, t2),
                    payoff_general(g, SchemeParams(gamma, delta),
                                   StrategyParams(t1, 0.0), StrategyParams(t2, 0.0)));
  }));

  out.push_back(measure("case_c_equals_case_a_i_shifted", 1000, kReductionTol, [&] {
    const GameMatrix g = rng.battle_of_sexes();
    const double gamma = rng.angle_quarter();
    const double delta = rng.uniform(0.0, gamma);
    const double t1 = rng.theta(), t2 = rng.theta();
    return pair_dev(payoff_case_c(g, gamma, delta, t1, t2),
                    payoff_case_a_i(g, gamma - delta, t1, t2));
  }));

  out.push_back(measure("case_d_vs_general", 1000, kReductionTol, [&] {
    const GameMatrix g = rng.battle_of_sexes();
    const double delta = rng.angle_quarter();
    const StrategyParams s1 = rng.strategy(), s2 = rng.strategy();
    return pair_dev(payoff_case_d(g, delta, s1, s2, FormulaForm::kCorrected),
                    payoff_general(g, SchemeParams(0.0, delta), s1, s2));
  }));

  {
    CheckResult c = measure("case_d_printed_vs_general", 1000, kReductionTol, [&] {
      const GameMatrix g = rng.battle_of_sexes();
      const double delta = rng.angle_quarter();
      const StrategyParams s1 = rng.strategy(), s2 = rng.strategy();
      return pair_dev(payoff_case_d(g, delta, s1, s2, FormulaForm::kPrinted),
                      payoff_general(g, SchemeParams(0.0, delta), s1, s2));
    });
    c.required = false;
    const GameMatrix g = GameMatrix::battle_of_sexes(2, 1, 0);
    const StrategyParams s(kHalfPi, kHalfPi / 2.0);
    const PayoffPair printed = payoff_case_d(g, kHalfPi, s, s, FormulaForm::kPrinted);
    const PayoffPair oracle = payoffs_oracle(g, SchemeParams(0.0, kHalfPi), s, s);
    c.note = "probe BoS(2,1,0) delta=pi/2 theta1=theta2=pi/2 phi1=phi2=pi/4: printed=" +
             fmt("(%.15g, %.15g)", printed.alice, printed.bob) +
             " oracle=" + fmt("(%.15g, %.15g)", oracle.alice, oracle.bob) +
             "; oracle supports the corrected form";
    out.push_back(c);
  }

  out.push_back(measure("du_corrected_vs_oracle", 1000, kFormulaTol, [&] {
    const GameMatrix g = rng.battle_of_sexes();
    const StrategyParams s1 = rng.strategy(), s2 = rng.strategy();
    return pair_dev(payoff_du_maximal(g, s1, s2, FormulaForm::kCorrected),
                    payoffs_oracle(g, SchemeParams(kHalfPi, kHalfPi), s1, s2));
  }));

  {
    CheckResult c = measure("du_printed_vs_oracle", 1000, kFormulaTol, [&] {
      const GameMatrix g = rng.battle_of_sexes();
      const StrategyParams s1 = rng.strategy(), s2 = rng.strategy();
      return pair_dev(payoff_du_maximal(g, s1, s2, FormulaForm::kPrinted),
                      payoffs_oracle(g, SchemeParams(kHalfPi, kHalfPi), s1, s2));
    });
    c.required = false;
    const GameMatrix g = GameMatrix::battle_of_sexes(2, 1, 0);
    const StrategyParams s1(0.0, kHalfPi), s2(0.0, 0.0);
    const PayoffPair printed = payoff_du_maximal(g, s1, s2, FormulaForm::kPrinted);
    const PayoffPair oracle = payoffs_oracle(g, SchemeParams(kHalfPi, kHalfPi), s1, s2);
    c.note = "probe BoS(2,1,0) theta1=theta2=0 phi1=pi/2 phi2=0: printed=" +
             fmt("(%.15g, %.15g)", printed.alice, printed.bob) +
             " oracle=" + fmt("(%.15g, %.15g)", oracle.alice, oracle.bob) +
             "; oracle supports the corrected form";
    out.push_back(c);
  }

  out.push_back(measure("classical_limit", 1000, kReductionTol, [&] {
    const GameMatrix g = rng.battle_of_sexes();
    const StrategyParams s1(rng.theta(), 0.0), s2(rng.theta(), 0.0);
    const PayoffPair classical =
        classical_mixed_payoffs(g, s1.identity_weight(), s2.identity_weight());
    return std::max(pair_dev(payoff_general(g, SchemeParams(0.0, 0.0), s1, s2), classical),
                    pair_dev(payoffs_oracle(g, SchemeParams(0.0, 0.0), s1, s2), classical));
  }));

  out.push_back(measure("marinatto_weber_reduction", 1000, kFormulaTol, [&] {
    const GameMatrix g = rng.battle_of_sexes();
    const double gamma = rng.angle_quarter(), t1 = rng.theta(), t2 = rng.theta();
    return pair_dev(payoff_case_a_i(g, gamma, t1, t2),
                    payoffs_oracle(g, SchemeParams(gamma, 0.0), StrategyParams(t1, 0.0),
                                   StrategyParams(t2, 0.0)));
  }));

  out.push_back(measure("eisert_reduction", 1000, kFormulaTol, [&] {
    const GameMatrix g = rng.battle_of_sexes();
    const double gamma = rng.angle_quarter(), phi1 = rng.angle_quarter();
    const StrategyParams s1(rng.theta(), phi1), s2(rng.theta(), kHalfPi - phi1);
    return pair_dev(payoff_case_b_i(g, gamma, s1, s2),
                    payoffs_oracle(g, SchemeParams(gamma, gamma), s1, s2));
  }));

  out.push_back(measure("player_swap_symmetry", 1000, kFormulaTol, [&] {
    const GameMatrix g = rng.battle_of_sexes();
    const GameMatrix mirrored = GameMatrix::bimatrix(
        {{{g.bob_table()[0][0], g.bob_table()[1][0]},
          {g.bob_table()[0][1], g.bob_table()[1][1]}}},
        {{{g.alice_table()[0][0], g.alice_table()[1][0]},
          {g.alice_table()[0][1], g.alice_table()[1][1]}}});
    const SchemeParams sc(rng.angle_quarter(), rng.angle_quarter());
    const StrategyParams s1 = rng.strategy(), s2 = rng.strategy();
    const PayoffPair p = payoff_general(g, sc, s1, s2);
    const PayoffPair q = payoffs_oracle(mirrored, sc, s2, s1);
    return pair_dev(p, PayoffPair{q.bob, q.alice});
  }));

  return report;
}

std::string format_report(const VerificationReport& report) {
  std::ostringstream os;
  os << "verify seed=" << report.seed << "\n";
  std::size_t failed = 0;
  for (const CheckResult& c : report.checks) {
    const char* status = !c.required ? "INFO" : (c.passed ? "PASS" : "FAIL");
    if (c.required && !c.passed) ++failed;
    char line[256];
    std::snprintf(line, sizeof line, "%-4s %-34s draws=%-6zu max_dev=%.3e tol=%.0e\n",
                  status, c.name.c_str(), c.draws, c.max_deviation, c.tolerance);
    os << line;
    if (!c.note.empty()) os << "     " << c.note << "\n";
  }
  os << (failed == 0 ? "all required checks passed" : "required checks failed: ")
     << (failed == 0 ? "" : std::to_string(failed)) << "\n";
  return os.str();
}

}  // namespace qgame
