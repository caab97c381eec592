// Acceptance suite: one PASS/FAIL line per exit criterion, nonzero exit if
// any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qgame/cli.h"
#include "qgame/closed_form.h"
#include "qgame/equilibrium.h"
#include "qgame/scheme.h"
#include "test_support.h"

namespace qgame {
namespace {

constexpr std::uint64_t kSeed = 20240601;

double dev(const PayoffPair& x, const PayoffPair& y) {
  return std::max(std::abs(x.alice - y.alice), std::abs(x.bob - y.bob));
}

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> run;
};

double max_over(std::uint64_t seed, int n, const std::function<double(testing::Rng&)>& f) {
  testing::Rng rng(seed);
  double m = 0;
  for (int k = 0; k < n; ++k) m = std::max(m, f(rng));
  return m;
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

bool oracle_equivalence(std::string& detail) {
  const double m = max_over(kSeed, 10000, [](testing::Rng& r) {
    const GameMatrix g = r.bos();
    const SchemeParams sc(r.uniform(0, kHalfPi), r.uniform(0, kHalfPi));
    const StrategyParams s1 = r.strategy(), s2 = r.strategy();
    return dev(payoff_general(g, sc, s1, s2), payoffs_oracle(g, sc, s1, s2));
  });
  detail = "draws=10000 max_dev=" + sci(m) + " tol=1e-9";
  return m <= 1e-9;
}

bool reduction_suite(std::string& detail) {
  struct Case {
    const char* name;
    std::function<double(testing::Rng&)> f;
  };
  const std::vector<Case> cases{
      {"a(i)",
       [](testing::Rng& r) {
         const GameMatrix g = r.bos();
         const double gm = r.uniform(0, kHalfPi), t1 = r.uniform(0, kPi), t2 = r.uniform(0, kPi);
         return dev(payoff_case_a_i(g, gm, t1, t2), payoff_general(g, {gm, 0}, {t1, 0}, {t2, 0}));
       }},
      {"a(ii)",
       [](testing::Rng& r) {
         const GameMatrix g = r.bos();
         const double gm = r.uniform(0, kHalfPi), t1 = r.uniform(0, kPi), t2 = r.uniform(0, kPi);
         const double p1 = r.uniform(0, kHalfPi);
         return dev(payoff_case_a_ii(g, gm, t1, t2),
                    payoff_general(g, {gm, 0}, {t1, p1}, {t2, kHalfPi - p1}));
       }},
      {"b(i)",
       [](testing::Rng& r) {
         const GameMatrix g = r.bos();
         const double gm = r.uniform(0, kHalfPi);
         const StrategyParams s1 = r.strategy(), s2 = r.strategy();
         return dev(payoff_case_b_i(g, gm, s1, s2), payoff_general(g, {gm, gm}, s1, s2));
       }},
      {"b(ii)",
       [](testing::Rng& r) {
         const GameMatrix g = r.bos();
         const double t1 = r.uniform(0, kPi), t2 = r.uniform(0, kPi);
         return dev(payoff_case_b_ii(g, t1, t2),
                    payoff_general(g, {kHalfPi, kHalfPi}, {t1, 0}, {t2, 0}));
       }},
      {"c",
       [](testing::Rng& r) {
         const GameMatrix g = r.bos();
         const double gm = r.uniform(0, kHalfPi), d = r.uniform(0, kHalfPi);
         const double t1 = r.uniform(0, kPi), t2 = r.uniform(0, kPi);
         return dev(payoff_case_c(g, gm, d, t1, t2), payoff_general(g, {gm, d}, {t1, 0}, {t2, 0}));
       }},
      {"c=a(i)@(gamma-delta)",
       [](testing::Rng& r) {
         const GameMatrix g = r.bos();
         const double gm = r.uniform(0, kHalfPi), d = r.uniform(0, gm);
         const double t1 = r.uniform(0, kPi), t2 = r.uniform(0, kPi);
         return dev(payoff_case_c(g, gm, d, t1, t2), payoff_case_a_i(g, gm - d, t1, t2));
       }},
      {"d",
       [](testing::Rng& r) {
         const GameMatrix g = r.bos();
         const double d = r.uniform(0, kHalfPi);
         const StrategyParams s1 = r.strategy(), s2 = r.strategy();
         return dev(payoff_case_d(g, d, s1, s2, FormulaForm::kCorrected),
                    payoff_general(g, {0, d}, s1, s2));
       }},
  };
  bool ok = true;
  std::uint64_t seed = kSeed + 1;
  for (const Case& c : cases) {
    const double m = max_over(seed++, 1000, c.f);
    detail += std::string(detail.empty() ? "" : " ") + c.name + "=" + sci(m);
    ok = ok && m <= 1e-12;
  }
  detail += " (1000 draws each, tol=1e-12)";
  return ok;
}

bool classical_recovery(std::string& detail) {
  const double m = max_over(kSeed + 20, 1000, [](testing::Rng& r) {
    const GameMatrix g = r.bos();
    const double t1 = r.uniform(0, kPi), t2 = r.uniform(0, kPi);
    const double p = std::pow(std::cos(t1 / 2), 2), q = std::pow(std::cos(t2 / 2), 2);
    const auto& a = g.alice_table();
    const auto& b = g.bob_table();
    const PayoffPair expected{
        p * q * a[0][0] + p * (1 - q) * a[0][1] + (1 - p) * q * a[1][0] +
            (1 - p) * (1 - q) * a[1][1],
        p * q * b[0][0] + p * (1 - q) * b[0][1] + (1 - p) * q * b[1][0] +
            (1 - p) * (1 - q) * b[1][1]};
    return std::max(dev(payoff_general(g, {0, 0}, {t1, 0}, {t2, 0}), expected),
                    dev(payoffs_oracle(g, {0, 0}, {t1, 0}, {t2, 0}), expected));
  });
  const GameMatrix bos = GameMatrix::battle_of_sexes(2, 1, 0);
  const auto eq = epsilon_nash(bos, {0, 0}, StrategyGrid::from_values({0.0, kPi}, {0.0}), 1e-12);
  std::set<std::pair<std::size_t, std::size_t>> found;
  double worst_cert = 0;
  for (const auto& r : eq) {
    found.emplace(r.alice_index, r.bob_index);
    worst_cert = std::max(worst_cert, r.eps_cert);
  }
  const bool exact = found == std::set<std::pair<std::size_t, std::size_t>>{{0, 0}, {1, 1}};
  detail = "mixed max_dev=" + sci(m) + " tol=1e-12; pure equilibria=" +
           std::to_string(eq.size()) + (exact ? " {(O,O),(T,T)}" : " (unexpected set)") +
           " max eps_cert=" + sci(worst_cert);
  return m <= 1e-12 && exact && worst_cert <= 1e-12;
}

bool measurement_structure(std::string& detail) {
  const double basis = max_over(kSeed + 30, 100, [](testing::Rng& r) {
    const MeasurementBasis b = measurement_basis(r.uniform(0, kHalfPi));
    double d = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        const double id = i == j ? 1.0 : 0.0;
        d = std::max(d, std::abs(inner_product(b.states[i], b.states[j]) - id));
        Complex sum = 0;
        for (const auto& s : b.states) sum += s.amp[i] * std::conj(s.amp[j]);
        d = std::max(d, std::abs(sum - id));
      }
    return d;
  });
  const double probs = max_over(kSeed + 31, 1000, [](testing::Rng& r) {
    const auto p = outcome_probabilities(r.normalized_state(),
                                         measurement_basis(r.uniform(0, kHalfPi)));
    double sum = 0, neg = 0;
    for (double x : p) {
      sum += x;
      neg = std::max(neg, -x);
    }
    return std::max(neg, std::abs(sum - 1));
  });
  detail = "basis max_dev=" + sci(basis) + " (100 deltas), probability sum max_dev=" +
           sci(probs) + " (1000 states), tol=1e-9";
  return basis <= 1e-9 && probs <= 1e-9;
}

bool unitarity(std::string& detail) {
  testing::Rng rng(kSeed + 40);
  int failures = 0;
  for (int k = 0; k < 1000; ++k) {
    if (!is_unitary(strategy_op(rng.strategy()), 1e-12)) ++failures;
  }
  detail = "1000 draws, failures=" + std::to_string(failures) + " at tol=1e-12";
  return failures == 0;
}

bool du_adjudication(std::string& detail) {
  const double m = max_over(kSeed + 50, 1000, [](testing::Rng& r) {
    const GameMatrix g = r.bos();
    const StrategyParams s1 = r.strategy(), s2 = r.strategy();
    return dev(payoff_du_maximal(g, s1, s2, FormulaForm::kCorrected),
               payoffs_oracle(g, {kHalfPi, kHalfPi}, s1, s2));
  });
  const GameMatrix bos = GameMatrix::battle_of_sexes(2, 1, 0);
  const StrategyParams s1(0, kHalfPi), s2(0, 0);
  const PayoffPair oracle = payoffs_oracle(bos, {kHalfPi, kHalfPi}, s1, s2);
  const PayoffPair printed = payoff_du_maximal(bos, s1, s2, FormulaForm::kPrinted);
  char buf[160];
  std::snprintf(buf, sizeof buf, "; probe oracle=(%.12g, %.12g) printed=(%.12g, %.12g)",
                oracle.alice, oracle.bob, printed.alice, printed.bob);
  detail = "corrected max_dev=" + sci(m) + " tol=1e-9" + buf + " -> printed form disagrees";
  return m <= 1e-9 && dev(oracle, {1, 2}) <= 1e-9 && dev(printed, {3, 3}) <= 1e-9;
}

bool case_d_nonclassical(std::string& detail) {
  const GameMatrix bos = GameMatrix::battle_of_sexes(2, 1, 0);
  const BosPayoffs& g = *bos.bos();
  const double delta = kHalfPi, t = kHalfPi, phi_sum = kHalfPi;
  const double term =
      (g.alpha - g.beta) / 2 * std::sin(delta) * std::sin(t) * std::sin(t) * std::sin(phi_sum);
  const StrategyParams s(t, phi_sum / 2);
  const PayoffPair quantum = payoffs_oracle(bos, {0, delta}, s, s);
  const double w = s.identity_weight();
  const PayoffPair classical = classical_mixed_payoffs(bos, w, w);
  // With phi = 0 the same thetas give a phase-free payoff.
  const PayoffPair no_phase =
      payoffs_oracle(bos, {0, delta}, StrategyParams(t, 0), StrategyParams(t, 0));
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "interference term=%.12g; oracle=(%.12g, %.12g) vs classical=(%.12g, %.12g), "
                "phi=0 payoff=(%.12g, %.12g)",
                term, quantum.alice, quantum.bob, classical.alice, classical.bob,
                no_phase.alice, no_phase.bob);
  detail = buf;
  return std::abs(term) > 1e-9 && dev(quantum, classical) > 1e-9 && dev(quantum, no_phase) > 1e-9;
}

std::string run_cli(const std::vector<std::string>& args, int& code) {
  std::vector<const char*> argv{"qgame"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str();
}

bool determinism(std::string& detail) {
  int c1 = -1, c2 = -1;
  const std::string a = run_cli({"verify", "--seed", "7"}, c1);
  const std::string b = run_cli({"verify", "--seed", "7"}, c2);
  int c3 = -1, c4 = -1;
  const std::string s1 = run_cli({"sweep", "--gammas", "0,pi/4,pi/2", "--deltas", "0,pi/2",
                                  "--grid", "9,5"}, c3);
  const std::string s2 = run_cli({"sweep", "--gammas", "0,pi/4,pi/2", "--deltas", "0,pi/2",
                                  "--grid", "9,5"}, c4);
  detail = "verify --seed 7: " + std::to_string(a.size()) + " bytes, exit " +
           std::to_string(c1) + (a == b ? ", identical" : ", DIFFERENT") +
           "; parallel sweep " + (s1 == s2 ? "identical" : "DIFFERENT");
  return c1 == 0 && c2 == 0 && a == b && !a.empty() && c3 == 0 && s1 == s2;
}

}  // namespace
}  // namespace qgame

int main() {
  using namespace qgame;
  const std::vector<Criterion> criteria{
      {"oracle/closed-form equivalence", oracle_equivalence},
      {"reduction suite", reduction_suite},
      {"classical recovery", classical_recovery},
      {"measurement structure", measurement_structure},
      {"unitarity", unitarity},
      {"Du adjudication", du_adjudication},
      {"case (d) nonclassicality", case_d_nonclassical},
      {"determinism", determinism},
  };
  const auto start = std::chrono::steady_clock::now();
  int failed = 0;
  for (const Criterion& c : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (!ok) ++failed;
    std::printf("[%s] %-32s %s\n", ok ? "PASS" : "FAIL", c.name.c_str(), detail.c_str());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%zu criteria, %d failed, %.2f s\n", criteria.size(), failed, secs);
  return failed == 0 ? 0 : 1;
}
