#ifndef QGAME_SCHEME_H_
#define QGAME_SCHEME_H_

#include <array>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

#include "qgame/complex_core.h"

// State-simulation payoff engine. Every closed-form expression in the
// library is checked against payoffs_oracle, which evolves the two-qubit
// state explicitly and projects it onto the entangled measurement basis.

namespace qgame {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kHalfPi = std::numbers::pi / 2.0;

// A parameter fell outside its admissible range.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Throws DomainError naming `what` unless lo <= value <= hi.
void check_range(const char* what, double value, double lo, double hi);

enum class PhiRange {
  kNarrow,  // [0, pi/2]
  kFull,    // [0, 2 pi)
};

double phi_upper(PhiRange range);
bool phi_in_range(double phi, PhiRange range);

// Entanglement angles: gamma for the initial state, delta for the
// measurement basis. Both in the closed interval [0, pi/2].
class SchemeParams {
 public:
  SchemeParams(double gamma, double delta);

  double gamma() const { return gamma_; }
  double delta() const { return delta_; }

 private:
  double gamma_;
  double delta_;
};

// One player's move U(theta, phi) = cos(theta/2) R(phi) + sin(theta/2) C.
class StrategyParams {
 public:
  StrategyParams(double theta, double phi, PhiRange range = PhiRange::kNarrow);

  double theta() const { return theta_; }
  double phi() const { return phi_; }

  // Probability of the identity move in the mixed-strategy reading.
  double identity_weight() const;

  friend bool operator==(const StrategyParams&, const StrategyParams&) = default;

 private:
  double theta_;
  double phi_;
};

struct BosPayoffs {
  double alpha;
  double beta;
  double sigma;
};

// 2x2 bimatrix indexed [alice move][bob move] with O = 0, T = 1.
class GameMatrix {
 public:
  using Table = std::array<std::array<double, 2>, 2>;

  // a = [[alpha, sigma], [sigma, beta]], b = [[beta, sigma], [sigma, alpha]],
  // requiring alpha > beta > sigma.
  static GameMatrix battle_of_sexes(double alpha, double beta, double sigma);
  static GameMatrix bimatrix(const Table& alice, const Table& bob);

  double alice(Outcome o) const;
  double bob(Outcome o) const;
  const Table& alice_table() const { return alice_; }
  const Table& bob_table() const { return bob_; }

  const std::optional<BosPayoffs>& bos() const { return bos_; }

 private:
  GameMatrix(const Table& alice, const Table& bob,
             std::optional<BosPayoffs> bos);

  Table alice_;
  Table bob_;
  std::optional<BosPayoffs> bos_;
};

struct PayoffPair {
  double alice = 0.0;
  double bob = 0.0;
};

// Indexed by Outcome.
struct MeasurementBasis {
  std::array<TwoQubitState, 4> states;

  const TwoQubitState& operator[](Outcome o) const {
    return states[static_cast<int>(o)];
  }
};

using OutcomeProbabilities = std::array<double, 4>;

TwoQubitState initial_state(double gamma);

// diag(e^{i phi}, e^{-i phi}). Accepts any finite phi.
Mat2 rotation_op(double phi);

// C|O> = -|T>, C|T> = |O>.
Mat2 flip_op();

Mat2 strategy_op(const StrategyParams& s);

TwoQubitState final_state(double gamma, const StrategyParams& s1,
                          const StrategyParams& s2);

MeasurementBasis measurement_basis(double delta);

OutcomeProbabilities outcome_probabilities(const TwoQubitState& state,
                                           const MeasurementBasis& basis);

struct OracleResult {
  PayoffPair payoffs;
  OutcomeProbabilities probabilities;
};

OracleResult evaluate_oracle(const GameMatrix& game, const SchemeParams& scheme,
                             const StrategyParams& s1,
                             const StrategyParams& s2);

PayoffPair payoffs_oracle(const GameMatrix& game, const SchemeParams& scheme,
                          const StrategyParams& s1, const StrategyParams& s2);

// Expected payoffs of the classical mixed extension where each player picks
// O with probability p (Alice) and q (Bob).
PayoffPair classical_mixed_payoffs(const GameMatrix& game, double p, double q);

}  // namespace qgame

#endif  // QGAME_SCHEME_H_
