#include "qgame/scheme.h"

#include <cmath>
#include <sstream>

namespace qgame {

void check_range(const char* what, double value, double lo, double hi) {
  if (std::isfinite(value) && value >= lo && value <= hi) return;
  std::ostringstream msg;
  msg.precision(17);
  msg << what << " = " << value << " is outside [" << lo << ", " << hi << "]";
  throw DomainError(msg.str());
}

double phi_upper(PhiRange range) {
  return range == PhiRange::kNarrow ? kHalfPi : 2.0 * kPi;
}

bool phi_in_range(double phi, PhiRange range) {
  if (!std::isfinite(phi) || phi < 0.0) return false;
  return range == PhiRange::kNarrow ? phi <= kHalfPi : phi < 2.0 * kPi;
}

SchemeParams::SchemeParams(double gamma, double delta)
    : gamma_(gamma), delta_(delta) {
  check_range("gamma", gamma, 0.0, kHalfPi);
  check_range("delta", delta, 0.0, kHalfPi);
}

StrategyParams::StrategyParams(double theta, double phi, PhiRange range)
    : theta_(theta), phi_(phi) {
  check_range("theta", theta, 0.0, kPi);
  if (!phi_in_range(phi, range)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "phi = " << phi << " is outside "
        << (range == PhiRange::kNarrow ? "[0, pi/2]" : "[0, 2 pi)");
    throw DomainError(msg.str());
  }
}

double StrategyParams::identity_weight() const {
  const double c = std::cos(theta_ / 2.0);
  return c * c;
}

GameMatrix::GameMatrix(const Table& alice, const Table& bob,
                       std::optional<BosPayoffs> bos)
    : alice_(alice), bob_(bob), bos_(bos) {
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (!std::isfinite(alice_[i][j]) || !std::isfinite(bob_[i][j])) {
        throw DomainError("payoff matrix entries must be finite");
      }
    }
  }
}

GameMatrix GameMatrix::battle_of_sexes(double alpha, double beta,
                                       double sigma) {
  if (!(alpha > beta && beta > sigma)) {
    std::ostringstream msg;
    msg << "Battle of the Sexes requires alpha > beta > sigma, got (" << alpha
        << ", " << beta << ", " << sigma << ")";
    throw DomainError(msg.str());
  }
  return GameMatrix({{{alpha, sigma}, {sigma, beta}}},
                    {{{beta, sigma}, {sigma, alpha}}},
                    BosPayoffs{alpha, beta, sigma});
}

GameMatrix GameMatrix::bimatrix(const Table& alice, const Table& bob) {
  return GameMatrix(alice, bob, std::nullopt);
}

double GameMatrix::alice(Outcome o) const {
  const int k = static_cast<int>(o);
  return alice_[k / 2][k % 2];
}

double GameMatrix::bob(Outcome o) const {
  const int k = static_cast<int>(o);
  return bob_[k / 2][k % 2];
}

TwoQubitState initial_state(double gamma) {
  check_range("gamma", gamma, 0.0, kHalfPi);
  TwoQubitState s;
  s[Outcome::kOO] = std::cos(gamma / 2.0);
  s[Outcome::kTT] = kI * std::sin(gamma / 2.0);
  return s;
}

Mat2 rotation_op(double phi) {
  return Mat2::diag(std::polar(1.0, phi), std::polar(1.0, -phi));
}

Mat2 flip_op() {
  // Columns are the images of |O> and |T>.
  Mat2 c;
  c(1, 0) = -1.0;
  c(0, 1) = 1.0;
  return c;
}

Mat2 strategy_op(const StrategyParams& s) {
  return Complex(std::cos(s.theta() / 2.0)) * rotation_op(s.phi()) +
         Complex(std::sin(s.theta() / 2.0)) * flip_op();
}

TwoQubitState final_state(double gamma, const StrategyParams& s1,
                          const StrategyParams& s2) {
  return apply_local(strategy_op(s1), strategy_op(s2), initial_state(gamma));
}

MeasurementBasis measurement_basis(double delta) {
  check_range("delta", delta, 0.0, kHalfPi);
  const double c = std::cos(delta / 2.0);
  const Complex is = kI * std::sin(delta / 2.0);
  MeasurementBasis b;
  auto& oo = b.states[static_cast<int>(Outcome::kOO)];
  auto& ot = b.states[static_cast<int>(Outcome::kOT)];
  auto& to = b.states[static_cast<int>(Outcome::kTO)];
  auto& tt = b.states[static_cast<int>(Outcome::kTT)];
  oo[Outcome::kOO] = c;
  oo[Outcome::kTT] = is;
  tt[Outcome::kTT] = c;
  tt[Outcome::kOO] = is;
  to[Outcome::kTO] = c;
  to[Outcome::kOT] = -is;
  ot[Outcome::kOT] = c;
  ot[Outcome::kTO] = -is;
  return b;
}

OutcomeProbabilities outcome_probabilities(const TwoQubitState& state,
                                           const MeasurementBasis& basis) {
  OutcomeProbabilities p{};
  for (Outcome o : kOutcomes) {
    p[static_cast<int>(o)] = std::norm(inner_product(basis[o], state));
  }
  return p;
}

OracleResult evaluate_oracle(const GameMatrix& game, const SchemeParams& scheme,
                             const StrategyParams& s1,
                             const StrategyParams& s2) {
  OracleResult r;
  r.probabilities = outcome_probabilities(final_state(scheme.gamma(), s1, s2),
                                          measurement_basis(scheme.delta()));
  for (Outcome o : kOutcomes) {
    const double p = r.probabilities[static_cast<int>(o)];
    r.payoffs.alice += game.alice(o) * p;
    r.payoffs.bob += game.bob(o) * p;
  }
  return r;
}

PayoffPair payoffs_oracle(const GameMatrix& game, const SchemeParams& scheme,
                          const StrategyParams& s1, const StrategyParams& s2) {
  return evaluate_oracle(game, scheme, s1, s2).payoffs;
}

PayoffPair classical_mixed_payoffs(const GameMatrix& game, double p,
                                   double q) {
  const std::array<double, 2> pa{p, 1.0 - p};
  const std::array<double, 2> qb{q, 1.0 - q};
  PayoffPair r;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      r.alice += pa[i] * qb[j] * game.alice_table()[i][j];
      r.bob += pa[i] * qb[j] * game.bob_table()[i][j];
    }
  }
  return r;
}

}  // namespace qgame
