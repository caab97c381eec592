#ifndef QGAME_CLOSED_FORM_H_
#define QGAME_CLOSED_FORM_H_

#include <stdexcept>

#include "qgame/scheme.h"

// Analytic payoffs for the Battle of the Sexes under the generalized scheme,
// and the special-case expressions obtained by restricting (gamma, delta,
// phi1, phi2). Each case function takes only the parameters its case leaves
// free; the restricted ones are fixed inside.
//
// All functions require a GameMatrix carrying the Battle of the Sexes tag and
// throw FormulaDomainError otherwise. General bimatrices go through
// payoffs_oracle.

namespace qgame {

class FormulaDomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct BosCoefficients {
  double xi = 0.0;
  double eta = 0.0;
  double chi = 0.0;
};

// xi = a cos^2(d/2) + b sin^2(d/2), eta = a sin^2(d/2) + b cos^2(d/2),
// chi = (a - b)/2 sin d.
BosCoefficients bos_coefficients(double alpha, double beta, double delta);

const BosPayoffs& require_bos(const GameMatrix& game);

PayoffPair payoff_general(const GameMatrix& game, const SchemeParams& scheme,
                          const StrategyParams& s1, const StrategyParams& s2);

// delta = 0, phi1 = phi2 = 0.
PayoffPair payoff_case_a_i(const GameMatrix& game, double gamma, double theta1,
                           double theta2);

// delta = 0, phi1 + phi2 = pi/2.
PayoffPair payoff_case_a_ii(const GameMatrix& game, double gamma,
                            double theta1, double theta2);

// delta = gamma.
PayoffPair payoff_case_b_i(const GameMatrix& game, double gamma,
                           const StrategyParams& s1, const StrategyParams& s2);

// delta = gamma = pi/2, phi1 = phi2 = 0.
PayoffPair payoff_case_b_ii(const GameMatrix& game, double theta1,
                            double theta2);

// phi1 = phi2 = 0, arbitrary gamma and delta.
PayoffPair payoff_case_c(const GameMatrix& game, double gamma, double delta,
                         double theta1, double theta2);

// Which variant of a published expression to evaluate. kPrinted is the
// expression as originally typeset; kCorrected is the same case re-derived
// from payoff_general, which is what the state simulation agrees with.
enum class FormulaForm { kPrinted, kCorrected };

const char* form_name(FormulaForm form);

// delta = gamma = pi/2. The printed variant carries sin^2(phi1 + phi2) in the
// first term where the derivation gives cos^2(phi1 + phi2).
PayoffPair payoff_du_maximal(const GameMatrix& game, const StrategyParams& s1,
                             const StrategyParams& s2, FormulaForm form);

// gamma = 0. The printed variant has interference coefficient
// (alpha - beta)/2 sin(delta); the derivation gives half of that.
PayoffPair payoff_case_d(const GameMatrix& game, double delta,
                         const StrategyParams& s1, const StrategyParams& s2,
                         FormulaForm form);

}  // namespace qgame

#endif  // QGAME_CLOSED_FORM_H_
