#include "qgame/closed_form.h"

#include <cmath>

namespace qgame {
namespace {

double sq(double x) { return x * x; }

double cos2_half(double angle) { return sq(std::cos(angle / 2.0)); }
double sin2_half(double angle) { return sq(std::sin(angle / 2.0)); }

void check_theta(double theta1, double theta2) {
  check_range("theta1", theta1, 0.0, kPi);
  check_range("theta2", theta2, 0.0, kPi);
}

// Shared shape of the delta = 0 and phi = 0 families: a classical mixed
// table whose "entanglement" angle enters through
// w = a sin^2(e/2) + b cos^2(e/2) for Alice and its mirror for Bob.
PayoffPair mixed_family(const BosPayoffs& g, double angle, double theta1,
                        double theta2) {
  const double c1 = cos2_half(theta1);
  const double c2 = cos2_half(theta2);
  const double s = sin2_half(angle);
  const double c = cos2_half(angle);
  const double sum = g.alpha + g.beta - 2.0 * g.sigma;
  const double wa = g.alpha * s + g.beta * c;
  const double wb = g.beta * s + g.alpha * c;
  PayoffPair r;
  r.alice = c1 * (c2 * sum - wa + g.sigma) + c2 * (-wa + g.sigma) + wa;
  r.bob = c2 * (c1 * sum - wb + g.sigma) + c1 * (-wb + g.sigma) + wb;
  return r;
}

}  // namespace

BosCoefficients bos_coefficients(double alpha, double beta, double delta) {
  BosCoefficients k;
  k.xi = alpha * cos2_half(delta) + beta * sin2_half(delta);
  k.eta = alpha * sin2_half(delta) + beta * cos2_half(delta);
  k.chi = (alpha - beta) / 2.0 * std::sin(delta);
  return k;
}

const BosPayoffs& require_bos(const GameMatrix& game) {
  if (!game.bos()) {
    throw FormulaDomainError(
        "closed-form payoffs need a Battle of the Sexes matrix; use the "
        "oracle for general bimatrices");
  }
  return *game.bos();
}

const char* form_name(FormulaForm form) {
  return form == FormulaForm::kPrinted ? "printed" : "corrected";
}

PayoffPair payoff_general(const GameMatrix& game, const SchemeParams& scheme,
                          const StrategyParams& s1, const StrategyParams& s2) {
  const BosPayoffs& g = require_bos(game);
  const double gamma = scheme.gamma();
  const BosCoefficients k = bos_coefficients(g.alpha, g.beta, scheme.delta());
  const double phi_sum = s1.phi() + s2.phi();
  const double cc = cos2_half(s1.theta()) * cos2_half(s2.theta());
  const double ss = sin2_half(s1.theta()) * sin2_half(s2.theta());
  const double interference =
      std::sin(s1.theta()) * std::sin(s2.theta()) * std::sin(phi_sum);
  const double sg = sin2_half(gamma);
  const double cg = cos2_half(gamma);
  const double sin_g = std::sin(gamma);
  const double phase = k.chi * std::cos(2.0 * phi_sum) * sin_g;
  const double base = (g.alpha + g.beta - 2.0 * g.sigma) * sin_g;

  PayoffPair r;
  r.alice = cc * (k.eta * sg + k.xi * cg + phase - g.sigma) +
            ss * (k.eta * cg + k.xi * sg - k.chi * sin_g - g.sigma) +
            (base - 2.0 * k.chi) / 4.0 * interference + g.sigma;
  r.bob = cc * (k.xi * sg + k.eta * cg - phase - g.sigma) +
          ss * (k.xi * cg + k.eta * sg + k.chi * sin_g - g.sigma) +
          (base + 2.0 * k.chi) / 4.0 * interference + g.sigma;
  return r;
}

PayoffPair payoff_case_a_i(const GameMatrix& game, double gamma, double theta1,
                           double theta2) {
  const BosPayoffs& g = require_bos(game);
  check_range("gamma", gamma, 0.0, kHalfPi);
  check_theta(theta1, theta2);
  return mixed_family(g, gamma, theta1, theta2);
}

PayoffPair payoff_case_a_ii(const GameMatrix& game, double gamma,
                            double theta1, double theta2) {
  PayoffPair r = payoff_case_a_i(game, gamma, theta1, theta2);
  const BosPayoffs& g = *game.bos();
  const double extra = (g.alpha + g.beta - 2.0 * g.sigma) / 4.0 *
                       std::sin(gamma) * std::sin(theta1) * std::sin(theta2);
  r.alice += extra;
  r.bob += extra;
  return r;
}

PayoffPair payoff_case_b_i(const GameMatrix& game, double gamma,
                           const StrategyParams& s1, const StrategyParams& s2) {
  const BosPayoffs& g = require_bos(game);
  check_range("gamma", gamma, 0.0, kHalfPi);
  const double xi1 = g.alpha * cos2_half(gamma) + g.beta * sin2_half(gamma);
  const double eta1 = g.alpha * sin2_half(gamma) + g.beta * cos2_half(gamma);
  const double chi1 = (g.alpha - g.beta) / 2.0 * sq(std::sin(gamma));
  const double phi_sum = s1.phi() + s2.phi();
  const double cc = cos2_half(s1.theta()) * cos2_half(s2.theta());
  const double ss = sin2_half(s1.theta()) * sin2_half(s2.theta());
  const double cross = std::sin(gamma) * std::sin(s1.theta()) *
                       std::sin(s2.theta()) * std::sin(phi_sum);
  const double sg = sin2_half(gamma);
  const double cg = cos2_half(gamma);
  const double phase = chi1 * std::cos(2.0 * phi_sum);

  PayoffPair r;
  r.alice = cc * (eta1 * sg + xi1 * cg + phase - g.sigma) +
            ss * (eta1 * cg + xi1 * sg - chi1 - g.sigma) +
            (g.beta - g.sigma) / 2.0 * cross + g.sigma;
  r.bob = cc * (xi1 * sg + eta1 * cg - phase - g.sigma) +
          ss * (xi1 * cg + eta1 * sg + chi1 - g.sigma) +
          (g.alpha - g.sigma) / 2.0 * cross + g.sigma;
  return r;
}

PayoffPair payoff_case_b_ii(const GameMatrix& game, double theta1,
                            double theta2) {
  const BosPayoffs& g = require_bos(game);
  check_theta(theta1, theta2);
  const double c1 = cos2_half(theta1);
  const double c2 = cos2_half(theta2);
  const double s1 = sin2_half(theta1);
  const double s2 = sin2_half(theta2);
  const double mismatch = g.sigma * (c1 * s2 + s1 * c2);
  return {g.alpha * c1 * c2 + g.beta * s1 * s2 + mismatch,
          g.beta * c1 * c2 + g.alpha * s1 * s2 + mismatch};
}

PayoffPair payoff_case_c(const GameMatrix& game, double gamma, double delta,
                         double theta1, double theta2) {
  const BosPayoffs& g = require_bos(game);
  check_range("gamma", gamma, 0.0, kHalfPi);
  check_range("delta", delta, 0.0, kHalfPi);
  check_theta(theta1, theta2);
  const double e = gamma - delta;
  const double c1 = cos2_half(theta1);
  const double c2 = cos2_half(theta2);
  const double sum = g.alpha + g.beta - 2.0 * g.sigma;
  const double wa = g.alpha * sin2_half(e) + g.beta * cos2_half(e);
  const double wb = g.beta * sin2_half(e) + g.alpha * cos2_half(e);
  PayoffPair r;
  r.alice = c1 * (c2 * sum - wa + g.sigma) + c2 * (-wa + g.sigma) + wa;
  r.bob = c1 * (c2 * sum - wb + g.sigma) + c2 * (-wb + g.sigma) + wb;
  return r;
}

PayoffPair payoff_du_maximal(const GameMatrix& game, const StrategyParams& s1,
                             const StrategyParams& s2, FormulaForm form) {
  const BosPayoffs& g = require_bos(game);
  const double phi_sum = s1.phi() + s2.phi();
  const double c = std::cos(s1.theta() / 2.0) * std::cos(s2.theta() / 2.0);
  const double s = std::sin(s1.theta() / 2.0) * std::sin(s2.theta() / 2.0);
  const double first = form == FormulaForm::kPrinted
                           ? sq(std::sin(phi_sum))
                           : sq(std::cos(phi_sum));
  const double square = sq(c * std::sin(phi_sum) + s);
  return {(g.alpha - g.sigma) * c * c * first +
              (g.beta - g.sigma) * square + g.sigma,
          (g.alpha - g.sigma) * square +
              (g.beta - g.sigma) * c * c * first + g.sigma};
}

PayoffPair payoff_case_d(const GameMatrix& game, double delta,
                         const StrategyParams& s1, const StrategyParams& s2,
                         FormulaForm form) {
  const BosPayoffs& g = require_bos(game);
  check_range("delta", delta, 0.0, kHalfPi);
  PayoffPair r = mixed_family(g, delta, s1.theta(), s2.theta());
  const double coefficient = form == FormulaForm::kPrinted
                                 ? (g.alpha - g.beta) / 2.0
                                 : (g.alpha - g.beta) / 4.0;
  const double shift = coefficient * std::sin(delta) * std::sin(s1.theta()) *
                       std::sin(s2.theta()) * std::sin(s1.phi() + s2.phi());
  r.alice -= shift;
  r.bob += shift;
  return r;
}

}  // namespace qgame
