#ifndef QGAME_EQUILIBRIUM_H_
#define QGAME_EQUILIBRIUM_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qgame/scheme.h"

// Grid best responses and epsilon-Nash certification over the two-parameter
// strategy set. All payoffs come from the state-simulation oracle, so any
// bimatrix can be searched.

namespace qgame {

enum class Player { kAlice, kBob };

// Cartesian product of theta and phi values. Point index is
// theta_index * phi_count + phi_index.
class StrategyGrid {
 public:
  // theta spans [0, pi] including both endpoints. phi spans [0, pi/2]
  // including both endpoints for kNarrow, and takes steps equally spaced
  // points of [0, 2 pi) for kFull. A step count of 1 yields the single point
  // at the lower end of the range.
  static StrategyGrid uniform(int theta_steps, int phi_steps,
                              PhiRange range = PhiRange::kNarrow);

  static StrategyGrid from_values(std::vector<double> thetas,
                                  std::vector<double> phis,
                                  PhiRange range = PhiRange::kNarrow);

  std::size_t size() const { return thetas_.size() * phis_.size(); }
  StrategyParams at(std::size_t index) const;
  const std::vector<double>& thetas() const { return thetas_; }
  const std::vector<double>& phis() const { return phis_; }
  PhiRange phi_range() const { return range_; }

 private:
  StrategyGrid(std::vector<double> thetas, std::vector<double> phis,
               PhiRange range);

  std::vector<double> thetas_;
  std::vector<double> phis_;
  PhiRange range_;
};

// Payoffs for every (alice point, bob point) pair of a grid.
class PayoffTable {
 public:
  PayoffTable(const GameMatrix& game, const SchemeParams& scheme,
              const StrategyGrid& grid);

  std::size_t points() const { return points_; }
  const PayoffPair& at(std::size_t alice_index, std::size_t bob_index) const {
    return cells_[alice_index * points_ + bob_index];
  }

 private:
  std::size_t points_;
  std::vector<PayoffPair> cells_;
};

inline constexpr double kTieTolerance = 1e-12;

struct BestResponse {
  double max_payoff = 0.0;
  // Every grid point within kTieTolerance of the maximum, in index order.
  std::vector<std::size_t> argmax_indices;
  std::vector<StrategyParams> argmax;
};

BestResponse best_response(const GameMatrix& game, const SchemeParams& scheme,
                           const StrategyParams& opponent, Player responder,
                           const StrategyGrid& grid);

struct ProfileResult {
  std::size_t alice_index = 0;
  std::size_t bob_index = 0;
  StrategyParams s1{0.0, 0.0};
  StrategyParams s2{0.0, 0.0};
  PayoffPair payoffs;
  // Largest gain either player can get by a unilateral on-grid deviation.
  double eps_cert = 0.0;
};

// Certificate for a single profile, by direct enumeration of deviations.
double epsilon_certificate(const GameMatrix& game, const SchemeParams& scheme,
                           const StrategyGrid& grid, std::size_t alice_index,
                           std::size_t bob_index);

// All profiles with eps_cert <= eps, ordered by (alice_index, bob_index).
std::vector<ProfileResult> epsilon_nash(const GameMatrix& game,
                                        const SchemeParams& scheme,
                                        const StrategyGrid& grid, double eps);

std::vector<ProfileResult> epsilon_nash(const PayoffTable& table,
                                        const StrategyGrid& grid, double eps);

struct SweepRow {
  double gamma = 0.0;
  double delta = 0.0;
  std::size_t equilibrium_count = 0;
  // The equilibrium maximizing min(alice, bob); ties (within kTieTolerance)
  // go to the larger sum, then to the earlier profile.
  std::optional<ProfileResult> best_symmetric;
  // max |oracle - payoff_general| over the grid; NaN for non-BoS games.
  double max_formula_deviation = 0.0;
};

std::vector<SweepRow> sweep(const GameMatrix& game,
                            std::span<const SchemeParams> points,
                            const StrategyGrid& grid, double eps);

}  // namespace qgame

#endif  // QGAME_EQUILIBRIUM_H_
