#include "qgame/equilibrium.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "parallel.h"
#include "qgame/closed_form.h"

namespace qgame {
namespace {

std::vector<double> spaced(double lo, double hi, int steps, bool include_hi) {
  if (steps < 1) {
    throw DomainError("grid step count must be positive, got " +
                      std::to_string(steps));
  }
  std::vector<double> v(steps);
  if (steps == 1) {
    v[0] = lo;
    return v;
  }
  const int divisions = include_hi ? steps - 1 : steps;
  for (int k = 0; k < steps; ++k) v[k] = lo + (hi - lo) * k / divisions;
  if (include_hi) v.back() = hi;
  return v;
}

double gain_for(Player p, const PayoffPair& best, const PayoffPair& here) {
  return p == Player::kAlice ? best.alice - here.alice : best.bob - here.bob;
}

}  // namespace

StrategyGrid::StrategyGrid(std::vector<double> thetas, std::vector<double> phis,
                           PhiRange range)
    : thetas_(std::move(thetas)), phis_(std::move(phis)), range_(range) {
  if (thetas_.empty() || phis_.empty()) {
    throw DomainError("strategy grid needs at least one theta and one phi");
  }
  for (double t : thetas_) StrategyParams(t, 0.0, range_);
  for (double p : phis_) StrategyParams(0.0, p, range_);
}

StrategyGrid StrategyGrid::uniform(int theta_steps, int phi_steps,
                                   PhiRange range) {
  return StrategyGrid(
      spaced(0.0, kPi, theta_steps, true),
      spaced(0.0, phi_upper(range), phi_steps, range == PhiRange::kNarrow),
      range);
}

StrategyGrid StrategyGrid::from_values(std::vector<double> thetas,
                                       std::vector<double> phis,
                                       PhiRange range) {
  return StrategyGrid(std::move(thetas), std::move(phis), range);
}

StrategyParams StrategyGrid::at(std::size_t index) const {
  return StrategyParams(thetas_.at(index / phis_.size()),
                        phis_[index % phis_.size()], range_);
}

PayoffTable::PayoffTable(const GameMatrix& game, const SchemeParams& scheme,
                         const StrategyGrid& grid)
    : points_(grid.size()), cells_(points_ * points_) {
  std::vector<StrategyParams> moves;
  moves.reserve(points_);
  for (std::size_t i = 0; i < points_; ++i) moves.push_back(grid.at(i));
  internal::parallel_for(points_, [&](std::size_t i) {
    for (std::size_t j = 0; j < points_; ++j) {
      cells_[i * points_ + j] = payoffs_oracle(game, scheme, moves[i], moves[j]);
    }
  });
}

BestResponse best_response(const GameMatrix& game, const SchemeParams& scheme,
                           const StrategyParams& opponent, Player responder,
                           const StrategyGrid& grid) {
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const StrategyParams s = grid.at(i);
    values[i] = responder == Player::kAlice
                    ? payoffs_oracle(game, scheme, s, opponent).alice
                    : payoffs_oracle(game, scheme, opponent, s).bob;
  }
  BestResponse br;
  br.max_payoff = *std::max_element(values.begin(), values.end());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (br.max_payoff - values[i] <= kTieTolerance) {
      br.argmax_indices.push_back(i);
      br.argmax.push_back(grid.at(i));
    }
  }
  return br;
}

double epsilon_certificate(const GameMatrix& game, const SchemeParams& scheme,
                           const StrategyGrid& grid, std::size_t alice_index,
                           std::size_t bob_index) {
  const StrategyParams s1 = grid.at(alice_index);
  const StrategyParams s2 = grid.at(bob_index);
  const PayoffPair here = payoffs_oracle(game, scheme, s1, s2);
  double cert = 0.0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const StrategyParams dev = grid.at(k);
    cert = std::max(cert, payoffs_oracle(game, scheme, dev, s2).alice - here.alice);
    cert = std::max(cert, payoffs_oracle(game, scheme, s1, dev).bob - here.bob);
  }
  return cert;
}

std::vector<ProfileResult> epsilon_nash(const PayoffTable& table,
                                        const StrategyGrid& grid, double eps) {
  if (!(eps >= 0.0)) throw DomainError("eps must be non-negative");
  const std::size_t n = table.points();
  constexpr double kLowest = std::numeric_limits<double>::lowest();
  // Best Alice payoff against each Bob column, best Bob payoff against each
  // Alice row.
  std::vector<PayoffPair> best_vs_bob(n, PayoffPair{kLowest, kLowest});
  std::vector<PayoffPair> best_vs_alice(n, PayoffPair{kLowest, kLowest});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const PayoffPair& c = table.at(i, j);
      best_vs_bob[j].alice = std::max(best_vs_bob[j].alice, c.alice);
      best_vs_alice[i].bob = std::max(best_vs_alice[i].bob, c.bob);
    }
  }
  std::vector<ProfileResult> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const PayoffPair& c = table.at(i, j);
      const double cert =
          std::max({0.0, gain_for(Player::kAlice, best_vs_bob[j], c),
                    gain_for(Player::kBob, best_vs_alice[i], c)});
      if (cert > eps) continue;
      ProfileResult r;
      r.alice_index = i;
      r.bob_index = j;
      r.s1 = grid.at(i);
      r.s2 = grid.at(j);
      r.payoffs = c;
      r.eps_cert = cert;
      out.push_back(r);
    }
  }
  return out;
}

std::vector<ProfileResult> epsilon_nash(const GameMatrix& game,
                                        const SchemeParams& scheme,
                                        const StrategyGrid& grid, double eps) {
  return epsilon_nash(PayoffTable(game, scheme, grid), grid, eps);
}

std::vector<SweepRow> sweep(const GameMatrix& game,
                            std::span<const SchemeParams> points,
                            const StrategyGrid& grid, double eps) {
  std::vector<SweepRow> rows;
  rows.reserve(points.size());
  for (const SchemeParams& scheme : points) {
    const PayoffTable table(game, scheme, grid);
    const std::vector<ProfileResult> eq = epsilon_nash(table, grid, eps);
    SweepRow row;
    row.gamma = scheme.gamma();
    row.delta = scheme.delta();
    row.equilibrium_count = eq.size();
    for (const ProfileResult& r : eq) {
      if (!row.best_symmetric) {
        row.best_symmetric = r;
        continue;
      }
      const PayoffPair& b = row.best_symmetric->payoffs;
      const double low = std::min(r.payoffs.alice, r.payoffs.bob);
      const double best_low = std::min(b.alice, b.bob);
      const double sum = r.payoffs.alice + r.payoffs.bob;
      if (low > best_low + kTieTolerance ||
          (low >= best_low - kTieTolerance && sum > b.alice + b.bob + kTieTolerance)) {
        row.best_symmetric = r;
      }
    }
    if (game.bos()) {
      std::vector<double> dev(grid.size(), 0.0);
      internal::parallel_for(grid.size(), [&](std::size_t i) {
        const StrategyParams s1 = grid.at(i);
        for (std::size_t j = 0; j < grid.size(); ++j) {
          const PayoffPair f = payoff_general(game, scheme, s1, grid.at(j));
          const PayoffPair& o = table.at(i, j);
          dev[i] = std::max({dev[i], std::abs(f.alice - o.alice),
                             std::abs(f.bob - o.bob)});
        }
      });
      row.max_formula_deviation = *std::max_element(dev.begin(), dev.end());
    } else {
      row.max_formula_deviation = std::numeric_limits<double>::quiet_NaN();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace qgame
