#include "qgame/cli.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <vector>

#include "parallel.h"
#include "qgame/closed_form.h"
#include "qgame/equilibrium.h"
#include "qgame/verify.h"

namespace qgame::cli {
namespace {

using nlohmann::json;

std::string num(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

double parse_number(std::string_view token, const char* what) {
  double v = 0.0;
  const char* first = token.data();
  const char* last = first + token.size();
  if (!token.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v)) {
    throw DomainError(std::string("cannot parse ") + what + " '" +
                      std::string(token) + "'");
  }
  return v;
}

enum class Format { kText, kCsv, kJson };

struct RunConfig {
  std::vector<double> bos;
  std::vector<double> matrix;
  std::string gamma = "0";
  std::string delta = "0";
  std::vector<std::string> gammas;
  std::vector<std::string> deltas;
  bool diagonal = false;
  std::vector<std::string> s1{"0", "0"};
  std::vector<std::string> s2{"0", "0"};
  std::vector<int> grid{33, 17};
  double eps = 1e-9;
  std::uint64_t seed = 0;
  std::string format;
  std::string out_path;
  std::string phi_range = "narrow";
  bool summary = false;
};

// Everything validated and converted out of RunConfig.
struct Resolved {
  GameMatrix game = GameMatrix::battle_of_sexes(2, 1, 0);
  PhiRange range = PhiRange::kNarrow;
  std::vector<SchemeParams> points;
  Format format = Format::kText;
};

GameMatrix resolve_game(const RunConfig& c) {
  if (!c.bos.empty() && !c.matrix.empty()) {
    throw DomainError("--bos and --matrix are mutually exclusive");
  }
  if (!c.matrix.empty()) {
    const auto& m = c.matrix;
    return GameMatrix::bimatrix({{{m[0], m[2]}, {m[4], m[6]}}},
                                {{{m[1], m[3]}, {m[5], m[7]}}});
  }
  if (!c.bos.empty()) return GameMatrix::battle_of_sexes(c.bos[0], c.bos[1], c.bos[2]);
  return GameMatrix::battle_of_sexes(2, 1, 0);
}

StrategyParams resolve_strategy(const std::vector<std::string>& v, PhiRange r) {
  return StrategyParams(parse_angle(v[0]), parse_angle(v[1]), r);
}

Resolved resolve(const RunConfig& c, Format default_format) {
  Resolved r;
  r.game = resolve_game(c);
  if (c.phi_range == "narrow") {
    r.range = PhiRange::kNarrow;
  } else if (c.phi_range == "full") {
    r.range = PhiRange::kFull;
  } else {
    throw DomainError("--phi-range must be narrow or full");
  }
  if (c.format.empty()) {
    r.format = default_format;
  } else if (c.format == "csv") {
    r.format = Format::kCsv;
  } else if (c.format == "json") {
    r.format = Format::kJson;
  } else if (c.format == "text") {
    r.format = Format::kText;
  } else {
    throw DomainError("--format must be csv, json or text");
  }
  if (!(c.eps >= 0.0)) throw DomainError("--eps must be non-negative");

  std::vector<double> gammas, deltas;
  for (const auto& g : c.gammas.empty() ? std::vector{c.gamma} : c.gammas) {
    gammas.push_back(parse_angle(g));
  }
  for (const auto& d : c.deltas.empty() ? std::vector{c.delta} : c.deltas) {
    deltas.push_back(parse_angle(d));
  }
  for (double g : gammas) {
    if (c.diagonal) {
      r.points.emplace_back(g, g);
      continue;
    }
    for (double d : deltas) r.points.emplace_back(g, d);
  }
  return r;
}

ProfileRow make_row(const SchemeParams& sc, const StrategyParams& s1,
                    const StrategyParams& s2, const OracleResult& o) {
  ProfileRow row;
  row.gamma = sc.gamma();
  row.delta = sc.delta();
  row.theta1 = s1.theta();
  row.phi1 = s1.phi();
  row.theta2 = s2.theta();
  row.phi2 = s2.phi();
  row.payoff_a = o.payoffs.alice;
  row.payoff_b = o.payoffs.bob;
  row.p = o.probabilities;
  return row;
}

json row_json(const ProfileRow& r) {
  return {{"gamma", r.gamma},       {"delta", r.delta},
          {"theta1", r.theta1},     {"phi1", r.phi1},
          {"theta2", r.theta2},     {"phi2", r.phi2},
          {"payoff_a", r.payoff_a}, {"payoff_b", r.payoff_b},
          {"p_oo", r.p[0]},         {"p_ot", r.p[1]},
          {"p_to", r.p[2]},         {"p_tt", r.p[3]}};
}

void cmd_payoff(const RunConfig& c, std::ostream& out) {
  const Resolved r = resolve(c, Format::kText);
  const SchemeParams& sc = r.points.front();
  const StrategyParams s1 = resolve_strategy(c.s1, r.range);
  const StrategyParams s2 = resolve_strategy(c.s2, r.range);
  const OracleResult o = evaluate_oracle(r.game, sc, s1, s2);
  std::optional<PayoffPair> closed;
  if (r.game.bos()) closed = payoff_general(r.game, sc, s1, s2);
  const ProfileRow row = make_row(sc, s1, s2, o);

  switch (r.format) {
    case Format::kCsv:
      out << kProfileCsvHeader << "\n" << format_profile_csv(row) << "\n";
      return;
    case Format::kJson: {
      json j = row_json(row);
      if (closed) {
        j["closed_form_a"] = closed->alice;
        j["closed_form_b"] = closed->bob;
        j["abs_diff_a"] = std::abs(closed->alice - o.payoffs.alice);
        j["abs_diff_b"] = std::abs(closed->bob - o.payoffs.bob);
      }
      out << j.dump(2) << "\n";
      return;
    }
    case Format::kText:
      break;
  }
  out << "scheme: gamma=" << num(sc.gamma()) << " delta=" << num(sc.delta()) << "\n"
      << "s1: theta=" << num(s1.theta()) << " phi=" << num(s1.phi()) << "\n"
      << "s2: theta=" << num(s2.theta()) << " phi=" << num(s2.phi()) << "\n"
      << "probabilities: p_oo=" << num(o.probabilities[0])
      << " p_ot=" << num(o.probabilities[1]) << " p_to=" << num(o.probabilities[2])
      << " p_tt=" << num(o.probabilities[3]) << "\n"
      << "oracle: alice=" << num(o.payoffs.alice) << " bob=" << num(o.payoffs.bob) << "\n";
  if (closed) {
    out << "closed_form: alice=" << num(closed->alice) << " bob=" << num(closed->bob) << "\n"
        << "abs_diff: alice=" << num(std::abs(closed->alice - o.payoffs.alice))
        << " bob=" << num(std::abs(closed->bob - o.payoffs.bob)) << "\n";
  } else {
    out << "closed_form: n/a (not a Battle of the Sexes matrix)\n";
  }
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  const VerificationReport report = run_verification(c.seed);
  out << format_report(report);
  return report.all_required_passed() ? kExitOk : kExitVerifyFailed;
}

StrategyGrid resolve_grid(const RunConfig& c, PhiRange range) {
  return StrategyGrid::uniform(c.grid[0], c.grid[1], range);
}

void cmd_sweep(const RunConfig& c, std::ostream& out) {
  const Resolved r = resolve(c, Format::kCsv);
  const StrategyGrid grid = resolve_grid(c, r.range);
  if (r.format == Format::kText) throw DomainError("sweep writes csv or json");

  if (c.summary) {
    const std::vector<SweepRow> rows = sweep(r.game, r.points, grid, c.eps);
    json arr = json::array();
    if (r.format == Format::kCsv) {
      out << "gamma,delta,equilibria,best_theta1,best_phi1,best_theta2,best_phi2,"
             "best_payoff_a,best_payoff_b,max_formula_dev\n";
    }
    for (const SweepRow& s : rows) {
      std::vector<double> best(6, std::nan(""));
      if (s.best_symmetric) {
        const ProfileResult& b = *s.best_symmetric;
        best = {b.s1.theta(), b.s1.phi(), b.s2.theta(), b.s2.phi(),
                b.payoffs.alice, b.payoffs.bob};
      }
      if (r.format == Format::kCsv) {
        out << num(s.gamma) << "," << num(s.delta) << "," << s.equilibrium_count;
        for (double v : best) out << "," << num(v);
        out << "," << num(s.max_formula_deviation) << "\n";
      } else {
        json j = {{"gamma", s.gamma}, {"delta", s.delta},
                  {"equilibria", s.equilibrium_count}};
        const char* keys[] = {"best_theta1", "best_phi1", "best_theta2",
                              "best_phi2", "best_payoff_a", "best_payoff_b"};
        for (int k = 0; k < 6; ++k) {
          j[keys[k]] = std::isnan(best[k]) ? json(nullptr) : json(best[k]);
        }
        j["max_formula_dev"] = std::isnan(s.max_formula_deviation)
                                   ? json(nullptr)
                                   : json(s.max_formula_deviation);
        arr.push_back(j);
      }
    }
    if (r.format == Format::kJson) out << arr.dump(2) << "\n";
    return;
  }

  const std::size_t n = grid.size();
  json arr = json::array();
  if (r.format == Format::kCsv) out << kProfileCsvHeader << "\n";
  for (const SchemeParams& sc : r.points) {
    std::vector<ProfileRow> rows(n * n);
    internal::parallel_for(n, [&](std::size_t i) {
      const StrategyParams s1 = grid.at(i);
      for (std::size_t j = 0; j < n; ++j) {
        const StrategyParams s2 = grid.at(j);
        rows[i * n + j] = make_row(sc, s1, s2, evaluate_oracle(r.game, sc, s1, s2));
      }
    });
    for (const ProfileRow& row : rows) {
      if (r.format == Format::kCsv) {
        out << format_profile_csv(row) << "\n";
      } else {
        arr.push_back(row_json(row));
      }
    }
  }
  if (r.format == Format::kJson) out << arr.dump(2) << "\n";
}

void cmd_equilibria(const RunConfig& c, std::ostream& out) {
  const Resolved r = resolve(c, Format::kText);
  const StrategyGrid grid = resolve_grid(c, r.range);
  json arr = json::array();
  if (r.format == Format::kCsv) {
    out << "gamma,delta,theta1,phi1,theta2,phi2,payoff_a,payoff_b,eps_cert\n";
  }
  for (const SchemeParams& sc : r.points) {
    const std::vector<ProfileResult> eq = epsilon_nash(r.game, sc, grid, c.eps);
    if (r.format == Format::kText) {
      out << "gamma=" << num(sc.gamma()) << " delta=" << num(sc.delta())
          << " grid=" << grid.thetas().size() << "x" << grid.phis().size()
          << " eps=" << num(c.eps) << " equilibria=" << eq.size() << "\n";
    }
    for (const ProfileResult& e : eq) {
      switch (r.format) {
        case Format::kText:
          out << "  s1=(" << num(e.s1.theta()) << ", " << num(e.s1.phi()) << ") s2=("
              << num(e.s2.theta()) << ", " << num(e.s2.phi())
              << ") payoff_a=" << num(e.payoffs.alice)
              << " payoff_b=" << num(e.payoffs.bob) << " eps_cert=" << num(e.eps_cert)
              << "\n";
          break;
        case Format::kCsv:
          out << num(sc.gamma()) << "," << num(sc.delta()) << "," << num(e.s1.theta())
              << "," << num(e.s1.phi()) << "," << num(e.s2.theta()) << ","
              << num(e.s2.phi()) << "," << num(e.payoffs.alice) << ","
              << num(e.payoffs.bob) << "," << num(e.eps_cert) << "\n";
          break;
        case Format::kJson:
          arr.push_back({{"gamma", sc.gamma()},
                         {"delta", sc.delta()},
                         {"theta1", e.s1.theta()},
                         {"phi1", e.s1.phi()},
                         {"theta2", e.s2.theta()},
                         {"phi2", e.s2.phi()},
                         {"payoff_a", e.payoffs.alice},
                         {"payoff_b", e.payoffs.bob},
                         {"eps_cert", e.eps_cert}});
          break;
      }
    }
  }
  if (r.format == Format::kJson) out << arr.dump(2) << "\n";
}

}  // namespace

double parse_angle(std::string_view token) {
  if (token == "pi") return kPi;
  if (token == "pi/2") return kHalfPi;
  if (token == "pi/4") return kPi / 4.0;
  return parse_number(token, "angle");
}

std::string format_profile_csv(const ProfileRow& r) {
  std::string s;
  for (double v : {r.gamma, r.delta, r.theta1, r.phi1, r.theta2, r.phi2,
                   r.payoff_a, r.payoff_b, r.p[0], r.p[1], r.p[2], r.p[3]}) {
    if (!s.empty()) s += ',';
    s += num(v);
  }
  return s;
}

ProfileRow parse_profile_csv(std::string_view line) {
  std::vector<double> v;
  while (true) {
    const std::size_t comma = line.find(',');
    v.push_back(parse_number(line.substr(0, comma), "csv field"));
    if (comma == std::string_view::npos) break;
    line.remove_prefix(comma + 1);
  }
  if (v.size() != 12) {
    throw DomainError("profile row needs 12 fields, got " + std::to_string(v.size()));
  }
  ProfileRow r;
  r.gamma = v[0];
  r.delta = v[1];
  r.theta1 = v[2];
  r.phi1 = v[3];
  r.theta2 = v[4];
  r.phi2 = v[5];
  r.payoff_a = v[6];
  r.payoff_b = v[7];
  r.p = {v[8], v[9], v[10], v[11]};
  return r;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized two-qubit quantization of 2x2 bimatrix games"};
  app.set_config("--config", "", "flat key = value file; flags override it");
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig c;
  app.add_option("--bos", c.bos, "Battle of the Sexes payoffs A,B,S (A > B > S)")
      ->delimiter(',')
      ->expected(3);
  app.add_option("--matrix", c.matrix, "bimatrix a_oo,b_oo,a_ot,b_ot,a_to,b_to,a_tt,b_tt")
      ->delimiter(',')
      ->expected(8);
  app.add_option("--gamma", c.gamma, "initial-state entanglement in [0, pi/2]");
  app.add_option("--delta", c.delta, "measurement-basis entanglement in [0, pi/2]");
  app.add_option("--gammas", c.gammas, "comma list of gamma values (sweep)")->delimiter(',');
  app.add_option("--deltas", c.deltas, "comma list of delta values (sweep)")->delimiter(',');
  app.add_flag("--diagonal", c.diagonal, "pair each gamma with delta = gamma");
  app.add_option("--s1", c.s1, "Alice's strategy theta,phi")->delimiter(',')->expected(2);
  app.add_option("--s2", c.s2, "Bob's strategy theta,phi")->delimiter(',')->expected(2);
  app.add_option("--grid", c.grid, "theta and phi steps per player T,P")
      ->delimiter(',')
      ->expected(2);
  app.add_option("--eps", c.eps, "epsilon-Nash tolerance");
  app.add_option("--seed", c.seed, "seed for verification draws");
  app.add_option("--format", c.format, "csv, json or text");
  app.add_option("--out", c.out_path, "write output to PATH instead of stdout");
  app.add_option("--phi-range", c.phi_range, "narrow [0, pi/2] or full [0, 2 pi)");
  app.add_flag("--summary", c.summary, "sweep: one summary row per (gamma, delta)");

  auto* payoff = app.add_subcommand("payoff", "payoffs of one strategy profile");
  auto* verify = app.add_subcommand("verify", "closed forms versus state simulation");
  auto* sweep_cmd = app.add_subcommand("sweep", "tabulate payoffs over a grid");
  auto* equilibria = app.add_subcommand("equilibria", "epsilon-Nash profiles on a grid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  std::ofstream file;
  std::ostringstream buffer;
  try {
    int code = kExitOk;
    if (*payoff) cmd_payoff(c, buffer);
    if (*verify) code = cmd_verify(c, buffer);
    if (*sweep_cmd) cmd_sweep(c, buffer);
    if (*equilibria) cmd_equilibria(c, buffer);
    if (c.out_path.empty()) {
      out << buffer.str();
    } else {
      file.open(c.out_path);
      if (!file || !(file << buffer.str()) || !file.flush()) {
        err << "error: cannot write " << c.out_path << "\n";
        return kExitInvalid;
      }
    }
    return code;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}

}  // namespace qgame::cli
