#ifndef QGAME_CLI_H_
#define QGAME_CLI_H_

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>

#include "qgame/scheme.h"

// Command-line front end: `payoff`, `verify`, `sweep`, `equilibria`.
//
// Exit codes: 0 success, 1 invalid input or unwritable output,
// 2 verification failure.

namespace qgame::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitVerifyFailed = 2;

// Radians as a decimal literal, or one of `pi`, `pi/2`, `pi/4`.
double parse_angle(std::string_view token);

// One evaluated strategy profile, in the fixed CSV column order.
struct ProfileRow {
  double gamma = 0.0;
  double delta = 0.0;
  double theta1 = 0.0;
  double phi1 = 0.0;
  double theta2 = 0.0;
  double phi2 = 0.0;
  double payoff_a = 0.0;
  double payoff_b = 0.0;
  std::array<double, 4> p{};  // p_oo, p_ot, p_to, p_tt
};

inline constexpr std::string_view kProfileCsvHeader =
    "gamma,delta,theta1,phi1,theta2,phi2,payoff_a,payoff_b,p_oo,p_ot,p_to,p_tt";

// 15 significant digits per field, no trailing newline.
std::string format_profile_csv(const ProfileRow& row);

// Throws DomainError on a malformed line.
ProfileRow parse_profile_csv(std::string_view line);

// argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qgame::cli

#endif  // QGAME_CLI_H_
