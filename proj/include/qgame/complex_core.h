#ifndef QGAME_COMPLEX_CORE_H_
#define QGAME_COMPLEX_CORE_H_

#include <array>
#include <complex>

// Fixed-size complex linear algebra for one- and two-qubit objects.
//
// Basis order for two-qubit states is |OO>, |OT>, |TO>, |TT> with Alice's
// letter first, so amplitude index = 2 * alice + bob where O = 0 and T = 1.

namespace qgame {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};
inline constexpr double kDefaultTol = 1e-9;

// Single-qubit operator, row-major, rows/columns indexed by |O> = 0, |T> = 1.
struct Mat2 {
  std::array<std::array<Complex, 2>, 2> m{};

  static Mat2 identity();
  static Mat2 diag(Complex d0, Complex d1);

  Complex& operator()(int row, int col) { return m[row][col]; }
  const Complex& operator()(int row, int col) const { return m[row][col]; }

  Mat2 adjoint() const;
  bool is_finite() const;
};

Mat2 operator*(const Mat2& a, const Mat2& b);
Mat2 operator+(const Mat2& a, const Mat2& b);
Mat2 operator*(Complex scale, const Mat2& a);

// Largest absolute entry of a - b.
double max_abs_diff(const Mat2& a, const Mat2& b);

enum class Outcome : int { kOO = 0, kOT = 1, kTO = 2, kTT = 3 };
inline constexpr std::array<Outcome, 4> kOutcomes{Outcome::kOO, Outcome::kOT,
                                                  Outcome::kTO, Outcome::kTT};
const char* outcome_name(Outcome o);

struct TwoQubitState {
  std::array<Complex, 4> amp{};

  static TwoQubitState basis(Outcome o);

  Complex& operator[](Outcome o) { return amp[static_cast<int>(o)]; }
  const Complex& operator[](Outcome o) const {
    return amp[static_cast<int>(o)];
  }

  double norm_squared() const;
  bool is_finite() const;
};

TwoQubitState operator+(const TwoQubitState& x, const TwoQubitState& y);
TwoQubitState operator*(Complex scale, const TwoQubitState& x);

// Largest absolute amplitude difference.
double max_abs_diff(const TwoQubitState& x, const TwoQubitState& y);

// (a (x) b)|s>, with amp'[2i+j] = sum_{k,l} a(i,k) b(j,l) amp[2k+l].
TwoQubitState apply_local(const Mat2& a, const Mat2& b,
                          const TwoQubitState& s);

// <x|y>, antilinear in x.
Complex inner_product(const TwoQubitState& x, const TwoQubitState& y);

// True iff max |(m m^dagger - I)_ij| <= tol.
bool is_unitary(const Mat2& m, double tol = kDefaultTol);

}  // namespace qgame

#endif  // QGAME_COMPLEX_CORE_H_
