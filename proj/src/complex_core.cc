#include "qgame/complex_core.h"

#include <algorithm>
#include <cmath>

namespace qgame {
namespace {

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

}  // namespace

Mat2 Mat2::identity() { return diag(1.0, 1.0); }

Mat2 Mat2::diag(Complex d0, Complex d1) {
  Mat2 r;
  r(0, 0) = d0;
  r(1, 1) = d1;
  return r;
}

Mat2 Mat2::adjoint() const {
  Mat2 r;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) r(i, j) = std::conj(m[j][i]);
  }
  return r;
}

bool Mat2::is_finite() const {
  for (const auto& row : m) {
    for (const auto& c : row) {
      if (!finite(c)) return false;
    }
  }
  return true;
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
  }
  return r;
}

Mat2 operator+(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) r(i, j) = a(i, j) + b(i, j);
  }
  return r;
}

Mat2 operator*(Complex scale, const Mat2& a) {
  Mat2 r;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) r(i, j) = scale * a(i, j);
  }
  return r;
}

double max_abs_diff(const Mat2& a, const Mat2& b) {
  double d = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) d = std::max(d, std::abs(a(i, j) - b(i, j)));
  }
  return d;
}

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::kOO: return "OO";
    case Outcome::kOT: return "OT";
    case Outcome::kTO: return "TO";
    case Outcome::kTT: return "TT";
  }
  return "??";
}

TwoQubitState TwoQubitState::basis(Outcome o) {
  TwoQubitState s;
  s[o] = 1.0;
  return s;
}

double TwoQubitState::norm_squared() const {
  double n = 0.0;
  for (const auto& c : amp) n += std::norm(c);
  return n;
}

bool TwoQubitState::is_finite() const {
  return std::all_of(amp.begin(), amp.end(), finite);
}

TwoQubitState operator+(const TwoQubitState& x, const TwoQubitState& y) {
  TwoQubitState r;
  for (int k = 0; k < 4; ++k) r.amp[k] = x.amp[k] + y.amp[k];
  return r;
}

TwoQubitState operator*(Complex scale, const TwoQubitState& x) {
  TwoQubitState r;
  for (int k = 0; k < 4; ++k) r.amp[k] = scale * x.amp[k];
  return r;
}

double max_abs_diff(const TwoQubitState& x, const TwoQubitState& y) {
  double d = 0.0;
  for (int k = 0; k < 4; ++k) d = std::max(d, std::abs(x.amp[k] - y.amp[k]));
  return d;
}

TwoQubitState apply_local(const Mat2& a, const Mat2& b,
                          const TwoQubitState& s) {
  TwoQubitState r;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Complex acc = 0.0;
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) acc += a(i, k) * b(j, l) * s.amp[2 * k + l];
      }
      r.amp[2 * i + j] = acc;
    }
  }
  return r;
}

Complex inner_product(const TwoQubitState& x, const TwoQubitState& y) {
  Complex acc = 0.0;
  for (int k = 0; k < 4; ++k) acc += std::conj(x.amp[k]) * y.amp[k];
  return acc;
}

bool is_unitary(const Mat2& m, double tol) {
  return max_abs_diff(m * m.adjoint(), Mat2::identity()) <= tol;
}

}  // namespace qgame
