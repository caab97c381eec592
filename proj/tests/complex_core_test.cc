#include "qgame/complex_core.h"

#include <doctest.h>

#include <cmath>

#include "qgame/scheme.h"
#include "test_support.h"

namespace qgame {
namespace {

const double kRoot2 = std::sqrt(2.0);

TwoQubitState bell_plus_i() {
  TwoQubitState s;
  s[Outcome::kOO] = 1.0 / kRoot2;
  s[Outcome::kTT] = kI / kRoot2;
  return s;
}

TEST_CASE("apply_local identity leaves |OO> alone") {
  const TwoQubitState oo = TwoQubitState::basis(Outcome::kOO);
  CHECK(max_abs_diff(apply_local(Mat2::identity(), Mat2::identity(), oo), oo) == 0.0);
}

TEST_CASE("apply_local with two flips maps |OO> to |TT>") {
  // (-|T>) (x) (-|T>): the signs cancel.
  const TwoQubitState r =
      apply_local(flip_op(), flip_op(), TwoQubitState::basis(Outcome::kOO));
  CHECK(max_abs_diff(r, TwoQubitState::basis(Outcome::kTT)) < 1e-15);
}

TEST_CASE("apply_local phase on Alice's qubit") {
  // R(pi/2) = diag(i, -i): |OO> picks up i, |TT> picks up -i * i = 1.
  TwoQubitState expected;
  expected[Outcome::kOO] = kI / kRoot2;
  expected[Outcome::kTT] = 1.0 / kRoot2;
  const TwoQubitState r = apply_local(rotation_op(kHalfPi), Mat2::identity(), bell_plus_i());
  CHECK(max_abs_diff(r, expected) < 1e-15);
}

TEST_CASE("apply_local index convention: Alice is the high bit") {
  Mat2 x;  // |O> <-> |T>
  x(0, 1) = 1.0;
  x(1, 0) = 1.0;
  const TwoQubitState r =
      apply_local(x, Mat2::identity(), TwoQubitState::basis(Outcome::kOT));
  CHECK(max_abs_diff(r, TwoQubitState::basis(Outcome::kTT)) == 0.0);
}

TEST_CASE("inner_product on basis kets and normalized states") {
  const auto oo = TwoQubitState::basis(Outcome::kOO);
  const auto tt = TwoQubitState::basis(Outcome::kTT);
  CHECK(inner_product(oo, oo) == Complex(1.0));
  CHECK(inner_product(oo, tt) == Complex(0.0));
  CHECK(std::abs(inner_product(bell_plus_i(), bell_plus_i()) - 1.0) < 1e-15);
  // Antilinear in the first slot.
  CHECK(std::abs(inner_product(kI * oo, oo) - (-kI)) < 1e-15);
}

TEST_CASE("is_unitary") {
  CHECK(is_unitary(Mat2::identity(), 1e-9));
  CHECK_FALSE(is_unitary(Complex(2.0) * Mat2::identity(), 1e-9));
  CHECK(is_unitary(strategy_op(StrategyParams(0.7, 1.1)), 1e-9));
  CHECK_FALSE(is_unitary(Mat2{}, 1e-9));
}

TEST_CASE("property: unitary local operators preserve the norm") {
  testing::Rng rng(11);
  for (int k = 0; k < 1000; ++k) {
    const TwoQubitState r =
        apply_local(rng.unitary(), rng.unitary(), rng.normalized_state());
    REQUIRE(std::abs(r.norm_squared() - 1.0) <= 1e-9);
  }
}

TEST_CASE("property: local operators compose factorwise") {
  testing::Rng rng(12);
  for (int k = 0; k < 500; ++k) {
    const Mat2 a = rng.matrix(), b = rng.matrix(), c = rng.matrix(), d = rng.matrix();
    const TwoQubitState s = rng.normalized_state();
    REQUIRE(max_abs_diff(apply_local(a, b, apply_local(c, d, s)),
                         apply_local(a * c, b * d, s)) <= 1e-12);
  }
}

TEST_CASE("property: inner product is conjugate symmetric and linear") {
  testing::Rng rng(13);
  for (int k = 0; k < 500; ++k) {
    const TwoQubitState x = rng.normalized_state(), y = rng.normalized_state(),
                        z = rng.normalized_state();
    const Complex a = rng.complex(), b = rng.complex();
    REQUIRE(std::abs(inner_product(x, y) - std::conj(inner_product(y, x))) <= 1e-12);
    REQUIRE(std::abs(inner_product(x, a * y + b * z) -
                     (a * inner_product(x, y) + b * inner_product(x, z))) <= 1e-12);
  }
}

TEST_CASE("finiteness checks") {
  TwoQubitState s;
  CHECK(s.is_finite());
  s.amp[2] = Complex(std::nan(""), 0.0);
  CHECK_FALSE(s.is_finite());
  Mat2 m = Mat2::identity();
  CHECK(m.is_finite());
  m(1, 0) = Complex(0.0, INFINITY);
  CHECK_FALSE(m.is_finite());
}

}  // namespace
}  // namespace qgame
