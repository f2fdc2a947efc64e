#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fermat/expression.hpp"
#include "fermat/quadrature.hpp"
#include "fermat/warp.hpp"

#include <cmath>
#include <random>

using namespace fermat;

namespace {
const WarpProfile kUnit = WarpProfile::constant(1.0);
// The worked warp factor: alpha(t) = 1/(e^{-t}+1).
const WarpProfile kSigmoid = WarpProfile::parse("1/(exp(-t)+1)");
}  // namespace

TEST_CASE("expression grammar evaluates the supported operations") {
  CHECK(Expr::parse("2+3*4").eval({}) == doctest::Approx(14.0));
  CHECK(Expr::parse("(2+3)*4").eval({}) == doctest::Approx(20.0));
  CHECK(Expr::parse("-t+1").eval1("t", 0.25) == doctest::Approx(0.75));
  CHECK(Expr::parse("exp(-t)").eval1("t", 1.0) == doctest::Approx(std::exp(-1.0)));
  CHECK(Expr::parse("pow(t, 3/2)").eval1("t", 4.0) == doctest::Approx(8.0));
  CHECK(Expr::parse("sqrt(t)").eval1("t", 9.0) == doctest::Approx(3.0));
  CHECK(Expr::parse("t^2/(1+t)").eval1("t", 2.0) == doctest::Approx(4.0 / 3.0));
  CHECK_THROWS_AS(Expr::parse("exp("), ParseError);
  CHECK_THROWS_AS(Expr::parse("2 +"), ParseError);
  CHECK_THROWS_AS(Expr::parse("t $ 2"), ParseError);
  CHECK_THROWS_AS(Expr::parse("x").eval1("t", 1.0), ParseError);
}

TEST_CASE("adaptive Simpson reaches the requested tolerance") {
  auto f = [](Scalar x) { return std::exp(-x) * std::sin(3.0 * x); };
  // antiderivative: -e^{-x}(sin 3x + 3 cos 3x)/10
  auto F = [](Scalar x) { return -std::exp(-x) * (std::sin(3 * x) + 3 * std::cos(3 * x)) / 10.0; };
  const Scalar exact = F(2.0) - F(0.0);
  CHECK(adaptive_simpson(f, 0.0, 2.0) == doctest::Approx(exact).epsilon(1e-10));
  CHECK(adaptive_simpson(f, 2.0, 0.0) == doctest::Approx(-exact).epsilon(1e-10));
  CHECK(adaptive_simpson(f, 1.0, 1.0) == 0.0);
}

TEST_CASE("improper integrals converge and diverge as expected") {
  auto decay = [](Scalar t) { return std::exp(-t); };
  auto res = improper_integral(decay, 0.0);
  CHECK(res.status == TailStatus::Converged);
  CHECK(res.value == doctest::Approx(1.0).epsilon(1e-8));

  auto harmonic = [](Scalar t) { return 1.0 / (1.0 + t); };
  CHECK(improper_integral(harmonic, 0.0).status == TailStatus::Diverged);

  auto constant = [](Scalar) { return 0.3; };
  CHECK(improper_integral(constant, 0.0).status == TailStatus::Diverged);

  auto quadratic = [](Scalar t) { return 1.0 / ((1.0 + t) * (1.0 + t)); };
  auto q = improper_integral(quadratic, 0.0);
  CHECK(q.status == TailStatus::Converged);
  CHECK(q.value == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("time_integral closed forms") {
  CHECK(time_integral(kUnit, 0.0, 5.0) == doctest::Approx(5.0));
  // 1/alpha = 1 + e^{-t}: antiderivative t + 1 - e^{-t} from 0.
  CHECK(time_integral(kSigmoid, 0.0, 1.0) ==
        doctest::Approx(1.0 + 1.0 - std::exp(-1.0)).epsilon(1e-10));
  CHECK(time_integral(kSigmoid, 0.0, kInf) == kInf);  // 1/alpha >= 1
  CHECK(time_integral(kSigmoid, 1.0, 0.0) ==
        doctest::Approx(-(2.0 - std::exp(-1.0))).epsilon(1e-10));
}

TEST_CASE("k_omega closed forms for the worked profile") {
  CHECK(k_omega(kUnit, 7.0) == 0.0);
  CHECK(k_omega(kUnit, kInf) == 0.0);
  CHECK(k_omega(kSigmoid, 1.0) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-10));
  CHECK(k_omega(kSigmoid, kInf) == doctest::Approx(1.0).epsilon(1e-8));
  // K_Omega = time_integral(0, Omega) - Omega for finite Omega.
  for (Scalar omega : {0.5, 2.0, 9.0})
    CHECK(k_omega(kSigmoid, omega) ==
          doctest::Approx(time_integral(kSigmoid, 0.0, omega) - omega).epsilon(2e-9));
  // Monotone in Omega.
  Scalar prev = -1.0;
  for (Scalar omega : {0.25, 0.5, 1.0, 4.0, 16.0}) {
    Scalar k = k_omega(kSigmoid, omega);
    CHECK(k >= prev);
    prev = k;
  }
}

TEST_CASE("condition flags across profiles") {
  auto unit_flags = check_conditions(kUnit);
  CHECK(unit_flags.intcond_future == Tri::True);
  CHECK(unit_flags.intcond_past == Tri::True);
  CHECK(unit_flags.e4 == Tri::True);
  CHECK(unit_flags.e4_prime == Tri::True);
  CHECK(unit_flags.alpha_le_1);

  // 1/alpha - 1 = e^{-t}: integrable toward +inf, divergent toward -inf.
  auto sig = check_conditions(kSigmoid);
  CHECK(sig.e4 == Tri::True);
  CHECK(sig.e4_prime == Tri::False);
  CHECK(sig.intcond_future == Tri::True);
  CHECK(sig.intcond_past == Tri::True);
  CHECK(sig.alpha_le_1);

  // alpha = 1/(1+t^2): 1/alpha - 1 = t^2 diverges.
  auto poly = check_conditions(WarpProfile::parse("1/(1+t*t)"));
  CHECK(poly.e4 == Tri::False);
  CHECK(poly.intcond_future == Tri::True);

  auto constant = check_conditions(WarpProfile::constant(0.70710678118654752440));
  CHECK(constant.e4 == Tri::False);
  CHECK(constant.e4_prime == Tri::False);
  CHECK(constant.intcond_future == Tri::True);
  CHECK(constant.alpha_le_1);
}

TEST_CASE("solve_sK inverts the time integral") {
  CHECK(solve_sK(kUnit, 2.0, 3.0) == doctest::Approx(5.0));
  CHECK(solve_sK(kUnit, 2.0, -3.0) == doctest::Approx(-1.0));
  CHECK(solve_sK(kSigmoid, 0.0, 0.0) == 0.0);
  // time_integral(0, 1) = 2 - e^{-1}; inverting lands on s = 1.
  CHECK(solve_sK(kSigmoid, 0.0, 2.0 - std::exp(-1.0)) == doctest::Approx(1.0).epsilon(1e-8));

  std::mt19937 rng(7);
  std::uniform_real_distribution<Scalar> ts(-3.0, 3.0), ks(-4.0, 4.0);
  for (int i = 0; i < 50; ++i) {
    const Scalar t = ts(rng), K = ks(rng);
    const Scalar s = solve_sK(kSigmoid, t, K);
    CHECK(std::abs(time_integral(kSigmoid, t, s) - K) <= 1e-8);
    // Monotone in K.
    CHECK(solve_sK(kSigmoid, t, K + 0.5) > s);
  }
}

TEST_CASE("time integral additivity") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<Scalar> ts(-5.0, 5.0);
  for (int i = 0; i < 30; ++i) {
    Scalar a = ts(rng), b = ts(rng), c = ts(rng);
    const Scalar lhs = time_integral(kSigmoid, a, b) + time_integral(kSigmoid, b, c);
    CHECK(lhs == doctest::Approx(time_integral(kSigmoid, a, c)).epsilon(2e-9));
  }
}

TEST_CASE("invalid profiles are rejected") {
  CHECK_THROWS_AS(WarpProfile::constant(0.0), InvalidProfileError);
  CHECK_THROWS_AS(WarpProfile::constant(-1.0), InvalidProfileError);
  CHECK_THROWS_AS(WarpProfile::parse("t"), InvalidProfileError);  // alpha(0) = 0
  CHECK_THROWS_AS(WarpProfile::from_samples({0.0, 1.0}, {1.0, -1.0}), InvalidProfileError);
  // Negative alpha inside a quadrature window.
  auto bad = WarpProfile::parse("1-t");
  CHECK_THROWS_AS(time_integral(bad, 0.0, 2.0), InvalidProfileError);
}

TEST_CASE("sampled profiles interpolate linearly") {
  auto p = WarpProfile::from_samples({0.0, 1.0, 2.0}, {1.0, 0.5, 1.0});
  CHECK(p.alpha(0.5) == doctest::Approx(0.75));
  CHECK(p.alpha(-3.0) == doctest::Approx(1.0));  // constant extension
  CHECK(p.alpha(9.0) == doctest::Approx(1.0));
  CHECK(time_integral(p, 0.0, 2.0) > 2.0);  // 1/alpha >= 1 on the dip
}
