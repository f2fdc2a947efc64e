#include "fermat/warp.hpp"

#include <algorithm>
#include <cmath>

namespace fermat {

WarpProfile WarpProfile::constant(Scalar c) {
  if (!(c > 0.0)) throw InvalidProfileError("alpha must be positive");
  WarpProfile p;
  p.const_value_ = c;
  p.label_ = "const " + std::to_string(c);
  return p;
}

WarpProfile WarpProfile::parse(const std::string& expr) {
  WarpProfile p;
  p.expr_ = Expr::parse(expr);
  p.label_ = expr;
  p.alpha(0.0);  // probe once so malformed profiles fail early
  return p;
}

WarpProfile WarpProfile::from_samples(std::vector<Scalar> ts, std::vector<Scalar> values) {
  if (ts.size() != values.size() || ts.size() < 2)
    throw InvalidProfileError("profile samples need matching ts/values, at least two");
  if (!std::is_sorted(ts.begin(), ts.end()))
    throw InvalidProfileError("profile sample times must be increasing");
  WarpProfile p;
  p.sample_ts_ = std::move(ts);
  p.sample_vals_ = std::move(values);
  p.label_ = "sampled profile";
  for (Scalar v : p.sample_vals_)
    if (!(v > 0.0)) throw InvalidProfileError("alpha must be positive");
  return p;
}

Scalar WarpProfile::alpha(Scalar t) const {
  Scalar v;
  if (const_value_) {
    v = *const_value_;
  } else if (expr_.valid()) {
    v = expr_.eval1("t", t);
  } else {
    if (t <= sample_ts_.front()) {
      v = sample_vals_.front();
    } else if (t >= sample_ts_.back()) {
      v = sample_vals_.back();
    } else {
      auto it = std::upper_bound(sample_ts_.begin(), sample_ts_.end(), t);
      size_t i = static_cast<size_t>(it - sample_ts_.begin());
      Scalar t0 = sample_ts_[i - 1], t1 = sample_ts_[i];
      Scalar w = (t - t0) / (t1 - t0);
      v = (1.0 - w) * sample_vals_[i - 1] + w * sample_vals_[i];
    }
  }
  if (!(v > 0.0) || !finite(v))
    throw InvalidProfileError("alpha(" + std::to_string(t) + ") = " + std::to_string(v) +
                              " is not positive");
  return v;
}

bool WarpProfile::is_unit() const { return const_value_ && *const_value_ == 1.0; }

Scalar time_integral(const WarpProfile& profile, Scalar t0, Scalar t1, const QuadOptions& opts) {
  if (t0 == t1) return 0.0;
  auto f = [&profile](Scalar s) { return profile.inv_alpha(s); };
  if (t1 == kInf) {
    if (t0 == -kInf) throw InvalidInputError("time_integral over the full line");
    auto r = improper_integral(f, t0, {.quad = opts});
    return r.status == TailStatus::Converged ? r.value : kInf;
  }
  if (t0 == -kInf) {
    auto r = improper_integral_lower(f, t1, {.quad = opts});
    return r.status == TailStatus::Converged ? r.value : kInf;
  }
  if (t0 > t1) return -time_integral(profile, t1, t0, opts);
  return adaptive_simpson(f, t0, t1, opts);
}

Scalar k_omega(const WarpProfile& profile, Scalar omega_end, const QuadOptions& opts) {
  if (profile.is_unit()) return 0.0;
  auto f = [&profile](Scalar s) { return profile.inv_alpha(s) - 1.0; };
  if (omega_end == kInf) {
    auto r = improper_integral(f, 0.0, {.quad = opts});
    return r.status == TailStatus::Converged ? r.value : kInf;
  }
  if (omega_end == -kInf) {
    auto r = improper_integral_lower(f, 0.0, {.quad = opts});
    return r.status == TailStatus::Converged ? -r.value : -kInf;
  }
  return adaptive_simpson(f, 0.0, omega_end, opts);
}

ConditionFlags check_conditions(const WarpProfile& profile) {
  ConditionFlags flags;

  auto status_to_tri_diverges = [](TailStatus s) {
    switch (s) {
      case TailStatus::Diverged: return Tri::True;
      case TailStatus::Converged: return Tri::False;
      default: return Tri::Indeterminate;
    }
  };
  auto status_to_tri_converges = [](TailStatus s) {
    switch (s) {
      case TailStatus::Converged: return Tri::True;
      case TailStatus::Diverged: return Tri::False;
      default: return Tri::Indeterminate;
    }
  };

  auto inv = [&profile](Scalar s) { return profile.inv_alpha(s); };
  auto excess = [&profile](Scalar s) { return profile.inv_alpha(s) - 1.0; };

  flags.intcond_future = status_to_tri_diverges(improper_integral(inv, 0.0).status);
  flags.intcond_past = status_to_tri_diverges(improper_integral_lower(inv, 0.0).status);
  flags.e4 = status_to_tri_converges(improper_integral(excess, 0.0).status);
  flags.e4_prime = status_to_tri_converges(improper_integral_lower(excess, 0.0).status);

  flags.alpha_le_1 = true;
  for (int i = -400; i <= 400; ++i) {
    Scalar t = 0.05 * i;
    if (profile.alpha(t) > 1.0 + 1e-12) {
      flags.alpha_le_1 = false;
      break;
    }
  }

  // (e4) forces intcond on the same side: the excess integral converging
  // means 1/alpha integrates like 1.
  if (flags.e4 == Tri::True && flags.intcond_future == Tri::Indeterminate)
    flags.intcond_future = Tri::True;
  if (flags.e4_prime == Tri::True && flags.intcond_past == Tri::Indeterminate)
    flags.intcond_past = Tri::True;
  if (flags.intcond_future == Tri::Indeterminate || flags.intcond_past == Tri::Indeterminate ||
      flags.e4 == Tri::Indeterminate || flags.e4_prime == Tri::Indeterminate)
    flags.diagnostic = "divergence test hit the iteration budget";
  return flags;
}

Scalar solve_sK(const WarpProfile& profile, Scalar t, Scalar K, Scalar tol) {
  if (K == 0.0) return t;
  auto T = [&](Scalar s) { return time_integral(profile, t, s, {.abs_tol = 0.1 * tol}); };

  // Bracket the root; T is strictly increasing with derivative 1/alpha > 0.
  Scalar lo = t, hi = t;
  Scalar step = 1.0;
  if (K > 0.0) {
    for (int i = 0; i < 80 && T(hi) < K; ++i) {
      hi += step;
      step *= 2.0;
    }
    if (T(hi) < K) throw UnsolvableError("s_K bracket failed; integral condition violated?");
  } else {
    for (int i = 0; i < 80 && T(lo) > K; ++i) {
      lo -= step;
      step *= 2.0;
    }
    if (T(lo) > K) throw UnsolvableError("s_K bracket failed; integral condition violated?");
  }

  // Newton with bisection fallback.
  Scalar s = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    Scalar f = T(s) - K;
    if (std::abs(f) <= tol) return s;
    if (f > 0.0) hi = s;
    else lo = s;
    Scalar ds = -f * profile.alpha(s);
    Scalar cand = s + ds;
    s = (cand > lo && cand < hi) ? cand : 0.5 * (lo + hi);
  }
  throw UnsolvableError("s_K root refinement did not reach tolerance");
}

}  // namespace fermat
