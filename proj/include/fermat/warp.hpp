#ifndef FERMAT_WARP_HPP
#define FERMAT_WARP_HPP

#include "fermat/expression.hpp"
#include "fermat/quadrature.hpp"
#include "fermat/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fermat {

// Time factor alpha(t) of the warped metrics.  Supplied either as a closed
// form in the small expression grammar or as samples with linear
// interpolation (constant extension outside the sample range).
class WarpProfile {
 public:
  static WarpProfile constant(Scalar c);
  static WarpProfile parse(const std::string& expr);
  static WarpProfile from_samples(std::vector<Scalar> ts, std::vector<Scalar> values);

  Scalar alpha(Scalar t) const;          // throws InvalidProfileError if alpha <= 0
  Scalar inv_alpha(Scalar t) const { return 1.0 / alpha(t); }
  bool is_unit() const;                  // alpha identically 1 (constant case only)
  const std::string& label() const { return label_; }

 private:
  WarpProfile() = default;
  std::optional<Scalar> const_value_;
  Expr expr_;
  std::vector<Scalar> sample_ts_, sample_vals_;
  std::string label_;
};

// Integral of ds/alpha over [t0, t1]; antisymmetric in the endpoints.
// t1 = +inf (or t0 = -inf) takes the improper limit, +inf when divergent.
Scalar time_integral(const WarpProfile& profile, Scalar t0, Scalar t1,
                     const QuadOptions& opts = {});

// K_Omega = integral of (1/alpha - 1) over [0, Omega], Omega in (-inf, +inf].
Scalar k_omega(const WarpProfile& profile, Scalar omega_end, const QuadOptions& opts = {});

struct ConditionFlags {
  Tri intcond_future = Tri::Indeterminate;  // int_0^inf ds/alpha = inf
  Tri intcond_past = Tri::Indeterminate;    // int_-inf^0 ds/alpha = inf
  Tri e4 = Tri::Indeterminate;              // int_0^inf (1/alpha - 1) < inf
  Tri e4_prime = Tri::Indeterminate;        // int_-inf^0 (1/alpha - 1) < inf
  bool alpha_le_1 = false;                  // sampled
  std::string diagnostic;
};

ConditionFlags check_conditions(const WarpProfile& profile);

// Solves int_t^s dr/alpha = K for s; monotone in both arguments.
Scalar solve_sK(const WarpProfile& profile, Scalar t, Scalar K, Scalar tol = 1e-9);

}  // namespace fermat

#endif
