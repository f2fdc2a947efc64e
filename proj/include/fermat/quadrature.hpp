#ifndef FERMAT_QUADRATURE_HPP
#define FERMAT_QUADRATURE_HPP

#include "fermat/types.hpp"

#include <functional>

namespace fermat {

using Fn1 = std::function<Scalar(Scalar)>;

struct QuadOptions {
  Scalar abs_tol = 1e-9;
  int max_depth = 40;
};

// Adaptive Simpson with interval bisection and Richardson correction.
Scalar adaptive_simpson(const Fn1& f, Scalar a, Scalar b, const QuadOptions& opts = {});

enum class TailStatus { Converged, Diverged, Indeterminate };

struct ImproperResult {
  Scalar value = 0.0;          // +inf when diverged
  TailStatus status = TailStatus::Indeterminate;
  int doublings = 0;           // windows examined
  Scalar last_increment = 0.0;
};

struct ImproperOptions {
  QuadOptions quad{};
  Scalar first_window = 1.0;
  Scalar tail_tol = 1e-10;      // stop when the geometric tail estimate is below this
  Scalar divergence_ratio = 0.9;  // increments not decaying by this factor count toward divergence
  int divergence_streak = 6;      // consecutive non-decaying doublings to declare divergence
  int max_doublings = 60;
};

// Integral of f over [a, +inf) by doubling windows.  Divergence is declared
// when increments fail to decay geometrically for `divergence_streak`
// consecutive doublings; convergence when the estimated geometric tail drops
// below `tail_tol`.
ImproperResult improper_integral(const Fn1& f, Scalar a, const ImproperOptions& opts = {});

// Integral of f over (-inf, b]; reduces to the forward case via reflection.
ImproperResult improper_integral_lower(const Fn1& f, Scalar b, const ImproperOptions& opts = {});

}  // namespace fermat

#endif
