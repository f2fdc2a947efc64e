#include "fermat/quadrature.hpp"

#include <cmath>

namespace fermat {

namespace {

Scalar simpson(Scalar h, Scalar fa, Scalar fm, Scalar fb) {
  return (fa + 4.0 * fm + fb) * (h / 6.0);
}

Scalar simpson_rec(const Fn1& f, Scalar a, Scalar m, Scalar b, Scalar fa, Scalar fm,
                   Scalar fb, Scalar whole, Scalar tol, int depth, int max_depth) {
  const Scalar lm = 0.5 * (a + m);
  const Scalar rm = 0.5 * (m + b);
  const Scalar flm = f(lm);
  const Scalar frm = f(rm);
  const Scalar left = simpson(m - a, fa, flm, fm);
  const Scalar right = simpson(b - m, fm, frm, fb);
  const Scalar err = (left + right - whole) / 15.0;
  if (depth >= max_depth || std::abs(err) <= tol) return left + right + err;
  return simpson_rec(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth + 1, max_depth) +
         simpson_rec(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace

Scalar adaptive_simpson(const Fn1& f, Scalar a, Scalar b, const QuadOptions& opts) {
  if (a == b) return 0.0;
  if (b < a) return -adaptive_simpson(f, b, a, opts);
  const Scalar m = 0.5 * (a + b);
  const Scalar fa = f(a), fm = f(m), fb = f(b);
  if (!finite(fa) || !finite(fm) || !finite(fb))
    throw InvalidProfileError("non-finite integrand value on [" + std::to_string(a) +
                              ", " + std::to_string(b) + "]");
  const Scalar whole = simpson(b - a, fa, fm, fb);
  return simpson_rec(f, a, m, b, fa, fm, fb, whole, opts.abs_tol, 0, opts.max_depth);
}

ImproperResult improper_integral(const Fn1& f, Scalar a, const ImproperOptions& opts) {
  ImproperResult res;
  Scalar lo = a;
  Scalar width = opts.first_window;
  Scalar total = 0.0;
  Scalar prev_inc = -1.0;
  int streak = 0;
  for (int k = 0; k < opts.max_doublings; ++k) {
    const Scalar hi = lo + width;
    const Scalar inc = adaptive_simpson(f, lo, hi, opts.quad);
    total += inc;
    res.doublings = k + 1;
    res.last_increment = inc;

    const Scalar mag = std::abs(inc);
    if (prev_inc >= 0.0) {
      const Scalar prev_mag = prev_inc;
      if (mag >= opts.divergence_ratio * prev_mag && mag > opts.tail_tol) {
        if (++streak >= opts.divergence_streak) {
          res.value = total >= 0 ? kInf : -kInf;
          res.status = TailStatus::Diverged;
          return res;
        }
      } else {
        streak = 0;
      }
      // Geometric tail bound: if increments decay by ratio r, the remainder
      // is below mag * r / (1 - r).
      if (prev_mag > 0.0) {
        const Scalar r = mag / prev_mag;
        if (r < 0.75) {
          const Scalar tail = mag * r / (1.0 - r);
          if (tail < opts.tail_tol) {
            res.value = total;
            res.status = TailStatus::Converged;
            return res;
          }
        }
      }
    }
    if (mag <= opts.tail_tol && k >= 2) {
      res.value = total;
      res.status = TailStatus::Converged;
      return res;
    }
    prev_inc = mag;
    lo = hi;
    width *= 2.0;
  }
  res.value = total;
  res.status = TailStatus::Indeterminate;
  return res;
}

ImproperResult improper_integral_lower(const Fn1& f, Scalar b, const ImproperOptions& opts) {
  return improper_integral([&f, b](Scalar u) { return f(b - u); }, 0.0, opts);
}

}  // namespace fermat
