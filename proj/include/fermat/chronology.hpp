#ifndef FERMAT_CHRONOLOGY_HPP
#define FERMAT_CHRONOLOGY_HPP

#include "fermat/distance.hpp"
#include "fermat/geometry.hpp"
#include "fermat/types.hpp"
#include "fermat/warp.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace fermat {

struct Event {
  Scalar t;
  Index vertex;
};

// Discretized curve t -> c(t).  For orientation Past the parameter is the
// paper's auxiliary variable: the event time is -param and runs downward.
struct CurveSample {
  enum class Orientation { Future, Past };
  Arr params;                   // strictly increasing grid in [a, Omega)
  std::vector<Index> vertices;  // c(t_i), mesh vertices
  Scalar omega_end = kInf;      // Omega
  Orientation orientation = Orientation::Future;

  void validate(const DirectedMesh& mesh) const;
};

// Exact chronology of the warped spacetime: d^+(x0,x1) < int_{t0}^{t1} ds/alpha.
enum class Relation { Chronological, Horismos, None };

Relation chron_relation(const Event& e0, const Event& e1, const WarpProfile& profile,
                        const DistanceTable& table, Scalar tol = 1e-9);
bool chron_related(const Event& e0, const Event& e1, const WarpProfile& profile,
                   const DistanceTable& table, Scalar tol = 1e-9);

enum class CausalClass { Timelike, Lightlike, Causal, Noncausal };

struct SegmentDetail {
  Index segment;
  CausalClass cls;
  Scalar slack;  // dt - F (positive inside the cone)
};

struct CurveClassification {
  CausalClass overall;
  std::vector<SegmentDetail> segments;
};

// Per-segment cone test: F_t (general g) or alpha*F (warped metrics) against
// the event-time increment.  The curve label is the weakest segment label.
CurveClassification classify_curve(const CurveSample& curve, const DirectedMesh& mesh,
                                   const RandersField& field,
                                   const WarpProfile* profile = nullptr, Scalar tol = 1e-9);

struct SandwichReport {
  Scalar min_slack_lower = kInf;  // min of F_t - alpha F
  Scalar min_slack_upper = kInf;  // min of F - F_t
  bool pass = false;
};

// Verifies alpha F^pm <= F_t^pm <= F^pm over mesh edges x time knots.
SandwichReport sandwich_check(const RandersField& field_t, const RandersField& field,
                              const WarpProfile& profile, const DirectedMesh& mesh,
                              const std::vector<Scalar>& time_knots, Scalar tol = 1e-12);

struct ConeBounds {
  bool cl_related;  // sufficient for e0 << e1
  bool op_related;  // necessary for e0 << e1
};

ConeBounds chron_bounds_general(const Event& e0, const Event& e1, const DistanceTable& table,
                                const WarpProfile& profile, Scalar tol = 1e-9);

// 1+1-D metric with omega_t = 0: only the coefficient h_t(dx,dx) matters.
struct Metric1p1 {
  std::function<Scalar(Scalar t, Scalar x)> h_xx;
};

enum class ConeBranch { RightFuture, LeftFuture, RightPast, LeftPast };

// A curve stored as a graph over the space coordinate.
struct PathGraph1D {
  Arr xs;
  Arr ts;
  bool truncated = false;  // integration stopped before x_end

  Scalar t_at(Scalar x) const;  // linear interpolation inside the sample range
};

struct OdeOptions {
  Scalar step = 1e-3;
  Scalar t_bound = 1e6;  // blow-up guard
};

// Integrates the lightlike-graph condition dt/dx = +-sqrt(h_t) with classical
// RK4 from (t0,x0) to x_end along the requested branch.
PathGraph1D lightcone_ode_1d(const Metric1p1& metric, Scalar t0, Scalar x0, ConeBranch branch,
                             Scalar x_end, const OdeOptions& opts = {});

// Resample a graph curve onto a 1-D mesh as a CurveSample parameterized by t,
// one sample per crossed vertex.
CurveSample to_curve_sample(const PathGraph1D& path, const DirectedMesh& mesh,
                            Scalar omega_end = kInf);

// Past-cone boundary heights of the event (t0, x0) over the positions xs,
// traced along the two past null branches.
Arr event_past_heights(const Metric1p1& metric, Scalar t0, Scalar x0, const Arr& xs,
                       const OdeOptions& opts = {});

}  // namespace fermat

#endif
