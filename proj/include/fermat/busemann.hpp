#ifndef FERMAT_BUSEMANN_HPP
#define FERMAT_BUSEMANN_HPP

#include "fermat/chronology.hpp"
#include "fermat/completion.hpp"
#include "fermat/distance.hpp"
#include "fermat/types.hpp"
#include "fermat/warp.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace fermat {

// Finite ordered vertex subset on which functions on M are sampled; pointwise
// identity on the probes is the equality notion throughout.
struct ProbeSet {
  std::vector<Index> vertices;

  ProbeSet() = default;
  explicit ProbeSet(std::vector<Index> v);
  static ProbeSet all(Index n);
  Index size() const { return static_cast<Index>(vertices.size()); }
};

enum class ProfileTag { Cl, Op, Custom };

// A Busemann-type function evaluated on a probe set.
struct BusemannSample {
  Arr values;
  MetricSign sign = MetricSign::Plus;
  ProfileTag tag = ProfileTag::Cl;
  bool infinite = false;      // constantly +inf (sign +) or -inf (sign -)
  bool converged = true;
  Scalar tail_increment = 0.0;
  std::string note;

  bool finite_sample() const { return !infinite; }
};

struct BusemannOptions {
  Scalar conv_tol = 1e-6;   // tail increment over the final doubling
  Scalar speed_tol = 1e-9;  // causal speed-bound slack
  CompletionOptions completion{};
};

// b(x) = lim ( int_0^t ds/alpha - d^+(x, c(t)) ) along a speed-bounded curve,
// estimated at the last sample with the tail increment reported.
BusemannSample busemann_eval(const CurveSample& curve, const WarpProfile& profile,
                             const DistanceTable& table, const ProbeSet& probes,
                             ProfileTag tag, const BusemannOptions& opts = {});

// Endpoint of a finite-Omega curve: an interior vertex or a declared
// completion class.
struct PointOrClass {
  std::variant<Index, const CompletionClass*> target;
  const std::vector<DeclaredSequence>* sequences = nullptr;  // needed for classes

  static PointOrClass vertex(Index v) { return {v, nullptr}; }
  static PointOrClass boundary(const CompletionClass& cls,
                               const std::vector<DeclaredSequence>& seqs) {
    return {&cls, &seqs};
  }
};

// d^pm_(Omega,x): values = int_0^Omega ds/alpha -+ d_Q^pm(probe, x).
BusemannSample closed_form_point(Scalar omega_end, const PointOrClass& at, MetricSign sign,
                                 const WarpProfile& profile, const DistanceTable& table,
                                 const ProbeSet& probes, ProfileTag tag,
                                 const BusemannOptions& opts = {});

// The R-action b -> b + K.
BusemannSample shift(const BusemannSample& sample, Scalar K);

struct ShiftWithCurve {
  BusemannSample sample;
  CurveSample curve;  // c-bar(s_K(t)) := c(t), speed bound re-checked
};

ShiftWithCurve shift_with_curve(const BusemannSample& sample, const CurveSample& curve,
                                Scalar K, const WarpProfile& profile,
                                const DistanceTable& table,
                                const BusemannOptions& opts = {});

// b_op = b_cl + K_Omega (Prop. on the cl -> op change); when Omega = inf and
// the excess integral diverges the image collapses to the infinite sample.
BusemannSample translate_cl_op(const BusemannSample& cl_sample, Scalar omega_end,
                               const WarpProfile& alpha_profile,
                               const BusemannOptions& opts = {});

// IP/IF represented through its defining function.
struct TerminalSetRep {
  enum class Kind { IP, IF };
  Kind kind = Kind::IP;
  BusemannSample function;
  bool is_terminal = true;
};

struct InclusionReport {
  bool subset = false;
  bool superset = false;
  bool equal = false;
  bool incomparable = false;
  bool strict = false;  // strict inequality at >= 1 probe in the narrower direction
};

// Set inclusion from the pointwise order of the defining functions (reversed
// for IFs).
InclusionReport ip_inclusion(const TerminalSetRep& a, const TerminalSetRep& b,
                             Scalar tol = 1e-9);

enum class LimitKind { Future, Past };

struct LimitOptions {
  Scalar tol = 1e-6;
  int window_divisor = 4;  // liminf/limsup estimated over the last 1/divisor
};

// Finite-family limit operator: returns the indices of candidates f with
// f <= liminf f_n that are maximal among candidates below limsup f_n
// (dual inequalities for Past).
std::vector<size_t> limit_operator(const std::vector<BusemannSample>& candidates,
                                   const std::vector<BusemannSample>& sequence,
                                   LimitKind kind, const LimitOptions& opts = {});

// CSV export (probe id, value) with a JSON metadata header line.
std::string sample_to_csv(const BusemannSample& sample, const ProbeSet& probes,
                          const std::string& name);

}  // namespace fermat

#endif
