#ifndef FERMAT_BOUNDARY_HPP
#define FERMAT_BOUNDARY_HPP

#include "fermat/busemann.hpp"
#include "fermat/chronology.hpp"
#include "fermat/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fermat {

// An (IP-rep, IF-rep) pair; at most one component may be absent.
struct BoundaryPair {
  std::optional<TerminalSetRep> P;
  std::optional<TerminalSetRep> F;
  bool s_related = false;
  std::optional<Scalar> origin_omega;
  std::string origin_label;

  void validate() const;
};

// S-related pair over a point of R x (M u symmetrized boundary):
// (P(d^+_(Omega,x)), F(d^-_(Omega,x))).  Classes without the symmetrized flag
// are rejected (evenly-pairing caveat: reported, not resolved).
BoundaryPair pair_from_symmetrized_point(Scalar omega_end, const PointOrClass& at,
                                         const WarpProfile& profile, const DistanceTable& table,
                                         const ProbeSet& probes, ProfileTag tag,
                                         const BusemannOptions& opts = {});

struct Line {
  enum class CausalType { Timelike, Horismotic };
  BoundaryPair base;
  std::vector<Scalar> k_grid;
  std::vector<BoundaryPair> samples;
  CausalType causal_type = CausalType::Timelike;
};

// The R-orbit of a pair sampled on a finite K grid; both components shift
// together.  Timelike iff both components are present.
Line make_line(const BoundaryPair& pair, const std::vector<Scalar>& k_grid,
               const WarpProfile& profile);

// P_cl -> I^-_op(P_cl) through the defining function; collapses to the
// infinite sample when Omega = inf and (e4) fails.
TerminalSetRep jhat_op(const TerminalSetRep& p_cl, Scalar omega_end,
                       const WarpProfile& alpha_profile);

// Constructive content of the canonical cl/op projection of a g-causal
// curve: time changes t_cl <= s <= t_op with vanishing final gap, the k
// integrals, the canonical cl TIP and the shared op past.
struct CanonicalProjection {
  TerminalSetRep p_cl;   // cl-tagged rep (IP for future curves, IF for past)
  BusemannSample shared_op;
  Scalar k_cl = 0.0;
  Scalar k_op = 0.0;
  Arr s;      // curve parameter samples
  Arr t_cl;   // reparameterized cl time at each sample
  Arr t_op;
};

CanonicalProjection canonical_projection(const CurveSample& gamma, const RandersField& field_t,
                                         const RandersField& field,
                                         const WarpProfile& alpha_profile,
                                         const DistanceTable& table, const DirectedMesh& mesh,
                                         const ProbeSet& probes,
                                         const BusemannOptions& opts = {});

// A TIP of the sandwiched metric g, known through its op past, its canonical
// projection, and (in 1+1-D) the generating lightlike/timelike graph.
struct GTip {
  std::string label;
  TerminalSetRep g_rep;  // region rep: values = boundary height over probes
  BusemannSample op_values;
  CanonicalProjection canon;
  std::optional<PathGraph1D> graph;
};

// st-relation: equal op pasts through one common canonical cl TIP contained
// in both members.
bool st_related(const GTip& a, const GTip& b, Scalar tol = 1e-6);

struct StrainClass {
  std::vector<size_t> members;
  TerminalSetRep canonical_cl;
  BusemannSample shared_op;
};

std::vector<StrainClass> strain_classes(const std::vector<GTip>& tips, Scalar tol = 1e-6);

// Canonical data for the components of a g pair, for total-strain tests.
struct PairStrainContext {
  const CanonicalProjection* p_canon = nullptr;
  const CanonicalProjection* f_canon = nullptr;
};

// Four-clause membership of the total strain ST((P_cl, F_cl)).
bool total_strain_member(const BoundaryPair& pair_g, const BoundaryPair& pair_cl,
                         const PairStrainContext& ctx, Scalar tol = 1e-6);

// Event membership in a represented terminal set, at the rep's time scale.
bool event_in_rep(Scalar t, Index probe_slot, const TerminalSetRep& rep,
                  const WarpProfile& alpha_profile, Scalar tol = 1e-9);

struct ColumnClassification {
  Line::CausalType type = Line::CausalType::Horismotic;
  bool conclusive = false;
  std::optional<std::pair<Scalar, Index>> witness;  // (t, probe slot) with F1 cap P2 hit
  std::string detail;
};

// Causal type of a lifted line: horismotic iff a cl component is empty,
// timelike otherwise with an interior chronology witness searched on a grid.
ColumnClassification classify_column(const Line& line_cl,
                                     const std::vector<BoundaryPair>& lifted,
                                     const WarpProfile& alpha_profile,
                                     const std::vector<Scalar>& t_grid, Scalar tol = 1e-9);

}  // namespace fermat

#endif
