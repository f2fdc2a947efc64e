#ifndef FERMAT_COMPLETION_HPP
#define FERMAT_COMPLETION_HPP

#include "fermat/distance.hpp"
#include "fermat/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fermat {

// A user-declared boundary-approaching sequence: a finite prefix of a
// sequence of mesh vertices.
struct DeclaredSequence {
  std::vector<Index> points;  // at least 8
  std::string label;
};

struct CompletionOptions {
  Scalar tail_tol = 1e-4;   // mesh-dependent Cauchy/limit tolerance
  Scalar divergence_cap = 1e6;
  int tail_window = 4;      // K tail indices for the iterated limits
};

struct CauchyFlags {
  bool forward = false;
  bool backward = false;
  Scalar forward_tail = kInf;   // sup over n<=m of d(x_n,x_m) on the last quarter
  Scalar backward_tail = kInf;
};

CauchyFlags cauchy_check(const DeclaredSequence& seq, const DistanceTable& table,
                         const CompletionOptions& opts = {});

struct DqResult {
  Scalar value = kInf;
  Scalar tail_variation = kInf;  // spread over the tail block
  bool diverged = false;
};

// Iterated-limit estimate of d_Q([a],[b]) = lim_n lim_m d(a_n, b_m), taken at
// the largest indices with the tail variation reported.
DqResult dq(const DeclaredSequence& a, const DeclaredSequence& b, const DistanceTable& table,
            const CompletionOptions& opts = {});

// d_Q between an interior vertex (as a constant sequence) and a declared
// sequence, in both orders.
DqResult dq_point_to_seq(Index vertex, const DeclaredSequence& seq, const DistanceTable& table,
                         const CompletionOptions& opts = {});
DqResult dq_seq_to_point(const DeclaredSequence& seq, Index vertex, const DistanceTable& table,
                         const CompletionOptions& opts = {});

struct CompletionClass {
  std::vector<size_t> members;  // indices into the declared family
  bool forward = false;
  bool backward = false;
  bool symmetrized = false;     // forward && backward
  std::string label;
};

// Partition of the declared family by the relation sigma ~ sigma' (both
// iterated limits vanish within the tail tolerance).
std::vector<CompletionClass> classify_boundary(const std::vector<DeclaredSequence>& seqs,
                                               const DistanceTable& table,
                                               const CompletionOptions& opts = {});

struct DqReport {
  bool triangle_ok = true;
  bool separation_ok = true;
  bool convergence_ok = true;
  std::vector<std::string> witnesses;
  Mat dq_matrix;  // class-to-class iterated limits
  bool pass() const { return triangle_ok && separation_ok && convergence_ok; }
};

// Desk-scale test of the Thm hypotheses: is d_Q still a generalized distance
// on the declared classes?
DqReport check_dq_generalized(const std::vector<CompletionClass>& classes,
                              const std::vector<DeclaredSequence>& seqs,
                              const DistanceTable& table, const CompletionOptions& opts = {});

std::string classes_to_json(const std::vector<CompletionClass>& classes,
                            const std::vector<DeclaredSequence>& seqs, const Mat& dq_matrix);

}  // namespace fermat

#endif
