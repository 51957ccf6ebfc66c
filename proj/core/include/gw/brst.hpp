#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "gw/grading.hpp"
#include "gw/linalg.hpp"
#include "gw/state.hpp"

namespace gw {

/// BRST data for C(S) = E (x) S with the bc system at lambda_e = 2.
struct BrstContext {
  Scalar lambda_s;
  State current;          // J = (L^S + L^E / 2) c + (3/4) d^2 c
  State total_virasoro;   // L^E_2 + L^S_{lambda_s}
  Scalar central_charge;  // of L^S_{lambda_s}

  GradingScheme scheme() const { return GradingScheme{lambda_s, 2, 1}; }
};

BrstContext brst_context(const Scalar& lambda_s);

/// J o_0 J split as derivative_coeff * d(:d^2c c:) + residue_coeff * :d^3c c:.
/// Only the second term survives the residue, so Q^2 = 0 iff residue_coeff == 0.
struct AnomalyDecomposition {
  State obstruction;
  Scalar derivative_coeff;
  Scalar residue_coeff;
  bool decomposes = false;  // obstruction lies in the span of the two terms
};

AnomalyDecomposition q_square_obstruction(const BrstContext& ctx);

/// [Q, s] = J(0) s.
State q_apply(const BrstContext& ctx, const State& s);

/// Coordinates of s in a sorted monomial basis. Throws std::invalid_argument
/// if s has a monomial outside the basis.
SparseVector coordinates(const State& s, const std::vector<Monomial>& basis);
State from_coordinates(const SparseVector& v, const std::vector<Monomial>& basis);

struct QMatrix {
  int bc = 0;
  int bg = 0;
  std::vector<Monomial> source;  // weight-0 basis of W^{bc,bg}
  std::vector<Monomial> target;  // weight-0 basis of W^{bc+1,bg}
  SparseMatrix matrix;           // column k = coordinates of Q(source[k])
};

QMatrix q_matrix(const BrstContext& ctx, int bc, int bg);

/// (bc, bg) ghost numbers of a state homogeneous of weight 0 under the
/// context's grading; nullopt for the zero state. Throws
/// std::invalid_argument for inhomogeneous or nonzero-weight input.
std::optional<std::pair<int, int>> weight_zero_bidegree(const BrstContext& ctx, const State& s);

struct CohomologyEntry {
  int dim = 0;
  std::optional<State> representative;  // canonical, present when dim == 1
};

using CohomologyTable = std::map<std::pair<int, int>, CohomologyEntry>;

struct CoboundaryResult {
  bool is_coboundary = false;
  std::optional<State> witness;  // Q witness == input when is_coboundary
};

/// Cohomology of the weight-zero Weil subcomplex. Q matrices and their
/// echelon forms are built on first use and kept for the object's lifetime;
/// the cache is guarded so one instance may be shared between threads.
class WeilComplex {
 public:
  explicit WeilComplex(BrstContext ctx);

  const BrstContext& context() const { return ctx_; }

  int cohomology_dim(int bc, int bg) const;
  CohomologyEntry cohomology(int bc, int bg) const;
  CohomologyTable cohomology_table(int bc_min, int bc_max, int bg_max) const;

  /// Solves Q t = s one bc degree lower. Throws std::invalid_argument if s
  /// is not a homogeneous weight-0 cocycle.
  CoboundaryResult is_coboundary(const State& s) const;
  /// u - v in im Q, for cocycles of equal bidegree.
  bool cohomology_equal(const State& u, const State& v) const;
  /// The scalar r with u - r * rep in im Q, if any. rep must be a cocycle
  /// that is not a coboundary; u a cocycle of the same bidegree (or zero).
  std::optional<Scalar> class_ratio(const State& u, const State& rep) const;

  /// Cheap class detection at (bc, bg) through derivative-free parts. It is
  /// valid when im Q lies in the derivative subspace there (checked on the
  /// exact matrix), dim H <= 1 (ranks modulo a prime never exceed rational
  /// ranks, so this bound is exact) and, if dim_bound == 1, the reference
  /// cocycle has a nonzero derivative-free part. Throws std::logic_error
  /// when one of these fails.
  struct ProjectionCertificate {
    int dim_bound = 0;
    std::optional<State> reference;  // power_rep / odd_power_rep when dim_bound == 1
    State reference_free_part;
  };
  const ProjectionCertificate& projection_certificate(int bc, int bg) const;

  /// For a cocycle z of bidegree (bc, bg) with derivative-free part
  /// `free_part`: the r with z - r * reference in im Q (r = 0 when the group
  /// vanishes), or nullopt if free_part is inconsistent with that.
  std::optional<Scalar> projected_class_ratio(const State& free_part, int bc, int bg) const;

  /// Rank of Q on W^{bc,bg}, recomputed by Bareiss and modulo a prime.
  struct RankCheck {
    int echelon = 0;
    int bareiss = 0;
    int modular = 0;
  };
  RankCheck rank_check(int bc, int bg) const;

  const QMatrix& matrix(int bc, int bg) const;

 private:
  struct Entry {
    QMatrix q;
    ColumnEchelon echelon;
  };
  const Entry& entry(int bc, int bg) const;
  const QMatrix& plain_matrix(int bc, int bg) const;
  int modular_q_rank(int bc, int bg) const;

  BrstContext ctx_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<int, int>, std::unique_ptr<Entry>> cache_;
  mutable std::map<std::pair<int, int>, std::unique_ptr<QMatrix>> matrices_;
  mutable std::map<std::pair<int, int>, int> modular_ranks_;
  mutable std::map<std::pair<int, int>, std::unique_ptr<ProjectionCertificate>> certificates_;
};

/// True iff every monomial carries a mode of index <= -2.
bool in_derivative_subspace(const State& s);

/// x = beta gamma^2 - b c gamma + (3/2) d(gamma)
State class_x();
/// y = c beta gamma + (3/2) d(c)
State class_y();
/// Right-nested Wick power x^k; power_rep(0) is the vacuum.
State power_rep(int k);
/// :y x^k:
State odd_power_rep(int k);

/// Bracket {u, v} = (-1)^{|u|} (b o_0 u) o_0 v. Throws std::invalid_argument
/// if u is not homogeneous in bc ghost number.
State lz_bracket(const State& u, const State& v);

/// Derivative-free parts of {u, v} and of the Wick product u v, computed
/// without forming the full results.
State lz_bracket_free_part(const State& u, const State& v);
State wick_free_part(const State& u, const State& v);

/// bc ghost number of a state homogeneous in it; nullopt for zero.
std::optional<int> bc_degree(const State& s);

}  // namespace gw
