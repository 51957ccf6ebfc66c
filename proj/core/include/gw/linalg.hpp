#pragma once

#include <cstdint>
#include <unordered_map>
#include <optional>
#include <vector>

#include "gw/scalar.hpp"

namespace gw {

/// Sparse vector: (index, value) pairs, strictly increasing index, no zeros.
using SparseVector = std::vector<std::pair<int, Scalar>>;

/// target += factor * v
void axpy(SparseVector& target, const Scalar& factor, const SparseVector& v);

/// Column-major sparse matrix over the rationals.
struct SparseMatrix {
  int rows = 0;
  std::vector<SparseVector> columns;

  int cols() const { return static_cast<int>(columns.size()); }
};

/// Incremental column echelon form of a sparse matrix.
///
/// Columns are reduced one at a time against the pivots found so far. Each
/// pivot vector remembers which combination of original columns produced it,
/// so the same pass yields the rank, a kernel basis and a solver for A t = v.
class ColumnEchelon {
 public:
  explicit ColumnEchelon(const SparseMatrix& a);

  int rank() const { return static_cast<int>(pivots_.size()); }
  /// Basis of {t : A t = 0}, one vector per dependent column.
  const std::vector<SparseVector>& kernel() const { return kernel_; }

  /// Some t with A t = v, or nullopt when v is not in the column space.
  std::optional<SparseVector> solve(const SparseVector& v) const;

  /// Canonical representative of v modulo the column space: the unique
  /// vector of v + im(A) vanishing at every pivot row.
  SparseVector reduce_modulo_image(const SparseVector& v) const;

 private:
  struct Pivot {
    int key = 0;
    SparseVector vector;       // entry 1 at the key row
    SparseVector combination;  // column combination producing `vector`
  };

  /// Reduces v in place; accumulates the pivot combination that was
  /// subtracted into `used` when non-null.
  void reduce(SparseVector& v, SparseVector* used) const;

  std::vector<Pivot> pivots_;
  std::unordered_map<int, int> pivot_index_;
  std::vector<SparseVector> kernel_;
  int rows_ = 0;
};

/// Rank by fraction-free (Bareiss) elimination on a dense integer copy; each
/// column is scaled by the lcm of its denominators first.
int bareiss_rank(const SparseMatrix& a);

/// Rank of the matrix reduced modulo `prime` (< 2^62). Throws
/// std::domain_error if some denominator is divisible by the prime.
int modular_rank(const SparseMatrix& a, std::uint64_t prime = 2305843009213693951ULL);

}  // namespace gw
