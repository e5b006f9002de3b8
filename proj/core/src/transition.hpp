#pragma once

// Per-degree change-of-basis data between a classical basis and the power-sum
// basis. Rows are sparse: row i is the expansion of the source basis element
// indexed by index[i] in the target basis.

#include <memory>
#include <utility>
#include <vector>

#include "ggp/partition.hpp"
#include "ggp/symfunc.hpp"

namespace ggp::detail {

struct Transition {
  std::vector<Partition> index;  // partitions_of(n), reverse-lexicographic
  std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;

  std::size_t position(const Partition& lambda) const;
};

/// B -> p at degree n. The returned object is immutable and shared.
std::shared_ptr<const Transition> to_powersum(Basis source, int n);
/// p -> B at degree n.
std::shared_ptr<const Transition> from_powersum(Basis target, int n);

/// Dense square matrix helpers, exposed for tests of the triangular solve.
using DenseMatrix = std::vector<std::vector<Rational>>;
DenseMatrix to_dense(const Transition& t);
/// Inverse of a matrix that is upper or lower triangular with nonzero
/// diagonal. Throws Error(internal) if it is neither.
DenseMatrix invert_triangular(const DenseMatrix& m);

}  // namespace ggp::detail
