#pragma once

#include <optional>
#include <vector>

#include "f1/nt.hpp"

namespace f1 {

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>; // row major
using ZVec = std::vector<Int>;
using ZMat = std::vector<ZVec>;

Rat qmat_det(QMat a);
Int zmat_det(ZMat a);

int qmat_rank(QMat a);

/// Solve A x = b exactly where the columns of A are linearly independent.
/// Returns nullopt when the system is inconsistent (b outside the column
/// span).
std::optional<QVec> solve_columns(const QMat& a, const QVec& b);

/// Inverse of a square integer matrix with det = ±1 (entries stay integral).
ZMat unimodular_inverse(const ZMat& a);

/// Exact phase-1 simplex: is {x >= 0 : A x = b} nonempty?
bool lp_feasible(QMat a, QVec b);

/// Column reduction of a k x r integer matrix whose rows should extend to a
/// lattice basis. On success returns V (r x r, unimodular) with A·V = [I_k|0].
/// Returns nullopt if the rows are dependent or span a proper-index
/// sublattice; *index (when non-null) receives the lattice index (0 for rank
/// deficiency).
std::optional<ZMat> unimodular_complement(const ZMat& a, Int* index);

} // namespace f1
