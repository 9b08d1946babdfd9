#pragma once

#include <vector>

#include "tgs/ideal/quotient.hpp"
#include "tgs/sym/pushforward.hpp"

namespace tgs {

/// Executable forms of the identities satisfied by u and the pushforward.
/// Each returns whether both sides agree; preconditions that fail throw.

/// For a local B with residue field K: u(e_Γ) equals the residue of the
/// product of the tensor factors, on every orbit.  InvalidArgument if B is
/// not local with residue K.
bool check_reduction(const FiniteFreeAlgebra& B);

/// (u ⊗ u) ∘ p = u on (B1 x B2)^{⊙(d1+d2)}.
bool check_split_p(const FiniteFreeAlgebra& B1, const FiniteFreeAlgebra& B2);

/// Gm and Ga pushforwards along L/K agree with the norm and trace of `a`.
bool check_norm_trace(const TowerElem& a, const FieldPtr& K);

/// For a local B with residue K: pushforward = rank · (value at the section).
bool check_section(const FiniteFreeAlgebra& B, const GroupPlugin& G, const AlgebraPoint& g);

/// K[x]/I with only K-rational points: pushforward = sum over points of the
/// local dimension times the value there.  InvalidArgument if a point is
/// not rational.
bool check_split_points(const ArtinianQuotient& A, const GroupPlugin& G, const AlgebraPoint& g);

/// Pushforward along B1 x B2 of (g1, g2) is the sum of the two pushforwards.
bool check_coproduct(const FiniteFreeAlgebra& B1, const FiniteFreeAlgebra& B2, const GroupPlugin& G,
                     const AlgebraPoint& g1, const AlgebraPoint& g2);

/// Pushing forward then extending scalars to `ext` equals extending first.
bool check_base_change(const FiniteFreeAlgebra& B, const FieldPtr& ext, const GroupPlugin& G, const AlgebraPoint& g);

/// u computed in the basis changed by P agrees with u in the original basis
/// on symmetrized tensors of the given elements (coordinates in the old
/// basis), and on Ga / Gm pushforwards of each of them.
bool check_basis_independence(const FiniteFreeAlgebra& B, const Matrix& P, const std::vector<std::vector<Coeffs>>& tensors);

}  // namespace tgs
