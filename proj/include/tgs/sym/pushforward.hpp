#pragma once

#include <optional>
#include <vector>

#include "tgs/sym/algebra.hpp"
#include "tgs/sym/plugin.hpp"

namespace tgs {

/// A plugin point with coordinates in B.
using AlgebraPoint = std::vector<Coeffs>;

/// u(slot_sum(g)).
Value pushforward_ga(const FiniteFreeAlgebra& B, const Coeffs& g);
/// u(g ⊗ ... ⊗ g); throws NotAUnit unless det(mult by g) != 0.
Value pushforward_gm(const FiniteFreeAlgebra& B, const Coeffs& g);
/// Componentwise; Mu factors also check g^n = 1 in B (InvalidArgument).
GroupPoint pushforward(const FiniteFreeAlgebra& B, const GroupPlugin& G, const AlgebraPoint& g);

/// Matrix of p: (B1 x B2)^{⊙(d1+d2)} -> B1^{⊙d1} ⊗ B2^{⊙d2}.  Columns follow
/// the orbits of the product; rows are pairs (Γ1, Γ2) with Γ1 major.
Matrix split_p(const FiniteFreeAlgebra& B1, const FiniteFreeAlgebra& B2);

/// The residue map of a local algebra with residue field the base, as
/// values on the basis; nullopt if B is not of that kind.
std::optional<Coeffs> residue_map(const FiniteFreeAlgebra& B);

}  // namespace tgs
