#pragma once

#include <utility>
#include <vector>

#include "tgs/algebra/upoly.hpp"

namespace tgs {

using Factorization = std::vector<std::pair<UPoly, int>>;

/// Monic irreducible factors with multiplicities, sorted by degree and then
/// by printed form.  Dispatches on the field: Cantor-Zassenhaus over finite
/// fields, Zassenhaus over Q, Trager over algebraic steps, bivariate Hensel
/// lifting over rational-function steps.
Factorization univ_factor(const UPoly& f);
bool is_irreducible(const UPoly& f);

/// adjoin_root after checking irreducibility; throws InvalidArgument.
FieldPtr adjoin_checked(const FieldPtr& base, std::string name, Coeffs minpoly);

namespace detail {
using RawFactors = std::vector<std::pair<Coeffs, int>>;
RawFactors factor(const Field& F, const Coeffs& f);
/// Squarefree, separable, monic, degree >= 2 over Q.
std::vector<Coeffs> factor_rational_squarefree(const Coeffs& f);
}  // namespace detail

}  // namespace tgs
