#pragma once

#include <vector>

#include "tgs/algebra/tower_elem.hpp"
#include "tgs/ideal/groebner.hpp"

namespace tgs {

/// Ideal over L in the trailing variables obtained by substituting `point`
/// (coordinates in an extension L of I's field) for the leading ones.
IdealPresentation fiber_ideal(const IdealPresentation& I, const std::vector<TowerElem>& point);

struct FinitenessCheck {
  /// I meets K[x] only in 0.
  bool dominant = false;
  /// Zero-dimensional after inverting K[x]\{0}, and dominant.
  bool generically_finite = false;
  /// K[x, y]/I is a finite K[x]-module.
  bool integral = false;
  /// Basis in the permuted ring (trailing block first) under the block order.
  GroebnerBasis gb;
};

/// Finiteness of V(I) over the affine space of the first k variables.  The
/// block order eliminating y restricts to a Groebner basis over K(x), so the
/// y-parts of the leading monomials decide the generic fiber.
FinitenessCheck finite_over_first_block(const IdealPresentation& I, std::size_t k);

/// Reduced lex basis of the ideal of a point with coordinates in a finite
/// extension of K (Buchberger-Moeller).  Its standard monomials span K(z).
GroebnerBasis point_ideal(const FieldPtr& K, const std::vector<std::string>& vars,
                          const std::vector<TowerElem>& coords);

}  // namespace tgs
