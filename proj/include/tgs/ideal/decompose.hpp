#pragma once

#include <vector>

#include "tgs/algebra/tower_elem.hpp"
#include "tgs/ideal/quotient.hpp"

namespace tgs {

/// One local factor of a zero-dimensional quotient: residue field as a tower
/// over the coefficient field, the point's coordinates in it, and the length
/// of the local ring.
struct LocalPoint {
  FieldPtr residue;
  std::vector<TowerElem> coords;
  std::size_t length = 0;
  std::size_t local_dimension = 0;
  /// Reduced basis (quotient order) of the primary component.
  std::vector<MPoly> primary;
};

struct DecomposeOptions {
  /// Separating forms tried before giving up.
  std::size_t max_forms = 32;
};

/// Splits K[x]/I into local blocks using a separating linear form and builds
/// each residue field variable by variable.  Throws SeparatingFormNotFound.
std::vector<LocalPoint> decompose_zero_dim(const ArtinianQuotient& A, const DecomposeOptions& opt = {});

/// Residue field of a quotient that is known (or hoped) to be local; nullopt
/// if some coordinate has a minimal polynomial with two distinct factors.
std::optional<LocalPoint> residue_point(const GroebnerBasis& gb);

}  // namespace tgs
