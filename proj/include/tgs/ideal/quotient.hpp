#pragma once

#include <map>
#include <vector>

#include "tgs/algebra/matrix.hpp"
#include "tgs/ideal/groebner.hpp"

namespace tgs {

/// K[x]/I for zero-dimensional I: standard monomial basis (ascending) and
/// multiplication matrices of the variables.
class ArtinianQuotient {
 public:
  /// Throws NotZeroDimensional.
  explicit ArtinianQuotient(GroebnerBasis gb);

  const GroebnerBasis& gb() const { return gb_; }
  const FieldPtr& field() const { return gb_.field(); }
  const std::vector<Monomial>& basis() const { return basis_; }
  std::size_t dimension() const { return basis_.size(); }
  const Matrix& multiplication(std::size_t var) const { return mult_[var]; }
  Matrix multiplication_by(const MPoly& f) const;
  Coeffs coordinates(const MPoly& f) const;
  MPoly element(const Coeffs& c) const;
  /// Coordinates of the unit.
  Coeffs unit() const;

 private:
  GroebnerBasis gb_;
  std::vector<Monomial> basis_;
  std::map<Monomial, std::size_t> index_;
  std::vector<Matrix> mult_;
};

ArtinianQuotient quotient_basis(const GroebnerBasis& gb);

}  // namespace tgs
