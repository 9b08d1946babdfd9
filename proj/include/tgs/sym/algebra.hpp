#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tgs/algebra/matrix.hpp"
#include "tgs/ideal/quotient.hpp"

namespace tgs {

/// A multiset of basis indices, sorted ascending (0-based).
using OrbitIndex = std::vector<int>;

/// All multisets of size d from [lo, hi], in lexicographic order.
std::vector<OrbitIndex> orbit_basis(int d, int lo, int hi);
/// Number of tuples in the orbit, d! / prod(multiplicity!).
std::uint64_t orbit_size(const OrbitIndex& g);
/// "(1,2,2)" with 1-based indices.
std::string orbit_str(const OrbitIndex& g);

/// Commutative algebra B free of finite rank over a field K, given by
/// structure constants in a basis e_1..e_d.
class FiniteFreeAlgebra {
 public:
  /// mult[i][j] = coordinates of e_i e_j.  Checks commutativity,
  /// associativity and the unit; throws InvalidArgument.
  static FiniteFreeAlgebra from_structure(FieldPtr K, std::vector<std::vector<Coeffs>> mult, Coeffs unit);
  /// L over an ancestor K in the tower monomial basis.
  static FiniteFreeAlgebra from_extension(const FieldPtr& L, const FieldPtr& K);
  /// K[x]/I in its standard monomial basis.
  static FiniteFreeAlgebra from_quotient(const ArtinianQuotient& A);
  /// B1 x B2 with the concatenated basis.
  static FiniteFreeAlgebra product(const FiniteFreeAlgebra& a, const FiniteFreeAlgebra& b);
  /// The zero algebra (rank 0).
  static FiniteFreeAlgebra zero(FieldPtr K);

  /// New basis e'_j = sum_i P(i, j) e_i; throws DivisionByZero if P is singular.
  FiniteFreeAlgebra change_basis(const Matrix& P) const;
  /// Structure constants lifted to an extension of the base.
  FiniteFreeAlgebra base_change(const FieldPtr& ext) const;

  const FieldPtr& base() const { return d_->K; }
  std::size_t rank() const { return d_->rank; }
  const Coeffs& unit() const { return d_->unit; }
  const Coeffs& basis_product(std::size_t i, std::size_t j) const { return d_->mult[i][j]; }
  Coeffs basis_vector(std::size_t i) const;

  Coeffs mul(const Coeffs& a, const Coeffs& b) const;
  Coeffs add(const Coeffs& a, const Coeffs& b) const;
  Coeffs scale(const Coeffs& a, const Value& c) const;
  Coeffs power(const Coeffs& a, unsigned n) const;
  Coeffs scalar(const Value& c) const;
  Matrix multiplication(const Coeffs& a) const;
  /// det(mult by a) != 0.
  bool is_unit(const Coeffs& a) const;

  /// Orbit basis of B^{⊙d}, d = rank.
  const std::vector<OrbitIndex>& orbits() const;
  std::size_t orbit_position(const OrbitIndex& g) const;
  /// u(e_Γ) for every orbit, aligned with orbits().  Computed once.
  const std::vector<Value>& u() const;

 private:
  struct Data {
    FieldPtr K;
    std::size_t rank;
    std::vector<std::vector<Coeffs>> mult;
    Coeffs unit;
  };
  struct Cache;
  explicit FiniteFreeAlgebra(std::shared_ptr<const Data> d);
  std::shared_ptr<const Data> d_;
  std::shared_ptr<Cache> cache_;
};

/// An element of B^{⊙d} in the orbit basis; no zero coefficients stored.
class SymElem {
 public:
  explicit SymElem(FiniteFreeAlgebra B) : B_(std::move(B)) {}
  static SymElem basis(const FiniteFreeAlgebra& B, const OrbitIndex& g);
  /// 1 ⊗ ... ⊗ 1.
  static SymElem one(const FiniteFreeAlgebra& B);
  /// b ⊗ ... ⊗ b.
  static SymElem power_tensor(const FiniteFreeAlgebra& B, const Coeffs& b);
  /// sum over slots of 1 ⊗ .. ⊗ b ⊗ .. ⊗ 1.
  static SymElem slot_sum(const FiniteFreeAlgebra& B, const Coeffs& b);
  /// sum over permutations σ of b_σ(1) ⊗ ... ⊗ b_σ(d).
  static SymElem symmetrized(const FiniteFreeAlgebra& B, const std::vector<Coeffs>& bs);

  const FiniteFreeAlgebra& algebra() const { return B_; }
  const std::map<OrbitIndex, Value>& coeffs() const { return c_; }
  Value coeff(const OrbitIndex& g) const;
  void set(const OrbitIndex& g, const Value& v);

  SymElem operator+(const SymElem& o) const;
  SymElem operator*(const SymElem& o) const;
  bool operator==(const SymElem& o) const;
  std::string str() const;

 private:
  FiniteFreeAlgebra B_;
  std::map<OrbitIndex, Value> c_;
};

/// The algebra map u: B^{⊙d} -> K.
Value u_apply(const SymElem& a);

}  // namespace tgs
