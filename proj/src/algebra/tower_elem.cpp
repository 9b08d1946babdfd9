#include "tgs/algebra/tower_elem.hpp"

#include "tgs/error.hpp"

namespace tgs {

void require_same_field(const Field& a, const Field& b) {
  if (&a != &b) throw TowerMismatch("elements of " + a.describe() + " and " + b.describe());
}

TowerElem TowerElem::operator+(const TowerElem& o) const {
  require_same_field(*f_, *o.f_);
  return {f_, f_->add(v_, o.v_)};
}
TowerElem TowerElem::operator-(const TowerElem& o) const {
  require_same_field(*f_, *o.f_);
  return {f_, f_->sub(v_, o.v_)};
}
TowerElem TowerElem::operator*(const TowerElem& o) const {
  require_same_field(*f_, *o.f_);
  return {f_, f_->mul(v_, o.v_)};
}
TowerElem TowerElem::operator/(const TowerElem& o) const {
  require_same_field(*f_, *o.f_);
  return {f_, f_->div(v_, o.v_)};
}
TowerElem TowerElem::operator-() const { return {f_, f_->neg(v_)}; }
TowerElem TowerElem::inverse() const { return {f_, f_->inv(v_)}; }
TowerElem TowerElem::pow(long e) const { return {f_, f_->pow(v_, mpz_class(e))}; }
bool TowerElem::operator==(const TowerElem& o) const { return f_ == o.f_ && f_->equal(v_, o.v_); }

TowerElem TowerElem::lift_to(const FieldPtr& ext) const {
  if (ext == f_) return *this;
  return {ext, ext->lift_from(*f_, v_)};
}

TowerElem TowerElem::descend_to(const FieldPtr& anc) const {
  auto v = f_->descend_to(*anc, v_);
  if (!v) throw NotInSubfield(str() + " does not lie in " + anc->describe());
  return {anc, *v};
}

Matrix multiplication_matrix(const TowerElem& a, const FieldPtr& over) {
  const Field& L = *a.field();
  std::size_t n = L.degree_over(*over);
  std::vector<Coeffs> cols;
  cols.reserve(n);
  Coeffs unit(n, over->zero());
  for (std::size_t j = 0; j < n; ++j) {
    unit[j] = over->one();
    Value bj = L.from_coords(*over, unit);
    unit[j] = over->zero();
    cols.push_back(L.coords_over(*over, L.mul(a.value(), bj)));
  }
  return Matrix::from_columns(over, n, cols);
}

UPoly minimal_polynomial(const TowerElem& a, const FieldPtr& over) {
  const Field& L = *a.field();
  std::size_t n = L.degree_over(*over);
  RelationFinder rf(over, n);
  Value pw = L.one();
  for (;;) {
    if (auto rel = rf.add(L.coords_over(*over, pw))) return UPoly(over, std::move(*rel));
    pw = L.mul(pw, a.value());
  }
}

std::pair<TowerElem, TowerElem> trace_and_norm(const TowerElem& a, const FieldPtr& over) {
  Matrix m = multiplication_matrix(a, over);
  return {TowerElem(over, trace(m)), TowerElem(over, determinant(m))};
}

}  // namespace tgs
