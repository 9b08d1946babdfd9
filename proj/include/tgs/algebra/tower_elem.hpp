#pragma once

#include <string>
#include <utility>

#include "tgs/algebra/field.hpp"
#include "tgs/algebra/matrix.hpp"
#include "tgs/algebra/upoly.hpp"

namespace tgs {

/// An element together with the field it lives in.
class TowerElem {
 public:
  TowerElem(FieldPtr f, Value v) : f_(std::move(f)), v_(std::move(v)) {}
  static TowerElem integer(const FieldPtr& f, long n) { return {f, f->from_int(n)}; }
  static TowerElem generator(const FieldPtr& f) { return {f, f->generator()}; }

  const FieldPtr& field() const { return f_; }
  const Value& value() const { return v_; }

  TowerElem operator+(const TowerElem& o) const;
  TowerElem operator-(const TowerElem& o) const;
  TowerElem operator*(const TowerElem& o) const;
  TowerElem operator/(const TowerElem& o) const;
  TowerElem operator-() const;
  TowerElem inverse() const;
  TowerElem pow(long e) const;
  bool is_zero() const { return f_->is_zero(v_); }
  bool is_one() const { return f_->is_one(v_); }
  bool operator==(const TowerElem& o) const;
  std::string str() const { return f_->render(v_); }

  /// Same element viewed in an extension of its field.
  TowerElem lift_to(const FieldPtr& ext) const;
  /// Same element viewed in an ancestor; throws NotInSubfield.
  TowerElem descend_to(const FieldPtr& anc) const;

 private:
  FieldPtr f_;
  Value v_;
};

/// Throws TowerMismatch unless both are the same field.
void require_same_field(const Field& a, const Field& b);

/// Matrix of multiplication by a, over an ancestor with no transcendental
/// step in between.
Matrix multiplication_matrix(const TowerElem& a, const FieldPtr& over);
UPoly minimal_polynomial(const TowerElem& a, const FieldPtr& over);
/// (Tr(a), Nm(a)) relative to `over`.
std::pair<TowerElem, TowerElem> trace_and_norm(const TowerElem& a, const FieldPtr& over);

}  // namespace tgs
