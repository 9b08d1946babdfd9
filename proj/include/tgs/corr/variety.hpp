#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tgs/ideal/groebner.hpp"

namespace tgs {

/// K(X) as a tower: a maximal independent set of coordinates becomes
/// transcendental, the remaining coordinates are adjoined one at a time.
struct FunctionFieldModel {
  FieldPtr field;
  /// Indices of the coordinates that are transcendental generators.
  std::vector<std::size_t> transcendental;
  /// The generic point: every coordinate as an element of `field`.
  std::vector<TowerElem> coords;
  /// Tower nodes above the base field paired with the coordinate each one
  /// generates.
  std::vector<std::pair<const Field*, std::size_t>> generator_vars;
};

/// V(I) in affine space over K.  The function field model is computed on
/// construction; if the generic point is not a single reduced point the
/// variety is kept but model() throws InvalidArgument.
class AffineVariety {
 public:
  AffineVariety(std::string name, FieldPtr K, std::vector<std::string> vars, std::vector<MPoly> ideal);

  const std::string& name() const { return name_; }
  const FieldPtr& base() const { return K_; }
  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<MPoly>& ideal() const { return gens_; }
  const GroebnerBasis& gb() const { return gb_; }
  std::size_t dimension() const { return dim_; }
  bool integral() const { return model_.has_value(); }
  const FunctionFieldModel& model() const;
  /// Why model() is unavailable.
  const std::string& model_error() const { return model_error_; }

  /// f at the generic point.
  TowerElem generic_value(const MPoly& f) const;
  /// An element of K(X) as num / den with num, den in K[vars].
  std::pair<MPoly, MPoly> fraction(const TowerElem& a) const;
  /// A polynomial representing `a` modulo the ideal, if `a` is regular on X.
  std::optional<MPoly> regular_function(const TowerElem& a) const;
  /// f reduced modulo the ideal.
  MPoly normal_form(const MPoly& f) const { return gb_.reduce(f); }
  /// Jacobian criterion: the ideal and the c x c minors of the Jacobian
  /// generate the unit ideal, c the codimension.  Smooth implies normal;
  /// false only means no certificate.
  bool certified_smooth() const;
  /// Whether `point` (coordinates in an extension of K) satisfies the ideal.
  bool contains_point(const std::vector<TowerElem>& point) const;
  std::string describe() const;

 private:
  /// (I + polys) : D^infinity is contained in I.
  bool saturation_within(const std::vector<MPoly>& polys, const MPoly& D) const;

  std::string name_;
  FieldPtr K_;
  std::vector<std::string> vars_;
  std::vector<MPoly> gens_;
  GroebnerBasis gb_;
  std::size_t dim_ = 0;
  std::optional<FunctionFieldModel> model_;
  std::string model_error_;
};

using VarietyPtr = std::shared_ptr<const AffineVariety>;

}  // namespace tgs
