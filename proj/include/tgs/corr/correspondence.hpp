#pragma once

#include <string>
#include <vector>

#include "tgs/corr/variety.hpp"
#include "tgs/ideal/decompose.hpp"

namespace tgs {

/// Generators in the concatenated ring X.vars ++ Y.vars, with multiplicity.
struct Component {
  std::vector<MPoly> gens;
  long multiplicity = 1;
};

/// A formal sum of closed subschemes of X x Y, each meant to be integral,
/// finite and dominant over X.
class Correspondence {
 public:
  Correspondence(std::string name, VarietyPtr X, VarietyPtr Y, std::vector<Component> components);
  /// Graph of the morphism x -> (images[0](x), ...), multiplicity one.
  static Correspondence graph(std::string name, VarietyPtr X, VarietyPtr Y, const std::vector<MPoly>& images);
  /// Graph of the identity of X, with target variables renamed.
  static Correspondence identity(std::string name, VarietyPtr X, VarietyPtr copy);

  const std::string& name() const { return name_; }
  const VarietyPtr& source() const { return X_; }
  const VarietyPtr& target() const { return Y_; }
  const FieldPtr& base() const { return X_->base(); }
  const std::vector<Component>& components() const { return comps_; }
  const std::vector<std::string>& ring_vars() const { return vars_; }
  /// Component generators together with the ideals of X and Y.
  IdealPresentation component_ideal(std::size_t i) const;
  /// Same target and source, every multiplicity scaled.
  Correspondence scaled(long m) const;
  /// Formal sum; both must have the same source and target.
  Correspondence operator+(const Correspondence& o) const;
  std::string describe() const;

 private:
  std::string name_;
  VarietyPtr X_, Y_;
  std::vector<Component> comps_;
  std::vector<std::string> vars_;
};

struct CyclePoint {
  FieldPtr field;
  std::vector<TowerElem> coords;
  long multiplicity = 1;
};

/// A correspondence restricted to the generic point of its source: points
/// of the target with coordinates in finite extensions of K(X).
struct GenericCycle {
  FieldPtr base;
  VarietyPtr target;
  std::vector<CyclePoint> points;
};

struct ValidationReport {
  /// Per component, e.g. "component 1: finite over X, generic fiber Q(y)/(y^2 - 2)".
  std::vector<std::string> components;
  /// Conditions that are not certified.
  std::vector<std::string> unverified;
};

/// Throws InvalidComponent naming the component and the reason.
ValidationReport validate(const Correspondence& a);
/// Throws NonIntegralComponent when a generic fiber is not one reduced point.
GenericCycle generic_fiber(const Correspondence& a);
long degree(const GenericCycle& c);
long degree(const Correspondence& a);
/// Every point satisfies the target's equations.
bool on_target(const GenericCycle& c);

struct PulledPoint {
  FieldPtr field;
  std::vector<TowerElem> coords;
  std::size_t length = 1;
  long multiplicity = 1;
};

struct Pullback {
  std::vector<PulledPoint> points;
  /// Dimension of the fiber algebra of each component over L.
  std::vector<std::size_t> fiber_dimension;
  /// Sum of length * [M:L] over the points of each component.
  std::vector<std::size_t> accounted;
};

/// Fiber of b over a point of its source with coordinates in L.  Throws
/// NonFlatFiber when a fiber has a different dimension than the generic one.
Pullback pullback_along_point(const Correspondence& b, const std::vector<TowerElem>& y, const FieldPtr& L);

GenericCycle compose(const GenericCycle& a, const Correspondence& b);
GenericCycle compose(const Correspondence& a, const Correspondence& b);
GenericCycle scaled(const GenericCycle& c, long m);
GenericCycle sum(const GenericCycle& a, const GenericCycle& b);

/// Canonical form: one entry per closed point of the target over K(X),
/// keyed by the reduced lex basis of its ideal, weighted by [M : K(z)].
struct NormalPoint {
  GroebnerBasis ideal;
  std::string key;
  long multiplicity;
  /// [K(z) : K(X)].
  std::size_t degree;
};
std::vector<NormalPoint> normalize(const GenericCycle& c);
bool same_cycle(const GenericCycle& a, const GenericCycle& b);
std::string describe(const GenericCycle& c);

/// The correspondence whose generic fiber is c: closure of each point in
/// source x target.  Needs an integral source.
Correspondence closure(const GenericCycle& c, VarietyPtr source, std::string name);

/// (c o b) o a against c o (b o a), the former through closure.
bool associativity_check(const Correspondence& a, const Correspondence& b, const Correspondence& c);
/// b o graph(f) against the generic fiber of b with y replaced by f(x).
bool graph_substitution_check(const VarietyPtr& X, const std::vector<MPoly>& images, const Correspondence& b);

}  // namespace tgs
