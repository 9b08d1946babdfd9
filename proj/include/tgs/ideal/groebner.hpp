#pragma once

#include <string>
#include <vector>

#include "tgs/algebra/mpoly.hpp"

namespace tgs {

/// Generators of an ideal in K[vars].
struct IdealPresentation {
  FieldPtr field;
  std::vector<std::string> vars;
  std::vector<MPoly> gens;
};

/// Reduced Groebner basis, sorted by increasing leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(FieldPtr f, std::vector<std::string> vars, TermOrder order, std::vector<MPoly> polys);

  const FieldPtr& field() const { return f_; }
  const std::vector<std::string>& vars() const { return vars_; }
  const TermOrder& order() const { return order_; }
  const std::vector<MPoly>& polys() const { return polys_; }
  std::size_t nvars() const { return vars_.size(); }

  MPoly reduce(const MPoly& f) const;
  bool contains(const MPoly& f) const { return reduce(f).is_zero(); }
  bool is_unit() const;
  /// Every variable has a pure power among the leading monomials.
  bool is_zero_dimensional() const;
  std::vector<Monomial> leading_monomials() const;
  std::string str() const;
  bool operator==(const GroebnerBasis& o) const;

 private:
  FieldPtr f_;
  std::vector<std::string> vars_;
  TermOrder order_;
  std::vector<MPoly> polys_;
};

/// Buchberger's algorithm with the Gebauer-Moeller criteria.
GroebnerBasis buchberger(const IdealPresentation& I, TermOrder order = TermOrder::degrevlex());
/// I ∩ J by elimination of an auxiliary variable; both in the same ring.
GroebnerBasis ideal_intersection(const GroebnerBasis& I, const GroebnerBasis& J);
/// Full reduction of f by the polynomials g (all in f's ring).
MPoly normal_form(const MPoly& f, const std::vector<MPoly>& g);

}  // namespace tgs
