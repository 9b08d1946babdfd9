#pragma once

#include <string>
#include <vector>

#include "tgs/algebra/field.hpp"
#include "tgs/algebra/tower_elem.hpp"

namespace tgs {

using Monomial = std::vector<int>;

bool divides(const Monomial& a, const Monomial& b);
Monomial mono_lcm(const Monomial& a, const Monomial& b);
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b);
int mono_degree(const Monomial& a);
bool coprime(const Monomial& a, const Monomial& b);
std::string render_monomial(const Monomial& m, const std::vector<std::string>& names);

class TermOrder {
 public:
  enum class Kind { Lex, DegRevLex, Block };

  static TermOrder lex() { return TermOrder(Kind::Lex, 0); }
  static TermOrder degrevlex() { return TermOrder(Kind::DegRevLex, 0); }
  /// Variables [0, split) form the first block; blocks compare by degrevlex.
  static TermOrder block(std::size_t split) { return TermOrder(Kind::Block, split); }

  /// Positive if a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  Kind kind() const { return kind_; }
  std::size_t split() const { return split_; }
  bool operator==(const TermOrder& o) const { return kind_ == o.kind_ && split_ == o.split_; }

 private:
  TermOrder(Kind k, std::size_t s) : kind_(k), split_(s) {}
  Kind kind_;
  std::size_t split_;
};

struct Term {
  Monomial mono;
  Value coef;
};

/// Sparse multivariate polynomial; terms sorted by decreasing monomial in
/// the attached order, zero coefficients never stored.
class MPoly {
 public:
  MPoly(FieldPtr f, std::size_t nvars, TermOrder order = TermOrder::degrevlex());
  static MPoly constant(FieldPtr f, std::size_t nvars, const Value& c, TermOrder order = TermOrder::degrevlex());
  static MPoly variable(FieldPtr f, std::size_t nvars, std::size_t i, TermOrder order = TermOrder::degrevlex());
  static MPoly monomial(FieldPtr f, const Monomial& m, const Value& c, TermOrder order = TermOrder::degrevlex());
  /// Builds from arbitrary (possibly repeated, unsorted) terms.
  static MPoly from_terms(FieldPtr f, std::size_t nvars, std::vector<Term> terms,
                          TermOrder order = TermOrder::degrevlex());

  const FieldPtr& field() const { return f_; }
  std::size_t nvars() const { return n_; }
  const TermOrder& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const Term& lead() const { return terms_.front(); }
  int total_degree() const;
  int degree_in(std::size_t var) const;

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator-() const;
  MPoly scaled(const Value& c) const;
  MPoly mul_term(const Monomial& m, const Value& c) const;
  /// this - c * m * g, merged in one pass.
  MPoly sub_mul(const Value& c, const Monomial& m, const MPoly& g) const;
  MPoly pow(unsigned e) const;
  MPoly monic() const;
  MPoly with_order(TermOrder order) const;
  /// Variable i becomes variable perm[i] in a ring with `nvars` variables.
  MPoly remap(const std::vector<std::size_t>& perm, std::size_t nvars, TermOrder order) const;
  bool operator==(const MPoly& o) const;
  /// Removes the leading term.
  void pop_lead() { terms_.erase(terms_.begin()); }
  /// Appends a term smaller than every stored term.
  void push_smallest(Term t) { terms_.push_back(std::move(t)); }
  std::string str(const std::vector<std::string>& names) const;

 private:
  void normalize();
  FieldPtr f_;
  std::size_t n_;
  TermOrder order_;
  std::vector<Term> terms_;
};

/// f at a point whose coordinates live in an extension of f's field.
TowerElem evaluate(const MPoly& f, const std::vector<TowerElem>& point);
/// Substitutes values (in an extension L) for the first k variables; the
/// result lives over L in the remaining variables.
MPoly substitute_prefix(const MPoly& f, const std::vector<TowerElem>& values, const FieldPtr& L,
                        TermOrder order = TermOrder::degrevlex());
/// Replaces variable i by images[i]; all images share one ring.
MPoly substitute(const MPoly& f, const std::vector<MPoly>& images);
/// Coefficients lifted into an extension field.
MPoly lift_coefficients(const MPoly& f, const FieldPtr& ext);

}  // namespace tgs
