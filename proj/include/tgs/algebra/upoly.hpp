#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tgs/algebra/field.hpp"

namespace tgs {

/// Dense univariate polynomials as coefficient vectors (constant first,
/// no trailing zeros) over a field passed alongside.
namespace upoly {

inline int degree(const Coeffs& a) { return static_cast<int>(a.size()) - 1; }
void trim(const Field& F, Coeffs& a);
Coeffs constant(const Field& F, const Value& c);
Coeffs x(const Field& F);
bool equal(const Field& F, const Coeffs& a, const Coeffs& b);

Coeffs add(const Field& F, const Coeffs& a, const Coeffs& b);
Coeffs sub(const Field& F, const Coeffs& a, const Coeffs& b);
Coeffs neg(const Field& F, const Coeffs& a);
Coeffs scale(const Field& F, const Coeffs& a, const Value& c);
Coeffs mul(const Field& F, const Coeffs& a, const Coeffs& b);
Coeffs power(const Field& F, const Coeffs& a, unsigned e);
/// a = q b + r; throws DivisionByZero when b = 0.
void divmod(const Field& F, const Coeffs& a, const Coeffs& b, Coeffs* q, Coeffs* r);
Coeffs rem(const Field& F, const Coeffs& a, const Coeffs& b);
Coeffs quo(const Field& F, const Coeffs& a, const Coeffs& b);
Coeffs monic(const Field& F, const Coeffs& a);
/// Monic gcd; gcd(0, 0) = 0.
Coeffs gcd(const Field& F, const Coeffs& a, const Coeffs& b);
/// Monic g = s a + t b.
Coeffs xgcd(const Field& F, const Coeffs& a, const Coeffs& b, Coeffs& s, Coeffs& t);
Coeffs derivative(const Field& F, const Coeffs& a);
Value eval(const Field& F, const Coeffs& a, const Value& x);
/// a(b(x)).
Coeffs compose(const Field& F, const Coeffs& a, const Coeffs& b);
/// a(x + c).
Coeffs taylor_shift(const Field& F, const Coeffs& a, const Value& c);
Coeffs pow_mod(const Field& F, const Coeffs& a, const mpz_class& e, const Coeffs& m);
/// b with a(x) = b(x^k); requires every exponent of a to be divisible by k.
Coeffs deflate(const Coeffs& a, std::size_t k);
Coeffs inflate(const Field& F, const Coeffs& a, std::size_t k);
/// Lift every coefficient from an ancestor field.
Coeffs lift(const Field& to, const Field& from, const Coeffs& a);
/// Newton interpolation through (xs[i], ys[i]); xs distinct.
Coeffs interpolate(const Field& F, const Coeffs& xs, const Coeffs& ys);
std::string render(const Field& F, const Coeffs& a, const std::string& var);

}  // namespace upoly

/// Joins rendered terms into "a + b - c"; shared by every polynomial printer.
std::string join_terms(const std::vector<std::string>& terms);
/// Parenthesizes a printed coefficient when it is a sum or fraction.
std::string wrap_coefficient(const Field& F, const std::string& s);
/// Renders coefficient * monomial; `mono` may be empty for the constant term.
std::string render_term(const std::string& coef, const std::string& mono);

/// Univariate polynomial bound to its coefficient field.
class UPoly {
 public:
  UPoly(FieldPtr f, Coeffs c);
  static UPoly x(FieldPtr f);
  static UPoly constant(FieldPtr f, const Value& c);

  const FieldPtr& field() const { return f_; }
  const Coeffs& coeffs() const { return c_; }
  int degree() const { return upoly::degree(c_); }
  bool is_zero() const { return c_.empty(); }
  const Value& lc() const { return c_.back(); }

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly operator-() const;
  UPoly monic() const;
  std::pair<UPoly, UPoly> divmod(const UPoly& o) const;
  bool operator==(const UPoly& o) const;
  std::string str(const std::string& var = "t") const;

 private:
  FieldPtr f_;
  Coeffs c_;
};

}  // namespace tgs
