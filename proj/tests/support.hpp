#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "tgs/algebra/factor.hpp"
#include "tgs/algebra/field.hpp"
#include "tgs/algebra/tower_elem.hpp"
#include "tgs/algebra/upoly.hpp"

namespace tgs::testing {

// Integer coefficients, constant term first.
inline UPoly ipoly(const FieldPtr& f, std::initializer_list<long> cs) {
  Coeffs c;
  for (long v : cs) c.push_back(f->from_int(v));
  return UPoly(f, c);
}

inline Coeffs icoeffs(const FieldPtr& f, std::initializer_list<long> cs) { return ipoly(f, cs).coeffs(); }

inline TowerElem elem(const FieldPtr& f, std::initializer_list<long> coeffs) {
  // coefficients of the top generator, constant first
  const Field& P = *f->parent();
  Coeffs c;
  for (long v : coeffs) c.push_back(P.from_int(v));
  upoly::trim(P, c);
  return TowerElem(f, Value(c));
}

inline bool same_vector(const Field& F, const Coeffs& a, const Coeffs& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!F.equal(a[i], b[i])) return false;
  return true;
}

inline UPoly product(const Factorization& fs, const FieldPtr& f) {
  UPoly r = UPoly::constant(f, f->one());
  for (auto& [g, e] : fs)
    for (int i = 0; i < e; ++i) r = r * g;
  return r;
}

inline std::string show(const Factorization& fs, const std::string& var = "x") {
  std::string s;
  for (auto& [g, e] : fs) {
    if (!s.empty()) s += " ; ";
    s += "(" + g.str(var) + ")^" + std::to_string(e);
  }
  return s;
}

}  // namespace tgs::testing
