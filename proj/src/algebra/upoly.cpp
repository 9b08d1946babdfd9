#include "tgs/algebra/upoly.hpp"

#include "tgs/error.hpp"

namespace tgs {
namespace upoly {

void trim(const Field& F, Coeffs& a) {
  while (!a.empty() && F.is_zero(a.back())) a.pop_back();
}

Coeffs constant(const Field& F, const Value& c) {
  if (F.is_zero(c)) return {};
  return {c};
}

Coeffs x(const Field& F) { return {F.zero(), F.one()}; }

bool equal(const Field& F, const Coeffs& a, const Coeffs& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!F.equal(a[i], b[i])) return false;
  return true;
}

Coeffs add(const Field& F, const Coeffs& a, const Coeffs& b) {
  const Coeffs& lo = a.size() < b.size() ? a : b;
  const Coeffs& hi = a.size() < b.size() ? b : a;
  Coeffs r = hi;
  for (std::size_t i = 0; i < lo.size(); ++i) r[i] = F.add(a[i], b[i]);
  trim(F, r);
  return r;
}

Coeffs sub(const Field& F, const Coeffs& a, const Coeffs& b) {
  Coeffs r(std::max(a.size(), b.size()), F.zero());
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size() && i < b.size())
      r[i] = F.sub(a[i], b[i]);
    else if (i < a.size())
      r[i] = a[i];
    else
      r[i] = F.neg(b[i]);
  }
  trim(F, r);
  return r;
}

Coeffs neg(const Field& F, const Coeffs& a) {
  Coeffs r;
  r.reserve(a.size());
  for (const Value& v : a) r.push_back(F.neg(v));
  return r;
}

Coeffs scale(const Field& F, const Coeffs& a, const Value& c) {
  if (F.is_zero(c)) return {};
  Coeffs r;
  r.reserve(a.size());
  for (const Value& v : a) r.push_back(F.mul(v, c));
  trim(F, r);
  return r;
}

Coeffs mul(const Field& F, const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (F.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (F.is_zero(b[j])) continue;
      r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
  }
  trim(F, r);
  return r;
}

Coeffs power(const Field& F, const Coeffs& a, unsigned e) {
  Coeffs r = constant(F, F.one());
  Coeffs b = a;
  while (e) {
    if (e & 1) r = mul(F, r, b);
    e >>= 1;
    if (e) b = mul(F, b, b);
  }
  return r;
}

void divmod(const Field& F, const Coeffs& a, const Coeffs& b, Coeffs* q, Coeffs* r) {
  if (b.empty()) throw DivisionByZero("polynomial division by zero");
  Coeffs rem = a;
  int db = degree(b);
  Coeffs quot;
  if (degree(rem) >= db) quot.assign(rem.size() - b.size() + 1, F.zero());
  Value linv = F.inv(b.back());
  bool monic = F.is_one(b.back());
  while (degree(rem) >= db) {
    std::size_t shift = rem.size() - b.size();
    Value c = monic ? rem.back() : F.mul(rem.back(), linv);
    quot[shift] = c;
    for (std::size_t j = 0; j + 1 < b.size(); ++j) {
      if (F.is_zero(b[j])) continue;
      rem[shift + j] = F.sub(rem[shift + j], F.mul(c, b[j]));
    }
    rem.pop_back();
    trim(F, rem);
  }
  trim(F, quot);
  if (q) *q = std::move(quot);
  if (r) *r = std::move(rem);
}

Coeffs rem(const Field& F, const Coeffs& a, const Coeffs& b) {
  if (degree(a) < degree(b)) return a;
  Coeffs r;
  divmod(F, a, b, nullptr, &r);
  return r;
}

Coeffs quo(const Field& F, const Coeffs& a, const Coeffs& b) {
  Coeffs q;
  divmod(F, a, b, &q, nullptr);
  return q;
}

Coeffs monic(const Field& F, const Coeffs& a) {
  if (a.empty() || F.is_one(a.back())) return a;
  return scale(F, a, F.inv(a.back()));
}

Coeffs gcd(const Field& F, const Coeffs& a, const Coeffs& b) {
  Coeffs u = a, v = b;
  while (!v.empty()) {
    Coeffs r = rem(F, u, v);
    u = std::move(v);
    v = std::move(r);
  }
  return monic(F, u);
}

Coeffs xgcd(const Field& F, const Coeffs& a, const Coeffs& b, Coeffs& s, Coeffs& t) {
  Coeffs r0 = a, r1 = b;
  Coeffs s0 = constant(F, F.one()), s1;
  Coeffs t0, t1 = constant(F, F.one());
  while (!r1.empty()) {
    Coeffs q, r;
    divmod(F, r0, r1, &q, &r);
    Coeffs s2 = sub(F, s0, mul(F, q, s1));
    Coeffs t2 = sub(F, t0, mul(F, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) {
    s.clear();
    t.clear();
    return r0;
  }
  Value l = F.inv(r0.back());
  s = scale(F, s0, l);
  t = scale(F, t0, l);
  return scale(F, r0, l);
}

Coeffs derivative(const Field& F, const Coeffs& a) {
  Coeffs r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(F.mul(F.from_int(static_cast<long>(i)), a[i]));
  trim(F, r);
  return r;
}

Value eval(const Field& F, const Coeffs& a, const Value& x) {
  Value r = F.zero();
  for (std::size_t i = a.size(); i-- > 0;) r = F.add(F.mul(r, x), a[i]);
  return r;
}

Coeffs compose(const Field& F, const Coeffs& a, const Coeffs& b) {
  Coeffs r;
  for (std::size_t i = a.size(); i-- > 0;) r = add(F, mul(F, r, b), constant(F, a[i]));
  return r;
}

Coeffs taylor_shift(const Field& F, const Coeffs& a, const Value& c) {
  if (F.is_zero(c)) return a;
  Coeffs r = a;
  std::size_t n = r.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j-- > i;) r[j] = F.add(r[j], F.mul(c, r[j + 1]));
  trim(F, r);
  return r;
}

Coeffs pow_mod(const Field& F, const Coeffs& a, const mpz_class& e, const Coeffs& m) {
  Coeffs r = rem(F, constant(F, F.one()), m);
  Coeffs b = rem(F, a, m);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return r;
  for (std::size_t i = bits; i-- > 0;) {
    r = rem(F, mul(F, r, r), m);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(F, mul(F, r, b), m);
  }
  return r;
}

Coeffs deflate(const Coeffs& a, std::size_t k) {
  Coeffs r;
  for (std::size_t i = 0; i < a.size(); i += k) r.push_back(a[i]);
  return r;
}

Coeffs inflate(const Field& F, const Coeffs& a, std::size_t k) {
  if (a.empty()) return {};
  Coeffs r((a.size() - 1) * k + 1, F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i * k] = a[i];
  return r;
}

Coeffs lift(const Field& to, const Field& from, const Coeffs& a) {
  Coeffs r;
  r.reserve(a.size());
  for (const Value& v : a) r.push_back(to.lift_from(from, v));
  trim(to, r);
  return r;
}

Coeffs interpolate(const Field& F, const Coeffs& xs, const Coeffs& ys) {
  std::size_t n = xs.size();
  Coeffs dd = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = F.div(F.sub(dd[i], dd[i - 1]), F.sub(xs[i], xs[i - j]));
      if (i == j) break;
    }
  Coeffs r;
  for (std::size_t i = n; i-- > 0;) {
    r = mul(F, r, Coeffs{F.neg(xs[i]), F.one()});
    r = add(F, r, constant(F, dd[i]));
  }
  return r;
}

}  // namespace upoly

UPoly::UPoly(FieldPtr f, Coeffs c) : f_(std::move(f)), c_(std::move(c)) { upoly::trim(*f_, c_); }

UPoly UPoly::x(FieldPtr f) {
  Coeffs c = upoly::x(*f);
  return UPoly(std::move(f), std::move(c));
}

UPoly UPoly::constant(FieldPtr f, const Value& v) {
  Coeffs c = upoly::constant(*f, v);
  return UPoly(std::move(f), std::move(c));
}

static void same(const UPoly& a, const UPoly& b) {
  if (a.field() != b.field()) throw TowerMismatch("polynomials over different fields");
}

UPoly UPoly::operator+(const UPoly& o) const {
  same(*this, o);
  return UPoly(f_, upoly::add(*f_, c_, o.c_));
}
UPoly UPoly::operator-(const UPoly& o) const {
  same(*this, o);
  return UPoly(f_, upoly::sub(*f_, c_, o.c_));
}
UPoly UPoly::operator*(const UPoly& o) const {
  same(*this, o);
  return UPoly(f_, upoly::mul(*f_, c_, o.c_));
}
UPoly UPoly::operator-() const { return UPoly(f_, upoly::neg(*f_, c_)); }
UPoly UPoly::monic() const { return UPoly(f_, upoly::monic(*f_, c_)); }
std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& o) const {
  same(*this, o);
  Coeffs q, r;
  upoly::divmod(*f_, c_, o.c_, &q, &r);
  return {UPoly(f_, std::move(q)), UPoly(f_, std::move(r))};
}
bool UPoly::operator==(const UPoly& o) const { return f_ == o.f_ && upoly::equal(*f_, c_, o.c_); }
std::string UPoly::str(const std::string& var) const { return upoly::render(*f_, c_, var); }

}  // namespace tgs
