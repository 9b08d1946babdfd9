#include "tgs/algebra/factor.hpp"

#include <algorithm>

#include "tgs/algebra/tower_elem.hpp"
#include "tgs/error.hpp"

namespace tgs {
namespace detail {

namespace {

using upoly::degree;
using Biv = std::vector<Coeffs>;  // index = degree in x, entry = polynomial in t

void sort_merge(const Field& F, RawFactors& fs) {
  RawFactors out;
  for (auto& [c, e] : fs) {
    bool found = false;
    for (auto& [d, m] : out)
      if (upoly::equal(F, c, d)) {
        m += e;
        found = true;
        break;
      }
    if (!found) out.emplace_back(c, e);
  }
  std::vector<std::pair<std::string, std::size_t>> keys;
  for (std::size_t i = 0; i < out.size(); ++i) keys.emplace_back(upoly::render(F, out[i].first, "x"), i);
  std::sort(keys.begin(), keys.end(), [&](const auto& a, const auto& b) {
    int da = degree(out[a.second].first), db = degree(out[b.second].first);
    if (da != db) return da < db;
    return a.first < b.first;
  });
  RawFactors sorted;
  for (auto& k : keys) sorted.push_back(out[k.second]);
  fs = std::move(sorted);
}

std::optional<Coeffs> coeff_roots(const Field& F, const Coeffs& h) {
  Coeffs r;
  for (const Value& c : h) {
    auto v = F.pth_root(c);
    if (!v) return std::nullopt;
    r.push_back(*v);
  }
  upoly::trim(F, r);
  return r;
}

std::vector<Coeffs> factor_squarefree(const Field& F, const Coeffs& f);

// Over P(t): if f specializes at some t = c to a squarefree polynomial of the
// same degree, the discriminant of f is nonzero.  False means "not shown".
bool squarefree_by_specialization(const Field& F, const Coeffs& f) {
  if (F.kind() != Field::Kind::Transcendental) return false;
  const Field& P = *F.parent();
  for (std::uint64_t j = 1, tried = 0; tried < 6; ++j) {
    auto c = P.nth_element(j);
    if (!c) return false;
    Coeffs s;
    bool ok = true;
    for (const Value& v : f) {
      Value d = upoly::eval(P, v.frac().den, *c);
      if (P.is_zero(d)) {
        ok = false;
        break;
      }
      s.push_back(P.div(upoly::eval(P, v.frac().num, *c), d));
    }
    if (!ok) continue;
    ++tried;
    upoly::trim(P, s);
    if (degree(s) != degree(f)) continue;
    Coeffs ds = upoly::derivative(P, s);
    if (!ds.empty() && degree(upoly::gcd(P, s, ds)) == 0) return true;
  }
  return false;
}

bool is_squarefree(const Field& F, const Coeffs& f) {
  if (squarefree_by_specialization(F, f)) return true;
  Coeffs df = upoly::derivative(F, f);
  return !df.empty() && degree(upoly::gcd(F, f, df)) == 0;
}

// ---------------------------------------------------------------- finite

void equal_degree_split(const Field& F, const Coeffs& g, int d, const mpz_class& q, std::mt19937_64& rng,
                        std::vector<Coeffs>& out) {
  if (degree(g) == d) {
    out.push_back(g);
    return;
  }
  const bool even = F.characteristic() == 2;
  mpz_class qd;
  mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d));
  mpz_class e = (qd - 1) / 2;
  std::size_t k = mpz_sizeinbase(q.get_mpz_t(), 2) - 1;
  Coeffs one = upoly::constant(F, F.one());
  for (;;) {
    Coeffs a;
    for (int i = 0; i < degree(g); ++i) a.push_back(F.random(rng, 4));
    upoly::trim(F, a);
    if (degree(a) < 1) continue;
    Coeffs b;
    if (!even) {
      b = upoly::sub(F, upoly::pow_mod(F, a, e, g), one);
    } else {
      Coeffs c = a;
      b = a;
      for (std::size_t j = 1; j < k * static_cast<std::size_t>(d); ++j) {
        c = upoly::rem(F, upoly::mul(F, c, c), g);
        b = upoly::add(F, b, c);
      }
    }
    Coeffs h = upoly::gcd(F, g, b);
    if (degree(h) > 0 && degree(h) < degree(g)) {
      equal_degree_split(F, h, d, q, rng, out);
      equal_degree_split(F, upoly::quo(F, g, h), d, q, rng, out);
      return;
    }
  }
}

std::vector<Coeffs> cantor_zassenhaus(const Field& F, const Coeffs& f) {
  mpz_class q = *F.cardinality();
  std::mt19937_64 rng(0x7a55e7ULL);
  std::vector<std::pair<Coeffs, int>> parts;
  Coeffs X = upoly::x(F);
  Coeffs rest = f;
  Coeffs h = upoly::rem(F, X, rest);
  int i = 0;
  while (2 * (i + 1) <= degree(rest)) {
    ++i;
    h = upoly::pow_mod(F, h, q, rest);
    Coeffs g = upoly::gcd(F, rest, upoly::sub(F, h, X));
    if (degree(g) > 0) {
      parts.emplace_back(g, i);
      rest = upoly::quo(F, rest, g);
      h = upoly::rem(F, h, rest);
    }
  }
  if (degree(rest) > 0) parts.emplace_back(rest, degree(rest));
  std::vector<Coeffs> out;
  for (auto& [g, d] : parts) equal_degree_split(F, g, d, q, rng, out);
  return out;
}

// ---------------------------------------------------------------- Trager

Coeffs norm_poly(const Field& L, const Coeffs& g) {
  const Field& P = *L.parent();
  std::size_t D = L.degree() * static_cast<std::size_t>(degree(g));
  Coeffs xs, ys;
  for (std::uint64_t j = 0; xs.size() <= D; ++j) {
    auto a = P.nth_element(j);
    if (!a) throw Unsupported("not enough interpolation points in " + P.describe());
    Value v = upoly::eval(L, g, L.lift_from(P, *a));
    xs.push_back(*a);
    ys.push_back(determinant(multiplication_matrix(TowerElem(L.ptr(), v), L.parent())));
  }
  return upoly::interpolate(P, xs, ys);
}

std::vector<Coeffs> trager(const Field& L, const Coeffs& f) {
  if (!L.separable_step())
    throw Unsupported("factorization over the inseparable step " + L.name() + " of " + L.describe());
  const Field& P = *L.parent();
  Value theta = L.generator();
  for (std::uint64_t si = 0;; ++si) {
    auto s = P.nth_element(si);
    if (!s) throw Unsupported("no squarefree norm over " + L.describe());
    Value c = L.neg(L.mul(L.lift_from(P, *s), theta));
    Coeffs g = upoly::taylor_shift(L, f, c);
    Coeffs R = norm_poly(L, g);
    if (!is_squarefree(P, R)) continue;
    RawFactors fac = factor(P, R);
    if (fac.size() == 1) return {f};
    std::vector<Coeffs> out;
    for (auto& [h, e] : fac) {
      Coeffs d = upoly::gcd(L, g, upoly::lift(L, P, h));
      out.push_back(upoly::monic(L, upoly::taylor_shift(L, d, L.neg(c))));
    }
    return out;
  }
}

// ------------------------------------------------------ rational functions

Coeffs trunc(Coeffs a, std::size_t k) {
  if (a.size() > k) a.resize(k);
  return a;
}

Coeffs series_inverse(const Field& P, const Coeffs& a, std::size_t k) {
  Value a0inv = P.inv(a[0]);
  Coeffs b(k, P.zero());
  b[0] = a0inv;
  for (std::size_t j = 1; j < k; ++j) {
    Value s = P.zero();
    for (std::size_t i = 1; i <= j && i < a.size(); ++i) s = P.add(s, P.mul(a[i], b[j - i]));
    b[j] = P.neg(P.mul(s, a0inv));
  }
  upoly::trim(P, b);
  return b;
}

void biv_trim(Biv& a) {
  while (!a.empty() && a.back().empty()) a.pop_back();
}

Biv biv_mul(const Field& P, const Biv& a, const Biv& b, std::size_t k) {
  if (a.empty() || b.empty()) return {};
  Biv r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!a[i].empty() && !b[j].empty())
        r[i + j] = trunc(upoly::add(P, r[i + j], trunc(upoly::mul(P, a[i], b[j]), k)), k);
  for (auto& c : r) upoly::trim(P, c);
  biv_trim(r);
  return r;
}

Biv biv_const(const Coeffs& u) {
  Biv r;
  for (const Value& v : u) r.push_back(Coeffs{v});
  return r;
}

Coeffs biv_coeff_at(const Field& P, const Biv& a, std::size_t j) {
  Coeffs r;
  for (const Coeffs& c : a) r.push_back(j < c.size() ? c[j] : P.zero());
  upoly::trim(P, r);
  return r;
}

void biv_add_shifted(const Field& P, Biv& a, const Coeffs& u, std::size_t j) {
  if (a.size() < u.size()) a.resize(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (P.is_zero(u[i])) continue;
    Coeffs mono(j + 1, P.zero());
    mono[j] = u[i];
    a[i] = upoly::add(P, a[i], mono);
  }
  biv_trim(a);
}

std::pair<Biv, Biv> lift_pair(const Field& P, const Biv& T, const Coeffs& G0, const Coeffs& H0, std::size_t k) {
  Coeffs s, t;
  upoly::xgcd(P, G0, H0, s, t);
  Biv G = biv_const(G0), H = biv_const(H0);
  for (std::size_t j = 1; j < k; ++j) {
    Biv GH = biv_mul(P, G, H, j + 1);
    Coeffs E = upoly::sub(P, biv_coeff_at(P, T, j), biv_coeff_at(P, GH, j));
    if (E.empty()) continue;
    Coeffs q, sig;
    upoly::divmod(P, upoly::mul(P, E, s), H0, &q, &sig);
    Coeffs tau = upoly::add(P, upoly::mul(P, E, t), upoly::mul(P, q, G0));
    biv_add_shifted(P, H, sig, j);
    biv_add_shifted(P, G, tau, j);
  }
  return {G, H};
}

std::vector<Biv> multi_lift(const Field& P, const Biv& T, const std::vector<Coeffs>& facs, std::size_t from,
                            std::size_t k) {
  if (from + 1 == facs.size()) return {T};
  Coeffs H0 = upoly::constant(P, P.one());
  for (std::size_t i = from + 1; i < facs.size(); ++i) H0 = upoly::mul(P, H0, facs[i]);
  auto [G, H] = lift_pair(P, T, facs[from], H0, k);
  std::vector<Biv> out{G};
  auto rest = multi_lift(P, H, facs, from + 1, k);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

Coeffs to_function_field(const Field& F, const Biv& a) {
  const Field& P = *F.parent();
  Coeffs r;
  for (const Coeffs& c : a) r.push_back(Value(FracRep{c, upoly::constant(P, P.one())}));
  upoly::trim(F, r);
  return r;
}

Biv primitive(const Field& P, Biv a) {
  Coeffs g;
  for (const Coeffs& c : a) g = upoly::gcd(P, g, c);
  if (degree(g) > 0)
    for (Coeffs& c : a)
      if (!c.empty()) c = upoly::quo(P, c, g);
  return a;
}

void next_combination(std::vector<std::size_t>& idx, std::size_t n, bool& done) {
  std::size_t s = idx.size();
  for (std::size_t i = s; i-- > 0;) {
    if (idx[i] < n - s + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
      return;
    }
  }
  done = true;
}

std::vector<Coeffs> hensel_function_field(const Field& F, const Coeffs& f) {
  const Field& P = *F.parent();
  Coeffs den = upoly::constant(P, P.one());
  for (const Value& v : f) {
    const Coeffs& d = v.frac().den;
    den = upoly::quo(P, upoly::mul(P, den, d), upoly::gcd(P, den, d));
  }
  Biv A;
  for (const Value& v : f) A.push_back(upoly::mul(P, v.frac().num, upoly::quo(P, den, v.frac().den)));
  A = primitive(P, A);
  const std::size_t N = A.size() - 1;

  Value c;
  Coeffs B0;
  for (std::uint64_t i = 0;; ++i) {
    auto ci = P.nth_element(i);
    if (!ci) throw Unsupported("no good specialization point over " + P.describe());
    if (P.is_zero(upoly::eval(P, A[N], *ci))) continue;
    Coeffs u;
    for (const Coeffs& a : A) u.push_back(upoly::eval(P, a, *ci));
    upoly::trim(P, u);
    if (degree(upoly::gcd(P, u, upoly::derivative(P, u))) > 0) continue;
    c = *ci;
    B0 = upoly::monic(P, u);
    break;
  }
  RawFactors fac = factor(P, B0);
  if (fac.size() == 1) return {f};
  std::vector<Coeffs> facs;
  for (auto& [g, e] : fac) facs.push_back(g);

  Biv B;
  std::size_t degt = 0;
  for (const Coeffs& a : A) {
    B.push_back(upoly::taylor_shift(P, a, c));
    degt = std::max<std::size_t>(degt, a.size());
  }
  const std::size_t k = degt + 1;
  Coeffs lcinv = series_inverse(P, B[N], k);
  Biv T;
  for (const Coeffs& b : B) T.push_back(trunc(upoly::mul(P, b, lcinv), k));
  for (auto& t : T) upoly::trim(P, t);
  std::vector<Biv> lifted = multi_lift(P, T, facs, 0, k);

  std::vector<std::size_t> remaining(lifted.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  Biv cur = B;
  std::vector<Biv> found;
  std::size_t s = 1;
  while (2 * s <= remaining.size()) {
    bool hit = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    bool done = false;
    while (!done) {
      Biv cand{cur.back()};
      for (std::size_t i : idx) cand = biv_mul(P, cand, lifted[remaining[i]], k);
      cand = primitive(P, cand);
      Coeffs q, r;
      upoly::divmod(F, to_function_field(F, cur), to_function_field(F, cand), &q, &r);
      if (r.empty()) {
        found.push_back(cand);
        Biv nc;
        for (const Value& v : q) nc.push_back(v.frac().num);
        cur = nc;
        for (std::size_t i = s; i-- > 0;) remaining.erase(remaining.begin() + static_cast<long>(idx[i]));
        hit = true;
        break;
      }
      next_combination(idx, remaining.size(), done);
    }
    if (!hit) ++s;
  }
  found.push_back(cur);
  std::vector<Coeffs> out;
  Value negc = P.neg(c);
  for (Biv& b : found) {
    for (Coeffs& coef : b) coef = upoly::taylor_shift(P, coef, negc);
    out.push_back(upoly::monic(F, to_function_field(F, b)));
  }
  return out;
}

std::vector<Coeffs> factor_squarefree(const Field& F, const Coeffs& f) {
  if (degree(f) <= 1) return {f};
  if (F.is_finite()) return cantor_zassenhaus(F, f);
  switch (F.kind()) {
    case Field::Kind::Rational:
      return factor_rational_squarefree(f);
    case Field::Kind::Algebraic:
      return trager(F, f);
    case Field::Kind::Transcendental:
      return hensel_function_field(F, f);
    default:
      throw Unsupported("factorization over " + F.describe());
  }
}

}  // namespace

RawFactors factor(const Field& F, const Coeffs& f0) {
  Coeffs f = upoly::monic(F, f0);
  if (degree(f) < 1) return {};
  if (degree(f) == 1) return {{f, 1}};
  RawFactors out;
  Coeffs df = upoly::derivative(F, f);
  if (df.empty()) {
    const int p = static_cast<int>(F.characteristic());
    Coeffs h = upoly::deflate(f, static_cast<std::size_t>(p));
    if (auto root = coeff_roots(F, h)) {
      for (auto& [g, e] : factor(F, *root)) out.emplace_back(g, e * p);
    } else {
      for (auto& [g, e] : factor(F, h)) {
        if (auto r = coeff_roots(F, g))
          out.emplace_back(*r, e * p);
        else
          out.emplace_back(upoly::inflate(F, g, static_cast<std::size_t>(p)), e);
      }
    }
    sort_merge(F, out);
    return out;
  }
  if (squarefree_by_specialization(F, f)) {
    for (Coeffs& q : factor_squarefree(F, f)) out.emplace_back(upoly::monic(F, q), 1);
    sort_merge(F, out);
    return out;
  }
  Coeffs c = upoly::gcd(F, f, df);
  Coeffs w = upoly::quo(F, f, c);
  int i = 1;
  while (degree(w) > 0) {
    Coeffs y = upoly::gcd(F, w, c);
    Coeffs z = upoly::quo(F, w, y);
    if (degree(z) > 0)
      for (Coeffs& q : factor_squarefree(F, z)) out.emplace_back(upoly::monic(F, q), i);
    ++i;
    w = std::move(y);
    c = upoly::quo(F, c, w);
  }
  if (degree(c) > 0)
    for (auto& fe : factor(F, c)) out.push_back(fe);
  sort_merge(F, out);
  return out;
}

}  // namespace detail

Factorization univ_factor(const UPoly& f) {
  if (f.is_zero()) throw InvalidArgument("factorization of the zero polynomial");
  Factorization out;
  for (auto& [g, e] : detail::factor(*f.field(), f.coeffs())) out.emplace_back(UPoly(f.field(), g), e);
  return out;
}

bool is_irreducible(const UPoly& f) {
  if (f.degree() < 1) return false;
  auto fs = univ_factor(f);
  return fs.size() == 1 && fs[0].second == 1;
}

FieldPtr adjoin_checked(const FieldPtr& base, std::string name, Coeffs minpoly) {
  UPoly m(base, minpoly);
  if (!is_irreducible(m))
    throw InvalidArgument("minimal polynomial " + m.str(name) + " is reducible over " + base->describe());
  return adjoin_root(base, std::move(name), std::move(minpoly));
}

}  // namespace tgs
