// Factorization of squarefree polynomials over Q: modular factorization,
// linear Hensel lifting and exhaustive recombination.

#include <algorithm>

#include "tgs/algebra/factor.hpp"
#include "tgs/error.hpp"

namespace tgs::detail {

namespace {

using ZPoly = std::vector<mpz_class>;  // constant term first

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int zdeg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

void zmod(ZPoly& a, const mpz_class& m) {
  for (auto& c : a) {
    c %= m;
    if (c < 0) c += m;
  }
  ztrim(a);
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  zmod(r, m);
  return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  ztrim(r);
  return r;
}

mpz_class inv_mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t())) throw DivisionByZero("no modular inverse");
  return r;
}

// Division by a monic polynomial modulo m.
void zdivmod_monic(const ZPoly& a, const ZPoly& b, const mpz_class& m, ZPoly& q, ZPoly& r) {
  r = a;
  zmod(r, m);
  q.clear();
  if (zdeg(r) < zdeg(b)) return;
  q.assign(r.size() - b.size() + 1, 0);
  while (zdeg(r) >= zdeg(b)) {
    std::size_t shift = r.size() - b.size();
    mpz_class c = r.back();
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
    zmod(r, m);
  }
  zmod(q, m);
}

ZPoly from_field(const Coeffs& c) {
  ZPoly r;
  for (const Value& v : c) r.push_back(mpz_class(static_cast<unsigned long>(v.residue())));
  return r;
}

Coeffs to_field(const Field& F, const ZPoly& a) {
  Coeffs r;
  for (const mpz_class& c : a) r.push_back(F.from_integer(c));
  upoly::trim(F, r);
  return r;
}

struct Lifted {
  ZPoly g, h;
};

// F = g h mod p^k from F = g0 h0 mod p, with F monic modulo p^k.
Lifted hensel_pair(const ZPoly& F, const ZPoly& g0, const ZPoly& h0, std::uint64_t p, unsigned k) {
  const FieldPtr Fp = prime_field(p);
  Coeffs s, t;
  upoly::xgcd(*Fp, to_field(*Fp, g0), to_field(*Fp, h0), s, t);
  ZPoly zs = from_field(s), zt = from_field(t);
  mpz_class pm(static_cast<unsigned long>(p));
  mpz_class pj = pm;
  ZPoly g = g0, h = h0;
  for (unsigned j = 1; j < k; ++j) {
    mpz_class pj1 = pj * pm;
    ZPoly e = zsub(F, zmul(g, h, pj1));
    zmod(e, pj1);
    for (auto& c : e) c /= pj;
    ZPoly q, sig, tmp;
    zdivmod_monic(zmul(e, zs, pm), h0, pm, q, sig);
    ZPoly tau = zmul(e, zt, pm);
    ZPoly qg = zmul(q, g0, pm);
    tau.resize(std::max(tau.size(), qg.size()), 0);
    for (std::size_t i = 0; i < qg.size(); ++i) tau[i] += qg[i];
    zmod(tau, pm);
    h.resize(std::max(h.size(), sig.size()), 0);
    for (std::size_t i = 0; i < sig.size(); ++i) h[i] += pj * sig[i];
    g.resize(std::max(g.size(), tau.size()), 0);
    for (std::size_t i = 0; i < tau.size(); ++i) g[i] += pj * tau[i];
    zmod(g, pj1);
    zmod(h, pj1);
    pj = pj1;
  }
  return {g, h};
}

std::vector<ZPoly> hensel_multi(const ZPoly& F, const std::vector<ZPoly>& facs, std::size_t from, std::uint64_t p,
                                unsigned k) {
  if (from + 1 == facs.size()) return {F};
  mpz_class pm(static_cast<unsigned long>(p));
  ZPoly h0{1};
  for (std::size_t i = from + 1; i < facs.size(); ++i) h0 = zmul(h0, facs[i], pm);
  Lifted l = hensel_pair(F, facs[from], h0, p, k);
  std::vector<ZPoly> out{l.g};
  auto rest = hensel_multi(l.h, facs, from + 1, p, k);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

mpz_class content(const ZPoly& a) {
  mpz_class g = 0;
  for (const auto& c : a) g = gcd(g, c);
  return g;
}

ZPoly symmetric(ZPoly a, const mpz_class& m) {
  mpz_class half = m / 2;
  for (auto& c : a) {
    c %= m;
    if (c < 0) c += m;
    if (c > half) c -= m;
  }
  ztrim(a);
  return a;
}

// Exact division over Z; nullopt if b does not divide a.
std::optional<ZPoly> zdivide(const ZPoly& a, const ZPoly& b) {
  ZPoly r = a;
  if (zdeg(r) < zdeg(b)) return std::nullopt;
  ZPoly q(r.size() - b.size() + 1, 0);
  while (zdeg(r) >= zdeg(b) && !r.empty()) {
    std::size_t shift = r.size() - b.size();
    if (!mpz_divisible_p(r.back().get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    mpz_class c = r.back() / b.back();
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
    ztrim(r);
  }
  if (!r.empty()) return std::nullopt;
  ztrim(q);
  return q;
}

}  // namespace

std::vector<Coeffs> factor_rational_squarefree(const Coeffs& f) {
  const FieldPtr Q = rationals();
  mpz_class den = 1;
  for (const Value& v : f) den = lcm(den, v.rational().get_den());
  ZPoly F;
  for (const Value& v : f) F.push_back(v.rational().get_num() * (den / v.rational().get_den()));
  mpz_class ct = content(F);
  for (auto& c : F) c /= ct;
  const int n = zdeg(F);

  // Prefer the prime with the fewest modular factors among a few candidates.
  std::uint64_t best_p = 0;
  std::vector<ZPoly> best;
  int tried = 0;
  for (std::uint64_t p = 3; tried < 4 && p < 100000; p += 2) {
    if (!is_prime(p)) continue;
    mpz_class pm(static_cast<unsigned long>(p));
    if (mpz_divisible_p(F.back().get_mpz_t(), pm.get_mpz_t())) continue;
    const FieldPtr Fp = prime_field(p);
    Coeffs fp = to_field(*Fp, F);
    if (upoly::degree(upoly::gcd(*Fp, fp, upoly::derivative(*Fp, fp))) > 0) continue;
    ++tried;
    std::vector<ZPoly> facs;
    for (auto& [g, e] : factor(*Fp, fp)) facs.push_back(from_field(g));
    if (best_p == 0 || facs.size() < best.size()) {
      best_p = p;
      best = std::move(facs);
    }
    if (best.size() == 1) break;
  }
  if (best_p == 0) throw Unsupported("no suitable prime for modular factorization");
  if (best.size() == 1) return {f};

  mpz_class lc = F.back();
  mpz_class alc = abs(lc);
  mpz_class norm2 = 0;
  for (const auto& c : F) norm2 += c * c;
  mpz_class bound = sqrt(norm2) + 1;
  bound <<= static_cast<unsigned>(n);
  bound *= alc * 2;
  mpz_class pm(static_cast<unsigned long>(best_p));
  unsigned k = 1;
  mpz_class pk = pm;
  while (pk <= bound) {
    pk *= pm;
    ++k;
  }
  ZPoly Fm = F;
  mpz_class lcinv = inv_mod(lc, pk);
  for (auto& c : Fm) c *= lcinv;
  zmod(Fm, pk);
  std::vector<ZPoly> lifted = hensel_multi(Fm, best, 0, best_p, k);

  std::vector<std::size_t> remaining(lifted.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  ZPoly cur = F;
  std::vector<ZPoly> found;
  std::size_t s = 1;
  while (2 * s <= remaining.size()) {
    bool hit = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    bool done = false;
    while (!done) {
      ZPoly cand{cur.back()};
      for (std::size_t i : idx) cand = zmul(cand, lifted[remaining[i]], pk);
      cand = symmetric(cand, pk);
      mpz_class cc = content(cand);
      for (auto& c : cand) c /= cc;
      if (auto q = zdivide(cur, cand)) {
        found.push_back(cand);
        cur = *q;
        for (std::size_t i = s; i-- > 0;) remaining.erase(remaining.begin() + static_cast<long>(idx[i]));
        hit = true;
        break;
      }
      // next combination
      std::size_t m = remaining.size();
      std::size_t i = s;
      for (;;) {
        if (i == 0) {
          done = true;
          break;
        }
        --i;
        if (idx[i] < m - s + i) {
          ++idx[i];
          for (std::size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
          break;
        }
      }
    }
    if (!hit) ++s;
  }
  found.push_back(cur);
  std::vector<Coeffs> out;
  for (const ZPoly& z : found) {
    Coeffs c;
    for (const auto& v : z) c.push_back(Value(mpq_class(v)));
    out.push_back(upoly::monic(*Q, c));
  }
  return out;
}

}  // namespace tgs::detail
