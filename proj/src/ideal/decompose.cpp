#include "tgs/ideal/decompose.hpp"

#include <set>

#include "tgs/algebra/factor.hpp"
#include "tgs/error.hpp"

namespace tgs {

namespace {

// Monic minimal polynomial of multiplication by m on the quotient.
Coeffs element_minpoly(const ArtinianQuotient& A, const Matrix& m) {
  RelationFinder rf(A.field(), A.dimension());
  Coeffs v = A.unit();
  for (;;) {
    if (auto rel = rf.add(v)) {
      upoly::trim(*A.field(), *rel);
      return *rel;
    }
    v = m.apply(v);
  }
}

MPoly poly_at(const Coeffs& q, const MPoly& l) {
  MPoly r(l.field(), l.nvars(), l.order());
  for (std::size_t i = q.size(); i-- > 0;)
    r = r * l + MPoly::constant(l.field(), l.nvars(), q[i], l.order());
  return r;
}

// Coefficient vectors for separating forms: coordinates first, then
// vectors over {0..b} with maximum entry b and at least two nonzero entries.
std::vector<std::vector<long>> candidate_forms(std::size_t n, std::size_t limit) {
  std::vector<std::vector<long>> out;
  for (std::size_t i = 0; i < n && out.size() < limit; ++i) {
    std::vector<long> e(n, 0);
    e[i] = 1;
    out.push_back(e);
  }
  if (n < 2) return out;
  for (long b = 1; out.size() < limit && b < 64; ++b) {
    std::vector<long> c(n, 0);
    for (;;) {
      long mx = 0;
      std::size_t nz = 0;
      for (long x : c) {
        mx = std::max(mx, x);
        nz += x != 0;
      }
      if (mx == b && nz >= 2 && c[0] != 0) out.push_back(c);
      if (out.size() >= limit) break;
      std::size_t k = n;
      while (k-- > 0) {
        if (c[k] < b) {
          ++c[k];
          break;
        }
        c[k] = 0;
      }
      if (k == static_cast<std::size_t>(-1)) break;
    }
  }
  return out;
}

}  // namespace

std::optional<LocalPoint> residue_point(const GroebnerBasis& gb) {
  const FieldPtr K = gb.field();
  const std::size_t n = gb.nvars();
  ArtinianQuotient A0(gb);
  LocalPoint pt;
  pt.local_dimension = A0.dimension();
  FieldPtr F = K;
  std::vector<TowerElem> coords;
  GroebnerBasis cur = gb;
  for (std::size_t i = 0; i < n; ++i) {
    ArtinianQuotient A(cur);
    Coeffs mu = element_minpoly(A, A.multiplication(0));
    auto fac = detail::factor(*F, mu);
    if (fac.size() != 1) return std::nullopt;
    const Coeffs& q = fac[0].first;
    FieldPtr G = F;
    TowerElem theta(F, F->zero());
    if (upoly::degree(q) == 1) {
      theta = TowerElem(F, F->neg(q[0]));
    } else {
      G = adjoin_root(F, fresh_name(*F, gb.vars()[i]), q);
      theta = TowerElem::generator(G);
    }
    for (auto& c : coords) c = c.lift_to(G);
    coords.push_back(theta.lift_to(G));
    if (i + 1 < n) {
      IdealPresentation next{G, std::vector<std::string>(gb.vars().begin() + static_cast<long>(i) + 1, gb.vars().end()), {}};
      for (const MPoly& g : cur.polys()) {
        MPoly s = substitute_prefix(g, {coords.back()}, G);
        if (!s.is_zero()) next.gens.push_back(std::move(s));
      }
      cur = buchberger(next);
    }
    F = G;
  }
  pt.residue = F;
  pt.coords = std::move(coords);
  std::size_t r = F->degree_over(*K);
  if (pt.local_dimension % r != 0) throw Unsupported("residue degree does not divide the local dimension");
  pt.length = pt.local_dimension / r;
  return pt;
}

std::vector<LocalPoint> decompose_zero_dim(const ArtinianQuotient& A, const DecomposeOptions& opt) {
  const FieldPtr& K = A.field();
  const GroebnerBasis& gb = A.gb();
  const std::size_t n = gb.nvars();
  if (A.dimension() == 0) return {};
  if (n == 0) {
    LocalPoint pt{K, {}, 1, 1, gb.polys()};
    return {pt};
  }
  std::set<std::vector<std::uint64_t>> tried;
  for (const auto& c : candidate_forms(n, opt.max_forms)) {
    if (K->characteristic() != 0) {
      std::vector<std::uint64_t> red;
      bool nonzero = false;
      for (long x : c) {
        red.push_back(static_cast<std::uint64_t>(x) % K->characteristic());
        nonzero |= red.back() != 0;
      }
      if (!nonzero || !tried.insert(red).second) continue;
    }
    MPoly l(K, n, gb.order());
    Matrix Ml(K, A.dimension(), A.dimension());
    for (std::size_t i = 0; i < n; ++i) {
      if (!c[i]) continue;
      Value ci = K->from_int(c[i]);
      l = l + MPoly::variable(K, n, i, gb.order()).scaled(ci);
      Ml = Ml + A.multiplication(i).scaled(ci);
    }
    Coeffs mu = element_minpoly(A, Ml);
    auto fac = detail::factor(*K, mu);
    std::vector<LocalPoint> out;
    std::size_t total = 0;
    bool ok = true;
    for (auto& [q, e] : fac) {
      MPoly ql = gb.reduce(poly_at(q, l).pow(static_cast<unsigned>(e)));
      IdealPresentation J{K, gb.vars(), gb.polys()};
      J.gens.push_back(ql);
      GroebnerBasis Jg = buchberger(J, gb.order());
      auto pt = residue_point(Jg);
      if (!pt) {
        ok = false;
        break;
      }
      pt->primary = Jg.polys();
      total += pt->local_dimension;
      out.push_back(std::move(*pt));
    }
    if (!ok) continue;
    if (total != A.dimension()) throw Unsupported("local blocks do not add up to the quotient dimension");
    return out;
  }
  throw SeparatingFormNotFound("no separating linear form among " + std::to_string(opt.max_forms) +
                               " candidates for " + gb.str());
}

}  // namespace tgs
