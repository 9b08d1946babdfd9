#include "tgs/ideal/groebner.hpp"

#include <algorithm>

#include "tgs/error.hpp"

namespace tgs {

MPoly normal_form(const MPoly& f, const std::vector<MPoly>& g) {
  const Field& F = *f.field();
  MPoly p = f;
  MPoly r(f.field(), f.nvars(), f.order());
  while (!p.is_zero()) {
    const Term& lt = p.lead();
    const MPoly* div = nullptr;
    for (const MPoly& h : g)
      if (divides(h.lead().mono, lt.mono)) {
        div = &h;
        break;
      }
    if (div) {
      Value c = F.div(lt.coef, div->lead().coef);
      Monomial m = mono_div(lt.mono, div->lead().mono);
      p = p.sub_mul(c, m, *div);
    } else {
      r.push_smallest(lt);
      p.pop_lead();
    }
  }
  return r;
}

namespace {

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

MPoly spoly(const MPoly& a, const MPoly& b, const Monomial& lcm) {
  const Field& F = *a.field();
  MPoly x = a.mul_term(mono_div(lcm, a.lead().mono), F.inv(a.lead().coef));
  return x.sub_mul(F.inv(b.lead().coef), mono_div(lcm, b.lead().mono), b);
}

}  // namespace

GroebnerBasis::GroebnerBasis(FieldPtr f, std::vector<std::string> vars, TermOrder order, std::vector<MPoly> polys)
    : f_(std::move(f)), vars_(std::move(vars)), order_(order), polys_(std::move(polys)) {}

MPoly GroebnerBasis::reduce(const MPoly& f) const {
  MPoly g = f.order() == order_ ? f : f.with_order(order_);
  return normal_form(g, polys_);
}

bool GroebnerBasis::is_unit() const { return polys_.size() == 1 && polys_[0].is_constant(); }

bool GroebnerBasis::is_zero_dimensional() const {
  if (is_unit()) return true;
  for (std::size_t v = 0; v < vars_.size(); ++v) {
    bool found = false;
    for (const MPoly& p : polys_) {
      const Monomial& m = p.lead().mono;
      if (m[v] > 0 && mono_degree(m) == m[v]) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const MPoly& p : polys_) out.push_back(p.lead().mono);
  return out;
}

std::string GroebnerBasis::str() const {
  std::string s;
  for (const MPoly& p : polys_) {
    if (!s.empty()) s += ", ";
    s += p.str(vars_);
  }
  return s;
}

bool GroebnerBasis::operator==(const GroebnerBasis& o) const {
  if (f_ != o.f_ || !(order_ == o.order_) || polys_.size() != o.polys_.size()) return false;
  for (std::size_t i = 0; i < polys_.size(); ++i)
    if (!(polys_[i] == o.polys_[i])) return false;
  return true;
}

GroebnerBasis buchberger(const IdealPresentation& I, TermOrder order) {
  const FieldPtr& K = I.field;
  const std::size_t n = I.vars.size();
  std::vector<MPoly> all;
  std::vector<std::size_t> active;
  std::vector<Pair> pairs;

  auto current = [&]() {
    std::vector<MPoly> g;
    for (std::size_t a : active) g.push_back(all[a]);
    return g;
  };
  auto unit = [&]() {
    return GroebnerBasis(K, I.vars, order, {MPoly::constant(K, n, K->one(), order)});
  };

  // Gebauer-Moeller update with the new element h.
  auto update = [&](std::size_t h) {
    const Monomial& Lh = all[h].lead().mono;
    std::vector<std::size_t> C = active;
    std::vector<std::size_t> D;
    std::vector<Monomial> lcmC;
    for (std::size_t g : C) lcmC.push_back(mono_lcm(Lh, all[g].lead().mono));
    std::vector<bool> gone(C.size(), false);
    for (std::size_t a = 0; a < C.size(); ++a) {
      gone[a] = true;
      bool keep = coprime(Lh, all[C[a]].lead().mono);
      if (!keep) {
        keep = true;
        for (std::size_t b = 0; b < C.size() && keep; ++b)
          if (!gone[b] && divides(lcmC[b], lcmC[a])) keep = false;
        for (std::size_t d : D)
          if (keep && divides(mono_lcm(Lh, all[d].lead().mono), lcmC[a])) keep = false;
      }
      if (keep) D.push_back(C[a]);
    }
    std::vector<Pair> E;
    for (std::size_t d : D)
      if (!coprime(Lh, all[d].lead().mono)) E.push_back({d, h, mono_lcm(Lh, all[d].lead().mono)});
    std::vector<Pair> B;
    for (Pair& p : pairs) {
      bool drop = divides(Lh, p.lcm) && mono_lcm(all[p.i].lead().mono, Lh) != p.lcm &&
                  mono_lcm(Lh, all[p.j].lead().mono) != p.lcm;
      if (!drop) B.push_back(std::move(p));
    }
    for (Pair& p : E) B.push_back(std::move(p));
    pairs = std::move(B);
    std::vector<std::size_t> G;
    for (std::size_t g : active)
      if (!divides(Lh, all[g].lead().mono)) G.push_back(g);
    G.push_back(h);
    active = std::move(G);
  };

  auto insert = [&](MPoly r) -> bool {
    if (r.is_zero()) return true;
    if (r.is_constant()) return false;
    all.push_back(r.monic());
    update(all.size() - 1);
    return true;
  };

  for (const MPoly& g0 : I.gens) {
    if (g0.field() != K) throw TowerMismatch("generator over a different field");
    MPoly g = g0.order() == order ? g0 : g0.with_order(order);
    if (!insert(normal_form(g, current()))) return unit();
  }
  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      int db = mono_degree(pairs[best].lcm), dk = mono_degree(pairs[k].lcm);
      if (dk < db || (dk == db && order.compare(pairs[k].lcm, pairs[best].lcm) < 0)) best = k;
    }
    Pair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<long>(best));
    MPoly s = spoly(all[p.i], all[p.j], p.lcm);
    if (!insert(normal_form(s, current()))) return unit();
  }

  std::vector<MPoly> g = current();
  std::vector<MPoly> minimal;
  for (std::size_t a = 0; a < g.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < g.size() && !redundant; ++b) {
      if (a == b) continue;
      const Monomial& la = g[a].lead().mono;
      const Monomial& lb = g[b].lead().mono;
      if (divides(lb, la) && (la != lb || b < a)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[a]);
  }
  std::vector<MPoly> reduced;
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<MPoly> others;
    for (std::size_t b = 0; b < minimal.size(); ++b)
      if (b != a) others.push_back(minimal[b]);
    reduced.push_back(normal_form(minimal[a], others).monic());
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const MPoly& x, const MPoly& y) { return order.compare(x.lead().mono, y.lead().mono) < 0; });
  return GroebnerBasis(K, I.vars, order, std::move(reduced));
}

GroebnerBasis ideal_intersection(const GroebnerBasis& I, const GroebnerBasis& J) {
  if (I.field() != J.field() || I.vars() != J.vars()) throw TowerMismatch("intersection of ideals in different rings");
  const FieldPtr& K = I.field();
  const std::size_t n = I.nvars();
  std::vector<std::size_t> shift(n);
  for (std::size_t i = 0; i < n; ++i) shift[i] = i + 1;
  const TermOrder elim = TermOrder::block(1);
  MPoly t = MPoly::variable(K, n + 1, 0, elim);
  MPoly one_minus_t = MPoly::constant(K, n + 1, K->one(), elim) - t;
  IdealPresentation P{K, {"_t"}, {}};
  for (const auto& v : I.vars()) P.vars.push_back(v);
  for (const MPoly& f : I.polys()) P.gens.push_back(t * f.remap(shift, n + 1, elim));
  for (const MPoly& g : J.polys()) P.gens.push_back(one_minus_t * g.remap(shift, n + 1, elim));
  GroebnerBasis G = buchberger(P, elim);
  std::vector<std::size_t> back(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) back[i] = i - 1;
  IdealPresentation out{K, I.vars(), {}};
  for (const MPoly& g : G.polys())
    if (g.degree_in(0) == 0) out.gens.push_back(g.remap(back, n, I.order()));
  return buchberger(out, I.order());
}

}  // namespace tgs
