#include "tgs/ideal/fiber.hpp"

#include <algorithm>
#include <map>

#include "tgs/error.hpp"

namespace tgs {

IdealPresentation fiber_ideal(const IdealPresentation& I, const std::vector<TowerElem>& point) {
  if (point.size() > I.vars.size()) throw InvalidArgument("point has more coordinates than the ring has variables");
  FieldPtr L = I.field;
  for (const auto& c : point)
    if (c.field() != I.field) L = c.field();
  std::vector<TowerElem> vals;
  for (const auto& c : point) vals.push_back(c.lift_to(L));
  IdealPresentation out{L, std::vector<std::string>(I.vars.begin() + static_cast<long>(point.size()), I.vars.end()), {}};
  for (const MPoly& g : I.gens) {
    MPoly s = substitute_prefix(g, vals, L);
    if (!s.is_zero()) out.gens.push_back(std::move(s));
  }
  return out;
}

FinitenessCheck finite_over_first_block(const IdealPresentation& I, std::size_t k) {
  const std::size_t n = I.vars.size();
  if (k > n) throw InvalidArgument("block larger than the ring");
  const std::size_t m = n - k;
  std::vector<std::size_t> perm(n);
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) {
    perm[i] = i < k ? m + i : i - k;
    names[perm[i]] = I.vars[i];
  }
  TermOrder ord = TermOrder::block(m);
  IdealPresentation P{I.field, names, {}};
  for (const MPoly& g : I.gens) P.gens.push_back(g.remap(perm, n, ord));
  GroebnerBasis gb = buchberger(P, ord);
  FinitenessCheck r{false, false, false, gb};
  bool constant_y = false;
  std::vector<bool> pure(m, false), pure_y(m, false);
  for (const Monomial& lm : gb.leading_monomials()) {
    int ydeg = 0;
    for (std::size_t j = 0; j < m; ++j) ydeg += lm[j];
    if (ydeg == 0) constant_y = true;
    for (std::size_t j = 0; j < m; ++j)
      if (lm[j] > 0 && lm[j] == ydeg) {
        pure_y[j] = true;
        if (mono_degree(lm) == ydeg) pure[j] = true;
      }
  }
  r.dominant = !constant_y;
  r.generically_finite = r.dominant && std::all_of(pure_y.begin(), pure_y.end(), [](bool b) { return b; });
  r.integral = std::all_of(pure.begin(), pure.end(), [](bool b) { return b; });
  return r;
}

GroebnerBasis point_ideal(const FieldPtr& K, const std::vector<std::string>& vars,
                          const std::vector<TowerElem>& coords) {
  const std::size_t n = vars.size();
  if (coords.size() != n) throw InvalidArgument("point dimension does not match the variables");
  FieldPtr L = K;
  for (const auto& c : coords)
    if (c.field() != K) L = c.field();
  if (!L->has_ancestor(*K)) throw TowerMismatch("point is not over the coefficient field");
  std::vector<TowerElem> z;
  for (const auto& c : coords) z.push_back(c.lift_to(L));
  const TermOrder ord = TermOrder::lex();
  const std::size_t dim = L->degree_over(*K);
  if (dim == 0) throw Unsupported("point is not algebraic over the coefficient field");

  RelationFinder rf(K, dim);
  std::vector<Monomial> added;
  std::vector<MPoly> basis;
  std::vector<Monomial> leads;
  auto cmp = [&](const Monomial& a, const Monomial& b) { return ord.compare(a, b) < 0; };
  std::map<Monomial, TowerElem, decltype(cmp)> todo(cmp);
  todo.emplace(Monomial(n, 0), TowerElem::integer(L, 1));
  while (!todo.empty()) {
    auto it = todo.begin();
    Monomial mono = it->first;
    TowerElem val = it->second;
    todo.erase(it);
    bool skip = false;
    for (const Monomial& lm : leads)
      if (divides(lm, mono)) skip = true;
    if (skip) continue;
    if (auto rel = rf.add(L->coords_over(*K, val.value()))) {
      std::vector<Term> terms;
      for (std::size_t i = 0; i < rel->size(); ++i)
        if (!K->is_zero((*rel)[i])) terms.push_back({i + 1 == rel->size() ? mono : added[i], (*rel)[i]});
      added.push_back(mono);
      basis.push_back(MPoly::from_terms(K, n, std::move(terms), ord).monic());
      leads.push_back(mono);
      continue;
    }
    added.push_back(mono);
    for (std::size_t i = 0; i < n; ++i) {
      Monomial next = mono;
      ++next[i];
      if (!todo.count(next)) todo.emplace(next, val * z[i]);
    }
  }
  std::sort(basis.begin(), basis.end(),
            [&](const MPoly& a, const MPoly& b) { return ord.compare(a.lead().mono, b.lead().mono) < 0; });
  return GroebnerBasis(K, vars, ord, std::move(basis));
}

}  // namespace tgs
