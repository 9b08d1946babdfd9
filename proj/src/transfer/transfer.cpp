#include "tgs/transfer/transfer.hpp"

#include "tgs/error.hpp"
#include "tgs/sym/pushforward.hpp"

namespace tgs {

namespace {

using Kind = GroupPlugin::Factor::Kind;

std::vector<TowerElem> lifted(const std::vector<TowerElem>& v, const FieldPtr& L) {
  std::vector<TowerElem> out;
  for (const auto& x : v) out.push_back(x.lift_to(L));
  return out;
}

TowerElem value_at(const MPoly& f, const std::vector<TowerElem>& pt, const FieldPtr& L) {
  if (pt.empty()) return TowerElem(L, L->lift_from(*f.field(), f.is_zero() ? f.field()->zero() : f.lead().coef));
  return evaluate(f, pt);
}

/// q^* g at a point with coordinates in L, checked to be a point of G.
GroupPoint point_value(const GroupPlugin& G, const std::vector<MPoly>& g, const std::vector<TowerElem>& pt,
                       const FieldPtr& L) {
  GroupPoint v;
  for (std::size_t k = 0; k < G.arity(); ++k) {
    TowerElem x = value_at(g[k], pt, L);
    const auto& f = G.factors()[k];
    if (f.kind != Kind::Ga && x.is_zero())
      throw NotInvertibleAtPoint("factor " + std::to_string(k + 1) + " vanishes at a point of the cycle");
    if (f.kind == Kind::Mu && !x.pow(static_cast<long>(f.n)).is_one())
      throw InvalidArgument("function is not a point of mu_" + std::to_string(f.n));
    v.push_back(x);
  }
  return v;
}

void check_arity(const GroupPlugin& G, const std::vector<MPoly>& g, const AffineVariety& Y) {
  if (g.size() != G.arity())
    throw InvalidArgument("plugin " + G.str() + " takes " + std::to_string(G.arity()) + " functions, got " +
                          std::to_string(g.size()));
  for (const MPoly& f : g)
    if (f.nvars() != Y.nvars() || f.field() != Y.base())
      throw InvalidArgument("function is not in the coordinate ring of " + Y.name());
}

}  // namespace

TransferResult transfer(const GenericCycle& c, const GroupPlugin& G, const std::vector<MPoly>& g,
                        const VarietyPtr& source, const TransferOptions& opt) {
  check_arity(G, g, *c.target);
  TransferResult r;
  r.value = group_identity(G, c.base);
  for (const auto& p : c.points) {
    GroupPoint v = point_value(G, g, lifted(p.coords, p.field), p.field);
    GroupPoint pushed;
    for (std::size_t k = 0; k < G.arity(); ++k) {
      auto [tr, nm] = trace_and_norm(v[k], c.base);
      pushed.push_back(G.factors()[k].kind == Kind::Ga ? tr : nm);
    }
    if (p.field->degree_over(*c.base) <= opt.max_degree) {
      FiniteFreeAlgebra B = FiniteFreeAlgebra::from_extension(p.field, c.base);
      AlgebraPoint ap;
      for (const auto& x : v) ap.push_back(p.field->coords_over(*c.base, x.value()));
      if (!group_equal(pushforward(B, G, ap), pushed))
        throw CrossCheckFailed("symmetric power pushforward disagrees with norm and trace at " + point_str(v));
      ++r.crosschecked;
    } else {
      ++r.skipped;
    }
    r.value = group_add(G, r.value, group_scale(G, pushed, p.multiplicity));
  }
  for (std::size_t k = 0; k < G.arity(); ++k) {
    const auto& f = G.factors()[k];
    if (f.kind == Kind::Mu && !r.value[k].pow(static_cast<long>(f.n)).is_one())
      throw CrossCheckFailed("transfer left mu_" + std::to_string(f.n));
    r.regular.push_back(source && source->integral() ? source->regular_function(r.value[k]) : std::nullopt);
  }
  return r;
}

TransferResult transfer(const Correspondence& a, const GroupPlugin& G, const std::vector<MPoly>& g,
                        const TransferOptions& opt) {
  return transfer(generic_fiber(a), G, g, a.source(), opt);
}

FunctorialityReport functoriality_check(const Correspondence& a, const Correspondence& b, const GroupPlugin& G,
                                        const std::vector<MPoly>& g, const TransferOptions& opt) {
  FunctorialityReport r;
  TransferResult bg = transfer(b, G, g, opt);
  for (std::size_t k = 0; k < G.arity(); ++k) {
    if (!bg.regular[k])
      throw NotRegularizable(b.name() + "^* of the function is " + bg.value[k].str() + ", not regular on " +
                             b.source()->name());
    r.intermediate.push_back(*bg.regular[k]);
  }
  r.lhs = transfer(a, G, r.intermediate, opt).value;
  r.rhs = transfer(compose(a, b), G, g, a.source(), opt).value;
  r.equal = group_equal(r.lhs, r.rhs);
  return r;
}

RadicialDatum radicial_datum(const Correspondence& V) {
  if (V.components().size() != 1 || V.components()[0].multiplicity != 1)
    throw InvalidArgument(V.name() + " is not a single reduced component");
  GenericCycle c = generic_fiber(V);
  const FieldPtr& K = c.base;
  const FieldPtr& L = c.points[0].field;
  const std::uint64_t p = K->characteristic();
  for (const Field* node : L->chain()) {
    if (node == K.get() || !node->has_ancestor(*K)) continue;
    // t^(p^e) - a
    const Coeffs& m = node->minpoly();
    const Field& P = *node->parent();
    std::size_t d = m.size() - 1, q = 1;
    while (p > 1 && q < d) q *= p;
    bool binomial = p > 1 && q == d;
    for (std::size_t i = 1; binomial && i < d; ++i) binomial = P.is_zero(m[i]);
    if (!binomial) throw InvalidArgument(V.name() + " is not radicial: step " + node->name() + " is not purely inseparable");
  }
  return RadicialDatum{V, K, L, L->degree_over(*K), lifted(c.points[0].coords, L)};
}

RadicialResult radicial_transfer(const RadicialDatum& V, const GroupPlugin& G, const std::vector<MPoly>& g) {
  check_arity(G, g, *V.V.target());
  GroupPoint v = point_value(G, g, V.q, V.L);
  RadicialResult r;
  GroupPoint dq = group_scale(G, v, static_cast<long>(V.degree));
  for (const auto& x : dq) r.h.push_back(x.descend_to(V.K));
  r.pullback_identity = group_equal(lift_point(r.h, V.L), dq);
  r.matches_transfer = group_equal(transfer(V.V, G, g).value, r.h);
  return r;
}

std::vector<std::size_t> characterization_probe(const std::vector<ProbeEntry>& entries) {
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    if (!group_equal(radicial_transfer(*e.datum, e.plugin, e.g).h, e.claimed)) bad.push_back(i);
  }
  return bad;
}

std::optional<bool> dominant_injectivity_check(const AffineVariety& Y, const MPoly& g, const MPoly& h) {
  if (!(Y.generic_value(g) == Y.generic_value(h))) return std::nullopt;
  return Y.normal_form(g - h).is_zero();
}

std::optional<bool> specialization_check(const Correspondence& a, const GroupPlugin& G, const std::vector<MPoly>& g,
                                         const std::vector<Value>& point) {
  const auto& X = a.source();
  const FieldPtr& K = a.base();
  std::vector<TowerElem> c;
  for (const auto& v : point) c.push_back(TowerElem(K, v));
  if (!X->contains_point(c)) throw InvalidArgument("point does not lie on " + X->name());
  TransferResult t = transfer(a, G, g);
  GroupPoint special;
  for (const auto& v : t.value) {
    auto [num, den] = X->fraction(v);
    TowerElem d = value_at(den, c, K);
    if (d.is_zero()) return std::nullopt;
    special.push_back(value_at(num, c, K) / d);
  }
  auto pt = std::make_shared<const AffineVariety>("pt", K, std::vector<std::string>{}, std::vector<MPoly>{});
  std::vector<MPoly> images;
  for (const auto& v : point) images.push_back(MPoly::constant(K, 0, v));
  try {
    GenericCycle s = compose(Correspondence::graph("at", pt, X, images), a);
    return group_equal(transfer(s, G, g).value, special);
  } catch (const NonFlatFiber&) {
    return std::nullopt;
  } catch (const NotInvertibleAtPoint&) {
    return std::nullopt;
  }
}

}  // namespace tgs
