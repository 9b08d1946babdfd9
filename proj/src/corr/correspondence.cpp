#include "tgs/corr/correspondence.hpp"

#include <algorithm>
#include <map>

#include "tgs/error.hpp"
#include "tgs/ideal/fiber.hpp"
#include "tgs/ideal/quotient.hpp"

namespace tgs {

namespace {

std::vector<std::size_t> shifted(std::size_t n, std::size_t by) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i + by;
  return p;
}

bool same_variety(const VarietyPtr& a, const VarietyPtr& b) {
  return a == b || (a->base() == b->base() && a->vars() == b->vars() && a->gb() == b->gb());
}

/// Substitutes coordinates (lifted to L) for the leading variables.
IdealPresentation fiber_over(const IdealPresentation& I, const std::vector<TowerElem>& point, const FieldPtr& L) {
  std::vector<TowerElem> vals;
  for (const auto& c : point) vals.push_back(c.lift_to(L));
  IdealPresentation out{L, std::vector<std::string>(I.vars.begin() + static_cast<long>(point.size()), I.vars.end()), {}};
  for (const MPoly& g : I.gens) {
    MPoly s = substitute_prefix(g, vals, L);
    if (!s.is_zero()) out.gens.push_back(std::move(s));
  }
  return out;
}

struct FiberPoints {
  std::size_t dimension = 0;
  std::vector<LocalPoint> points;
};

/// Points of a fiber ideal with lengths.  Throws NotZeroDimensional.
FiberPoints fiber_points(const IdealPresentation& F) {
  GroebnerBasis gb = buchberger(F);
  FiberPoints r;
  if (gb.is_unit()) return r;
  ArtinianQuotient A(gb);
  r.dimension = A.dimension();
  if (F.vars.empty()) {
    r.points.push_back(LocalPoint{F.field, {}, 1, 1, {}});
    return r;
  }
  r.points = decompose_zero_dim(A);
  for (auto& p : r.points)
    for (auto& c : p.coords) c = c.lift_to(p.residue);
  return r;
}

/// Generic fiber of component i over K(X), with lengths.
FiberPoints generic_points(const Correspondence& a, std::size_t i) {
  const auto& M = a.source()->model();
  return fiber_points(fiber_over(a.component_ideal(i), M.coords, M.field));
}

std::vector<std::size_t> generic_degrees(const Correspondence& b) {
  std::vector<std::size_t> d;
  for (std::size_t j = 0; j < b.components().size(); ++j) {
    FiberPoints g = generic_points(b, j);
    std::size_t s = 0;
    for (const auto& p : g.points) s += p.length * p.residue->degree_over(*b.source()->model().field);
    d.push_back(s);
  }
  return d;
}

Pullback pullback_impl(const Correspondence& b, const std::vector<TowerElem>& y, const FieldPtr& L,
                       const std::vector<std::size_t>* degrees) {
  const auto& Y = *b.source();
  if (y.size() != Y.nvars()) throw InvalidArgument("point has the wrong number of coordinates for " + Y.name());
  std::vector<TowerElem> pt;
  for (const auto& c : y) pt.push_back(c.lift_to(L));
  if (!Y.contains_point(pt)) throw InvalidArgument("point does not lie on " + Y.name());
  Pullback r;
  for (std::size_t j = 0; j < b.components().size(); ++j) {
    FiberPoints f;
    try {
      f = fiber_points(fiber_over(b.component_ideal(j), pt, L));
    } catch (const NotZeroDimensional&) {
      throw NonFlatFiber("component " + std::to_string(j + 1) + " of " + b.name() + " has a positive-dimensional fiber");
    }
    if (degrees && (*degrees)[j] != f.dimension)
      throw NonFlatFiber("component " + std::to_string(j + 1) + " of " + b.name() + " has a fiber of dimension " +
                         std::to_string(f.dimension) + " but generic degree " + std::to_string((*degrees)[j]));
    std::size_t acc = 0;
    for (auto& p : f.points) {
      acc += p.length * p.residue->degree_over(*L);
      r.points.push_back(
          {p.residue, std::move(p.coords), p.length, b.components()[j].multiplicity * static_cast<long>(p.length)});
    }
    r.fiber_dimension.push_back(f.dimension);
    r.accounted.push_back(acc);
  }
  return r;
}

}  // namespace

Correspondence::Correspondence(std::string name, VarietyPtr X, VarietyPtr Y, std::vector<Component> components)
    : name_(std::move(name)), X_(std::move(X)), Y_(std::move(Y)), comps_(std::move(components)) {
  if (X_->base() != Y_->base()) throw TowerMismatch("source and target of " + name_ + " have different base fields");
  for (const auto& v : Y_->vars())
    if (std::find(X_->vars().begin(), X_->vars().end(), v) != X_->vars().end())
      throw InvalidArgument("variable " + v + " is shared by source and target of " + name_);
  vars_ = X_->vars();
  vars_.insert(vars_.end(), Y_->vars().begin(), Y_->vars().end());
  for (const auto& c : comps_)
    for (const MPoly& g : c.gens) {
      if (g.nvars() != vars_.size()) throw InvalidArgument("component generator in the wrong ring");
      if (g.field() != base()) throw TowerMismatch("component generator over the wrong field");
    }
}

Correspondence Correspondence::graph(std::string name, VarietyPtr X, VarietyPtr Y, const std::vector<MPoly>& images) {
  const std::size_t nx = X->nvars(), ny = Y->nvars();
  if (images.size() != ny) throw InvalidArgument("graph needs one image per target coordinate");
  Component c;
  for (std::size_t j = 0; j < ny; ++j) {
    MPoly f = images[j].remap(shifted(nx, 0), nx + ny, TermOrder::degrevlex());
    c.gens.push_back(MPoly::variable(X->base(), nx + ny, nx + j) - f);
  }
  return Correspondence(std::move(name), std::move(X), std::move(Y), {c});
}

Correspondence Correspondence::identity(std::string name, VarietyPtr X, VarietyPtr copy) {
  std::vector<MPoly> images;
  for (std::size_t i = 0; i < X->nvars(); ++i) images.push_back(MPoly::variable(X->base(), X->nvars(), i));
  return graph(std::move(name), std::move(X), std::move(copy), images);
}

IdealPresentation Correspondence::component_ideal(std::size_t i) const {
  const std::size_t nx = X_->nvars(), n = vars_.size();
  IdealPresentation I{base(), vars_, comps_.at(i).gens};
  for (const MPoly& g : X_->ideal()) I.gens.push_back(g.remap(shifted(nx, 0), n, TermOrder::degrevlex()));
  for (const MPoly& g : Y_->ideal()) I.gens.push_back(g.remap(shifted(Y_->nvars(), nx), n, TermOrder::degrevlex()));
  return I;
}

Correspondence Correspondence::scaled(long m) const {
  auto c = comps_;
  for (auto& x : c) x.multiplicity *= m;
  return Correspondence(name_, X_, Y_, std::move(c));
}

Correspondence Correspondence::operator+(const Correspondence& o) const {
  if (!same_variety(X_, o.X_) || !same_variety(Y_, o.Y_))
    throw InvalidArgument("cannot add correspondences between different varieties");
  auto c = comps_;
  c.insert(c.end(), o.comps_.begin(), o.comps_.end());
  return Correspondence(name_ + "+" + o.name_, X_, Y_, std::move(c));
}

std::string Correspondence::describe() const {
  std::string s = name_ + " : " + X_->name() + " -> " + Y_->name() + " =";
  if (comps_.empty()) return s + " 0";
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    s += i ? " + " : " ";
    s += std::to_string(comps_[i].multiplicity) + "*[";
    for (std::size_t k = 0; k < comps_[i].gens.size(); ++k) {
      if (k) s += ", ";
      s += comps_[i].gens[k].str(vars_);
    }
    s += "]";
  }
  return s;
}

ValidationReport validate(const Correspondence& a) {
  ValidationReport r;
  const auto& X = *a.source();
  if (!X.integral()) throw InvalidComponent(X.name() + " has no function field model: " + X.model_error());
  for (std::size_t i = 0; i < a.components().size(); ++i) {
    const std::string tag = "component " + std::to_string(i + 1);
    IdealPresentation I = a.component_ideal(i);
    FinitenessCheck fc = finite_over_first_block(I, X.nvars());
    if (fc.gb.is_unit()) throw InvalidComponent(tag + " is empty");
    if (!fc.integral) throw InvalidComponent(tag + " is not finite over " + X.name());
    FiberPoints g;
    try {
      g = generic_points(a, i);
    } catch (const NotZeroDimensional&) {
      throw InvalidComponent(tag + " is not finite over " + X.name());
    }
    if (g.points.empty()) throw InvalidComponent(tag + " is not dominant over " + X.name());
    if (g.points.size() != 1 || g.points[0].length != 1)
      throw InvalidComponent(tag + " is not integral: its generic fiber has " + std::to_string(g.points.size()) +
                             " points and dimension " + std::to_string(g.dimension));
    r.components.push_back(tag + ": finite over " + X.name() + ", generic degree " + std::to_string(g.dimension));
  }
  r.unverified.push_back("flatness away from the generic point of " + X.name());
  return r;
}

GenericCycle generic_fiber(const Correspondence& a) {
  GenericCycle c{a.source()->model().field, a.target(), {}};
  for (std::size_t i = 0; i < a.components().size(); ++i) {
    FiberPoints g = generic_points(a, i);
    if (g.points.size() != 1 || g.points[0].length != 1)
      throw NonIntegralComponent("generic fiber of component " + std::to_string(i + 1) + " of " + a.name() + " has " +
                                 std::to_string(g.points.size()) + " points and dimension " +
                                 std::to_string(g.dimension));
    c.points.push_back({g.points[0].residue, std::move(g.points[0].coords), a.components()[i].multiplicity});
  }
  return c;
}

long degree(const GenericCycle& c) {
  long d = 0;
  for (const auto& p : c.points) d += p.multiplicity * static_cast<long>(p.field->degree_over(*c.base));
  return d;
}

long degree(const Correspondence& a) { return degree(generic_fiber(a)); }

bool on_target(const GenericCycle& c) {
  for (const auto& p : c.points)
    for (const MPoly& g : c.target->ideal()) {
      std::vector<TowerElem> pt;
      for (const auto& z : p.coords) pt.push_back(z.lift_to(p.field));
      if (pt.empty()) {
        if (!g.is_zero()) return false;
        continue;
      }
      if (!evaluate(g, pt).is_zero()) return false;
    }
  return true;
}

Pullback pullback_along_point(const Correspondence& b, const std::vector<TowerElem>& y, const FieldPtr& L) {
  std::vector<std::size_t> d;
  if (b.source()->integral()) d = generic_degrees(b);
  return pullback_impl(b, y, L, b.source()->integral() ? &d : nullptr);
}

GenericCycle compose(const GenericCycle& a, const Correspondence& b) {
  if (!same_variety(a.target, b.source())) throw InvalidArgument(b.name() + " does not start where the cycle ends");
  std::vector<std::size_t> d;
  if (b.source()->integral()) d = generic_degrees(b);
  GenericCycle out{a.base, b.target(), {}};
  for (const auto& p : a.points) {
    Pullback pb = pullback_impl(b, p.coords, p.field, b.source()->integral() ? &d : nullptr);
    for (auto& q : pb.points) out.points.push_back({q.field, std::move(q.coords), p.multiplicity * q.multiplicity});
  }
  return out;
}

GenericCycle compose(const Correspondence& a, const Correspondence& b) { return compose(generic_fiber(a), b); }

GenericCycle scaled(const GenericCycle& c, long m) {
  GenericCycle r = c;
  for (auto& p : r.points) p.multiplicity *= m;
  return r;
}

GenericCycle sum(const GenericCycle& a, const GenericCycle& b) {
  if (a.base != b.base || !same_variety(a.target, b.target)) throw InvalidArgument("cycles live in different places");
  GenericCycle r = a;
  r.points.insert(r.points.end(), b.points.begin(), b.points.end());
  return r;
}

std::vector<NormalPoint> normalize(const GenericCycle& c) {
  std::map<std::string, NormalPoint> acc;
  for (const auto& p : c.points) {
    if (p.multiplicity == 0) continue;
    std::vector<TowerElem> z;
    for (const auto& x : p.coords) z.push_back(x.lift_to(p.field));
    GroebnerBasis gb = point_ideal(c.base, c.target->vars(), z);
    std::size_t deg = ArtinianQuotient(gb).dimension();
    long w = p.multiplicity * static_cast<long>(p.field->degree_over(*c.base) / deg);
    std::string key = gb.str();
    auto it = acc.find(key);
    if (it == acc.end())
      acc.emplace(key, NormalPoint{gb, key, w, deg});
    else
      it->second.multiplicity += w;
  }
  std::vector<NormalPoint> out;
  for (auto& [k, v] : acc)
    if (v.multiplicity != 0) out.push_back(std::move(v));
  return out;
}

bool same_cycle(const GenericCycle& a, const GenericCycle& b) {
  if (a.base != b.base) return false;
  auto x = normalize(a), y = normalize(b);
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i].key != y[i].key || x[i].multiplicity != y[i].multiplicity) return false;
  return true;
}

std::string describe(const GenericCycle& c) {
  auto n = normalize(c);
  if (n.empty()) return "0";
  std::string s;
  for (const auto& p : n) {
    if (!s.empty()) s += " + ";
    s += std::to_string(p.multiplicity) + "*[" + p.key + "]";
  }
  return s;
}

Correspondence closure(const GenericCycle& c, VarietyPtr source, std::string name) {
  const auto& X = *source;
  if (X.model().field != c.base) throw InvalidArgument("cycle is not over the function field of " + X.name());
  const FieldPtr& K = X.base();
  const std::size_t nx = X.nvars(), nz = c.target->nvars(), n = nx + nz;
  const TermOrder elim = TermOrder::block(1);
  std::vector<Component> comps;
  for (const NormalPoint& p : normalize(c)) {
    std::vector<MPoly> cleared;
    MPoly D = MPoly::constant(K, nx, K->one());
    for (const MPoly& g : p.ideal.polys()) {
      // g = sum of (num_t / den_t) z^m_t; clear denominators term by term
      MPoly num(K, n), den = MPoly::constant(K, nx, K->one());
      for (const Term& t : g.terms()) {
        auto [a, b] = X.fraction(TowerElem(c.base, t.coef));
        Monomial m(n, 0);
        std::copy(t.mono.begin(), t.mono.end(), m.begin() + static_cast<long>(nx));
        MPoly zm = MPoly::monomial(K, m, K->one());
        MPoly a_up = a.remap(shifted(nx, 0), n, TermOrder::degrevlex());
        if (b == den) {
          num = num + a_up * zm;
        } else {
          num = num * b.remap(shifted(nx, 0), n, TermOrder::degrevlex()) +
                a_up * den.remap(shifted(nx, 0), n, TermOrder::degrevlex()) * zm;
          den = den * b;
        }
      }
      cleared.push_back(num);
      D = X.normal_form(D * den);
    }
    IdealPresentation S{K, {"_s"}, {}};
    for (const auto& v : X.vars()) S.vars.push_back(v);
    for (const auto& v : c.target->vars()) S.vars.push_back(v);
    for (const MPoly& g : cleared) S.gens.push_back(g.remap(shifted(n, 1), n + 1, elim));
    for (const MPoly& g : X.ideal()) S.gens.push_back(g.remap(shifted(nx, 1), n + 1, elim));
    S.gens.push_back(MPoly::constant(K, n + 1, K->one(), elim) -
                     MPoly::variable(K, n + 1, 0, elim) * D.remap(shifted(nx, 1), n + 1, elim));
    GroebnerBasis G = buchberger(S, elim);
    std::vector<std::size_t> back(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) back[i] = i - 1;
    Component comp;
    comp.multiplicity = p.multiplicity;
    for (const MPoly& g : G.polys())
      if (g.degree_in(0) == 0) comp.gens.push_back(g.remap(back, n, TermOrder::degrevlex()));
    comps.push_back(std::move(comp));
  }
  return Correspondence(std::move(name), std::move(source), c.target, std::move(comps));
}

bool associativity_check(const Correspondence& a, const Correspondence& b, const Correspondence& c) {
  GenericCycle right = compose(compose(a, b), c);
  Correspondence cb = closure(compose(b, c), b.source(), c.name() + "o" + b.name());
  GenericCycle left = compose(a, cb);
  return same_cycle(left, right);
}

bool graph_substitution_check(const VarietyPtr& X, const std::vector<MPoly>& images, const Correspondence& b) {
  Correspondence f = Correspondence::graph("f", X, b.source(), images);
  GenericCycle direct = compose(f, b);
  const std::size_t nx = X->nvars(), nz = b.target()->nvars();
  const std::size_t n = nx + nz;
  std::vector<MPoly> subst;
  for (const MPoly& im : images) subst.push_back(im.remap(shifted(nx, 0), n, TermOrder::degrevlex()));
  for (std::size_t k = 0; k < nz; ++k) subst.push_back(MPoly::variable(X->base(), n, nx + k));
  const auto& M = X->model();
  GenericCycle sub{M.field, b.target(), {}};
  for (std::size_t j = 0; j < b.components().size(); ++j) {
    IdealPresentation I{X->base(), {}, {}};
    for (const auto& v : X->vars()) I.vars.push_back(v);
    for (const auto& v : b.target()->vars()) I.vars.push_back(v);
    for (const MPoly& g : b.components()[j].gens) I.gens.push_back(substitute(g, subst));
    for (const MPoly& g : X->ideal()) I.gens.push_back(g.remap(shifted(nx, 0), n, TermOrder::degrevlex()));
    for (const MPoly& g : b.target()->ideal()) I.gens.push_back(g.remap(shifted(nz, nx), n, TermOrder::degrevlex()));
    FiberPoints fp = fiber_points(fiber_over(I, M.coords, M.field));
    for (auto& p : fp.points)
      sub.points.push_back({p.residue, std::move(p.coords), b.components()[j].multiplicity * static_cast<long>(p.length)});
  }
  return same_cycle(direct, sub);
}

}  // namespace tgs
