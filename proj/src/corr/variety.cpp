#include "tgs/corr/variety.hpp"

#include <algorithm>
#include <functional>

#include "tgs/error.hpp"
#include "tgs/ideal/decompose.hpp"
#include "tgs/ideal/fiber.hpp"
#include "tgs/ideal/quotient.hpp"

namespace tgs {

namespace {

// First subset (in lexicographic order of index lists) of the largest size
// that supports no leading monomial.
std::vector<std::size_t> maximal_independent_set(const GroebnerBasis& gb) {
  const std::size_t n = gb.nvars();
  auto lms = gb.leading_monomials();
  for (std::size_t k = n + 1; k-- > 0;) {
    std::vector<std::size_t> S(k);
    for (std::size_t i = 0; i < k; ++i) S[i] = i;
    for (;;) {
      std::vector<bool> in(n, false);
      for (std::size_t s : S) in[s] = true;
      bool ok = true;
      for (const Monomial& m : lms) {
        bool inside = true;
        for (std::size_t v = 0; v < n; ++v)
          if (m[v] > 0 && !in[v]) inside = false;
        if (inside) {
          ok = false;
          break;
        }
      }
      if (ok) return S;
      std::size_t i = k;
      while (i-- > 0 && S[i] == n - k + i) {
      }
      if (i == static_cast<std::size_t>(-1)) break;
      ++S[i];
      for (std::size_t j = i + 1; j < k; ++j) S[j] = S[j - 1] + 1;
    }
  }
  return {};
}

using Frac = std::pair<MPoly, MPoly>;

Frac add_frac(const Frac& a, const Frac& b) {
  if (a.second == b.second) return {a.first + b.first, a.second};
  return {a.first * b.second + b.first * a.second, a.second * b.second};
}

using GeneratorVars = std::vector<std::pair<const Field*, std::size_t>>;

/// v in F (a tower over K whose steps are listed in `gens`) as num / den in
/// K[x_0, ..., x_{n-1}].
Frac to_fraction(const FieldPtr& K, std::size_t n, const GeneratorVars& gens, const Field& F, const Value& v) {
  const MPoly one = MPoly::constant(K, n, K->one());
  if (&F == K.get()) return {MPoly::constant(K, n, v), one};
  std::size_t var = n;
  for (const auto& [nd, i] : gens)
    if (nd == &F) var = i;
  if (var == n) throw Unsupported("tower step " + F.name() + " does not correspond to a coordinate");
  const Field& P = *F.parent();
  MPoly x = MPoly::variable(K, n, var);
  auto poly = [&](const Coeffs& c) {
    Frac acc{MPoly(K, n), one};
    MPoly xp = one;
    for (const Value& cj : c) {
      Frac t = to_fraction(K, n, gens, P, cj);
      acc = add_frac(acc, {t.first * xp, t.second});
      xp = xp * x;
    }
    return acc;
  };
  if (F.kind() == Field::Kind::Transcendental) {
    Frac nu = poly(v.frac().num), de = poly(v.frac().den);
    return {nu.first * de.second, nu.second * de.first};
  }
  return poly(v.coeffs());
}

}  // namespace

AffineVariety::AffineVariety(std::string name, FieldPtr K, std::vector<std::string> vars, std::vector<MPoly> ideal)
    : name_(std::move(name)),
      K_(std::move(K)),
      vars_(std::move(vars)),
      gens_(std::move(ideal)),
      gb_(buchberger(IdealPresentation{K_, vars_, gens_})) {
  if (gb_.is_unit()) throw InvalidArgument("variety " + name_ + " is empty");
  const std::size_t n = vars_.size();
  std::vector<std::size_t> S = maximal_independent_set(gb_);
  dim_ = S.size();
  std::vector<std::size_t> R;
  for (std::size_t v = 0; v < n; ++v)
    if (std::find(S.begin(), S.end(), v) == S.end()) R.push_back(v);

  FunctionFieldModel m;
  m.transcendental = S;
  FieldPtr T = K_;
  for (std::size_t s : S) {
    T = adjoin_transcendental(T, fresh_name(*T, vars_[s]));
    m.generator_vars.emplace_back(T.get(), s);
  }
  std::vector<TowerElem> tcoords;
  for (const auto& [node, s] : m.generator_vars) tcoords.push_back(TowerElem(node->ptr(), node->generator()).lift_to(T));

  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < S.size(); ++i) perm[S[i]] = i;
  for (std::size_t i = 0; i < R.size(); ++i) perm[R[i]] = S.size() + i;
  IdealPresentation fiber{T, {}, {}};
  for (std::size_t r : R) fiber.vars.push_back(vars_[r]);
  for (const MPoly& g : gens_) {
    MPoly s = substitute_prefix(g.remap(perm, n, TermOrder::degrevlex()), tcoords, T);
    if (!s.is_zero()) fiber.gens.push_back(std::move(s));
  }
  FieldPtr F = T;
  std::vector<TowerElem> rcoords;
  if (R.empty()) {
    if (!fiber.gens.empty()) {
      model_error_ = "generic point of " + name_ + " is empty";
      return;
    }
  } else {
    GroebnerBasis fg = buchberger(fiber);
    if (fg.is_unit() || !fg.is_zero_dimensional()) {
      model_error_ = "generic fiber of " + name_ + " is not a point";
      return;
    }
    auto pts = decompose_zero_dim(ArtinianQuotient(fg));
    if (pts.size() != 1 || pts[0].length != 1) {
      model_error_ = name_ + " is not integral: its generic point splits into " + std::to_string(pts.size()) +
                     " points of lengths";
      for (const auto& p : pts) model_error_ += " " + std::to_string(p.length);
      return;
    }
    // the ideal must be the whole kernel of K[x] -> K(X): clear the
    // denominators of the generic fiber and saturate
    std::vector<MPoly> cleared;
    MPoly D = MPoly::constant(K_, n, K_->one());
    for (const MPoly& g : fg.polys()) {
      Frac acc{MPoly(K_, n), MPoly::constant(K_, n, K_->one())};
      for (const Term& t : g.terms()) {
        Frac c = to_fraction(K_, n, m.generator_vars, *T, t.coef);
        Monomial mono(n, 0);
        for (std::size_t i = 0; i < R.size(); ++i) mono[R[i]] = t.mono[i];
        acc = add_frac(acc, {c.first * MPoly::monomial(K_, mono, K_->one()), c.second});
      }
      cleared.push_back(acc.first);
      D = gb_.reduce(D * acc.second);
    }
    if (!saturation_within(cleared, D)) {
      model_error_ = name_ + " is not integral: its ideal is not prime";
      return;
    }
    F = pts[0].residue;
    rcoords = pts[0].coords;
    std::vector<const Field*> chain = F->chain();
    for (const Field* node : chain) {
      if (!node->has_ancestor(*T) || node == T.get()) continue;
      TowerElem gen = TowerElem(node->ptr(), node->generator()).lift_to(F);
      for (std::size_t i = 0; i < R.size(); ++i)
        if (rcoords[i] == gen) {
          m.generator_vars.emplace_back(node, R[i]);
          break;
        }
    }
  }
  m.field = F;
  m.coords.assign(n, TowerElem(F, F->zero()));
  for (std::size_t i = 0; i < S.size(); ++i) m.coords[S[i]] = tcoords[i].lift_to(F);
  for (std::size_t i = 0; i < R.size(); ++i) m.coords[R[i]] = rcoords[i].lift_to(F);
  model_ = std::move(m);
}

bool AffineVariety::saturation_within(const std::vector<MPoly>& polys, const MPoly& D) const {
  const std::size_t n = nvars();
  const TermOrder ord = TermOrder::block(1);
  std::vector<std::size_t> shift(n);
  for (std::size_t i = 0; i < n; ++i) shift[i] = i + 1;
  IdealPresentation J{K_, {"_s"}, {}};
  for (const auto& v : vars_) J.vars.push_back(v);
  for (const MPoly& g : gens_) J.gens.push_back(g.remap(shift, n + 1, ord));
  for (const MPoly& g : polys) J.gens.push_back(g.remap(shift, n + 1, ord));
  J.gens.push_back(MPoly::constant(K_, n + 1, K_->one(), ord) -
                   MPoly::variable(K_, n + 1, 0, ord) * D.remap(shift, n + 1, ord));
  std::vector<std::size_t> back(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) back[i + 1] = i;
  GroebnerBasis G = buchberger(J, ord);
  for (const MPoly& g : G.polys())
    if (g.degree_in(0) == 0 && !gb_.contains(g.remap(back, n, TermOrder::degrevlex()))) return false;
  return true;
}

const FunctionFieldModel& AffineVariety::model() const {
  if (!model_) throw InvalidArgument(model_error_);
  return *model_;
}

TowerElem AffineVariety::generic_value(const MPoly& f) const {
  const auto& M = model();
  if (f.nvars() != nvars()) throw InvalidArgument("function has the wrong number of variables");
  if (nvars() == 0) return TowerElem(M.field, M.field->lift_from(*K_, f.is_zero() ? K_->zero() : f.lead().coef));
  return evaluate(f, M.coords);
}

std::pair<MPoly, MPoly> AffineVariety::fraction(const TowerElem& a) const {
  const auto& M = model();
  if (a.field() != M.field) throw TowerMismatch("element is not in the function field of " + name_);
  Frac f = to_fraction(K_, nvars(), M.generator_vars, *M.field, a.value());
  return {gb_.reduce(f.first), gb_.reduce(f.second)};
}

std::optional<MPoly> AffineVariety::regular_function(const TowerElem& a) const {
  auto [num, den] = fraction(a);
  if (den.is_zero()) throw Unsupported("denominator vanishes on " + name_);
  if (den.is_constant()) return num.scaled(K_->inv(den.lead().coef));
  // t - P lies in I + (t den - num) + (1 - s den) exactly when num/den = P
  const std::size_t n = nvars();
  const TermOrder ord = TermOrder::block(2);
  std::vector<std::size_t> shift(n);
  for (std::size_t i = 0; i < n; ++i) shift[i] = i + 2;
  IdealPresentation J{K_, {"_s", "_t"}, {}};
  for (const auto& v : vars_) J.vars.push_back(v);
  for (const MPoly& g : gb_.polys()) J.gens.push_back(g.remap(shift, n + 2, ord));
  MPoly s = MPoly::variable(K_, n + 2, 0, ord), t = MPoly::variable(K_, n + 2, 1, ord);
  MPoly d = den.remap(shift, n + 2, ord), u = num.remap(shift, n + 2, ord);
  J.gens.push_back(t * d - u);
  J.gens.push_back(MPoly::constant(K_, n + 2, K_->one(), ord) - s * d);
  GroebnerBasis G = buchberger(J, ord);
  MPoly r = G.reduce(t);
  if (r.degree_in(0) > 0 || r.degree_in(1) > 0) return std::nullopt;
  std::vector<std::size_t> back(n + 2, 0);
  for (std::size_t i = 0; i < n; ++i) back[i + 2] = i;
  return gb_.reduce(r.remap(back, n, TermOrder::degrevlex()));
}

namespace {

MPoly partial(const MPoly& f, std::size_t i) {
  const Field& F = *f.field();
  std::vector<Term> ts;
  for (const Term& t : f.terms()) {
    if (t.mono[i] == 0) continue;
    Term d = t;
    d.coef = F.mul(t.coef, F.from_int(t.mono[i]));
    --d.mono[i];
    ts.push_back(std::move(d));
  }
  return MPoly::from_terms(f.field(), f.nvars(), std::move(ts), f.order());
}

MPoly det(const std::vector<std::vector<MPoly>>& m) {
  if (m.size() == 1) return m[0][0];
  MPoly out(m[0][0].field(), m[0][0].nvars(), m[0][0].order());
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<MPoly>> minor;
    for (std::size_t r = 1; r < m.size(); ++r) {
      std::vector<MPoly> row;
      for (std::size_t c = 0; c < m.size(); ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    MPoly t = m[0][j] * det(minor);
    out = j % 2 ? out - t : out + t;
  }
  return out;
}

/// Visits every k-subset of {0..n-1} in lexicographic order.
void subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

bool AffineVariety::certified_smooth() const {
  if (gb_.is_unit() || !integral()) return false;
  const std::size_t c = vars_.size() - dim_;
  if (c == 0) return true;
  const auto& g = gb_.polys();
  if (g.size() < c) return false;
  std::vector<std::vector<MPoly>> jac;
  for (const MPoly& f : g) {
    std::vector<MPoly> row;
    for (std::size_t i = 0; i < vars_.size(); ++i) row.push_back(partial(f, i));
    jac.push_back(std::move(row));
  }
  IdealPresentation P{K_, vars_, g};
  subsets(g.size(), c, [&](const std::vector<std::size_t>& rows) {
    subsets(vars_.size(), c, [&](const std::vector<std::size_t>& cols) {
      std::vector<std::vector<MPoly>> m;
      for (std::size_t r : rows) {
        std::vector<MPoly> row;
        for (std::size_t col : cols) row.push_back(jac[r][col]);
        m.push_back(std::move(row));
      }
      MPoly d = det(m);
      if (!d.is_zero()) P.gens.push_back(d);
    });
  });
  return buchberger(P, TermOrder::degrevlex()).is_unit();
}

bool AffineVariety::contains_point(const std::vector<TowerElem>& point) const {
  for (const MPoly& g : gens_)
    if (!evaluate(g, point).is_zero()) return false;
  return true;
}

std::string AffineVariety::describe() const {
  std::string s = name_ + " = V(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].str(vars_);
  }
  s += ") in ";
  s += vars_.empty() ? std::string("a point") : "A^" + std::to_string(vars_.size());
  return s + " over " + K_->describe();
}

}  // namespace tgs
