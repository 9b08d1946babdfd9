#include "tgs/sym/algebra.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

#include "tgs/algebra/upoly.hpp"
#include "tgs/error.hpp"

namespace tgs {

std::vector<OrbitIndex> orbit_basis(int d, int lo, int hi) {
  std::vector<OrbitIndex> out;
  if (d == 0) return {OrbitIndex{}};
  if (d < 0 || hi < lo) return out;
  OrbitIndex cur(static_cast<std::size_t>(d), lo);
  for (;;) {
    out.push_back(cur);
    int k = d - 1;
    while (k >= 0 && cur[k] == hi) --k;
    if (k < 0) break;
    ++cur[k];
    for (int j = k + 1; j < d; ++j) cur[j] = cur[k];
  }
  return out;
}

std::uint64_t orbit_size(const OrbitIndex& g) {
  std::uint64_t r = 1;
  std::size_t run = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    run = (i > 0 && g[i] == g[i - 1]) ? run + 1 : 1;
    r = r * (i + 1) / run;
  }
  return r;
}

std::string orbit_str(const OrbitIndex& g) {
  std::string s = "(";
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(g[i] + 1);
  }
  return s + ")";
}

struct FiniteFreeAlgebra::Cache {
  std::once_flag orbits_once;
  std::vector<OrbitIndex> orbits;
  std::map<OrbitIndex, std::size_t> pos;
  std::once_flag u_once;
  std::vector<Value> u;
};

FiniteFreeAlgebra::FiniteFreeAlgebra(std::shared_ptr<const Data> d)
    : d_(std::move(d)), cache_(std::make_shared<Cache>()) {}

namespace {

bool same(const Field& F, const Coeffs& a, const Coeffs& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!F.equal(a[i], b[i])) return false;
  return true;
}

}  // namespace

FiniteFreeAlgebra FiniteFreeAlgebra::from_structure(FieldPtr K, std::vector<std::vector<Coeffs>> mult, Coeffs unit) {
  const std::size_t d = unit.size();
  if (mult.size() != d) throw InvalidArgument("structure constants do not match the rank");
  for (const auto& row : mult) {
    if (row.size() != d) throw InvalidArgument("structure constants do not match the rank");
    for (const auto& c : row)
      if (c.size() != d) throw InvalidArgument("structure constants do not match the rank");
  }
  FiniteFreeAlgebra B(std::make_shared<const Data>(Data{K, d, std::move(mult), std::move(unit)}));
  const Field& F = *K;
  for (std::size_t i = 0; i < d; ++i) {
    Coeffs ei = B.basis_vector(i);
    if (!same(F, B.mul(B.unit(), ei), ei)) throw InvalidArgument("unit law fails");
    for (std::size_t j = 0; j < d; ++j) {
      if (!same(F, B.basis_product(i, j), B.basis_product(j, i))) throw InvalidArgument("not commutative");
      for (std::size_t k = 0; k < d; ++k) {
        Coeffs l = B.mul(B.basis_product(i, j), B.basis_vector(k));
        Coeffs r = B.mul(ei, B.basis_product(j, k));
        if (!same(F, l, r)) throw InvalidArgument("not associative");
      }
    }
  }
  return B;
}

FiniteFreeAlgebra FiniteFreeAlgebra::zero(FieldPtr K) {
  return FiniteFreeAlgebra(std::make_shared<const Data>(Data{std::move(K), 0, {}, {}}));
}

FiniteFreeAlgebra FiniteFreeAlgebra::from_extension(const FieldPtr& L, const FieldPtr& K) {
  const std::size_t d = L->degree_over(*K);
  std::vector<Value> basis;
  for (std::size_t i = 0; i < d; ++i) {
    Coeffs e(d, K->zero());
    e[i] = K->one();
    basis.push_back(L->from_coords(*K, e));
  }
  std::vector<std::vector<Coeffs>> mult(d, std::vector<Coeffs>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) mult[i][j] = L->coords_over(*K, L->mul(basis[i], basis[j]));
  return FiniteFreeAlgebra(std::make_shared<const Data>(Data{K, d, std::move(mult), L->coords_over(*K, L->one())}));
}

FiniteFreeAlgebra FiniteFreeAlgebra::from_quotient(const ArtinianQuotient& A) {
  const std::size_t d = A.dimension();
  const auto& basis = A.basis();
  std::vector<std::vector<Coeffs>> mult(d, std::vector<Coeffs>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      mult[i][j] = A.coordinates(MPoly::monomial(A.field(), mono_mul(basis[i], basis[j]), A.field()->one(),
                                                 A.gb().order()));
  return FiniteFreeAlgebra(std::make_shared<const Data>(Data{A.field(), d, std::move(mult), A.unit()}));
}

FiniteFreeAlgebra FiniteFreeAlgebra::product(const FiniteFreeAlgebra& a, const FiniteFreeAlgebra& b) {
  if (a.base() != b.base()) throw TowerMismatch("product of algebras over different bases");
  const FieldPtr& K = a.base();
  const std::size_t d1 = a.rank(), d = a.rank() + b.rank();
  std::vector<std::vector<Coeffs>> mult(d, std::vector<Coeffs>(d, Coeffs(d, K->zero())));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if ((i < d1) != (j < d1)) continue;
      const Coeffs& c = i < d1 ? a.basis_product(i, j) : b.basis_product(i - d1, j - d1);
      for (std::size_t k = 0; k < c.size(); ++k) mult[i][j][k + (i < d1 ? 0 : d1)] = c[k];
    }
  Coeffs unit = a.unit();
  unit.insert(unit.end(), b.unit().begin(), b.unit().end());
  return FiniteFreeAlgebra(std::make_shared<const Data>(Data{K, d, std::move(mult), std::move(unit)}));
}

FiniteFreeAlgebra FiniteFreeAlgebra::change_basis(const Matrix& P) const {
  const std::size_t d = rank();
  Matrix Pinv = inverse(P);
  std::vector<Coeffs> cols(d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) cols[j].push_back(P.at(i, j));
  std::vector<std::vector<Coeffs>> mult(d, std::vector<Coeffs>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) mult[i][j] = Pinv.apply(mul(cols[i], cols[j]));
  return FiniteFreeAlgebra(std::make_shared<const Data>(Data{base(), d, std::move(mult), Pinv.apply(unit())}));
}

FiniteFreeAlgebra FiniteFreeAlgebra::base_change(const FieldPtr& ext) const {
  const Field& K = *base();
  auto lift = [&](const Coeffs& c) {
    Coeffs r;
    for (const Value& v : c) r.push_back(ext->lift_from(K, v));
    return r;
  };
  std::vector<std::vector<Coeffs>> mult(rank(), std::vector<Coeffs>(rank()));
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) mult[i][j] = lift(basis_product(i, j));
  return FiniteFreeAlgebra(std::make_shared<const Data>(Data{ext, rank(), std::move(mult), lift(unit())}));
}

Coeffs FiniteFreeAlgebra::basis_vector(std::size_t i) const {
  Coeffs e(rank(), base()->zero());
  e[i] = base()->one();
  return e;
}

Coeffs FiniteFreeAlgebra::mul(const Coeffs& a, const Coeffs& b) const {
  const Field& F = *base();
  Coeffs r(rank(), F.zero());
  for (std::size_t i = 0; i < rank(); ++i) {
    if (F.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < rank(); ++j) {
      if (F.is_zero(b[j])) continue;
      Value c = F.mul(a[i], b[j]);
      const Coeffs& e = basis_product(i, j);
      for (std::size_t k = 0; k < rank(); ++k)
        if (!F.is_zero(e[k])) r[k] = F.add(r[k], F.mul(c, e[k]));
    }
  }
  return r;
}

Coeffs FiniteFreeAlgebra::add(const Coeffs& a, const Coeffs& b) const {
  Coeffs r(rank());
  for (std::size_t i = 0; i < rank(); ++i) r[i] = base()->add(a[i], b[i]);
  return r;
}

Coeffs FiniteFreeAlgebra::scale(const Coeffs& a, const Value& c) const {
  Coeffs r(rank());
  for (std::size_t i = 0; i < rank(); ++i) r[i] = base()->mul(a[i], c);
  return r;
}

Coeffs FiniteFreeAlgebra::power(const Coeffs& a, unsigned n) const {
  Coeffs r = unit();
  for (unsigned i = 0; i < n; ++i) r = mul(r, a);
  return r;
}

Coeffs FiniteFreeAlgebra::scalar(const Value& c) const { return scale(unit(), c); }

Matrix FiniteFreeAlgebra::multiplication(const Coeffs& a) const {
  std::vector<Coeffs> cols;
  for (std::size_t j = 0; j < rank(); ++j) cols.push_back(mul(a, basis_vector(j)));
  return Matrix::from_columns(base(), rank(), cols);
}

bool FiniteFreeAlgebra::is_unit(const Coeffs& a) const {
  return !base()->is_zero(determinant(multiplication(a)));
}

const std::vector<OrbitIndex>& FiniteFreeAlgebra::orbits() const {
  std::call_once(cache_->orbits_once, [&] {
    const int d = static_cast<int>(rank());
    cache_->orbits = orbit_basis(d, 0, d - 1);
    for (std::size_t i = 0; i < cache_->orbits.size(); ++i) cache_->pos[cache_->orbits[i]] = i;
  });
  return cache_->orbits;
}

std::size_t FiniteFreeAlgebra::orbit_position(const OrbitIndex& g) const {
  orbits();
  auto it = cache_->pos.find(g);
  if (it == cache_->pos.end()) throw InvalidArgument("not an orbit of this algebra: " + orbit_str(g));
  return it->second;
}

// Sum over all tuples (i_1..i_d) of det[e_{i_1} e_1 | ... | e_{i_d} e_d],
// collected by orbit.  Columns are eliminated as they are chosen so that a
// dependent prefix prunes its whole subtree.
const std::vector<Value>& FiniteFreeAlgebra::u() const {
  std::call_once(cache_->u_once, [&] {
    const Field& F = *base();
    const std::size_t d = rank();
    const auto& orb = orbits();
    std::vector<Value> u(orb.size(), F.zero());
    if (d == 0) {
      cache_->u = {F.one()};
      return;
    }
    std::vector<Coeffs> W(d);
    std::vector<std::size_t> piv(d);
    std::vector<int> tuple(d);
    std::function<void(std::size_t, const Value&)> dfs = [&](std::size_t s, const Value& prod) {
      if (s == d) {
        int inv = 0;
        for (std::size_t a = 0; a < d; ++a)
          for (std::size_t b = a + 1; b < d; ++b) inv += piv[a] > piv[b];
        OrbitIndex g(tuple.begin(), tuple.end());
        std::sort(g.begin(), g.end());
        std::size_t k = cache_->pos.at(g);
        u[k] = inv % 2 ? F.sub(u[k], prod) : F.add(u[k], prod);
        return;
      }
      for (std::size_t i = 0; i < d; ++i) {
        Coeffs v = basis_product(i, s);
        for (std::size_t k = 0; k < s; ++k) {
          Value c = v[piv[k]];
          if (F.is_zero(c)) continue;
          for (std::size_t j = 0; j < d; ++j)
            if (!F.is_zero(W[k][j])) v[j] = F.sub(v[j], F.mul(c, W[k][j]));
        }
        std::size_t p = 0;
        while (p < d && F.is_zero(v[p])) ++p;
        if (p == d) continue;
        Value pv = v[p];
        Value inv = F.inv(pv);
        for (auto& x : v) x = F.mul(x, inv);
        W[s] = std::move(v);
        piv[s] = p;
        tuple[s] = static_cast<int>(i);
        dfs(s + 1, F.mul(prod, pv));
      }
    };
    dfs(0, F.one());
    cache_->u = std::move(u);
  });
  return cache_->u;
}

SymElem SymElem::basis(const FiniteFreeAlgebra& B, const OrbitIndex& g) {
  B.orbit_position(g);
  SymElem e(B);
  e.set(g, B.base()->one());
  return e;
}

namespace {

template <typename Fn>
SymElem from_symmetric(const FiniteFreeAlgebra& B, Fn coefficient) {
  SymElem e(B);
  for (const OrbitIndex& g : B.orbits()) e.set(g, coefficient(g));
  return e;
}

// Permanent of M[s][t] = bs[s][g[t]] by dynamic programming over subsets.
Value permanent(const Field& F, const std::vector<Coeffs>& bs, const OrbitIndex& g) {
  const std::size_t d = g.size();
  std::vector<Value> dp(std::size_t{1} << d, F.zero());
  dp[0] = F.one();
  for (std::size_t mask = 0; mask < dp.size(); ++mask) {
    if (F.is_zero(dp[mask])) continue;
    std::size_t t = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (t == d) continue;
    for (std::size_t s = 0; s < d; ++s) {
      if (mask >> s & 1) continue;
      const Value& c = bs[s][static_cast<std::size_t>(g[t])];
      if (F.is_zero(c)) continue;
      std::size_t m2 = mask | (std::size_t{1} << s);
      dp[m2] = F.add(dp[m2], F.mul(dp[mask], c));
    }
  }
  return dp.back();
}

}  // namespace

SymElem SymElem::one(const FiniteFreeAlgebra& B) { return power_tensor(B, B.unit()); }

SymElem SymElem::power_tensor(const FiniteFreeAlgebra& B, const Coeffs& b) {
  const Field& F = *B.base();
  return from_symmetric(B, [&](const OrbitIndex& g) {
    Value r = F.one();
    for (int i : g) r = F.mul(r, b[static_cast<std::size_t>(i)]);
    return r;
  });
}

SymElem SymElem::slot_sum(const FiniteFreeAlgebra& B, const Coeffs& b) {
  const Field& F = *B.base();
  const Coeffs& o = B.unit();
  return from_symmetric(B, [&](const OrbitIndex& g) {
    Value r = F.zero();
    for (std::size_t s = 0; s < g.size(); ++s) {
      Value t = b[static_cast<std::size_t>(g[s])];
      for (std::size_t k = 0; k < g.size(); ++k)
        if (k != s) t = F.mul(t, o[static_cast<std::size_t>(g[k])]);
      r = F.add(r, t);
    }
    return r;
  });
}

SymElem SymElem::symmetrized(const FiniteFreeAlgebra& B, const std::vector<Coeffs>& bs) {
  if (bs.size() != B.rank()) throw InvalidArgument("need one element per tensor slot");
  return from_symmetric(B, [&](const OrbitIndex& g) { return permanent(*B.base(), bs, g); });
}

Value SymElem::coeff(const OrbitIndex& g) const {
  auto it = c_.find(g);
  return it == c_.end() ? B_.base()->zero() : it->second;
}

void SymElem::set(const OrbitIndex& g, const Value& v) {
  if (B_.base()->is_zero(v))
    c_.erase(g);
  else
    c_[g] = v;
}

SymElem SymElem::operator+(const SymElem& o) const {
  SymElem r = *this;
  for (const auto& [g, v] : o.c_) r.set(g, B_.base()->add(r.coeff(g), v));
  return r;
}

// Coefficient of e_Λ in a·b is the coefficient of its sorted representative
// λ in the product in B^{⊗d}: sum over tuples γ, δ of a[γ] b[δ] prod_s
// c^{λ_s}_{γ_s δ_s}.
SymElem SymElem::operator*(const SymElem& o) const {
  const Field& F = *B_.base();
  const std::size_t d = B_.rank();
  SymElem r(B_);
  if (d == 0) {
    r.set({}, F.mul(coeff({}), o.coeff({})));
    return r;
  }
  std::vector<int> gam(d), del(d);
  for (const OrbitIndex& lam : B_.orbits()) {
    Value acc = F.zero();
    std::function<void(std::size_t, const Value&)> dfs = [&](std::size_t s, const Value& w) {
      if (s == d) {
        OrbitIndex gs(gam.begin(), gam.end()), ds(del.begin(), del.end());
        std::sort(gs.begin(), gs.end());
        std::sort(ds.begin(), ds.end());
        Value a = coeff(gs), b = o.coeff(ds);
        if (!F.is_zero(a) && !F.is_zero(b)) acc = F.add(acc, F.mul(w, F.mul(a, b)));
        return;
      }
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          const Value& c = B_.basis_product(i, j)[static_cast<std::size_t>(lam[s])];
          if (F.is_zero(c)) continue;
          gam[s] = static_cast<int>(i);
          del[s] = static_cast<int>(j);
          dfs(s + 1, F.mul(w, c));
        }
    };
    dfs(0, F.one());
    r.set(lam, acc);
  }
  return r;
}

bool SymElem::operator==(const SymElem& o) const {
  if (c_.size() != o.c_.size()) return false;
  for (const auto& [g, v] : c_)
    if (!B_.base()->equal(v, o.coeff(g))) return false;
  return true;
}

std::string SymElem::str() const {
  std::vector<std::string> parts;
  for (const auto& [g, v] : c_)
    parts.push_back(render_term(wrap_coefficient(*B_.base(), B_.base()->render(v)), "e" + orbit_str(g)));
  return join_terms(parts);
}

Value u_apply(const SymElem& a) {
  const FiniteFreeAlgebra& B = a.algebra();
  const Field& F = *B.base();
  const auto& u = B.u();
  Value r = F.zero();
  for (const auto& [g, v] : a.coeffs()) r = F.add(r, F.mul(v, u[B.orbit_position(g)]));
  return r;
}

}  // namespace tgs
