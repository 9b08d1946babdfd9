#include "tgs/sym/pushforward.hpp"

#include "tgs/algebra/factor.hpp"
#include "tgs/error.hpp"

namespace tgs {

Value pushforward_ga(const FiniteFreeAlgebra& B, const Coeffs& g) { return u_apply(SymElem::slot_sum(B, g)); }

Value pushforward_gm(const FiniteFreeAlgebra& B, const Coeffs& g) {
  if (!B.is_unit(g)) throw NotAUnit("element is not a unit of the algebra");
  return u_apply(SymElem::power_tensor(B, g));
}

GroupPoint pushforward(const FiniteFreeAlgebra& B, const GroupPlugin& G, const AlgebraPoint& g) {
  if (g.size() != G.arity())
    throw InvalidArgument(G.str() + " takes " + std::to_string(G.arity()) + " coordinates");
  const FieldPtr& K = B.base();
  GroupPoint out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto& f = G.factors()[i];
    switch (f.kind) {
      case GroupPlugin::Factor::Kind::Ga:
        out.emplace_back(K, pushforward_ga(B, g[i]));
        break;
      case GroupPlugin::Factor::Kind::Gm:
        out.emplace_back(K, pushforward_gm(B, g[i]));
        break;
      case GroupPlugin::Factor::Kind::Mu: {
        Coeffs gn = B.power(g[i], f.n);
        for (std::size_t k = 0; k < B.rank(); ++k)
          if (!K->equal(gn[k], B.unit()[k])) throw InvalidArgument("not an " + std::to_string(f.n) + "-th root of unity");
        TowerElem h(K, pushforward_gm(B, g[i]));
        if (!h.pow(f.n).is_one()) throw Unsupported("norm of a root of unity is not a root of unity");
        out.push_back(h);
        break;
      }
    }
  }
  return out;
}

Matrix split_p(const FiniteFreeAlgebra& B1, const FiniteFreeAlgebra& B2) {
  FiniteFreeAlgebra P = FiniteFreeAlgebra::product(B1, B2);
  const int d1 = static_cast<int>(B1.rank());
  const auto& o1 = B1.orbits();
  const auto& o2 = B2.orbits();
  const auto& o = P.orbits();
  Matrix M(P.base(), o1.size() * o2.size(), o.size());
  for (std::size_t c = 0; c < o.size(); ++c) {
    OrbitIndex g1, g2;
    for (int i : o[c]) {
      if (i < d1)
        g1.push_back(i);
      else
        g2.push_back(i - d1);
    }
    if (g1.size() != B1.rank()) continue;
    M.at(B1.orbit_position(g1) * o2.size() + B2.orbit_position(g2), c) = P.base()->one();
  }
  return M;
}

std::optional<Coeffs> residue_map(const FiniteFreeAlgebra& B) {
  const FieldPtr& K = B.base();
  Coeffs r;
  for (std::size_t i = 0; i < B.rank(); ++i) {
    Coeffs mu = minpoly(B.multiplication(B.basis_vector(i)));
    auto fac = detail::factor(*K, mu);
    if (fac.size() != 1 || upoly::degree(fac[0].first) != 1) return std::nullopt;
    r.push_back(K->neg(fac[0].first[0]));
  }
  // a local algebra with residue field K: the map must be multiplicative
  for (std::size_t i = 0; i < B.rank(); ++i)
    for (std::size_t j = 0; j < B.rank(); ++j) {
      Value prod = K->zero();
      const Coeffs& e = B.basis_product(i, j);
      for (std::size_t k = 0; k < B.rank(); ++k) prod = K->add(prod, K->mul(e[k], r[k]));
      if (!K->equal(prod, K->mul(r[i], r[j]))) return std::nullopt;
    }
  return r;
}

}  // namespace tgs
