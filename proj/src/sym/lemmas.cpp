#include "tgs/sym/lemmas.hpp"

#include "tgs/error.hpp"
#include "tgs/ideal/decompose.hpp"

namespace tgs {

bool check_reduction(const FiniteFreeAlgebra& B) {
  auto res = residue_map(B);
  if (!res) throw InvalidArgument("algebra is not local with residue field the base");
  const Field& F = *B.base();
  const auto& u = B.u();
  const auto& orb = B.orbits();
  for (std::size_t k = 0; k < orb.size(); ++k) {
    // every tuple in the orbit multiplies to the same element of B
    Coeffs prod = B.unit();
    for (int i : orb[k]) prod = B.mul(prod, B.basis_vector(static_cast<std::size_t>(i)));
    Value phi = F.zero();
    for (std::size_t i = 0; i < B.rank(); ++i) phi = F.add(phi, F.mul(prod[i], (*res)[i]));
    phi = F.mul(phi, F.from_integer(mpz_class(std::to_string(orbit_size(orb[k])))));
    if (!F.equal(phi, u[k])) return false;
  }
  return true;
}

bool check_split_p(const FiniteFreeAlgebra& B1, const FiniteFreeAlgebra& B2) {
  FiniteFreeAlgebra P = FiniteFreeAlgebra::product(B1, B2);
  const Field& F = *P.base();
  Matrix p = split_p(B1, B2);
  const auto& u1 = B1.u();
  const auto& u2 = B2.u();
  const auto& u = P.u();
  for (std::size_t c = 0; c < p.cols(); ++c) {
    Value acc = F.zero();
    for (std::size_t a = 0; a < u1.size(); ++a)
      for (std::size_t b = 0; b < u2.size(); ++b) {
        const Value& m = p.at(a * u2.size() + b, c);
        if (!F.is_zero(m)) acc = F.add(acc, F.mul(m, F.mul(u1[a], u2[b])));
      }
    if (!F.equal(acc, u[c])) return false;
  }
  return true;
}

bool check_norm_trace(const TowerElem& a, const FieldPtr& K) {
  const FieldPtr& L = a.field();
  FiniteFreeAlgebra B = FiniteFreeAlgebra::from_extension(L, K);
  Coeffs g = L->coords_over(*K, a.value());
  auto [tr, nm] = trace_and_norm(a, K);
  if (!K->equal(pushforward_ga(B, g), tr.value())) return false;
  if (a.is_zero()) return true;
  return K->equal(pushforward_gm(B, g), nm.value());
}

namespace {

GroupPoint evaluate_point(const FieldPtr& K, const GroupPlugin& G, const AlgebraPoint& g, const Coeffs& chi) {
  GroupPoint r;
  for (std::size_t i = 0; i < G.arity(); ++i) {
    Value v = K->zero();
    for (std::size_t k = 0; k < chi.size(); ++k) v = K->add(v, K->mul(g[i][k], chi[k]));
    r.emplace_back(K, v);
  }
  return r;
}

}  // namespace

bool check_section(const FiniteFreeAlgebra& B, const GroupPlugin& G, const AlgebraPoint& g) {
  auto res = residue_map(B);
  if (!res) throw InvalidArgument("algebra is not local with residue field the base");
  GroupPoint lhs = pushforward(B, G, g);
  GroupPoint rhs = group_scale(G, evaluate_point(B.base(), G, g, *res), static_cast<long>(B.rank()));
  return group_equal(lhs, rhs);
}

bool check_split_points(const ArtinianQuotient& A, const GroupPlugin& G, const AlgebraPoint& g) {
  const FieldPtr& K = A.field();
  FiniteFreeAlgebra B = FiniteFreeAlgebra::from_quotient(A);
  GroupPoint lhs = pushforward(B, G, g);
  GroupPoint rhs = group_identity(G, K);
  for (const LocalPoint& pt : decompose_zero_dim(A)) {
    if (pt.residue != K) throw InvalidArgument("point with residue field " + pt.residue->describe());
    Coeffs chi;
    for (const Monomial& m : A.basis())
      chi.push_back(evaluate(MPoly::monomial(K, m, K->one()), pt.coords).value());
    rhs = group_add(G, rhs, group_scale(G, evaluate_point(K, G, g, chi), static_cast<long>(pt.local_dimension)));
  }
  return group_equal(lhs, rhs);
}

bool check_coproduct(const FiniteFreeAlgebra& B1, const FiniteFreeAlgebra& B2, const GroupPlugin& G,
                     const AlgebraPoint& g1, const AlgebraPoint& g2) {
  FiniteFreeAlgebra P = FiniteFreeAlgebra::product(B1, B2);
  AlgebraPoint g;
  for (std::size_t i = 0; i < G.arity(); ++i) {
    Coeffs c = g1[i];
    c.insert(c.end(), g2[i].begin(), g2[i].end());
    g.push_back(c);
  }
  return group_equal(group_add(G, pushforward(B1, G, g1), pushforward(B2, G, g2)), pushforward(P, G, g));
}

bool check_base_change(const FiniteFreeAlgebra& B, const FieldPtr& ext, const GroupPlugin& G, const AlgebraPoint& g) {
  GroupPoint lhs = lift_point(pushforward(B, G, g), ext);
  AlgebraPoint h;
  for (const Coeffs& c : g) {
    Coeffs l;
    for (const Value& v : c) l.push_back(ext->lift_from(*B.base(), v));
    h.push_back(l);
  }
  return group_equal(lhs, pushforward(B.base_change(ext), G, h));
}

bool check_basis_independence(const FiniteFreeAlgebra& B, const Matrix& P,
                              const std::vector<std::vector<Coeffs>>& tensors) {
  FiniteFreeAlgebra C = B.change_basis(P);
  Matrix Pinv = inverse(P);
  const Field& F = *B.base();
  for (const auto& bs : tensors) {
    std::vector<Coeffs> cs;
    for (const Coeffs& b : bs) cs.push_back(Pinv.apply(b));
    if (!F.equal(u_apply(SymElem::symmetrized(B, bs)), u_apply(SymElem::symmetrized(C, cs)))) return false;
    for (std::size_t i = 0; i < bs.size(); ++i) {
      if (!F.equal(pushforward_ga(B, bs[i]), pushforward_ga(C, cs[i]))) return false;
      if (B.is_unit(bs[i]) && !F.equal(pushforward_gm(B, bs[i]), pushforward_gm(C, cs[i]))) return false;
    }
  }
  return true;
}

}  // namespace tgs
