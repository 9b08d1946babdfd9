#include <algorithm>
#include <random>

#include "doctest.h"
#include "support.hpp"
#include "tgs/algebra/parse.hpp"
#include "tgs/error.hpp"
#include "tgs/sym/lemmas.hpp"
#include "tgs/verify/instances.hpp"

using namespace tgs;
using namespace tgs::testing;

namespace {

Coeffs iv(const FieldPtr& K, std::initializer_list<long> xs) {
  Coeffs c;
  for (long x : xs) c.push_back(K->from_int(x));
  return c;
}

// k[t]/(t^2) in the basis e1 = t, e2 = 1.
FiniteFreeAlgebra dual_numbers(const FieldPtr& K) {
  return FiniteFreeAlgebra::from_structure(K, {{iv(K, {0, 0}), iv(K, {1, 0})}, {iv(K, {1, 0}), iv(K, {0, 1})}},
                                           iv(K, {0, 1}));
}

// k x k in the idempotent basis.
FiniteFreeAlgebra split_pair(const FieldPtr& K) {
  return FiniteFreeAlgebra::from_structure(K, {{iv(K, {1, 0}), iv(K, {0, 0})}, {iv(K, {0, 0}), iv(K, {0, 1})}},
                                           iv(K, {1, 1}));
}

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Oracle for u: enumerate the orbit with next_permutation and sum full
// determinants of [e_{i_1} e_1 | ... | e_{i_d} e_d].
Value brute_u(const FiniteFreeAlgebra& B, const OrbitIndex& g) {
  const Field& F = *B.base();
  std::vector<int> t = g;
  Value acc = F.zero();
  do {
    std::vector<Coeffs> cols;
    for (std::size_t s = 0; s < t.size(); ++s) cols.push_back(B.basis_product(static_cast<std::size_t>(t[s]), s));
    acc = F.add(acc, determinant(Matrix::from_columns(B.base(), B.rank(), cols)));
  } while (std::next_permutation(t.begin(), t.end()));
  return acc;
}

}  // namespace

TEST_CASE("orbit bases") {
  CHECK(orbit_basis(2, 0, 1) == std::vector<OrbitIndex>{{0, 0}, {0, 1}, {1, 1}});
  CHECK(orbit_basis(1, 0, 4).size() == 5);
  CHECK(orbit_basis(3, 0, 1).size() == 4);
  CHECK(orbit_basis(0, 0, 3).size() == 1);
  for (int d = 1; d <= 6; ++d) CHECK(orbit_basis(d, 0, d - 1).size() == binom(2 * d - 1, d));
  CHECK(orbit_size({0, 0, 1}) == 3);
  CHECK(orbit_size({0, 1, 2}) == 6);
  CHECK(orbit_size({2, 2, 2, 2}) == 1);
  CHECK(orbit_str({0, 1}) == "(1,2)");
}

TEST_CASE("structure constants are validated") {
  FieldPtr Q = rationals();
  // e1 e2 = e1 but e2 e1 = 0
  CHECK_THROWS_AS(FiniteFreeAlgebra::from_structure(Q, {{iv(Q, {0, 0}), iv(Q, {1, 0})}, {iv(Q, {0, 0}), iv(Q, {0, 1})}},
                                                    iv(Q, {0, 1})),
                  InvalidArgument);
  // unit law fails
  CHECK_THROWS_AS(FiniteFreeAlgebra::from_structure(Q, {{iv(Q, {1, 0}), iv(Q, {0, 0})}, {iv(Q, {0, 0}), iv(Q, {0, 1})}},
                                                    iv(Q, {1, 0})),
                  InvalidArgument);
}

TEST_CASE("symmetric products") {
  FieldPtr Q = rationals();
  FiniteFreeAlgebra D = dual_numbers(Q);
  SymElem e11 = SymElem::basis(D, {0, 0});
  CHECK((e11 * e11).coeffs().empty());
  CHECK(e11 * SymElem::one(D) == e11);
  FiniteFreeAlgebra S = split_pair(Q);
  SymElem e12 = SymElem::basis(S, {0, 1});
  CHECK(e12 * e12 == e12);
  CHECK(e12.str() == "e(1,2)");
  CHECK(SymElem::one(S).str() == "e(1,1) + e(1,2) + e(2,2)");
}

TEST_CASE("u on small algebras") {
  FieldPtr Q = rationals();
  FiniteFreeAlgebra D = dual_numbers(Q);
  const auto& u = D.u();
  CHECK(Q->is_one(u[D.orbit_position({1, 1})]));
  CHECK(Q->is_zero(u[D.orbit_position({0, 1})]));
  CHECK(Q->is_zero(u[D.orbit_position({0, 0})]));
  FiniteFreeAlgebra S = split_pair(Q);
  CHECK(Q->is_one(S.u()[S.orbit_position({0, 1})]));
  CHECK(Q->is_zero(S.u()[S.orbit_position({0, 0})]));
  CHECK(Q->is_zero(S.u()[S.orbit_position({1, 1})]));
  CHECK(Q->is_one(u_apply(SymElem::one(D))));
  CHECK(Q->is_one(u_apply(SymElem::one(S))));
  FiniteFreeAlgebra Z = FiniteFreeAlgebra::zero(Q);
  CHECK(Q->is_one(u_apply(SymElem::one(Z))));
}

TEST_CASE("property: u matches the brute-force determinant sum") {
  std::mt19937_64 rng(3);
  std::vector<FieldPtr> fields{rationals(), prime_field(3), prime_field(2)};
  for (int trial = 0; trial < 40; ++trial) {
    const FieldPtr& K = fields[trial % 3];
    FiniteFreeAlgebra B = trial % 2 ? gen::random_local_algebra(rng, K, 4)
                                    : FiniteFreeAlgebra::from_quotient(gen::random_split_quotient(rng, K, 4));
    const auto& u = B.u();
    for (std::size_t k = 0; k < B.orbits().size(); ++k) CHECK(K->equal(u[k], brute_u(B, B.orbits()[k])));
  }
}

TEST_CASE("property: u is an algebra map") {
  std::mt19937_64 rng(4);
  std::vector<FieldPtr> fields{rationals(), prime_field(5)};
  for (int trial = 0; trial < 20; ++trial) {
    const FieldPtr& K = fields[trial % 2];
    FiniteFreeAlgebra B = gen::random_local_algebra(rng, K, 3);
    std::vector<Coeffs> a, b;
    for (std::size_t i = 0; i < B.rank(); ++i) {
      a.push_back(gen::random_vector(rng, *K, B.rank()));
      b.push_back(gen::random_vector(rng, *K, B.rank()));
    }
    SymElem x = SymElem::symmetrized(B, a), y = SymElem::symmetrized(B, b);
    CHECK(K->equal(u_apply(x * y), K->mul(u_apply(x), u_apply(y))));
    CHECK(K->equal(u_apply(x + y), K->add(u_apply(x), u_apply(y))));
  }
}

TEST_CASE("pushforward examples") {
  FieldPtr Q = rationals();
  FieldPtr Qi = adjoin_root(Q, "i", icoeffs(Q, {1, 0, 1}));
  FiniteFreeAlgebra L = FiniteFreeAlgebra::from_extension(Qi, Q);
  Coeffs one_plus_i = Qi->coords_over(*Q, elem(Qi, {1, 1}).value());
  CHECK(Q->render(pushforward_gm(L, one_plus_i)) == "2");
  CHECK(Q->render(pushforward_ga(L, one_plus_i)) == "2");
  CHECK(Q->is_zero(pushforward_ga(L, iv(Q, {0, 0}))));
  CHECK_THROWS_AS(pushforward_gm(L, iv(Q, {0, 0})), NotAUnit);
  // a + b t on the dual numbers: Ga gives 2a, Gm gives a^2
  FiniteFreeAlgebra D = dual_numbers(Q);
  CHECK(Q->render(pushforward_ga(D, iv(Q, {7, 3}))) == "6");
  CHECK(Q->render(pushforward_gm(D, iv(Q, {7, 3}))) == "9");
  // Tr(2) over Q(sqrt 2) is 4, Nm(1 + i)^2 = 4
  FieldPtr R = adjoin_root(Q, "r", icoeffs(Q, {-2, 0, 1}));
  FiniteFreeAlgebra Lr = FiniteFreeAlgebra::from_extension(R, Q);
  CHECK(Q->render(pushforward_ga(Lr, R->coords_over(*Q, R->from_int(2)))) == "4");
  Coeffs sq = L.mul(one_plus_i, one_plus_i);
  CHECK(Q->render(pushforward_gm(L, sq)) == "4");
  // mu_4: i has norm 1
  GroupPoint h = pushforward(L, GroupPlugin::mu(4), {Qi->coords_over(*Q, Qi->generator())});
  CHECK(h[0].str() == "1");
  CHECK_THROWS_AS(pushforward(L, GroupPlugin::mu(3), {Qi->coords_over(*Q, Qi->generator())}), InvalidArgument);
  GroupPoint both = pushforward(L, GroupPlugin::parse("Ga*Gm"), {one_plus_i, one_plus_i});
  CHECK(point_str(both) == "(2, 2)");
}

TEST_CASE("coproduct example") {
  FieldPtr Q = rationals();
  FieldPtr Qi = adjoin_root(Q, "i", icoeffs(Q, {1, 0, 1}));
  FieldPtr R = adjoin_root(Q, "r", icoeffs(Q, {-2, 0, 1}));
  FiniteFreeAlgebra B1 = FiniteFreeAlgebra::from_extension(Qi, Q);
  FiniteFreeAlgebra B2 = FiniteFreeAlgebra::from_extension(R, Q);
  AlgebraPoint g1{Qi->coords_over(*Q, Qi->generator())}, g2{R->coords_over(*Q, R->generator())};
  FiniteFreeAlgebra P = FiniteFreeAlgebra::product(B1, B2);
  Coeffs g = g1[0];
  g.insert(g.end(), g2[0].begin(), g2[0].end());
  CHECK(Q->render(pushforward_gm(P, g)) == "-2");
  CHECK(check_coproduct(B1, B2, GroupPlugin::gm(), g1, g2));
  CHECK(check_coproduct(B1, B2, GroupPlugin::ga(), g1, g2));
  // zero-rank second factor
  FiniteFreeAlgebra Z = FiniteFreeAlgebra::zero(Q);
  CHECK(check_coproduct(B1, Z, GroupPlugin::gm(), g1, {Coeffs{}}));
  // B1 = B2 = k, Ga: a + b
  FiniteFreeAlgebra k = FiniteFreeAlgebra::from_extension(Q, Q);
  FiniteFreeAlgebra kk = FiniteFreeAlgebra::product(k, k);
  CHECK(Q->render(pushforward_ga(kk, iv(Q, {3, 4}))) == "7");
}

TEST_CASE("split map p") {
  FieldPtr Q = rationals();
  FiniteFreeAlgebra D = dual_numbers(Q);
  FiniteFreeAlgebra S = split_pair(Q);
  Matrix p = split_p(D, S);
  FiniteFreeAlgebra P = FiniteFreeAlgebra::product(D, S);
  // (1,2,3,4) splits as (1,2) * (1,2); (1,1,2,2) lies inside the first window
  std::size_t c = P.orbit_position({0, 1, 2, 3});
  CHECK(Q->is_one(p.at(D.orbit_position({0, 1}) * 3 + S.orbit_position({0, 1}), c)));
  std::size_t z = P.orbit_position({0, 0, 1, 1});
  for (std::size_t r = 0; r < p.rows(); ++r) CHECK(Q->is_zero(p.at(r, z)));
  CHECK(check_split_p(D, S));
  // d2 = 0 gives the identity
  Matrix id = split_p(D, FiniteFreeAlgebra::zero(Q));
  CHECK(id == Matrix::identity(Q, D.orbits().size()));
}

TEST_CASE("property: norm and trace agree with determinant and trace of multiplication") {
  std::mt19937_64 rng(8);
  auto corpus = gen::extension_corpus(rng, 20);
  for (auto& [L, K] : corpus) {
    FiniteFreeAlgebra B = FiniteFreeAlgebra::from_extension(L, K);
    for (int k = 0; k < 3; ++k) {
      TowerElem a(L, L->random(rng, 3));
      Coeffs g = L->coords_over(*K, a.value());
      Matrix m = B.multiplication(g);
      CHECK(K->equal(pushforward_ga(B, g), trace(m)));
      if (!a.is_zero()) CHECK(K->equal(pushforward_gm(B, g), determinant(m)));
      CHECK(check_norm_trace(a, K));
    }
  }
}

TEST_CASE("property: reduction, section and split-point identities") {
  std::mt19937_64 rng(9);
  std::vector<FieldPtr> fields{rationals(), prime_field(7), prime_field(2)};
  for (int trial = 0; trial < 24; ++trial) {
    const FieldPtr& K = fields[trial % 3];
    FiniteFreeAlgebra B = gen::random_local_algebra(rng, K, 4);
    CHECK(check_reduction(B));
    CHECK(check_section(B, GroupPlugin::ga(), {gen::random_vector(rng, *K, B.rank())}));
    CHECK(check_section(B, GroupPlugin::gm(), {gen::random_unit(rng, B)}));
    ArtinianQuotient A = gen::random_split_quotient(rng, K, 5);
    FiniteFreeAlgebra C = FiniteFreeAlgebra::from_quotient(A);
    CHECK(check_split_points(A, GroupPlugin::ga(), {gen::random_vector(rng, *K, C.rank())}));
    CHECK(check_split_points(A, GroupPlugin::gm(), {gen::random_unit(rng, C)}));
  }
  CHECK_THROWS_AS(check_reduction(split_pair(rationals())), InvalidArgument);
}

TEST_CASE("property: p, coproduct, base change, basis independence, additivity") {
  std::mt19937_64 rng(10);
  FieldPtr Q = rationals();
  FieldPtr F5 = prime_field(5);
  FieldPtr Qi = adjoin_root(Q, "i", icoeffs(Q, {1, 0, 1}));
  FieldPtr F25 = adjoin_root(F5, "w", icoeffs(F5, {2, 0, 1}));
  for (int trial = 0; trial < 16; ++trial) {
    const FieldPtr& K = trial % 2 ? F5 : Q;
    const FieldPtr& ext = trial % 2 ? F25 : Qi;
    FiniteFreeAlgebra B1 = gen::random_local_algebra(rng, K, 3);
    FiniteFreeAlgebra B2 = trial % 3 ? FiniteFreeAlgebra::from_quotient(gen::random_split_quotient(rng, K, 3))
                                     : gen::random_local_algebra(rng, K, 3);
    CHECK(check_split_p(B1, B2));
    GroupPlugin G = GroupPlugin::parse("Ga*Gm");
    AlgebraPoint g1{gen::random_vector(rng, *K, B1.rank()), gen::random_unit(rng, B1)};
    AlgebraPoint g2{gen::random_vector(rng, *K, B2.rank()), gen::random_unit(rng, B2)};
    CHECK(check_coproduct(B1, B2, G, g1, g2));
    CHECK(check_base_change(B1, ext, G, g1));
    std::vector<std::vector<Coeffs>> tensors(2);
    for (auto& t : tensors)
      for (std::size_t i = 0; i < B2.rank(); ++i) t.push_back(gen::random_vector(rng, *K, B2.rank()));
    CHECK(check_basis_independence(B2, gen::random_invertible(rng, K, B2.rank()), tensors));
    Coeffs a = gen::random_vector(rng, *K, B1.rank()), b = gen::random_vector(rng, *K, B1.rank());
    CHECK(K->equal(pushforward_ga(B1, B1.add(a, b)), K->add(pushforward_ga(B1, a), pushforward_ga(B1, b))));
    Coeffs x = gen::random_unit(rng, B1), y = gen::random_unit(rng, B1);
    CHECK(K->equal(pushforward_gm(B1, B1.mul(x, y)), K->mul(pushforward_gm(B1, x), pushforward_gm(B1, y))));
  }
}

TEST_CASE("basis independence on named changes") {
  FieldPtr Q = rationals();
  FiniteFreeAlgebra S = split_pair(Q);
  Matrix swap(Q, 2, 2);
  swap.at(0, 1) = Q->one();
  swap.at(1, 0) = Q->one();
  Matrix shear = Matrix::identity(Q, 2);
  shear.at(1, 0) = Q->one();  // e1 <- e1 + e2
  Matrix scale = Matrix::identity(Q, 2);
  scale.at(0, 0) = Q->from_int(5);
  std::vector<std::vector<Coeffs>> ts{{iv(Q, {1, 2}), iv(Q, {3, -1})}, {iv(Q, {0, 1}), iv(Q, {2, 2})}};
  CHECK(check_basis_independence(S, swap, ts));
  CHECK(check_basis_independence(S, shear, ts));
  CHECK(check_basis_independence(S, scale, ts));
}
