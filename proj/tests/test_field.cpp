#include "doctest.h"
#include "support.hpp"
#include "tgs/algebra/matrix.hpp"
#include "tgs/error.hpp"

using namespace tgs;
using namespace tgs::testing;

namespace {

FieldPtr gaussian() { return adjoin_root(rationals(), "i", icoeffs(rationals(), {1, 0, 1})); }
FieldPtr sqrt2() { return adjoin_root(rationals(), "r", icoeffs(rationals(), {-2, 0, 1})); }

// Brute-force irreducibility over GF(p): trial division by every monic
// polynomial of degree 1..n/2.
bool brute_irreducible(const UPoly& f) {
  const FieldPtr& F = f.field();
  std::uint64_t p = F->characteristic();
  int n = f.degree();
  for (int d = 1; 2 * d <= n; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Coeffs c;
      std::uint64_t rest = code;
      for (int i = 0; i < d; ++i) {
        c.push_back(F->from_int(static_cast<long>(rest % p)));
        rest /= p;
      }
      c.push_back(F->one());
      if (f.divmod(UPoly(F, c)).second.is_zero()) return false;
    }
  }
  return n >= 1;
}

std::vector<FieldPtr> sample_towers() {
  FieldPtr Q = rationals();
  FieldPtr F5 = prime_field(5);
  FieldPtr F2 = prime_field(2);
  FieldPtr F4 = adjoin_root(F2, "w", icoeffs(F2, {1, 1, 1}));
  FieldPtr Qt = adjoin_transcendental(Q, "t");
  FieldPtr Qts = adjoin_root(Qt, "s", {Value(FracRep{{Q->zero(), Q->one()}, {Q->one()}}), Qt->zero(), Qt->one()});
  FieldPtr F5u = adjoin_transcendental(F5, "u");
  FieldPtr Qi = gaussian();
  FieldPtr Qir = adjoin_root(Qi, "r", icoeffs(Qi, {-2, 0, 1}));
  return {Q, F5, F4, Qt, Qts, F5u, Qi, Qir};
}

}  // namespace

TEST_CASE("gaussian integers multiply") {
  FieldPtr K = gaussian();
  TowerElem a = elem(K, {1, 1});
  TowerElem b = elem(K, {1, -1});
  CHECK((a * b) == TowerElem::integer(K, 2));
  CHECK((a * b).str() == "2");
  CHECK(a.str() == "i + 1");
}

TEST_CASE("division in GF(5)") {
  FieldPtr F = prime_field(5);
  TowerElem q = TowerElem::integer(F, 2) / TowerElem::integer(F, 3);
  CHECK(q == TowerElem::integer(F, 4));
  CHECK_THROWS_AS(TowerElem::integer(F, 2) / TowerElem::integer(F, 5), DivisionByZero);
}

TEST_CASE("minimal polynomial, norm and trace of 1+i") {
  FieldPtr K = gaussian();
  TowerElem a = elem(K, {1, 1});
  CHECK(minimal_polynomial(a, rationals()) == ipoly(rationals(), {2, -2, 1}));
  auto [tr, nm] = trace_and_norm(a, rationals());
  CHECK(tr == TowerElem::integer(rationals(), 2));
  CHECK(nm == TowerElem::integer(rationals(), 2));
}

TEST_CASE("trace of a primitive element of GF(4)") {
  FieldPtr F2 = prime_field(2);
  FieldPtr F4 = adjoin_root(F2, "w", icoeffs(F2, {1, 1, 1}));
  auto [tr, nm] = trace_and_norm(TowerElem::generator(F4), F2);
  CHECK(tr == TowerElem::integer(F2, 1));
  CHECK(nm == TowerElem::integer(F2, 1));
}

TEST_CASE("t^2 + 1 over GF(5)") {
  FieldPtr F = prime_field(5);
  auto fs = univ_factor(ipoly(F, {1, 0, 1}));
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].first == ipoly(F, {2, 1}));
  CHECK(fs[1].first == ipoly(F, {3, 1}));
}

TEST_CASE("t^2 - 2 splits over Q(sqrt 2)") {
  FieldPtr K = sqrt2();
  auto fs = univ_factor(ipoly(K, {-2, 0, 1}));
  REQUIRE(fs.size() == 2);
  CHECK(product(fs, K) == ipoly(K, {-2, 0, 1}));
  CHECK(show(fs, "x") == "(x + r)^1 ; (x - r)^1");
  CHECK(is_irreducible(ipoly(rationals(), {-2, 0, 1})));
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(11);
  for (const FieldPtr& K : sample_towers()) {
    CAPTURE(K->describe());
    for (int trial = 0; trial < 15; ++trial) {
      TowerElem a(K, K->random(rng, 3)), b(K, K->random(rng, 3)), c(K, K->random(rng, 3));
      CHECK(((a + b) + c) == (a + (b + c)));
      CHECK(((a * b) * c) == (a * (b * c)));
      CHECK((a * (b + c)) == (a * b + a * c));
      CHECK((a - a).is_zero());
      if (!b.is_zero()) CHECK(((a / b) * b) == a);
    }
  }
}

TEST_CASE("coordinates round trip and lifting") {
  std::mt19937_64 rng(3);
  FieldPtr Qi = gaussian();
  FieldPtr Qir = adjoin_root(Qi, "r", icoeffs(Qi, {-2, 0, 1}));
  CHECK(Qir->degree_over(*rationals()) == 4);
  for (int k = 0; k < 10; ++k) {
    Value a = Qir->random(rng, 4);
    Coeffs c = Qir->coords_over(*rationals(), a);
    CHECK(c.size() == 4);
    CHECK(Qir->equal(Qir->from_coords(*rationals(), c), a));
  }
  TowerElem i = TowerElem::generator(Qi);
  TowerElem il = i.lift_to(Qir);
  CHECK((il * il) == TowerElem::integer(Qir, -1));
  CHECK(il.descend_to(Qi) == i);
  CHECK_THROWS_AS(TowerElem::generator(Qir).descend_to(Qi), NotInSubfield);
  FieldPtr Qt = adjoin_transcendental(rationals(), "t");
  CHECK_THROWS_AS(Qt->degree_over(*rationals()), NotFiniteOverPrefix);
  CHECK_THROWS_AS(TowerElem::generator(Qi) + TowerElem::generator(sqrt2()), TowerMismatch);
}

TEST_CASE("trace is additive and norm multiplicative") {
  std::mt19937_64 rng(5);
  FieldPtr Qi = gaussian();
  FieldPtr Qir = adjoin_root(Qi, "r", icoeffs(Qi, {-2, 0, 1}));
  FieldPtr F2 = prime_field(2);
  FieldPtr F8 = adjoin_root(F2, "b", icoeffs(F2, {1, 1, 0, 1}));
  for (const FieldPtr& L : {Qir, F8}) {
    FieldPtr K = L == Qir ? rationals() : F2;
    for (int k = 0; k < 10; ++k) {
      TowerElem a(L, L->random(rng, 3)), b(L, L->random(rng, 3));
      auto [ta, na] = trace_and_norm(a, K);
      auto [tb, nb] = trace_and_norm(b, K);
      auto [tab, nab] = trace_and_norm(a + b, K);
      auto [tm, nm] = trace_and_norm(a * b, K);
      CHECK(tab == ta + tb);
      CHECK(nm == na * nb);
      // transitivity through the intermediate field
      if (L == Qir) {
        auto [t1, n1] = trace_and_norm(a, Qi);
        auto [t2, n2] = trace_and_norm(n1, K);
        CHECK(n2 == na);
        CHECK(trace_and_norm(t1, K).first == ta);
      }
    }
  }
}

TEST_CASE("charpoly satisfies Cayley-Hamilton and matches trace and det") {
  std::mt19937_64 rng(7);
  for (const FieldPtr& K : {rationals(), FieldPtr(prime_field(7)), gaussian()}) {
    for (std::size_t n = 0; n <= 5; ++n) {
      Matrix m(K, n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = K->random(rng, 3);
      Coeffs p = charpoly(m);
      REQUIRE(p.size() == n + 1);
      CHECK(K->is_one(p.back()));
      Matrix z = poly_eval(p, m);
      CHECK(z == Matrix(K, n, n));
      if (n > 0) {
        CHECK(K->equal(p[n - 1], K->neg(trace(m))));
        Value d = determinant(m);
        CHECK(K->equal(p[0], n % 2 ? K->neg(d) : d));
      }
      Coeffs mp = minpoly(m);
      CHECK(upoly::rem(*K, p, mp).empty());
      CHECK(poly_eval(mp, m) == Matrix(K, n, n));
    }
  }
}

TEST_CASE("kernel and solve") {
  FieldPtr Q = rationals();
  Matrix m(Q, 2, 3);
  long vals[2][3] = {{1, 2, 3}, {2, 4, 6}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = Q->from_int(vals[i][j]);
  CHECK(rank(m) == 1);
  auto ker = kernel(m);
  CHECK(ker.size() == 2);
  for (auto& v : ker) {
    Coeffs r = m.apply(v);
    for (auto& x : r) CHECK(Q->is_zero(x));
  }
  CHECK(!solve(m, {Q->one(), Q->one()}).has_value());
  CHECK(solve(m, {Q->one(), Q->from_int(2)}).has_value());
  CHECK_THROWS_AS(inverse(m * m.transpose()), DivisionByZero);
}

TEST_CASE("factorizations over finite fields agree with brute force") {
  std::mt19937_64 rng(19);
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL}) {
    FieldPtr F = prime_field(p);
    for (int trial = 0; trial < 25; ++trial) {
      int n = 1 + static_cast<int>(rng() % 7);
      Coeffs c;
      for (int i = 0; i < n; ++i) c.push_back(F->random(rng, 0));
      c.push_back(F->one());
      UPoly f(F, c);
      auto fs = univ_factor(f);
      CHECK(product(fs, F) == f);
      for (auto& [g, e] : fs) {
        CHECK(brute_irreducible(g));
        CHECK(F->is_one(g.lc()));
      }
    }
  }
}

TEST_CASE("factorization over GF(4) and GF(9)") {
  FieldPtr F2 = prime_field(2);
  FieldPtr F4 = adjoin_root(F2, "w", icoeffs(F2, {1, 1, 1}));
  // x^4 - x splits completely over GF(4)
  auto fs = univ_factor(ipoly(F4, {0, -1, 0, 0, 1}));
  CHECK(fs.size() == 4);
  CHECK(product(fs, F4) == ipoly(F4, {0, -1, 0, 0, 1}));
  FieldPtr F3 = prime_field(3);
  FieldPtr F9 = adjoin_root(F3, "j", icoeffs(F3, {1, 0, 1}));
  auto gs = univ_factor(ipoly(F9, {0, -1, 0, 0, 0, 0, 0, 0, 0, 1}));
  CHECK(gs.size() == 9);
  // x^2 + x + 1 = (x - 1)^2 in characteristic 3
  auto hs = univ_factor(ipoly(F9, {1, 1, 1}));
  CHECK(hs.size() == 1);
  CHECK(hs[0].second == 2);
}

TEST_CASE("rational factorization") {
  FieldPtr Q = rationals();
  CHECK(is_irreducible(ipoly(Q, {1, 0, 0, 0, 1})));
  CHECK(is_irreducible(ipoly(Q, {1, 0, -10, 0, 1})));
  auto fs = univ_factor(ipoly(Q, {-1, 0, 0, 0, 1}));
  CHECK(show(fs) == "(x + 1)^1 ; (x - 1)^1 ; (x^2 + 1)^1");
  UPoly f = ipoly(Q, {2, 0, -3, 0, 1}) * ipoly(Q, {2, 0, -3, 0, 1}) * ipoly(Q, {-5, 0, 0, 1}) * ipoly(Q, {3, 2});
  auto gs = univ_factor(f);
  CHECK(product(gs, Q) == f.monic());
  CHECK(show(gs) == "(x + 1)^2 ; (x + 3/2)^1 ; (x - 1)^2 ; (x^2 - 2)^2 ; (x^3 - 5)^1");
  // product of two degree-4 Swinnerton-Dyer-type quartics
  UPoly sd1 = ipoly(Q, {1, 0, -10, 0, 1});
  UPoly sd2 = ipoly(Q, {4, 0, -16, 0, 1});
  auto hs = univ_factor(sd1 * sd2);
  CHECK(hs.size() == 2);
}

TEST_CASE("factorization over algebraic extensions") {
  FieldPtr Qi = gaussian();
  auto fs = univ_factor(ipoly(Qi, {1, 0, 0, 0, 1}));
  CHECK(show(fs) == "(x^2 + i)^1 ; (x^2 - i)^1");
  FieldPtr Qr = sqrt2();
  auto gs = univ_factor(ipoly(Qr, {1, 0, 0, 0, 1}));
  CHECK(show(gs) == "(x^2 + r*x + 1)^1 ; (x^2 - r*x + 1)^1");
  CHECK(is_irreducible(ipoly(Qi, {-2, 0, 1})));
  FieldPtr Qir = adjoin_root(Qi, "r", icoeffs(Qi, {-2, 0, 1}));
  auto hs = univ_factor(ipoly(Qir, {1, 0, 0, 0, 1}));
  CHECK(hs.size() == 4);
  CHECK(product(hs, Qir) == ipoly(Qir, {1, 0, 0, 0, 1}));
}

TEST_CASE("factorization over rational function fields") {
  FieldPtr Q = rationals();
  FieldPtr Qt = adjoin_transcendental(Q, "t");
  Value t = Qt->generator();
  auto tpoly = [&](std::vector<Value> c) { return UPoly(Qt, Coeffs(c.begin(), c.end())); };
  UPoly a = tpoly({Qt->neg(t), Qt->zero(), Qt->one()});                                // x^2 - t
  UPoly b = tpoly({Qt->neg(Qt->add(t, Qt->one())), Qt->zero(), Qt->one()});            // x^2 - t - 1
  CHECK(is_irreducible(a));
  auto fs = univ_factor(a * b);
  CHECK(fs.size() == 2);
  CHECK(product(fs, Qt) == a * b);
  UPoly c = tpoly({Qt->neg(Qt->mul(t, t)), Qt->zero(), Qt->one()});                   // x^2 - t^2
  auto gs = univ_factor(c);
  CHECK(show(gs) == "(x + t)^1 ; (x - t)^1");
  FieldPtr F5 = prime_field(5);
  FieldPtr F5t = adjoin_transcendental(F5, "t");
  Value u = F5t->generator();
  UPoly d(F5t, {F5t->neg(F5t->mul(u, u)), F5t->zero(), F5t->one()});
  CHECK(univ_factor(d).size() == 2);
}

TEST_CASE("inseparable polynomials over imperfect fields") {
  FieldPtr F2 = prime_field(2);
  FieldPtr K = adjoin_transcendental(F2, "s");
  Value s = K->generator();
  UPoly f(K, {s, K->zero(), K->one()});  // x^2 + s
  CHECK(is_irreducible(f));
  UPoly g(K, {K->mul(s, s), K->zero(), K->one()});  // x^2 + s^2 = (x + s)^2
  auto gs = univ_factor(g);
  REQUIRE(gs.size() == 1);
  CHECK(gs[0].second == 2);
  CHECK(gs[0].first.degree() == 1);
  UPoly h(K, {K->mul(s, s), K->zero(), K->zero(), K->zero(), K->one()});  // (x^2 + s)^2
  auto hs = univ_factor(h);
  REQUIRE(hs.size() == 1);
  CHECK(hs[0].second == 2);
  CHECK(hs[0].first == f);
  FieldPtr F3 = prime_field(3);
  FieldPtr K3 = adjoin_transcendental(F3, "s");
  UPoly k(K3, {K3->neg(K3->generator()), K3->zero(), K3->zero(), K3->one()});
  CHECK(is_irreducible(k));
  // x^2 + s over F2(s)[r]/(r^2 + s) becomes (x + r)^2
  FieldPtr L = adjoin_root(K, "r", f.coeffs());
  UPoly fl(L, upoly::lift(*L, *K, f.coeffs()));
  auto ls = univ_factor(fl);
  REQUIRE(ls.size() == 1);
  CHECK(ls[0].second == 2);
  // x^2 + r is irreducible over L since r is not a square there
  UPoly m(L, {L->generator(), L->zero(), L->one()});
  CHECK(is_irreducible(m));
}

TEST_CASE("p-th roots") {
  FieldPtr F3 = prime_field(3);
  FieldPtr F9 = adjoin_root(F3, "j", icoeffs(F3, {1, 0, 1}));
  std::mt19937_64 rng(2);
  for (int i = 0; i < 10; ++i) {
    Value a = F9->random(rng, 0);
    auto r = F9->pth_root(a);
    REQUIRE(r);
    CHECK(F9->equal(F9->pow(*r, 3), a));
  }
  FieldPtr K = adjoin_transcendental(F3, "s");
  Value s = K->generator();
  CHECK(!K->pth_root(s));
  auto r = K->pth_root(K->pow(K->add(s, K->one()), 3));
  REQUIRE(r);
  CHECK(K->equal(*r, K->add(s, K->one())));
}
