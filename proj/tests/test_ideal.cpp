#include <algorithm>
#include <random>

#include "doctest.h"
#include "support.hpp"
#include "tgs/algebra/parse.hpp"
#include "tgs/error.hpp"
#include "tgs/ideal/decompose.hpp"
#include "tgs/ideal/fiber.hpp"
#include "tgs/ideal/quotient.hpp"

using namespace tgs;
using namespace tgs::testing;

namespace {

GroebnerBasis gb_of(const FieldPtr& K, std::vector<std::string> vars, std::vector<std::string> gens,
                    TermOrder ord = TermOrder::degrevlex()) {
  IdealPresentation I{K, vars, {}};
  for (const auto& g : gens) I.gens.push_back(parse_polynomial(K, vars, g, ord));
  return buchberger(I, ord);
}

// Random zero-dimensional ideal: x_i^{d_i} plus lower-degree noise, and
// sometimes one extra generator.
IdealPresentation random_zero_dim(std::mt19937_64& rng, const FieldPtr& K, std::size_t n, int maxdeg) {
  IdealPresentation I{K, {}, {}};
  for (std::size_t i = 0; i < n; ++i) I.vars.push_back("x" + std::to_string(i));
  auto noise = [&](int below) {
    std::vector<Term> ts;
    for (int k = 0; k < 3; ++k) {
      Monomial m(n, 0);
      int budget = static_cast<int>(uniform(rng, static_cast<std::uint64_t>(below)));
      for (int b = 0; b < budget; ++b) ++m[uniform(rng, n)];
      ts.push_back({m, K->random(rng, 2)});
    }
    return MPoly::from_terms(K, n, ts);
  };
  for (std::size_t i = 0; i < n; ++i) {
    int d = 1 + static_cast<int>(uniform(rng, static_cast<std::uint64_t>(maxdeg)));
    Monomial m(n, 0);
    m[i] = d;
    I.gens.push_back(MPoly::monomial(K, m, K->one()) + noise(d));
  }
  if (uniform(rng, 2)) I.gens.push_back(noise(maxdeg + 1));
  return I;
}

std::vector<std::string> strs(const GroebnerBasis& gb) {
  std::vector<std::string> out;
  for (const auto& p : gb.polys()) out.push_back(p.str(gb.vars()));
  return out;
}

}  // namespace

TEST_CASE("buchberger on small ideals") {
  FieldPtr Q = rationals();
  CHECK(gb_of(Q, {"x"}, {"x"}).str() == "x");
  CHECK(gb_of(Q, {"x", "y"}, {"1"}).str() == "1");
  CHECK(gb_of(Q, {"x", "y"}, {"x*y - 1", "x - y", "x + y"}).is_unit());
  // lex with x > y: y - x^2 and x^2 - 2 give y - 2
  GroebnerBasis g = gb_of(Q, {"x", "y"}, {"y - x^2", "x^2 - 2"}, TermOrder::lex());
  CHECK(strs(g) == std::vector<std::string>{"y - 2", "x^2 - 2"});
  GroebnerBasis h = gb_of(Q, {"x", "y"}, {"x^2 + y^2 - 1", "x - y"}, TermOrder::lex());
  CHECK(h.str() == "y^2 - 1/2, x - y");
}

TEST_CASE("zero-dimensionality") {
  FieldPtr Q = rationals();
  CHECK(gb_of(Q, {"x", "y"}, {"x^2 - 2", "y - x"}).is_zero_dimensional());
  CHECK_FALSE(gb_of(Q, {"x", "y"}, {"x*y - 1"}).is_zero_dimensional());
  CHECK(gb_of(Q, {"x", "y"}, {"1"}).is_zero_dimensional());
  CHECK_THROWS_AS(ArtinianQuotient(gb_of(Q, {"x", "y"}, {"x*y - 1"})), NotZeroDimensional);
}

TEST_CASE("standard monomial bases") {
  FieldPtr Q = rationals();
  ArtinianQuotient A(gb_of(Q, {"x", "y"}, {"x^2", "x*y", "y^2"}));
  CHECK(A.dimension() == 3);
  CHECK(A.basis() == std::vector<Monomial>{{0, 0}, {0, 1}, {1, 0}});
  CHECK(ArtinianQuotient(gb_of(Q, {"x"}, {"x - 7"})).dimension() == 1);
  for (int d = 1; d <= 6; ++d) {
    ArtinianQuotient B(gb_of(prime_field(3), {"t"}, {"t^" + std::to_string(d)}));
    CHECK(B.dimension() == static_cast<std::size_t>(d));
  }
  CHECK(ArtinianQuotient(gb_of(Q, {"x"}, {"1"})).dimension() == 0);
}

TEST_CASE("quotient coordinates round trip") {
  FieldPtr Q = rationals();
  std::vector<std::string> v{"x", "y"};
  ArtinianQuotient A(gb_of(Q, v, {"x^2 - y", "y^2 - 2"}));
  MPoly f = parse_polynomial(Q, v, "x^3 + 5*x*y - 1/3");
  CHECK(A.element(A.coordinates(f)) == A.gb().reduce(f));
  MPoly g = parse_polynomial(Q, v, "x + y");
  CHECK(same_vector(*Q, A.coordinates(f * g), A.multiplication_by(g).apply(A.coordinates(f))));
}

TEST_CASE("property: reduced bases are canonical and multiplication matrices commute") {
  std::mt19937_64 rng(11);
  std::vector<FieldPtr> fields{rationals(), prime_field(5), prime_field(2)};
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const FieldPtr& K = fields[trial % fields.size()];
    std::size_t n = 1 + uniform(rng, 3);
    IdealPresentation I = random_zero_dim(rng, K, n, 3);
    GroebnerBasis g = buchberger(I);
    IdealPresentation J = I;
    std::shuffle(J.gens.begin(), J.gens.end(), rng);
    // add a redundant combination
    J.gens.push_back(I.gens[0] * I.gens.back() + I.gens[0]);
    CHECK(buchberger(J) == g);
    for (const auto& f : I.gens) CHECK(g.contains(f));
    if (g.is_unit()) continue;
    ArtinianQuotient A(g);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        CHECK(A.multiplication(i) * A.multiplication(j) == A.multiplication(j) * A.multiplication(i));
    ++checked;
  }
  CHECK(checked > 30);
}

TEST_CASE("univariate decompositions") {
  FieldPtr Q = rationals();
  ArtinianQuotient A(gb_of(Q, {"x"}, {"(x - 1)^2*(x - 2)"}));
  auto pts = decompose_zero_dim(A);
  REQUIRE(pts.size() == 2);
  std::sort(pts.begin(), pts.end(), [](auto& a, auto& b) { return a.coords[0].str() < b.coords[0].str(); });
  CHECK(pts[0].coords[0].str() == "1");
  CHECK(pts[0].length == 2);
  CHECK(pts[1].coords[0].str() == "2");
  CHECK(pts[1].length == 1);

  auto r = decompose_zero_dim(ArtinianQuotient(gb_of(Q, {"x"}, {"x^2 - 2"})));
  REQUIRE(r.size() == 1);
  CHECK(r[0].length == 1);
  CHECK(r[0].residue->degree_over(*Q) == 2);
  CHECK(r[0].residue->describe() == "Q[x]/(x^2 - 2)");
  CHECK((r[0].coords[0] * r[0].coords[0]).str() == "2");

  auto c = decompose_zero_dim(ArtinianQuotient(gb_of(Q, {"x"}, {"x + 3/4"})));
  REQUIRE(c.size() == 1);
  CHECK(c[0].coords[0].str() == "-3/4");
  CHECK(c[0].length == 1);
}

TEST_CASE("bivariate decompositions") {
  FieldPtr Q = rationals();
  // x = ±√2, y = ±√2: two conjugacy classes of points, each of degree 2
  auto pts = decompose_zero_dim(ArtinianQuotient(gb_of(Q, {"x", "y"}, {"x^2 - 2", "y^2 - 2"})));
  REQUIRE(pts.size() == 2);
  for (auto& p : pts) {
    CHECK(p.length == 1);
    CHECK(p.residue->degree_over(*Q) == 2);
    TowerElem s = p.coords[0] * p.coords[1];
    CHECK((s == TowerElem::integer(p.residue, 2) || s == TowerElem::integer(p.residue, -2)));
  }
  // the fat point x^2, xy, y^2 at the origin
  auto fat = decompose_zero_dim(ArtinianQuotient(gb_of(Q, {"x", "y"}, {"x^2", "x*y", "y^2"})));
  REQUIRE(fat.size() == 1);
  CHECK(fat[0].length == 3);
  CHECK(fat[0].coords[0].is_zero());
  // x^2 + 1 over GF(3) stays a degree-2 point; y = x + 1 rides along
  FieldPtr F3 = prime_field(3);
  auto g = decompose_zero_dim(ArtinianQuotient(gb_of(F3, {"x", "y"}, {"x^2 + 1", "y - x - 1"})));
  REQUIRE(g.size() == 1);
  CHECK(g[0].residue->degree_over(*F3) == 2);
  CHECK(g[0].coords[1] == g[0].coords[0] + TowerElem::integer(g[0].residue, 1));
}

TEST_CASE("property: decomposition conserves dimension and reconstructs the ideal") {
  std::mt19937_64 rng(5);
  std::vector<FieldPtr> fields{rationals(), prime_field(7), prime_field(3)};
  int done = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const FieldPtr& K = fields[trial % fields.size()];
    std::size_t n = 1 + uniform(rng, 2);
    GroebnerBasis g = buchberger(random_zero_dim(rng, K, n, 3));
    if (g.is_unit()) continue;
    ArtinianQuotient A(g);
    if (A.dimension() > 12) continue;
    std::vector<LocalPoint> pts;
    try {
      pts = decompose_zero_dim(A);
    } catch (const SeparatingFormNotFound&) {
      // small prime fields can run out of separating forms
      CHECK(K->is_finite());
      continue;
    }
    std::size_t total = 0;
    for (const auto& p : pts) {
      total += p.length * p.residue->degree_over(*K);
      for (const auto& f : g.polys()) {
        TowerElem v = evaluate(f, p.coords);
        CHECK(v.is_zero());
      }
    }
    CHECK(total == A.dimension());
    GroebnerBasis acc(K, g.vars(), g.order(), {MPoly::constant(K, n, K->one())});
    for (const auto& p : pts) acc = ideal_intersection(acc, GroebnerBasis(K, g.vars(), g.order(), p.primary));
    CHECK(acc == g);
    ++done;
  }
  CHECK(done >= 20);
}

TEST_CASE("fiber ideals") {
  FieldPtr Q = rationals();
  std::vector<std::string> v{"x", "y"};
  IdealPresentation I{Q, v, {parse_polynomial(Q, v, "y^2 - x")}};
  IdealPresentation F = fiber_ideal(I, {TowerElem::integer(Q, 2)});
  REQUIRE(F.gens.size() == 1);
  CHECK(F.gens[0].str(F.vars) == "y^2 - 2");

  FieldPtr L = adjoin_root(Q, "a", icoeffs(Q, {-3, 0, 1}));
  IdealPresentation G{Q, v, {parse_polynomial(Q, v, "y - x")}};
  IdealPresentation Ga = fiber_ideal(G, {TowerElem::generator(L)});
  CHECK(Ga.field == L);
  CHECK(Ga.gens[0].str(Ga.vars) == "y - a");

  FieldPtr R = adjoin_root(Q, "r", icoeffs(Q, {-2, 0, 1}));
  std::vector<std::string> yz{"y", "z"};
  IdealPresentation graph{Q, yz, {parse_polynomial(Q, yz, "z - y^2")}};
  IdealPresentation at = fiber_ideal(graph, {TowerElem::generator(R)});
  CHECK(at.gens[0].str(at.vars) == "z - 2");
}

TEST_CASE("finiteness over the first block") {
  FieldPtr Q = rationals();
  std::vector<std::string> v{"x", "y"};
  auto check = [&](std::vector<std::string> gens) {
    IdealPresentation I{Q, v, {}};
    for (auto& g : gens) I.gens.push_back(parse_polynomial(Q, v, g));
    return finite_over_first_block(I, 1);
  };
  auto a = check({"y^2 - x"});
  CHECK(a.generically_finite);
  CHECK(a.integral);
  auto b = check({"x"});
  CHECK_FALSE(b.dominant);
  CHECK_FALSE(b.generically_finite);
  auto c = check({"y - x^3 - 2*x"});
  CHECK(c.generically_finite);
  CHECK(c.integral);
  auto d = check({"x*y - 1"});
  CHECK(d.generically_finite);
  CHECK_FALSE(d.integral);
  // the component y = 0 dominates; x = 0 lies over a closed point
  auto e = check({"x*y"});
  CHECK(e.generically_finite);
  CHECK_FALSE(e.integral);
}

TEST_CASE("point ideals") {
  FieldPtr Q = rationals();
  FieldPtr R = adjoin_root(Q, "r", icoeffs(Q, {-2, 0, 1}));
  TowerElem r = TowerElem::generator(R);
  GroebnerBasis g = point_ideal(Q, {"x", "y"}, {r, r * r});
  CHECK(strs(g) == std::vector<std::string>{"y - 2", "x^2 - 2"});
  GroebnerBasis h = point_ideal(Q, {"x", "y"}, {r * r, r + TowerElem::integer(R, 1)});
  CHECK(strs(h) == std::vector<std::string>{"y^2 - 2*y - 1", "x - 2"});
  // conjugate points give the same ideal
  CHECK(point_ideal(Q, {"x", "y"}, {-r, TowerElem::integer(R, 2)}) == g);
}

TEST_CASE("property: point ideals of decomposed points") {
  std::mt19937_64 rng(23);
  int done = 0;
  for (int trial = 0; trial < 40; ++trial) {
    FieldPtr K = trial % 2 ? rationals() : prime_field(11);
    GroebnerBasis g = buchberger(random_zero_dim(rng, K, 2, 3));
    if (g.is_unit()) continue;
    std::vector<LocalPoint> pts;
    try {
      pts = decompose_zero_dim(ArtinianQuotient(g));
    } catch (const SeparatingFormNotFound&) {
      continue;
    }
    for (const auto& p : pts) {
      GroebnerBasis m = point_ideal(K, g.vars(), p.coords);
      CHECK(ArtinianQuotient(m).dimension() == p.residue->degree_over(*K));
      for (const auto& f : g.polys()) CHECK(m.contains(f.with_order(TermOrder::lex())));
    }
    ++done;
  }
  CHECK(done > 15);
}

TEST_CASE("expression parsing") {
  FieldPtr Q = rationals();
  FieldPtr R = adjoin_root(Q, "r", icoeffs(Q, {-2, 0, 1}));
  std::vector<std::string> v{"x", "y"};
  CHECK(parse_polynomial(Q, v, "(x + y)^2 - 2*x*y").str(v) == "x^2 + y^2");
  CHECK(parse_polynomial(Q, v, "-x^2 # comment\n + 1/2").str(v) == "-x^2 + 1/2");
  CHECK(parse_polynomial(R, v, "r*x + r^2").str(v) == "r*x + 2");
  CHECK(parse_element(R, "(1 + r)/2").str() == "1/2*r + 1/2");
  CHECK_THROWS_AS(parse_polynomial(Q, v, "x + z"), NameError);
  CHECK_THROWS_AS(parse_polynomial(Q, v, "x +"), SyntaxError);
  CHECK_THROWS_AS(parse_polynomial(Q, v, "(x"), SyntaxError);
  CHECK_THROWS_AS(parse_polynomial(Q, v, "1/x"), TypeError);
  CHECK_THROWS_AS(parse_polynomial(Q, v, "1/0"), DivisionByZero);
  try {
    parse_polynomial(Q, v, "x + z");
  } catch (const NameError& e) {
    CHECK(e.offset() == 4);
  }
}
