#include "tgs/verify/instances.hpp"

#include "tgs/algebra/factor.hpp"
#include "tgs/error.hpp"

namespace tgs::gen {

Value small_value(std::mt19937_64& rng, const Field& K, int size) { return K.random(rng, size); }

Coeffs random_vector(std::mt19937_64& rng, const Field& K, std::size_t n, int size) {
  Coeffs v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(small_value(rng, K, size));
  return v;
}

Matrix random_invertible(std::mt19937_64& rng, const FieldPtr& K, std::size_t n) {
  for (;;) {
    Matrix M(K, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) M.at(i, j) = small_value(rng, *K, 2);
    if (!K->is_zero(determinant(M))) return M;
  }
}

Coeffs random_unit(std::mt19937_64& rng, const FiniteFreeAlgebra& B) {
  for (;;) {
    Coeffs g = random_vector(rng, *B.base(), B.rank());
    if (B.is_unit(g)) return g;
  }
}

namespace {

MPoly random_in_maximal_ideal(std::mt19937_64& rng, const FieldPtr& K, std::size_t n, int maxdeg) {
  std::vector<Term> ts;
  for (int k = 0; k < 3; ++k) {
    Monomial m(n, 0);
    int deg = 1 + static_cast<int>(uniform(rng, static_cast<std::uint64_t>(maxdeg)));
    for (int b = 0; b < deg; ++b) ++m[uniform(rng, n)];
    ts.push_back({m, small_value(rng, *K)});
  }
  return MPoly::from_terms(K, n, ts);
}

}  // namespace

FiniteFreeAlgebra random_local_algebra(std::mt19937_64& rng, const FieldPtr& K, std::size_t max_rank) {
  for (;;) {
    std::size_t n = 1 + uniform(rng, 2);
    int k = 2 + static_cast<int>(uniform(rng, 3));
    IdealPresentation I{K, n == 1 ? std::vector<std::string>{"x"} : std::vector<std::string>{"x", "y"}, {}};
    for (int a = 0; a <= k; ++a) {
      if (n == 1 && a > 0) break;
      Monomial m(n, 0);
      m[0] = k - a;
      if (n == 2) m[1] = a;
      I.gens.push_back(MPoly::monomial(K, m, K->one()));
    }
    std::size_t extra = uniform(rng, 3);
    for (std::size_t e = 0; e < extra; ++e) I.gens.push_back(random_in_maximal_ideal(rng, K, n, k));
    GroebnerBasis gb = buchberger(I);
    if (gb.is_unit()) continue;
    ArtinianQuotient A(gb);
    if (A.dimension() == 0 || A.dimension() > max_rank) continue;
    FiniteFreeAlgebra B = FiniteFreeAlgebra::from_quotient(A);
    return B.change_basis(random_invertible(rng, K, B.rank()));
  }
}

ArtinianQuotient random_split_quotient(std::mt19937_64& rng, const FieldPtr& K, std::size_t max_dim) {
  for (;;) {
    bool bivariate = uniform(rng, 2);
    std::vector<std::string> vars = bivariate ? std::vector<std::string>{"x", "y"} : std::vector<std::string>{"x"};
    const std::size_t n = vars.size();
    MPoly x = MPoly::variable(K, n, 0);
    MPoly f = MPoly::constant(K, n, K->one());
    std::size_t npts = 1 + uniform(rng, 3);
    std::vector<Value> used;
    for (std::size_t i = 0; i < npts; ++i) {
      Value a = small_value(rng, *K, 4);
      bool dup = false;
      for (const Value& u : used) dup |= K->equal(u, a);
      if (dup) continue;
      used.push_back(a);
      f = f * (x - MPoly::constant(K, n, a)).pow(1 + static_cast<unsigned>(uniform(rng, 2)));
    }
    IdealPresentation I{K, vars, {f}};
    if (bivariate) {
      MPoly h = MPoly::constant(K, n, small_value(rng, *K)) + x.scaled(small_value(rng, *K));
      I.gens.push_back((MPoly::variable(K, n, 1) - h).pow(1 + static_cast<unsigned>(uniform(rng, 2))));
    }
    ArtinianQuotient A(buchberger(I));
    if (A.dimension() >= 1 && A.dimension() <= max_dim) return A;
  }
}

Coeffs random_irreducible(std::mt19937_64& rng, const FieldPtr& K, int degree) {
  for (;;) {
    Coeffs c = random_vector(rng, *K, static_cast<std::size_t>(degree), 3);
    c.push_back(K->one());
    if (is_irreducible(UPoly(K, c))) return c;
  }
}

std::vector<std::pair<FieldPtr, FieldPtr>> extension_corpus(std::mt19937_64& rng, std::size_t count) {
  std::vector<std::pair<FieldPtr, FieldPtr>> out;
  FieldPtr Q = rationals();
  const std::uint64_t primes[] = {2, 3, 5, 7};
  std::size_t round = 0;
  while (out.size() < count) {
    switch (round++ % 5) {
      case 0:
        out.emplace_back(adjoin_root(Q, "a", random_irreducible(rng, Q, 2)), Q);
        break;
      case 1:
        out.emplace_back(adjoin_root(Q, "a", random_irreducible(rng, Q, 3)), Q);
        break;
      case 2:
      case 3: {
        FieldPtr F = prime_field(primes[uniform(rng, 4)]);
        int n = 2 + static_cast<int>(uniform(rng, 3));
        out.emplace_back(adjoin_root(F, "a", random_irreducible(rng, F, n)), F);
        break;
      }
      default: {
        // two-step tower, measured over the bottom or the middle
        bool finite = uniform(rng, 2);
        FieldPtr K = finite ? prime_field(primes[uniform(rng, 3)]) : Q;
        FieldPtr M = adjoin_root(K, "a", random_irreducible(rng, K, 2));
        FieldPtr L = adjoin_root(M, "b", random_irreducible(rng, M, finite ? 2 : 1 + static_cast<int>(uniform(rng, 2)) + 1));
        out.emplace_back(L, uniform(rng, 3) ? K : M);
        break;
      }
    }
  }
  return out;
}

}  // namespace tgs::gen
