#pragma once

#include <random>
#include <vector>

#include "tgs/sym/algebra.hpp"

namespace tgs::gen {

/// Seeded generators for the lemma suites and property tests.

Value small_value(std::mt19937_64& rng, const Field& K, int size = 3);
Coeffs random_vector(std::mt19937_64& rng, const Field& K, std::size_t n, int size = 3);
Matrix random_invertible(std::mt19937_64& rng, const FieldPtr& K, std::size_t n);
/// An element of B that is a unit.
Coeffs random_unit(std::mt19937_64& rng, const FiniteFreeAlgebra& B);

/// K[x, y]/I local at the origin (I contains a power of the maximal ideal
/// plus random elements of it), rank between 1 and max_rank, in a scrambled
/// basis.
FiniteFreeAlgebra random_local_algebra(std::mt19937_64& rng, const FieldPtr& K, std::size_t max_rank);
/// Zero-dimensional quotient all of whose points are K-rational, of
/// dimension at most max_dim.
ArtinianQuotient random_split_quotient(std::mt19937_64& rng, const FieldPtr& K, std::size_t max_dim);
/// A random monic irreducible polynomial of the given degree over K.
Coeffs random_irreducible(std::mt19937_64& rng, const FieldPtr& K, int degree);
/// Finite extensions L/K for the norm/trace suite: quadratic and cubic
/// fields over Q, GF(p^n) for n <= 4, and two-step towers.  Returns pairs
/// (L, K).
std::vector<std::pair<FieldPtr, FieldPtr>> extension_corpus(std::mt19937_64& rng, std::size_t count);

}  // namespace tgs::gen
