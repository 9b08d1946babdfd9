#include "tgs/verify/suites.hpp"

#include <functional>
#include <random>

#include "tgs/error.hpp"
#include "tgs/sym/lemmas.hpp"
#include "tgs/verify/instances.hpp"

namespace tgs {

std::string CheckResult::summary() const {
  return label + ": " + std::to_string(instances - failures.size()) + "/" + std::to_string(instances) + " passed";
}

namespace {

/// Runs one instance; exceptions count as failures.
void run(CheckResult& r, const std::string& what, const std::function<bool()>& body) {
  ++r.instances;
  try {
    if (!body()) r.failures.push_back(what);
  } catch (const std::exception& e) {
    r.failures.push_back(what + ": " + e.what());
  }
}

std::size_t count(SuiteSize size, std::size_t small) { return size == SuiteSize::Small ? small : 2 * small; }

std::string field_label(const FieldPtr& K) { return K->describe(); }

FiniteFreeAlgebra monomial_algebra(const FieldPtr& K, const std::vector<std::string>& vars,
                                   const std::vector<Monomial>& gens) {
  IdealPresentation I{K, vars, {}};
  for (const auto& m : gens) I.gens.push_back(MPoly::monomial(K, m, K->one()));
  return FiniteFreeAlgebra::from_quotient(ArtinianQuotient(buchberger(I)));
}

FiniteFreeAlgebra small_algebra(std::mt19937_64& rng, const FieldPtr& K, std::size_t rank) {
  return uniform(rng, 2) ? gen::random_local_algebra(rng, K, rank)
                         : FiniteFreeAlgebra::from_quotient(gen::random_split_quotient(rng, K, rank));
}

}  // namespace

CheckResult reduction_suite(std::uint64_t seed, SuiteSize size) {
  CheckResult r{"reduction", 0, {}};
  std::mt19937_64 rng(seed);
  std::vector<FieldPtr> fields{rationals(), prime_field(5)};
  if (size == SuiteSize::Full) fields.push_back(prime_field(2));
  for (const FieldPtr& K : fields) {
    const std::string k = field_label(K);
    for (int d = 1; d <= 5; ++d)
      run(r, k + "[t]/(t^" + std::to_string(d) + ")", [&] { return check_reduction(monomial_algebra(K, {"t"}, {{d}})); });
    run(r, k + "[x,y]/(x^2,xy,y^2)",
        [&] { return check_reduction(monomial_algebra(K, {"x", "y"}, {{2, 0}, {1, 1}, {0, 2}})); });
    run(r, k + "[x,y]/(x^2,y^2)", [&] { return check_reduction(monomial_algebra(K, {"x", "y"}, {{2, 0}, {0, 2}})); });
    for (std::size_t i = 0; i < count(size, 4); ++i) {
      FiniteFreeAlgebra B = gen::random_local_algebra(rng, K, 4);
      run(r, "random local algebra of rank " + std::to_string(B.rank()) + " over " + k, [&] { return check_reduction(B); });
    }
  }
  return r;
}

CheckResult norm_trace_suite(std::uint64_t seed, SuiteSize size) {
  CheckResult r{"norm and trace", 0, {}};
  std::mt19937_64 rng(seed);
  for (auto& [L, K] : gen::extension_corpus(rng, count(size, 30))) {
    std::vector<TowerElem> elems;
    while (elems.size() < 5) {
      TowerElem a(L, L->random(rng, 3));
      if (!a.is_zero()) elems.push_back(a);
    }
    run(r, L->describe_over(*K), [&] {
      for (const auto& a : elems)
        if (!check_norm_trace(a, K)) return false;
      return true;
    });
  }
  return r;
}

CheckResult split_p_suite(std::uint64_t seed, SuiteSize size) {
  CheckResult r{"split map p", 0, {}};
  std::mt19937_64 rng(seed);
  std::vector<FieldPtr> fields{rationals(), prime_field(5)};
  for (std::size_t i = 0; i < count(size, 10); ++i) {
    const FieldPtr& K = fields[i % 2];
    FiniteFreeAlgebra B1 = small_algebra(rng, K, 3);
    FiniteFreeAlgebra B2 = small_algebra(rng, K, 6 - B1.rank() < 3 ? 6 - B1.rank() : 3);
    run(r, "ranks " + std::to_string(B1.rank()) + "+" + std::to_string(B2.rank()) + " over " + field_label(K),
        [&] { return check_split_p(B1, B2); });
  }
  return r;
}

CheckResult section_suite(std::uint64_t seed, SuiteSize size) {
  CheckResult r{"connected with a section", 0, {}};
  std::mt19937_64 rng(seed);
  std::vector<FieldPtr> fields{rationals(), prime_field(7), prime_field(2)};
  for (std::size_t i = 0; i < count(size, 10); ++i) {
    const FieldPtr& K = fields[i % 3];
    FiniteFreeAlgebra B = gen::random_local_algebra(rng, K, 4);
    AlgebraPoint ga{gen::random_vector(rng, *K, B.rank())}, gm{gen::random_unit(rng, B)};
    run(r, "local algebra of rank " + std::to_string(B.rank()) + " over " + field_label(K), [&] {
      return check_section(B, GroupPlugin::ga(), ga) && check_section(B, GroupPlugin::gm(), gm);
    });
  }
  return r;
}

CheckResult split_points_suite(std::uint64_t seed, SuiteSize size) {
  CheckResult r{"split algebras", 0, {}};
  std::mt19937_64 rng(seed);
  std::vector<FieldPtr> fields{prime_field(101), rationals()};
  for (std::size_t i = 0; i < count(size, 10); ++i) {
    const FieldPtr& K = fields[i % 2];
    ArtinianQuotient A = gen::random_split_quotient(rng, K, 5);
    FiniteFreeAlgebra B = FiniteFreeAlgebra::from_quotient(A);
    AlgebraPoint ga{gen::random_vector(rng, *K, B.rank())}, gm{gen::random_unit(rng, B)};
    run(r, K->describe() + "[" + std::to_string(A.gb().nvars()) + " vars]/(" + A.gb().str() + ")", [&] {
      return check_split_points(A, GroupPlugin::ga(), ga) && check_split_points(A, GroupPlugin::gm(), gm);
    });
  }
  return r;
}

CheckResult coproduct_suite(std::uint64_t seed, SuiteSize size) {
  CheckResult r{"coproduct", 0, {}};
  std::mt19937_64 rng(seed);
  std::vector<FieldPtr> fields{rationals(), prime_field(5), prime_field(3)};
  const GroupPlugin plugins[] = {GroupPlugin::ga(), GroupPlugin::gm(), GroupPlugin::parse("Ga*Gm")};
  for (std::size_t i = 0; i < count(size, 10); ++i) {
    const FieldPtr& K = fields[i % 3];
    const GroupPlugin& G = plugins[i % 3];
    FiniteFreeAlgebra B1 = small_algebra(rng, K, 3), B2 = small_algebra(rng, K, 3);
    auto point = [&](const FiniteFreeAlgebra& B) {
      AlgebraPoint g;
      for (const auto& f : G.factors())
        g.push_back(f.kind == GroupPlugin::Factor::Kind::Ga ? gen::random_vector(rng, *K, B.rank())
                                                             : gen::random_unit(rng, B));
      return g;
    };
    AlgebraPoint g1 = point(B1), g2 = point(B2);
    run(r, G.str() + " on ranks " + std::to_string(B1.rank()) + "," + std::to_string(B2.rank()) + " over " +
               field_label(K),
        [&] { return check_coproduct(B1, B2, G, g1, g2); });
  }
  return r;
}

CheckResult base_change_suite(std::uint64_t seed, SuiteSize size) {
  CheckResult r{"base change", 0, {}};
  std::mt19937_64 rng(seed);
  FieldPtr Q = rationals(), F5 = prime_field(5);
  FieldPtr Qi = adjoin_root(Q, "i", {Q->one(), Q->zero(), Q->one()});
  FieldPtr F25 = adjoin_root(F5, "w", {F5->from_int(2), F5->zero(), F5->one()});
  const GroupPlugin G = GroupPlugin::parse("Ga*Gm");
  for (std::size_t i = 0; i < count(size, 10); ++i) {
    const FieldPtr& K = i % 2 ? F5 : Q;
    const FieldPtr& ext = i % 2 ? F25 : Qi;
    FiniteFreeAlgebra B = small_algebra(rng, K, 4);
    AlgebraPoint g{gen::random_vector(rng, *K, B.rank()), gen::random_unit(rng, B)};
    run(r, "rank " + std::to_string(B.rank()) + " to " + ext->describe(),
        [&] { return check_base_change(B, ext, G, g); });
  }
  return r;
}

CheckResult basis_independence_suite(std::uint64_t seed, SuiteSize size) {
  CheckResult r{"basis independence", 0, {}};
  std::mt19937_64 rng(seed);
  std::vector<FieldPtr> fields{rationals(), prime_field(7)};
  for (std::size_t i = 0; i < count(size, 10); ++i) {
    const FieldPtr& K = fields[i % 2];
    FiniteFreeAlgebra B = small_algebra(rng, K, 3);
    Matrix P = gen::random_invertible(rng, K, B.rank());
    std::vector<std::vector<Coeffs>> tensors(2);
    for (auto& t : tensors)
      for (std::size_t j = 0; j < B.rank(); ++j) t.push_back(gen::random_vector(rng, *K, B.rank()));
    run(r, "rank " + std::to_string(B.rank()) + " over " + field_label(K),
        [&] { return check_basis_independence(B, P, tensors); });
  }
  return r;
}

std::vector<CheckResult> lemma_suites(std::uint64_t seed, SuiteSize size) {
  return {reduction_suite(seed * 8 + 1, size),    norm_trace_suite(seed * 8 + 2, size),
          split_p_suite(seed * 8 + 3, size),      section_suite(seed * 8 + 4, size),
          split_points_suite(seed * 8 + 5, size), coproduct_suite(seed * 8 + 6, size),
          base_change_suite(seed * 8 + 7, size),  basis_independence_suite(seed * 8 + 8, size)};
}

}  // namespace tgs
