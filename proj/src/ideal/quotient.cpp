#include "tgs/ideal/quotient.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "tgs/error.hpp"

namespace tgs {

ArtinianQuotient::ArtinianQuotient(GroebnerBasis gb) : gb_(std::move(gb)) {
  if (!gb_.is_zero_dimensional()) throw NotZeroDimensional("ideal " + gb_.str() + " is not zero-dimensional");
  const std::size_t n = gb_.nvars();
  auto lts = gb_.leading_monomials();
  auto standard = [&](const Monomial& m) {
    for (const auto& l : lts)
      if (divides(l, m)) return false;
    return true;
  };
  if (!gb_.is_unit()) {
    std::set<Monomial> seen;
    std::deque<Monomial> queue{Monomial(n, 0)};
    seen.insert(queue.front());
    while (!queue.empty()) {
      Monomial m = queue.front();
      queue.pop_front();
      basis_.push_back(m);
      for (std::size_t i = 0; i < n; ++i) {
        Monomial m2 = m;
        ++m2[i];
        if (seen.count(m2) || !standard(m2)) continue;
        seen.insert(m2);
        queue.push_back(m2);
      }
    }
    const TermOrder& ord = gb_.order();
    std::sort(basis_.begin(), basis_.end(), [&](const Monomial& a, const Monomial& b) { return ord.compare(a, b) < 0; });
  }
  for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = i;
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<Coeffs> cols;
    for (const Monomial& m : basis_) {
      Monomial m2 = m;
      ++m2[v];
      cols.push_back(coordinates(MPoly::monomial(field(), m2, field()->one(), gb_.order())));
    }
    mult_.push_back(Matrix::from_columns(field(), basis_.size(), cols));
  }
}

Coeffs ArtinianQuotient::coordinates(const MPoly& f) const {
  MPoly r = gb_.reduce(f);
  Coeffs c(basis_.size(), field()->zero());
  for (const Term& t : r.terms()) c[index_.at(t.mono)] = t.coef;
  return c;
}

MPoly ArtinianQuotient::element(const Coeffs& c) const {
  std::vector<Term> ts;
  for (std::size_t i = 0; i < c.size(); ++i) ts.push_back({basis_[i], c[i]});
  return MPoly::from_terms(field(), gb_.nvars(), std::move(ts), gb_.order());
}

Coeffs ArtinianQuotient::unit() const { return coordinates(MPoly::constant(field(), gb_.nvars(), field()->one(), gb_.order())); }

Matrix ArtinianQuotient::multiplication_by(const MPoly& f) const {
  std::vector<Coeffs> cols;
  for (const Monomial& m : basis_) cols.push_back(coordinates(f.mul_term(m, field()->one()).with_order(gb_.order())));
  return Matrix::from_columns(field(), basis_.size(), cols);
}

ArtinianQuotient quotient_basis(const GroebnerBasis& gb) { return ArtinianQuotient(gb); }

}  // namespace tgs
