#include "tgs/algebra/mpoly.hpp"

#include <algorithm>
#include <map>

#include "tgs/algebra/upoly.hpp"
#include "tgs/error.hpp"

namespace tgs {

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

int mono_degree(const Monomial& a) {
  int d = 0;
  for (int e : a) d += e;
  return d;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

std::string render_monomial(const Monomial& m, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i]) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

namespace {

int degrevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  int da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = hi; i-- > lo;)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

}  // namespace

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::Lex:
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      return 0;
    case Kind::DegRevLex:
      return degrevlex_range(a, b, 0, a.size());
    case Kind::Block: {
      int c = degrevlex_range(a, b, 0, split_);
      if (c) return c;
      return degrevlex_range(a, b, split_, a.size());
    }
  }
  return 0;
}

MPoly::MPoly(FieldPtr f, std::size_t nvars, TermOrder order) : f_(std::move(f)), n_(nvars), order_(order) {}

MPoly MPoly::constant(FieldPtr f, std::size_t nvars, const Value& c, TermOrder order) {
  MPoly p(f, nvars, order);
  if (!f->is_zero(c)) p.terms_.push_back({Monomial(nvars, 0), c});
  return p;
}

MPoly MPoly::variable(FieldPtr f, std::size_t nvars, std::size_t i, TermOrder order) {
  Monomial m(nvars, 0);
  m[i] = 1;
  Value one = f->one();
  return monomial(std::move(f), m, one, order);
}

MPoly MPoly::monomial(FieldPtr f, const Monomial& m, const Value& c, TermOrder order) {
  MPoly p(f, m.size(), order);
  if (!f->is_zero(c)) p.terms_.push_back({m, c});
  return p;
}

MPoly MPoly::from_terms(FieldPtr f, std::size_t nvars, std::vector<Term> terms, TermOrder order) {
  MPoly p(std::move(f), nvars, order);
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void MPoly::normalize() {
  const Field& F = *f_;
  std::sort(terms_.begin(), terms_.end(),
            [&](const Term& a, const Term& b) { return order_.compare(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono)
      out.back().coef = F.add(out.back().coef, t.coef);
    else
      out.push_back(std::move(t));
  }
  std::vector<Term> nz;
  for (auto& t : out)
    if (!F.is_zero(t.coef)) nz.push_back(std::move(t));
  terms_ = std::move(nz);
}

bool MPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && mono_degree(terms_[0].mono) == 0); }

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, mono_degree(t.mono));
  return d;
}

int MPoly::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono[var]);
  return d;
}

static void check_ring(const MPoly& a, const MPoly& b) {
  if (a.field() != b.field()) throw TowerMismatch("polynomials over different fields");
  if (a.nvars() != b.nvars() || !(a.order() == b.order()))
    throw InvalidArgument("polynomials in different rings");
}

MPoly MPoly::operator+(const MPoly& o) const {
  check_ring(*this, o);
  return sub_mul(f_->neg(f_->one()), Monomial(n_, 0), o);
}

MPoly MPoly::operator-(const MPoly& o) const {
  check_ring(*this, o);
  return sub_mul(f_->one(), Monomial(n_, 0), o);
}

MPoly MPoly::sub_mul(const Value& c, const Monomial& m, const MPoly& g) const {
  const Field& F = *f_;
  MPoly r(f_, n_, order_);
  r.terms_.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  bool unit_mono = mono_degree(m) == 0;
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j == g.terms_.size()) {
      r.terms_.push_back(terms_[i++]);
      continue;
    }
    Monomial gm = unit_mono ? g.terms_[j].mono : mono_mul(g.terms_[j].mono, m);
    int cmp = i == terms_.size() ? -1 : order_.compare(terms_[i].mono, gm);
    if (cmp > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      r.terms_.push_back({std::move(gm), F.neg(F.mul(c, g.terms_[j].coef))});
      ++j;
    } else {
      Value v = F.sub(terms_[i].coef, F.mul(c, g.terms_[j].coef));
      if (!F.is_zero(v)) r.terms_.push_back({std::move(gm), std::move(v)});
      ++i;
      ++j;
    }
  }
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  check_ring(*this, o);
  if (is_zero() || o.is_zero()) return MPoly(f_, n_, order_);
  const Field& F = *f_;
  std::vector<Term> all;
  all.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) all.push_back({mono_mul(a.mono, b.mono), F.mul(a.coef, b.coef)});
  return from_terms(f_, n_, std::move(all), order_);
}

MPoly MPoly::operator-() const {
  MPoly r(f_, n_, order_);
  for (const auto& t : terms_) r.terms_.push_back({t.mono, f_->neg(t.coef)});
  return r;
}

MPoly MPoly::scaled(const Value& c) const {
  if (f_->is_zero(c)) return MPoly(f_, n_, order_);
  MPoly r(f_, n_, order_);
  for (const auto& t : terms_) r.terms_.push_back({t.mono, f_->mul(t.coef, c)});
  return r;
}

MPoly MPoly::mul_term(const Monomial& m, const Value& c) const {
  if (f_->is_zero(c)) return MPoly(f_, n_, order_);
  MPoly r(f_, n_, order_);
  for (const auto& t : terms_) r.terms_.push_back({mono_mul(t.mono, m), f_->mul(t.coef, c)});
  return r;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly r = constant(f_, n_, f_->one(), order_);
  MPoly b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

MPoly MPoly::monic() const {
  if (is_zero() || f_->is_one(lead().coef)) return *this;
  return scaled(f_->inv(lead().coef));
}

MPoly MPoly::with_order(TermOrder order) const {
  MPoly r(f_, n_, order);
  r.terms_ = terms_;
  r.normalize();
  return r;
}

MPoly MPoly::remap(const std::vector<std::size_t>& perm, std::size_t nvars, TermOrder order) const {
  std::vector<Term> ts;
  for (const auto& t : terms_) {
    Monomial m(nvars, 0);
    for (std::size_t i = 0; i < n_; ++i) m[perm[i]] += t.mono[i];
    ts.push_back({std::move(m), t.coef});
  }
  return from_terms(f_, nvars, std::move(ts), order);
}

bool MPoly::operator==(const MPoly& o) const {
  if (f_ != o.f_ || n_ != o.n_ || terms_.size() != o.terms_.size()) return false;
  MPoly b = o.order_ == order_ ? o : o.with_order(order_);
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != b.terms_[i].mono || !f_->equal(terms_[i].coef, b.terms_[i].coef)) return false;
  return true;
}

std::string MPoly::str(const std::vector<std::string>& names) const {
  std::vector<std::string> parts;
  for (const auto& t : terms_) {
    std::string mono = render_monomial(t.mono, names);
    std::string c = f_->render(t.coef);
    if (!mono.empty()) c = wrap_coefficient(*f_, c);
    parts.push_back(render_term(c, mono));
  }
  return join_terms(parts);
}

TowerElem evaluate(const MPoly& f, const std::vector<TowerElem>& point) {
  if (point.size() != f.nvars()) throw InvalidArgument("point has the wrong number of coordinates");
  FieldPtr L = point.empty() ? f.field() : point[0].field();
  for (const auto& p : point) require_same_field(*L, *p.field());
  const Field& K = *f.field();
  std::vector<std::vector<Value>> powers(point.size());
  auto power = [&](std::size_t i, int e) -> const Value& {
    auto& pw = powers[i];
    if (pw.empty()) pw.push_back(L->one());
    while (static_cast<int>(pw.size()) <= e) pw.push_back(L->mul(pw.back(), point[i].value()));
    return pw[static_cast<std::size_t>(e)];
  };
  Value acc = L->zero();
  for (const auto& t : f.terms()) {
    Value v = L->lift_from(K, t.coef);
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      if (t.mono[i]) v = L->mul(v, power(i, t.mono[i]));
    acc = L->add(acc, v);
  }
  return {L, acc};
}

MPoly substitute_prefix(const MPoly& f, const std::vector<TowerElem>& values, const FieldPtr& L, TermOrder order) {
  const std::size_t k = values.size();
  const std::size_t rest = f.nvars() - k;
  const Field& K = *f.field();
  std::vector<std::vector<Value>> powers(k);
  auto power = [&](std::size_t i, int e) -> const Value& {
    auto& pw = powers[i];
    if (pw.empty()) pw.push_back(L->one());
    while (static_cast<int>(pw.size()) <= e) pw.push_back(L->mul(pw.back(), values[i].value()));
    return pw[static_cast<std::size_t>(e)];
  };
  for (const auto& v : values) require_same_field(*L, *v.field());
  std::vector<Term> ts;
  for (const auto& t : f.terms()) {
    Value c = L->lift_from(K, t.coef);
    for (std::size_t i = 0; i < k; ++i)
      if (t.mono[i]) c = L->mul(c, power(i, t.mono[i]));
    ts.push_back({Monomial(t.mono.begin() + static_cast<long>(k), t.mono.end()), std::move(c)});
  }
  return MPoly::from_terms(L, rest, std::move(ts), order);
}

MPoly substitute(const MPoly& f, const std::vector<MPoly>& images) {
  if (images.size() != f.nvars()) throw InvalidArgument("substitution has the wrong arity");
  const MPoly& proto = images.at(0);
  const FieldPtr& L = proto.field();
  MPoly acc(L, proto.nvars(), proto.order());
  std::vector<std::vector<MPoly>> powers(images.size());
  for (const auto& t : f.terms()) {
    MPoly term = MPoly::constant(L, proto.nvars(), L->lift_from(*f.field(), t.coef), proto.order());
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (!t.mono[i]) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(MPoly::constant(L, proto.nvars(), L->one(), proto.order()));
      while (static_cast<int>(pw.size()) <= t.mono[i]) pw.push_back(pw.back() * images[i]);
      term = term * pw[static_cast<std::size_t>(t.mono[i])];
    }
    acc = acc + term;
  }
  return acc;
}

MPoly lift_coefficients(const MPoly& f, const FieldPtr& ext) {
  std::vector<Term> ts;
  for (const auto& t : f.terms()) ts.push_back({t.mono, ext->lift_from(*f.field(), t.coef)});
  return MPoly::from_terms(ext, f.nvars(), std::move(ts), f.order());
}

}  // namespace tgs
