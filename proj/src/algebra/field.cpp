#include "tgs/algebra/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "tgs/algebra/matrix.hpp"
#include "tgs/algebra/upoly.hpp"
#include "tgs/error.hpp"

namespace tgs {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::string power_str(const std::string& var, std::size_t i) {
  if (i == 0) return "";
  if (i == 1) return var;
  return var + "^" + std::to_string(i);
}

class RationalField final : public Field {
 public:
  RationalField() : Field(Kind::Rational, nullptr, "", 0, false, 1) {}

  Value zero() const override { return Value(mpq_class(0)); }
  Value one() const override { return Value(mpq_class(1)); }
  Value from_integer(const mpz_class& n) const override { return Value(mpq_class(n)); }
  Value add(const Value& a, const Value& b) const override {
    return Value(mpq_class(a.rational() + b.rational()));
  }
  Value sub(const Value& a, const Value& b) const override {
    return Value(mpq_class(a.rational() - b.rational()));
  }
  Value neg(const Value& a) const override { return Value(mpq_class(-a.rational())); }
  Value mul(const Value& a, const Value& b) const override {
    return Value(mpq_class(a.rational() * b.rational()));
  }
  Value inv(const Value& a) const override {
    if (sgn(a.rational()) == 0) throw DivisionByZero("inverse of 0 in Q");
    return Value(mpq_class(1 / a.rational()));
  }
  bool is_zero(const Value& a) const override { return sgn(a.rational()) == 0; }
  bool equal(const Value& a, const Value& b) const override { return a.rational() == b.rational(); }
  std::string render(const Value& a) const override { return a.rational().get_str(); }
  Value random(std::mt19937_64& rng, int size) const override {
    u64 s = static_cast<u64>(std::max(size, 1));
    long num = static_cast<long>(uniform(rng, 2 * s + 1)) - static_cast<long>(s);
    long den = uniform(rng, 2) ? 1 : static_cast<long>(uniform(rng, s) + 1);
    mpq_class q(num, den);
    q.canonicalize();
    return Value(q);
  }
  std::optional<Value> nth_element(u64 i) const override {
    mpz_class n(static_cast<unsigned long>((i + 1) / 2));
    if (i % 2 == 0) n = -n;
    return Value(mpq_class(n));
  }
  std::optional<Value> pth_root(const Value&) const override {
    throw Unsupported("p-th roots requested in characteristic 0");
  }
};

class PrimeField final : public Field {
 public:
  explicit PrimeField(u64 p) : Field(Kind::Prime, nullptr, "", p, true, 1), p_(p) {}

  Value zero() const override { return Value(u64{0}); }
  Value one() const override { return Value(u64{1 % p_}); }
  Value from_integer(const mpz_class& n) const override {
    mpz_class r = n % mpz_class(static_cast<unsigned long>(p_));
    if (r < 0) r += static_cast<unsigned long>(p_);
    return Value(static_cast<u64>(r.get_ui()));
  }
  Value add(const Value& a, const Value& b) const override {
    u64 s = a.residue() + b.residue();
    return Value(s >= p_ ? s - p_ : s);
  }
  Value sub(const Value& a, const Value& b) const override {
    return Value(a.residue() >= b.residue() ? a.residue() - b.residue() : a.residue() + p_ - b.residue());
  }
  Value neg(const Value& a) const override { return Value(a.residue() ? p_ - a.residue() : u64{0}); }
  Value mul(const Value& a, const Value& b) const override {
    return Value(mulmod(a.residue(), b.residue(), p_));
  }
  Value inv(const Value& a) const override {
    if (a.residue() == 0) throw DivisionByZero("inverse of 0 in GF(" + std::to_string(p_) + ")");
    return Value(powmod(a.residue(), p_ - 2, p_));
  }
  bool is_zero(const Value& a) const override { return a.residue() == 0; }
  bool equal(const Value& a, const Value& b) const override { return a.residue() == b.residue(); }
  std::string render(const Value& a) const override { return std::to_string(a.residue()); }
  Value random(std::mt19937_64& rng, int) const override { return Value(uniform(rng, p_)); }
  std::optional<Value> nth_element(u64 i) const override {
    if (i >= p_) return std::nullopt;
    return Value(i);
  }
  std::optional<Value> pth_root(const Value& a) const override { return a; }

 private:
  u64 p_;
};

Coeffs frobenius_split(const Field& K, const Value& a);

class AlgebraicField final : public Field {
 public:
  AlgebraicField(FieldPtr parent, std::string name, Coeffs m)
      : Field(Kind::Algebraic, parent, std::move(name), parent->characteristic(),
              parent->is_finite(), static_cast<std::size_t>(upoly::degree(m))) {
    minpoly_ = std::move(m);
  }

  const Field& P() const { return *parent_; }

  Value zero() const override { return Value(Coeffs{}); }
  Value one() const override { return Value(upoly::constant(P(), P().one())); }
  Value from_integer(const mpz_class& n) const override {
    return Value(upoly::constant(P(), P().from_integer(n)));
  }
  Value add(const Value& a, const Value& b) const override {
    return Value(upoly::add(P(), a.coeffs(), b.coeffs()));
  }
  Value sub(const Value& a, const Value& b) const override {
    return Value(upoly::sub(P(), a.coeffs(), b.coeffs()));
  }
  Value neg(const Value& a) const override { return Value(upoly::neg(P(), a.coeffs())); }
  Value mul(const Value& a, const Value& b) const override {
    if (a.coeffs().empty() || b.coeffs().empty()) return zero();
    return Value(upoly::rem(P(), upoly::mul(P(), a.coeffs(), b.coeffs()), minpoly_));
  }
  Value inv(const Value& a) const override {
    if (a.coeffs().empty()) throw DivisionByZero("inverse of 0 in " + describe());
    Coeffs s, t;
    Coeffs g = upoly::xgcd(P(), a.coeffs(), minpoly_, s, t);
    if (upoly::degree(g) != 0)
      throw DivisionByZero("zero divisor in " + describe() + " (minimal polynomial of " + name_ +
                           " is reducible)");
    return Value(upoly::rem(P(), s, minpoly_));
  }
  bool is_zero(const Value& a) const override { return a.coeffs().empty(); }
  bool equal(const Value& a, const Value& b) const override {
    return upoly::equal(P(), a.coeffs(), b.coeffs());
  }
  std::string render(const Value& a) const override { return upoly::render(P(), a.coeffs(), name_); }
  Value random(std::mt19937_64& rng, int size) const override {
    Coeffs c;
    for (std::size_t i = 0; i < degree_; ++i) c.push_back(P().random(rng, size));
    upoly::trim(P(), c);
    return Value(std::move(c));
  }
  std::optional<Value> nth_element(u64 i) const override {
    auto q = P().cardinality();
    if (!q) {
      auto v = P().nth_element(i);
      if (!v) return std::nullopt;
      return Value(upoly::constant(P(), *v));
    }
    mpz_class rest(static_cast<unsigned long>(i));
    Coeffs c;
    for (std::size_t k = 0; k < degree_; ++k) {
      mpz_class digit = rest % *q;
      rest /= *q;
      c.push_back(*P().nth_element(digit.get_ui()));
    }
    if (rest != 0) return std::nullopt;
    upoly::trim(P(), c);
    return Value(std::move(c));
  }
  // Steps a^N = c with N a power of p over F_q(s): b^p = sum_l b_{k+(N/p)l}^p c^l
  // theta^(kp), and each coefficient is solved against the basis 1, c, ..,
  // c^(p-1) of the parent over its p-th powers.
  std::optional<std::optional<Value>> binomial_root(const Coeffs& a) const {
    const u64 p = char_;
    const std::size_t N = degree_;
    for (std::size_t i = 1; i < N; ++i)
      if (!P().is_zero(minpoly_[i])) return std::nullopt;
    if (P().kind() != Kind::Transcendental || !P().parent()->is_finite()) return std::nullopt;
    Value cc = P().neg(minpoly_[0]);
    std::vector<Coeffs> cols;
    Value cl = P().one();
    for (u64 l = 0; l < p; ++l) {
      cols.push_back(frobenius_split(P(), cl));
      cl = P().mul(cl, cc);
    }
    Matrix M = Matrix::from_columns(parent_, p, cols);
    Coeffs out(N, P().zero());
    for (std::size_t k = 0; k < N / p; ++k) {
      Value ak = k * p < a.size() ? a[k * p] : P().zero();
      auto sol = solve(M, frobenius_split(P(), ak));
      if (!sol) return std::optional<Value>{};
      for (u64 l = 0; l < p; ++l) out[k + (N / p) * l] = (*sol)[l];
    }
    upoly::trim(P(), out);
    return std::optional<Value>(Value(std::move(out)));
  }

  std::optional<Value> pth_root(const Value& a) const override {
    const u64 p = char_;
    if (finite_) {
      mpz_class e = *cardinality() / static_cast<unsigned long>(p);
      return pow(a, e);
    }
    const Coeffs& c = a.coeffs();
    if (!separable_step()) {
      for (std::size_t i = 0; i < c.size(); ++i)
        if (i % p != 0 && !P().is_zero(c[i])) return std::nullopt;
      if (auto r = binomial_root(c)) return *r;
      if (c.size() <= 1) {
        if (c.empty()) return zero();
        auto r = P().pth_root(c[0]);
        if (!r) throw Unsupported("p-th root over the inseparable step " + name_);
        // A p-th root of a parent element may still lie outside the parent.
        return Value(upoly::constant(P(), *r));
      }
      throw Unsupported("p-th root over the inseparable step " + name_);
    }
    // Solve a = sum e_i theta^(i p) over the parent, then take roots of e_i.
    FieldPtr pp = parent_;
    std::vector<Coeffs> cols;
    Value thp = pow(generator(), mpz_class(static_cast<unsigned long>(p)));
    Value w = one();
    for (std::size_t i = 0; i < degree_; ++i) {
      Coeffs col = w.coeffs();
      col.resize(degree_, P().zero());
      cols.push_back(std::move(col));
      w = mul(w, thp);
    }
    Matrix W = Matrix::from_columns(pp, degree_, cols);
    Coeffs rhs = c;
    rhs.resize(degree_, P().zero());
    auto e = solve(W, rhs);
    if (!e) throw Unsupported("p-th power basis is singular over " + describe());
    Coeffs out;
    for (const Value& ei : *e) {
      auto r = P().pth_root(ei);
      if (!r) return std::nullopt;
      out.push_back(*r);
    }
    upoly::trim(P(), out);
    return Value(std::move(out));
  }
};

class FunctionField final : public Field {
 public:
  FunctionField(FieldPtr parent, std::string name)
      : Field(Kind::Transcendental, parent, std::move(name), parent->characteristic(), false, 0) {}

  const Field& P() const { return *parent_; }

  Value make(Coeffs num, Coeffs den) const {
    upoly::trim(P(), num);
    upoly::trim(P(), den);
    if (den.empty()) throw DivisionByZero("zero denominator in " + describe());
    if (num.empty()) return zero();
    if (den.size() > 1) {
      Coeffs g = upoly::gcd(P(), num, den);
      if (g.size() > 1) {
        num = upoly::quo(P(), num, g);
        den = upoly::quo(P(), den, g);
      }
    }
    if (!P().is_one(den.back())) {
      Value l = P().inv(den.back());
      num = upoly::scale(P(), num, l);
      den = upoly::scale(P(), den, l);
    }
    return Value(FracRep{std::move(num), std::move(den)});
  }

  static bool is_unit_den(const Coeffs& d) { return d.size() == 1; }

  Value zero() const override { return Value(FracRep{{}, upoly::constant(P(), P().one())}); }
  Value one() const override {
    return Value(FracRep{upoly::constant(P(), P().one()), upoly::constant(P(), P().one())});
  }
  Value from_integer(const mpz_class& n) const override {
    return Value(FracRep{upoly::constant(P(), P().from_integer(n)), upoly::constant(P(), P().one())});
  }
  Value add(const Value& a, const Value& b) const override { return addsub(a, b, false); }
  Value sub(const Value& a, const Value& b) const override { return addsub(a, b, true); }
  Value addsub(const Value& a, const Value& b, bool minus) const {
    const FracRep& x = a.frac();
    const FracRep& y = b.frac();
    Coeffs yn = minus ? upoly::neg(P(), y.num) : y.num;
    if (upoly::equal(P(), x.den, y.den)) {
      Coeffs n = upoly::add(P(), x.num, yn);
      if (is_unit_den(x.den)) return Value(FracRep{std::move(n), x.den});
      return make(std::move(n), x.den);
    }
    return make(upoly::add(P(), upoly::mul(P(), x.num, y.den), upoly::mul(P(), yn, x.den)),
                upoly::mul(P(), x.den, y.den));
  }
  Value neg(const Value& a) const override {
    return Value(FracRep{upoly::neg(P(), a.frac().num), a.frac().den});
  }
  Value mul(const Value& a, const Value& b) const override {
    const FracRep& x = a.frac();
    const FracRep& y = b.frac();
    if (x.num.empty() || y.num.empty()) return zero();
    if (is_unit_den(x.den) && is_unit_den(y.den))
      return Value(FracRep{upoly::mul(P(), x.num, y.num), x.den});
    Coeffs n1 = x.num, d1 = x.den, n2 = y.num, d2 = y.den;
    Coeffs g1 = upoly::gcd(P(), n1, d2);
    if (g1.size() > 1) {
      n1 = upoly::quo(P(), n1, g1);
      d2 = upoly::quo(P(), d2, g1);
    }
    Coeffs g2 = upoly::gcd(P(), n2, d1);
    if (g2.size() > 1) {
      n2 = upoly::quo(P(), n2, g2);
      d1 = upoly::quo(P(), d1, g2);
    }
    Coeffs n = upoly::mul(P(), n1, n2);
    Coeffs d = upoly::mul(P(), d1, d2);
    if (!P().is_one(d.back())) {
      Value l = P().inv(d.back());
      n = upoly::scale(P(), n, l);
      d = upoly::scale(P(), d, l);
    }
    return Value(FracRep{std::move(n), std::move(d)});
  }
  Value inv(const Value& a) const override {
    if (a.frac().num.empty()) throw DivisionByZero("inverse of 0 in " + describe());
    Coeffs num = a.frac().den;
    Coeffs den = a.frac().num;
    Value l = P().inv(den.back());
    return Value(FracRep{upoly::scale(P(), num, l), upoly::scale(P(), den, l)});
  }
  bool is_zero(const Value& a) const override { return a.frac().num.empty(); }
  bool equal(const Value& a, const Value& b) const override {
    return upoly::equal(P(), a.frac().num, b.frac().num) && upoly::equal(P(), a.frac().den, b.frac().den);
  }
  std::string render(const Value& a) const override {
    std::string n = upoly::render(P(), a.frac().num, name_);
    if (is_unit_den(a.frac().den)) return n;
    std::string d = upoly::render(P(), a.frac().den, name_);
    if (n.find(' ') != std::string::npos) n = "(" + n + ")";
    if (d.find_first_of(" */") != std::string::npos) d = "(" + d + ")";
    return n + "/" + d;
  }
  Value random(std::mt19937_64& rng, int size) const override {
    Coeffs num;
    std::size_t dn = uniform(rng, 3);
    for (std::size_t i = 0; i <= dn; ++i) num.push_back(P().random(rng, size));
    Coeffs den = upoly::constant(P(), P().one());
    if (uniform(rng, 2)) den = Coeffs{P().random(rng, size), P().one()};
    return make(std::move(num), std::move(den));
  }
  std::optional<Value> nth_element(u64 i) const override {
    auto q = P().cardinality();
    if (!q) {
      auto v = P().nth_element(i);
      if (!v) return std::nullopt;
      return Value(FracRep{upoly::constant(P(), *v), upoly::constant(P(), P().one())});
    }
    mpz_class rest(static_cast<unsigned long>(i));
    Coeffs c;
    while (rest != 0) {
      mpz_class digit = rest % *q;
      rest /= *q;
      c.push_back(*P().nth_element(digit.get_ui()));
    }
    upoly::trim(P(), c);
    return Value(FracRep{std::move(c), upoly::constant(P(), P().one())});
  }
  std::optional<Coeffs> poly_root(const Coeffs& a) const {
    const u64 p = char_;
    Coeffs out;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (P().is_zero(a[i])) continue;
      if (i % p != 0) return std::nullopt;
      auto r = P().pth_root(a[i]);
      if (!r) return std::nullopt;
      if (out.size() <= i / p) out.resize(i / p + 1, P().zero());
      out[i / p] = *r;
    }
    return out;
  }
  std::optional<Value> pth_root(const Value& a) const override {
    auto n = poly_root(a.frac().num);
    if (!n) return std::nullopt;
    auto d = poly_root(a.frac().den);
    if (!d) return std::nullopt;
    return make(std::move(*n), std::move(*d));
  }
};

// a = sum_j r_j^p t^j over K = F_q(t); returns r_0 .. r_{p-1}.
Coeffs frobenius_split(const Field& K, const Value& a) {
  const Field& P = *K.parent();
  const u64 p = K.characteristic();
  const FracRep& f = a.frac();
  // a = n d^(p-1) / d^p
  Coeffs n = upoly::mul(P, f.num, upoly::power(P, f.den, static_cast<unsigned>(p - 1)));
  Coeffs out;
  for (u64 j = 0; j < p; ++j) {
    Coeffs r;
    for (std::size_t i = j; i < n.size(); i += p) r.push_back(*P.pth_root(n[i]));
    upoly::trim(P, r);
    Value num(FracRep{r, upoly::constant(P, P.one())});
    Value den(FracRep{f.den, upoly::constant(P, P.one())});
    out.push_back(K.div(num, den));
  }
  return out;
}

}  // namespace

std::uint64_t uniform(std::mt19937_64& rng, std::uint64_t n) {
  if (n <= 1) return 0;
  return rng() % n;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        comp = false;
        break;
      }
    }
    if (comp) return false;
  }
  return true;
}

FieldPtr rationals() {
  static const FieldPtr q = std::make_shared<RationalField>();
  return q;
}

FieldPtr prime_field(std::uint64_t p) {
  if (!is_prime(p)) throw InvalidArgument("GF(" + std::to_string(p) + "): modulus is not prime");
  static std::mutex mu;
  static std::map<u64, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(p);
  if (it != cache.end()) return it->second;
  FieldPtr f = std::make_shared<PrimeField>(p);
  cache.emplace(p, f);
  return f;
}

FieldPtr adjoin_root(const FieldPtr& base, std::string name, Coeffs minpoly) {
  upoly::trim(*base, minpoly);
  if (upoly::degree(minpoly) < 1)
    throw InvalidArgument("minimal polynomial of " + name + " must be nonconstant");
  minpoly = upoly::monic(*base, minpoly);
  return std::make_shared<AlgebraicField>(base, std::move(name), std::move(minpoly));
}

FieldPtr adjoin_transcendental(const FieldPtr& base, std::string name) {
  return std::make_shared<FunctionField>(base, std::move(name));
}

std::string fresh_name(const Field& f, const std::string& base) {
  auto names = f.generator_names();
  auto taken = [&](const std::string& s) { return std::find(names.begin(), names.end(), s) != names.end(); };
  if (!taken(base)) return base;
  for (int i = 1;; ++i) {
    std::string s = base + "_" + std::to_string(i);
    if (!taken(s)) return s;
  }
}

Value Field::pow(const Value& a, const mpz_class& e) const {
  if (e < 0) return pow(inv(a), -e);
  Value r = one();
  Value b = a;
  mpz_class k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) r = mul(r, b);
    k >>= 1;
    if (k > 0) b = mul(b, b);
  }
  return r;
}

std::optional<mpz_class> Field::cardinality() const {
  if (!finite_) return std::nullopt;
  mpz_class q = 1;
  for (const Field* f = this; f; f = f->parent_.get()) {
    if (f->is_prime()) {
      q *= static_cast<unsigned long>(char_);
    } else {
      mpz_class pq = *f->parent_->cardinality();
      mpz_class r;
      mpz_pow_ui(r.get_mpz_t(), pq.get_mpz_t(), f->degree_);
      return r;
    }
  }
  return q;
}

Value Field::generator() const {
  if (kind_ == Kind::Algebraic) {
    const Field& P = *parent_;
    return Value(upoly::rem(P, upoly::x(P), minpoly_));
  }
  if (kind_ == Kind::Transcendental) {
    const Field& P = *parent_;
    return Value(FracRep{upoly::x(P), upoly::constant(P, P.one())});
  }
  throw InvalidArgument("prime fields have no generator");
}

bool Field::separable_step() const {
  if (kind_ != Kind::Algebraic) return true;
  return !upoly::derivative(*parent_, minpoly_).empty();
}

std::vector<const Field*> Field::chain() const {
  std::vector<const Field*> out;
  for (const Field* f = this; f; f = f->parent_.get()) out.push_back(f);
  std::reverse(out.begin(), out.end());
  return out;
}

bool Field::has_ancestor(const Field& a) const {
  for (const Field* f = this; f; f = f->parent_.get())
    if (f == &a) return true;
  return false;
}

bool Field::has_transcendental_step() const {
  for (const Field* f = this; f; f = f->parent_.get())
    if (f->kind_ == Kind::Transcendental) return true;
  return false;
}

std::size_t Field::degree_over(const Field& anc) const {
  std::size_t d = 1;
  for (const Field* f = this; f; f = f->parent_.get()) {
    if (f == &anc) return d;
    if (f->kind_ == Kind::Transcendental)
      throw NotFiniteOverPrefix(describe() + " is not finite over " + anc.describe());
    d *= f->degree_;
  }
  throw TowerMismatch(anc.describe() + " is not a subfield of " + describe());
}

Coeffs Field::coords_over(const Field& anc, const Value& a) const {
  if (this == &anc) return {a};
  if (kind_ != Kind::Algebraic) {
    if (!has_ancestor(anc)) throw TowerMismatch(anc.describe() + " is not a subfield of " + describe());
    throw NotFiniteOverPrefix(describe() + " is not finite over " + anc.describe());
  }
  Coeffs out;
  const Coeffs& c = a.coeffs();
  std::size_t block = parent_->degree_over(anc);
  out.reserve(block * degree_);
  for (std::size_t i = 0; i < degree_; ++i) {
    if (i < c.size()) {
      Coeffs sub = parent_->coords_over(anc, c[i]);
      out.insert(out.end(), sub.begin(), sub.end());
    } else {
      for (std::size_t k = 0; k < block; ++k) out.push_back(anc.zero());
    }
  }
  return out;
}

Value Field::from_coords(const Field& anc, std::span<const Value> c) const {
  if (this == &anc) return c[0];
  if (kind_ != Kind::Algebraic) throw NotFiniteOverPrefix(describe() + " is not finite over " + anc.describe());
  std::size_t block = parent_->degree_over(anc);
  Coeffs out;
  for (std::size_t i = 0; i < degree_; ++i) out.push_back(parent_->from_coords(anc, c.subspan(i * block, block)));
  upoly::trim(*parent_, out);
  return Value(std::move(out));
}

Value Field::lift_from(const Field& anc, const Value& a) const {
  if (this == &anc) return a;
  if (!parent_) throw TowerMismatch(anc.describe() + " is not a subfield of " + describe());
  Value v = parent_->lift_from(anc, a);
  if (kind_ == Kind::Algebraic) return Value(upoly::constant(*parent_, v));
  return Value(FracRep{upoly::constant(*parent_, v), upoly::constant(*parent_, parent_->one())});
}

std::optional<Value> Field::descend_to(const Field& anc, const Value& a) const {
  if (this == &anc) return a;
  if (!parent_) throw TowerMismatch(anc.describe() + " is not a subfield of " + describe());
  if (kind_ == Kind::Algebraic) {
    const Coeffs& c = a.coeffs();
    if (c.size() > 1) return std::nullopt;
    return parent_->descend_to(anc, c.empty() ? parent_->zero() : c[0]);
  }
  const FracRep& f = a.frac();
  if (f.den.size() > 1 || f.num.size() > 1) return std::nullopt;
  return parent_->descend_to(anc, f.num.empty() ? parent_->zero() : f.num[0]);
}

std::vector<std::string> Field::generator_names() const {
  std::vector<std::string> out;
  for (const Field* f : chain())
    if (!f->is_prime()) out.push_back(f->name_);
  return out;
}

std::string Field::describe() const {
  if (kind_ == Kind::Rational) return "Q";
  if (kind_ == Kind::Prime) return "GF(" + std::to_string(char_) + ")";
  const Field* root = chain().front();
  return root->describe() + describe_over(*root);
}

std::string Field::describe_over(const Field& anc) const {
  std::string out;
  for (const Field* f = this; f && f != &anc; f = f->parent_.get()) {
    std::string step;
    if (f->kind_ == Kind::Algebraic)
      step = "[" + f->name_ + "]/(" + upoly::render(*f->parent_, f->minpoly_, f->name_) + ")";
    else if (f->kind_ == Kind::Transcendental)
      step = "(" + f->name_ + ")";
    out = step + out;
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string join_terms(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string out = terms[0];
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (!terms[i].empty() && terms[i][0] == '-')
      out += " - " + terms[i].substr(1);
    else
      out += " + " + terms[i];
  }
  return out;
}

std::string wrap_coefficient(const Field& F, const std::string& s) {
  if (F.is_prime()) return s;
  if (s.find(' ') != std::string::npos || s.find('/') != std::string::npos) return "(" + s + ")";
  return s;
}

std::string render_term(const std::string& coef, const std::string& mono) {
  if (mono.empty()) return coef;
  if (coef == "1") return mono;
  if (coef == "-1") return "-" + mono;
  return coef + "*" + mono;
}

namespace upoly {

std::string render(const Field& F, const Coeffs& a, const std::string& var) {
  std::vector<std::string> terms;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (F.is_zero(a[i])) continue;
    std::string c = F.render(a[i]);
    if (i > 0) c = wrap_coefficient(F, c);
    terms.push_back(render_term(c, power_str(var, i)));
  }
  return join_terms(terms);
}

}  // namespace upoly

}  // namespace tgs
