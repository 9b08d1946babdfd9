#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace tgs {

class Value;
using Coeffs = std::vector<Value>;

/// Fraction of two polynomials over the parent field, in lowest terms with
/// a monic denominator.
struct FracRep {
  Coeffs num;
  Coeffs den;
};

/// Raw element data.  What it means depends on the owning field: a residue
/// for GF(p), a rational for Q, a coefficient vector (constant term first)
/// for an algebraic step, a fraction for a rational-function step.
class Value {
 public:
  Value() : rep_(std::uint64_t{0}) {}
  explicit Value(std::uint64_t r) : rep_(r) {}
  explicit Value(mpq_class q) : rep_(std::move(q)) {}
  explicit Value(Coeffs c) : rep_(std::move(c)) {}
  explicit Value(FracRep f) : rep_(std::move(f)) {}

  std::uint64_t residue() const { return std::get<std::uint64_t>(rep_); }
  const mpq_class& rational() const { return std::get<mpq_class>(rep_); }
  const Coeffs& coeffs() const { return std::get<Coeffs>(rep_); }
  const FracRep& frac() const { return std::get<FracRep>(rep_); }

 private:
  std::variant<std::uint64_t, mpq_class, Coeffs, FracRep> rep_;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// A node of a field tower.  Towers start at Q or GF(p); every further node
/// is either K[a]/(m(a)) or K(t).  Nodes are immutable and compared by
/// identity.
class Field : public std::enable_shared_from_this<Field> {
 public:
  enum class Kind { Rational, Prime, Algebraic, Transcendental };

  virtual ~Field() = default;

  Kind kind() const { return kind_; }
  const FieldPtr& parent() const { return parent_; }
  const std::string& name() const { return name_; }
  std::uint64_t characteristic() const { return char_; }
  bool is_finite() const { return finite_; }
  bool is_prime() const { return !parent_; }
  /// Number of elements, if finite.
  std::optional<mpz_class> cardinality() const;
  FieldPtr ptr() const { return shared_from_this(); }

  virtual Value zero() const = 0;
  virtual Value one() const = 0;
  virtual Value from_integer(const mpz_class& n) const = 0;
  Value from_int(long n) const { return from_integer(mpz_class(n)); }

  virtual Value add(const Value& a, const Value& b) const = 0;
  virtual Value sub(const Value& a, const Value& b) const = 0;
  virtual Value neg(const Value& a) const = 0;
  virtual Value mul(const Value& a, const Value& b) const = 0;
  /// Throws DivisionByZero.
  virtual Value inv(const Value& a) const = 0;
  Value div(const Value& a, const Value& b) const { return mul(a, inv(b)); }
  Value pow(const Value& a, const mpz_class& e) const;
  virtual bool is_zero(const Value& a) const = 0;
  virtual bool equal(const Value& a, const Value& b) const = 0;
  bool is_one(const Value& a) const { return equal(a, one()); }

  virtual std::string render(const Value& a) const = 0;
  /// Small random element; `size` bounds integers and degrees loosely.
  virtual Value random(std::mt19937_64& rng, int size) const = 0;
  /// Deterministic enumeration of distinct elements; nullopt once a finite
  /// field is exhausted.
  virtual std::optional<Value> nth_element(std::uint64_t i) const = 0;
  /// p-th root in characteristic p; nullopt if `a` is not a p-th power.
  virtual std::optional<Value> pth_root(const Value& a) const = 0;

  /// [this : parent] for algebraic steps, 1 for prime fields, 0 for K(t).
  std::size_t degree() const { return degree_; }
  /// Monic minimal polynomial of the generator over the parent.
  const Coeffs& minpoly() const { return minpoly_; }
  Value generator() const;
  /// Derivative of the minimal polynomial is nonzero.
  bool separable_step() const;

  /// Prime field first, this node last.
  std::vector<const Field*> chain() const;
  bool has_ancestor(const Field& f) const;
  bool has_transcendental_step() const;
  /// [this : anc]; throws TowerMismatch or NotFiniteOverPrefix.
  std::size_t degree_over(const Field& anc) const;
  /// Coordinates over `anc` in the tower monomial basis.
  Coeffs coords_over(const Field& anc, const Value& a) const;
  Value from_coords(const Field& anc, std::span<const Value> c) const;
  Value lift_from(const Field& anc, const Value& a) const;
  std::optional<Value> descend_to(const Field& anc, const Value& a) const;
  /// Names of all generators in the tower, bottom up.
  std::vector<std::string> generator_names() const;
  /// Human-readable tower, e.g. "Q(x)[y]/(y^2 - x)".
  std::string describe() const;
  /// Tower steps strictly above `anc`, e.g. "[y]/(y^2 - x)".
  std::string describe_over(const Field& anc) const;

 protected:
  Field(Kind kind, FieldPtr parent, std::string name, std::uint64_t ch,
        bool finite, std::size_t degree)
      : kind_(kind), parent_(std::move(parent)), name_(std::move(name)),
        char_(ch), finite_(finite), degree_(degree) {}

  Kind kind_;
  FieldPtr parent_;
  std::string name_;
  std::uint64_t char_;
  bool finite_;
  std::size_t degree_;
  Coeffs minpoly_;
};

FieldPtr rationals();
/// Cached per p; throws InvalidArgument unless p is prime.
FieldPtr prime_field(std::uint64_t p);
/// K[name]/(minpoly).  The polynomial is made monic; irreducibility is the
/// caller's responsibility (see adjoin_checked in factor.hpp).
FieldPtr adjoin_root(const FieldPtr& base, std::string name, Coeffs minpoly);
FieldPtr adjoin_transcendental(const FieldPtr& base, std::string name);

/// `base` if no generator of `f` carries that name, else base_1, base_2, ...
std::string fresh_name(const Field& f, const std::string& base);

bool is_prime(std::uint64_t n);
std::uint64_t uniform(std::mt19937_64& rng, std::uint64_t n);

}  // namespace tgs
