#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace alb {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct AlbError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotInvertible : AlbError {
  using AlbError::AlbError;
};

class RingCtx;
using Ctx = std::shared_ptr<const RingCtx>;

enum class RingKind { Integers, Rationals, FiniteField, Modular, PolyExt };

/** Element of GF(p^k), k <= 3: coefficients of 1, w, w^2 reduced mod p. */
struct FFElem {
  std::array<std::int16_t, 3> c{0, 0, 0};
  friend bool operator==(const FFElem&, const FFElem&) = default;
};

struct Poly;
using PolyPtr = std::shared_ptr<const Poly>;

class Scalar;

/**
 * Descriptor of an exact coefficient ring. Every algebraic object in this
 * library carries one of these; all arithmetic is generic over it.
 *
 * Supported kinds: the integers, the rationals, GF(p^k) for small p and
 * k <= 3, Z/n for composite n (partial division), and sparse multivariate
 * polynomial extensions of any of these. A polynomial indeterminate may be
 * flagged as Laurent, in which case negative exponents are admitted and a
 * unit-coefficient monomial in it is invertible; this is how generic unit
 * parameters are modelled.
 */
class RingCtx : public std::enable_shared_from_this<RingCtx> {
 public:
  RingKind kind = RingKind::Integers;

  // FiniteField
  int p = 0;
  int deg = 1;
  std::vector<int> modulus;  // c0..c_{deg-1} of the monic modulus, low first

  // Modular
  long long n = 0;

  // PolyExt
  Ctx base;
  std::vector<std::string> vars;
  std::vector<char> laurent;

  static Ctx integers();
  static Ctx rationals();
  /** GF(p^k).  For k > 1 a monic irreducible modulus is required unless
   *  (p,k) = (2,3), which defaults to w^3 + w + 1. */
  static Ctx gf(int p, int k = 1, std::vector<int> modulus = {});
  static Ctx modular(long long n);
  static Ctx poly(Ctx base, std::vector<std::string> vars,
                  std::vector<char> laurent = {});
  /** Convenience: n indeterminates named <stem>0.. over base. */
  static Ctx poly_n(Ctx base, const std::string& stem, std::size_t n,
                    bool laurent = false);

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_int(const Int& v) const;
  /** The i-th indeterminate as a Scalar (PolyExt only). */
  Scalar indet(std::size_t i) const;

  bool is_field() const;
  std::size_t nvars() const { return vars.size(); }
  std::string describe() const;
};

bool same_ctx(const Ctx& a, const Ctx& b);
/** True when big equals small or is a PolyExt tower erected over small. */
bool tower_over(const Ctx& big, const Ctx& small);

/** Exponent vector of a monomial: one signed byte per indeterminate. */
using Expv = std::string;

int expv_get(const Expv& e, std::size_t i);
Expv expv_zero(std::size_t n);
Expv expv_unit(std::size_t n, std::size_t i, int power = 1);
Expv expv_add(const Expv& a, const Expv& b);

/**
 * Immutable exact scalar. Payload matches the ctx kind: big integer,
 * reduced fraction, finite-field element, residue, or a canonical sparse
 * polynomial (terms sorted, no zero coefficients, coefficients in the base
 * ring). Binary operations lift operands through PolyExt towers when the
 * contexts differ but one extends the other.
 */
class Scalar {
 public:
  Scalar() = default;

  const Ctx& ctx() const { return ctx_; }
  bool valid() const { return ctx_ != nullptr; }

  bool is_zero() const;
  bool is_one() const;
  bool is_unit() const;
  Scalar inv() const;  // throws NotInvertible
  Scalar pow(long e) const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  /** Exact division by a small integer constant; throws if not exact. */
  Scalar div_exact(long long d) const;
  /** Division a/b when b is a unit or the quotient is exact; throws else. */
  Scalar div(const Scalar& b) const { return *this * b.inv(); }

  std::string str() const;

  /** The underlying integer for Integers ctx (throws otherwise). */
  const Int& as_int() const;
  const Rat& as_rat() const;
  long long as_mod() const;
  const FFElem& as_ff() const;
  /** Terms of a PolyExt scalar, exponent vector + base-ring coefficient. */
  const std::vector<std::pair<Expv, Scalar>>& terms() const;

  static Scalar make_int(Ctx c, Int v);
  static Scalar make_rat(Ctx c, Rat v);
  static Scalar make_ff(Ctx c, FFElem v);
  static Scalar make_mod(Ctx c, long long v);
  static Scalar make_poly(Ctx c, std::vector<std::pair<Expv, Scalar>> terms);
  /** No canonicalization; p->t must already be sorted, merged, zero-free. */
  static Scalar make_poly_raw(Ctx c, PolyPtr p);

 private:
  Ctx ctx_;
  std::variant<std::monostate, Int, Rat, FFElem, long long, PolyPtr> v_;
};

struct Poly {
  // canonical: sorted by exponent vector, no zero coefficients
  std::vector<std::pair<Expv, Scalar>> t;
};

/** Lift s into target, which must be a PolyExt tower over s's ctx. */
Scalar embed(const Ctx& target, const Scalar& s);

/** Balanced-tree fold of the addends; much cheaper than repeated += for
 *  long accumulations of big sparse polynomials. */
Scalar scalar_sum(const Ctx& ctx, std::vector<Scalar> parts);

/** Coefficient of the monomial with exponent vector e (top layer only);
 *  result lives in the base ring of s's PolyExt ctx. */
Scalar coeff_of(const Scalar& s, const Expv& e);

/** Substitute vals for the top-layer indeterminates of s. vals live in a
 *  common ctx that the base of s's ctx embeds into. */
Scalar subst(const Scalar& s, const std::vector<Scalar>& vals);

/** Parse a decimal integer or a/b fraction into ctx (Integers/Rationals/
 *  finite kinds); used by the serialization codecs. */
Scalar scalar_from_string(const Ctx& ctx, const std::string& text);

using Vec = std::vector<Scalar>;

Vec vec_zero(const Ctx& c, std::size_t n);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& s, const Vec& a);
Vec vec_neg(const Vec& a);
bool vec_is_zero(const Vec& a);
Vec vec_embed(const Ctx& target, const Vec& a);
/** Basis vector e_i over ctx. */
Vec vec_basis(const Ctx& c, std::size_t n, std::size_t i);
/** Fresh generic vector: coordinates are the indeterminates
 *  [offset, offset+n) of the PolyExt ctx. */
Vec vec_generic(const Ctx& c, std::size_t n, std::size_t offset);

}  // namespace alb
