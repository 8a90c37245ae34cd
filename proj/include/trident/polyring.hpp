#pragma once

// Exact polynomial arithmetic over arbitrary-precision integers.
//
// MultiPoly is a sparse polynomial in the four variables w, x, y, z kept in
// canonical form (strictly increasing graded-lex order, w > x > y > z, no
// zero coefficients), so structural equality is mathematical equality.
// UniPoly is a dense polynomial in one variable with the leading coefficient
// nonzero (the zero polynomial has no coefficients).

#include <array>
#include <complex>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace trident {

using BigInt = mpz_class;
using BigRational = mpq_class;

enum class Var : std::uint8_t { w = 0, x = 1, y = 2, z = 3 };

inline constexpr std::array<char, 4> kVarNames = {'w', 'x', 'y', 'z'};

/// Exponent quadruple of a monomial w^a x^b y^c z^d.
struct Exponents {
  std::array<std::uint32_t, 4> e{};

  std::uint32_t operator[](Var v) const { return e[static_cast<int>(v)]; }
  std::uint64_t total() const {
    return std::uint64_t{e[0]} + e[1] + e[2] + e[3];
  }

  friend bool operator==(const Exponents&, const Exponents&) = default;
  /// Graded-lex: total degree first, then w, x, y, z exponents.
  friend std::strong_ordering operator<=>(const Exponents& a,
                                          const Exponents& b) {
    if (auto c = a.total() <=> b.total(); c != 0) return c;
    return a.e <=> b.e;
  }
};

Exponents operator+(const Exponents& a, const Exponents& b);

struct Monomial4 {
  Exponents exps;
  BigInt coeff;

  friend bool operator==(const Monomial4&, const Monomial4&) = default;
};

class MultiPoly {
 public:
  MultiPoly() = default;

  static MultiPoly constant(const BigInt& c);
  static MultiPoly variable(Var v);
  static MultiPoly monomial(const Exponents& exps, const BigInt& c = 1);
  /// Canonicalizes: merges equal exponents, drops zeros, sorts.
  static MultiPoly from_terms(std::vector<Monomial4> terms);
  /// Parses sums of monomials written like "w^2xy+2wxz-3z^2".
  static MultiPoly parse(std::string_view text);

  const std::vector<Monomial4>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  BigInt coeff(const Exponents& exps) const;
  std::uint64_t total_degree() const;

  BigInt eval(const std::array<BigInt, 4>& point) const;
  double eval(const std::array<double, 4>& point) const;

  MultiPoly pow(unsigned k) const;
  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const BigInt& c, const MultiPoly& p);
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  /// Human-readable form, terms in descending lex order (w > x > y > z).
  std::string to_string() const;

 private:
  explicit MultiPoly(std::vector<Monomial4> canonical)
      : terms_(std::move(canonical)) {}

  std::vector<Monomial4> terms_;
};

MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b);

class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<BigInt> coeffs);
  UniPoly(std::initializer_list<long> coeffs);

  static UniPoly constant(const BigInt& c);
  /// c * t^degree.
  static UniPoly monomial(std::size_t degree, const BigInt& c = 1);
  /// Parses "3z^2+12z+13"; any single lowercase letter is the variable.
  static UniPoly parse(std::string_view text);

  const std::vector<BigInt>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  /// Coefficient of t^k (zero past the degree).
  BigInt coeff(std::size_t k) const;
  const BigInt& leading() const;
  /// Degree of the lowest nonzero term, -1 for the zero polynomial.
  int lowest_degree() const;

  BigInt eval(const BigInt& t) const;
  UniPoly derivative() const;
  /// p(q(t)).
  UniPoly compose(const UniPoly& inner) const;
  UniPoly pow(unsigned k) const;
  /// Divides out t^k; the caller guarantees the low coefficients vanish.
  UniPoly shift_down(std::size_t k) const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const BigInt& c, const UniPoly& p);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  std::string to_string(char var = 'z') const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

bool is_palindromic(const UniPoly& p);

/// q with num == den * q, or NotDivisible / DivisionByZeroPolynomial.
UniPoly up_divide_exact(const UniPoly& num, const UniPoly& den);

/// Quotient and remainder over the rationals.
std::pair<std::vector<BigRational>, std::vector<BigRational>> up_divmod_rational(
    const UniPoly& num, const UniPoly& den);

/// Horner evaluation in double precision.
std::complex<double> up_eval_complex(const UniPoly& p, std::complex<double> z);

BigInt content(const UniPoly& p);
/// p / content(p) with a positive leading coefficient.
UniPoly primitive_part(const UniPoly& p);
/// Primitive greatest common divisor with positive leading coefficient.
UniPoly up_gcd(const UniPoly& a, const UniPoly& b);
/// Square-free factors f_1, f_2, ... with p = c * prod f_i^i; pairs of
/// (factor, multiplicity), constant factors omitted.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);

/// Image of each of w, x, y, z.
struct SpecMap {
  std::array<UniPoly, 4> images;

  const UniPoly& operator[](Var v) const { return images[static_cast<int>(v)]; }
};

/// Ring homomorphism MultiPoly -> UniPoly given by the SpecMap.
UniPoly poly_substitute(const MultiPoly& p, const SpecMap& s);

}  // namespace trident
