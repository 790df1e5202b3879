#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_n) = Q[x]/(Phi_n(x)).

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hopfclass {

using Rational = mpq_class;
using BigInt = mpz_class;

class CycloField;

/// An element of Q(zeta_n) in the power basis 1, z, ..., z^{phi(n)-1}.
///
/// The coefficient vector is kept reduced modulo Phi_n with trailing zeros
/// trimmed, so zero is the empty vector and equality is coefficient
/// equality.  A default-constructed value is the zero of "any" field and
/// adopts the field of the other operand in arithmetic.
class CycloNum {
 public:
  CycloNum() = default;
  CycloNum(const CycloField& field, Rational value);
  CycloNum(const CycloField& field, std::vector<Rational> coeffs);

  [[nodiscard]] const CycloField* field() const { return field_; }
  [[nodiscard]] int order() const;
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] bool is_one() const;
  [[nodiscard]] bool is_rational() const { return coeffs_.size() <= 1; }
  /// Coefficient of z^i (zero past the stored length).
  [[nodiscard]] Rational coeff(std::size_t i) const;
  [[nodiscard]] const std::vector<Rational>& raw() const { return coeffs_; }
  /// Full length-phi(n) coefficient vector.
  [[nodiscard]] std::vector<Rational> coeffs() const;

  CycloNum& operator+=(const CycloNum& o);
  CycloNum& operator-=(const CycloNum& o);
  CycloNum& operator*=(const CycloNum& o);
  CycloNum& operator*=(const Rational& r);

  /// this += a * b without a temporary for the common rational case.
  void add_mul(const CycloNum& a, const CycloNum& b);
  void sub_mul(const CycloNum& a, const CycloNum& b);

  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator*(CycloNum a, const Rational& r) { return a *= r; }
  friend CycloNum operator*(const Rational& r, CycloNum a) { return a *= r; }
  CycloNum operator-() const;

  friend bool operator==(const CycloNum& a, const CycloNum& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

  /// Exact inverse; throws std::domain_error on zero.
  [[nodiscard]] CycloNum inverse() const;
  /// Integer power; negative exponents go through inverse().
  [[nodiscard]] CycloNum pow(long e) const;

  /// Rough size measure (total limb count) used for pivot selection.
  [[nodiscard]] std::size_t height() const;

  /// Text form "c0 + c1*z + c2*z^2", "0" for zero.
  [[nodiscard]] std::string to_string() const;

 private:
  friend class CycloField;
  void trim();
  void adopt(const CycloNum& o);

  const CycloField* field_ = nullptr;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CycloNum& x);

/// Field context for Q(zeta_n).  Instances are interned and immortal, so
/// CycloNum can hold a plain pointer.
class CycloField {
 public:
  /// Interned context for n >= 3.  Throws std::invalid_argument otherwise.
  static const CycloField& get(int n);

  [[nodiscard]] int n() const { return n_; }
  /// Euler phi(n) = degree of Phi_n.
  [[nodiscard]] int degree() const { return static_cast<int>(phi_.size()) - 1; }
  /// Coefficients of Phi_n, constant term first (monic).
  [[nodiscard]] const std::vector<long>& cyclotomic_poly() const { return phi_; }

  [[nodiscard]] CycloNum zero() const { return CycloNum(*this, std::vector<Rational>{}); }
  [[nodiscard]] CycloNum one() const { return CycloNum(*this, Rational(1)); }
  [[nodiscard]] CycloNum integer(long v) const { return CycloNum(*this, Rational(v)); }
  [[nodiscard]] CycloNum rational(const Rational& r) const { return CycloNum(*this, r); }
  /// The distinguished primitive root q = zeta_n.
  [[nodiscard]] const CycloNum& q() const { return powers_[1]; }
  /// q^k for any integer k (reduced mod n).
  [[nodiscard]] const CycloNum& q_pow(long k) const;
  /// Smallest k in [0, n) with q^k == x, or -1.
  [[nodiscard]] int q_log(const CycloNum& x) const;

  /// Parse the text form produced by CycloNum::to_string.  Also accepts
  /// "q" as a synonym for "z".
  [[nodiscard]] CycloNum parse(std::string_view text) const;

  /// Reduce a polynomial (constant term first) modulo Phi_n in place.
  void reduce(std::vector<Rational>& poly) const;

 private:
  explicit CycloField(int n);

  int n_;
  std::vector<long> phi_;
  std::vector<CycloNum> powers_;
};

/// (j)!_q = prod_{k=1}^{j} (1 + q + ... + q^{k-1}); (0)!_q = 1.
CycloNum q_factorial(int j, const CycloField& field);

/// Integer coefficients of Phi_n (constant term first), computed by exact
/// division of x^n - 1 by Phi_d for the proper divisors d of n.
std::vector<long> cyclotomic_polynomial(int n);

}  // namespace hopfclass
