#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace polya {

using Rational = mpq_class;
using Integer = mpz_class;

std::uint32_t euler_phi(std::uint32_t m);

/// Coefficients of the m-th cyclotomic polynomial, lowest degree first.
/// Computed as (x^m - 1) / prod_{e | m, e < m} Phi_e by exact division.
std::vector<Integer> const &cyclotomic_polynomial(std::uint32_t m);

/// Exact element of Q(zeta_m).
///
/// Stored in the power basis 1, z, ..., z^{phi(m)-1} reduced modulo Phi_m.
/// A value whose non-constant coefficients vanish is demoted to conductor 1,
/// so rational values always compare and print as plain rationals.
class Cyclotomic {
public:
  Cyclotomic() : coeffs_(1) {}
  Cyclotomic(Rational q) : coeffs_{std::move(q)} { coeffs_[0].canonicalize(); }
  Cyclotomic(long q) : coeffs_{Rational(q)} {}

  /// zeta_m^k for any integer k.
  static Cyclotomic root_of_unity(std::uint32_t m, std::int64_t k);

  /// Value with the given power-basis coefficients in Q(zeta_m); the
  /// sequence may be longer than phi(m) and is reduced.
  static Cyclotomic from_coeffs(std::uint32_t m, std::vector<Rational> coeffs);

  std::uint32_t conductor() const { return conductor_; }
  std::vector<Rational> const &coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const { return conductor_ == 1; }
  bool is_one() const { return is_rational() && coeffs_[0] == 1; }

  /// Requires is_rational().
  Rational const &rational() const;

  /// The same value expressed in Q(zeta_l); m must divide l. The result is
  /// not demoted, so it may carry conductor l even for rational values.
  std::vector<Rational> coeffs_in(std::uint32_t l) const;

  /// Image under zeta_m -> zeta_m^k, gcd(k, m) = 1.
  Cyclotomic galois(std::int64_t k) const;

  Cyclotomic inverse() const;

  Cyclotomic &operator+=(Cyclotomic const &b);
  Cyclotomic &operator-=(Cyclotomic const &b);
  Cyclotomic &operator*=(Cyclotomic const &b);
  Cyclotomic &operator*=(Rational const &q);
  Cyclotomic &operator/=(Cyclotomic const &b);

  friend Cyclotomic operator+(Cyclotomic a, Cyclotomic const &b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, Cyclotomic const &b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, Cyclotomic const &b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, Cyclotomic const &b) { return a /= b; }
  Cyclotomic operator-() const;

  friend bool operator==(Cyclotomic const &a, Cyclotomic const &b);

  /// "1/2", "-3", or "(1/2 + 3*z4)" style; z<m> denotes zeta_m.
  std::string to_string() const;

private:
  void canonicalize();

  std::uint32_t conductor_ = 1;
  std::vector<Rational> coeffs_;
};

std::ostream &operator<<(std::ostream &os, Cyclotomic const &c);

} // namespace polya
