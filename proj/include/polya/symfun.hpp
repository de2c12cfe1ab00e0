#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "polya/caps.hpp"
#include "polya/character.hpp"
#include "polya/cyclotomic.hpp"

namespace polya {

using Exponents = std::vector<std::uint32_t>;

/// Graded lexicographic order, larger terms first: higher total degree
/// first, then lexicographically larger exponent vectors first. Shorter
/// vectors compare as if padded with zeros.
struct GradedLexDescending {
  bool operator()(Exponents const &a, Exponents const &b) const;
};

using TermMap = std::map<Exponents, Cyclotomic, GradedLexDescending>;

/// Isobaric polynomial in the formal power sums p_1, ..., p_d.
///
/// A term with exponents (c_1, ..., c_k) stands for p_1^{c_1} ... p_k^{c_k};
/// trailing zero exponents are trimmed and every term has sum s*c_s equal to
/// weight(). Zero coefficients are never stored.
class PowerSumPoly {
public:
  explicit PowerSumPoly(std::uint32_t weight = 0) : weight_(weight) {}

  /// The constant 1 of weight 0.
  static PowerSumPoly one();
  /// The single power sum p_s.
  static PowerSumPoly power_sum(std::uint32_t s);

  std::uint32_t weight() const { return weight_; }
  TermMap const &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds coeff * p^exps; throws InvalidInput if the term is not of this
  /// polynomial's weight.
  void add_term(Exponents exps, Cyclotomic const &coeff);
  Cyclotomic coeff(Exponents exps) const;

  /// Substitute p_k -> p_{k*s} in every term; the weight scales by s.
  PowerSumPoly dilate(std::uint32_t s) const;

  friend bool operator==(PowerSumPoly const &, PowerSumPoly const &) = default;

  /// e.g. "(1/6)*p1^3 + (1/2)*p1*p2 + (1/3)*p3"
  std::string to_string() const;
  nlohmann::json to_json() const;

private:
  std::uint32_t weight_;
  TermMap terms_;
};

/// Polynomial in x_0, ..., x_{nvars-1}. Exponent vectors are stored at full
/// length nvars.
class MonomialPoly {
public:
  explicit MonomialPoly(std::uint32_t nvars = 1) : nvars_(nvars) {}

  std::uint32_t nvars() const { return nvars_; }
  TermMap const &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(Exponents exps, Cyclotomic const &coeff);
  Cyclotomic coeff(Exponents exps) const;

  /// True when every coefficient is a nonnegative rational integer.
  bool has_nonnegative_integer_coeffs() const;

  /// Substitute x_i -> values[i].
  Cyclotomic evaluate(std::span<Rational const> values) const;

  friend bool operator==(MonomialPoly const &, MonomialPoly const &) = default;

  /// e.g. "x0^3*x1 + x0^2*x1^2 + x0*x1^3"
  std::string to_string() const;
  nlohmann::json to_json() const;

private:
  std::uint32_t nvars_;
  TermMap terms_;
};

nlohmann::json coeff_to_json(Cyclotomic const &c);

/// Z(chi; p_1..p_d) = |W|^{-1} sum_{sigma in W} chi(sigma) p^{c(sigma)}.
PowerSumPoly cycle_index(LinearCharacter const &chi);
/// As above, checking that chi is a character of g.
PowerSumPoly cycle_index(PermGroup const &g, LinearCharacter const &chi);

/// Substitute p_s -> x_0^s + ... + x_n^s and expand.
MonomialPoly specialize(PowerSumPoly const &z, std::uint32_t n,
                        Caps const &caps = {});

PowerSumPoly psum_mul(PowerSumPoly const &a, PowerSumPoly const &b);
PowerSumPoly psum_add(PowerSumPoly const &a, PowerSumPoly const &b);
PowerSumPoly psum_sub(PowerSumPoly const &a, PowerSumPoly const &b);

/// Z_chi(P_1, ..., P_d) with P_s = Z_theta(p_s, p_{2s}, ..., p_{rs}).
PowerSumPoly plethysm_insert(PowerSumPoly const &z_chi, PowerSumPoly const &z_theta);

/// Sum of x_{i_1} ... x_{i_d} over 0 <= i_1 < ... < i_d <= n.
MonomialPoly elementary_symmetric(std::uint32_t d, std::uint32_t n);

/// Invariant under every adjacent transposition x_i <-> x_{i+1}.
bool is_symmetric(MonomialPoly const &p);

} // namespace polya
