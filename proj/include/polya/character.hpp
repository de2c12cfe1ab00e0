#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "polya/cyclotomic.hpp"
#include "polya/perm.hpp"

namespace polya {

/// A one-dimensional character of an explicit permutation group.
///
/// Values are roots of unity held as exponents: value(i) = zeta_m^{exponent(i)}
/// where i indexes group().elements() and m = modulus().
class LinearCharacter {
public:
  LinearCharacter(GroupPtr group, std::uint32_t modulus,
                  std::vector<std::uint32_t> exponents, std::string name = {});

  GroupPtr const &group_ptr() const { return group_; }
  PermGroup const &group() const { return *group_; }
  std::uint32_t modulus() const { return modulus_; }
  std::vector<std::uint32_t> const &exponents() const { return exponents_; }
  std::uint32_t exponent(std::size_t element) const { return exponents_[element]; }

  Cyclotomic value(std::size_t element) const;
  /// Value on a group member; throws InvalidInput for non-members.
  Cyclotomic value_of(Permutation const &p) const;
  bool is_trivial_at(std::size_t element) const { return exponents_[element] == 0; }

  bool is_unit() const;

  /// chi(g h) = chi(g) chi(h) for every generator g and every element h,
  /// which is equivalent to the full homomorphism law.
  bool is_homomorphism() const;

  /// The same law checked over all pairs; quadratic in |G|.
  bool is_homomorphism_exhaustive() const;

  /// Order of the image subgroup of the roots of unity, i.e. |G : ker chi|.
  std::uint32_t image_order() const;

  /// Same group (by identity) and same values.
  bool same_values(LinearCharacter const &other) const;

  /// Selector text that rebuilds this character on its group.
  std::string const &name() const { return name_; }

private:
  GroupPtr group_;
  std::uint32_t modulus_;
  std::vector<std::uint32_t> exponents_;
  std::string name_;
};

/// G / [G, G] as an explicit finite abelian group with a chosen basis.
struct Abelianization {
  PermGroup derived;
  std::vector<std::size_t> coset_of;              // per element of G
  std::vector<std::uint32_t> basis_orders;        // nonincreasing
  std::vector<std::vector<std::uint32_t>> coords; // per coset, w.r.t. the basis
  std::size_t order() const { return coords.size(); }
  std::uint32_t exponent() const { return basis_orders.empty() ? 1 : basis_orders.front(); }
};

Abelianization abelianization(PermGroup const &g);

/// All linear characters, unit character first. Character k assigns
/// zeta^{k_j (m / o_j)} to basis element j, where (k_0, k_1, ...) are the
/// mixed-radix digits of k with k_0 varying fastest.
std::vector<LinearCharacter> enumerate_linear_characters(GroupPtr const &g);

LinearCharacter unit_character(GroupPtr const &g);

/// (-1)^{d - number of cycles}.
LinearCharacter sign_character(GroupPtr const &g);

PermGroup kernel(LinearCharacter const &chi);

/// chi (x) theta on W x V embedded in S_{d+r}.
LinearCharacter product_character(LinearCharacter const &chi,
                                  LinearCharacter const &theta);

/// theta^{(x) d} (x) chi on V ~ W embedded in S_{dr}.
LinearCharacter wreath_character(LinearCharacter const &theta,
                                 LinearCharacter const &chi);

/// Character selectors:
///   unit | sign | index:k | vals{g1:k1,...} | vals[m]{g1:k1,...}
///   | table[m]{k_0,k_1,...}
/// vals assigns zeta_m^k to the listed generators (others get 1) and is
/// extended to the whole group; m defaults to the abelianization exponent.
/// table lists one exponent per group element in element order. Every
/// selector is validated as a homomorphism unless `validate` is false.
LinearCharacter parse_character(std::string_view text, GroupPtr const &g,
                                bool validate = true);

} // namespace polya
