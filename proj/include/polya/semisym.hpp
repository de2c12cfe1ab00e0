#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "polya/caps.hpp"
#include "polya/character.hpp"
#include "polya/cyclotomic.hpp"
#include "polya/orbits.hpp"

namespace polya {

using SparseVector = std::map<std::uint32_t, Cyclotomic>;

/// Square matrix over Q(zeta) stored as sparse rows.
class ExactMatrix {
public:
  explicit ExactMatrix(std::uint32_t dim = 0) : rows_(dim) {}

  std::uint32_t dim() const { return static_cast<std::uint32_t>(rows_.size()); }
  SparseVector const &row(std::uint32_t r) const { return rows_[r]; }
  Cyclotomic at(std::uint32_t r, std::uint32_t c) const;

  void add(std::uint32_t r, std::uint32_t c, Cyclotomic const &v);

  /// Sparse columns, i.e. the rows of the transpose.
  std::vector<SparseVector> columns() const;

  Cyclotomic trace() const;

  friend ExactMatrix operator*(ExactMatrix const &a, ExactMatrix const &b);
  friend bool operator==(ExactMatrix const &, ExactMatrix const &) = default;

private:
  std::vector<SparseVector> rows_;
};

/// Rank of a family of sparse vectors by exact elimination; each vector is
/// reduced against the pivots found so far, pivoting on its first nonzero.
std::size_t rank_of(std::vector<SparseVector> vectors);

/// Basis v_i indexed by the points of [0, n]^d with the monomial action
/// g v_i = gamma_i(g) v_{g i}, gamma_i(g) = zeta_M^{gamma(g, i)}.
class MonomialModule {
public:
  /// The tensor power of K^{n+1}: gamma identically 1.
  static MonomialModule tensor_power(GroupPtr w, std::uint32_t n, Caps const &caps = {});

  /// Explicit family; the cocycle law is validated exhaustively and
  /// InvalidInput is thrown when it fails.
  static MonomialModule with_gamma(GroupPtr w, std::uint32_t n, std::uint32_t modulus,
                                   std::vector<std::uint32_t> gamma, Caps const &caps = {});

  PermGroup const &group() const { return *group_; }
  GroupPtr const &group_ptr() const { return group_; }
  Hypercube const &cube() const { return cube_; }
  std::uint32_t dim() const { return static_cast<std::uint32_t>(cube_.size()); }
  std::uint32_t modulus() const { return modulus_; }

  /// Code of g . i.
  std::uint32_t image(std::size_t g, std::uint32_t i) const { return action_[g * dim() + i]; }
  std::uint32_t gamma_exponent(std::size_t g, std::uint32_t i) const
  {
    return gamma_[g * dim() + i];
  }
  Cyclotomic gamma(std::size_t g, std::uint32_t i) const;

  /// gamma_i(gh) = gamma_{hi}(g) gamma_i(h) for all g, h, i.
  bool satisfies_cocycle_law() const;

  /// Matrix of g in the basis v_i.
  ExactMatrix action_matrix(std::size_t g) const;

  /// action_matrix(g) * action_matrix(h) == action_matrix(gh) on generators.
  bool is_representation() const;

  /// I(M, alpha) membership: gamma_i and alpha^{-1} agree on the stabilizer.
  bool in_index_set(std::uint32_t i, LinearCharacter const &alpha) const;

private:
  MonomialModule(GroupPtr w, std::uint32_t n, Caps const &caps);

  GroupPtr group_;
  Hypercube cube_;
  std::vector<std::uint32_t> action_;
  std::uint32_t modulus_ = 1;
  std::vector<std::uint32_t> gamma_;
};

/// Per-orbit choices for a transported cocycle family.
struct GammaChoice {
  std::vector<std::size_t> stabilizer_character;  // per orbit, index into the
                                                  // stabilizer's characters
  std::vector<std::uint32_t> point_phase;         // per point code, exponent of zeta_4
};

/// gamma_i(g) = c_{gi} / c_i * psi(t_{gi}^{-1} g t_i) where t_j is the first
/// element carrying the orbit representative to j, psi is the chosen
/// character of the representative's stabilizer and c_j = zeta_4^{phase_j}
/// (the representative's own phase is ignored and taken as 1).
MonomialModule transported_gamma_family(GroupPtr w, std::uint32_t n,
                                        GammaChoice const &choice, Caps const &caps = {});

/// transported_gamma_family with choices drawn from a seeded generator.
MonomialModule random_gamma_family(GroupPtr w, std::uint32_t n, std::uint64_t seed,
                                   Caps const &caps = {});

/// a_alpha = |G|^{-1} sum_g alpha(g) g.
ExactMatrix build_projector(MonomialModule const &m, LinearCharacter const &alpha);

struct AnnihilationReport {
  std::size_t excluded = 0;         // basis vectors outside I(M, alpha)
  bool excluded_annihilated = false;  // a_alpha v_i = 0 for all of them
  bool differences_annihilated = false;  // a_alpha (alpha^{-1}(g) v_i - g v_i) = 0
  bool ok() const { return excluded_annihilated && differences_annihilated; }
};

AnnihilationReport check_annihilation(MonomialModule const &m, LinearCharacter const &alpha);
AnnihilationReport check_annihilation(MonomialModule const &m, LinearCharacter const &alpha,
                                      ExactMatrix const &projector);

struct BasisReport {
  std::uint32_t dim = 0;
  Rational trace;
  std::size_t rank = 0;
  std::size_t j_size = 0;
  bool idempotent = false;
  bool image_family_independent = false;  // a_alpha v_j, j in J
  std::size_t kernel_family_size = 0;     // both families spanning the kernel
  std::size_t kernel_family_rank = 0;
  bool kernel_family_annihilated = false;
  bool annihilation_ok = false;
  bool ok = false;
};

BasisReport verify_basis_prop(MonomialModule const &m, LinearCharacter const &alpha);

nlohmann::json basis_report_json(BasisReport const &r, std::string const &group,
                                 std::string const &character, std::uint32_t n,
                                 std::size_t d);

} // namespace polya
