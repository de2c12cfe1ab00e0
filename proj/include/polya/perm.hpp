#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace polya {

using Point = std::uint32_t;

/// A permutation of the points {1, ..., d}.
///
/// Images are held 0-based internally; the public interface is 1-based to
/// match the usual cycle notation.
class Permutation {
public:
  Permutation() = default;

  /// Identity of the given degree.
  static Permutation identity(std::size_t degree);

  /// Build from 1-based images, images[s-1] = sigma(s). Throws InvalidInput
  /// unless the images form a bijection of {1..d}.
  static Permutation from_images(std::span<const Point> images);

  std::size_t degree() const { return map_.size(); }

  /// sigma(s) for 1-based s.
  Point operator()(Point s) const { return map_[s - 1] + 1; }

  /// 0-based view: sigma(s+1)-1.
  Point image0(std::size_t s) const { return map_[s]; }

  std::vector<Point> images() const;

  bool is_identity() const;
  Permutation inverse() const;

  /// Element order in the cyclic group it generates.
  std::uint64_t order() const;

  /// Cycle notation, fixed points omitted; the identity renders as "()".
  std::string to_cycle_string() const;

  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend auto operator<=>(Permutation const &, Permutation const &) = default;

private:
  explicit Permutation(std::vector<Point> map) : map_(std::move(map)) {}

  std::vector<Point> map_;

  friend Permutation compose(Permutation const &a, Permutation const &b);
};

/// (compose(a, b))(s) = a(b(s)): b is applied first.
Permutation compose(Permutation const &a, Permutation const &b);

/// Parse cycle notation such as "(1 2 3)(4 5)". Points omitted from the text
/// are fixed. Commas inside a cycle are accepted as separators.
Permutation perm_from_cycles(std::string_view text, std::size_t degree);

/// (c_1, ..., c_d) where c_s counts the cycles of length s.
std::vector<std::uint32_t> cycle_type(Permutation const &sigma);

struct PermutationHash {
  std::size_t operator()(Permutation const &p) const noexcept;
};

/// A finite permutation group stored as an explicit element list.
///
/// Element 0 is always the identity. The element order is the breadth-first
/// order produced by closure, which makes every downstream table (character
/// values, orbit representatives) reproducible.
class PermGroup {
public:
  static constexpr std::size_t default_order_cap = 50'000;

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }

  std::vector<Permutation> const &elements() const { return elements_; }
  std::vector<Permutation> const &generators() const { return generators_; }
  Permutation const &element(std::size_t i) const { return elements_[i]; }

  /// Index of p in elements(), or npos when p is not a member.
  std::size_t index_of(Permutation const &p) const;
  bool contains(Permutation const &p) const { return index_of(p) != npos; }

  /// Index of elements()[a] * elements()[b].
  std::size_t product_index(std::size_t a, std::size_t b) const;
  std::size_t inverse_index(std::size_t a) const;

  /// Expression in the group mini-language that rebuilds this group.
  std::string const &name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  bool is_abelian() const;
  bool is_subgroup_of(PermGroup const &g) const;
  bool is_normal_in(PermGroup const &g) const;

  /// Same degree and the same element set (order ignored).
  bool same_elements(PermGroup const &other) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
  friend PermGroup group_closure(std::size_t, std::vector<Permutation> const &,
                                 std::size_t);

  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
  std::vector<Permutation> generators_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
  std::string name_;
};

using GroupPtr = std::shared_ptr<PermGroup const>;

/// Smallest subgroup of S_degree containing the generators. Identity
/// generators are dropped. Throws CapExceeded when the order passes order_cap.
PermGroup group_closure(std::size_t degree,
                        std::vector<Permutation> const &generators,
                        std::size_t order_cap = PermGroup::default_order_cap);

enum class GroupKind { symmetric, alternating, cyclic, dihedral };

PermGroup named_group(GroupKind kind, std::size_t degree);

/// W x V inside S_{d+r}: (sigma, tau) acts as sigma on 1..d and as tau
/// shifted by d on d+1..d+r.
PermGroup direct_product_embed(PermGroup const &w, PermGroup const &v);

/// V ~ W inside S_{dr}: block s occupies points (s-1)r+1 .. sr. Generated by
/// the generators of V acting in block 1 and the generators of W permuting
/// whole blocks.
PermGroup wreath_embed(PermGroup const &v, PermGroup const &w);

/// Commutator subgroup [G, G].
PermGroup derived_subgroup(PermGroup const &g);

/// Subgroup {g : pred(g)} of an explicit group; the predicate must select a
/// subgroup. Elements keep their relative order in g.
PermGroup subgroup_where(PermGroup const &g,
                         std::function<bool(std::size_t)> const &pred);

struct WreathParts {
  Permutation top;                    // block permutation, in W
  std::vector<Permutation> blocks;    // blocks[s-1]: map from block s to block top(s), in V
};

/// Split g in V ~ W as g((s-1)r+t) = (top(s)-1)r + blocks[s-1](t).
WreathParts decompose_wreath_element(Permutation const &g, PermGroup const &v,
                                     PermGroup const &w);

/// Inverse of decompose_wreath_element.
Permutation assemble_wreath_element(WreathParts const &parts, std::size_t r);

/// Parse the group mini-language:
///   S(d) A(d) C(d) D(d) gen[d]{(1 2 3),(1 2)} product(G1,G2) wreath(V,W)
PermGroup parse_group(std::string_view text,
                      std::size_t order_cap = PermGroup::default_order_cap);

} // namespace polya
