#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "polya/caps.hpp"
#include "polya/character.hpp"
#include "polya/perm.hpp"
#include "polya/symfun.hpp"

namespace polya {

/// A configuration (j_1, ..., j_d) in [0, n]^d. Coordinates are 0-based
/// values; positions correspond to the points 1..d the group acts on.
using HypercubePoint = std::vector<std::uint32_t>;

/// sigma . (j_1, ..., j_d) = (j_{sigma^-1(1)}, ..., j_{sigma^-1(d)}),
/// i.e. the value at position s moves to position sigma(s). A left action.
HypercubePoint act(Permutation const &sigma, HypercubePoint const &point);

/// Mixed-radix encoding with the first coordinate most significant, so the
/// numeric order of codes is the lexicographic order of points.
class Hypercube {
public:
  Hypercube(std::uint32_t n, std::size_t d);

  std::uint32_t n() const { return n_; }
  std::size_t d() const { return d_; }
  std::uint64_t size() const { return size_; }

  std::uint64_t encode(HypercubePoint const &p) const;
  HypercubePoint decode(std::uint64_t code) const;

private:
  std::uint32_t n_;
  std::size_t d_;
  std::uint64_t size_;
};

struct OrbitRecord {
  HypercubePoint rep;               // lexicographically minimal in its orbit
  std::uint64_t size = 0;
  std::uint64_t stabilizer_order = 0;
  std::vector<std::size_t> stabilizer;  // element indices into W

  // filled by chi_orbit_filter
  bool is_chi_orbit = false;

  // filled by h_orbit_census
  std::uint64_t tau_h = 0;
  std::uint64_t h_orbit_length = 0;       // length of the H-orbit through rep
  std::uint64_t h_stabilizer_order = 0;   // |H_rep|
  bool uniform_h_lengths = false;
};

/// W-orbits on [0, n]^d, sorted by representative. Throws CapExceeded when
/// (n+1)^d * |W| passes caps.orbit_work.
std::vector<OrbitRecord> enumerate_orbits(PermGroup const &w, std::uint32_t n,
                                          Caps const &caps = {});

/// Marks the orbits on which chi is trivial on the stabilizer.
void chi_orbit_filter(std::vector<OrbitRecord> &records, LinearCharacter const &chi);

/// Splits every orbit into H-orbits and records their number and lengths.
/// Throws InvalidInput unless H is a subgroup of W.
void h_orbit_census(std::vector<OrbitRecord> &records, PermGroup const &w,
                    PermGroup const &h);

/// enumerate_orbits + chi_orbit_filter + h_orbit_census with H = ker chi.
std::vector<OrbitRecord> orbit_census(LinearCharacter const &chi, std::uint32_t n,
                                      Caps const &caps = {});

/// J(n, d, chi): representatives of the chi-orbits, in lexicographic order.
std::vector<HypercubePoint> index_set_J(LinearCharacter const &chi, std::uint32_t n,
                                        Caps const &caps = {});

/// g_n(chi; x_0..x_n) = sum over j in J(n, d, chi) of x_{j_1} ... x_{j_d}.
MonomialPoly weighted_sum_g(LinearCharacter const &chi, std::uint32_t n,
                            Caps const &caps = {});

struct MainTheoremReport {
  MonomialPoly lhs;  // orbit side
  MonomialPoly rhs;  // cycle-index side
  bool equal = false;
};

/// Compares g_n(chi) from orbit enumeration with the specialized cycle index.
MainTheoremReport verify_main_theorem(LinearCharacter const &chi, std::uint32_t n,
                                      Caps const &caps = {});

std::string point_to_string(HypercubePoint const &p);

/// Columns: rep, size, stab_order, tau_H, h_len, chi_orbit.
std::string census_to_tsv(std::vector<OrbitRecord> const &records);
nlohmann::json census_to_json(std::vector<OrbitRecord> const &records);

} // namespace polya
