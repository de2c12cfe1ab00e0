#include "polya/orbits.hpp"

#include <algorithm>
#include <map>

#include "polya/error.hpp"

namespace polya {

HypercubePoint act(Permutation const &sigma, HypercubePoint const &point)
{
  if (sigma.degree() != point.size())
    throw InvalidInput("act: permutation degree " + std::to_string(sigma.degree()) +
                       " does not match point length " + std::to_string(point.size()));
  HypercubePoint out(point.size());
  for (std::size_t s = 0; s < point.size(); ++s)
    out[sigma.image0(s)] = point[s];
  return out;
}

Hypercube::Hypercube(std::uint32_t n, std::size_t d) : n_(n), d_(d), size_(1)
{
  for (std::size_t s = 0; s < d; ++s) {
    if (size_ > (std::uint64_t(1) << 40) / (n + 1))
      throw CapExceeded("hypercube [0," + std::to_string(n) + "]^" + std::to_string(d) +
                        " is too large to index");
    size_ *= n + 1;
  }
}

std::uint64_t Hypercube::encode(HypercubePoint const &p) const
{
  std::uint64_t code = 0;
  for (auto j : p)
    code = code * (n_ + 1) + j;
  return code;
}

HypercubePoint Hypercube::decode(std::uint64_t code) const
{
  HypercubePoint p(d_);
  for (std::size_t s = d_; s-- > 0;) {
    p[s] = static_cast<std::uint32_t>(code % (n_ + 1));
    code /= n_ + 1;
  }
  return p;
}

std::vector<OrbitRecord> enumerate_orbits(PermGroup const &w, std::uint32_t n,
                                          Caps const &caps)
{
  Hypercube cube(n, w.degree());
  if (cube.size() > caps.orbit_work / w.order())
    throw CapExceeded("orbit enumeration: (n+1)^d * |W| = " +
                      std::to_string(cube.size()) + " * " + std::to_string(w.order()) +
                      " exceeds cap of " + std::to_string(caps.orbit_work));

  std::vector<bool> visited(cube.size(), false);
  std::vector<OrbitRecord> records;
  for (std::uint64_t code = 0; code < cube.size(); ++code) {
    if (visited[code])
      continue;
    OrbitRecord rec;
    rec.rep = cube.decode(code);
    for (std::size_t g = 0; g < w.order(); ++g) {
      auto image = cube.encode(act(w.element(g), rec.rep));
      if (image == code)
        rec.stabilizer.push_back(g);
      if (!visited[image]) {
        visited[image] = true;
        ++rec.size;
      }
    }
    rec.stabilizer_order = rec.stabilizer.size();
    records.push_back(std::move(rec));
  }
  return records;
}

void chi_orbit_filter(std::vector<OrbitRecord> &records, LinearCharacter const &chi)
{
  for (auto &rec : records)
    rec.is_chi_orbit = std::all_of(rec.stabilizer.begin(), rec.stabilizer.end(),
                                   [&](std::size_t g) { return chi.is_trivial_at(g); });
}

void h_orbit_census(std::vector<OrbitRecord> &records, PermGroup const &w,
                    PermGroup const &h)
{
  if (!h.is_subgroup_of(w))
    throw InvalidInput("h_orbit_census: " + h.name() + " is not a subgroup of " + w.name());

  for (auto &rec : records) {
    std::map<HypercubePoint, bool> orbit;  // point -> already placed in an H-orbit
    for (auto const &g : w.elements())
      orbit.emplace(act(g, rec.rep), false);

    std::vector<std::uint64_t> lengths;
    std::uint64_t rep_length = 0;
    for (auto &[point, placed] : orbit) {
      if (placed)
        continue;
      std::uint64_t len = 0;
      for (auto const &x : h.elements()) {
        auto it = orbit.find(act(x, point));
        if (it == orbit.end())
          throw CheckFailed("h_orbit_census: H moved a point out of its W-orbit");
        if (!it->second) {
          it->second = true;
          ++len;
        }
      }
      if (point == rec.rep)
        rep_length = len;
      lengths.push_back(len);
    }

    rec.tau_h = lengths.size();
    rec.h_orbit_length = rep_length;
    rec.uniform_h_lengths = std::all_of(lengths.begin(), lengths.end(),
                                        [&](std::uint64_t l) { return l == lengths.front(); });
    rec.h_stabilizer_order = static_cast<std::uint64_t>(
      std::count_if(h.elements().begin(), h.elements().end(),
                    [&](Permutation const &x) { return act(x, rec.rep) == rec.rep; }));
  }
}

std::vector<OrbitRecord> orbit_census(LinearCharacter const &chi, std::uint32_t n,
                                      Caps const &caps)
{
  auto records = enumerate_orbits(chi.group(), n, caps);
  chi_orbit_filter(records, chi);
  h_orbit_census(records, chi.group(), kernel(chi));
  return records;
}

std::vector<HypercubePoint> index_set_J(LinearCharacter const &chi, std::uint32_t n,
                                        Caps const &caps)
{
  auto records = enumerate_orbits(chi.group(), n, caps);
  chi_orbit_filter(records, chi);
  std::vector<HypercubePoint> out;
  for (auto &rec : records)
    if (rec.is_chi_orbit)
      out.push_back(std::move(rec.rep));
  return out;
}

MonomialPoly weighted_sum_g(LinearCharacter const &chi, std::uint32_t n,
                            Caps const &caps)
{
  MonomialPoly g(n + 1);
  for (auto const &j : index_set_J(chi, n, caps)) {
    Exponents e(n + 1, 0);
    for (auto value : j)
      ++e[value];
    g.add_term(std::move(e), Cyclotomic(1));
  }
  return g;
}

MainTheoremReport verify_main_theorem(LinearCharacter const &chi, std::uint32_t n,
                                      Caps const &caps)
{
  MainTheoremReport report{weighted_sum_g(chi, n, caps),
                           specialize(cycle_index(chi), n, caps), false};
  report.equal = report.lhs == report.rhs;
  return report;
}

std::string point_to_string(HypercubePoint const &p)
{
  std::string out = "(";
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (s)
      out += ',';
    out += std::to_string(p[s]);
  }
  return out + ")";
}

std::string census_to_tsv(std::vector<OrbitRecord> const &records)
{
  std::string out = "rep\tsize\tstab_order\ttau_H\th_len\tchi_orbit\n";
  for (auto const &r : records) {
    out += point_to_string(r.rep) + '\t' + std::to_string(r.size) + '\t' +
           std::to_string(r.stabilizer_order) + '\t' + std::to_string(r.tau_h) + '\t' +
           std::to_string(r.h_orbit_length) + '\t' + (r.is_chi_orbit ? "1" : "0") + '\n';
  }
  return out;
}

nlohmann::json census_to_json(std::vector<OrbitRecord> const &records)
{
  auto arr = nlohmann::json::array();
  for (auto const &r : records)
    arr.push_back({{"rep", r.rep},
                   {"size", r.size},
                   {"stab_order", r.stabilizer_order},
                   {"tau_H", r.tau_h},
                   {"h_len", r.h_orbit_length},
                   {"chi_orbit", r.is_chi_orbit}});
  return arr;
}

} // namespace polya
