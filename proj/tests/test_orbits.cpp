#include <doctest.h>

#include <memory>

#include "oracles.hpp"
#include "polya/error.hpp"
#include "polya/orbits.hpp"

using namespace polya;

namespace {

GroupPtr group(std::string_view text)
{
  return std::make_shared<PermGroup const>(parse_group(text));
}

std::vector<HypercubePoint> reps(std::vector<OrbitRecord> const &records)
{
  std::vector<HypercubePoint> out;
  for (auto const &r : records)
    out.push_back(r.rep);
  return out;
}

} // namespace

TEST_CASE("action on coordinates")
{
  auto sigma = perm_from_cycles("(1 2 3)", 3);
  // (sigma j)_i = j_{sigma^-1(i)}
  CHECK(act(sigma, {5, 6, 7}) == HypercubePoint{7, 5, 6});
  CHECK(act(sigma, {5, 6, 7}) == oracle::act(oracle::from_lib(sigma), {5, 6, 7}));
  CHECK_THROWS_AS(act(sigma, {1, 2}), InvalidInput);

  // left action: (ab) j = a (b j)
  auto s4 = parse_group("S(4)");
  HypercubePoint j{0, 1, 2, 3};
  for (auto const &a : s4.elements())
    for (auto const &b : s4.elements())
      CHECK(act(compose(a, b), j) == act(a, act(b, j)));
}

TEST_CASE("hypercube coding is lexicographic")
{
  Hypercube cube(2, 3);
  CHECK(cube.size() == 27);
  std::uint64_t code = 0;
  for (auto const &p : oracle::all_points(2, 3)) {
    CHECK(cube.encode(p) == code);
    CHECK(cube.decode(code) == p);
    ++code;
  }
}

TEST_CASE("orbits of C(4) on [0,1]^4")
{
  auto c4 = group("C(4)");
  auto records = enumerate_orbits(*c4, 1);
  CHECK(records.size() == oracle::burnside_count(oracle::elements_of(*c4), 1));
  CHECK(reps(records) == std::vector<HypercubePoint>{
                           {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 1}, {0, 1, 0, 1}, {0, 1, 1, 1}, {1, 1, 1, 1}});

  auto chi = enumerate_linear_characters(c4)[1];
  chi_orbit_filter(records, chi);
  std::vector<HypercubePoint> passing;
  for (auto const &r : records)
    if (r.is_chi_orbit)
      passing.push_back(r.rep);
  CHECK(passing == std::vector<HypercubePoint>{{0, 0, 0, 1}, {0, 0, 1, 1}, {0, 1, 1, 1}});
  CHECK(index_set_J(chi, 1) == passing);
  CHECK(index_set_J(chi, 1) == oracle::index_set(chi, 1));
}

TEST_CASE("trivial and full groups")
{
  auto triv = group("gen[3]{}");
  CHECK(enumerate_orbits(*triv, 2).size() == 27);
  auto s3 = group("S(3)");
  auto only = enumerate_orbits(*s3, 0);
  REQUIRE(only.size() == 1);
  CHECK(only[0].rep == HypercubePoint{0, 0, 0});
  CHECK(index_set_J(unit_character(s3), 0) == std::vector<HypercubePoint>{{0, 0, 0}});
}

TEST_CASE("sign character picks distinct coordinates")
{
  auto s3 = group("S(3)");
  auto eps = sign_character(s3);
  CHECK(index_set_J(eps, 2) == std::vector<HypercubePoint>{{0, 1, 2}});
  for (std::uint32_t d = 2; d <= 4; ++d)
    for (std::uint32_t n = 0; n <= 4; ++n) {
      auto sd = group("S(" + std::to_string(d) + ")");
      auto j = index_set_J(sign_character(sd), n);
      CHECK(j.size() == oracle::binomial(n + 1, d));
      for (auto const &p : j)
        CHECK(std::is_sorted(p.begin(), p.end()));
    }
}

TEST_CASE("weighted sums")
{
  auto c4 = group("C(4)");
  auto chars = enumerate_linear_characters(c4);
  CHECK(weighted_sum_g(chars[1], 1).to_string() == "x0^3*x1 + x0^2*x1^2 + x0*x1^3");
  CHECK(weighted_sum_g(chars[0], 1).to_string() ==
        "x0^4 + x0^3*x1 + 2*x0^2*x1^2 + x0*x1^3 + x1^4");
  for (auto const &chi : chars)
    if (!chi.is_unit())
      CHECK(weighted_sum_g(chi, 0).is_zero());

  for (auto text : {"S(3)", "D(4)", "A(4)", "wreath(S(2),S(2))", "product(S(2),C(3))"})
    for (auto const &chi : enumerate_linear_characters(group(text)))
      for (std::uint32_t n = 0; n <= 2; ++n) {
        CAPTURE(text);
        CAPTURE(chi.name());
        CAPTURE(n);
        auto g = weighted_sum_g(chi, n);
        CHECK(g == oracle::weighted_sum(chi, n));
        CHECK(is_symmetric(g));
      }
}

TEST_CASE("census of H-orbits")
{
  auto s3 = group("S(3)");
  auto records = orbit_census(sign_character(s3), 2);
  auto find = [&](HypercubePoint const &p) {
    for (auto const &r : records)
      if (r.rep == p)
        return r;
    FAIL("missing orbit");
    return OrbitRecord{};
  };
  auto distinct = find({0, 1, 2});
  CHECK(distinct.size == 6);
  CHECK(distinct.tau_h == 2);
  CHECK(distinct.h_orbit_length == 3);
  auto repeated = find({0, 0, 1});
  CHECK(repeated.size == 3);
  CHECK(repeated.tau_h == 1);
  CHECK(repeated.h_orbit_length == 3);

  for (auto const &r : orbit_census(unit_character(s3), 2))
    CHECK(r.tau_h == 1);
}

TEST_CASE("verify_main_theorem on worked examples")
{
  auto chi = enumerate_linear_characters(group("C(4)"))[1];
  auto report = verify_main_theorem(chi, 1);
  CHECK(report.equal);
  CHECK(report.lhs.to_string() == "x0^3*x1 + x0^2*x1^2 + x0*x1^3");

  auto eps = sign_character(group("S(3)"));
  auto r2 = verify_main_theorem(eps, 2);
  CHECK(r2.equal);
  CHECK(r2.lhs.to_string() == "x0*x1*x2");
}

TEST_CASE("census export")
{
  auto records = orbit_census(sign_character(group("S(2)")), 1);
  CHECK(census_to_tsv(records) ==
        "rep\tsize\tstab_order\ttau_H\th_len\tchi_orbit\n"
        "(0,0)\t1\t2\t1\t1\t0\n"
        "(0,1)\t2\t1\t2\t1\t1\n"
        "(1,1)\t1\t2\t1\t1\t0\n");
  auto j = census_to_json(records);
  CHECK(j.size() == 3);
  CHECK(j[1]["rep"] == nlohmann::json::array({0, 1}));
  CHECK(j[1]["chi_orbit"] == true);
}

TEST_CASE("orbit work cap")
{
  Caps caps;
  caps.orbit_work = 100;
  CHECK_THROWS_AS(enumerate_orbits(parse_group("S(4)"), 1, caps), CapExceeded);
  CHECK_NOTHROW(enumerate_orbits(parse_group("C(2)"), 1, caps));
}
