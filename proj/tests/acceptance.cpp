// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "polya/cli.hpp"
#include "polya/orbits.hpp"
#include "polya/semisym.hpp"
#include "polya/symfun.hpp"

using namespace polya;

namespace {

GroupPtr group(std::string const &text)
{
  return std::make_shared<PermGroup const>(parse_group(text));
}

std::vector<GroupPtr> catalog_groups()
{
  std::vector<std::string> names;
  for (int d = 1; d <= 6; ++d)
    names.push_back("C(" + std::to_string(d) + ")");
  for (int d = 3; d <= 6; ++d)
    names.push_back("D(" + std::to_string(d) + ")");
  for (int d = 1; d <= 5; ++d)
    names.push_back("S(" + std::to_string(d) + ")");
  for (int d = 3; d <= 5; ++d)
    names.push_back("A(" + std::to_string(d) + ")");
  names.push_back("gen[4]{(1 2)(3 4),(1 3)(2 4)}");
  names.push_back("product(S(2),S(2))");
  names.push_back("wreath(S(2),S(2))");

  std::vector<GroupPtr> out;
  for (auto const &n : names)
    out.push_back(group(n));
  return out;
}

struct Case {
  GroupPtr g;
  LinearCharacter chi;
};

std::vector<Case> catalog_cases(std::vector<GroupPtr> const &groups)
{
  std::vector<Case> out;
  for (auto const &g : groups)
    for (auto &chi : enumerate_linear_characters(g))
      out.push_back({g, std::move(chi)});
  return out;
}

std::vector<std::uint32_t> ns_within(std::size_t d, std::uint32_t max_n, std::uint64_t max_points)
{
  std::vector<std::uint32_t> out;
  for (std::uint32_t n = 0; n <= max_n; ++n)
    if (oracle::ipow(n + 1, d) <= max_points)
      out.push_back(n);
  return out;
}

// Collects failures for one criterion; the first few are printed.
class Tally {
public:
  void check(bool ok, std::string const &what)
  {
    ++checks_;
    if (!ok) {
      if (failures_.size() < 5)
        failures_.push_back(what);
      ++failed_;
    }
  }
  bool ok() const { return failed_ == 0 && checks_ > 0; }
  std::size_t checks() const { return checks_; }
  std::size_t failed() const { return failed_; }
  std::vector<std::string> const &failures() const { return failures_; }

private:
  std::size_t checks_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
};

std::string label(Case const &c, std::uint32_t n)
{
  return c.g->name() + " " + c.chi.name() + " n=" + std::to_string(n);
}

// small pairs for the product and insertion rules
std::vector<Case> small_cases()
{
  std::vector<Case> out;
  auto s2 = group("S(2)");
  out.push_back({s2, unit_character(s2)});
  out.push_back({s2, sign_character(s2)});
  for (auto name : {"C(3)", "S(3)"}) {
    auto g = group(name);
    for (auto &chi : enumerate_linear_characters(g))
      out.push_back({g, std::move(chi)});
  }
  return out;
}

std::string run_suite_text(std::string const &catalog_text, unsigned jobs)
{
  std::ostringstream out, err;
  int rc = run_suite(parse_catalog(catalog_text, Caps{}), {Format::text, jobs}, out, err);
  return std::to_string(rc) + "\n" + out.str() + err.str();
}

} // namespace

int main()
{
  auto const groups = catalog_groups();
  auto const cases = catalog_cases(groups);
  Caps const caps;
  int failures = 0;

  auto report = [&](int number, std::string const &title, Tally const &t, std::string extra = {}) {
    std::cout << (t.ok() ? "PASS" : "FAIL") << " criterion " << number << ": " << title << " ("
              << t.checks() << " checks, " << t.failed() << " failed" << extra << ")\n";
    for (auto const &f : t.failures())
      std::cout << "    " << f << '\n';
    if (!t.ok())
      ++failures;
  };

  // 1. weighted orbit sums equal the specialized cycle index
  {
    Tally t;
    auto start = std::chrono::steady_clock::now();
    for (auto const &c : cases)
      for (auto n : ns_within(c.g->degree(), 3, 4096)) {
        auto r = verify_main_theorem(c.chi, n, caps);
        t.check(r.equal, label(c, n) + ": " + r.lhs.to_string() + " vs " + r.rhs.to_string());
      }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    t.check(secs < 60.0, "runtime " + std::to_string(secs) + " s exceeds 60 s");
    std::ostringstream extra;
    extra.precision(2);
    extra << std::fixed << ", " << secs << " s";
    report(1, "g_n(chi) = Z(chi) specialized, full catalog", t, extra.str());
  }

  // 2. unit character: classical orbit counting, cross-checked by Burnside at x = 1
  {
    Tally t;
    for (auto const &c : cases) {
      if (!c.chi.is_unit())
        continue;
      auto elements = oracle::elements_of(*c.g);
      for (auto n : ns_within(c.g->degree(), 3, 4096)) {
        auto r = verify_main_theorem(c.chi, n, caps);
        t.check(r.equal, label(c, n));
        std::vector<Rational> ones(n + 1, Rational(1));
        auto burnside = static_cast<long>(oracle::burnside_count(elements, n));
        t.check(r.rhs.evaluate(ones) == Cyclotomic(burnside), label(c, n) + ": Burnside");
        t.check(enumerate_orbits(*c.g, n, caps).size() == static_cast<std::size_t>(burnside),
                label(c, n) + ": orbit count");
      }
    }
    report(2, "classical orbit counting with Burnside cross-check", t);
  }

  // 3. column sums and the n = 0 specialization
  {
    Tally t;
    for (auto const &c : cases) {
      Cyclotomic sum;
      for (std::size_t i = 0; i < c.g->order(); ++i)
        sum += c.chi.value(i);
      auto expected = c.chi.is_unit() ? static_cast<long>(c.g->order()) : 0L;
      t.check(sum == Cyclotomic(expected), label(c, 0) + ": column sum " + sum.to_string());
      auto d = static_cast<std::uint32_t>(c.g->degree());
      MonomialPoly x0d(1);
      if (c.chi.is_unit())
        x0d.add_term({d}, Cyclotomic(1));
      t.check(specialize(cycle_index(c.chi), 0, caps) == x0d, label(c, 0) + ": n=0 value");
    }
    report(3, "orthogonality at n = 0", t);
  }

  // 4. sign character of S_d
  {
    Tally t;
    for (std::uint32_t d = 3; d <= 6; ++d) {
      auto sd = group("S(" + std::to_string(d) + ")");
      auto ad = group("A(" + std::to_string(d) + ")");
      auto z_eps = cycle_index(sign_character(sd));
      t.check(z_eps == psum_sub(cycle_index(unit_character(ad)), cycle_index(unit_character(sd))),
              "Z(eps) != Z(A) - Z(S) for d=" + std::to_string(d));
      t.check(z_eps == oracle::cycle_index(sign_character(sd)), "oracle Z(eps) d=" + std::to_string(d));
    }
    for (std::uint32_t d = 1; d <= 5; ++d) {
      auto z_eps = cycle_index(sign_character(group("S(" + std::to_string(d) + ")")));
      for (std::uint32_t n = 0; n <= 5; ++n)
        t.check(specialize(z_eps, n, caps) == elementary_symmetric(d, n),
                "e_d mismatch d=" + std::to_string(d) + " n=" + std::to_string(n));
    }
    report(4, "Z(eps_d) = Z(A_d) - Z(S_d) and its specialization is e_d", t);
  }

  auto const small = small_cases();

  // 5. direct products
  {
    Tally t;
    for (auto const &a : small)
      for (auto const &b : small) {
        if (a.g->degree() + b.g->degree() > 7)
          continue;
        auto lambda = product_character(a.chi, b.chi);
        auto z = psum_mul(cycle_index(a.chi), cycle_index(b.chi));
        auto tag = a.g->name() + "/" + a.chi.name() + " x " + b.g->name() + "/" + b.chi.name();
        t.check(cycle_index(lambda) == z, tag + ": cycle index");
        t.check(z == oracle::cycle_index(lambda), tag + ": direct summation");
        for (std::uint32_t n = 0; n <= 2; ++n)
          t.check(specialize(z, n, caps) == oracle::weighted_sum(lambda, n),
                  tag + " n=" + std::to_string(n) + ": brute-force g_n");
      }
    report(5, "product rule Z(lambda) = Z(chi) Z(theta)", t);
  }

  // 6. wreath products
  {
    Tally t;
    for (auto const &inner : small)
      for (auto const &outer : small) {
        if (inner.g->degree() * outer.g->degree() > 8)
          continue;
        auto mu = wreath_character(inner.chi, outer.chi);
        auto z = plethysm_insert(cycle_index(outer.chi), cycle_index(inner.chi));
        auto tag = inner.g->name() + "/" + inner.chi.name() + " in " + outer.g->name() + "/" +
                   outer.chi.name();
        t.check(cycle_index(mu) == z, tag + ": cycle index");
        t.check(z == oracle::cycle_index(mu), tag + ": direct summation");
      }
    auto s2 = group("S(2)");
    auto flagship = plethysm_insert(cycle_index(unit_character(s2)), cycle_index(unit_character(s2)));
    PowerSumPoly expected(4);
    expected.add_term({4}, Cyclotomic(Rational(1, 8)));
    expected.add_term({2, 1}, Cyclotomic(Rational(2, 8)));
    expected.add_term({0, 2}, Cyclotomic(Rational(3, 8)));
    expected.add_term({0, 0, 0, 1}, Cyclotomic(Rational(2, 8)));
    t.check(flagship == expected, "flagship: " + flagship.to_string());
    t.check(cycle_index(unit_character(group("wreath(S(2),S(2))"))) == expected,
            "flagship via the wreath group");
    report(6, "insertion rule for wreath products", t);
  }

  // 7. projector and basis statements on tensor powers
  {
    Tally t;
    for (auto const &c : cases)
      for (auto n : ns_within(c.g->degree(), 3, 1024)) {
        auto m = MonomialModule::tensor_power(c.g, n, caps);
        auto r = verify_basis_prop(m, c.chi);
        auto j = index_set_J(c.chi, n, caps).size();
        auto tag = label(c, n);
        t.check(r.idempotent, tag + ": not idempotent");
        t.check(r.trace == Rational(static_cast<long>(r.rank)), tag + ": trace != rank");
        t.check(r.rank == j && r.j_size == j, tag + ": rank != |J|");
        t.check(r.image_family_independent, tag + ": image family dependent");
        t.check(r.annihilation_ok, tag + ": annihilation");
        t.check(r.kernel_family_annihilated && r.kernel_family_rank == r.dim - j,
                tag + ": kernel families");
        t.check(r.ok, tag + ": report not ok");
      }
    report(7, "projector idempotent, trace = rank = |J|, basis and annihilation", t);
  }

  // 8. H-orbit census, H = ker chi
  {
    Tally t;
    std::size_t chi_orbits = 0, other_orbits = 0;
    for (auto const &c : cases) {
      auto h_order = kernel(c.chi).order();
      auto index = c.g->order() / h_order;
      for (auto n : ns_within(c.g->degree(), 3, 4096))
        for (auto const &rec : orbit_census(c.chi, n, caps)) {
          auto tag = label(c, n) + " rep " + point_to_string(rec.rep);
          t.check(rec.uniform_h_lengths, tag + ": unequal H-orbit lengths");
          t.check(rec.tau_h * rec.h_orbit_length == rec.size, tag + ": tau_H * length != size");
          t.check(rec.h_orbit_length * rec.h_stabilizer_order == h_order,
                  tag + ": H-orbit length != |H:H_i|");
          t.check((rec.stabilizer_order == rec.h_stabilizer_order) == rec.is_chi_orbit,
                  tag + ": chi trivial on W_i disagrees with W_i = H_i");
          t.check(index * rec.h_orbit_length == rec.size * (rec.stabilizer_order / rec.h_stabilizer_order) &&
                    rec.stabilizer_order % rec.h_stabilizer_order == 0,
                  tag + ": |W:H| h_len != size |W_i:H_i|");
          t.check(index % rec.tau_h == 0, tag + ": tau_H does not divide |W:H|");
          bool full = rec.tau_h == index;
          t.check(full == rec.is_chi_orbit, tag + ": tau_H = |W:H| disagrees with chi-orbit");
          (rec.is_chi_orbit ? chi_orbits : other_orbits) += 1;
        }
    }
    t.check(chi_orbits > 0 && other_orbits > 0, "both directions exercised");
    report(8, "H-orbit counts on every W-orbit", t,
           ", " + std::to_string(chi_orbits) + " chi-orbits, " + std::to_string(other_orbits) +
             " others");
  }

  // 9. truncation
  {
    Tally t;
    for (auto const &c : cases)
      for (std::uint32_t n = 0; n <= 2; ++n) {
        if (oracle::ipow(n + 2, c.g->degree()) > 4096)
          continue;
        auto small_j = index_set_J(c.chi, n, caps);
        std::vector<HypercubePoint> restricted;
        for (auto const &p : index_set_J(c.chi, n + 1, caps))
          if (*std::max_element(p.begin(), p.end()) <= n)
            restricted.push_back(p);
        t.check(small_j == restricted, label(c, n));
      }
    report(9, "J(n) = J(n+1) restricted to [0,n]^d", t);
  }

  // 10. determinism of suite reports
  {
    Tally t;
    std::ifstream in(POLYA_DEFAULT_CATALOG);
    std::stringstream buf;
    buf << in.rdbuf();
    t.check(!buf.str().empty(), "default catalog not found");
    auto first = run_suite_text(buf.str(), 1);
    auto second = run_suite_text(buf.str(), 1);
    auto parallel = run_suite_text(buf.str(), 4);
    t.check(first.rfind("0\n", 0) == 0, "default catalog does not pass");
    t.check(first == second, "two sequential runs differ");
    t.check(first == parallel, "sequential and parallel runs differ");
    report(10, "byte-identical suite reports", t);
  }

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << '\n';
  return failures == 0 ? 0 : 1;
}
