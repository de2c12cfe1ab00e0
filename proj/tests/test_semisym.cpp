#include <doctest.h>

#include <memory>

#include "oracles.hpp"
#include "polya/error.hpp"
#include "polya/semisym.hpp"

using namespace polya;

namespace {

GroupPtr group(std::string_view text)
{
  return std::make_shared<PermGroup const>(parse_group(text));
}

Cyclotomic q(long a, long b = 1) { return Cyclotomic(Rational(a, b)); }

} // namespace

TEST_CASE("projector for S(2) on a one-dimensional space")
{
  auto s2 = group("S(2)");
  auto m = MonomialModule::tensor_power(s2, 0);
  auto a = build_projector(m, unit_character(s2));
  CHECK(a.dim() == 1);
  CHECK(a.at(0, 0) == q(1));
}

TEST_CASE("sign projector for S(2) on a four-dimensional space")
{
  auto s2 = group("S(2)");
  auto m = MonomialModule::tensor_power(s2, 1);
  auto a = build_projector(m, sign_character(s2));

  // basis v00, v01, v10, v11; a = (1 - swap) / 2
  ExactMatrix expect(4);
  expect.add(1, 1, q(1, 2));
  expect.add(1, 2, q(-1, 2));
  expect.add(2, 1, q(-1, 2));
  expect.add(2, 2, q(1, 2));
  CHECK(a == expect);
  CHECK(a * a == a);
  CHECK(rank_of(a.columns()) == 1);
  CHECK(a.trace() == q(1));
}

TEST_CASE("unit projector of the trivial group is the identity")
{
  auto triv = group("gen[2]{}");
  auto m = MonomialModule::tensor_power(triv, 2);
  auto a = build_projector(m, unit_character(triv));
  for (std::uint32_t r = 0; r < a.dim(); ++r)
    for (std::uint32_t c = 0; c < a.dim(); ++c)
      CHECK(a.at(r, c) == q(r == c ? 1 : 0));
}

TEST_CASE("rank by elimination")
{
  Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
  std::vector<SparseVector> v = {
    {{0, q(1)}, {1, i}},
    {{0, i}, {1, q(-1)}},   // i times the first
    {{2, q(3)}},
    {{0, q(2)}, {1, i + i}, {2, q(6)}},  // 2*first + 2*third
  };
  CHECK(rank_of(v) == 2);
  CHECK(rank_of({}) == 0);
  CHECK(rank_of({SparseVector{}}) == 0);
}

TEST_CASE("annihilation")
{
  auto s3 = group("S(3)");
  auto m = MonomialModule::tensor_power(s3, 1);
  auto eps = sign_character(s3);
  auto report = check_annihilation(m, eps);
  CHECK(report.excluded == 8);
  CHECK(report.ok());
  auto basis = verify_basis_prop(m, eps);
  CHECK(basis.rank == 0);
  CHECK(basis.j_size == 0);
  CHECK(basis.ok);

  auto c4 = group("C(4)");
  auto chi = enumerate_linear_characters(c4)[1];
  auto mc = MonomialModule::tensor_power(c4, 1);
  auto a = build_projector(mc, chi);
  for (std::uint32_t r = 0; r < a.dim(); ++r)
    CHECK(a.at(r, 0).is_zero());
  CHECK(check_annihilation(mc, chi).ok());

  auto unit = check_annihilation(mc, unit_character(c4));
  CHECK(unit.excluded == 0);
  CHECK(unit.ok());
}

TEST_CASE("ranks of classical powers")
{
  for (std::uint32_t d = 2; d <= 4; ++d)
    for (std::uint32_t n = 0; n <= 2; ++n) {
      auto sd = group("S(" + std::to_string(d) + ")");
      if (oracle::ipow(n + 1, d) > 256)
        continue;
      auto m = MonomialModule::tensor_power(sd, n);
      auto ext = verify_basis_prop(m, sign_character(sd));
      CHECK(ext.ok);
      CHECK(ext.rank == oracle::binomial(n + 1, d));
      auto sym = verify_basis_prop(m, unit_character(sd));
      CHECK(sym.ok);
      CHECK(sym.rank == oracle::binomial(n + d, d));
    }

  auto c4 = group("C(4)");
  auto r = verify_basis_prop(MonomialModule::tensor_power(c4, 1),
                             enumerate_linear_characters(c4)[1]);
  CHECK(r.rank == 3);
  CHECK(r.j_size == 3);
  CHECK(r.trace == 3);
  CHECK(r.idempotent);
  CHECK(r.image_family_independent);
  CHECK(r.kernel_family_rank == 13);
  CHECK(r.ok);
}

TEST_CASE("monomial action is a representation")
{
  auto d4 = group("D(4)");
  auto m = MonomialModule::tensor_power(d4, 1);
  CHECK(m.is_representation());
  for (std::size_t g = 0; g < d4->order(); ++g)
    for (std::size_t h = 0; h < d4->order(); ++h)
      CHECK(m.action_matrix(g) * m.action_matrix(h) ==
            m.action_matrix(d4->product_index(g, h)));
}

TEST_CASE("explicit cocycle families")
{
  auto s2 = group("S(2)");
  // S(2) on [0,1]^2: elements e, (1 2); gamma exponents mod 2 for each (g, i)
  auto good = MonomialModule::with_gamma(s2, 1, 2, {0, 0, 0, 0, 1, 0, 0, 1});
  CHECK(good.satisfies_cocycle_law());
  CHECK(good.is_representation());
  CHECK_FALSE(good.in_index_set(0, unit_character(s2)));
  CHECK(good.in_index_set(0, sign_character(s2)));

  CHECK_THROWS_AS(MonomialModule::with_gamma(s2, 1, 2, {1, 0, 0, 0, 0, 0, 0, 0}), InvalidInput);
  CHECK_THROWS_AS(MonomialModule::with_gamma(s2, 1, 2, {0, 0}), InvalidInput);
}

TEST_CASE("transported families")
{
  auto s2 = group("S(2)");
  // orbits (0,0), (0,1), (1,1); sign on the diagonal stabilizers
  GammaChoice choice{{1, 0, 1}, {0, 1, 3, 2}};
  auto m = transported_gamma_family(s2, 1, choice);
  CHECK(m.satisfies_cocycle_law());
  CHECK(m.is_representation());
  auto one = unit_character(s2);
  CHECK_FALSE(m.in_index_set(0, one));
  CHECK(m.in_index_set(1, one));
  CHECK(m.in_index_set(2, one));
  CHECK_FALSE(m.in_index_set(3, one));
  CHECK(verify_basis_prop(m, one).ok);
  CHECK(verify_basis_prop(m, one).j_size == 1);
  CHECK(verify_basis_prop(m, sign_character(s2)).j_size == 3);

  CHECK_THROWS_AS(transported_gamma_family(s2, 1, GammaChoice{{0, 0}, {0, 0, 0, 0}}), InvalidInput);
}

TEST_CASE("random cocycle families satisfy the basis statements")
{
  for (auto text : {"S(2)", "C(3)", "S(3)", "C(4)", "D(4)", "wreath(S(2),S(2))"})
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      auto g = group(text);
      for (std::uint32_t n = 0; n <= 1; ++n) {
        auto m = random_gamma_family(g, n, seed);
        CAPTURE(text);
        CAPTURE(seed);
        CAPTURE(n);
        CHECK(m.satisfies_cocycle_law());
        CHECK(m.is_representation());
        for (auto const &alpha : enumerate_linear_characters(g)) {
          auto r = verify_basis_prop(m, alpha);
          CHECK(r.ok);
          CHECK(r.rank + r.kernel_family_rank == r.dim);
        }
      }
    }
}

TEST_CASE("dimension cap")
{
  Caps caps;
  caps.matrix_dim = 8;
  CHECK_THROWS_AS(MonomialModule::tensor_power(group("S(2)"), 3, caps), CapExceeded);
}

TEST_CASE("report JSON")
{
  auto s3 = group("S(3)");
  auto r = verify_basis_prop(MonomialModule::tensor_power(s3, 2), sign_character(s3));
  auto j = basis_report_json(r, "S(3)", "sign", 2, 3);
  CHECK(j["group"] == "S(3)");
  CHECK(j["dim"] == 27);
  CHECK(j["rank"] == 1);
  CHECK(j["J_size"] == 1);
  CHECK(j["ok"] == true);
  CHECK(j.contains("trace"));
  CHECK(j["d"] == 3);
}
