#include "polya/semisym.hpp"

#include <numeric>
#include <random>

#include "polya/error.hpp"

namespace polya {

Cyclotomic ExactMatrix::at(std::uint32_t r, std::uint32_t c) const
{
  auto it = rows_[r].find(c);
  return it == rows_[r].end() ? Cyclotomic() : it->second;
}

void ExactMatrix::add(std::uint32_t r, std::uint32_t c, Cyclotomic const &v)
{
  if (v.is_zero())
    return;
  auto [it, inserted] = rows_[r].try_emplace(c, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero())
      rows_[r].erase(it);
  }
}

std::vector<SparseVector> ExactMatrix::columns() const
{
  std::vector<SparseVector> cols(rows_.size());
  for (std::uint32_t r = 0; r < rows_.size(); ++r)
    for (auto const &[c, v] : rows_[r])
      cols[c].emplace(r, v);
  return cols;
}

Cyclotomic ExactMatrix::trace() const
{
  Cyclotomic t;
  for (std::uint32_t r = 0; r < rows_.size(); ++r)
    t += at(r, r);
  return t;
}

ExactMatrix operator*(ExactMatrix const &a, ExactMatrix const &b)
{
  if (a.dim() != b.dim())
    throw InvalidInput("matrix product: dimension mismatch");
  ExactMatrix out(a.dim());
  for (std::uint32_t r = 0; r < a.dim(); ++r)
    for (auto const &[k, x] : a.rows_[r])
      for (auto const &[c, y] : b.rows_[k])
        out.add(r, c, x * y);
  return out;
}

std::size_t rank_of(std::vector<SparseVector> vectors)
{
  std::map<std::uint32_t, SparseVector> pivots;  // leading column -> normalized row
  for (auto &v : vectors) {
    while (!v.empty()) {
      auto const lead = v.begin()->first;
      auto p = pivots.find(lead);
      if (p == pivots.end())
        break;
      Cyclotomic const factor = v.begin()->second;
      for (auto const &[c, x] : p->second) {
        auto [it, inserted] = v.try_emplace(c, -(factor * x));
        if (!inserted) {
          it->second -= factor * x;
          if (it->second.is_zero())
            v.erase(it);
        }
      }
    }
    if (v.empty())
      continue;
    Cyclotomic const inv = v.begin()->second.inverse();
    for (auto &[c, x] : v)
      x *= inv;
    auto const lead = v.begin()->first;
    pivots.emplace(lead, std::move(v));
  }
  return pivots.size();
}

// ---------------------------------------------------------------------------

MonomialModule::MonomialModule(GroupPtr w, std::uint32_t n, Caps const &caps)
  : group_(std::move(w)), cube_(n, group_->degree())
{
  if (cube_.size() > caps.matrix_dim)
    throw CapExceeded("monomial module: dimension " + std::to_string(cube_.size()) +
                      " exceeds cap of " + std::to_string(caps.matrix_dim));
  auto const dim = this->dim();
  action_.resize(group_->order() * dim);
  for (std::size_t g = 0; g < group_->order(); ++g)
    for (std::uint32_t i = 0; i < dim; ++i)
      action_[g * dim + i] = static_cast<std::uint32_t>(
        cube_.encode(act(group_->element(g), cube_.decode(i))));
  gamma_.assign(group_->order() * dim, 0);
}

MonomialModule MonomialModule::tensor_power(GroupPtr w, std::uint32_t n, Caps const &caps)
{
  return MonomialModule(std::move(w), n, caps);
}

MonomialModule MonomialModule::with_gamma(GroupPtr w, std::uint32_t n,
                                          std::uint32_t modulus,
                                          std::vector<std::uint32_t> gamma,
                                          Caps const &caps)
{
  MonomialModule m(std::move(w), n, caps);
  if (modulus == 0)
    throw InvalidInput("gamma modulus must be positive");
  if (gamma.size() != m.gamma_.size())
    throw InvalidInput("gamma table has " + std::to_string(gamma.size()) +
                       " entries, expected |G| * dim = " + std::to_string(m.gamma_.size()));
  for (auto &e : gamma)
    e %= modulus;
  m.modulus_ = modulus;
  m.gamma_ = std::move(gamma);
  if (!m.satisfies_cocycle_law())
    throw InvalidInput("gamma family violates the cocycle law");
  return m;
}

Cyclotomic MonomialModule::gamma(std::size_t g, std::uint32_t i) const
{
  return Cyclotomic::root_of_unity(modulus_, gamma_exponent(g, i));
}

bool MonomialModule::satisfies_cocycle_law() const
{
  auto const &grp = *group_;
  std::size_t const order = grp.order();
  for (std::uint32_t i = 0; i < dim(); ++i)
    if (gamma_exponent(0, i) != 0)
      return false;
  for (std::size_t g = 0; g < order; ++g) {
    for (std::size_t h = 0; h < order; ++h) {
      auto const gh = grp.product_index(g, h);
      for (std::uint32_t i = 0; i < dim(); ++i) {
        auto const lhs = gamma_exponent(gh, i);
        auto const rhs = (gamma_exponent(g, image(h, i)) + gamma_exponent(h, i)) % modulus_;
        if (lhs != rhs)
          return false;
      }
    }
  }
  return true;
}

ExactMatrix MonomialModule::action_matrix(std::size_t g) const
{
  ExactMatrix m(dim());
  for (std::uint32_t i = 0; i < dim(); ++i)
    m.add(image(g, i), i, gamma(g, i));
  return m;
}

bool MonomialModule::is_representation() const
{
  auto const &grp = *group_;
  std::vector<std::size_t> gens;
  for (auto const &x : grp.generators())
    gens.push_back(grp.index_of(x));
  for (auto g : gens)
    for (auto h : gens)
      if (!(action_matrix(g) * action_matrix(h) == action_matrix(grp.product_index(g, h))))
        return false;
  return true;
}

bool MonomialModule::in_index_set(std::uint32_t i, LinearCharacter const &alpha) const
{
  std::uint32_t const l = std::lcm(alpha.modulus(), modulus_);
  for (std::size_t g = 0; g < group_->order(); ++g) {
    if (image(g, i) != i)
      continue;
    auto const e = std::uint64_t(alpha.exponent(g)) * (l / alpha.modulus()) +
                   std::uint64_t(gamma_exponent(g, i)) * (l / modulus_);
    if (e % l != 0)
      return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

MonomialModule transported_gamma_family(GroupPtr w, std::uint32_t n,
                                        GammaChoice const &choice, Caps const &caps)
{
  auto const &grp = *w;
  auto records = enumerate_orbits(grp, n, caps);
  auto base = MonomialModule::tensor_power(w, n, caps);
  std::uint32_t const dim = base.dim();

  if (choice.stabilizer_character.size() != records.size())
    throw InvalidInput("gamma choice lists " + std::to_string(choice.stabilizer_character.size()) +
                       " stabilizer characters for " + std::to_string(records.size()) +
                       " orbits");
  if (choice.point_phase.size() != dim)
    throw InvalidInput("gamma choice lists " + std::to_string(choice.point_phase.size()) +
                       " point phases for dimension " + std::to_string(dim));

  struct OrbitData {
    std::shared_ptr<PermGroup const> stabilizer;
    LinearCharacter psi;
  };
  std::vector<OrbitData> orbits;
  std::vector<std::size_t> orbit_of(dim);
  std::vector<std::size_t> transversal(dim);  // t_j: element index with t_j rep = j
  std::vector<bool> seen(dim, false);

  std::uint32_t modulus = 4;
  for (std::size_t o = 0; o < records.size(); ++o) {
    auto const rep = static_cast<std::uint32_t>(base.cube().encode(records[o].rep));
    auto stab = std::make_shared<PermGroup const>(
      subgroup_where(grp, [&](std::size_t g) { return base.image(g, rep) == rep; }));
    auto chars = enumerate_linear_characters(stab);
    auto const k = choice.stabilizer_character[o];
    if (k >= chars.size())
      throw InvalidInput("stabilizer of orbit " + std::to_string(o) + " has only " +
                         std::to_string(chars.size()) + " characters");
    modulus = std::lcm(modulus, chars[k].modulus());
    orbits.push_back({stab, chars[k]});
    for (std::size_t g = 0; g < grp.order(); ++g) {
      auto const j = base.image(g, rep);
      if (!seen[j]) {
        seen[j] = true;
        orbit_of[j] = o;
        transversal[j] = g;
      }
    }
  }

  std::vector<std::uint32_t> gamma(grp.order() * dim);
  for (std::size_t g = 0; g < grp.order(); ++g) {
    for (std::uint32_t i = 0; i < dim; ++i) {
      auto const j = base.image(g, i);
      auto const &od = orbits[orbit_of[i]];
      auto const h = compose(compose(grp.element(transversal[j]).inverse(), grp.element(g)),
                             grp.element(transversal[i]));
      auto const hi = od.stabilizer->index_of(h);
      if (hi == PermGroup::npos)
        throw CheckFailed("transported gamma: element outside the stabilizer");
      auto phase = [&](std::uint32_t p) {
        return transversal[p] == 0 ? 0u : choice.point_phase[p] % 4;
      };
      std::int64_t e = (std::int64_t(phase(j)) - phase(i)) * (modulus / 4) +
                       std::int64_t(od.psi.exponent(hi)) * (modulus / od.psi.modulus());
      gamma[g * dim + i] = static_cast<std::uint32_t>(((e % modulus) + modulus) % modulus);
    }
  }
  return MonomialModule::with_gamma(std::move(w), n, modulus, std::move(gamma), caps);
}

MonomialModule random_gamma_family(GroupPtr w, std::uint32_t n, std::uint64_t seed,
                                   Caps const &caps)
{
  std::mt19937_64 rng(seed);
  auto records = enumerate_orbits(*w, n, caps);
  Hypercube cube(n, w->degree());

  GammaChoice choice;
  for (auto const &rec : records) {
    auto stab = std::make_shared<PermGroup const>(subgroup_where(
      *w, [&](std::size_t g) { return act(w->element(g), rec.rep) == rec.rep; }));
    auto const count = abelianization(*stab).order();
    choice.stabilizer_character.push_back(
      std::uniform_int_distribution<std::size_t>(0, count - 1)(rng));
  }
  std::uniform_int_distribution<std::uint32_t> phase(0, 3);
  for (std::uint64_t i = 0; i < cube.size(); ++i)
    choice.point_phase.push_back(phase(rng));
  return transported_gamma_family(std::move(w), n, choice, caps);
}

// ---------------------------------------------------------------------------

namespace {

void require_same_group(MonomialModule const &m, LinearCharacter const &alpha)
{
  if (&m.group() != &alpha.group() && m.group().elements() != alpha.group().elements())
    throw InvalidInput("character is defined on " + alpha.group().name() +
                       ", module group is " + m.group().name());
}

Cyclotomic alpha_gamma(MonomialModule const &m, LinearCharacter const &alpha,
                       std::size_t g, std::uint32_t i)
{
  std::uint32_t const l = std::lcm(alpha.modulus(), m.modulus());
  auto const e = std::uint64_t(alpha.exponent(g)) * (l / alpha.modulus()) +
                 std::uint64_t(m.gamma_exponent(g, i)) * (l / m.modulus());
  return Cyclotomic::root_of_unity(l, static_cast<std::int64_t>(e % l));
}

SparseVector scaled(SparseVector v, Cyclotomic const &c)
{
  for (auto &[k, x] : v)
    x *= c;
  return v;
}

} // namespace

ExactMatrix build_projector(MonomialModule const &m, LinearCharacter const &alpha)
{
  require_same_group(m, alpha);
  auto const &grp = m.group();
  std::uint32_t const l = std::lcm(alpha.modulus(), m.modulus());
  Rational const scale(1, grp.order());

  ExactMatrix a(m.dim());
  for (std::uint32_t i = 0; i < m.dim(); ++i) {
    // count root exponents per target row before forming field elements
    std::map<std::uint32_t, std::vector<std::uint64_t>> counts;
    for (std::size_t g = 0; g < grp.order(); ++g) {
      auto const e = (std::uint64_t(alpha.exponent(g)) * (l / alpha.modulus()) +
                      std::uint64_t(m.gamma_exponent(g, i)) * (l / m.modulus())) % l;
      auto &bucket = counts[m.image(g, i)];
      if (bucket.empty())
        bucket.assign(l, 0);
      ++bucket[e];
    }
    for (auto const &[row, bucket] : counts) {
      std::vector<Rational> c(l);
      for (std::uint32_t k = 0; k < l; ++k)
        c[k] = Rational(bucket[k]) * scale;
      a.add(row, i, Cyclotomic::from_coeffs(l, std::move(c)));
    }
  }
  return a;
}

AnnihilationReport check_annihilation(MonomialModule const &m, LinearCharacter const &alpha)
{
  return check_annihilation(m, alpha, build_projector(m, alpha));
}

AnnihilationReport check_annihilation(MonomialModule const &m, LinearCharacter const &alpha,
                                      ExactMatrix const &projector)
{
  require_same_group(m, alpha);
  auto const cols = projector.columns();
  auto const &grp = m.group();

  AnnihilationReport report;
  report.excluded_annihilated = true;
  for (std::uint32_t i = 0; i < m.dim(); ++i) {
    if (m.in_index_set(i, alpha))
      continue;
    ++report.excluded;
    if (!cols[i].empty())
      report.excluded_annihilated = false;
  }

  // a(alpha^{-1}(g) v_i) == a(g v_i) = gamma_i(g) a(v_{gi})
  report.differences_annihilated = true;
  for (auto const &x : grp.generators()) {
    auto const g = grp.index_of(x);
    auto const alpha_inv = Cyclotomic::root_of_unity(
      alpha.modulus(), -static_cast<std::int64_t>(alpha.exponent(g)));
    for (std::uint32_t i = 0; i < m.dim(); ++i)
      if (scaled(cols[i], alpha_inv) != scaled(cols[m.image(g, i)], m.gamma(g, i)))
        report.differences_annihilated = false;
  }
  return report;
}

BasisReport verify_basis_prop(MonomialModule const &m, LinearCharacter const &alpha)
{
  require_same_group(m, alpha);
  auto const &grp = m.group();
  auto const a = build_projector(m, alpha);
  auto const cols = a.columns();

  BasisReport r;
  r.dim = m.dim();
  r.idempotent = a * a == a;

  auto const t = a.trace();
  if (!t.is_rational())
    throw CheckFailed("projector trace is not rational: " + t.to_string());
  r.trace = t.rational();

  std::vector<SparseVector> rows;
  for (std::uint32_t i = 0; i < a.dim(); ++i)
    rows.push_back(a.row(i));
  r.rank = rank_of(std::move(rows));

  // representatives I* from orbit enumeration, split into J and J_0
  auto const records = enumerate_orbits(grp, m.cube().n(),
                                        Caps{.orbit_work = ~std::uint64_t{0}});
  std::vector<std::uint32_t> j_set, j0_set;
  for (auto const &rec : records) {
    auto const i = static_cast<std::uint32_t>(m.cube().encode(rec.rep));
    (m.in_index_set(i, alpha) ? j_set : j0_set).push_back(i);
  }
  r.j_size = j_set.size();

  std::vector<SparseVector> image_family;
  for (auto j : j_set)
    image_family.push_back(cols[j]);
  r.image_family_independent = rank_of(std::move(image_family)) == j_set.size();

  // v_i - alpha(g) gamma_i(g) v_{gi} over a transversal, plus v_i for i in J_0
  std::vector<SparseVector> kernel_family;
  r.kernel_family_annihilated = true;
  for (auto const &rec : records) {
    auto const i = static_cast<std::uint32_t>(m.cube().encode(rec.rep));
    std::vector<bool> reached(m.dim(), false);
    reached[i] = true;
    for (std::size_t g = 0; g < grp.order(); ++g) {
      auto const gi = m.image(g, i);
      if (reached[gi])
        continue;
      reached[gi] = true;
      auto const c = alpha_gamma(m, alpha, g, i);
      kernel_family.push_back({{i, Cyclotomic(1)}, {gi, -c}});
      if (cols[i] != scaled(cols[gi], c))
        r.kernel_family_annihilated = false;
    }
  }
  for (auto i : j0_set) {
    kernel_family.push_back({{i, Cyclotomic(1)}});
    if (!cols[i].empty())
      r.kernel_family_annihilated = false;
  }
  r.kernel_family_size = kernel_family.size();
  r.kernel_family_rank = rank_of(std::move(kernel_family));

  r.annihilation_ok = check_annihilation(m, alpha, a).ok();

  r.ok = r.idempotent && r.trace == Rational(r.rank) && r.rank == r.j_size &&
         r.image_family_independent && r.kernel_family_annihilated &&
         r.kernel_family_size == r.dim - r.j_size &&
         r.kernel_family_rank == r.kernel_family_size && r.annihilation_ok;
  return r;
}

nlohmann::json basis_report_json(BasisReport const &r, std::string const &group,
                                 std::string const &character, std::uint32_t n,
                                 std::size_t d)
{
  return {{"group", group},    {"character", character}, {"n", n},
          {"d", d},            {"dim", r.dim},           {"trace", r.trace.get_str()},
          {"rank", r.rank},    {"J_size", r.j_size},     {"ok", r.ok}};
}

} // namespace polya
