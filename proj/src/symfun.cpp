#include "polya/symfun.hpp"

#include <algorithm>
#include <numeric>

#include "polya/error.hpp"

namespace polya {

bool GradedLexDescending::operator()(Exponents const &a, Exponents const &b) const
{
  auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db)
    return da > db;
  std::size_t const len = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < len; ++i) {
    std::uint32_t x = i < a.size() ? a[i] : 0;
    std::uint32_t y = i < b.size() ? b[i] : 0;
    if (x != y)
      return x > y;
  }
  return false;
}

namespace {

void trim(Exponents &e)
{
  while (!e.empty() && e.back() == 0)
    e.pop_back();
}

void accumulate_term(TermMap &terms, Exponents exps, Cyclotomic const &coeff)
{
  if (coeff.is_zero())
    return;
  auto [it, inserted] = terms.try_emplace(std::move(exps), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero())
      terms.erase(it);
  }
}

std::string render(TermMap const &terms, char var, std::size_t index_base)
{
  if (terms.empty())
    return "0";

  std::string out;
  bool first = true;
  for (auto const &[exps, coeff] : terms) {
    std::string mono;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0)
        continue;
      if (!mono.empty())
        mono += '*';
      mono += var + std::to_string(i + index_base);
      if (exps[i] > 1)
        mono += "^" + std::to_string(exps[i]);
    }

    std::string body;
    bool negative = false;
    if (coeff.is_rational()) {
      Rational a = coeff.rational();
      if (a < 0) {
        negative = true;
        a = -a;
      }
      if (mono.empty())
        body = a.get_str();
      else if (a == 1)
        body = mono;
      else if (a.get_den() == 1)
        body = a.get_str() + "*" + mono;
      else
        body = "(" + a.get_str() + ")*" + mono;
    } else {
      body = coeff.to_string();
      if (!mono.empty())
        body += "*" + mono;
    }

    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    out += body;
    first = false;
  }
  return out;
}

nlohmann::json rational_json(Rational const &q)
{
  return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

nlohmann::json terms_json(TermMap const &terms)
{
  auto arr = nlohmann::json::array();
  for (auto const &[exps, coeff] : terms)
    arr.push_back({{"exponents", exps}, {"coeff", coeff_to_json(coeff)}});
  return arr;
}

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap)
{
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > cap)
      return cap + 1;
  }
  return r;
}

} // namespace

nlohmann::json coeff_to_json(Cyclotomic const &c)
{
  if (c.is_rational())
    return rational_json(c.rational());
  auto basis = nlohmann::json::array();
  for (auto const &q : c.coeffs())
    basis.push_back(rational_json(q));
  return {{"conductor", c.conductor()}, {"basis", basis}};
}

// ---------------------------------------------------------------------------

PowerSumPoly PowerSumPoly::one()
{
  PowerSumPoly p(0);
  p.add_term({}, Cyclotomic(1));
  return p;
}

PowerSumPoly PowerSumPoly::power_sum(std::uint32_t s)
{
  if (s == 0)
    throw InvalidInput("power sums are indexed from 1");
  PowerSumPoly p(s);
  Exponents e(s, 0);
  e[s - 1] = 1;
  p.add_term(std::move(e), Cyclotomic(1));
  return p;
}

void PowerSumPoly::add_term(Exponents exps, Cyclotomic const &coeff)
{
  trim(exps);
  std::uint64_t w = 0;
  for (std::size_t s = 0; s < exps.size(); ++s)
    w += std::uint64_t(s + 1) * exps[s];
  if (w != weight_)
    throw InvalidInput("term of weight " + std::to_string(w) +
                       " added to isobaric polynomial of weight " +
                       std::to_string(weight_));
  accumulate_term(terms_, std::move(exps), coeff);
}

Cyclotomic PowerSumPoly::coeff(Exponents exps) const
{
  trim(exps);
  auto it = terms_.find(exps);
  return it == terms_.end() ? Cyclotomic() : it->second;
}

PowerSumPoly PowerSumPoly::dilate(std::uint32_t s) const
{
  PowerSumPoly out(weight_ * s);
  for (auto const &[exps, coeff] : terms_) {
    Exponents e(exps.size() * s, 0);
    for (std::size_t k = 0; k < exps.size(); ++k)
      e[(k + 1) * s - 1] = exps[k];
    out.add_term(std::move(e), coeff);
  }
  return out;
}

std::string PowerSumPoly::to_string() const
{
  return render(terms_, 'p', 1);
}

nlohmann::json PowerSumPoly::to_json() const
{
  return {{"weight", weight_}, {"terms", terms_json(terms_)}};
}

// ---------------------------------------------------------------------------

void MonomialPoly::add_term(Exponents exps, Cyclotomic const &coeff)
{
  if (exps.size() != nvars_)
    throw InvalidInput("monomial has " + std::to_string(exps.size()) +
                       " exponents, polynomial has " + std::to_string(nvars_) +
                       " variables");
  accumulate_term(terms_, std::move(exps), coeff);
}

Cyclotomic MonomialPoly::coeff(Exponents exps) const
{
  auto it = terms_.find(exps);
  return it == terms_.end() ? Cyclotomic() : it->second;
}

bool MonomialPoly::has_nonnegative_integer_coeffs() const
{
  return std::all_of(terms_.begin(), terms_.end(), [](auto const &t) {
    return t.second.is_rational() && t.second.rational() > 0 &&
           t.second.rational().get_den() == 1;
  });
}

Cyclotomic MonomialPoly::evaluate(std::span<Rational const> values) const
{
  if (values.size() != nvars_)
    throw InvalidInput("evaluate: expected " + std::to_string(nvars_) + " values");
  Cyclotomic total;
  for (auto const &[exps, coeff] : terms_) {
    Rational m = 1;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (std::uint32_t k = 0; k < exps[i]; ++k)
        m *= values[i];
    Cyclotomic term = coeff;
    term *= m;
    total += term;
  }
  return total;
}

std::string MonomialPoly::to_string() const
{
  return render(terms_, 'x', 0);
}

nlohmann::json MonomialPoly::to_json() const
{
  return {{"nvars", nvars_}, {"terms", terms_json(terms_)}};
}

// ---------------------------------------------------------------------------

PowerSumPoly cycle_index(LinearCharacter const &chi)
{
  auto const &g = chi.group();
  std::uint32_t const m = chi.modulus();

  // Per cycle type, count elements by character exponent; the cyclotomic sum
  // is formed once per type.
  std::map<Exponents, std::vector<std::uint64_t>> counts;
  for (std::size_t i = 0; i < g.order(); ++i) {
    auto type = cycle_type(g.element(i));
    trim(type);
    auto &bucket = counts[type];
    if (bucket.empty())
      bucket.assign(m, 0);
    ++bucket[chi.exponent(i)];
  }

  PowerSumPoly z(static_cast<std::uint32_t>(g.degree()));
  Rational const scale(1, g.order());
  for (auto const &[type, bucket] : counts) {
    std::vector<Rational> c(m);
    for (std::uint32_t k = 0; k < m; ++k)
      c[k] = Rational(bucket[k]) * scale;
    z.add_term(type, Cyclotomic::from_coeffs(m, std::move(c)));
  }
  return z;
}

PowerSumPoly cycle_index(PermGroup const &g, LinearCharacter const &chi)
{
  if (&g != &chi.group() && g.elements() != chi.group().elements())
    throw InvalidInput("cycle_index: character is defined on " + chi.group().name() +
                       ", not on " + g.name());
  return cycle_index(chi);
}

MonomialPoly specialize(PowerSumPoly const &z, std::uint32_t n, Caps const &caps)
{
  std::uint32_t const nvars = n + 1;
  std::uint32_t const d = z.weight();

  auto per_term = binomial_capped(std::uint64_t(n) + d, d, caps.term_estimate);
  if (per_term > caps.term_estimate ||
      per_term * z.terms().size() > caps.term_estimate)
    throw CapExceeded("specialize: estimated term count exceeds cap of " +
                      std::to_string(caps.term_estimate));

  using IntPoly = std::map<Exponents, Integer>;

  auto multiply = [&](IntPoly const &a, IntPoly const &b) {
    IntPoly out;
    for (auto const &[ea, ca] : a)
      for (auto const &[eb, cb] : b) {
        Exponents e(nvars);
        for (std::uint32_t i = 0; i < nvars; ++i)
          e[i] = ea[i] + eb[i];
        out[e] += ca * cb;
      }
    return out;
  };

  std::vector<IntPoly> psums(d + 1);
  for (std::uint32_t s = 1; s <= d; ++s)
    for (std::uint32_t i = 0; i < nvars; ++i) {
      Exponents e(nvars, 0);
      e[i] = s;
      psums[s][e] = 1;
    }

  MonomialPoly out(nvars);
  for (auto const &[exps, coeff] : z.terms()) {
    IntPoly prod{{Exponents(nvars, 0), Integer(1)}};
    for (std::size_t s = 1; s <= exps.size(); ++s)
      for (std::uint32_t k = 0; k < exps[s - 1]; ++k)
        prod = multiply(prod, psums[s]);
    for (auto const &[e, c] : prod) {
      Cyclotomic term = coeff;
      term *= Rational(c);
      out.add_term(e, term);
    }
  }
  return out;
}

PowerSumPoly psum_mul(PowerSumPoly const &a, PowerSumPoly const &b)
{
  PowerSumPoly out(a.weight() + b.weight());
  for (auto const &[ea, ca] : a.terms())
    for (auto const &[eb, cb] : b.terms()) {
      Exponents e(std::max(ea.size(), eb.size()), 0);
      for (std::size_t i = 0; i < ea.size(); ++i)
        e[i] += ea[i];
      for (std::size_t i = 0; i < eb.size(); ++i)
        e[i] += eb[i];
      out.add_term(std::move(e), ca * cb);
    }
  return out;
}

PowerSumPoly psum_add(PowerSumPoly const &a, PowerSumPoly const &b)
{
  if (a.weight() != b.weight())
    throw InvalidInput("psum_add: weight mismatch (" + std::to_string(a.weight()) +
                       " vs " + std::to_string(b.weight()) + ")");
  PowerSumPoly out = a;
  for (auto const &[e, c] : b.terms())
    out.add_term(e, c);
  return out;
}

PowerSumPoly psum_sub(PowerSumPoly const &a, PowerSumPoly const &b)
{
  if (a.weight() != b.weight())
    throw InvalidInput("psum_sub: weight mismatch (" + std::to_string(a.weight()) +
                       " vs " + std::to_string(b.weight()) + ")");
  PowerSumPoly out = a;
  for (auto const &[e, c] : b.terms())
    out.add_term(e, -c);
  return out;
}

PowerSumPoly plethysm_insert(PowerSumPoly const &z_chi, PowerSumPoly const &z_theta)
{
  std::uint32_t const d = z_chi.weight();
  std::uint32_t const r = z_theta.weight();

  // powers[s][k] = P_s^k, filled on demand
  std::vector<std::vector<PowerSumPoly>> powers(d + 1);
  auto power = [&](std::uint32_t s, std::uint32_t k) -> PowerSumPoly const & {
    auto &row = powers[s];
    if (row.empty())
      row.push_back(PowerSumPoly::one());
    while (row.size() <= k)
      row.push_back(psum_mul(row.back(), z_theta.dilate(s)));
    return row[k];
  };

  PowerSumPoly out(d * r);
  for (auto const &[exps, coeff] : z_chi.terms()) {
    PowerSumPoly term = PowerSumPoly::one();
    for (std::size_t s = 1; s <= exps.size(); ++s)
      if (exps[s - 1] != 0)
        term = psum_mul(term, power(static_cast<std::uint32_t>(s), exps[s - 1]));
    for (auto const &[e, c] : term.terms())
      out.add_term(e, coeff * c);
  }
  return out;
}

MonomialPoly elementary_symmetric(std::uint32_t d, std::uint32_t n)
{
  std::uint32_t const nvars = n + 1;
  MonomialPoly out(nvars);
  if (d > nvars)
    return out;
  // walk all d-subsets of {0..n} via a selection mask
  std::vector<bool> pick(nvars, false);
  std::fill(pick.begin(), pick.begin() + d, true);
  do {
    Exponents e(nvars, 0);
    for (std::uint32_t i = 0; i < nvars; ++i)
      e[i] = pick[i] ? 1 : 0;
    out.add_term(std::move(e), Cyclotomic(1));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

bool is_symmetric(MonomialPoly const &p)
{
  for (std::uint32_t i = 0; i + 1 < p.nvars(); ++i) {
    MonomialPoly swapped(p.nvars());
    for (auto const &[e, c] : p.terms()) {
      auto f = e;
      std::swap(f[i], f[i + 1]);
      swapped.add_term(std::move(f), c);
    }
    if (!(swapped == p))
      return false;
  }
  return true;
}

} // namespace polya
