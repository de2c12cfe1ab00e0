#include "polya/character.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "polya/error.hpp"

namespace polya {

LinearCharacter::LinearCharacter(GroupPtr group, std::uint32_t modulus,
                                 std::vector<std::uint32_t> exponents,
                                 std::string name)
  : group_(std::move(group)), modulus_(modulus), exponents_(std::move(exponents)),
    name_(std::move(name))
{
  if (modulus_ == 0)
    throw InvalidInput("character modulus must be positive");
  if (exponents_.size() != group_->order())
    throw InvalidInput("character table has " + std::to_string(exponents_.size()) +
                       " entries, group has order " + std::to_string(group_->order()));
  for (auto &e : exponents_)
    e %= modulus_;
}

Cyclotomic LinearCharacter::value(std::size_t element) const
{
  return Cyclotomic::root_of_unity(modulus_, exponents_[element]);
}

Cyclotomic LinearCharacter::value_of(Permutation const &p) const
{
  auto i = group_->index_of(p);
  if (i == PermGroup::npos)
    throw InvalidInput("character evaluated outside its group: " + p.to_cycle_string());
  return value(i);
}

bool LinearCharacter::is_unit() const
{
  return std::all_of(exponents_.begin(), exponents_.end(),
                     [](std::uint32_t e) { return e == 0; });
}

bool LinearCharacter::is_homomorphism() const
{
  if (exponents_[0] != 0)
    return false;
  auto const &g = *group_;
  for (auto const &gen : g.generators()) {
    auto gi = g.index_of(gen);
    for (std::size_t h = 0; h < g.order(); ++h) {
      auto gh = g.product_index(gi, h);
      if (exponents_[gh] != (exponents_[gi] + exponents_[h]) % modulus_)
        return false;
    }
  }
  return true;
}

bool LinearCharacter::is_homomorphism_exhaustive() const
{
  auto const &g = *group_;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      if (exponents_[g.product_index(a, b)] != (exponents_[a] + exponents_[b]) % modulus_)
        return false;
  return true;
}

std::uint32_t LinearCharacter::image_order() const
{
  std::uint32_t gcd = modulus_;
  for (auto e : exponents_)
    gcd = std::gcd(gcd, e);
  return modulus_ / gcd;
}

bool LinearCharacter::same_values(LinearCharacter const &other) const
{
  if (group_ != other.group_ && !group_->same_elements(*other.group_))
    return false;
  auto const &g = *group_;
  for (std::size_t i = 0; i < g.order(); ++i) {
    auto j = other.group_->index_of(g.element(i));
    // e/m == e'/m' as fractions of a full turn
    if (std::uint64_t(exponents_[i]) * other.modulus_ !=
        std::uint64_t(other.exponents_[j]) * modulus_)
      return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

// Finite abelian quotient G/N with cosets as elements.
class Quotient {
public:
  Quotient(PermGroup const &g, PermGroup const &n) : g_(g)
  {
    coset_of_.assign(g.order(), npos);
    for (std::size_t x = 0; x < g.order(); ++x) {
      if (coset_of_[x] != npos)
        continue;
      auto id = reps_.size();
      reps_.push_back(x);
      for (auto const &h : n.elements())
        coset_of_[g.index_of(compose(g.element(x), h))] = id;
    }
  }

  std::size_t size() const { return reps_.size(); }
  std::vector<std::size_t> const &coset_of() const { return coset_of_; }

  std::size_t mul(std::size_t a, std::size_t b) const
  {
    return coset_of_[g_.product_index(reps_[a], reps_[b])];
  }

  std::size_t power(std::size_t a, std::uint64_t k) const
  {
    std::size_t out = 0;
    for (std::uint64_t i = 0; i < k; ++i)
      out = mul(out, a);
    return out;
  }

  std::size_t inverse(std::size_t a) const
  {
    return coset_of_[g_.inverse_index(reps_[a])];
  }

  // Smallest k >= 1 with a^k in the subgroup given by membership flags.
  std::uint32_t order_mod(std::size_t a, std::vector<bool> const &sub) const
  {
    std::size_t x = a;
    std::uint32_t k = 1;
    while (!sub[x]) {
      x = mul(x, a);
      ++k;
    }
    return k;
  }

  std::vector<bool> span(std::vector<std::size_t> const &gens) const
  {
    std::vector<bool> in(size(), false);
    std::vector<std::size_t> elems{0};
    in[0] = true;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (auto gen : gens) {
        auto y = mul(elems[i], gen);
        if (!in[y]) {
          in[y] = true;
          elems.push_back(y);
        }
      }
    }
    return in;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
  PermGroup const &g_;
  std::vector<std::size_t> reps_;
  std::vector<std::size_t> coset_of_;
};

} // namespace

Abelianization abelianization(PermGroup const &g)
{
  Abelianization ab{derived_subgroup(g), {}, {}, {}};
  Quotient q(g, ab.derived);
  ab.coset_of = q.coset_of();

  // Greedy chain: r_i has maximal order modulo S_i = <r_0, ..., r_{i-1}>.
  std::vector<std::size_t> basis;
  std::vector<std::uint32_t> orders;
  std::vector<std::vector<bool>> chain{q.span({})};
  while (std::count(chain.back().begin(), chain.back().end(), true) <
         static_cast<std::ptrdiff_t>(q.size())) {
    std::size_t best = 0;
    std::uint32_t best_order = 0;
    for (std::size_t a = 0; a < q.size(); ++a) {
      auto o = q.order_mod(a, chain.back());
      if (o > best_order) {
        best = a;
        best_order = o;
      }
    }
    basis.push_back(best);
    orders.push_back(best_order);
    chain.push_back(q.span(basis));
  }

  // Lift the relative basis to an honest one, deepest level first: at level i
  // each later c_j satisfies c_j^{o_j} = r_i^k mod S_i with o_j | k.
  for (std::size_t i = basis.size(); i-- > 0;) {
    auto r_inv = q.inverse(basis[i]);
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      auto x = q.power(basis[j], orders[j]);
      std::uint32_t k = 0;
      while (!chain[i][x]) {
        x = q.mul(x, r_inv);
        if (++k > orders[i])
          throw CheckFailed("abelianization: lift outside the chain");
      }
      if (k % orders[j] != 0)
        throw CheckFailed("abelianization: basis lift not divisible");
      basis[j] = q.mul(basis[j], q.power(r_inv, k / orders[j]));
    }
  }

  // Coordinates of every coset; also proves the basis is independent.
  ab.basis_orders = orders;
  ab.coords.assign(q.size(), {});
  std::vector<std::uint32_t> digits(basis.size(), 0);
  std::size_t assigned = 0;
  for (;;) {
    std::size_t x = 0;
    for (std::size_t j = 0; j < basis.size(); ++j)
      x = q.mul(x, q.power(basis[j], digits[j]));
    if (!ab.coords[x].empty() || (basis.empty() && assigned > 0))
      throw CheckFailed("abelianization: basis is not independent");
    ab.coords[x] = digits;
    ++assigned;

    std::size_t j = 0;
    while (j < digits.size() && ++digits[j] == orders[j])
      digits[j++] = 0;
    if (j == digits.size())
      break;
  }
  if (assigned != q.size())
    throw CheckFailed("abelianization: basis does not span");
  return ab;
}

std::vector<LinearCharacter> enumerate_linear_characters(GroupPtr const &g)
{
  auto ab = abelianization(*g);
  std::uint32_t const m = ab.exponent();
  std::size_t const t = ab.basis_orders.size();

  std::vector<LinearCharacter> out;
  std::vector<std::uint32_t> digits(t, 0);
  for (std::size_t k = 0; k < ab.order(); ++k) {
    std::vector<std::uint32_t> exps(g->order());
    for (std::size_t x = 0; x < g->order(); ++x) {
      auto const &a = ab.coords[ab.coset_of[x]];
      std::uint64_t e = 0;
      for (std::size_t j = 0; j < t; ++j)
        e += std::uint64_t(digits[j]) * a[j] * (m / ab.basis_orders[j]);
      exps[x] = static_cast<std::uint32_t>(e % m);
    }
    out.emplace_back(g, m, std::move(exps), "index:" + std::to_string(k));
    if (!out.back().is_homomorphism())
      throw CheckFailed("enumerated character " + std::to_string(k) +
                        " is not a homomorphism");

    std::size_t j = 0;
    while (j < t && ++digits[j] == ab.basis_orders[j])
      digits[j++] = 0;
  }
  return out;
}

LinearCharacter unit_character(GroupPtr const &g)
{
  return LinearCharacter(g, 1, std::vector<std::uint32_t>(g->order(), 0), "unit");
}

LinearCharacter sign_character(GroupPtr const &g)
{
  std::vector<std::uint32_t> exps(g->order());
  for (std::size_t i = 0; i < g->order(); ++i) {
    auto type = cycle_type(g->element(i));
    std::size_t cycles = std::accumulate(type.begin(), type.end(), std::size_t{0});
    exps[i] = static_cast<std::uint32_t>((g->degree() - cycles) % 2);
  }
  return LinearCharacter(g, 2, std::move(exps), "sign");
}

PermGroup kernel(LinearCharacter const &chi)
{
  return subgroup_where(chi.group(),
                        [&](std::size_t i) { return chi.is_trivial_at(i); });
}

LinearCharacter product_character(LinearCharacter const &chi,
                                  LinearCharacter const &theta)
{
  auto const &w = chi.group();
  auto const &v = theta.group();
  std::size_t const d = w.degree(), r = v.degree();
  auto g = std::make_shared<PermGroup const>(direct_product_embed(w, v));

  std::uint32_t const m = std::lcm(chi.modulus(), theta.modulus());
  std::vector<std::uint32_t> exps(g->order());
  std::vector<Point> left(d), right(r);
  for (std::size_t i = 0; i < g->order(); ++i) {
    auto const &p = g->element(i);
    for (std::size_t s = 0; s < d; ++s) {
      if (p.image0(s) >= d)
        throw InvalidInput("product_character: element does not split");
      left[s] = p.image0(s) + 1;
    }
    for (std::size_t t = 0; t < r; ++t) {
      if (p.image0(d + t) < d)
        throw InvalidInput("product_character: element does not split");
      right[t] = static_cast<Point>(p.image0(d + t) - d + 1);
    }
    auto a = w.index_of(Permutation::from_images(left));
    auto b = v.index_of(Permutation::from_images(right));
    if (a == PermGroup::npos || b == PermGroup::npos)
      throw InvalidInput("product_character: component outside its factor");
    exps[i] = static_cast<std::uint32_t>(
      (std::uint64_t(chi.exponent(a)) * (m / chi.modulus()) +
       std::uint64_t(theta.exponent(b)) * (m / theta.modulus())) % m);
  }

  LinearCharacter out(g, m, std::move(exps),
                      "product(" + chi.name() + "," + theta.name() + ")");
  if (!out.is_homomorphism())
    throw CheckFailed("product_character: not a homomorphism");
  return out;
}

LinearCharacter wreath_character(LinearCharacter const &theta,
                                 LinearCharacter const &chi)
{
  auto const &v = theta.group();
  auto const &w = chi.group();
  auto g = std::make_shared<PermGroup const>(wreath_embed(v, w));

  std::uint32_t const m = std::lcm(chi.modulus(), theta.modulus());
  std::vector<std::uint32_t> exps(g->order());
  for (std::size_t i = 0; i < g->order(); ++i) {
    auto parts = decompose_wreath_element(g->element(i), v, w);
    std::uint64_t e = std::uint64_t(chi.exponent(w.index_of(parts.top))) *
                      (m / chi.modulus());
    for (auto const &tau : parts.blocks)
      e += std::uint64_t(theta.exponent(v.index_of(tau))) * (m / theta.modulus());
    exps[i] = static_cast<std::uint32_t>(e % m);
  }

  LinearCharacter out(g, m, std::move(exps),
                      "wreath(" + theta.name() + "," + chi.name() + ")");
  if (!out.is_homomorphism())
    throw CheckFailed("wreath_character: not a homomorphism");
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::uint64_t parse_uint(std::string_view s, std::string_view whole)
{
  if (s.empty() || !std::all_of(s.begin(), s.end(),
                                [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw InvalidInput("character selector \"" + std::string(whole) +
                       "\": expected a number, got \"" + std::string(s) + "\"");
  if (s.size() > 9)
    throw InvalidInput("character selector \"" + std::string(whole) + "\": number too large");
  return std::stoull(std::string(s));
}

std::string strip(std::string_view s)
{
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c)))
      out += c;
  return out;
}

// Splits "name[m]{body}" into its modulus (0 when absent) and body.
std::pair<std::uint64_t, std::string> bracketed(std::string const &s, std::size_t after,
                                                std::string_view whole)
{
  std::uint64_t m = 0;
  std::size_t pos = after;
  if (pos < s.size() && s[pos] == '[') {
    auto close = s.find(']', pos);
    if (close == std::string::npos)
      throw InvalidInput("character selector \"" + std::string(whole) + "\": missing ']'");
    m = parse_uint(std::string_view(s).substr(pos + 1, close - pos - 1), whole);
    if (m == 0)
      throw InvalidInput("character selector \"" + std::string(whole) + "\": modulus must be positive");
    pos = close + 1;
  }
  if (pos >= s.size() || s[pos] != '{' || s.back() != '}')
    throw InvalidInput("character selector \"" + std::string(whole) + "\": expected {...}");
  return {m, s.substr(pos + 1, s.size() - pos - 2)};
}

std::vector<std::string> split_commas(std::string const &body)
{
  std::vector<std::string> out;
  if (body.empty())
    return out;
  std::size_t start = 0;
  for (;;) {
    auto comma = body.find(',', start);
    out.push_back(body.substr(start, comma - start));
    if (comma == std::string::npos)
      break;
    start = comma + 1;
  }
  return out;
}

} // namespace

LinearCharacter parse_character(std::string_view text, GroupPtr const &g, bool validate)
{
  auto const s = strip(text);

  auto checked = [&](LinearCharacter chi) {
    if (validate && !chi.is_homomorphism())
      throw InvalidInput("character selector \"" + std::string(text) +
                         "\" does not define a homomorphism on " + g->name());
    return chi;
  };

  if (s == "unit")
    return unit_character(g);
  if (s == "sign")
    return sign_character(g);

  if (s.starts_with("index:")) {
    auto k = parse_uint(std::string_view(s).substr(6), text);
    auto all = enumerate_linear_characters(g);
    if (k >= all.size())
      throw InvalidInput("character index " + std::to_string(k) + " out of range: " +
                         g->name() + " has " + std::to_string(all.size()) +
                         " linear characters");
    return all[k];
  }

  if (s.starts_with("vals")) {
    auto [m, body] = bracketed(s, 4, text);
    if (m == 0)
      m = abelianization(*g).exponent();
    auto const &gens = g->generators();
    std::vector<std::uint64_t> gen_exp(gens.size(), 0);
    for (auto const &item : split_commas(body)) {
      auto colon = item.find(':');
      if (item.size() < 2 || item[0] != 'g' || colon == std::string::npos)
        throw InvalidInput("character selector \"" + std::string(text) +
                           "\": expected g<i>:<k>, got \"" + item + "\"");
      auto i = parse_uint(std::string_view(item).substr(1, colon - 1), text);
      if (i < 1 || i > gens.size())
        throw InvalidInput("character selector \"" + std::string(text) + "\": generator g" +
                           std::to_string(i) + " does not exist (" + g->name() + " has " +
                           std::to_string(gens.size()) + ")");
      gen_exp[i - 1] = parse_uint(std::string_view(item).substr(colon + 1), text) % m;
    }

    // Extend along the closure order; conflicts surface in the final check.
    std::vector<std::uint32_t> exps(g->order(), 0);
    std::vector<bool> set(g->order(), false);
    set[0] = true;
    std::vector<std::size_t> queue{0};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (std::size_t k = 0; k < gens.size(); ++k) {
        auto y = g->index_of(compose(gens[k], g->element(queue[q])));
        if (set[y])
          continue;
        set[y] = true;
        exps[y] = static_cast<std::uint32_t>((gen_exp[k] + exps[queue[q]]) % m);
        queue.push_back(y);
      }
    }
    std::string name = "vals[" + std::to_string(m) + "]{";
    for (std::size_t k = 0; k < gens.size(); ++k)
      name += (k ? ",g" : "g") + std::to_string(k + 1) + ":" + std::to_string(gen_exp[k]);
    name += "}";
    LinearCharacter chi(g, static_cast<std::uint32_t>(m), std::move(exps), std::move(name));
    if (!chi.is_homomorphism())
      throw InvalidInput("character selector \"" + std::string(text) +
                         "\" does not extend to a homomorphism on " + g->name());
    return chi;
  }

  if (s.starts_with("table")) {
    auto [m, body] = bracketed(s, 5, text);
    if (m == 0)
      throw InvalidInput("character selector \"" + std::string(text) +
                         "\": table requires an explicit modulus, table[m]{...}");
    std::vector<std::uint32_t> exps;
    for (auto const &item : split_commas(body))
      exps.push_back(static_cast<std::uint32_t>(parse_uint(item, text) % m));
    if (exps.size() != g->order())
      throw InvalidInput("character selector \"" + std::string(text) + "\": table has " +
                         std::to_string(exps.size()) + " entries, " + g->name() +
                         " has order " + std::to_string(g->order()));
    return checked(LinearCharacter(g, static_cast<std::uint32_t>(m), std::move(exps), s));
  }

  throw InvalidInput("unknown character selector \"" + std::string(text) +
                     "\" (expected unit, sign, index:k, vals{...} or table[m]{...})");
}

} // namespace polya
