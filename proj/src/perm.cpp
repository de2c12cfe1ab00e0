#include "polya/perm.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "polya/error.hpp"

namespace polya {

Permutation Permutation::identity(std::size_t degree)
{
  std::vector<Point> map(degree);
  std::iota(map.begin(), map.end(), Point{0});
  return Permutation(std::move(map));
}

Permutation Permutation::from_images(std::span<const Point> images)
{
  std::size_t const d = images.size();
  std::vector<Point> map(d);
  std::vector<bool> hit(d, false);
  for (std::size_t s = 0; s < d; ++s) {
    Point img = images[s];
    if (img < 1 || img > d)
      throw InvalidInput("image " + std::to_string(img) + " out of range 1.." +
                         std::to_string(d));
    if (hit[img - 1])
      throw InvalidInput("images do not form a bijection");
    hit[img - 1] = true;
    map[s] = img - 1;
  }
  return Permutation(std::move(map));
}

std::vector<Point> Permutation::images() const
{
  std::vector<Point> out(map_.size());
  for (std::size_t s = 0; s < map_.size(); ++s)
    out[s] = map_[s] + 1;
  return out;
}

bool Permutation::is_identity() const
{
  for (std::size_t s = 0; s < map_.size(); ++s)
    if (map_[s] != s)
      return false;
  return true;
}

Permutation Permutation::inverse() const
{
  std::vector<Point> inv(map_.size());
  for (std::size_t s = 0; s < map_.size(); ++s)
    inv[map_[s]] = static_cast<Point>(s);
  return Permutation(std::move(inv));
}

std::uint64_t Permutation::order() const
{
  std::uint64_t result = 1;
  auto type = cycle_type(*this);
  for (std::size_t len = 1; len <= type.size(); ++len)
    if (type[len - 1] != 0)
      result = std::lcm(result, static_cast<std::uint64_t>(len));
  return result;
}

std::string Permutation::to_cycle_string() const
{
  std::string out;
  std::vector<bool> seen(map_.size(), false);
  for (std::size_t start = 0; start < map_.size(); ++start) {
    if (seen[start] || map_[start] == start)
      continue;
    out += '(';
    std::size_t s = start;
    bool first = true;
    while (!seen[s]) {
      seen[s] = true;
      if (!first)
        out += ' ';
      out += std::to_string(s + 1);
      first = false;
      s = map_[s];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation compose(Permutation const &a, Permutation const &b)
{
  if (a.degree() != b.degree())
    throw InvalidInput("compose: degree mismatch (" + std::to_string(a.degree()) +
                       " vs " + std::to_string(b.degree()) + ")");
  std::vector<Point> map(a.degree());
  for (std::size_t s = 0; s < map.size(); ++s)
    map[s] = a.map_[b.map_[s]];
  return Permutation(std::move(map));
}

Permutation perm_from_cycles(std::string_view text, std::size_t degree)
{
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{1});
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };

  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw InvalidInput("malformed cycle notation: expected '(' in \"" +
                         std::string(text) + "\"");
    ++pos;
    std::vector<Point> cycle;
    for (;;) {
      skip_space();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos >= text.size())
        throw InvalidInput("malformed cycle notation: unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw InvalidInput("malformed cycle notation: unexpected '" +
                           std::string(1, text[pos]) + "'");
      std::uint64_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        if (value > degree)
          break;
        ++pos;
      }
      if (value < 1 || value > degree)
        throw InvalidInput("point out of range 1.." + std::to_string(degree) +
                           " in \"" + std::string(text) + "\"");
      if (used[value - 1])
        throw InvalidInput("repeated point " + std::to_string(value) +
                           " in \"" + std::string(text) + "\"");
      used[value - 1] = true;
      cycle.push_back(static_cast<Point>(value));
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      images[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
    skip_space();
  }
  return Permutation::from_images(images);
}

std::vector<std::uint32_t> cycle_type(Permutation const &sigma)
{
  std::size_t const d = sigma.degree();
  std::vector<std::uint32_t> counts(d, 0);
  std::vector<bool> seen(d, false);
  for (std::size_t start = 0; start < d; ++start) {
    if (seen[start])
      continue;
    std::size_t len = 0;
    for (std::size_t s = start; !seen[s]; s = sigma.image0(s)) {
      seen[s] = true;
      ++len;
    }
    ++counts[len - 1];
  }
  return counts;
}

std::size_t PermutationHash::operator()(Permutation const &p) const noexcept
{
  std::size_t h = p.degree();
  for (std::size_t s = 0; s < p.degree(); ++s)
    h = h * 1000003u ^ p.image0(s);
  return h;
}

// ---------------------------------------------------------------------------

std::size_t PermGroup::index_of(Permutation const &p) const
{
  auto it = index_.find(p);
  return it == index_.end() ? npos : it->second;
}

std::size_t PermGroup::product_index(std::size_t a, std::size_t b) const
{
  return index_of(compose(elements_[a], elements_[b]));
}

std::size_t PermGroup::inverse_index(std::size_t a) const
{
  return index_of(elements_[a].inverse());
}

bool PermGroup::is_abelian() const
{
  for (auto const &a : generators_)
    for (auto const &b : generators_)
      if (compose(a, b) != compose(b, a))
        return false;
  return true;
}

bool PermGroup::is_subgroup_of(PermGroup const &g) const
{
  if (degree_ != g.degree())
    return false;
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](Permutation const &p) { return g.contains(p); });
}

bool PermGroup::is_normal_in(PermGroup const &g) const
{
  if (!is_subgroup_of(g))
    return false;
  for (auto const &x : g.generators()) {
    auto x_inv = x.inverse();
    for (auto const &h : elements_)
      if (!contains(compose(compose(x, h), x_inv)))
        return false;
  }
  return true;
}

bool PermGroup::same_elements(PermGroup const &other) const
{
  return degree_ == other.degree_ && order() == other.order() &&
         is_subgroup_of(other);
}

namespace {

std::string generator_list_name(std::size_t degree,
                                std::vector<Permutation> const &gens)
{
  std::string out = "gen[" + std::to_string(degree) + "]{";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i)
      out += ',';
    out += gens[i].to_cycle_string();
  }
  return out + "}";
}

} // namespace

PermGroup group_closure(std::size_t degree,
                        std::vector<Permutation> const &generators,
                        std::size_t order_cap)
{
  if (degree == 0)
    throw InvalidInput("group_closure: degree must be positive");

  PermGroup g;
  g.degree_ = degree;
  for (auto const &gen : generators) {
    if (gen.degree() != degree)
      throw InvalidInput("group_closure: generator " + gen.to_cycle_string() +
                         " has degree " + std::to_string(gen.degree()) +
                         ", expected " + std::to_string(degree));
    if (!gen.is_identity() &&
        std::find(g.generators_.begin(), g.generators_.end(), gen) ==
          g.generators_.end())
      g.generators_.push_back(gen);
  }

  auto id = Permutation::identity(degree);
  g.elements_.push_back(id);
  g.index_.emplace(id, 0);

  for (std::size_t next = 0; next < g.elements_.size(); ++next) {
    for (auto const &gen : g.generators_) {
      auto p = compose(gen, g.elements_[next]);
      if (g.index_.contains(p))
        continue;
      if (g.elements_.size() >= order_cap)
        throw CapExceeded("group order exceeds cap of " + std::to_string(order_cap));
      g.index_.emplace(p, g.elements_.size());
      g.elements_.push_back(std::move(p));
    }
  }

  g.name_ = generator_list_name(degree, g.generators_);
  return g;
}

PermGroup named_group(GroupKind kind, std::size_t d)
{
  if (d < 1)
    throw InvalidInput("named_group: degree must be at least 1");

  std::vector<Permutation> gens;
  std::vector<Point> cycle(d);
  for (std::size_t s = 0; s < d; ++s)
    cycle[s] = static_cast<Point>((s + 1) % d + 1);
  auto long_cycle = Permutation::from_images(cycle);

  std::string name;
  switch (kind) {
  case GroupKind::symmetric:
    name = "S";
    if (d >= 2) {
      gens.push_back(perm_from_cycles("(1 2)", d));
      if (d >= 3)
        gens.push_back(long_cycle);
    }
    break;
  case GroupKind::alternating:
    name = "A";
    for (std::size_t k = 3; k <= d; ++k)
      gens.push_back(perm_from_cycles("(1 2 " + std::to_string(k) + ")", d));
    break;
  case GroupKind::cyclic:
    name = "C";
    gens.push_back(long_cycle);
    break;
  case GroupKind::dihedral: {
    name = "D";
    if (d < 3)
      throw InvalidInput("dihedral group needs degree at least 3");
    std::vector<Point> flip(d);
    flip[0] = 1;
    for (std::size_t k = 2; k <= d; ++k)
      flip[k - 1] = static_cast<Point>(d + 2 - k);
    gens.push_back(long_cycle);
    gens.push_back(Permutation::from_images(flip));
    break;
  }
  }

  auto g = group_closure(d, gens);
  g.set_name(name + "(" + std::to_string(d) + ")");
  return g;
}

PermGroup direct_product_embed(PermGroup const &w, PermGroup const &v)
{
  std::size_t const d = w.degree(), r = v.degree();
  std::vector<Permutation> gens;
  std::vector<Point> img(d + r);

  for (auto const &sigma : w.generators()) {
    for (std::size_t s = 0; s < d; ++s)
      img[s] = sigma.image0(s) + 1;
    for (std::size_t t = 0; t < r; ++t)
      img[d + t] = static_cast<Point>(d + t + 1);
    gens.push_back(Permutation::from_images(img));
  }
  for (auto const &tau : v.generators()) {
    for (std::size_t s = 0; s < d; ++s)
      img[s] = static_cast<Point>(s + 1);
    for (std::size_t t = 0; t < r; ++t)
      img[d + t] = static_cast<Point>(d + tau.image0(t) + 1);
    gens.push_back(Permutation::from_images(img));
  }

  auto g = group_closure(d + r, gens);
  if (g.order() != w.order() * v.order())
    throw CheckFailed("direct_product_embed: order " + std::to_string(g.order()) +
                      " != |W||V|");
  g.set_name("product(" + w.name() + "," + v.name() + ")");
  return g;
}

PermGroup wreath_embed(PermGroup const &v, PermGroup const &w)
{
  std::size_t const r = v.degree(), d = w.degree();
  std::size_t const n = d * r;
  std::vector<Permutation> gens;
  std::vector<Point> img(n);

  // V acts on every block; W need not be transitive on the blocks
  for (std::size_t s = 0; s < d; ++s)
    for (auto const &tau : v.generators()) {
      std::iota(img.begin(), img.end(), Point{1});
      for (std::size_t t = 0; t < r; ++t)
        img[s * r + t] = static_cast<Point>(s * r + tau.image0(t) + 1);
      gens.push_back(Permutation::from_images(img));
    }
  for (auto const &sigma : w.generators()) {
    for (std::size_t s = 0; s < d; ++s)
      for (std::size_t t = 0; t < r; ++t)
        img[s * r + t] = static_cast<Point>(sigma.image0(s) * r + t + 1);
    gens.push_back(Permutation::from_images(img));
  }

  auto g = group_closure(n, gens);

  std::size_t expected = w.order();
  for (std::size_t s = 0; s < d; ++s)
    expected *= v.order();
  if (g.order() != expected)
    throw CheckFailed("wreath_embed: order " + std::to_string(g.order()) +
                      " != |V|^d |W| = " + std::to_string(expected));
  g.set_name("wreath(" + v.name() + "," + w.name() + ")");
  return g;
}

PermGroup derived_subgroup(PermGroup const &g)
{
  // Normal closure of the generator commutators.
  std::vector<Permutation> gens;
  for (auto const &a : g.generators()) {
    for (auto const &b : g.generators()) {
      auto c = compose(compose(a.inverse(), b.inverse()), compose(a, b));
      if (!c.is_identity())
        gens.push_back(std::move(c));
    }
  }

  auto n = group_closure(g.degree(), gens);
  for (bool grew = true; grew;) {
    grew = false;
    for (auto const &x : g.generators()) {
      auto x_inv = x.inverse();
      for (auto const &h : n.generators()) {
        auto c = compose(compose(x_inv, h), x);
        if (!n.contains(c)) {
          gens.push_back(std::move(c));
          n = group_closure(g.degree(), gens);
          grew = true;
          break;
        }
      }
      if (grew)
        break;
    }
  }
  return n;
}

PermGroup subgroup_where(PermGroup const &g,
                         std::function<bool(std::size_t)> const &pred)
{
  std::vector<Permutation> gens;
  auto h = group_closure(g.degree(), gens);
  std::size_t selected = 0;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (!pred(i))
      continue;
    ++selected;
    if (!h.contains(g.element(i))) {
      gens.push_back(g.element(i));
      h = group_closure(g.degree(), gens);
    }
  }
  if (h.order() != selected)
    throw InvalidInput("subgroup_where: selected elements do not form a subgroup");
  return h;
}

WreathParts decompose_wreath_element(Permutation const &g, PermGroup const &v,
                                     PermGroup const &w)
{
  std::size_t const r = v.degree(), d = w.degree();
  if (g.degree() != d * r)
    throw InvalidInput("decompose_wreath_element: degree mismatch");

  std::vector<Point> top(d);
  WreathParts parts;
  std::vector<Point> block(r);
  for (std::size_t s = 0; s < d; ++s) {
    std::size_t const target = g.image0(s * r) / r;
    for (std::size_t t = 0; t < r; ++t) {
      Point img = g.image0(s * r + t);
      if (img / r != target)
        throw InvalidInput("decompose_wreath_element: " + g.to_cycle_string() +
                           " does not permute blocks");
      block[t] = static_cast<Point>(img - target * r + 1);
    }
    top[s] = static_cast<Point>(target + 1);
    auto tau = Permutation::from_images(block);
    if (!v.contains(tau))
      throw InvalidInput("decompose_wreath_element: block map " +
                         tau.to_cycle_string() + " not in V");
    parts.blocks.push_back(std::move(tau));
  }

  parts.top = Permutation::from_images(top);
  if (!w.contains(parts.top))
    throw InvalidInput("decompose_wreath_element: block permutation " +
                       parts.top.to_cycle_string() + " not in W");
  return parts;
}

Permutation assemble_wreath_element(WreathParts const &parts, std::size_t r)
{
  std::size_t const d = parts.top.degree();
  std::vector<Point> img(d * r);
  for (std::size_t s = 0; s < d; ++s)
    for (std::size_t t = 0; t < r; ++t)
      img[s * r + t] = static_cast<Point>(parts.top.image0(s) * r +
                                          parts.blocks[s].image0(t) + 1);
  return Permutation::from_images(img);
}

// ---------------------------------------------------------------------------
// Group expression parser

namespace {

class GroupParser {
public:
  GroupParser(std::string_view text, std::size_t cap) : text_(text), cap_(cap) {}

  PermGroup parse()
  {
    auto g = expr();
    skip();
    if (pos_ != text_.size())
      fail("trailing characters");
    return g;
  }

private:
  [[noreturn]] void fail(std::string const &what) const
  {
    throw InvalidInput("group expression \"" + std::string(text_) + "\": " + what +
                       " at offset " + std::to_string(pos_));
  }

  void skip()
  {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  void expect(char c)
  {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::size_t number()
  {
    skip();
    std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (value > 1'000'000)
        fail("number too large");
      ++pos_;
    }
    if (start == pos_)
      fail("expected a number");
    return value;
  }

  std::string word()
  {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  PermGroup expr()
  {
    auto w = word();
    if (w == "S" || w == "A" || w == "C" || w == "D") {
      expect('(');
      auto d = number();
      expect(')');
      GroupKind kind = w == "S"   ? GroupKind::symmetric
                       : w == "A" ? GroupKind::alternating
                       : w == "C" ? GroupKind::cyclic
                                  : GroupKind::dihedral;
      if (d == 0)
        fail("degree must be positive");
      return named_group(kind, d);
    }
    if (w == "gen") {
      expect('[');
      auto d = number();
      expect(']');
      if (d == 0)
        fail("degree must be positive");
      expect('{');
      std::vector<Permutation> gens;
      skip();
      while (pos_ < text_.size() && text_[pos_] != '}') {
        std::size_t start = pos_;
        // a generator is a run of cycles, ended by ',' or '}' at depth 0
        int depth = 0;
        while (pos_ < text_.size()) {
          char c = text_[pos_];
          if (c == '(')
            ++depth;
          else if (c == ')')
            --depth;
          else if (depth == 0 && (c == ',' || c == '}'))
            break;
          ++pos_;
        }
        gens.push_back(perm_from_cycles(text_.substr(start, pos_ - start), d));
        skip();
        if (pos_ < text_.size() && text_[pos_] == ',')
          ++pos_;
        skip();
      }
      expect('}');
      return group_closure(d, gens, cap_);
    }
    if (w == "product" || w == "wreath") {
      expect('(');
      auto a = expr();
      expect(',');
      auto b = expr();
      expect(')');
      return w == "product" ? direct_product_embed(a, b) : wreath_embed(a, b);
    }
    fail(w.empty() ? "expected a group" : "unknown group constructor '" + w + "'");
  }

  std::string_view text_;
  std::size_t cap_;
  std::size_t pos_ = 0;
};

} // namespace

PermGroup parse_group(std::string_view text, std::size_t order_cap)
{
  return GroupParser(text, order_cap).parse();
}

} // namespace polya
