#include "polya/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <ostream>

#include "polya/error.hpp"

namespace polya {

std::uint32_t euler_phi(std::uint32_t m)
{
  std::uint32_t result = m;
  for (std::uint32_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0)
        m /= p;
      result -= result / p;
    }
  }
  if (m > 1)
    result -= result / m;
  return result;
}

namespace {

// Quotient of num by the monic divisor den; throws if the division leaves a
// remainder.
std::vector<Integer> exact_divide(std::vector<Integer> num, std::vector<Integer> const &den)
{
  std::size_t const dd = den.size() - 1;
  if (num.size() < den.size())
    throw CheckFailed("exact_divide: degree too small");
  std::vector<Integer> quot(num.size() - dd);
  for (std::size_t i = num.size(); i-- > dd;) {
    Integer c = num[i];
    quot[i - dd] = c;
    if (c != 0)
      for (std::size_t j = 0; j <= dd; ++j)
        num[i - dd + j] -= c * den[j];
  }
  for (auto const &r : num)
    if (r != 0)
      throw CheckFailed("exact_divide: nonzero remainder");
  return quot;
}

// Reduce in place modulo the monic polynomial phi; result has length deg(phi).
void reduce_mod(std::vector<Rational> &a, std::vector<Integer> const &phi)
{
  std::size_t const deg = phi.size() - 1;
  for (std::size_t i = a.size(); i-- > deg;) {
    if (a[i] == 0)
      continue;
    Rational c = a[i];
    for (std::size_t j = 0; j < deg; ++j)
      a[i - deg + j] -= c * phi[j];
    a[i] = 0;
  }
  a.resize(deg);
}

} // namespace

std::vector<Integer> const &cyclotomic_polynomial(std::uint32_t m)
{
  if (m == 0)
    throw InvalidInput("cyclotomic_polynomial: m must be positive");

  static std::mutex mutex;
  static std::map<std::uint32_t, std::vector<Integer>> cache;

  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(m); it != cache.end())
      return it->second;
  }

  std::vector<Integer> num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (std::uint32_t e = 1; e < m; ++e)
    if (m % e == 0)
      num = exact_divide(std::move(num), cyclotomic_polynomial(e));

  std::lock_guard lock(mutex);
  return cache.emplace(m, std::move(num)).first->second;
}

// ---------------------------------------------------------------------------

Cyclotomic Cyclotomic::root_of_unity(std::uint32_t m, std::int64_t k)
{
  if (m == 0)
    throw InvalidInput("root_of_unity: m must be positive");
  auto e = static_cast<std::size_t>(((k % m) + m) % m);
  std::vector<Rational> c(e + 1);
  c[e] = 1;
  return from_coeffs(m, std::move(c));
}

Cyclotomic Cyclotomic::from_coeffs(std::uint32_t m, std::vector<Rational> coeffs)
{
  Cyclotomic out;
  out.conductor_ = m;
  if (coeffs.size() < euler_phi(m))
    coeffs.resize(euler_phi(m));
  for (auto &c : coeffs)
    c.canonicalize();
  reduce_mod(coeffs, cyclotomic_polynomial(m));
  out.coeffs_ = std::move(coeffs);
  out.canonicalize();
  return out;
}

void Cyclotomic::canonicalize()
{
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0)
      return;
  coeffs_.resize(1);
  conductor_ = 1;
}

bool Cyclotomic::is_zero() const
{
  return is_rational() && coeffs_[0] == 0;
}

Rational const &Cyclotomic::rational() const
{
  if (!is_rational())
    throw InvalidInput("Cyclotomic::rational: value " + to_string() + " is not rational");
  return coeffs_[0];
}

std::vector<Rational> Cyclotomic::coeffs_in(std::uint32_t l) const
{
  if (l % conductor_ != 0)
    throw InvalidInput("Cyclotomic::coeffs_in: conductor does not divide target");
  std::uint32_t const step = l / conductor_;
  if (step == 1)
    return coeffs_;
  std::vector<Rational> c((coeffs_.size() - 1) * step + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    c[i * step] = coeffs_[i];
  if (c.size() < euler_phi(l))
    c.resize(euler_phi(l));
  reduce_mod(c, cyclotomic_polynomial(l));
  return c;
}

Cyclotomic Cyclotomic::galois(std::int64_t k) const
{
  std::int64_t const m = conductor_;
  auto kk = ((k % m) + m) % m;
  if (std::gcd(kk, m) != 1)
    throw InvalidInput("Cyclotomic::galois: exponent not coprime to conductor");
  if (is_rational())
    return *this;
  std::vector<Rational> c(conductor_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0)
      c[(i * static_cast<std::size_t>(kk)) % static_cast<std::size_t>(m)] += coeffs_[i];
  return from_coeffs(conductor_, std::move(c));
}

Cyclotomic Cyclotomic::inverse() const
{
  if (is_zero())
    throw InvalidInput("Cyclotomic: division by zero");
  if (is_rational())
    return Cyclotomic(Rational(1) / coeffs_[0]);

  // a^{-1} = (prod of the other conjugates) / norm(a)
  Cyclotomic others(1);
  for (std::uint32_t k = 2; k < conductor_; ++k)
    if (std::gcd(k, conductor_) == 1)
      others *= galois(k);
  Cyclotomic norm = others * *this;
  return others * Cyclotomic(Rational(1) / norm.rational());
}

Cyclotomic &Cyclotomic::operator+=(Cyclotomic const &b)
{
  if (b.is_rational()) {
    coeffs_[0] += b.coeffs_[0];
    canonicalize();
    return *this;
  }
  std::uint32_t const l = std::lcm(conductor_, b.conductor_);
  auto x = coeffs_in(l);
  auto y = b.coeffs_in(l);
  for (std::size_t i = 0; i < x.size(); ++i)
    x[i] += y[i];
  conductor_ = l;
  coeffs_ = std::move(x);
  canonicalize();
  return *this;
}

Cyclotomic &Cyclotomic::operator-=(Cyclotomic const &b)
{
  return *this += -b;
}

Cyclotomic &Cyclotomic::operator*=(Rational const &q)
{
  Rational factor = q;
  factor.canonicalize();
  for (auto &c : coeffs_)
    c *= factor;
  canonicalize();
  return *this;
}

Cyclotomic &Cyclotomic::operator*=(Cyclotomic const &b)
{
  if (b.is_rational())
    return *this *= b.coeffs_[0];
  if (is_rational()) {
    Rational q = coeffs_[0];
    *this = b;
    return *this *= q;
  }
  std::uint32_t const l = std::lcm(conductor_, b.conductor_);
  auto x = coeffs_in(l);
  auto y = b.coeffs_in(l);
  std::vector<Rational> prod(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0)
      continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (y[j] != 0)
        prod[i + j] += x[i] * y[j];
  }
  *this = from_coeffs(l, std::move(prod));
  return *this;
}

Cyclotomic &Cyclotomic::operator/=(Cyclotomic const &b)
{
  return *this *= b.inverse();
}

Cyclotomic Cyclotomic::operator-() const
{
  Cyclotomic out = *this;
  for (auto &c : out.coeffs_)
    c = -c;
  return out;
}

bool operator==(Cyclotomic const &a, Cyclotomic const &b)
{
  if (a.conductor_ == b.conductor_)
    return a.coeffs_ == b.coeffs_;
  if (a.is_rational() || b.is_rational())
    return false;  // both canonical: a rational value always has conductor 1
  std::uint32_t const l = std::lcm(a.conductor_, b.conductor_);
  return a.coeffs_in(l) == b.coeffs_in(l);
}

std::string Cyclotomic::to_string() const
{
  if (is_rational())
    return coeffs_[0].get_str();

  std::string out = "(";
  bool first = true;
  std::string const z = "z" + std::to_string(conductor_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    Rational c = coeffs_[i];
    if (c == 0)
      continue;
    if (!first)
      out += c < 0 ? " - " : " + ";
    else if (c < 0)
      out += "-";
    if (c < 0)
      c = -c;
    first = false;
    if (i == 0) {
      out += c.get_str();
      continue;
    }
    if (c != 1)
      out += c.get_str() + "*";
    out += z;
    if (i > 1)
      out += "^" + std::to_string(i);
  }
  return out + ")";
}

std::ostream &operator<<(std::ostream &os, Cyclotomic const &c)
{
  return os << c.to_string();
}

} // namespace polya
