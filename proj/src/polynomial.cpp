#include "covlie/polynomial.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "covlie/errors.hpp"

namespace covlie {

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << '/' << denominator(r);
  return os.str();
}

Rational rational_parse(std::string_view s) {
  if (s.empty()) throw ParseError("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(BigInt(std::string(s)));
    BigInt num{std::string(s.substr(0, slash))};
    BigInt den{std::string(s.substr(slash + 1))};
    if (den == 0) throw ParseError("zero denominator in rational literal");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw ParseError("bad rational literal: " + std::string(s));
  }
}

namespace poly {

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

bool is_zero(const Poly& p) { return p.empty(); }

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly constant(const Rational& c) {
  if (c == 0) return {};
  return {c};
}

Poly x_power(std::size_t k) {
  Poly p(k + 1);
  p[k] = 1;
  return p;
}

Poly add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] += b[i];
  }
  trim(r);
  return r;
}

Poly neg(const Poly& a) {
  Poly r(a);
  for (auto& c : r) c = -c;
  return r;
}

Poly sub(const Poly& a, const Poly& b) { return add(a, neg(b)); }

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Poly scale(const Poly& a, const Rational& c) {
  if (c == 0) return {};
  Poly r(a);
  for (auto& x : r) x *= c;
  return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (is_zero(b)) throw DivisionByZeroError("polynomial division by zero");
  Poly rem(a), quot;
  const int db = degree(b);
  const Rational lead = b.back();
  while (degree(rem) >= db) {
    const int k = degree(rem) - db;
    const Rational c = rem.back() / lead;
    if (static_cast<int>(quot.size()) < k + 1) quot.resize(k + 1);
    quot[k] += c;
    for (int i = 0; i <= db; ++i) rem[k + i] -= c * b[i];
    trim(rem);
  }
  trim(quot);
  return {quot, rem};
}

Poly monic(Poly p) {
  if (p.empty()) return p;
  const Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

Poly gcd(Poly a, Poly b) {
  while (!is_zero(b)) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a));
}

bool equal(const Poly& a, const Poly& b) { return a == b; }

std::string str(const Poly& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += rational_str(p[i]);
  }
  s += ']';
  return s;
}

Poly parse(std::string_view s) {
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw ParseError("bad polynomial literal: " + std::string(s));
  s.remove_prefix(1);
  s.remove_suffix(1);
  Poly p;
  while (!s.empty()) {
    auto comma = s.find(',');
    auto tok = s.substr(0, comma);
    p.push_back(rational_parse(tok));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  trim(p);
  return p;
}

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const Poly& cyclotomic(unsigned n) {
  static std::map<unsigned, Poly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n == 0) throw UnsupportedInputError("cyclotomic polynomial needs n >= 1");

  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed bottom-up so the
  // recursion stays inside the lock.
  for (unsigned m = 1; m <= n; ++m) {
    if (n % m != 0 || cache.count(m)) continue;
    Poly num = x_power(m);
    num[0] -= 1;
    for (unsigned d = 1; d < m; ++d) {
      if (m % d != 0) continue;
      auto [q, r] = divmod(num, cache.at(d));
      if (!is_zero(r)) throw std::logic_error("cyclotomic recurrence: nonzero remainder");
      num = std::move(q);
    }
    cache.emplace(m, std::move(num));
  }
  return cache.at(n);
}

}  // namespace poly
}  // namespace covlie
