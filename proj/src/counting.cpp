// SPDX-License-Identifier: Apache-2.0
#include "octa/counting.hpp"

#include <numeric>

#include "octa/error.hpp"

namespace octa {

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

void require_admissible(std::uint64_t p, std::uint64_t n) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, "counting", std::to_string(p) + " is not prime");
  if (n == 0) throw Error(ErrorKind::BadInput, "counting", "exponent must be positive");
  if (p % 4 == 1) return;
  if (p % 4 == 3 && n % 2 == 0) return;
  throw Error(ErrorKind::BadCongruence, "counting",
              std::to_string(p) + "^" + std::to_string(n) + " is not 1 mod 4");
}

}  // namespace

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (auto l : prime_factors(n)) result = result / l * (l - 1);
  return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

Rational h_factor(std::uint64_t p, std::uint64_t n, std::uint64_t d) {
  require_admissible(p, n);
  if (d == 0 || n % d != 0)
    throw Error(ErrorKind::NotDivisor, "counting", std::to_string(d) + " does not divide " + std::to_string(n));
  const std::uint64_t k = n / d;  // |<phi^d>|
  if (p % 4 == 1) return Rational(static_cast<std::int64_t>(std::gcd(k, std::uint64_t{4})));
  if (d % 2 == 1 || k % 4 == 0) return Rational(1);
  if (k % 4 == 2) return Rational(1, 2);
  return Rational(1, 4);
}

OrbitCount orbit_count_pf(std::uint64_t p, std::uint64_t n) {
  require_admissible(p, n);
  const std::int64_t scale = p % 4 == 1 ? 4 : 1;
  Rational sum(0);
  for (auto d : divisors(n)) {
    const auto fixed = static_cast<std::int64_t>(ipow(p, d) - 1);
    sum += Rational(static_cast<std::int64_t>(euler_phi(n / d))) * h_factor(p, n, d) * Rational(fixed, scale);
  }
  sum /= Rational(static_cast<std::int64_t>(n));
  if (sum.denominator() != 1 || sum.numerator() <= 0)
    throw Error(ErrorKind::NonIntegerResult, "counting",
                "orbit count for " + std::to_string(p) + "^" + std::to_string(n) + " is " +
                    std::to_string(sum.numerator()) + "/" + std::to_string(sum.denominator()));
  OrbitCount out;
  out.count = static_cast<std::uint64_t>(sum.numerator());
  out.m_min = 2 * out.count - 1;
  return out;
}

std::uint64_t orbit_count_direct(const Field& f) {
  const std::uint32_t q = f.q();
  const Element i = f.i();
  // class representative = minimum code among {a, -a, ia, -ia}
  std::vector<std::uint32_t> cls(q, 0);
  for (std::uint32_t a = 1; a < q; ++a) {
    const Element e{a};
    cls[a] = std::min({a, f.neg(e).code, f.mul(i, e).code, f.neg(f.mul(i, e)).code});
  }
  std::vector<std::uint32_t> parent(q);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::uint32_t a = 1; a < q; ++a) {
    const std::uint32_t u = find(cls[a]), v = find(cls[f.frobenius(Element{a}).code]);
    if (u != v) parent[std::max(u, v)] = std::min(u, v);
  }
  std::uint64_t orbits = 0;
  for (std::uint32_t a = 1; a < q; ++a)
    if (cls[a] == a && find(a) == a) ++orbits;
  return orbits;
}

ClosedForm closed_form_params(std::uint64_t p, std::uint64_t alpha) {
  require_admissible(p, alpha);
  const std::uint64_t q = ipow(p, alpha);
  const bool char5 = p == 5;
  ClosedForm cf;
  auto& params = cf.params;
  params.char5 = char5;
  params.v = (q * q - 1) / 4;
  params.b = q * (q * q - 1) / (char5 ? 120 : 24);
  params.k = 6;
  params.r = char5 ? q / 5 : q;
  params.m = (q - 3) / 2;
  if (char5) {
    params.lambda_values[PairClass::Adjacent] = 1;
  } else {
    params.lambda_values[PairClass::Edge] = 4;
    params.lambda_values[PairClass::Diagonal] = 1;
  }
  // pairs with lambda > 0: q(q^2-1)/8 when char 5, twice that otherwise
  const std::uint64_t covered = q * (q * q - 1) / 8 * (char5 ? 1 : 2);
  if (covered < params.v * (params.v - 1) / 2) params.lambda_values[PairClass::Null] = 0;
  cf.group_order = q * (q * q - 1) / 2;
  cf.block_stabilizer_order = char5 ? 60 : 12;
  cf.point_stabilizer_order = 2 * q;
  if (!char5) cf.edges = cf.diagonals = q * (q * q - 1) / 8;
  return cf;
}

std::vector<std::uint64_t> admissible_orders(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = std::max<std::uint64_t>(lo, 2); q <= hi; ++q)
    if (q % 4 == 1 && prime_power(q)) out.push_back(q);
  return out;
}

}  // namespace octa
