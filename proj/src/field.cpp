// SPDX-License-Identifier: Apache-2.0
#include "octa/field.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "octa/error.hpp"

namespace octa {

namespace {

using Poly = std::vector<std::uint32_t>;  // low degree first

// Remainder of a modulo monic-or-not divisor b over F_p; b's leading coefficient must be nonzero.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  std::uint64_t lead_inv = 1;
  {
    // b's leading coefficient inverse by Fermat
    std::uint64_t base = b.back(), e = p - 2;
    while (e) {
      if (e & 1) lead_inv = lead_inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
  }
  for (std::size_t k = a.size(); k-- > db;) {
    std::uint64_t t = a[k] * lead_inv % p;
    if (t == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) {
      std::size_t idx = k - db + j;
      a[idx] = static_cast<std::uint32_t>((a[idx] + p - t * b[j] % p) % p);
    }
  }
  a.resize(std::min(a.size(), db));
  return a;
}

bool is_zero_poly(const Poly& a) {
  return std::all_of(a.begin(), a.end(), [](std::uint32_t c) { return c == 0; });
}

// Trial division by every monic polynomial of degree 1..alpha/2.
bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    Poly g(d + 1, 0);
    g[d] = 1;
    std::uint64_t count = 1;
    for (std::size_t j = 0; j < d; ++j) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t t = idx;
      for (std::size_t j = 0; j < d; ++j) {
        g[j] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      if (is_zero_poly(poly_mod(f, g, p))) return false;
    }
  }
  return true;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::WrongDegree: return "WrongDegree";
    case ErrorKind::BadCongruence: return "BadCongruence";
    case ErrorKind::NotDivisor: return "NotDivisor";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::MissingFourthRoot: return "MissingFourthRoot";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::BadInput: return "BadInput";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::DegenerateBlock: return "DegenerateBlock";
    case ErrorKind::CountMismatch: return "CountMismatch";
    case ErrorKind::LabelClash: return "LabelClash";
    case ErrorKind::NotCoherent: return "NotCoherent";
    case ErrorKind::NotEquitable: return "NotEquitable";
    case ErrorKind::NonIntegerResult: return "NonIntegerResult";
    case ErrorKind::RefinementViolation: return "RefinementViolation";
    case ErrorKind::ContractViolation: return "ContractViolation";
  }
  return "Unknown";
}

bool is_input_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime:
    case ErrorKind::ReducibleModulus:
    case ErrorKind::WrongDegree:
    case ErrorKind::BadCongruence:
    case ErrorKind::NotDivisor:
    case ErrorKind::ZeroVector:
    case ErrorKind::MissingFourthRoot:
    case ErrorKind::DivisionByZero:
    case ErrorKind::BadInput:
    case ErrorKind::ResourceLimit:
      return true;
    default:
      return false;
  }
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  auto factors = prime_factors(q);
  if (factors.size() != 1) return std::nullopt;
  std::uint32_t alpha = 0;
  while (q > 1) {
    q /= factors[0];
    ++alpha;
  }
  return std::pair{static_cast<std::uint32_t>(factors[0]), alpha};
}

FieldSpec parse_field_spec(const std::string& text) {
  std::istringstream in(text);
  FieldSpec spec;
  if (!(in >> spec.p >> spec.alpha))
    throw Error(ErrorKind::BadInput, "gf", "field spec must start with 'p alpha': '" + text + "'");
  std::uint32_t c;
  while (in >> c) spec.modulus.push_back(c);
  if (!in.eof()) throw Error(ErrorKind::BadInput, "gf", "non-numeric token in field spec: '" + text + "'");
  if (spec.modulus.size() != spec.alpha + 1)
    throw Error(ErrorKind::WrongDegree, "gf",
                "expected " + std::to_string(spec.alpha + 1) + " modulus coefficients, got " +
                    std::to_string(spec.modulus.size()));
  return spec;
}

Field Field::create(std::uint32_t p, std::uint32_t alpha, std::optional<std::vector<std::uint32_t>> modulus_override,
                    std::optional<std::vector<std::uint32_t>> generator_override) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, "gf", std::to_string(p) + " is not prime");
  if (alpha == 0) throw Error(ErrorKind::WrongDegree, "gf", "alpha must be positive");
  const std::uint64_t q64 = ipow(p, alpha);
  if (q64 > (1u << 20)) throw Error(ErrorKind::ResourceLimit, "gf", "field too large for table arithmetic");

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->alpha = alpha;
  impl->q = static_cast<std::uint32_t>(q64);
  impl->pow_p.resize(alpha);
  for (std::uint32_t j = 0; j < alpha; ++j) impl->pow_p[j] = static_cast<std::uint32_t>(ipow(p, alpha - 1 - j));

  if (modulus_override) {
    const Poly& m = *modulus_override;
    if (m.size() != alpha + 1)
      throw Error(ErrorKind::WrongDegree, "gf", "modulus must have degree " + std::to_string(alpha));
    if (m.back() != 1) throw Error(ErrorKind::WrongDegree, "gf", "modulus must be monic");
    if (std::any_of(m.begin(), m.end(), [p](std::uint32_t c) { return c >= p; }))
      throw Error(ErrorKind::BadInput, "gf", "modulus coefficient out of range");
    if (!is_irreducible(m, p)) throw Error(ErrorKind::ReducibleModulus, "gf", "modulus is reducible");
    impl->modulus = m;
  } else {
    // Lexicographic order with c0 most significant, i.e. the same packing as Element.
    Poly m(alpha + 1, 0);
    m[alpha] = 1;
    bool found = false;
    for (std::uint64_t code = 0; code < q64 && !found; ++code) {
      std::uint64_t t = code;
      for (std::uint32_t j = alpha; j-- > 0;) {
        m[j] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      found = is_irreducible(m, p);
    }
    impl->modulus = m;
  }

  const std::uint32_t q = impl->q;
  impl->one = Element{impl->pow_p[0]};

  // Reference multiplication by polynomial product, used only to build the log tables.
  auto to_poly = [&](std::uint32_t code) {
    Poly c(alpha);
    for (std::uint32_t j = alpha; j-- > 0;) {
      c[j] = code % p;
      code /= p;
    }
    return c;
  };
  auto from_poly = [&](const Poly& c) {
    std::uint32_t code = 0;
    for (std::uint32_t j = 0; j < alpha; ++j) code += c[j] * impl->pow_p[j];
    return code;
  };
  auto slow_mul = [&](std::uint32_t a, std::uint32_t b) {
    Poly x = to_poly(a), y = to_poly(b);
    Poly prod(2 * alpha - 1, 0);
    for (std::uint32_t s = 0; s < alpha; ++s)
      for (std::uint32_t t = 0; t < alpha; ++t)
        prod[s + t] = static_cast<std::uint32_t>((prod[s + t] + std::uint64_t{x[s]} * y[t]) % p);
    Poly r = alpha == 1 ? prod : poly_mod(prod, impl->modulus, p);
    r.resize(alpha, 0);
    return from_poly(r);
  };
  auto slow_order = [&](std::uint32_t a) -> std::uint64_t {
    if (a == 0) return 0;
    std::uint64_t k = 1;
    std::uint32_t x = a;
    while (x != impl->one.code) {
      x = slow_mul(x, a);
      ++k;
    }
    return k;
  };

  const auto factors = prime_factors(q - 1);
  auto is_generator = [&](std::uint32_t a) {
    if (a == 0) return false;
    if (q == 2) return true;
    for (auto l : factors) {
      std::uint64_t e = (q - 1) / l;
      std::uint32_t r = impl->one.code, base = a;
      while (e) {
        if (e & 1) r = slow_mul(r, base);
        base = slow_mul(base, base);
        e >>= 1;
      }
      if (r == impl->one.code) return false;
    }
    return true;
  };

  if (generator_override) {
    if (generator_override->size() != alpha)
      throw Error(ErrorKind::BadInput, "gf", "generator must have alpha coefficients");
    if (std::any_of(generator_override->begin(), generator_override->end(), [p](std::uint32_t c) { return c >= p; }))
      throw Error(ErrorKind::BadInput, "gf", "generator coefficient out of range");
    std::uint32_t g = from_poly(*generator_override);
    if (!is_generator(g)) throw Error(ErrorKind::BadInput, "gf", "override is not a multiplicative generator");
    impl->omega = Element{g};
  } else {
    std::uint32_t g = 1;
    while (!is_generator(g)) ++g;
    impl->omega = Element{g};
  }
  if (slow_order(impl->omega.code) != q - 1)
    throw Error(ErrorKind::ContractViolation, "gf", "generator order mismatch");

  impl->log.assign(q, 0);
  impl->exp.assign(q - 1, 0);
  std::uint32_t x = impl->one.code;
  for (std::uint32_t k = 0; k < q - 1; ++k) {
    impl->exp[k] = x;
    impl->log[x] = k;
    x = slow_mul(x, impl->omega.code);
  }

  if (q <= 1024) {
    impl->add_table.resize(std::size_t{q} * q);
    impl->neg_table.resize(q);
    for (std::uint32_t a = 0; a < q; ++a) {
      Poly ca = to_poly(a);
      Poly neg(alpha);
      for (std::uint32_t j = 0; j < alpha; ++j) neg[j] = (p - ca[j]) % p;
      impl->neg_table[a] = static_cast<std::uint16_t>(from_poly(neg));
      for (std::uint32_t b = 0; b < q; ++b) {
        Poly cb = to_poly(b);
        for (std::uint32_t j = 0; j < alpha; ++j) cb[j] = (ca[j] + cb[j]) % p;
        impl->add_table[std::size_t{a} * q + b] = static_cast<std::uint16_t>(from_poly(cb));
      }
    }
  }

  if (q % 4 == 1) impl->i_elem = Element{impl->exp[(q - 1) / 4]};
  return Field(std::move(impl));
}

Element Field::i() const {
  if (!impl_->i_elem)
    throw Error(ErrorKind::MissingFourthRoot, "gf", "q = " + std::to_string(q()) + " is not 1 mod 4");
  return *impl_->i_elem;
}

Element Field::from_int(std::int64_t v) const {
  std::int64_t p = impl_->p;
  std::int64_t r = ((v % p) + p) % p;
  return Element{static_cast<std::uint32_t>(r) * impl_->pow_p[0]};
}

Element Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != impl_->alpha) throw Error(ErrorKind::BadInput, "gf", "wrong coefficient count");
  std::uint32_t code = 0;
  for (std::uint32_t j = 0; j < impl_->alpha; ++j) {
    if (coeffs[j] >= impl_->p) throw Error(ErrorKind::BadInput, "gf", "coefficient out of range");
    code += coeffs[j] * impl_->pow_p[j];
  }
  return Element{code};
}

std::vector<std::uint32_t> Field::coeffs(Element a) const {
  std::vector<std::uint32_t> c(impl_->alpha);
  std::uint32_t code = a.code;
  for (std::uint32_t j = impl_->alpha; j-- > 0;) {
    c[j] = code % impl_->p;
    code /= impl_->p;
  }
  return c;
}

Element Field::add(Element a, Element b) const {
  if (!impl_->add_table.empty()) return Element{impl_->add_table[std::size_t{a.code} * impl_->q + b.code]};
  if (impl_->alpha == 1) return Element{(a.code + b.code) % impl_->p};
  std::uint32_t x = a.code, y = b.code, r = 0;
  for (std::uint32_t j = impl_->alpha; j-- > 0;) {
    r += ((x % impl_->p + y % impl_->p) % impl_->p) * impl_->pow_p[j];
    x /= impl_->p;
    y /= impl_->p;
  }
  return Element{r};
}

Element Field::neg(Element a) const {
  if (!impl_->neg_table.empty()) return Element{impl_->neg_table[a.code]};
  std::uint32_t x = a.code, r = 0;
  for (std::uint32_t j = impl_->alpha; j-- > 0;) {
    r += ((impl_->p - x % impl_->p) % impl_->p) * impl_->pow_p[j];
    x /= impl_->p;
  }
  return Element{r};
}

Element Field::sub(Element a, Element b) const { return add(a, neg(b)); }

Element Field::mul(Element a, Element b) const {
  if (a.code == 0 || b.code == 0) return Element{0};
  std::uint32_t s = impl_->log[a.code] + impl_->log[b.code];
  if (s >= impl_->q - 1) s -= impl_->q - 1;
  return Element{impl_->exp[s]};
}

Element Field::inv(Element a) const {
  if (a.code == 0) throw Error(ErrorKind::DivisionByZero, "gf", "inverse of zero");
  std::uint32_t l = impl_->log[a.code];
  return Element{impl_->exp[l == 0 ? 0 : impl_->q - 1 - l]};
}

Element Field::div(Element a, Element b) const {
  if (b.code == 0) throw Error(ErrorKind::DivisionByZero, "gf", "division by zero");
  return mul(a, inv(b));
}

Element Field::pow(Element a, std::uint64_t e) const {
  if (e == 0) return one();
  if (a.code == 0) return Element{0};
  std::uint64_t l = (std::uint64_t{impl_->log[a.code]} * (e % (impl_->q - 1))) % (impl_->q - 1);
  return Element{impl_->exp[l]};
}

std::uint64_t Field::order(Element a) const {
  if (a.code == 0) return 0;
  std::uint64_t n = impl_->q - 1;
  std::uint64_t l = impl_->log[a.code];
  return n / std::gcd(n, l == 0 ? n : l);
}

bool Field::is_char5_identity() const {
  Element iv = i();
  return add(one(), iv) == neg(iv);
}

std::string Field::format(Element a) const {
  auto c = coeffs(a);
  if (c.size() == 1) return std::to_string(c[0]);
  std::string s = "(";
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (j) s += ",";
    s += std::to_string(c[j]);
  }
  return s + ")";
}

}  // namespace octa
