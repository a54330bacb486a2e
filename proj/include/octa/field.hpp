// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace octa {

/// An element of F_{p^alpha}, stored as its coefficient tuple packed in base p
/// with the x^0 coefficient most significant. Integer order on `code` is
/// therefore lexicographic order on (c0, c1, ..., c_{alpha-1}).
struct Element {
  std::uint32_t code = 0;
  friend constexpr auto operator<=>(Element, Element) = default;
};

/// Parsed form of a field-spec line `p alpha c0 c1 ... c_alpha`.
struct FieldSpec {
  std::uint32_t p = 0;
  std::uint32_t alpha = 0;
  std::vector<std::uint32_t> modulus;  // alpha + 1 coefficients, low degree first
};

FieldSpec parse_field_spec(const std::string& text);

/// Exact arithmetic in F_{p^alpha} in a polynomial basis.
///
/// Without overrides the modulus is the lexicographically smallest monic
/// irreducible polynomial of degree alpha (coefficients compared low degree
/// first) and omega is the smallest element of multiplicative order q - 1.
/// Copies share the immutable tables.
class Field {
 public:
  static Field create(std::uint32_t p, std::uint32_t alpha,
                      std::optional<std::vector<std::uint32_t>> modulus_override = std::nullopt,
                      std::optional<std::vector<std::uint32_t>> generator_override = std::nullopt);

  std::uint32_t p() const { return impl_->p; }
  std::uint32_t alpha() const { return impl_->alpha; }
  std::uint32_t q() const { return impl_->q; }
  const std::vector<std::uint32_t>& modulus() const { return impl_->modulus; }
  Element omega() const { return impl_->omega; }
  /// omega^((q-1)/4); absent unless q = 1 (mod 4).
  std::optional<Element> fourth_root() const { return impl_->i_elem; }
  /// Throws MissingFourthRoot when q != 1 (mod 4).
  Element i() const;

  Element zero() const { return Element{0}; }
  Element one() const { return impl_->one; }
  /// Image of an integer in the prime subfield.
  Element from_int(std::int64_t v) const;
  Element from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(Element a) const;

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  Element inv(Element a) const;
  Element div(Element a, Element b) const;
  Element pow(Element a, std::uint64_t e) const;
  Element frobenius(Element a) const { return pow(a, impl_->p); }

  /// Multiplicative order; zero for the zero element.
  std::uint64_t order(Element a) const;

  /// Whether 1 + i == -i; holds exactly in characteristic 5.
  bool is_char5_identity() const;

  std::string format(Element a) const;

 private:
  struct Impl {
    std::uint32_t p = 0, alpha = 0, q = 0;
    std::vector<std::uint32_t> modulus;
    std::vector<std::uint32_t> pow_p;  // p^(alpha-1-j) place value of coefficient j
    Element one{}, omega{};
    std::optional<Element> i_elem;
    std::vector<std::uint32_t> log, exp;  // discrete log tables w.r.t. omega
    std::vector<std::uint16_t> add_table, neg_table;  // present for small q
  };

  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// (p, alpha) with q = p^alpha, or nullopt when q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);

}  // namespace octa
