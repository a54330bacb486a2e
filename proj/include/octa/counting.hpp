// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include <boost/rational.hpp>

#include "octa/field.hpp"
#include "octa/params.hpp"

namespace octa {

using Rational = boost::rational<std::int64_t>;

/// Size of the fixed-point correction for phi^d acting on F_q^x / mu_4,
/// q = p^n: |H^1| when p = 1 (mod 4), |H^1| / |mu_4^K| when p = 3 (mod 4).
Rational h_factor(std::uint64_t p, std::uint64_t n, std::uint64_t d);

struct OrbitCount {
  std::uint64_t count = 0;  // |P/F|
  std::uint64_t m_min = 0;  // 2 |P/F| - 1
};

/// Burnside count of Frobenius orbits on F_q^x / mu_4 via the h(d) formula.
OrbitCount orbit_count_pf(std::uint64_t p, std::uint64_t n);

/// The same count by union-find over the scalar classes {a, -a, ia, -ia}.
std::uint64_t orbit_count_direct(const Field& f);

std::uint64_t euler_phi(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

struct ClosedForm {
  DesignParams params;
  std::uint64_t group_order = 0;
  std::uint64_t block_stabilizer_order = 0;
  std::uint64_t point_stabilizer_order = 0;
  std::uint64_t edges = 0;      // p != 5
  std::uint64_t diagonals = 0;  // p != 5
};

ClosedForm closed_form_params(std::uint64_t p, std::uint64_t alpha);

/// Prime powers q = 1 (mod 4) with lo <= q <= hi.
std::vector<std::uint64_t> admissible_orders(std::uint64_t lo, std::uint64_t hi);

}  // namespace octa
