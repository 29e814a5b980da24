// Copyright 2026 The planarflow Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Counting bound on how many invocations of an exact planar multiflow step
// a face-by-face routing scheme needs. All logarithms are natural.

#ifndef PLANARFLOW_BOUNDS_HPP_
#define PLANARFLOW_BOUNDS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace planarflow {

using BigInt = boost::multiprecision::cpp_int;
using BigReal = boost::multiprecision::cpp_bin_float_50;

// binom(2n, n) / (n + 1).
BigInt catalan(std::uint64_t n);

// (2c)! / (2^c c!) * 2c: perfect matchings of K_{2c}, times 2c.
// Throws std::invalid_argument for c == 0.
BigInt matching_glue_bound(std::uint64_t c);

// (2n)! / (n! 2^n), the number of perfect matchings on 2n points.
BigInt demand_graph_count(std::uint64_t n);

// n!! for n >= 0, with 0!! = (-1)!! = 1 handled by callers passing 0.
BigInt double_factorial(std::uint64_t n);

BigInt factorial(std::uint64_t n);

// ln(x) for x > 0.
double log_big(const BigInt& x);

// ln(n!) by summing ln(i).
long double log_factorial(std::uint64_t n);

// ln(m_c^{2n} * C_n^c).
double solvable_capacity_log(std::uint64_t n, std::uint64_t c);

// ln((2n)! / (n! 2^n)).
double demand_graph_count_log(std::uint64_t n);

// Smallest c >= 1 with m_c^{2n} C_n^c >= (2n-1)!!. Requires n >= 2.
std::uint64_t min_invocations(std::uint64_t n);

// floor(ln n / (4 ln ln n)) - 2, the invocation count at which the
// non-coverage chain is evaluated. Defined for n >= 3.
std::int64_t chain_invocations(const BigInt& n);

struct ChainStep {
  std::string name;
  BigReal lhs;  // natural log of the left side
  BigReal rhs;  // natural log of the right side
  bool strict = false;
  bool holds = false;
};

struct BoundReport {
  BigInt n;
  std::uint64_t c = 0;
  BigReal log_solvable;
  BigReal log_total;
  bool solvable_covers_total = false;
  std::vector<ChainStep> chain_steps;
  // Exact values, filled when n <= kExactReportLimit.
  std::optional<BigInt> catalan_n;
  std::optional<BigInt> glue_c;
  std::optional<BigInt> total;
  std::optional<BigInt> solvable;

  bool chain_holds() const;
};

inline constexpr std::uint64_t kExactReportLimit = 64;

// Evaluates coverage and every step of the non-coverage chain at (n, c).
BoundReport bound_report(const BigInt& n, std::uint64_t c);

// bound_report at c = chain_invocations(n). Throws std::domain_error
// ("n too small") when that c is below 1.
BoundReport verify_chain(const BigInt& n);

std::string format_report(const BoundReport& report);

}  // namespace planarflow

#endif  // PLANARFLOW_BOUNDS_HPP_
