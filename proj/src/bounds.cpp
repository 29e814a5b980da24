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

#include "planarflow/bounds.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <boost/math/special_functions/gamma.hpp>

namespace planarflow {

BigInt factorial(std::uint64_t n) {
  BigInt out = 1;
  for (std::uint64_t i = 2; i <= n; ++i) out *= i;
  return out;
}

BigInt double_factorial(std::uint64_t n) {
  BigInt out = 1;
  for (std::uint64_t i = n; i > 1; i -= 2) out *= i;
  return out;
}

BigInt catalan(std::uint64_t n) {
  // C_{i+1} = C_i * 2(2i+1) / (i+2), exact at every step.
  BigInt c = 1;
  for (std::uint64_t i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

BigInt matching_glue_bound(std::uint64_t c) {
  if (c == 0) throw std::invalid_argument("matching_glue_bound needs c >= 1");
  BigInt num = factorial(2 * c);
  BigInt den = factorial(c) << static_cast<unsigned>(c);
  return num / den * (2 * c);
}

BigInt demand_graph_count(std::uint64_t n) {
  return factorial(2 * n) / (factorial(n) << static_cast<unsigned>(n));
}

double log_big(const BigInt& x) {
  if (x <= 0) throw std::domain_error("log of a nonpositive integer");
  const unsigned msb = boost::multiprecision::msb(x);
  const unsigned shift = msb > 62 ? msb - 62 : 0;
  const auto top = static_cast<std::uint64_t>(x >> shift);
  return static_cast<double>(std::log(static_cast<long double>(top)) +
                             shift * std::log(2.0L));
}

long double log_factorial(std::uint64_t n) {
  long double sum = 0;
  for (std::uint64_t i = 2; i <= n; ++i) sum += std::log(static_cast<long double>(i));
  return sum;
}

namespace {

long double log_glue(std::uint64_t c) {
  return log_factorial(2 * c) - log_factorial(c) -
         static_cast<long double>(c) * std::log(2.0L) +
         std::log(2.0L * static_cast<long double>(c));
}

long double log_catalan(std::uint64_t n) {
  return log_factorial(2 * n) - 2 * log_factorial(n) -
         std::log(static_cast<long double>(n) + 1);
}

}  // namespace

double solvable_capacity_log(std::uint64_t n, std::uint64_t c) {
  if (n == 0 || c == 0)
    throw std::invalid_argument("solvable_capacity_log needs n, c >= 1");
  return static_cast<double>(2.0L * static_cast<long double>(n) * log_glue(c) +
                             static_cast<long double>(c) * log_catalan(n));
}

double demand_graph_count_log(std::uint64_t n) {
  return static_cast<double>(log_factorial(2 * n) - log_factorial(n) -
                             static_cast<long double>(n) * std::log(2.0L));
}

std::uint64_t min_invocations(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("min_invocations needs n >= 2");
  const double target = demand_graph_count_log(n);
  for (std::uint64_t c = 1;; ++c)
    if (solvable_capacity_log(n, c) >= target) return c;
}

std::int64_t chain_invocations(const BigInt& n) {
  if (n < 3) throw std::domain_error("chain needs n >= 3");
  const BigReal ln_n = log(BigReal(n));
  const BigReal ratio = ln_n / (4 * log(ln_n));
  return static_cast<std::int64_t>(floor(ratio)) - 2;
}

bool BoundReport::chain_holds() const {
  for (const ChainStep& s : chain_steps)
    if (!s.holds) return false;
  return true;
}

namespace {

BigReal lgamma_big(const BigReal& x) { return boost::math::lgamma(x); }

ChainStep step(std::string name, BigReal lhs, BigReal rhs, bool strict) {
  ChainStep s{std::move(name), lhs, rhs, strict, false};
  const BigReal slack = BigReal("1e-40") * (abs(rhs) > 1 ? abs(rhs) : BigReal(1));
  s.holds = strict ? lhs < rhs : lhs <= rhs + slack;
  return s;
}

}  // namespace

BoundReport bound_report(const BigInt& n, std::uint64_t c) {
  if (n < 3) throw std::domain_error("bound report needs n >= 3");
  if (c == 0) throw std::invalid_argument("bound report needs c >= 1");
  BoundReport r;
  r.n = n;
  r.c = c;
  const BigReal nr(n), cr(c), S = cr + 2;
  const BigReal ln2 = log(BigReal(2));
  const BigReal e = boost::math::constants::e<BigReal>();
  const BigReal L = log(nr), LL = log(L);

  const BigReal ln_fact_n = lgamma_big(nr + 1);
  const BigReal ln_fact_2n = lgamma_big(2 * nr + 1);
  const BigReal ln_catalan = ln_fact_2n - 2 * ln_fact_n - log(nr + 1);
  const BigReal ln_glue = lgamma_big(2 * cr + 1) - lgamma_big(cr + 1) - cr * ln2 +
                          log(2 * cr);
  r.log_total = ln_fact_2n - ln_fact_n - nr * ln2;
  r.log_solvable = 2 * nr * ln_glue + cr * ln_catalan;
  r.solvable_covers_total = r.log_solvable >= r.log_total;

  if (n <= kExactReportLimit) {
    const auto nn = static_cast<std::uint64_t>(n);
    r.catalan_n = catalan(nn);
    r.glue_c = matching_glue_bound(c);
    r.total = demand_graph_count(nn);
    r.solvable = pow(*r.glue_c, static_cast<unsigned>(2 * nn)) *
                 pow(*r.catalan_n, static_cast<unsigned>(c));
    r.solvable_covers_total = *r.solvable >= *r.total;
  }

  auto& out = r.chain_steps;
  // Bound on the glue factor.
  const BigReal half_even = (cr - 1) * ln2 + lgamma_big(cr + 1) + log(2 * cr);
  out.push_back(step("m_c = (2c-1)!!*2c <= ((2c)!!/2)*2c", ln_glue, half_even, false));
  const BigReal two_c_fact = cr * ln2 + lgamma_big(cr + 2);
  out.push_back(step("2^(c-1)*c!*2c <= 2^c*(c+1)!", half_even, two_c_fact, false));
  const BigReal stirling_side = cr * ln2 + 1 + S * (log(S) - 1);
  out.push_back(step("2^c*(c+1)! <= 2^c*e*((c+2)/e)^(c+2)", two_c_fact,
                     stirling_side, false));
  const BigReal glue_cap = S * log(2 * S / e);
  out.push_back(step("(e/4)*(2(c+2)/e)^(c+2) <= (2(c+2)/e)^(c+2)",
                     log(e / 4) + glue_cap, glue_cap, false));
  out.push_back(step("C_n <= 2^(2n)", ln_catalan, 2 * nr * ln2, false));
  // Product bound.
  const BigReal product_cap = 2 * nr * glue_cap + 2 * nr * cr * ln2;
  out.push_back(step("m_c^(2n)*C_n^c <= (2(c+2)/e)^((c+2)2n)*2^(2nc)",
                     r.log_solvable, product_cap, false));
  const BigReal merged = 2 * nr * S * log(4 * S / e);
  out.push_back(step("(2(c+2)/e)^((c+2)2n)*2^(2nc) <= (4(c+2)/e)^((c+2)2n)",
                     product_cap, merged, false));
  const BigReal unscaled = -nr + 2 * nr * S * log(4 * S);
  out.push_back(step("(4(c+2)/e)^((c+2)2n) <= e^-n*(4(c+2))^((c+2)2n)", merged,
                     unscaled, false));
  const BigReal substituted = -nr + (2 * nr * L / (4 * LL)) * log(L / LL);
  out.push_back(step(
      "e^-n*(4(c+2))^((c+2)2n) <= e^-n*(ln n/ln ln n)^(2n ln n/(4 ln ln n))",
      unscaled, substituted, false));
  const BigReal root = -nr + nr * L / 2;
  out.push_back(step(
      "e^-n*(ln n/ln ln n)^(2n ln n/(4 ln ln n)) <= e^-n*n^(n/2)", substituted,
      root, false));
  const BigReal n_over_e = nr * (L - 1);
  out.push_back(step("e^-n*n^(n/2) < (n/e)^n", root, n_over_e, true));
  out.push_back(step("(n/e)^n < e*(n/e)^n", n_over_e, n_over_e + 1, true));
  out.push_back(step("e*(n/e)^n < n!", n_over_e + 1, ln_fact_n, true));
  const BigReal even_df = (nr - 1) * ln2 + lgamma_big(nr);
  out.push_back(step("n! < 2^(n-1)*(n-1)! = (2n-2)!!", ln_fact_n, even_df, true));
  out.push_back(step("(2n-2)!! <= (2n-1)!!", even_df, r.log_total, false));
  out.push_back(step("m_c^(2n)*C_n^c < (2n-1)!!", r.log_solvable, r.log_total, true));
  return r;
}

BoundReport verify_chain(const BigInt& n) {
  if (n < 3) throw std::domain_error("n too small: chain needs n >= 3");
  const std::int64_t c = chain_invocations(n);
  if (c < 1)
    throw std::domain_error("n too small: floor(ln n/(4 ln ln n)) - 2 = " +
                            std::to_string(c) + " < 1");
  return bound_report(n, static_cast<std::uint64_t>(c));
}

std::string format_report(const BoundReport& r) {
  std::ostringstream out;
  auto num = [](const BigReal& x) {
    std::ostringstream s;
    s << std::setprecision(12) << x;
    return s.str();
  };
  out << "n                " << r.n << '\n';
  out << "c                " << r.c << '\n';
  if (r.catalan_n) out << "C_n              " << *r.catalan_n << '\n';
  if (r.glue_c) out << "m_c              " << *r.glue_c << '\n';
  if (r.total) out << "total            " << *r.total << '\n';
  if (r.solvable) out << "solvable         " << *r.solvable << '\n';
  out << "ln solvable      " << num(r.log_solvable) << '\n';
  out << "ln total         " << num(r.log_total) << '\n';
  out << "verdict          "
      << (r.solvable_covers_total ? "covered" : "not covered") << '\n';
  for (const ChainStep& s : r.chain_steps) {
    out << (s.holds ? "holds  " : "FAILS  ") << std::left << std::setw(72)
        << s.name << std::right << " lhs " << num(s.lhs) << " rhs "
        << num(s.rhs) << '\n';
  }
  return out.str();
}

}  // namespace planarflow
