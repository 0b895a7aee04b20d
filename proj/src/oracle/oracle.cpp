#include "unitpoly/oracle.hpp"

#include <set>
#include <string>

#include "unitpoly/error.hpp"

namespace unitpoly::oracle {

namespace {

void check_budget(unsigned n, unsigned limit) {
  if (n == 0 || n > limit) {
    fail(ErrorCode::kBudgetExceeded, "oracle supports 1 <= n <= " + std::to_string(limit) + ", got " +
                                         std::to_string(n));
  }
}

std::uint64_t naive_eval(std::span<const std::uint64_t> coeffs, std::uint64_t x, std::uint64_t modulus) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    std::uint64_t power = 1 % modulus;
    for (std::size_t e = 0; e < i; ++e) power = (power * x) % modulus;
    total = (total + (coeffs[i] % modulus) * power) % modulus;
  }
  return total;
}

}  // namespace

FunctionTable function_of(const IntPoly& p, unsigned n, Domain domain) {
  check_budget(n, kMaxN);
  const mpz_class modulus = mpz_class(1) << n;
  std::vector<std::uint64_t> coeffs;
  for (const auto& c : p.coeffs()) {
    mpz_class r = c % modulus;
    if (r < 0) r += modulus;
    coeffs.push_back(r.get_ui());
  }
  return function_of(coeffs, n, domain);
}

FunctionTable function_of(std::span<const std::uint64_t> coeffs, unsigned n, Domain domain) {
  check_budget(n, kMaxN);
  const std::uint64_t modulus = std::uint64_t{1} << n;
  FunctionTable table{n, domain, {}};
  if (domain == Domain::kUnits) {
    for (std::uint64_t x = 1; x < modulus; x += 2) table.values.push_back(naive_eval(coeffs, x, modulus));
  } else {
    for (std::uint64_t x = 0; x < modulus; ++x) table.values.push_back(naive_eval(coeffs, x, modulus));
  }
  return table;
}

bool is_permutation(const FunctionTable& table) {
  std::set<std::uint64_t> image;
  for (std::uint64_t v : table.values) {
    if (table.domain == Domain::kUnits && v % 2 == 0) return false;
    if (!image.insert(v).second) return false;
  }
  return true;
}

std::uint64_t factorial_two_valuation(std::uint64_t i) {
  std::uint64_t total = 0;
  for (std::uint64_t k = 2; k <= i; ++k) {
    for (std::uint64_t m = k; m % 2 == 0; m /= 2) ++total;
  }
  return total;
}

std::vector<std::uint64_t> reduced_coefficient_bounds(unsigned n) {
  std::vector<std::uint64_t> bounds;
  for (std::uint64_t i = 0;; ++i) {
    const std::uint64_t used = i + factorial_two_valuation(i);
    if (used >= n) break;
    bounds.push_back(std::uint64_t{1} << (n - used));
  }
  return bounds;
}

ReducedStream::ReducedStream(unsigned n) {
  check_budget(n, 6);
  bounds_ = reduced_coefficient_bounds(n);
  for (auto b : bounds_) size_ *= b;
  restart();
}

void ReducedStream::restart() {
  current_.assign(bounds_.size(), 0);
  started_ = false;
  done_ = false;
}

bool ReducedStream::next(std::vector<std::uint64_t>& out) {
  if (done_) return false;
  if (started_) {
    std::size_t i = current_.size();
    while (i-- > 0) {
      if (++current_[i] < bounds_[i]) break;
      current_[i] = 0;
      if (i == 0) {
        done_ = true;
        return false;
      }
    }
  }
  started_ = true;
  out = current_;
  return true;
}

RingFunctionCensus ring_function_census(unsigned n, bool dedupe) {
  check_budget(n, 5);
  const std::uint64_t modulus = std::uint64_t{1} << n;
  std::vector<std::vector<std::uint64_t>> basis;
  std::vector<std::uint64_t> radix;
  for (std::uint64_t k = 0;; ++k) {
    const std::uint64_t v = factorial_two_valuation(k);
    if (v >= n) break;
    std::vector<std::uint64_t> column;
    for (std::uint64_t x = 0; x < modulus; ++x) {
      std::uint64_t value = 1;
      for (std::uint64_t j = 0; j < k; ++j) value = (value * ((x + modulus - j) % modulus)) % modulus;
      column.push_back(value);
    }
    basis.push_back(std::move(column));
    radix.push_back(std::uint64_t{1} << (n - v));
  }

  RingFunctionCensus census;
  std::set<std::vector<std::uint64_t>> distinct;
  std::vector<std::uint64_t> digits(radix.size(), 0);
  std::vector<std::uint64_t> values(modulus, 0);
  while (true) {
    ++census.functions;
    std::uint64_t hit = 0;
    bool perm = true;
    for (std::uint64_t v : values) {
      const std::uint64_t bit = std::uint64_t{1} << v;
      if ((hit & bit) != 0) {
        perm = false;
        break;
      }
      hit |= bit;
    }
    if (perm) ++census.permutations;
    if (dedupe) distinct.insert(values);

    // Odometer step: add basis[i]; on wrap, remove radix[i] copies of it.
    std::size_t i = 0;
    for (; i < radix.size(); ++i) {
      ++digits[i];
      if (digits[i] < radix[i]) {
        for (std::uint64_t x = 0; x < modulus; ++x) values[x] = (values[x] + basis[i][x]) % modulus;
        break;
      }
      digits[i] = 0;
      const std::uint64_t back = ((radix[i] - 1) % modulus);
      for (std::uint64_t x = 0; x < modulus; ++x) {
        values[x] = (values[x] + modulus - (back * basis[i][x]) % modulus) % modulus;
      }
    }
    if (i == radix.size()) break;
  }
  census.distinct = dedupe ? distinct.size() : 0;
  return census;
}

}  // namespace unitpoly::oracle
