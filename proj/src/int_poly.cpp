#include "unitpoly/int_poly.hpp"

#include <algorithm>
#include <utility>

#include "unitpoly/error.hpp"

namespace unitpoly {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<mpz_class> parse_coefficient_list(std::string_view text) {
  std::vector<mpz_class> out;
  text = strip(text);
  if (text.empty()) fail(ErrorCode::kInvalidArgument, "empty coefficient list");
  while (true) {
    const auto comma = text.find(',');
    std::string_view item = strip(text.substr(0, comma));
    std::string token(item);
    if (!token.empty() && token.front() == '+') token.erase(0, 1);
    mpz_class value;
    const bool digits_only =
        !token.empty() && std::all_of(token.begin() + (token.front() == '-' ? 1 : 0), token.end(),
                                      [](char c) { return c >= '0' && c <= '9'; });
    if (!digits_only || token == "-" || value.set_str(token, 10) != 0) {
      fail(ErrorCode::kInvalidArgument, "bad coefficient '" + std::string(item) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(const mpz_class& c) { return IntPoly({c}); }

IntPoly IntPoly::monomial(const mpz_class& c, std::size_t degree) {
  std::vector<mpz_class> coeffs(degree + 1);
  coeffs[degree] = c;
  return IntPoly(std::move(coeffs));
}

IntPoly IntPoly::x() { return monomial(1, 1); }

IntPoly IntPoly::parse(std::string_view text) { return IntPoly(parse_coefficient_list(text)); }

std::optional<std::size_t> IntPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

mpz_class IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : mpz_class(0); }

std::string IntPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i != 0) out += ',';
    out += coeffs_[i].get_str(10);
  }
  return out;
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(out));
}

IntPoly operator*(const mpz_class& c, const IntPoly& p) {
  std::vector<mpz_class> out = p.coeffs_;
  for (auto& v : out) v *= c;
  return IntPoly(std::move(out));
}

bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

IntPoly IntPoly::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<mpz_class> out(k);
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return IntPoly(std::move(out));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BivariatePoly BivariatePoly::parse(std::string_view text) {
  BivariatePoly out;
  while (true) {
    const auto semi = text.find(';');
    out.coeffs.push_back(parse_coefficient_list(text.substr(0, semi)));
    if (semi == std::string_view::npos) break;
    text.remove_prefix(semi + 1);
  }
  return out;
}

mpz_class BivariatePoly::coeff(std::size_t i, std::size_t j) const {
  if (i >= coeffs.size() || j >= coeffs[i].size()) return 0;
  return coeffs[i][j];
}

std::size_t BivariatePoly::y_extent() const {
  std::size_t extent = 0;
  for (const auto& row : coeffs) extent = std::max(extent, row.size());
  return extent;
}

IntPoly BivariatePoly::specialize_y(const mpz_class& y) const {
  std::vector<mpz_class> out(x_extent());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    mpz_class power = 1;
    for (std::size_t j = 0; j < coeffs[i].size(); ++j) {
      out[i] += coeffs[i][j] * power;
      power *= y;
    }
  }
  return IntPoly(std::move(out));
}

IntPoly BivariatePoly::specialize_x(const mpz_class& x) const {
  std::vector<mpz_class> out(y_extent());
  mpz_class power = 1;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    for (std::size_t j = 0; j < coeffs[i].size(); ++j) out[j] += coeffs[i][j] * power;
    power *= x;
  }
  return IntPoly(std::move(out));
}

}  // namespace unitpoly
