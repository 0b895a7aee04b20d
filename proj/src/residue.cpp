#include "unitpoly/residue.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

#include "unitpoly/error.hpp"

namespace unitpoly {

namespace {

using u128 = unsigned __int128;

constexpr unsigned kLimbBits = 64;

std::size_t limbs_for(unsigned n) { return (n + kLimbBits - 1) / kLimbBits; }

}  // namespace

Residue::Residue(unsigned n) : n_(n), limbs_(limbs_for(n), 0) {}

Residue Residue::from_u64(unsigned n, std::uint64_t value) {
  Residue r(n);
  if (!r.limbs_.empty()) r.limbs_[0] = value;
  r.mask();
  return r;
}

Residue Residue::from_mpz(unsigned n, const mpz_class& value) {
  mpz_class reduced;
  mpz_fdiv_r_2exp(reduced.get_mpz_t(), value.get_mpz_t(), n);
  Residue r(n);
  std::size_t count = 0;
  mpz_export(r.limbs_.data(), &count, -1, sizeof(Limb), 0, 0, reduced.get_mpz_t());
  assert(count <= r.limbs_.size());
  return r;
}

Residue Residue::from_decimal(unsigned n, std::string_view text) {
  mpz_class value;
  if (text.empty() || value.set_str(std::string(text), 10) != 0) {
    fail(ErrorCode::kInvalidArgument, "not a decimal integer: '" + std::string(text) + "'");
  }
  return from_mpz(n, value);
}

Residue Residue::power_of_two(unsigned n, unsigned k) {
  Residue r(n);
  if (k < n) r.set_bit(k);
  return r;
}

Residue Residue::random(unsigned n, unsigned bits, std::mt19937_64& rng) {
  Residue r(n);
  for (auto& limb : r.limbs_) limb = rng();
  r.mask();
  return r.truncated(std::min(bits, n));
}

mpz_class Residue::to_mpz() const {
  mpz_class out;
  if (!limbs_.empty()) {
    mpz_import(out.get_mpz_t(), limbs_.size(), -1, sizeof(Limb), 0, 0, limbs_.data());
  }
  return out;
}

std::string Residue::to_string() const { return to_mpz().get_str(10); }

bool Residue::is_zero() const noexcept {
  return std::all_of(limbs_.begin(), limbs_.end(), [](Limb l) { return l == 0; });
}

bool Residue::bit(unsigned k) const noexcept {
  if (k >= n_) return false;
  return ((limbs_[k / kLimbBits] >> (k % kLimbBits)) & 1U) != 0;
}

void Residue::set_bit(unsigned k) {
  assert(k < n_);
  limbs_[k / kLimbBits] |= Limb{1} << (k % kLimbBits);
}

unsigned Residue::valuation() const noexcept {
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    if (limbs_[i] != 0) {
      return static_cast<unsigned>(i * kLimbBits) +
             static_cast<unsigned>(std::countr_zero(limbs_[i]));
    }
  }
  return n_;
}

bool Residue::divisible_by_pow2(unsigned s) const noexcept { return valuation() >= s; }

Residue Residue::truncated(unsigned k) const {
  if (k >= n_) return *this;
  Residue r = *this;
  const std::size_t full = k / kLimbBits;
  const unsigned rem = k % kLimbBits;
  std::size_t start = full;
  if (rem != 0) {
    r.limbs_[full] &= (Limb{1} << rem) - 1;
    start = full + 1;
  }
  std::fill(r.limbs_.begin() + static_cast<std::ptrdiff_t>(start), r.limbs_.end(), 0);
  return r;
}

Residue Residue::shifted_right(unsigned s) const {
  Residue r(n_);
  if (s >= n_) return r;
  const std::size_t limb_shift = s / kLimbBits;
  const unsigned bit_shift = s % kLimbBits;
  const std::size_t count = limbs_.size();
  for (std::size_t i = 0; i + limb_shift < count; ++i) {
    Limb lo = limbs_[i + limb_shift] >> bit_shift;
    Limb hi = 0;
    if (bit_shift != 0 && i + limb_shift + 1 < count) {
      hi = limbs_[i + limb_shift + 1] << (kLimbBits - bit_shift);
    }
    r.limbs_[i] = lo | hi;
  }
  return r;
}

Residue Residue::shifted_left(unsigned s) const {
  Residue r(n_);
  if (s >= n_) return r;
  const std::size_t limb_shift = s / kLimbBits;
  const unsigned bit_shift = s % kLimbBits;
  const std::size_t count = limbs_.size();
  for (std::size_t i = count; i-- > limb_shift;) {
    Limb hi = limbs_[i - limb_shift] << bit_shift;
    Limb lo = 0;
    if (bit_shift != 0 && i > limb_shift) {
      lo = limbs_[i - limb_shift - 1] >> (kLimbBits - bit_shift);
    }
    r.limbs_[i] = hi | lo;
  }
  r.mask();
  return r;
}

Residue& Residue::operator+=(const Residue& other) {
  assert(n_ == other.n_);
  Limb carry = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    u128 sum = static_cast<u128>(limbs_[i]) + other.limbs_[i] + carry;
    limbs_[i] = static_cast<Limb>(sum);
    carry = static_cast<Limb>(sum >> kLimbBits);
  }
  mask();
  return *this;
}

Residue& Residue::operator-=(const Residue& other) {
  assert(n_ == other.n_);
  Limb borrow = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    const Limb a = limbs_[i];
    const Limb b = other.limbs_[i];
    const Limb d = a - b - borrow;
    borrow = (a < b || (a == b && borrow != 0)) ? 1 : 0;
    limbs_[i] = d;
  }
  mask();
  return *this;
}

Residue Residue::operator-() const {
  Residue zero(n_);
  return zero -= *this;
}

Residue operator*(const Residue& a, const Residue& b) {
  assert(a.n_ == b.n_);
  Residue r(a.n_);
  const std::size_t count = a.limbs_.size();
  // Only the low `count` limbs of the product survive reduction mod 2^n.
  for (std::size_t i = 0; i < count; ++i) {
    const Residue::Limb ai = a.limbs_[i];
    if (ai == 0) continue;
    Residue::Limb carry = 0;
    for (std::size_t j = 0; i + j < count; ++j) {
      u128 t = static_cast<u128>(ai) * b.limbs_[j] + r.limbs_[i + j] + carry;
      r.limbs_[i + j] = static_cast<Residue::Limb>(t);
      carry = static_cast<Residue::Limb>(t >> kLimbBits);
    }
  }
  r.mask();
  return r;
}

Residue& Residue::operator*=(const Residue& other) { return *this = *this * other; }

std::strong_ordering operator<=>(const Residue& a, const Residue& b) {
  if (a.n_ != b.n_) return a.n_ <=> b.n_;
  for (std::size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
  }
  return std::strong_ordering::equal;
}

void Residue::mask() noexcept {
  const unsigned rem = n_ % kLimbBits;
  if (rem != 0 && !limbs_.empty()) limbs_.back() &= (Limb{1} << rem) - 1;
}

Residue pow(Residue base, const mpz_class& exponent) {
  if (exponent < 0) fail(ErrorCode::kInvalidArgument, "negative exponent");
  Residue result = Residue::from_u64(base.modulus_bits(), 1);
  const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result *= result;
    if (mpz_tstbit(exponent.get_mpz_t(), i) != 0) result *= base;
  }
  return result;
}

Residue pow2k(Residue base, unsigned k) {
  for (unsigned i = 0; i < k; ++i) base *= base;
  return base;
}

}  // namespace unitpoly
