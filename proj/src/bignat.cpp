#include "intensio/bignat.hpp"

#include <algorithm>

namespace intensio {

BigNat::BigNat(uint64_t v) {
  if (v) limbs_.push_back(static_cast<uint32_t>(v & 0xffffffffu));
  if (v >> 32) limbs_.push_back(static_cast<uint32_t>(v >> 32));
}

void BigNat::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigNat BigNat::pow2(uint64_t exponent) {
  if (exponent >= kMaxBits)
    throw CardinalityOverflow("2^" + std::to_string(exponent) + " exceeds the representation cap");
  BigNat r;
  r.limbs_.assign(exponent / 32 + 1, 0);
  r.limbs_.back() = uint32_t(1) << (exponent % 32);
  return r;
}

BigNat BigNat::operator+(const BigNat& other) const {
  BigNat r;
  const auto& a = limbs_;
  const auto& b = other.limbs_;
  size_t n = std::max(a.size(), b.size());
  r.limbs_.resize(n, 0);
  uint64_t carry = 0;
  for (size_t i = 0; i < n; i++) {
    uint64_t sum = carry;
    if (i < a.size()) sum += a[i];
    if (i < b.size()) sum += b[i];
    r.limbs_[i] = static_cast<uint32_t>(sum & 0xffffffffu);
    carry = sum >> 32;
  }
  if (carry) r.limbs_.push_back(static_cast<uint32_t>(carry));
  return r;
}

BigNat BigNat::operator*(const BigNat& other) const {
  if (is_zero() || other.is_zero()) return BigNat();
  BigNat r;
  r.limbs_.assign(limbs_.size() + other.limbs_.size(), 0);
  for (size_t i = 0; i < limbs_.size(); i++) {
    uint64_t carry = 0;
    for (size_t j = 0; j < other.limbs_.size(); j++) {
      uint64_t cur = r.limbs_[i + j] + uint64_t(limbs_[i]) * other.limbs_[j] + carry;
      r.limbs_[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    size_t k = i + other.limbs_.size();
    while (carry) {
      uint64_t cur = r.limbs_[k] + carry;
      r.limbs_[k] = static_cast<uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
      k++;
    }
  }
  r.trim();
  return r;
}

BigNat BigNat::pow(const BigNat& base, const BigNat& exponent) {
  if (exponent.is_zero()) return BigNat(1);
  if (base.is_zero()) return BigNat();
  if (base == BigNat(1)) return BigNat(1);
  if (!exponent.fits_u64())
    throw CardinalityOverflow("exponent itself exceeds 2^64; result not representable");
  uint64_t e = exponent.to_u64();

  // fast path: base a power of two
  uint64_t bits = base.bit_length();
  bool pot = true;
  for (size_t i = 0; i + 1 < base.limbs_.size(); i++)
    if (base.limbs_[i]) pot = false;
  if (pot && (base.limbs_.back() & (base.limbs_.back() - 1)) == 0) {
    uint64_t log2base = bits - 1;
    if (e > kMaxBits / (log2base ? log2base : 1))
      throw CardinalityOverflow("power of two exceeds the representation cap");
    return pow2(log2base * e);
  }

  // estimate the result size before multiplying anything
  if (bits > 1 && e > kMaxBits / bits)
    throw CardinalityOverflow("power exceeds the representation cap");

  BigNat acc(1);
  BigNat sq = base;
  while (e) {
    if (e & 1) acc = acc * sq;
    e >>= 1;
    if (e) sq = sq * sq;
  }
  return acc;
}

int BigNat::compare(const BigNat& other) const {
  if (limbs_.size() != other.limbs_.size())
    return limbs_.size() < other.limbs_.size() ? -1 : 1;
  for (size_t i = limbs_.size(); i-- > 0;)
    if (limbs_[i] != other.limbs_[i]) return limbs_[i] < other.limbs_[i] ? -1 : 1;
  return 0;
}

uint64_t BigNat::bit_length() const {
  if (limbs_.empty()) return 0;
  uint32_t top = limbs_.back();
  uint64_t bits = (limbs_.size() - 1) * 32ull;
  while (top) {
    top >>= 1;
    bits++;
  }
  return bits;
}

uint64_t BigNat::to_u64() const {
  uint64_t v = 0;
  if (limbs_.size() > 2) throw CardinalityOverflow("value exceeds 64 bits");
  if (limbs_.size() > 1) v = uint64_t(limbs_[1]) << 32;
  if (!limbs_.empty()) v |= limbs_[0];
  return v;
}

std::string BigNat::to_string() const {
  if (is_zero()) return "0";
  // beyond ~64k bits decimal conversion is noise; report the binary size
  if (bit_length() > 65536) {
    // exact when a power of two
    bool pot = true;
    for (size_t i = 0; i + 1 < limbs_.size(); i++)
      if (limbs_[i]) pot = false;
    if (pot && (limbs_.back() & (limbs_.back() - 1)) == 0)
      return "2^" + std::to_string(bit_length() - 1);
    return "~2^" + std::to_string(bit_length() - 1);
  }
  std::vector<uint32_t> work = limbs_;
  std::string digits;
  while (!work.empty()) {
    uint64_t rem = 0;
    for (size_t i = work.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | work[i];
      work[i] = static_cast<uint32_t>(cur / 1000000000u);
      rem = cur % 1000000000u;
    }
    while (!work.empty() && work.back() == 0) work.pop_back();
    for (int k = 0; k < 9; k++) {
      digits.push_back(char('0' + rem % 10));
      rem /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  std::reverse(digits.begin(), digits.end());
  return digits;
}

} // namespace intensio
