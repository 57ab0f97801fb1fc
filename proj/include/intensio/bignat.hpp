#ifndef INTENSIO_BIGNAT_HPP
#define INTENSIO_BIGNAT_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace intensio {

struct CardinalityOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Arbitrary-precision unsigned integer, base 2^32. Supports exactly what
// exact cardinality arithmetic needs: add, multiply, pow, compare. Powers
// of two are built by a shift fast path so that chains like 2^(w*2^w)
// stay cheap; general pow guards against results too large to represent.
class BigNat {
public:
  BigNat() = default;
  BigNat(uint64_t v);

  static BigNat pow2(uint64_t exponent);
  static BigNat pow(const BigNat& base, const BigNat& exponent);

  BigNat operator+(const BigNat& other) const;
  BigNat operator*(const BigNat& other) const;

  int compare(const BigNat& other) const;
  bool operator==(const BigNat& o) const { return compare(o) == 0; }
  bool operator!=(const BigNat& o) const { return compare(o) != 0; }
  bool operator<(const BigNat& o) const { return compare(o) < 0; }
  bool operator<=(const BigNat& o) const { return compare(o) <= 0; }
  bool operator>(const BigNat& o) const { return compare(o) > 0; }
  bool operator>=(const BigNat& o) const { return compare(o) >= 0; }

  bool is_zero() const { return limbs_.empty(); }
  uint64_t bit_length() const;
  bool fits_u64() const { return limbs_.size() <= 2; }
  uint64_t to_u64() const;

  // decimal rendering; for very large values a compact "2^k" or
  // "~2^k" form is produced instead of millions of digits
  std::string to_string() const;

  // hard cap on representable results of pow (bits)
  static constexpr uint64_t kMaxBits = uint64_t(1) << 26;

private:
  std::vector<uint32_t> limbs_; // little-endian, no trailing zeros
  void trim();
};

} // namespace intensio

#endif
