#ifndef KLEINCERT_PARITY_HPP
#define KLEINCERT_PARITY_HPP

#include <cstdint>

namespace kleincert {

/// A residue class modulo 2, the coefficient field of every chain and
/// cochain in this library. Addition is XOR, multiplication is AND.
class Bit {
  public:
    constexpr Bit() = default;

    /// Reduces any integer mod 2 (negative integers included).
    constexpr explicit Bit(std::int64_t v) : v_(static_cast<unsigned char>(v & 1)) {}

    constexpr unsigned value() const { return v_; }

    constexpr Bit operator+(Bit o) const { return Bit(v_ ^ o.v_); }
    constexpr Bit operator*(Bit o) const { return Bit(v_ & o.v_); }

    constexpr Bit& operator+=(Bit o) {
        v_ ^= o.v_;
        return *this;
    }

    friend constexpr bool operator==(Bit, Bit) = default;

  private:
    unsigned char v_ = 0;
};

/// epsilon(l) = (1 - (-1)^l) / 2: 0 for even l, 1 for odd l.
constexpr Bit epsilon(std::int64_t l) { return Bit(l); }

/// t(m) = floor(m / 2), rounding toward minus infinity for negative m
/// (so t(-5) = -3, not the truncated -2).
constexpr std::int64_t t_floor(std::int64_t m) { return (m - (m & 1)) / 2; }

/// t(m) reduced mod 2. Depends only on m mod 4: the pattern is 0,0,1,1.
constexpr Bit t_mod2(std::int64_t m) { return Bit(t_floor(m)); }

}  // namespace kleincert

#endif  // KLEINCERT_PARITY_HPP
