#pragma once

#include <cstdint>
#include <vector>

#include "cartansuper/errors.hpp"

namespace cartansuper {

bool is_odd_prime(std::uint32_t n);

// Raw residue arithmetic for hot loops.  Inputs must already be reduced.
inline std::uint32_t fp_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
}

inline std::uint32_t fp_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return a >= b ? a - b : a + p - b;
}

inline std::uint32_t fp_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

inline std::uint32_t fp_neg(std::uint32_t a, std::uint32_t p) { return a ? p - a : 0; }

inline std::uint32_t fp_from_int(std::int64_t v, std::uint32_t p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

std::uint32_t fp_pow(std::uint32_t a, std::uint64_t e, std::uint32_t p);
std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p);

/// C(top, bottom) mod p by Lucas' theorem.  Zero exactly when some base-p
/// digit of bottom exceeds the matching digit of top.
std::uint32_t binom_mod_p(std::uint64_t top, std::uint64_t bottom, std::uint32_t p);

/// Componentwise product of Lucas binomials for multi-indices.
std::uint32_t binom_mod_p(const std::vector<std::int64_t>& top,
                          const std::vector<std::int64_t>& bottom, std::uint32_t p);

/// A residue in F_p that carries its modulus.  Mixing moduli is a UsageError.
class FpScalar {
  public:
    FpScalar() = default;
    FpScalar(std::int64_t value, std::uint32_t p);

    std::uint32_t value() const { return value_; }
    std::uint32_t modulus() const { return p_; }
    bool is_zero() const { return value_ == 0; }

    FpScalar operator+(FpScalar o) const { return raw(fp_add(value_, same(o), p_), p_); }
    FpScalar operator-(FpScalar o) const { return raw(fp_sub(value_, same(o), p_), p_); }
    FpScalar operator*(FpScalar o) const { return raw(fp_mul(value_, same(o), p_), p_); }
    FpScalar operator-() const { return raw(fp_neg(value_, p_), p_); }
    FpScalar inv() const { return raw(fp_inv(value_, p_), p_); }

    bool operator==(const FpScalar&) const = default;

    static FpScalar raw(std::uint32_t value, std::uint32_t p) {
        FpScalar s;
        s.value_ = value;
        s.p_ = p;
        return s;
    }

  private:
    std::uint32_t same(FpScalar o) const {
        if (o.p_ != p_) throw UsageError("F_p modulus mismatch");
        return o.value_;
    }

    std::uint32_t value_ = 0;
    std::uint32_t p_ = 0;
};

}  // namespace cartansuper
