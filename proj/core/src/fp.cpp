#include "cartansuper/fp.hpp"

namespace cartansuper {

bool is_odd_prime(std::uint32_t n) {
    if (n < 3 || n % 2 == 0) return false;
    for (std::uint32_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::uint32_t fp_pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
    std::uint32_t r = 1 % p;
    while (e) {
        if (e & 1) r = fp_mul(r, a, p);
        a = fp_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p) {
    if (a == 0) throw DivisionByZeroError();
    return fp_pow(a, p - 2, p);
}

namespace {

// C(a, b) for 0 <= b <= a < p; p is small, so plain 64-bit is exact.
std::uint32_t small_binom_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    std::uint64_t num = 1;
    if (b > a - b) b = a - b;
    for (std::uint32_t i = 0; i < b; ++i) {
        num = num * (a - i);
        num /= (i + 1);  // exact: prefix of Pascal row
    }
    return static_cast<std::uint32_t>(num % p);
}

}  // namespace

std::uint32_t binom_mod_p(std::uint64_t top, std::uint64_t bottom, std::uint32_t p) {
    std::uint32_t r = 1;
    while (top || bottom) {
        std::uint32_t td = static_cast<std::uint32_t>(top % p);
        std::uint32_t bd = static_cast<std::uint32_t>(bottom % p);
        if (bd > td) return 0;
        r = fp_mul(r, small_binom_mod(td, bd, p), p);
        top /= p;
        bottom /= p;
    }
    return r;
}

std::uint32_t binom_mod_p(const std::vector<std::int64_t>& top,
                          const std::vector<std::int64_t>& bottom, std::uint32_t p) {
    if (top.size() != bottom.size()) throw UsageError("multi-index length mismatch");
    std::uint32_t r = 1;
    for (std::size_t i = 0; i < top.size(); ++i) {
        if (top[i] < 0 || bottom[i] < 0) throw UsageError("negative multi-index entry");
        r = fp_mul(r, binom_mod_p(static_cast<std::uint64_t>(top[i]),
                                  static_cast<std::uint64_t>(bottom[i]), p),
                   p);
        if (r == 0) return 0;
    }
    return r;
}

FpScalar::FpScalar(std::int64_t value, std::uint32_t p) {
    if (!is_odd_prime(p)) throw UsageError("modulus must be an odd prime >= 3");
    p_ = p;
    value_ = fp_from_int(value, p);
}

}  // namespace cartansuper
