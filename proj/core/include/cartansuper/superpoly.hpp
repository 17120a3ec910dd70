#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cartansuper/fp.hpp"
#include "cartansuper/shape.hpp"

namespace cartansuper {

/// Basis monomial x^{(alpha)} x^u of Lambda(m,n;t), packed as a dense index:
/// the mixed-radix value of alpha (radices pi_i + 1) shifted left by n, or'ed
/// with the n-bit Grassmann mask (bit k <-> variable x_{m+1+k}).
using MonoIdx = std::uint64_t;

struct SuperMonomial {
    std::vector<std::int64_t> alpha;
    std::uint32_t umask = 0;
};

MonoIdx encode_mono(const ShapeParams& sh, const SuperMonomial& mono);
SuperMonomial decode_mono(const ShapeParams& sh, MonoIdx idx);

inline std::uint32_t mono_umask(const ShapeParams& sh, MonoIdx idx) {
    return static_cast<std::uint32_t>(idx & ((MonoIdx{1} << sh.n) - 1));
}

int mono_parity(const ShapeParams& sh, MonoIdx idx);
std::int64_t mono_zdegree(const ShapeParams& sh, MonoIdx idx);
std::string mono_label(const ShapeParams& sh, MonoIdx idx);

/// x^{(a)} * x^{(b)} = C(a+b, a) x^{(a+b)}.  Returns coefficient 0 when the
/// product leaves A(m,t); the Lucas carry guarantees the coefficient vanishes
/// before the index would need clamping.
std::pair<FpScalar, std::vector<std::int64_t>> mul_divided(
    const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
    const ShapeParams& sh);

/// Grassmann product of increasing words given as bit masks.  Returns the
/// merge sign (+1/-1) and merged mask, or sign 0 on a repeated variable.
std::pair<int, std::uint32_t> mul_grassmann(std::uint32_t u, std::uint32_t v);

/// Monomial product at the packed level; coefficient 0 means the product is 0.
std::pair<std::uint32_t, MonoIdx> mul_mono(const ShapeParams& sh, MonoIdx a, MonoIdx b);

/// D_i applied to a basis monomial: alpha -> alpha - eps_i for even i, signed
/// Grassmann partial for odd i.  Coefficient 0 means the monomial dies.
std::pair<std::uint32_t, MonoIdx> apply_D_mono(const ShapeParams& sh, int i, MonoIdx mono);

/// Sparse element of Lambda(m,n;t).  Zero coefficients are never stored.
class SuperPolynomial {
  public:
    SuperPolynomial() = default;
    explicit SuperPolynomial(ShapePtr shape) : shape_(std::move(shape)) {}

    static SuperPolynomial monomial(ShapePtr shape, MonoIdx idx, std::uint32_t coeff = 1);
    static SuperPolynomial one(ShapePtr shape);

    const ShapePtr& shape() const { return shape_; }
    const std::map<MonoIdx, std::uint32_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// parity if all terms agree, -1 for the zero polynomial, throws if mixed
    int parity() const;

    void add_term(MonoIdx idx, std::uint32_t coeff);

    SuperPolynomial operator+(const SuperPolynomial& o) const;
    SuperPolynomial operator-(const SuperPolynomial& o) const;
    SuperPolynomial scaled(std::uint32_t c) const;
    bool operator==(const SuperPolynomial& o) const;

    std::string str() const;

  private:
    ShapePtr shape_;
    std::map<MonoIdx, std::uint32_t> terms_;
};

SuperPolynomial mul_poly(const SuperPolynomial& f, const SuperPolynomial& g);

/// The superderivation D_i extended linearly.
SuperPolynomial apply_D(int i, const SuperPolynomial& f);

void check_same_shape(const ShapePtr& a, const ShapePtr& b);

}  // namespace cartansuper
