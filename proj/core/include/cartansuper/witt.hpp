#pragma once

#include <string>
#include <vector>

#include "cartansuper/linalg.hpp"
#include "cartansuper/superpoly.hpp"

namespace cartansuper {

/// Element of W(m,n;t): a sum f_1 D_1 + ... + f_s D_s with f_j in Lambda.
/// The coordinate of the basis term x^{(alpha)}x^u D_j is mono*s + (j-1),
/// which is dense because packed monomial indices are contiguous.
class WittVector {
  public:
    WittVector() = default;
    explicit WittVector(ShapePtr shape)
        : shape_(std::move(shape)), comps_(shape_->s, SuperPolynomial(shape_)) {
        for (auto& c : comps_) c = SuperPolynomial(shape_);
    }

    static WittVector basis_term(ShapePtr shape, MonoIdx f, int j, std::uint32_t coeff = 1);
    /// The constant derivation D_j.
    static WittVector partial(ShapePtr shape, int j);

    const ShapePtr& shape() const { return shape_; }
    /// Coefficient polynomial of D_j, 1-based j.
    const SuperPolynomial& component(int j) const;
    void add_term(int j, MonoIdx f, std::uint32_t coeff);

    bool is_zero() const;
    /// d(f_j D_j) = d(f_j) + tau(j); -1 for zero, throws when terms disagree
    int parity() const;
    std::int64_t zdegree() const;

    WittVector operator+(const WittVector& o) const;
    WittVector operator-(const WittVector& o) const;
    WittVector scaled(std::uint32_t c) const;
    bool operator==(const WittVector& o) const;

    /// Flat coordinates in the monomial-times-direction basis of W.
    SparseVec coordinates() const;

    std::string str() const;

  private:
    ShapePtr shape_;
    std::vector<SuperPolynomial> comps_;
};

inline int witt_term_parity(const ShapeParams& sh, MonoIdx f, int j) {
    return (mono_parity(sh, f) + sh.tau(j)) & 1;
}

inline std::int64_t witt_term_zdegree(const ShapeParams& sh, MonoIdx f) {
    return mono_zdegree(sh, f) - 1;
}

std::string witt_term_label(const ShapeParams& sh, MonoIdx f, int j);

/// [f D_i, g D_j] = f D_i(g) D_j - (-1)^{d(fD_i) d(gD_j)} g D_j(f) D_i,
/// extended bilinearly with per-term parities.
WittVector witt_bracket(const WittVector& a, const WittVector& b);

/// D(f) for D = sum f_j D_j.
SuperPolynomial apply_witt(const WittVector& d, const SuperPolynomial& f);

/// D_{ij}(f) = f_i D_i + f_j D_j with f_i = -(-1)^{d(f)(tau(i)+tau(j))} D_j(f)
/// and f_j = (-1)^{tau(i)tau(j)} D_i(f), extended linearly over terms.
WittVector special_generator(const ShapePtr& shape, int i, int j, const SuperPolynomial& f);
WittVector special_generator(const ShapePtr& shape, int i, int j, MonoIdx f);

}  // namespace cartansuper
