#include "cartansuper/witt.hpp"

#include <algorithm>
#include <sstream>

namespace cartansuper {

WittVector WittVector::basis_term(ShapePtr shape, MonoIdx f, int j, std::uint32_t coeff) {
    WittVector w(std::move(shape));
    w.add_term(j, f, coeff);
    return w;
}

WittVector WittVector::partial(ShapePtr shape, int j) {
    return basis_term(std::move(shape), 0, j);
}

const SuperPolynomial& WittVector::component(int j) const {
    if (!shape_ || j < 1 || j > shape_->s) throw UsageError("direction index outside Y");
    return comps_[j - 1];
}

void WittVector::add_term(int j, MonoIdx f, std::uint32_t coeff) {
    if (!shape_ || j < 1 || j > shape_->s) throw UsageError("direction index outside Y");
    comps_[j - 1].add_term(f, coeff);
}

bool WittVector::is_zero() const {
    for (const auto& c : comps_)
        if (!c.is_zero()) return false;
    return true;
}

int WittVector::parity() const {
    int par = -1;
    for (int j = 1; j <= shape_->s; ++j)
        for (const auto& [f, c] : comps_[j - 1].terms()) {
            int tp = witt_term_parity(*shape_, f, j);
            if (par < 0)
                par = tp;
            else if (par != tp)
                throw UsageError("Witt vector is not Z2-homogeneous");
        }
    return par;
}

std::int64_t WittVector::zdegree() const {
    bool seen = false;
    std::int64_t deg = 0;
    for (int j = 1; j <= shape_->s; ++j)
        for (const auto& [f, c] : comps_[j - 1].terms()) {
            std::int64_t td = witt_term_zdegree(*shape_, f);
            if (!seen) {
                deg = td;
                seen = true;
            } else if (deg != td) {
                throw UsageError("Witt vector is not Z-homogeneous");
            }
        }
    if (!seen) throw UsageError("zero vector has no Z-degree");
    return deg;
}

WittVector WittVector::operator+(const WittVector& o) const {
    check_same_shape(shape_, o.shape_);
    WittVector r = *this;
    for (int j = 0; j < shape_->s; ++j) r.comps_[j] = r.comps_[j] + o.comps_[j];
    return r;
}

WittVector WittVector::operator-(const WittVector& o) const {
    check_same_shape(shape_, o.shape_);
    WittVector r = *this;
    for (int j = 0; j < shape_->s; ++j) r.comps_[j] = r.comps_[j] - o.comps_[j];
    return r;
}

WittVector WittVector::scaled(std::uint32_t c) const {
    WittVector r(shape_);
    for (int j = 0; j < shape_->s; ++j) r.comps_[j] = comps_[j].scaled(c);
    return r;
}

bool WittVector::operator==(const WittVector& o) const { return comps_ == o.comps_; }

SparseVec WittVector::coordinates() const {
    SparseVec v;
    for (int j = 1; j <= shape_->s; ++j)
        for (const auto& [f, c] : comps_[j - 1].terms())
            v.emplace_back(static_cast<std::int64_t>(f) * shape_->s + (j - 1), c);
    std::sort(v.begin(), v.end());
    return v;
}

std::string witt_term_label(const ShapeParams& sh, MonoIdx f, int j) {
    std::ostringstream os;
    if (f != 0) os << mono_label(sh, f) << "*";
    os << "D" << j;
    return os.str();
}

std::string WittVector::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int j = 1; j <= shape_->s; ++j)
        for (const auto& [f, c] : comps_[j - 1].terms()) {
            if (!first) os << " + ";
            first = false;
            if (c != 1) os << c << "*";
            os << witt_term_label(*shape_, f, j);
        }
    return os.str();
}

namespace {

// [f D_i, g D_j] for single basis terms, accumulated into out with scale.
void bracket_term(const ShapeParams& sh, MonoIdx f, int i, MonoIdx g, int j,
                  std::uint32_t scale, WittVector& out) {
    int df = witt_term_parity(sh, f, i);
    int dg = witt_term_parity(sh, g, j);
    if (auto [c1, dg_mono] = apply_D_mono(sh, i, g); c1) {
        auto [c, mm] = mul_mono(sh, f, dg_mono);
        if (c) out.add_term(j, mm, fp_mul(scale, fp_mul(c, c1, sh.p), sh.p));
    }
    if (auto [c2, df_mono] = apply_D_mono(sh, j, f); c2) {
        auto [c, mm] = mul_mono(sh, g, df_mono);
        if (c) {
            std::uint32_t v = fp_mul(scale, fp_mul(c, c2, sh.p), sh.p);
            // -(-1)^{df dg}
            if ((df & dg) == 0) v = fp_neg(v, sh.p);
            out.add_term(i, mm, v);
        }
    }
}

}  // namespace

WittVector witt_bracket(const WittVector& a, const WittVector& b) {
    check_same_shape(a.shape(), b.shape());
    const ShapeParams& sh = *a.shape();
    WittVector out(a.shape());
    for (int i = 1; i <= sh.s; ++i)
        for (const auto& [f, ca] : a.component(i).terms())
            for (int j = 1; j <= sh.s; ++j)
                for (const auto& [g, cb] : b.component(j).terms())
                    bracket_term(sh, f, i, g, j, fp_mul(ca, cb, sh.p), out);
    return out;
}

SuperPolynomial apply_witt(const WittVector& d, const SuperPolynomial& f) {
    check_same_shape(d.shape(), f.shape());
    const ShapeParams& sh = *d.shape();
    SuperPolynomial r(f.shape());
    for (int j = 1; j <= sh.s; ++j) {
        if (d.component(j).is_zero()) continue;
        r = r + mul_poly(d.component(j), apply_D(j, f));
    }
    return r;
}

WittVector special_generator(const ShapePtr& shape, int i, int j, MonoIdx f) {
    const ShapeParams& sh = *shape;
    if (i < 1 || i > sh.s || j < 1 || j > sh.s) throw UsageError("variable index outside Y");
    WittVector out(shape);
    int df = mono_parity(sh, f);
    if (auto [c, mm] = apply_D_mono(sh, j, f); c) {
        std::uint32_t v = c;
        // -(-1)^{d(f)(tau(i)+tau(j))}
        if ((df & (sh.tau(i) ^ sh.tau(j))) == 0) v = fp_neg(v, sh.p);
        out.add_term(i, mm, v);
    }
    if (auto [c, mm] = apply_D_mono(sh, i, f); c) {
        std::uint32_t v = c;
        if (sh.tau(i) & sh.tau(j)) v = fp_neg(v, sh.p);
        out.add_term(j, mm, v);
    }
    return out;
}

WittVector special_generator(const ShapePtr& shape, int i, int j, const SuperPolynomial& f) {
    check_same_shape(shape, f.shape());
    WittVector out(shape);
    for (const auto& [mono, c] : f.terms())
        out = out + special_generator(shape, i, j, mono).scaled(c);
    return out;
}

}  // namespace cartansuper
