#include "cartansuper/superpoly.hpp"

#include <bit>
#include <sstream>

namespace cartansuper {

void check_same_shape(const ShapePtr& a, const ShapePtr& b) {
    if (!a || !b || !(*a == *b)) throw UsageError("shape mismatch");
}

MonoIdx encode_mono(const ShapeParams& sh, const SuperMonomial& mono) {
    if (static_cast<int>(mono.alpha.size()) != sh.m) throw UsageError("alpha length != m");
    if (mono.umask >> sh.n) throw UsageError("Grassmann mask out of range");
    std::int64_t a = 0;
    for (int i = 0; i < sh.m; ++i) {
        if (mono.alpha[i] < 0 || mono.alpha[i] > sh.pi[i])
            throw UsageError("alpha outside A(m,t)");
        a += mono.alpha[i] * sh.stride[i];
    }
    return (static_cast<MonoIdx>(a) << sh.n) | mono.umask;
}

SuperMonomial decode_mono(const ShapeParams& sh, MonoIdx idx) {
    SuperMonomial mono;
    mono.umask = mono_umask(sh, idx);
    std::int64_t a = static_cast<std::int64_t>(idx >> sh.n);
    mono.alpha.resize(sh.m);
    for (int i = 0; i < sh.m; ++i) {
        mono.alpha[i] = a % (sh.pi[i] + 1);
        a /= (sh.pi[i] + 1);
    }
    return mono;
}

int mono_parity(const ShapeParams& sh, MonoIdx idx) {
    return std::popcount(mono_umask(sh, idx)) & 1;
}

std::int64_t mono_zdegree(const ShapeParams& sh, MonoIdx idx) {
    std::int64_t a = static_cast<std::int64_t>(idx >> sh.n);
    std::int64_t deg = std::popcount(mono_umask(sh, idx));
    for (int i = 0; i < sh.m; ++i) {
        deg += a % (sh.pi[i] + 1);
        a /= (sh.pi[i] + 1);
    }
    return deg;
}

std::string mono_label(const ShapeParams& sh, MonoIdx idx) {
    SuperMonomial mono = decode_mono(sh, idx);
    std::ostringstream os;
    bool any = false;
    for (int i = 0; i < sh.m; ++i) {
        if (mono.alpha[i] == 0) continue;
        any = true;
        os << "x" << (i + 1);
        if (mono.alpha[i] > 1) os << "^(" << mono.alpha[i] << ")";
    }
    for (int k = 0; k < sh.n; ++k)
        if (mono.umask >> k & 1) {
            any = true;
            os << "x" << (sh.m + 1 + k);
        }
    return any ? os.str() : "1";
}

std::pair<FpScalar, std::vector<std::int64_t>> mul_divided(
    const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
    const ShapeParams& sh) {
    if (static_cast<int>(a.size()) != sh.m || static_cast<int>(b.size()) != sh.m)
        throw UsageError("multi-index length != m");
    std::vector<std::int64_t> sum(sh.m);
    for (int i = 0; i < sh.m; ++i) sum[i] = a[i] + b[i];
    std::uint32_t c = binom_mod_p(sum, a, sh.p);
    for (int i = 0; i < sh.m; ++i)
        if (sum[i] > sh.pi[i]) {
            if (c != 0) throw InternalError("Lucas carry failed to kill a truncated product");
            return {FpScalar::raw(0, sh.p), a};  // arbitrary well-formed index
        }
    return {FpScalar::raw(c, sh.p), sum};
}

std::pair<int, std::uint32_t> mul_grassmann(std::uint32_t u, std::uint32_t v) {
    if (u & v) return {0, 0};
    // inversions between the word u followed by the word v
    int inv = 0;
    std::uint32_t w = v;
    while (w) {
        int j = std::countr_zero(w);
        inv += std::popcount(u >> (j + 1));
        w &= w - 1;
    }
    return {(inv & 1) ? -1 : +1, u | v};
}

std::pair<std::uint32_t, MonoIdx> mul_mono(const ShapeParams& sh, MonoIdx a, MonoIdx b) {
    auto [sgn, umask] = mul_grassmann(mono_umask(sh, a), mono_umask(sh, b));
    if (sgn == 0) return {0, 0};
    std::int64_t av = static_cast<std::int64_t>(a >> sh.n);
    std::int64_t bv = static_cast<std::int64_t>(b >> sh.n);
    std::uint32_t c = 1;
    std::int64_t sum = 0;
    for (int i = 0; i < sh.m; ++i) {
        std::int64_t radix = sh.pi[i] + 1;
        std::int64_t ai = av % radix, bi = bv % radix;
        av /= radix;
        bv /= radix;
        if (ai + bi > sh.pi[i]) return {0, 0};  // Lucas carry => coefficient 0
        c = fp_mul(c, binom_mod_p(static_cast<std::uint64_t>(ai + bi),
                                  static_cast<std::uint64_t>(ai), sh.p),
                   sh.p);
        if (c == 0) return {0, 0};
        sum += (ai + bi) * sh.stride[i];
    }
    if (sgn < 0) c = fp_neg(c, sh.p);
    return {c, (static_cast<MonoIdx>(sum) << sh.n) | umask};
}

std::pair<std::uint32_t, MonoIdx> apply_D_mono(const ShapeParams& sh, int i, MonoIdx mono) {
    if (i < 1 || i > sh.s) throw UsageError("variable index outside Y");
    if (i <= sh.m) {
        std::int64_t a = static_cast<std::int64_t>(mono >> sh.n);
        std::int64_t radix = sh.pi[i - 1] + 1;
        if ((a / sh.stride[i - 1]) % radix == 0) return {0, 0};
        return {1, mono - (static_cast<MonoIdx>(sh.stride[i - 1]) << sh.n)};
    }
    std::uint32_t umask = mono_umask(sh, mono);
    int bit = i - sh.m - 1;
    if (!(umask >> bit & 1)) return {0, 0};
    int pos = std::popcount(umask & ((1u << bit) - 1));  // variables before x_i in the word
    std::uint32_t c = (pos & 1) ? sh.p - 1 : 1;
    return {c, mono ^ (MonoIdx{1} << bit)};
}

SuperPolynomial SuperPolynomial::monomial(ShapePtr shape, MonoIdx idx, std::uint32_t coeff) {
    SuperPolynomial f(std::move(shape));
    f.add_term(idx, coeff);
    return f;
}

SuperPolynomial SuperPolynomial::one(ShapePtr shape) { return monomial(std::move(shape), 0); }

int SuperPolynomial::parity() const {
    if (terms_.empty()) return -1;
    int par = mono_parity(*shape_, terms_.begin()->first);
    for (const auto& [idx, c] : terms_)
        if (mono_parity(*shape_, idx) != par)
            throw UsageError("polynomial is not Z2-homogeneous");
    return par;
}

void SuperPolynomial::add_term(MonoIdx idx, std::uint32_t coeff) {
    coeff %= shape_->p;
    if (coeff == 0) return;
    auto it = terms_.find(idx);
    if (it == terms_.end()) {
        terms_.emplace(idx, coeff);
    } else {
        it->second = fp_add(it->second, coeff, shape_->p);
        if (it->second == 0) terms_.erase(it);
    }
}

SuperPolynomial SuperPolynomial::operator+(const SuperPolynomial& o) const {
    check_same_shape(shape_, o.shape_);
    SuperPolynomial r = *this;
    for (const auto& [idx, c] : o.terms_) r.add_term(idx, c);
    return r;
}

SuperPolynomial SuperPolynomial::operator-(const SuperPolynomial& o) const {
    check_same_shape(shape_, o.shape_);
    SuperPolynomial r = *this;
    for (const auto& [idx, c] : o.terms_) r.add_term(idx, fp_neg(c, shape_->p));
    return r;
}

SuperPolynomial SuperPolynomial::scaled(std::uint32_t c) const {
    SuperPolynomial r(shape_);
    for (const auto& [idx, v] : terms_) r.add_term(idx, fp_mul(v, c % shape_->p, shape_->p));
    return r;
}

bool SuperPolynomial::operator==(const SuperPolynomial& o) const {
    return terms_ == o.terms_;
}

std::string SuperPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (c != 1) os << c << "*";
        os << mono_label(*shape_, idx);
    }
    return os.str();
}

SuperPolynomial mul_poly(const SuperPolynomial& f, const SuperPolynomial& g) {
    check_same_shape(f.shape(), g.shape());
    const ShapeParams& sh = *f.shape();
    SuperPolynomial r(f.shape());
    for (const auto& [ia, ca] : f.terms())
        for (const auto& [ib, cb] : g.terms()) {
            auto [c, idx] = mul_mono(sh, ia, ib);
            if (c) r.add_term(idx, fp_mul(c, fp_mul(ca, cb, sh.p), sh.p));
        }
    return r;
}

SuperPolynomial apply_D(int i, const SuperPolynomial& f) {
    if (!f.shape()) throw UsageError("zero-shape polynomial");
    const ShapeParams& sh = *f.shape();
    SuperPolynomial r(f.shape());
    for (const auto& [idx, c] : f.terms()) {
        auto [dc, didx] = apply_D_mono(sh, i, idx);
        if (dc) r.add_term(didx, fp_mul(dc, c, sh.p));
    }
    return r;
}

}  // namespace cartansuper
