#include "homtrace/chain_ring.hpp"

#include <sstream>

namespace homtrace {

Ring::Ring(Field f, int k) : f_(std::move(f)), k_(k) {
    if (k < 2) fail(errc::invalid_argument, "nilpotency index k must be >= 2");
    qpow_.resize(k + 1);
    qpow_[0] = 1;
    for (int i = 1; i <= k; ++i) {
        if (qpow_[i - 1] > (uint64_t)1 << 56) fail(errc::invalid_argument, "ring too large");
        qpow_[i] = qpow_[i - 1] * f_.q();
    }
}

uint64_t Ring::size() const { return qpow_[k_]; }

void Ring::check(const RElem& a) const {
    if ((int)a.c.size() != k_)
        fail(errc::context_mismatch, "element has " + std::to_string(a.c.size()) +
                                         " coefficients, ring expects " + std::to_string(k_));
}

RElem Ring::zero() const { return RElem{std::vector<FElem>(k_, 0)}; }

RElem Ring::one() const {
    RElem r = zero();
    r.c[0] = 1;
    return r;
}

RElem Ring::u_pow(int j) const {
    if (j < 0 || j >= k_) fail(errc::invalid_argument, "u^j with j outside [0, k)");
    RElem r = zero();
    r.c[j] = 1;
    return r;
}

RElem Ring::from_coeffs(std::vector<FElem> c) const {
    RElem r{std::move(c)};
    check(r);
    for (FElem e : r.c)
        if (e >= f_.q()) fail(errc::invalid_argument, "coefficient index out of range");
    return r;
}

RElem Ring::add(const RElem& a, const RElem& b) const {
    check(a);
    check(b);
    RElem r = zero();
    for (int i = 0; i < k_; ++i) r.c[i] = f_.add(a.c[i], b.c[i]);
    return r;
}

RElem Ring::sub(const RElem& a, const RElem& b) const {
    check(a);
    check(b);
    RElem r = zero();
    for (int i = 0; i < k_; ++i) r.c[i] = f_.sub(a.c[i], b.c[i]);
    return r;
}

RElem Ring::neg(const RElem& a) const {
    check(a);
    RElem r = zero();
    for (int i = 0; i < k_; ++i) r.c[i] = f_.neg(a.c[i]);
    return r;
}

RElem Ring::mul(const RElem& a, const RElem& b) const {
    check(a);
    check(b);
    RElem r = zero();
    for (int i = 0; i < k_; ++i) {
        if (!a.c[i]) continue;
        for (int j = 0; i + j < k_; ++j) {
            if (!b.c[j]) continue;
            r.c[i + j] = f_.add(r.c[i + j], f_.mul(a.c[i], b.c[j]));
        }
    }
    return r;
}

RElem Ring::inv(const RElem& a) const {
    check(a);
    if (!is_unit(a)) fail(errc::division_by_zero, "inverse of a non-unit");
    RElem z = zero();
    FElem a0inv = f_.inv(a.c[0]);
    z.c[0] = a0inv;
    for (int t = 1; t < k_; ++t) {
        FElem s = 0;
        for (int i = 1; i <= t; ++i) s = f_.add(s, f_.mul(a.c[i], z.c[t - i]));
        z.c[t] = f_.neg(f_.mul(a0inv, s));
    }
    return z;
}

RElem Ring::scalar(FElem s, const RElem& a) const {
    check(a);
    RElem r = zero();
    for (int i = 0; i < k_; ++i) r.c[i] = f_.mul(s, a.c[i]);
    return r;
}

bool Ring::is_zero(const RElem& a) const {
    check(a);
    for (FElem e : a.c)
        if (e) return false;
    return true;
}

bool Ring::is_unit(const RElem& a) const {
    check(a);
    return a.c[0] != 0;
}

bool Ring::in_maximal_ideal(const RElem& a) const { return !is_unit(a); }

bool Ring::in_socle(const RElem& a) const {
    check(a);
    for (int i = 0; i + 1 < k_; ++i)
        if (a.c[i]) return false;
    return true;
}

uint64_t Ring::encode(const RElem& a) const {
    check(a);
    uint64_t v = 0;
    for (int i = k_ - 1; i >= 0; --i) v = v * f_.q() + a.c[i];
    return v;
}

RElem Ring::decode(uint64_t v) const {
    RElem r = zero();
    for (int i = 0; i < k_; ++i) {
        r.c[i] = (FElem)(v % f_.q());
        v /= f_.q();
    }
    return r;
}

uint64_t Ring::subset_size(Subset s) const {
    switch (s) {
        case Subset::all: return qpow_[k_];
        case Subset::units: return (f_.q() - 1) * qpow_[k_ - 1];
        case Subset::maximal_ideal: return qpow_[k_ - 1];
        case Subset::socle_units: return f_.q() - 1;
    }
    fail(errc::invalid_argument, "bad subset");
}

RElem Ring::subset_at(Subset s, uint64_t i) const {
    if (i >= subset_size(s)) fail(errc::invalid_argument, "enumeration index out of range");
    RElem r = zero();
    auto fill_tail = [&](uint64_t idx, int from) {
        // lex decode of coefficients from..k-1, earlier coefficient most significant
        for (int j = k_ - 1; j >= from; --j) {
            r.c[j] = f_.from_lex_rank(idx % f_.q());
            idx /= f_.q();
        }
    };
    switch (s) {
        case Subset::all:
            fill_tail(i, 0);
            return r;
        case Subset::units:
            r.c[0] = f_.from_lex_rank(1 + i / qpow_[k_ - 1]);
            fill_tail(i % qpow_[k_ - 1], 1);
            return r;
        case Subset::maximal_ideal:
            fill_tail(i, 1);
            return r;
        case Subset::socle_units:
            r.c[k_ - 1] = f_.from_lex_rank(1 + i);
            return r;
    }
    fail(errc::invalid_argument, "bad subset");
}

std::string Ring::to_text(const RElem& a) const {
    check(a);
    std::string s;
    for (int i = 0; i < k_; ++i) {
        if (i) s += ';';
        s += format_poly(f_.coeffs(a.c[i]));
    }
    return s;
}

RElem Ring::parse(std::string_view sv) const {
    std::string s(sv);
    std::stringstream ss(s);
    std::string block;
    std::vector<FElem> c;
    while (std::getline(ss, block, ';'))
        c.push_back(f_.from_coeffs(parse_poly(block, f_.p())));
    return from_coeffs(std::move(c));
}

RElem generalized_trace(const Ring& ext, const Ring& base, const RElem& a) {
    if (ext.k() != base.k() || ext.p() != base.p() || base.field().m() != 1)
        fail(errc::context_mismatch, "trace needs matching k and a prime base ring");
    RElem r = base.zero();
    for (int i = 0; i < ext.k(); ++i) r.c[i] = (FElem)ext.field().trace(a.c[i]);
    return r;
}

RElem embed(const Ring& base, const Ring& ext, const RElem& a) {
    if (ext.k() != base.k() || ext.p() != base.p() || base.field().m() != 1)
        fail(errc::context_mismatch, "embedding needs matching k and a prime base ring");
    RElem r = ext.zero();
    for (int i = 0; i < ext.k(); ++i) r.c[i] = ext.field().embed_prime((Fp)a.c[i]);
    return r;
}

bool same_ring(const Ring& a, const Ring& b) {
    return a.k() == b.k() && same_field(a.field(), b.field());
}

}  // namespace homtrace
