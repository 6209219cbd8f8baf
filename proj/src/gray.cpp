#include "homtrace/gray.hpp"

namespace homtrace {

namespace {

uint64_t upow(uint64_t b, int e) {
    uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

void gray_append(const Ring& r, const RElem& a, GrayVector& out) {
    const int p = r.p(), k = r.k();
    const uint64_t rows = upow(p, k - 2);
    for (uint64_t i = 0; i < rows; ++i) {
        int base = (int)a.c[k - 1];
        uint64_t z = i;
        for (int l = 1; l <= k - 2; ++l) {
            base = (base + (int)(z % p) * (int)a.c[l]) % p;
            z /= p;
        }
        for (int eps = 0; eps < p; ++eps) out.push_back((Fp)((base + eps * (int)a.c[0]) % p));
    }
}

}  // namespace

GrayVector gray_map(const Ring& r, const RElem& a) {
    if (r.field().m() != 1)
        fail(errc::wrong_ring, "the Gray map is defined over the prime-coefficient ring only");
    GrayVector out;
    out.reserve(upow(r.p(), r.k() - 1));
    gray_append(r, a, out);
    return out;
}

GrayVector gray_map(const Ring& r, const std::vector<RElem>& v) {
    if (r.field().m() != 1)
        fail(errc::wrong_ring, "the Gray map is defined over the prime-coefficient ring only");
    GrayVector out;
    out.reserve(upow(r.p(), r.k() - 1) * v.size());
    for (const RElem& a : v) gray_append(r, a, out);
    return out;
}

uint64_t hom_weight(const Ring& r, const RElem& a) {
    if (r.is_zero(a)) return 0;
    const uint64_t q = r.q();
    if (r.in_socle(a)) return upow(q, r.k() - 1);
    return (q - 1) * upow(q, r.k() - 2);
}

uint64_t hom_weight(const Ring& r, const std::vector<RElem>& v) {
    uint64_t w = 0;
    for (const RElem& a : v) w += hom_weight(r, a);
    return w;
}

uint64_t hom_distance(const Ring& r, const std::vector<RElem>& x, const std::vector<RElem>& y) {
    if (x.size() != y.size()) fail(errc::length_mismatch, "vectors of different length");
    uint64_t w = 0;
    for (size_t i = 0; i < x.size(); ++i) w += hom_weight(r, r.sub(x[i], y[i]));
    return w;
}

uint64_t hamming_weight(const GrayVector& v) {
    uint64_t w = 0;
    for (Fp d : v) w += d != 0;
    return w;
}

std::string format_gray(const GrayVector& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

}  // namespace homtrace
