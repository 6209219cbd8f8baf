#include "homtrace/char_sums.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace homtrace {

namespace {

using u128 = unsigned __int128;

u128 upow128(uint64_t b, int e) {
    u128 r = 1;
    while (e-- > 0) r *= b;
    return r;
}

uint64_t to_u64(u128 v, const char* what) {
    if (v > (u128)UINT64_MAX) fail(errc::invalid_argument, std::string(what) + " overflows 64 bits");
    return (uint64_t)v;
}

uint64_t isqrt128(u128 x) {
    if (x == 0) return 0;
    uint64_t r = (uint64_t)sqrtl((long double)x);
    while ((u128)r * r > x) --r;
    while ((u128)(r + 1) * (r + 1) <= x) ++r;
    return r;
}

Complex unit(double turns) { return std::polar(1.0, 2.0 * std::numbers::pi * turns); }

void check_char(const Field& f, const MultChar& chi) {
    if (chi.order == 0 || (f.q() - 1) % chi.order != 0)
        fail(errc::invalid_argument, "character order must divide q-1");
}

}  // namespace

Complex theta(const GrayVector& y, int p) {
    Complex s{0.0, 0.0};
    for (Fp d : y) s += unit((double)d / p);
    return s;
}

double hamming_weight_via_theta(const GrayVector& y, int p) {
    Complex acc{0.0, 0.0};
    GrayVector sy(y.size());
    for (int s = 1; s < p; ++s) {
        for (size_t i = 0; i < y.size(); ++i) sy[i] = (Fp)(y[i] * s % p);
        acc += theta(sy, p);
    }
    return ((double)(p - 1) * (double)y.size() - acc.real()) / p;
}

Complex GaussExact::value(int p) const {
    Complex v((double)re, (double)im);
    return times_sqrt_p ? v * std::sqrt((double)p) : v;
}

GaussExact quadratic_gauss_exact(int p, int m) {
    if (p == 2) fail(errc::even_characteristic, "quadratic sums need odd characteristic");
    if (m < 1) fail(errc::invalid_argument, "m must be positive");
    GaussExact g;
    const int64_t mag = (int64_t)to_u64(upow128(p, m / 2), "gauss magnitude");
    if (m % 2 == 0) {
        // real; positive exactly for p = 3 (mod 4) with m singly even
        g.re = (p % 4 == 3 && m % 4 == 2) ? mag : -mag;
    } else if (p % 4 == 1) {
        g.re = mag;
        g.times_sqrt_p = true;
    } else {
        g.im = ((m - 1) / 2 % 2 == 0) ? mag : -mag;
        g.times_sqrt_p = true;
    }
    return g;
}

Complex char_eval(const Field& f, const MultChar& chi, FElem x) {
    check_char(f, chi);
    const uint64_t t = f.log(x);
    const uint64_t e = t % chi.order * (chi.shift % chi.order) % chi.order;
    return unit((double)e / chi.order);
}

Complex gauss_sum_numeric(const Field& f, const MultChar& chi) {
    check_char(f, chi);
    const auto& tr = f.trace_table();
    const int p = f.p();
    const uint64_t c = chi.shift % chi.order;
    Complex s{0.0, 0.0};
    for (uint64_t t = 0; t + 1 < f.q(); ++t)
        s += unit((double)(t % chi.order * c % chi.order) / chi.order + (double)tr[f.exp(t)] / p);
    return s;
}

Complex qbar(const Field& f) {
    if (f.p() == 2) fail(errc::even_characteristic, "square classes need odd characteristic");
    const auto& tr = f.trace_table();
    Complex s{0.0, 0.0};
    for (uint64_t t = 0; t + 1 < f.q(); t += 2) s += unit((double)tr[f.exp(t)] / f.p());
    return s;
}

Complex nbar(const Field& f) {
    if (f.p() == 2) fail(errc::even_characteristic, "square classes need odd characteristic");
    const auto& tr = f.trace_table();
    Complex s{0.0, 0.0};
    for (uint64_t t = 1; t + 1 < f.q(); t += 2) s += unit((double)tr[f.exp(t)] / f.p());
    return s;
}

ZeroTraceCount zero_trace_count(const Field& f, const D3Params& pr, FElem b) {
    if (b == 0) fail(errc::zero_argument, "the count is defined for nonzero b");
    if (pr.nprime == 0 || pr.nprime2 == 0 || pr.n1 == 0)
        fail(errc::invalid_argument, "incomplete coset parameters");
    ZeroTraceCount r;
    for (uint64_t j = 0; j < pr.n1; ++j)
        if (f.trace(f.mul(b, f.pow(f.alpha(), pr.nprime * j))) == 0) ++r.direct;
    Complex acc((double)pr.n1, 0.0);
    for (uint64_t j = 0; j < pr.nprime2; ++j) {
        const Complex g = gauss_sum_numeric(f, MultChar{pr.nprime2, (pr.nprime2 - j) % pr.nprime2});
        const Complex ph = char_eval(f, MultChar{pr.nprime2, j}, b);
        acc += g * ph / (double)pr.nprime2;
    }
    r.via_formula = acc / (double)f.p();
    if (std::abs(r.via_formula.real() - (double)r.direct) > 1e-6 ||
        std::abs(r.via_formula.imag()) > 1e-6)
        fail(errc::formula_mismatch,
             "direct count " + std::to_string(r.direct) + " disagrees with the character formula");
    return r;
}

std::optional<int> semiprimitive_exponent(int p, uint64_t n2, int m) {
    if (n2 == 0) fail(errc::invalid_argument, "modulus must be positive");
    uint64_t v = 1 % n2;
    for (int kp = 1; kp <= m; ++kp) {
        v = v * ((uint64_t)p % n2) % n2;
        if (v == (n2 - 1) % n2) return kp;
    }
    return std::nullopt;
}

namespace {

Prediction point_prediction(std::string provenance, uint64_t total,
                            std::initializer_list<std::pair<uint64_t, uint64_t>> wf) {
    Prediction pr;
    pr.kind = PredictionKind::point;
    pr.provenance = std::move(provenance);
    pr.total = total;
    pr.entries[0] = 1;
    for (const auto& [w, f] : wf)
        if (f) pr.entries[w] += f;  // accumulate in case two arms land on one weight
    return pr;
}

// Shared arithmetic of the semiprimitive tables; nullopt when the stated
// positivity/range proviso fails.
std::optional<Prediction> table_prediction(int p, int m, uint64_t q, uint64_t total, uint64_t pl1,
                                           uint64_t n2, int kprime) {
    if (m % (2 * kprime) != 0)
        fail(errc::invalid_argument, "semiprimitive exponent does not halve m");
    const int t = m / (2 * kprime);
    const uint64_t rq = to_u64(upow128(p, m / 2), "sqrt(q)");
    const bool in_range = (u128)(n2 - 1) * (n2 - 1) < (u128)q;
    const u128 pkp1 = upow128(p, kprime) + 1;
    const bool special = n2 % 2 == 0 && p % 2 == 1 && t % 2 == 1 &&
                         (uint64_t)(pkp1 / n2) % 2 == 1 && in_range;
    uint64_t w_socle_rare, w_socle_bulk;
    std::string prov;
    if (special) {
        w_socle_rare = to_u64((u128)pl1 * (q - (n2 - 1) * rq) / n2, "weight");
        w_socle_bulk = to_u64((u128)pl1 * (q + rq) / n2, "weight");
        prov = "d3-semiprimitive-special";
    } else if (t % 2 == 0) {
        w_socle_rare = to_u64((u128)pl1 * (q + (n2 - 1) * rq) / n2, "weight");
        w_socle_bulk = to_u64((u128)pl1 * (q - rq) / n2, "weight");
        prov = "d3-semiprimitive-general";
    } else if (in_range) {
        w_socle_rare = to_u64((u128)pl1 * (q - (n2 - 1) * rq) / n2, "weight");
        w_socle_bulk = to_u64((u128)pl1 * (q + rq) / n2, "weight");
        prov = "d3-semiprimitive-general";
    } else {
        return std::nullopt;
    }
    const uint64_t w_gen = to_u64((u128)pl1 * (q - 1) / n2, "weight");
    return point_prediction(prov, total,
                            {{w_socle_rare, (q - 1) / n2},
                             {w_gen, total - q},
                             {w_socle_bulk, (n2 - 1) * (q - 1) / n2}});
}

}  // namespace

Prediction predict_wdist(int p, int m, int k, Variant v, std::optional<uint64_t> nprime) {
    if (p < 2 || m < 1 || k < 2) fail(errc::invalid_argument, "need p >= 2, m >= 1, k >= 2");
    if ((v == Variant::d3) != nprime.has_value())
        fail(errc::invalid_argument, "N' must be supplied exactly when the variant is d3");
    const u128 q128 = upow128(p, m);
    const uint64_t q = to_u64(q128, "q");
    const uint64_t total = to_u64(upow128(q, k), "codeword count");
    const uint64_t pl1 = to_u64(upow128(p, (k - 1) * (m + 1) - 1), "weight scale");

    switch (v) {
        case Variant::d1: {
            if (p == 2)
                fail(errc::even_characteristic, "the square-class set needs odd characteristic");
            if (m % 2 == 0) {
                const uint64_t rq = to_u64(upow128(p, m / 2), "sqrt(q)");
                const uint64_t w1 = to_u64((u128)(p - 1) * pl1 * (q - rq) / 2, "weight");
                const uint64_t w2 = to_u64((u128)(p - 1) * pl1 * (q - 1) / 2, "weight");
                const uint64_t w3 = to_u64((u128)(p - 1) * pl1 * (q + rq) / 2, "weight");
                return point_prediction("d1-three-weight-even-m", total,
                                        {{w1, (q - 1) / 2}, {w2, total - q}, {w3, (q - 1) / 2}});
            }
            if (p % 4 == 3) {
                const uint64_t w1 = to_u64((u128)(p - 1) * pl1 * (q - 1) / 2, "weight");
                const uint64_t w2 = to_u64((u128)(p - 1) * pl1 * q / 2, "weight");
                return point_prediction("d1-two-weight-odd-m", total,
                                        {{w1, total - q}, {w2, q - 1}});
            }
            fail(errc::no_closed_form,
                 "no closed form for the square-class set with m odd and p = 1 (mod 4)");
        }
        case Variant::d2: {
            const uint64_t w1 = to_u64((u128)(p - 1) * pl1 * (q - 1), "weight");
            const uint64_t w2 = to_u64((u128)(p - 1) * pl1 * q, "weight");
            return point_prediction("d2-two-weight", total, {{w1, total - q}, {w2, q - 1}});
        }
        case Variant::d3: {
            if (p == 2)
                fail(errc::no_closed_form, "the coset-representative arms assume odd characteristic");
            if (*nprime == 0 || (q - 1) % *nprime != 0)
                fail(errc::not_a_divisor,
                     "N' = " + std::to_string(*nprime) + " does not divide " + std::to_string(q - 1));
            const uint64_t n2 = std::gcd(*nprime, (q - 1) / (p - 1));
            if (n2 == 1) {
                if (m % 2 == 0 || p % 4 == 3) {
                    const uint64_t w1 = to_u64((u128)pl1 * (q - 1), "weight");
                    const uint64_t w2 = to_u64((u128)pl1 * q, "weight");
                    return point_prediction("d3-two-weight-split", total,
                                            {{w1, total - q}, {w2, q - 1}});
                }
                fail(errc::no_closed_form,
                     "no closed form for N'2 = 1 with m odd and p = 1 (mod 4)");
            }
            if (n2 > 2 && m % 2 == 0) {
                if (auto kp = semiprimitive_exponent(p, n2, m)) {
                    if (auto pred = table_prediction(p, m, q, total, pl1, n2, *kp)) return *pred;
                }
            }
            const bool in_range = (u128)(n2 - 1) * (n2 - 1) < q128;
            if (in_range && (m % 2 == 0 || p % 4 == 3)) {
                Prediction pr;
                pr.kind = PredictionKind::interval;
                pr.provenance = "d3-interval";
                pr.total = total;
                pr.max_nonzero_weights = n2 + 1;
                const u128 A = (u128)pl1 * q;
                const u128 B = (u128)pl1 * pl1 * (n2 - 1) * (n2 - 1) * q;
                const uint64_t s = isqrt128(B);
                pr.w_lo = to_u64((A - s + n2 - 1) / n2, "weight bound");
                pr.w_hi = to_u64((A + s) / n2, "weight bound");
                pr.d_upper = to_u64((u128)pl1 * (q - 1) / n2, "weight bound");
                return pr;
            }
            fail(errc::no_closed_form, "N'2 out of range for every closed-form arm");
        }
    }
    fail(errc::invalid_argument, "bad variant");
}

Prediction predict_semiprimitive(int p, int m, int k, uint64_t nprime) {
    if (p < 3 || m < 1 || k < 2) fail(errc::invalid_argument, "need odd p, m >= 1, k >= 2");
    const uint64_t q = to_u64(upow128(p, m), "q");
    if (nprime == 0 || (q - 1) % nprime != 0)
        fail(errc::not_a_divisor,
             "N' = " + std::to_string(nprime) + " does not divide " + std::to_string(q - 1));
    const uint64_t n2 = std::gcd(nprime, (q - 1) / (p - 1));
    if (m % 2 != 0 || n2 <= 2)
        fail(errc::hypothesis_violated, "the semiprimitive arm needs even m and N'2 > 2");
    const auto kp = semiprimitive_exponent(p, n2, m);
    if (!kp)
        fail(errc::no_semiprimitive_k,
             "no exponent k' <= m with p^{k'} = -1 (mod " + std::to_string(n2) + ")");
    const uint64_t total = to_u64(upow128(q, k), "codeword count");
    const uint64_t pl1 = to_u64(upow128(p, (k - 1) * (m + 1) - 1), "weight scale");
    const auto pred = table_prediction(p, m, q, total, pl1, n2, *kp);
    if (!pred) fail(errc::hypothesis_violated, "the table's positivity proviso fails");
    return *pred;
}

bool prediction_matches(const Prediction& pred, const WeightDistribution& dist) {
    if (pred.total != dist.total) return false;
    const auto zero = dist.entries.find(0);
    if (zero == dist.entries.end() || zero->second != 1) return false;
    if (pred.kind == PredictionKind::point) return pred.entries == dist.entries;
    uint64_t nonzero = 0, minw = 0;
    for (const auto& [w, f] : dist.entries) {
        if (w == 0) continue;
        ++nonzero;
        if (minw == 0) minw = w;
        if (w < pred.w_lo || w > pred.w_hi) return false;
    }
    return nonzero > 0 && nonzero <= pred.max_nonzero_weights && minw <= pred.d_upper;
}

}  // namespace homtrace
