#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>

#include "homtrace/trace_code.hpp"

namespace homtrace {

using Complex = std::complex<double>;

// Theta(y) = sum_j omega^{y_j} with omega = exp(2*pi*i/p).
Complex theta(const GrayVector& y, int p);

// Hamming weight recovered from the exponential-sum identity
// sum_{s=1}^{p-1} Theta(s*y) = (p-1)*N - p*w_H(y); returns the (real) solved
// value, which callers round to the nearest integer.
double hamming_weight_via_theta(const GrayVector& y, int p);

// Exact quadratic Gauss sum over F_{p^m}.  value = (re + im*i) * sqrt(p) when
// times_sqrt_p, else (re + im*i); always purely real or purely imaginary.
struct GaussExact {
    int64_t re = 0;
    int64_t im = 0;
    bool times_sqrt_p = false;
    Complex value(int p) const;
};
GaussExact quadratic_gauss_exact(int p, int m);

// Multiplicative character x -> exp(2*pi*i * log_alpha(x) * shift / order);
// order must divide q - 1.  shift coprime to order gives exact order.
struct MultChar {
    uint64_t order = 1;
    uint64_t shift = 0;
};
Complex char_eval(const Field& f, const MultChar& chi, FElem x);

// G(chi, can) = sum_{x != 0} chi(x) * omega^{tr(x)}; -1 for the trivial chi.
Complex gauss_sum_numeric(const Field& f, const MultChar& chi);

// Additive-character sums over the nonzero squares / the nonsquares.
Complex qbar(const Field& f);
Complex nbar(const Field& f);

// N(b) = #{ j : tr(b * alpha^{N' j}) = 0, 0 <= j < n1 } counted directly and
// recovered from the Gauss-sum identity; disagreement beyond 1e-6 is an
// implementation fault and throws formula_mismatch.
struct ZeroTraceCount {
    uint64_t direct = 0;
    Complex via_formula;
};
ZeroTraceCount zero_trace_count(const Field& f, const D3Params& pr, FElem b);

enum class PredictionKind { point, interval };

struct Prediction {
    PredictionKind kind = PredictionKind::point;
    std::string provenance;
    // point: the full distribution including weight 0.
    std::map<uint64_t, uint64_t> entries;
    uint64_t total = 0;  // p^{km}
    // interval: containment range for every nonzero weight, a cap on how many
    // distinct nonzero weights may occur, and an upper bound on the minimum.
    uint64_t w_lo = 0;
    uint64_t w_hi = 0;
    uint64_t max_nonzero_weights = 0;
    uint64_t d_upper = 0;
};

// Smallest k' <= m with p^{k'} == -1 (mod n2), if any.
std::optional<int> semiprimitive_exponent(int p, uint64_t n2, int m);

// Closed-form distribution for the parameter arm the inputs fall into;
// throws no_closed_form when no arm applies.
Prediction predict_wdist(int p, int m, int k, Variant v,
                         std::optional<uint64_t> nprime = std::nullopt);

// The semiprimitive three-weight arm specifically; unlike predict_wdist this
// reports no_semiprimitive_k when the required exponent does not exist.
Prediction predict_semiprimitive(int p, int m, int k, uint64_t nprime);

bool prediction_matches(const Prediction& pred, const WeightDistribution& dist);

}  // namespace homtrace
