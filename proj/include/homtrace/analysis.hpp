#pragma once

#include <cstdint>
#include <optional>

#include "homtrace/char_sums.hpp"
#include "homtrace/trace_code.hpp"

namespace homtrace {

struct GriesmerVerdict {
    uint64_t n = 0;
    int K = 0;
    uint64_t d = 0;
    int p = 0;
    uint64_t sum_at_d = 0;
    uint64_t sum_at_d_plus_1 = 0;
    bool optimal = false;  // sum_at_d <= n < sum_at_d_plus_1
};

GriesmerVerdict griesmer_check(uint64_t n, int K, uint64_t d, int p);

// Minimal m certifying optimality for the variant (combine with the arm's
// parity conditions via optimality_applicable).
int optimality_threshold(int p, int k, Variant v);
bool optimality_applicable(int p, int m, int k, Variant v,
                           std::optional<uint64_t> nprime = std::nullopt);

// Structural certification that the dual code's minimum homogeneous weight is
// exactly 2(p-1)p^{k-2}: an exhaustive scan shows no single-coordinate dual
// codeword lighter than that, and a constructed two-coordinate dual codeword
// attains it.
struct DualDistance {
    uint64_t value = 0;
    bool no_light_single = false;
    uint64_t singles_scanned = 0;       // coordinate/value combinations tested
    size_t support[2] = {0, 0};         // witness coordinate positions
    RElem wit_alpha, wit_beta;          // witness values over the base ring
};

DualDistance dual_min_hom_distance(const TraceCode& code);

// Independent confirmation on tiny instances: scan all coordinate pairs and
// nonzero value pairs for a dual codeword of the claimed weight.
bool dual_weight2_exhaustive(const TraceCode& code, uint64_t budget = 500'000'000);

struct MinimalityVerdict {
    uint64_t w_min = 0;
    uint64_t w_max = 0;
    bool minimal = false;  // p * w_min > (p-1) * w_max
};

MinimalityVerdict minimality_check(const WeightDistribution& dist, int p);

// Hypotheses under which the sufficient condition is claimed to hold.
bool minimality_applicable(int p, int m, Variant v,
                           std::optional<uint64_t> nprime = std::nullopt);

struct BruteForceMinimality {
    bool all_minimal = false;
    uint64_t pairs_checked = 0;
};

// Exhaustive support-inclusion scan over all nonzero Gray-image codewords.
BruteForceMinimality bruteforce_minimality(const TraceCode& code, uint64_t budget = 1'000'000'000);

}  // namespace homtrace
