#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "homtrace/defining_sets.hpp"
#include "homtrace/gray.hpp"

namespace homtrace {

struct CodeSpec {
    int p = 3;
    int m = 1;
    int k = 2;
    Variant variant = Variant::d2;
    std::optional<uint64_t> nprime;  // required iff variant == d3
    FieldOptions field_opts;         // optional modulus / generator override
};

// The trace code C_D = { (Tr(a x))_{x in D} : a in ext }, with codewords
// living over the prime-coefficient ring `base`.
struct TraceCode {
    CodeSpec spec;
    Ring ext;
    Ring base;
    DefiningSet ds;
    uint64_t codeword_count = 0;  // q^k = p^{km}
};

TraceCode build_code(const CodeSpec& spec);

std::vector<RElem> evaluate_codeword(const TraceCode& code, const RElem& a);
uint64_t hom_weight_of(const TraceCode& code, const RElem& a);

struct WeightDistribution {
    std::map<uint64_t, uint64_t> entries;  // weight -> frequency
    uint64_t total = 0;
};

struct EnumOptions {
    int workers = 1;
    uint64_t budget = 100'000'000;  // cap on codeword-symbol operations
};

// Exact distribution by full enumeration of all q^k codewords; cost is
// codeword_count * |D| symbol operations, refused beyond opts.budget.
WeightDistribution hom_weight_distribution(const TraceCode& code, const EnumOptions& opts = {});

struct GrayImageParams {
    uint64_t length = 0;
    int dimension = 0;
    uint64_t min_distance = 0;
};

GrayImageParams gray_image_params(const TraceCode& code, const WeightDistribution& dist);
GrayImageParams gray_image_params(const TraceCode& code, const EnumOptions& opts = {});

// The km module generators beta_t u^j (polynomial basis beta_t = x^t).
std::vector<RElem> module_generators(const TraceCode& code);
// Gray images of their codewords; the F_p-rank of these rows.
std::vector<GrayVector> gray_generators(const TraceCode& code);
int gray_rank(const TraceCode& code);

// Multiplication-induced coordinate permutations (unit ratios from D) must
// map the code onto itself; checked on random pairs via membership of the
// permuted generator images in the code's row space.  d1/d2 only.
bool group_action_check(const TraceCode& code, int trials, uint64_t seed);

// Uniform draw from [0, n) by rejection; avoids distribution objects whose
// outputs differ across standard-library implementations.
uint64_t rng_below(std::mt19937_64& g, uint64_t n);

}  // namespace homtrace
