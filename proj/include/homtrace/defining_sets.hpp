#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "homtrace/chain_ring.hpp"

namespace homtrace {

enum class Variant { d1, d2, d3 };

std::string variant_name(Variant v);
Variant parse_variant(std::string_view s);

// Cyclotomic bookkeeping for the split-unit-group set: nprime is the chosen
// divisor N' of q-1, nprime1 = lcm(N', (q-1)/(p-1)), nprime2 = gcd of the same
// pair, and n1 = nprime1 / nprime counts the coset representatives.
struct D3Params {
    uint64_t nprime = 0;
    uint64_t nprime1 = 0;
    uint64_t nprime2 = 0;
    uint64_t n1 = 0;
};

struct DefiningSet {
    Variant variant = Variant::d2;
    std::vector<RElem> elements;
    std::optional<D3Params> params;  // present for d3 only
    uint64_t gray_length = 0;        // p^{k-1} * size()
    uint64_t size() const { return elements.size(); }
};

// Units whose low coefficient is a nonzero square; requires odd p.
DefiningSet build_d1(const Ring& ring);
// The full unit group in lex order.
DefiningSet build_d2(const Ring& ring);
// Coset-representative low coefficients alpha^{N'(j-1)} with free higher
// coefficients; nprime must divide q-1.
DefiningSet build_d3(const Ring& ring, uint64_t nprime);

DefiningSet build_defining_set(const Ring& ring, Variant v,
                               std::optional<uint64_t> nprime = std::nullopt);

}  // namespace homtrace
