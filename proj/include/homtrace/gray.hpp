#pragma once

#include <string>
#include <vector>

#include "homtrace/chain_ring.hpp"

namespace homtrace {

// Image alphabet is F_p, entries stored as plain digits in [0, p).
using GrayVector = std::vector<Fp>;

// Distance-preserving injection R -> F_p^{p^{k-1}} for the prime-coefficient
// ring R (m = 1).  Index layout: entry i*p + eps, 0 <= i < p^{k-2}, 0 <= eps < p.
GrayVector gray_map(const Ring& r, const RElem& a);
// Componentwise extension; output length p^{k-1} * v.size().
GrayVector gray_map(const Ring& r, const std::vector<RElem>& v);

// Three-valued weight: 0, (q-1)q^{k-2} generic, q^{k-1} on nonzero socle
// elements (q = p for the prime-coefficient rings used throughout).
uint64_t hom_weight(const Ring& r, const RElem& a);
uint64_t hom_weight(const Ring& r, const std::vector<RElem>& v);
uint64_t hom_distance(const Ring& r, const std::vector<RElem>& x, const std::vector<RElem>& y);

uint64_t hamming_weight(const GrayVector& v);

// Comma-separated digit serialization.
std::string format_gray(const GrayVector& v);

}  // namespace homtrace
