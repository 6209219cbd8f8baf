#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "homtrace/field.hpp"

namespace homtrace {

/// Element of F_{p^m}[u]/(u^k): the coefficient vector (a0, ..., a_{k-1})
/// of a0 + a1*u + ... + a_{k-1}*u^{k-1}.
struct RElem {
    std::vector<FElem> c;
    bool operator==(const RElem&) const = default;
    auto operator<=>(const RElem&) const = default;
};

enum class Subset { all, units, maximal_ideal, socle_units };

/// The chain ring F_{p^m}[u]/(u^k), k >= 2.  An element is a unit iff its
/// constant coefficient is nonzero; the maximal ideal is (u) and the socle
/// is (u^{k-1}).
class Ring {
public:
    Ring(Field f, int k);

    const Field& field() const { return f_; }
    int k() const { return k_; }
    int p() const { return f_.p(); }
    uint64_t q() const { return f_.q(); }
    uint64_t size() const;  // q^k

    RElem zero() const;
    RElem one() const;
    RElem u_pow(int j) const;  // u^j
    RElem from_coeffs(std::vector<FElem> c) const;

    RElem add(const RElem& a, const RElem& b) const;
    RElem sub(const RElem& a, const RElem& b) const;
    RElem neg(const RElem& a) const;
    RElem mul(const RElem& a, const RElem& b) const;  // truncated convolution
    RElem inv(const RElem& a) const;                  // division_by_zero unless unit
    RElem scalar(FElem s, const RElem& a) const;      // coefficientwise scaling

    bool is_zero(const RElem& a) const;
    bool is_unit(const RElem& a) const;
    bool in_maximal_ideal(const RElem& a) const;
    bool in_socle(const RElem& a) const;  // a in (u^{k-1})

    /// Base-q packing of the coefficient indices; used as a hash key.
    uint64_t encode(const RElem& a) const;
    RElem decode(uint64_t v) const;

    /// Index-addressable enumeration in lexicographic order of the
    /// coefficient vector (a0 compared first, each coefficient ordered by its
    /// own coefficient vector).
    uint64_t subset_size(Subset s) const;
    RElem subset_at(Subset s, uint64_t i) const;

    /// "c0,...;c0,..." with one comma-separated block per u-coefficient.
    std::string to_text(const RElem& a) const;
    RElem parse(std::string_view s) const;

private:
    void check(const RElem& a) const;
    Field f_;
    int k_;
    std::vector<uint64_t> qpow_;  // q^i for i <= k
};

/// Coefficientwise field trace down to R = F_p[u]/(u^k).
/// ext and base must share p and k, and base must sit over F_p itself.
RElem generalized_trace(const Ring& ext, const Ring& base, const RElem& a);

/// Embedding R -> extension ring through the constant-polynomial embedding.
RElem embed(const Ring& base, const Ring& ext, const RElem& a);

bool same_ring(const Ring& a, const Ring& b);

}  // namespace homtrace
