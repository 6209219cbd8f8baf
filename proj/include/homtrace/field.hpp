#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "homtrace/errors.hpp"

namespace homtrace {

/// Element of the prime field F_p, stored as a value in [0, p).
using Fp = int32_t;

/// Element of F_{p^m}.  The coefficient vector (c0, ..., c_{m-1}) of the
/// power-basis representation is packed as base-p digits, c0 least
/// significant, so the index of the constant c is c itself.
using FElem = uint32_t;

struct FieldOptions {
    /// Modulus polynomial, monic of degree m, low-degree coefficient first.
    /// When absent the lexicographically smallest monic irreducible is chosen
    /// (coefficients compared low-degree-first).
    std::optional<std::vector<Fp>> modulus;
    /// 0 selects the lexicographically smallest generator of F_{p^m}^* as
    /// alpha, 1 the next one, and so on.
    int alpha_rank = 0;
    /// p = 2 is rejected unless this is set.
    bool allow_even = false;
};

/// F_{p^m} with precomputed discrete-log, power and trace tables.
/// Immutable once built; copies share the tables.
class Field {
public:
    int p() const;
    int m() const;
    uint64_t q() const;  // p^m
    const std::vector<Fp>& modulus() const;
    FElem alpha() const;  // fixed primitive element

    FElem add(FElem a, FElem b) const;
    FElem sub(FElem a, FElem b) const;
    FElem neg(FElem a) const;
    FElem mul(FElem a, FElem b) const;
    FElem inv(FElem a) const;          // division_by_zero on 0
    FElem pow(FElem a, uint64_t e) const;

    Fp trace(FElem a) const;           // trace down to F_p
    uint32_t log(FElem a) const;       // discrete log base alpha; zero_argument on 0
    FElem exp(uint64_t t) const;       // alpha^t
    int quadratic_character(FElem a) const;  // +1 square, -1 nonsquare; zero_argument on 0

    std::vector<Fp> coeffs(FElem a) const;
    FElem from_coeffs(const std::vector<Fp>& c) const;
    FElem embed_prime(Fp c) const;     // constant polynomial

    /// Rank of the element in the lexicographic order of coefficient vectors
    /// (c0 compared first).  Rank 0 is the zero element.
    uint64_t lex_rank(FElem a) const;
    FElem from_lex_rank(uint64_t r) const;

    /// Raw trace table, indexed by FElem; handy in hot loops.
    const std::vector<uint8_t>& trace_table() const;

private:
    friend Field build_field(int, int, FieldOptions);
    struct Data;
    std::shared_ptr<const Data> d_;
};

/// Errors: non_prime, even_characteristic, reducible_modulus,
/// no_primitive_element, invalid_argument.
Field build_field(int p, int m, FieldOptions opts = {});

bool same_field(const Field& a, const Field& b);

/// "1,0,1" <-> {1,0,1} (low degree first).
std::string format_poly(const std::vector<Fp>& c);
std::vector<Fp> parse_poly(const std::string& s, int p);

}  // namespace homtrace
