#pragma once

#include <stdexcept>
#include <string>

namespace homtrace {

enum class errc {
    non_prime,
    even_characteristic,
    reducible_modulus,
    no_primitive_element,
    division_by_zero,
    zero_argument,
    context_mismatch,
    wrong_ring,
    length_mismatch,
    not_a_divisor,
    representative_check_failed,
    budget_exceeded,
    rank_deficient,
    no_closed_form,
    no_semiprimitive_k,
    formula_mismatch,
    hypothesis_violated,
    witness_not_found,
    unsupported,
    invalid_argument,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::non_prime: return "non_prime";
        case errc::even_characteristic: return "even_characteristic";
        case errc::reducible_modulus: return "reducible_modulus";
        case errc::no_primitive_element: return "no_primitive_element";
        case errc::division_by_zero: return "division_by_zero";
        case errc::zero_argument: return "zero_argument";
        case errc::context_mismatch: return "context_mismatch";
        case errc::wrong_ring: return "wrong_ring";
        case errc::length_mismatch: return "length_mismatch";
        case errc::not_a_divisor: return "not_a_divisor";
        case errc::representative_check_failed: return "representative_check_failed";
        case errc::budget_exceeded: return "budget_exceeded";
        case errc::rank_deficient: return "rank_deficient";
        case errc::no_closed_form: return "no_closed_form";
        case errc::no_semiprimitive_k: return "no_semiprimitive_k";
        case errc::formula_mismatch: return "formula_mismatch";
        case errc::hypothesis_violated: return "hypothesis_violated";
        case errc::witness_not_found: return "witness_not_found";
        case errc::unsupported: return "unsupported";
        case errc::invalid_argument: return "invalid_argument";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace homtrace
