#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "homtrace/analysis.hpp"

namespace homtrace {

struct RunConfig {
    int p = 3;
    int m = 2;
    int k = 2;
    Variant variant = Variant::d2;
    std::optional<uint64_t> nprime;          // required iff variant == d3
    std::optional<std::vector<Fp>> modulus;  // field modulus override, low degree first
    bool csv = false;          // wdist only: two-column output instead of JSON
    bool with_action = false;  // verify only: also test the unit-multiplication action
    int workers = 1;
    uint64_t budget = 100'000'000;
};

// Parameter screening shared by all subcommands; throws before any heavy
// work starts (the CLI maps every thrown Error to exit code 2).
void validate_config(const RunConfig& cfg);

CodeSpec make_spec(const RunConfig& cfg);

// Each runner writes one JSON document (CSV for wdist when requested) to
// `out` and returns the process exit code: 0 = pass, 1 = verification
// mismatch.  Invalid parameters are reported by throwing.
int run_wdist(const RunConfig& cfg, std::ostream& out);
int run_predict(const RunConfig& cfg, std::ostream& out);
int run_verify(const RunConfig& cfg, std::ostream& out);
int run_dual_distance(const RunConfig& cfg, std::ostream& out);
int run_gauss_sum(const RunConfig& cfg, std::ostream& out);
int run_dump_defining_set(const RunConfig& cfg, std::ostream& out);

}  // namespace homtrace
