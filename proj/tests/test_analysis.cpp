#include <doctest.h>

#include "homtrace/analysis.hpp"

using namespace homtrace;

TEST_SUITE_BEGIN("analysis");

namespace {

TraceCode make(int p, int m, int k, Variant v, std::optional<uint64_t> np = std::nullopt) {
    CodeSpec s;
    s.p = p;
    s.m = m;
    s.k = k;
    s.variant = v;
    s.nprime = np;
    return build_code(s);
}

}  // namespace

TEST_CASE("Griesmer sums on the pinned parameter sets") {
    const GriesmerVerdict a = griesmer_check(216, 4, 144, 3);
    CHECK(a.sum_at_d == 214);
    CHECK(a.sum_at_d_plus_1 == 217);
    CHECK(a.optimal);
    const GriesmerVerdict b = griesmer_check(1053, 6, 702, 3);
    CHECK(b.sum_at_d == 1052);
    CHECK(b.sum_at_d_plus_1 == 1056);
    CHECK(b.optimal);
    const GriesmerVerdict c = griesmer_check(2430, 8, 1458, 3);
    CHECK(c.sum_at_d == 2187);
    CHECK(c.sum_at_d_plus_1 == 2194);
    CHECK_FALSE(c.optimal);  // a shorter code with the same d and K exists
    // One-dimensional sanity: sum is just d.
    CHECK(griesmer_check(10, 1, 10, 3).optimal);
    CHECK_THROWS_AS(griesmer_check(10, 0, 1, 3), Error);
    CHECK_THROWS_AS(griesmer_check(10, 2, 0, 3), Error);
}

TEST_CASE("optimality thresholds per variant") {
    CHECK(optimality_threshold(3, 2, Variant::d1) == 2);
    CHECK(optimality_threshold(3, 2, Variant::d2) == 2);
    CHECK(optimality_threshold(3, 2, Variant::d3) == 2);
    CHECK(optimality_threshold(7, 2, Variant::d1) == 3);
    CHECK(optimality_threshold(3, 3, Variant::d1) == 3);
    CHECK(optimality_threshold(3, 3, Variant::d2) == 4);
    CHECK(optimality_threshold(3, 3, Variant::d3) == 3);

    // The square-class optimality statement covers odd m with p = 3 mod 4
    // only; at (3,2,2) the three-weight code has d = 54 and genuinely misses
    // the Griesmer certificate.
    CHECK_FALSE(optimality_applicable(3, 2, 2, Variant::d1));
    CHECK(optimality_applicable(3, 3, 2, Variant::d1));
    CHECK_FALSE(optimality_applicable(5, 3, 2, Variant::d1));  // p = 1 mod 4
    CHECK(optimality_applicable(3, 2, 2, Variant::d2));
    CHECK_FALSE(optimality_applicable(3, 1, 2, Variant::d2));
    CHECK(optimality_applicable(3, 3, 2, Variant::d3, 2));        // N'_2 = 1
    CHECK_FALSE(optimality_applicable(3, 4, 2, Variant::d3, 4));  // N'_2 = 4
}

TEST_CASE("Griesmer verdict agrees with enumeration end to end") {
    const TraceCode code = make(3, 2, 2, Variant::d2);
    const GrayImageParams gp = gray_image_params(code);
    const GriesmerVerdict g = griesmer_check(gp.length, gp.dimension, gp.min_distance, 3);
    CHECK(g.optimal);
}

TEST_CASE("dual distance certification across variants") {
    for (Variant v : {Variant::d1, Variant::d2, Variant::d3}) {
        const TraceCode code =
            make(3, 2, 2, v, v == Variant::d3 ? std::optional<uint64_t>(2) : std::nullopt);
        const DualDistance dd = dual_min_hom_distance(code);
        CHECK(dd.value == 4);  // 2(p-1)p^{k-2}
        CHECK(dd.no_light_single);
        CHECK(dd.support[0] != dd.support[1]);
        CHECK(dd.singles_scanned > 0);
        const uint64_t wa = hom_weight(code.base, dd.wit_alpha),
                       wb = hom_weight(code.base, dd.wit_beta);
        CHECK(wa + wb == 4);
        CHECK(dual_weight2_exhaustive(code));
    }
}

TEST_CASE("dual distance in characteristic 2 and at k = 3") {
    CodeSpec s;
    s.p = 2;
    s.m = 2;
    s.k = 2;
    s.variant = Variant::d2;
    const TraceCode code2 = build_code(s);
    const DualDistance dd2 = dual_min_hom_distance(code2);
    CHECK(dd2.value == 2);
    CHECK(dd2.no_light_single);
    CHECK(dual_weight2_exhaustive(code2));

    const TraceCode code3 = make(3, 2, 3, Variant::d2);
    const DualDistance dd3 = dual_min_hom_distance(code3);
    CHECK(dd3.value == 12);  // 2*2*3
    CHECK(dd3.no_light_single);
}

TEST_CASE("dual certification needs a proper extension") {
    const TraceCode code = make(3, 1, 2, Variant::d2);
    try {
        dual_min_hom_distance(code);
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(e.code() == errc::hypothesis_violated);
    }
}

TEST_CASE("two-weight inequality check") {
    WeightDistribution dist;
    dist.entries = {{0, 1}, {144, 72}, {162, 8}};
    const MinimalityVerdict good = minimality_check(dist, 3);
    CHECK(good.w_min == 144);
    CHECK(good.w_max == 162);
    CHECK(good.minimal);  // 3*144 > 2*162

    WeightDistribution spread;
    spread.entries = {{0, 1}, {27, 4}, {36, 72}, {54, 4}};
    CHECK_FALSE(minimality_check(spread, 3).minimal);  // 81 < 108

    CHECK(minimality_applicable(3, 4, Variant::d1));
    CHECK(minimality_applicable(3, 3, Variant::d1));        // odd m, p = 3 mod 4
    CHECK_FALSE(minimality_applicable(5, 3, Variant::d1));  // p = 1 mod 4
    CHECK_FALSE(minimality_applicable(3, 2, Variant::d1));  // below the m threshold
    CHECK(minimality_applicable(3, 2, Variant::d2));
    CHECK_FALSE(minimality_applicable(3, 1, Variant::d2));
    CHECK(minimality_applicable(3, 3, Variant::d3, 2));
    CHECK_FALSE(minimality_applicable(3, 4, Variant::d3, 4));
}

TEST_CASE("support-inclusion brute force agrees with the inequality") {
    const TraceCode code = make(3, 2, 2, Variant::d2);
    const BruteForceMinimality bf = bruteforce_minimality(code);
    CHECK(bf.all_minimal);
    // 80 nonzero codewords, each unordered pair visited once.
    CHECK(bf.pairs_checked == 80 * 79 / 2);

    // Tight budget refusal.
    try {
        bruteforce_minimality(code, 10);
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(e.code() == errc::budget_exceeded);
    }
}

TEST_SUITE_END();
