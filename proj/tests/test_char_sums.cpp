#include <doctest.h>

#include <cmath>
#include <random>

#include "homtrace/char_sums.hpp"

using namespace homtrace;

TEST_SUITE_BEGIN("char_sums");

TEST_CASE("exponential sum recovers the Hamming weight") {
    // Exhaustive over short vectors, then random longer ones.
    for (int v0 = 0; v0 < 3; ++v0)
        for (int v1 = 0; v1 < 3; ++v1)
            for (int v2 = 0; v2 < 3; ++v2) {
                const GrayVector y = {(Fp)v0, (Fp)v1, (Fp)v2};
                const double w = hamming_weight_via_theta(y, 3);
                CHECK(std::llround(w) == (long long)hamming_weight(y));
                CHECK(std::abs(w - std::llround(w)) < 1e-9);
            }
    std::mt19937_64 g(7);
    for (int p : {3, 5, 7}) {
        for (int trial = 0; trial < 30; ++trial) {
            GrayVector y(40);
            for (Fp& d : y) d = (Fp)(g() % (uint64_t)p);
            CHECK(std::llround(hamming_weight_via_theta(y, p)) == (long long)hamming_weight(y));
        }
    }
}

TEST_CASE("exact quadratic Gauss sums against the defining sum") {
    struct Case {
        int p, m;
        double re, im;
    };
    const double s3 = std::sqrt(3.0), s5 = std::sqrt(5.0), s7 = std::sqrt(7.0);
    const Case cases[] = {
        {3, 1, 0, s3},    {3, 2, 3, 0},      {3, 3, 0, -3 * s3}, {5, 1, s5, 0},
        {5, 2, -5, 0},    {7, 1, 0, s7},     {7, 2, 7, 0},       {3, 4, -9, 0},
        {7, 3, 0, -7 * s7},
    };
    for (const Case& c : cases) {
        const GaussExact e = quadratic_gauss_exact(c.p, c.m);
        const Complex v = e.value(c.p);
        CHECK(std::abs(v - Complex(c.re, c.im)) < 1e-9);
        const Field f = build_field(c.p, c.m);
        CHECK(std::abs(v - gauss_sum_numeric(f, MultChar{2, 1})) < 1e-9);
    }
    CHECK_THROWS_AS(quadratic_gauss_exact(2, 1), Error);
}

TEST_CASE("multiplicative characters: orders, multiplicativity, trivial sum") {
    const Field f = build_field(3, 2);
    const MultChar full{8, 1}, trivial{8, 0};
    std::mt19937_64 g(3);
    for (int t = 0; t < 50; ++t) {
        const FElem a = f.exp(g() % 8), b = f.exp(g() % 8);
        CHECK(std::abs(char_eval(f, full, f.mul(a, b)) - char_eval(f, full, a) * char_eval(f, full, b)) <
              1e-12);
        CHECK(std::abs(char_eval(f, trivial, a) - Complex(1, 0)) < 1e-12);
    }
    CHECK(std::abs(gauss_sum_numeric(f, trivial) - Complex(-1, 0)) < 1e-12);
    CHECK_THROWS_AS(char_eval(f, MultChar{3, 1}, FElem{1} /* order 3 does not divide 8 */), Error);
    CHECK_THROWS_AS(char_eval(f, full, 0), Error);
}

TEST_CASE("square and nonsquare character sums") {
    const std::pair<int, int> fields[] = {{3, 2}, {5, 2}, {3, 3}};
    for (auto [p, m] : fields) {
        const Field f = build_field(p, m);
        const Complex q = qbar(f), n = nbar(f);
        CHECK(std::abs(q + n - Complex(-1, 0)) < 1e-9);  // all nonzero x together
        const Complex gauss = quadratic_gauss_exact(p, m).value(p);
        CHECK(std::abs((q - n) - gauss) < 1e-9);
    }
}

TEST_CASE("zero-trace counts agree with the character formula") {
    for (auto [m, nprimes] : {std::pair<int, std::vector<uint64_t>>{2, {2, 4, 8}},
                              std::pair<int, std::vector<uint64_t>>{3, {2, 13, 26}}}) {
        const Field f = build_field(3, m);
        const Ring R(f, 2);
        for (uint64_t np : nprimes) {
            const D3Params pr = *build_d3(R, np).params;
            for (FElem b = 1; b < f.q(); ++b) {
                const ZeroTraceCount z = zero_trace_count(f, pr, b);
                CHECK(z.direct <= pr.n1);
                CHECK(std::abs(z.via_formula - Complex((double)z.direct, 0.0)) < 1e-6);
            }
        }
    }
    const Field f = build_field(3, 2);
    const D3Params pr = *build_d3(Ring(f, 2), 2).params;
    CHECK_THROWS_AS(zero_trace_count(f, pr, 0), Error);
}

TEST_CASE("semiprimitive exponent search") {
    CHECK(semiprimitive_exponent(3, 4, 4) == 1);   // 3 = -1 mod 4
    CHECK(semiprimitive_exponent(3, 5, 4) == 2);   // 9 = -1 mod 5
    CHECK_FALSE(semiprimitive_exponent(3, 8, 4));  // 3^j mod 8 cycles in {1,3}
    CHECK(semiprimitive_exponent(5, 13, 4) == 2);  // 25 = -1 mod 13
    CHECK(semiprimitive_exponent(7, 2, 2) == 1);
}

TEST_CASE("closed-form distributions, frozen per arm") {
    using Map = std::map<uint64_t, uint64_t>;
    // Even-m square-class arm.
    const Prediction d1e = predict_wdist(3, 2, 2, Variant::d1);
    CHECK(d1e.provenance == "d1-three-weight-even-m");
    CHECK(d1e.entries == Map{{0, 1}, {54, 4}, {72, 72}, {108, 4}});
    // Odd-m square-class arm (p = 3 mod 4).
    const Prediction d1o = predict_wdist(3, 3, 2, Variant::d1);
    CHECK(d1o.provenance == "d1-two-weight-odd-m");
    CHECK(d1o.entries == Map{{0, 1}, {702, 702}, {729, 26}});
    // Unit-group arm.
    const Prediction d2 = predict_wdist(3, 2, 2, Variant::d2);
    CHECK(d2.provenance == "d2-two-weight");
    CHECK(d2.entries == Map{{0, 1}, {144, 72}, {162, 8}});
    // Split coset arm (N'_2 = 1).
    const Prediction d3s = predict_wdist(3, 3, 2, Variant::d3, 2);
    CHECK(d3s.provenance == "d3-two-weight-split");
    CHECK(d3s.entries == Map{{0, 1}, {702, 702}, {729, 26}});
    // Semiprimitive arms: the even-everything table and the general one.
    const Prediction tiv = predict_wdist(11, 2, 2, Variant::d3, 4);
    CHECK(tiv.provenance == "d3-semiprimitive-special");
    CHECK(tiv.entries == Map{{0, 1}, {2662, 30}, {3630, 14520}, {3993, 90}});
    const Prediction tv = predict_wdist(3, 4, 2, Variant::d3, 4);
    CHECK(tv.provenance == "d3-semiprimitive-general");
    CHECK(tv.entries == Map{{0, 1}, {1458, 60}, {1620, 6480}, {2187, 20}});
    // Interval arm.
    const Prediction iv = predict_wdist(3, 2, 2, Variant::d3, 2);
    CHECK(iv.kind == PredictionKind::interval);
    CHECK(iv.provenance == "d3-interval");
    CHECK(iv.w_lo == 27);
    CHECK(iv.w_hi == 54);
    CHECK(iv.d_upper == 36);
    CHECK(iv.max_nonzero_weights == 3);
    // Point predictions account for every codeword.
    for (const Prediction* pr : {&d1e, &d1o, &d2, &d3s, &tiv, &tv}) {
        uint64_t sum = 0;
        for (const auto& [w, fq] : pr->entries) sum += fq;
        CHECK(sum == pr->total);
    }
}

TEST_CASE("arms outside the closed forms refuse politely") {
    CHECK_THROWS_AS(predict_wdist(2, 2, 2, Variant::d1), Error);        // even characteristic
    CHECK_THROWS_AS(predict_wdist(5, 3, 2, Variant::d1), Error);        // p = 1 mod 4, odd m
    CHECK_THROWS_AS(predict_wdist(2, 2, 2, Variant::d3, 1), Error);     // coset arms need odd p
    CHECK_THROWS_AS(predict_wdist(5, 3, 2, Variant::d3, 1), Error);     // split arm, p = 1 mod 4
    CHECK_THROWS_AS(predict_wdist(3, 2, 2, Variant::d3, 5), Error);     // 5 does not divide 8
    CHECK_THROWS_AS(predict_wdist(3, 2, 2, Variant::d3), Error);        // nprime missing
    CHECK(predict_wdist(2, 2, 2, Variant::d2).entries ==
          std::map<uint64_t, uint64_t>{{0, 1}, {12, 12}, {16, 3}});     // units arm allows p = 2

    // The semiprimitive entry point reports its own hypotheses.
    try {
        predict_semiprimitive(3, 4, 2, 8);  // no k' exists for N'_2 = 8
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(e.code() == errc::no_semiprimitive_k);
    }
    CHECK_THROWS_AS(predict_semiprimitive(3, 3, 2, 2), Error);  // odd m
    CHECK_THROWS_AS(predict_semiprimitive(3, 2, 2, 2), Error);  // N'_2 = 2 too small
    CHECK(predict_semiprimitive(3, 4, 2, 5).provenance == "d3-semiprimitive-general");
    // The generic dispatcher instead falls back to the interval arm there.
    CHECK(predict_wdist(3, 4, 2, Variant::d3, 8).provenance == "d3-interval");
}

TEST_CASE("prediction matching accepts the truth and rejects perturbations") {
    const Prediction pred = predict_wdist(3, 2, 2, Variant::d2);
    WeightDistribution dist;
    dist.entries = {{0, 1}, {144, 72}, {162, 8}};
    dist.total = 81;
    CHECK(prediction_matches(pred, dist));
    WeightDistribution off = dist;
    off.entries[144] = 71;
    off.entries[150] = 1;
    CHECK_FALSE(prediction_matches(pred, off));

    const Prediction iv = predict_wdist(3, 2, 2, Variant::d3, 2);
    WeightDistribution d3;
    d3.entries = {{0, 1}, {27, 4}, {36, 72}, {54, 4}};
    d3.total = 81;
    CHECK(prediction_matches(iv, d3));
    WeightDistribution low = d3;
    low.entries.erase(27);
    low.entries[26] = 4;  // drifts below the lower bound
    CHECK_FALSE(prediction_matches(iv, low));
    WeightDistribution many = d3;
    many.entries[36] = 70;
    many.entries[40] = 1;
    many.entries[41] = 1;  // four distinct nonzero weights, cap is three
    CHECK_FALSE(prediction_matches(iv, many));
}

TEST_SUITE_END();
