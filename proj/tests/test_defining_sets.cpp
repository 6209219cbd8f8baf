#include <doctest.h>

#include <numeric>
#include <set>

#include "homtrace/defining_sets.hpp"

using namespace homtrace;

TEST_SUITE_BEGIN("defining_sets");

namespace {
Ring ring32() { return Ring(build_field(3, 2), 2); }
}  // namespace

TEST_CASE("square-class set: sizes and membership") {
    const Ring R = ring32();
    const DefiningSet ds = build_d1(R);
    CHECK(ds.size() == 36);          // (q-1)/2 * q^{k-1}
    CHECK(ds.gray_length == 108);    // p^{k-1} * |D|
    std::set<RElem> seen;
    for (const RElem& x : ds.elements) {
        CHECK(R.is_unit(x));
        CHECK(R.field().quadratic_character(x.c[0]) == 1);
        seen.insert(x);
    }
    CHECK(seen.size() == ds.size());
}

TEST_CASE("unit set is exactly the unit group in enumeration order") {
    const Ring R = ring32();
    const DefiningSet ds = build_d2(R);
    REQUIRE(ds.size() == R.subset_size(Subset::units));
    CHECK(ds.gray_length == 216);
    for (uint64_t i = 0; i < ds.size(); ++i) CHECK(ds.elements[i] == R.subset_at(Subset::units, i));
}

TEST_CASE("coset set: subgroup bookkeeping and representative property") {
    const Field f = build_field(3, 4);
    const Ring R(f, 2);
    const DefiningSet ds = build_d3(R, 4);
    REQUIRE(ds.params.has_value());
    const D3Params pr = *ds.params;
    const uint64_t m_quot = (f.q() - 1) / (uint64_t)(f.p() - 1);
    CHECK(pr.nprime == 4);
    CHECK(pr.nprime2 == std::gcd<uint64_t>(4, m_quot));
    CHECK(pr.nprime1 == std::lcm<uint64_t>(4, m_quot));
    CHECK(pr.n1 == pr.nprime1 / pr.nprime);
    CHECK(ds.size() == pr.n1 * R.q());  // n1 field parts, free maximal-ideal tail

    // The low coefficients run through alpha^{N' j} and represent distinct
    // cosets of F_p^* inside <alpha^{N'_2}>.
    std::vector<FElem> lows;
    for (uint64_t j = 0; j < pr.n1; ++j) lows.push_back(ds.elements[j * R.q()].c[0]);
    for (uint64_t j = 0; j < pr.n1; ++j) {
        CHECK(lows[j] == f.pow(f.alpha(), pr.nprime * j));
        CHECK(f.log(lows[j]) % pr.nprime2 == 0);  // inside <alpha^{N'_2}>
        for (uint64_t i = 0; i < j; ++i)
            CHECK(f.log(f.mul(lows[i], f.inv(lows[j]))) % m_quot != 0);
    }
    std::set<RElem> seen(ds.elements.begin(), ds.elements.end());
    CHECK(seen.size() == ds.size());
}

TEST_CASE("coset set requires a divisor of q-1") {
    const Ring R = ring32();
    CHECK_THROWS_AS(build_d3(R, 5), Error);
    try {
        build_d3(R, 3);
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_a_divisor);
    }
    CHECK(build_d3(R, 8).params->n1 == 1);  // N' = q-1 collapses to one coset
}

TEST_CASE("square classes need odd characteristic; units do not") {
    FieldOptions even;
    even.allow_even = true;
    const Ring R2(build_field(2, 2, even), 2);
    CHECK_THROWS_AS(build_d1(R2), Error);
    const DefiningSet ds = build_d2(R2);
    CHECK(ds.size() == 12);  // (4-1)*4
    CHECK(ds.gray_length == 24);
}

TEST_CASE("dispatcher wires variants and validates nprime presence") {
    const Ring R = ring32();
    CHECK(build_defining_set(R, Variant::d1).size() == 36);
    CHECK(build_defining_set(R, Variant::d2).size() == 72);
    CHECK(build_defining_set(R, Variant::d3, 2).size() == 18);
    CHECK_THROWS_AS(build_defining_set(R, Variant::d3), Error);
}

TEST_CASE("variant names round trip") {
    CHECK(variant_name(Variant::d1) == "d1");
    CHECK(parse_variant("d3") == Variant::d3);
    CHECK_THROWS_AS(parse_variant("d4"), Error);
}

TEST_SUITE_END();
