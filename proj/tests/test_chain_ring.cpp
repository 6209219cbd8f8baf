#include <doctest.h>

#include <set>

#include "homtrace/chain_ring.hpp"
#include "naive_oracle.hpp"

using namespace homtrace;

TEST_SUITE_BEGIN("chain_ring");

TEST_CASE("multiplication is the truncated convolution, exhaustively") {
    const Ring R(build_field(3, 1), 3);
    REQUIRE(R.size() == 27);
    for (uint64_t i = 0; i < R.size(); ++i)
        for (uint64_t j = 0; j < R.size(); ++j) {
            const RElem a = R.decode(i), b = R.decode(j);
            CHECK(R.mul(a, b) == oracle::ring_mul(R, a, b));
            CHECK(R.sub(R.add(a, b), b) == a);
            CHECK(R.add(a, R.neg(a)) == R.zero());
        }
}

TEST_CASE("units invert, non-units do not") {
    const Ring R(build_field(3, 2), 2);
    int units = 0;
    for (uint64_t i = 0; i < R.size(); ++i) {
        const RElem a = R.decode(i);
        if (R.is_unit(a)) {
            ++units;
            CHECK(R.mul(a, R.inv(a)) == R.one());
        } else {
            CHECK_THROWS_AS(R.inv(a), Error);
        }
    }
    CHECK(units == (int)((R.q() - 1) * R.q()));  // (q-1)q^{k-1}
}

TEST_CASE("ideal chain membership partitions the ring") {
    const Ring R(build_field(3, 1), 3);
    uint64_t units = 0, maximal = 0, socle = 0;
    for (uint64_t i = 0; i < R.size(); ++i) {
        const RElem a = R.decode(i);
        CHECK(R.is_unit(a) != R.in_maximal_ideal(a));
        units += R.is_unit(a);
        maximal += R.in_maximal_ideal(a);
        socle += R.in_socle(a);
        if (R.in_socle(a)) CHECK(R.in_maximal_ideal(a));
    }
    CHECK(units == 18);
    CHECK(maximal == 9);
    CHECK(socle == 3);  // includes zero
    // u is nilpotent of index exactly k.
    const RElem u = R.u_pow(1);
    CHECK(R.mul(R.mul(u, u), u) == R.zero());
    CHECK_FALSE(R.is_zero(R.mul(u, u)));
    CHECK(R.in_socle(R.mul(u, u)));
}

TEST_CASE("encode and decode are inverse with c0 least significant") {
    const Ring R(build_field(3, 2), 2);
    std::set<uint64_t> seen;
    for (uint64_t i = 0; i < R.size(); ++i) {
        CHECK(R.encode(R.decode(i)) == i);
        seen.insert(i);
    }
    CHECK(seen.size() == R.size());
    CHECK(R.decode(0) == R.zero());
    CHECK(R.decode(1) == R.from_coeffs({1, 0}));
    CHECK(R.decode(R.q()) == R.u_pow(1));
}

TEST_CASE("subset enumeration is a bijection onto the right slices") {
    const Ring R(build_field(3, 1), 3);
    for (Subset s : {Subset::all, Subset::units, Subset::maximal_ideal, Subset::socle_units}) {
        std::set<RElem> seen;
        for (uint64_t i = 0; i < R.subset_size(s); ++i) {
            const RElem a = R.subset_at(s, i);
            switch (s) {
                case Subset::all: break;
                case Subset::units: CHECK(R.is_unit(a)); break;
                case Subset::maximal_ideal: CHECK(R.in_maximal_ideal(a)); break;
                case Subset::socle_units:
                    CHECK(R.in_socle(a));
                    CHECK_FALSE(R.is_zero(a));
                    break;
            }
            seen.insert(a);
        }
        CHECK(seen.size() == R.subset_size(s));
    }
    CHECK(R.subset_size(Subset::all) == 27);
    CHECK(R.subset_size(Subset::units) == 18);
    CHECK(R.subset_size(Subset::maximal_ideal) == 9);
    CHECK(R.subset_size(Subset::socle_units) == 2);
    // The unit walk starts at 1 and varies the tail fastest.
    CHECK(R.subset_at(Subset::units, 0) == R.one());
    CHECK(R.subset_at(Subset::units, 1) == R.from_coeffs({1, 0, 1}));
    CHECK_THROWS_AS(R.subset_at(Subset::units, 18), Error);
}

TEST_CASE("text format round trips") {
    const Ring R(build_field(3, 2), 2);
    for (uint64_t i = 0; i < R.size(); ++i) {
        const RElem a = R.decode(i);
        CHECK(R.parse(R.to_text(a)) == a);
    }
    CHECK(R.to_text(R.from_coeffs({(FElem)R.field().from_coeffs({1, 2}), 0})) == "1,2;0,0");
    CHECK_THROWS_AS(R.parse("1,2"), Error);      // one block, k = 2 expected
    CHECK_THROWS_AS(R.parse("1,2;3,0"), Error);  // coefficient out of range
}

TEST_CASE("generalized trace is linear over the base ring") {
    const Ring ext(build_field(3, 2), 2);
    const Ring base(build_field(3, 1), 2);
    for (uint64_t i = 0; i < ext.size(); ++i) {
        const RElem a = ext.decode(i);
        const RElem ta = generalized_trace(ext, base, a);
        for (int j = 0; j < ext.k(); ++j)
            CHECK(ta.c[j] == (FElem)oracle::field_trace(ext.field(), a.c[j]));
        // Additivity against a fixed partner.
        const RElem b = ext.decode((i * 7 + 3) % ext.size());
        CHECK(generalized_trace(ext, base, ext.add(a, b)) ==
              base.add(ta, generalized_trace(ext, base, b)));
    }
    // R-linearity: Tr(embed(r) * a) = r * Tr(a).
    for (uint64_t r = 0; r < base.size(); ++r)
        for (uint64_t i = 0; i < ext.size(); ++i) {
            const RElem rb = base.decode(r), a = ext.decode(i);
            CHECK(generalized_trace(ext, base, ext.mul(embed(base, ext, rb), a)) ==
                  base.mul(rb, generalized_trace(ext, base, a)));
        }
}

TEST_CASE("context mismatches are rejected") {
    const Ring ext(build_field(3, 2), 2);
    const Ring base2(build_field(3, 1), 2);
    const Ring base3(build_field(3, 1), 3);
    const Ring base5(build_field(5, 1), 2);
    const RElem a = ext.one();
    CHECK_THROWS_AS(generalized_trace(ext, base3, a), Error);   // k mismatch
    CHECK_THROWS_AS(generalized_trace(ext, base5, a), Error);   // p mismatch
    CHECK_THROWS_AS(generalized_trace(ext, ext, a), Error);     // base not prime
    CHECK_THROWS_AS(embed(base2, base3, base2.one()), Error);
    CHECK_THROWS_AS(Ring(build_field(3, 1), 1), Error);  // k >= 2
    RElem bad;
    bad.c = {0, 0, 0};
    CHECK_THROWS_AS(ext.mul(bad, ext.one()), Error);  // wrong shape
}

TEST_CASE("scalars agree with constant-unit multiplication") {
    const Ring R(build_field(3, 2), 3);
    for (FElem s = 0; s < R.q(); ++s) {
        const RElem c = R.from_coeffs({s, 0, 0});
        for (uint64_t i = 0; i < 50; ++i) {
            const RElem a = R.decode((i * 131) % R.size());
            CHECK(R.scalar(s, a) == R.mul(c, a));
        }
    }
}

TEST_SUITE_END();
