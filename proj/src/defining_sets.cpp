#include "homtrace/defining_sets.hpp"

#include <numeric>
#include <set>

namespace homtrace {

namespace {

uint64_t upow(uint64_t b, int e) {
    uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

uint64_t gray_len(const Ring& ring, uint64_t n) { return upow(ring.p(), ring.k() - 1) * n; }

}  // namespace

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::d1: return "d1";
        case Variant::d2: return "d2";
        case Variant::d3: return "d3";
    }
    fail(errc::invalid_argument, "bad variant");
}

Variant parse_variant(std::string_view s) {
    if (s == "d1") return Variant::d1;
    if (s == "d2") return Variant::d2;
    if (s == "d3") return Variant::d3;
    fail(errc::invalid_argument, "unknown defining-set variant '" + std::string(s) + "'");
}

DefiningSet build_d1(const Ring& ring) {
    if (ring.p() == 2)
        fail(errc::even_characteristic, "the square-class set needs odd characteristic");
    DefiningSet ds;
    ds.variant = Variant::d1;
    const uint64_t units = ring.subset_size(Subset::units);
    ds.elements.reserve(units / 2);
    for (uint64_t i = 0; i < units; ++i) {
        RElem e = ring.subset_at(Subset::units, i);
        if (ring.field().quadratic_character(e.c[0]) == 1) ds.elements.push_back(std::move(e));
    }
    ds.gray_length = gray_len(ring, ds.elements.size());
    return ds;
}

DefiningSet build_d2(const Ring& ring) {
    DefiningSet ds;
    ds.variant = Variant::d2;
    const uint64_t units = ring.subset_size(Subset::units);
    ds.elements.reserve(units);
    for (uint64_t i = 0; i < units; ++i) ds.elements.push_back(ring.subset_at(Subset::units, i));
    ds.gray_length = gray_len(ring, ds.elements.size());
    return ds;
}

DefiningSet build_d3(const Ring& ring, uint64_t nprime) {
    const Field& f = ring.field();
    const uint64_t qm1 = f.q() - 1;
    if (nprime == 0 || qm1 % nprime != 0)
        fail(errc::not_a_divisor, "N' = " + std::to_string(nprime) + " does not divide " +
                                      std::to_string(qm1));
    const uint64_t m_quot = qm1 / (f.p() - 1);  // |F_q*| / |F_p*|
    D3Params pr;
    pr.nprime = nprime;
    pr.nprime2 = std::gcd(nprime, m_quot);
    pr.nprime1 = nprime / pr.nprime2 * m_quot;  // lcm via gcd
    pr.n1 = pr.nprime1 / nprime;

    // The low coefficients must land in pairwise distinct multiplicative
    // cosets of the prime subfield's unit group; since their count matches
    // the factor group's order, distinctness is also coverage.
    std::set<uint64_t> residues;
    for (uint64_t j = 0; j < pr.n1; ++j) residues.insert(nprime * j % m_quot);
    if (residues.size() != pr.n1)
        fail(errc::representative_check_failed,
             "coset representatives collide for N' = " + std::to_string(nprime));

    DefiningSet ds;
    ds.variant = Variant::d3;
    ds.params = pr;
    const uint64_t tail = ring.subset_size(Subset::maximal_ideal);
    ds.elements.reserve(pr.n1 * tail);
    for (uint64_t j = 0; j < pr.n1; ++j) {
        FElem d = f.pow(f.alpha(), nprime * j);
        for (uint64_t t = 0; t < tail; ++t) {
            RElem e = ring.subset_at(Subset::maximal_ideal, t);
            e.c[0] = d;
            ds.elements.push_back(std::move(e));
        }
    }
    ds.gray_length = gray_len(ring, ds.elements.size());
    return ds;
}

DefiningSet build_defining_set(const Ring& ring, Variant v, std::optional<uint64_t> nprime) {
    switch (v) {
        case Variant::d1: return build_d1(ring);
        case Variant::d2: return build_d2(ring);
        case Variant::d3:
            if (!nprime) fail(errc::invalid_argument, "d3 requires N'");
            return build_d3(ring, *nprime);
    }
    fail(errc::invalid_argument, "bad variant");
}

}  // namespace homtrace
