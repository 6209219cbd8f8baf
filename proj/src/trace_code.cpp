#include "homtrace/trace_code.hpp"

#include <algorithm>
#include <cstring>
#include <limits>
#include <thread>
#include <unordered_map>

namespace homtrace {

namespace {

uint64_t upow(uint64_t b, int e) {
    uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

Fp inv_mod(Fp a, int p) {
    for (Fp i = 1; i < p; ++i)
        if (i * a % p == 1) return i;
    fail(errc::division_by_zero, "no inverse mod p");
}

// Reduced row-echelon basis over F_p with membership queries.
class RowSpace {
public:
    explicit RowSpace(int p) : p_(p) {}

    bool insert(GrayVector v) {
        reduce(v);
        size_t piv = pivot_of(v);
        if (piv == v.size()) return false;
        Fp s = inv_mod(v[piv], p_);
        for (Fp& d : v) d = (Fp)(d * s % p_);
        for (size_t r = 0; r < rows_.size(); ++r) subtract(rows_[r], v, rows_[r][piv]);
        rows_.push_back(std::move(v));
        piv_.push_back(piv);
        return true;
    }

    bool contains(GrayVector v) const {
        reduce(v);
        return pivot_of(v) == v.size();
    }

    int rank() const { return (int)rows_.size(); }

private:
    static size_t pivot_of(const GrayVector& v) {
        size_t i = 0;
        while (i < v.size() && v[i] == 0) ++i;
        return i;
    }

    void subtract(GrayVector& v, const GrayVector& row, Fp coef) const {
        if (!coef) return;
        for (size_t i = 0; i < v.size(); ++i) v[i] = (Fp)((v[i] + (p_ - coef) * row[i]) % p_);
    }

    void reduce(GrayVector& v) const {
        for (size_t r = 0; r < rows_.size(); ++r) subtract(v, rows_[r], v[piv_[r]]);
    }

    int p_;
    std::vector<GrayVector> rows_;
    std::vector<size_t> piv_;
};

}  // namespace

TraceCode build_code(const CodeSpec& spec) {
    if (spec.k < 2) fail(errc::invalid_argument, "k must be >= 2");
    if ((spec.variant == Variant::d3) != spec.nprime.has_value())
        fail(errc::invalid_argument, "N' must be supplied exactly when the variant is d3");
    FieldOptions ext_opts = spec.field_opts;
    ext_opts.allow_even = true;  // characteristic restrictions are per-variant
    Field fe = build_field(spec.p, spec.m, std::move(ext_opts));
    FieldOptions base_opts;
    base_opts.allow_even = true;
    Field fb = build_field(spec.p, 1, std::move(base_opts));
    Ring ext(std::move(fe), spec.k);
    Ring base(std::move(fb), spec.k);
    DefiningSet ds = build_defining_set(ext, spec.variant, spec.nprime);
    uint64_t count = ext.size();
    return TraceCode{spec, std::move(ext), std::move(base), std::move(ds), count};
}

std::vector<RElem> evaluate_codeword(const TraceCode& code, const RElem& a) {
    if ((int)a.c.size() != code.ext.k()) fail(errc::context_mismatch, "codeword index has wrong shape");
    for (FElem e : a.c)
        if (e >= code.ext.q()) fail(errc::invalid_argument, "coefficient out of range");
    std::vector<RElem> out;
    out.reserve(code.ds.size());
    for (const RElem& x : code.ds.elements)
        out.push_back(generalized_trace(code.ext, code.base, code.ext.mul(a, x)));
    return out;
}

uint64_t hom_weight_of(const TraceCode& code, const RElem& a) {
    return hom_weight(code.base, evaluate_codeword(code, a));
}

WeightDistribution hom_weight_distribution(const TraceCode& code, const EnumOptions& opts) {
    const uint64_t n = code.ds.size();
    const uint64_t total = code.codeword_count;
    if (n == 0) fail(errc::invalid_argument, "empty defining set");
    if (total > opts.budget / n)
        fail(errc::budget_exceeded,
             "enumeration needs " + std::to_string(total) + " x " + std::to_string(n) +
                 " codeword-symbol operations; raise the budget to proceed");

    const Field& f = code.ext.field();
    const int k = code.ext.k();
    const int p = f.p();
    const uint64_t q = f.q();
    const auto& trtab = f.trace_table();

    std::vector<FElem> flat(n * k);
    for (uint64_t i = 0; i < n; ++i)
        for (int t = 0; t < k; ++t) flat[i * k + t] = code.ds.elements[i].c[t];

    const uint64_t socle_w = upow(p, k - 1);
    const uint64_t generic_w = (uint64_t)(p - 1) * upow(p, k - 2);
    const uint64_t maxw = socle_w * n;

    auto run_range = [&](uint64_t lo, uint64_t hi, std::vector<uint64_t>& hist) {
        // trA[t*q + e] = tr(a_t * e), rebuilt per codeword; the inner loop is
        // then pure byte lookups with an early exit on the first nonzero
        // low coefficient (which already decides the generic weight).
        std::vector<uint8_t> trA((size_t)k * q);
        std::vector<FElem> acoef(k);
        for (uint64_t idx = lo; idx < hi; ++idx) {
            uint64_t v = idx;
            for (int t = 0; t < k; ++t) {
                acoef[t] = (FElem)(v % q);
                v /= q;
            }
            for (int t = 0; t < k; ++t) {
                uint8_t* row = &trA[(size_t)t * q];
                if (!acoef[t]) {
                    std::memset(row, 0, q);
                    continue;
                }
                for (uint64_t e = 0; e < q; ++e) row[e] = (uint8_t)trtab[f.mul(acoef[t], (FElem)e)];
            }
            uint64_t w = 0;
            const FElem* xs = flat.data();
            for (uint64_t i = 0; i < n; ++i, xs += k) {
                if (trA[xs[0]]) {
                    w += generic_w;
                    continue;
                }
                int j = 1;
                for (; j < k - 1; ++j) {
                    int s = 0;
                    for (int t = 0; t <= j; ++t) s += trA[(size_t)t * q + xs[j - t]];
                    if (s % p) break;
                }
                if (j < k - 1) {
                    w += generic_w;
                    continue;
                }
                int s = 0;
                for (int t = 0; t < k; ++t) s += trA[(size_t)t * q + xs[k - 1 - t]];
                if (s % p) w += socle_w;
            }
            hist[w]++;
        }
    };

    int workers = std::clamp(opts.workers, 1, 64);
    if ((uint64_t)workers > total) workers = (int)total;
    std::vector<std::vector<uint64_t>> hists(workers, std::vector<uint64_t>(maxw + 1, 0));
    if (workers == 1) {
        run_range(0, total, hists[0]);
    } else {
        std::vector<std::thread> th;
        const uint64_t chunk = total / workers, rem = total % workers;
        uint64_t lo = 0;
        for (int wk = 0; wk < workers; ++wk) {
            uint64_t hi = lo + chunk + (wk < (int)rem ? 1 : 0);
            th.emplace_back(run_range, lo, hi, std::ref(hists[wk]));
            lo = hi;
        }
        for (auto& t : th) t.join();
    }

    WeightDistribution wd;
    for (uint64_t w = 0; w <= maxw; ++w) {
        uint64_t c = 0;
        for (const auto& h : hists) c += h[w];
        if (c) {
            wd.entries.emplace(w, c);
            wd.total += c;
        }
    }
    return wd;
}

GrayImageParams gray_image_params(const TraceCode& code, const WeightDistribution& dist) {
    GrayImageParams gp;
    gp.length = code.ds.gray_length;
    gp.dimension = gray_rank(code);
    const int km = code.ext.k() * code.ext.field().m();
    if (gp.dimension != km)
        fail(errc::rank_deficient, "generator images have rank " + std::to_string(gp.dimension) +
                                       ", expected " + std::to_string(km));
    for (const auto& [w, cnt] : dist.entries)
        if (w != 0) {
            gp.min_distance = w;
            break;
        }
    return gp;
}

GrayImageParams gray_image_params(const TraceCode& code, const EnumOptions& opts) {
    return gray_image_params(code, hom_weight_distribution(code, opts));
}

std::vector<RElem> module_generators(const TraceCode& code) {
    const Field& f = code.ext.field();
    const int k = code.ext.k(), m = f.m();
    std::vector<RElem> gens;
    gens.reserve((size_t)k * m);
    for (int t = 0; t < m; ++t) {
        std::vector<Fp> c(m, 0);
        c[t] = 1;
        FElem beta = f.from_coeffs(c);
        for (int j = 0; j < k; ++j) {
            RElem g = code.ext.zero();
            g.c[j] = beta;
            gens.push_back(std::move(g));
        }
    }
    return gens;
}

std::vector<GrayVector> gray_generators(const TraceCode& code) {
    std::vector<GrayVector> rows;
    for (const RElem& g : module_generators(code))
        rows.push_back(gray_map(code.base, evaluate_codeword(code, g)));
    return rows;
}

int gray_rank(const TraceCode& code) {
    RowSpace space(code.base.p());
    for (GrayVector& row : gray_generators(code)) space.insert(std::move(row));
    return space.rank();
}

bool group_action_check(const TraceCode& code, int trials, uint64_t seed) {
    if (code.ds.variant == Variant::d3)
        fail(errc::unsupported, "the multiplication action is only claimed for d1/d2");
    const Ring& R = code.ext;
    const uint64_t n = code.ds.size();

    std::unordered_map<uint64_t, size_t> pos;
    pos.reserve(n * 2);
    for (size_t i = 0; i < n; ++i) pos.emplace(R.encode(code.ds.elements[i]), i);

    std::vector<RElem> gens = module_generators(code);
    std::vector<std::vector<RElem>> words;
    words.reserve(gens.size());
    for (const RElem& g : gens) words.push_back(evaluate_codeword(code, g));
    RowSpace space(code.base.p());
    for (const auto& wvec : words) space.insert(gray_map(code.base, wvec));

    std::mt19937_64 g(seed);
    std::vector<size_t> perm(n);
    std::vector<char> seen(n);
    for (int trial = 0; trial < trials; ++trial) {
        const RElem& up = code.ds.elements[rng_below(g, n)];
        const RElem& vp = code.ds.elements[rng_below(g, n)];
        RElem w = R.mul(up, R.inv(vp));
        std::fill(seen.begin(), seen.end(), 0);
        for (size_t i = 0; i < n; ++i) {
            auto it = pos.find(R.encode(R.mul(w, code.ds.elements[i])));
            if (it == pos.end() || seen[it->second]) return false;
            seen[it->second] = 1;
            perm[i] = it->second;
        }
        for (const auto& cw : words) {
            std::vector<RElem> shuffled(n, code.base.zero());
            for (size_t i = 0; i < n; ++i) shuffled[perm[i]] = cw[i];
            if (!space.contains(gray_map(code.base, shuffled))) return false;
        }
    }
    return true;
}

uint64_t rng_below(std::mt19937_64& g, uint64_t n) {
    if (n == 0) fail(errc::invalid_argument, "draw from an empty range");
    const uint64_t max = std::numeric_limits<uint64_t>::max();
    const uint64_t bound = max - (max % n + 1) % n;
    uint64_t v;
    do {
        v = g();
    } while (v > bound);
    return v % n;
}

}  // namespace homtrace
