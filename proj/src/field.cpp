#include "homtrace/field.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace homtrace {

namespace {

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Dense polynomials over F_p, low degree first.  Used only at build time.
using Poly = std::vector<int>;

int pdeg(const Poly& a) {
    for (int i = (int)a.size() - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

Poly pmul(const Poly& a, const Poly& b, int p) {
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return r;
}

// Reduce a modulo a monic polynomial f.
void preduce(Poly& a, const Poly& f, int p) {
    int df = (int)f.size() - 1;
    for (int i = (int)a.size() - 1; i >= df; --i) {
        int c = a[i];
        if (!c) continue;
        a[i] = 0;
        for (int j = 0; j < df; ++j)
            a[i - df + j] = ((a[i - df + j] - c * f[j]) % p + p * p) % p;
    }
    a.resize(df);
}

Poly pmulmod(const Poly& a, const Poly& b, const Poly& f, int p) {
    Poly r = pmul(a, b, p);
    preduce(r, f, p);
    return r;
}

Poly ppowmod(Poly base, uint64_t e, const Poly& f, int p) {
    Poly r(f.size() - 1, 0);
    r[0] = 1;
    preduce(base, f, p);
    while (e) {
        if (e & 1) r = pmulmod(r, base, f, p);
        base = pmulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

Poly pgcd(Poly a, Poly b, int p) {
    auto inv_mod_p = [p](int x) {
        int r = 1, e = p - 2, base = ((x % p) + p) % p;
        while (e) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return r;
    };
    while (pdeg(b) >= 0) {
        // a <- a mod b, with b made monic on the fly
        int db = pdeg(b);
        int lead_inv = inv_mod_p(b[db]);
        while (pdeg(a) >= db) {
            int da = pdeg(a);
            int factor = a[da] * lead_inv % p;
            for (int j = 0; j <= db; ++j)
                a[da - db + j] = ((a[da - db + j] - factor * b[j]) % p + p * p) % p;
        }
        std::swap(a, b);
    }
    return a;
}

// x^{p^j} mod f computed by j successive p-th powers.
Poly frob_power(const Poly& f, int p, int j) {
    Poly g = ppowmod(Poly{0, 1}, 1, f, p);  // x reduced mod f
    for (int i = 0; i < j; ++i) g = ppowmod(g, (uint64_t)p, f, p);
    return g;
}

bool poly_irreducible(const Poly& f, int p, int m) {
    // f monic of degree m.  Irreducible iff x^{p^m} == x (mod f) and for each
    // prime r | m, gcd(x^{p^{m/r}} - x, f) = 1.
    Poly x = ppowmod(Poly{0, 1}, 1, f, p);
    Poly g = frob_power(f, p, m);
    if (g != x) return false;
    for (uint64_t r : prime_factors((uint64_t)m)) {
        Poly h = frob_power(f, p, m / (int)r);
        // h - x
        Poly diff = h;
        if (diff.size() < x.size()) diff.resize(x.size(), 0);
        for (size_t i = 0; i < x.size(); ++i)
            diff[i] = ((diff[i] - x[i]) % p + p) % p;
        Poly fc(f.begin(), f.end());
        if (pdeg(pgcd(fc, diff, p)) != 0) return false;
    }
    return true;
}

}  // namespace

struct Field::Data {
    int p = 0;
    int m = 0;
    uint64_t q = 0;
    std::vector<Fp> modulus;          // length m+1, monic
    FElem alpha = 0;
    std::vector<FElem> exp_tab;       // alpha^t, t in [0, q-1)
    std::vector<uint32_t> log_tab;    // indexed by FElem, log_tab[0] unused
    std::vector<uint8_t> tr_tab;      // trace values in [0, p)
    std::vector<uint64_t> ppow;       // p^i for i <= m
};

namespace {

FElem index_of_poly(const Poly& c, int p, int m) {
    FElem e = 0;
    for (int i = m - 1; i >= 0; --i) e = e * p + (i < (int)c.size() ? c[i] : 0);
    return e;
}

Poly poly_of_index(FElem e, int p, int m) {
    Poly c(m, 0);
    for (int i = 0; i < m; ++i) {
        c[i] = e % p;
        e /= p;
    }
    return c;
}

}  // namespace

Field build_field(int p, int m, FieldOptions opts) {
    if (p < 2 || !is_prime((uint64_t)p)) fail(errc::non_prime, "p = " + std::to_string(p));
    if (p == 2 && !opts.allow_even) fail(errc::even_characteristic, "p = 2 requires allow_even");
    if (m < 1) fail(errc::invalid_argument, "m must be >= 1");
    if (opts.alpha_rank < 0) fail(errc::invalid_argument, "alpha_rank must be >= 0");

    auto d = std::make_shared<Field::Data>();
    d->p = p;
    d->m = m;
    d->ppow.resize(m + 1);
    d->ppow[0] = 1;
    for (int i = 1; i <= m; ++i) {
        if (d->ppow[i - 1] > (uint64_t)1 << 27) fail(errc::invalid_argument, "field too large");
        d->ppow[i] = d->ppow[i - 1] * (uint64_t)p;
    }
    d->q = d->ppow[m];
    const uint64_t q = d->q;

    // modulus
    if (opts.modulus) {
        auto& mod = *opts.modulus;
        if ((int)mod.size() != m + 1 || mod[m] != 1)
            fail(errc::invalid_argument, "modulus must be monic of degree m");
        for (Fp c : mod)
            if (c < 0 || c >= p) fail(errc::invalid_argument, "modulus coefficient out of range");
        Poly f(mod.begin(), mod.end());
        if (!poly_irreducible(f, p, m))
            fail(errc::reducible_modulus, format_poly(mod));
        d->modulus = mod;
    } else {
        // lexicographically smallest monic irreducible, low-degree
        // coefficients compared first
        bool found = false;
        for (uint64_t r = 0; r < q && !found; ++r) {
            // decode r as (c0, ..., c_{m-1}) with c0 the most significant digit,
            // so increasing r walks candidates in low-degree-first lex order
            Poly f(m + 1, 0);
            uint64_t t = r;
            for (int i = m - 1; i >= 0; --i) {
                f[i] = (int)(t % p);
                t /= p;
            }
            f[m] = 1;
            if (poly_irreducible(f, p, m)) {
                d->modulus.assign(f.begin(), f.end());
                found = true;
            }
        }
        if (!found) fail(errc::reducible_modulus, "no irreducible of this degree (unreachable)");
    }

    Poly f(d->modulus.begin(), d->modulus.end());

    // alpha: generator of F_q^* with the smallest coefficient vector in lex
    // order (skipping opts.alpha_rank earlier generators)
    auto factors = prime_factors(q - 1);
    auto elem_pow = [&](FElem base, uint64_t e) {
        Poly b = poly_of_index(base, p, m);
        return index_of_poly(ppowmod(b, e, f, p), p, m);
    };
    FElem alpha = 0;
    int remaining = opts.alpha_rank;
    for (uint64_t r = 1; r < q; ++r) {
        // decode lex rank -> element
        Poly c(m, 0);
        uint64_t t = r;
        for (int i = m - 1; i >= 0; --i) {
            c[i] = (int)(t % p);
            t /= p;
        }
        FElem cand = index_of_poly(c, p, m);
        bool gen = true;
        for (uint64_t pr : factors)
            if (q - 1 > 1 && elem_pow(cand, (q - 1) / pr) == 1) { gen = false; break; }
        if (q == 2) gen = (cand == 1);
        if (gen) {
            if (remaining == 0) { alpha = cand; break; }
            --remaining;
        }
    }
    if (alpha == 0 && q > 2) fail(errc::no_primitive_element, "no generator found");
    if (q == 2) alpha = 1;
    d->alpha = alpha;

    // exp / log tables
    d->exp_tab.assign(q - 1, 0);
    d->log_tab.assign(q, 0);
    Poly alpha_poly = poly_of_index(alpha, p, m);
    Poly cur(m, 0);
    cur[0] = 1;
    for (uint64_t t = 0; t + 1 < q; ++t) {
        FElem e = index_of_poly(cur, p, m);
        if (e == 0 || (t > 0 && e == 1)) fail(errc::no_primitive_element, "order of alpha below q-1");
        d->exp_tab[t] = e;
        d->log_tab[e] = (uint32_t)t;
        cur = pmulmod(cur, alpha_poly, f, p);
    }
    if (index_of_poly(cur, p, m) != 1) fail(errc::no_primitive_element, "alpha^(q-1) != 1");

    // trace table: tr(e) = sum of e^{p^i}, an element of F_p
    d->tr_tab.assign(q, 0);
    for (uint64_t e = 1; e < q; ++e) {
        uint64_t lg = d->log_tab[e];
        FElem acc = 0;
        uint64_t conj_log = lg;
        for (int i = 0; i < m; ++i) {
            FElem conj = d->exp_tab[conj_log];
            // digitwise add acc + conj
            FElem r2 = 0;
            uint64_t sh = 1;
            FElem a2 = acc, b2 = conj;
            for (int dgt = 0; dgt < m; ++dgt) {
                uint32_t s = a2 % p + b2 % p;
                if (s >= (uint32_t)p) s -= p;
                r2 += (FElem)(s * sh);
                sh *= p;
                a2 /= p;
                b2 /= p;
            }
            acc = r2;
            conj_log = (conj_log * p) % (q - 1);
        }
        if (acc >= (FElem)p) fail(errc::no_primitive_element, "trace not in the prime field");
        d->tr_tab[e] = (uint8_t)acc;
    }

    Field out;
    out.d_ = std::move(d);
    return out;
}

int Field::p() const { return d_->p; }
int Field::m() const { return d_->m; }
uint64_t Field::q() const { return d_->q; }
const std::vector<Fp>& Field::modulus() const { return d_->modulus; }
FElem Field::alpha() const { return d_->alpha; }
const std::vector<uint8_t>& Field::trace_table() const { return d_->tr_tab; }

FElem Field::add(FElem a, FElem b) const {
    const int p = d_->p;
    FElem r = 0;
    uint64_t sh = 1;
    for (int i = 0; i < d_->m; ++i) {
        uint32_t s = a % p + b % p;
        if (s >= (uint32_t)p) s -= p;
        r += (FElem)(s * sh);
        sh *= p;
        a /= p;
        b /= p;
    }
    return r;
}

FElem Field::neg(FElem a) const {
    const int p = d_->p;
    FElem r = 0;
    uint64_t sh = 1;
    for (int i = 0; i < d_->m; ++i) {
        uint32_t da = a % p;
        r += (FElem)((da ? p - da : 0) * sh);
        sh *= p;
        a /= p;
    }
    return r;
}

FElem Field::sub(FElem a, FElem b) const { return add(a, neg(b)); }

FElem Field::mul(FElem a, FElem b) const {
    if (a == 0 || b == 0) return 0;
    uint64_t t = (uint64_t)d_->log_tab[a] + d_->log_tab[b];
    if (t >= d_->q - 1) t -= d_->q - 1;
    return d_->exp_tab[t];
}

FElem Field::inv(FElem a) const {
    if (a == 0) fail(errc::division_by_zero, "inverse of 0");
    uint64_t lg = d_->log_tab[a];
    return d_->exp_tab[lg ? d_->q - 1 - lg : 0];
}

FElem Field::pow(FElem a, uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    uint64_t lg = (uint64_t)d_->log_tab[a] % (d_->q - 1);
    // reduce the exponent first so lg*e cannot overflow at sane field sizes
    uint64_t er = e % (d_->q - 1);
    return d_->exp_tab[(lg * er) % (d_->q - 1)];
}

Fp Field::trace(FElem a) const { return (Fp)d_->tr_tab[a]; }

uint32_t Field::log(FElem a) const {
    if (a == 0) fail(errc::zero_argument, "log of 0");
    return d_->log_tab[a];
}

FElem Field::exp(uint64_t t) const { return d_->exp_tab[t % (d_->q - 1)]; }

int Field::quadratic_character(FElem a) const {
    if (d_->p == 2) fail(errc::even_characteristic, "quadratic character needs odd p");
    if (a == 0) fail(errc::zero_argument, "quadratic character of 0");
    return d_->log_tab[a] % 2 == 0 ? 1 : -1;
}

std::vector<Fp> Field::coeffs(FElem a) const {
    std::vector<Fp> c(d_->m);
    for (int i = 0; i < d_->m; ++i) {
        c[i] = (Fp)(a % d_->p);
        a /= d_->p;
    }
    return c;
}

FElem Field::from_coeffs(const std::vector<Fp>& c) const {
    if ((int)c.size() != d_->m) fail(errc::invalid_argument, "coefficient vector has wrong length");
    FElem e = 0;
    for (int i = d_->m - 1; i >= 0; --i) {
        if (c[i] < 0 || c[i] >= d_->p) fail(errc::invalid_argument, "coefficient out of range");
        e = e * d_->p + (FElem)c[i];
    }
    return e;
}

FElem Field::embed_prime(Fp c) const {
    if (c < 0 || c >= d_->p) fail(errc::invalid_argument, "value out of range");
    return (FElem)c;
}

uint64_t Field::lex_rank(FElem a) const {
    // c0 carries the most weight: the rank orders coefficient vectors
    // lexicographically, low-degree coefficient compared first
    uint64_t r = 0;
    FElem t = a;
    for (int i = 0; i < d_->m; ++i) {
        r += (uint64_t)(t % d_->p) * d_->ppow[d_->m - 1 - i];
        t /= d_->p;
    }
    return r;
}

FElem Field::from_lex_rank(uint64_t r) const {
    FElem e = 0;
    for (int i = 0; i < d_->m; ++i) {
        uint32_t digit = (uint32_t)((r / d_->ppow[d_->m - 1 - i]) % d_->p);
        e += (FElem)(digit * d_->ppow[i]);
    }
    return e;
}

bool same_field(const Field& a, const Field& b) {
    return a.p() == b.p() && a.m() == b.m() && a.modulus() == b.modulus() && a.alpha() == b.alpha();
}

std::string format_poly(const std::vector<Fp>& c) {
    std::string s;
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(c[i]);
    }
    return s;
}

std::vector<Fp> parse_poly(const std::string& s, int p) {
    std::vector<Fp> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) fail(errc::invalid_argument, "empty coefficient in '" + s + "'");
        size_t pos = 0;
        long v = std::stol(tok, &pos);
        if (pos != tok.size() || v < 0 || v >= p)
            fail(errc::invalid_argument, "bad coefficient '" + tok + "'");
        out.push_back((Fp)v);
    }
    if (out.empty()) fail(errc::invalid_argument, "empty polynomial");
    return out;
}

}  // namespace homtrace
