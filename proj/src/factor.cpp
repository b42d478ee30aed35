#include "anosov/factor.hpp"

#include "anosov/errors.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

namespace anosov {

namespace {

using u64 = unsigned long;
using MP = std::vector<u64>; // ascending coefficients mod p, no trailing zeros

void trim(MP& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

int deg(const MP& a) { return int(a.size()) - 1; }

u64 inv_mod(u64 a, u64 p)
{
    long long t = 0, nt = 1, r = (long long)p, nr = (long long)(a % p);
    while (nr) {
        long long q = r / nr;
        std::swap(t, nt);
        nt -= q * t;
        std::swap(r, nr);
        nr -= q * r;
    }
    if (r != 1)
        throw std::logic_error("non-invertible residue");
    return u64(t < 0 ? t + (long long)p : t);
}

MP sub(const MP& a, const MP& b, u64 p)
{
    MP r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        u64 x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
        r[i] = (x + p - y) % p;
    }
    trim(r);
    return r;
}

MP mul(const MP& a, const MP& b, u64 p)
{
    if (a.empty() || b.empty())
        return {};
    MP r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    trim(r);
    return r;
}

void divmod(const MP& a, const MP& b, u64 p, MP& q, MP& r)
{
    r = a;
    int db = deg(b);
    if (deg(a) < db) {
        q.clear();
        return;
    }
    q.assign(a.size() - b.size() + 1, 0);
    u64 il = inv_mod(b.back(), p);
    for (int i = deg(a) - db; i >= 0; --i) {
        u64 t = r[i + db] * il % p;
        q[i] = t;
        if (!t)
            continue;
        for (int j = 0; j <= db; ++j)
            r[i + j] = (r[i + j] + p - t * b[j] % p) % p;
    }
    r.resize(db);
    trim(r);
    trim(q);
}

MP mod(const MP& a, const MP& b, u64 p)
{
    MP q, r;
    divmod(a, b, p, q, r);
    return r;
}

MP make_monic(MP a, u64 p)
{
    if (a.empty())
        return a;
    u64 il = inv_mod(a.back(), p);
    for (auto& v : a)
        v = v * il % p;
    return a;
}

MP gcd(MP a, MP b, u64 p)
{
    while (!b.empty()) {
        MP r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a, p);
}

/* s a + t b = 1 for coprime a, b. */
void ext_gcd(const MP& a, const MP& b, u64 p, MP& s, MP& t)
{
    MP r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        MP q, r;
        divmod(r0, r1, p, q, r);
        MP s2 = sub(s0, mul(q, s1, p), p);
        MP t2 = sub(t0, mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (deg(r0) != 0)
        throw std::logic_error("ext_gcd of non-coprime polynomials");
    u64 il = inv_mod(r0[0], p);
    for (auto& v : s0)
        v = v * il % p;
    for (auto& v : t0)
        v = v * il % p;
    s = s0;
    t = t0;
}

MP powmod(MP base, const Int& e, const MP& m, u64 p)
{
    MP result{1};
    base = mod(base, m, p);
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        result = mod(mul(result, result, p), m, p);
        if (mpz_tstbit(e.get_mpz_t(), i))
            result = mod(mul(result, base, p), m, p);
    }
    return result;
}

MP derivative(const MP& a, u64 p)
{
    MP r;
    for (size_t i = 1; i < a.size(); ++i)
        r.push_back(a[i] * (i % p) % p);
    trim(r);
    return r;
}

MP reduce(const IntPoly& f, u64 p)
{
    MP r;
    for (const auto& c : f.c) {
        Int m = c % Int(p);
        if (m < 0)
            m += p;
        r.push_back(m.get_ui());
    }
    trim(r);
    return r;
}

void equal_degree(const MP& g, int d, u64 p, std::mt19937_64& rng, std::vector<MP>& out)
{
    if (deg(g) == d) {
        out.push_back(g);
        return;
    }
    Int e;
    mpz_ui_pow_ui(e.get_mpz_t(), p, d);
    e = (e - 1) / 2;
    while (true) {
        MP a(deg(g), 0);
        for (auto& v : a)
            v = rng() % p;
        trim(a);
        if (deg(a) < 1)
            continue;
        MP b = powmod(a, e, g, p);
        b = sub(b, MP{1}, p);
        MP u = gcd(g, b, p);
        if (deg(u) > 0 && deg(u) < deg(g)) {
            MP q, r;
            divmod(g, u, p, q, r);
            equal_degree(u, d, p, rng, out);
            equal_degree(make_monic(q, p), d, p, rng, out);
            return;
        }
    }
}

/* Monic irreducible factors of a monic squarefree polynomial mod p (p odd). */
std::vector<MP> factor_mod_p(MP f, u64 p)
{
    std::mt19937_64 rng(0x5eedUL + p);
    std::vector<MP> out;
    MP x{0, 1};
    MP h = mod(x, f, p);
    for (int d = 1; 2 * d <= deg(f); ++d) {
        h = powmod(h, Int(p), f, p);
        MP g = gcd(f, sub(h, x, p), p);
        if (deg(g) > 0) {
            equal_degree(g, d, p, rng, out);
            MP q, r;
            divmod(f, g, p, q, r);
            f = q;
            h = mod(h, f, p);
        }
    }
    if (deg(f) > 0)
        out.push_back(make_monic(f, p));
    return out;
}

bool is_probable_prime(u64 n)
{
    if (n < 2)
        return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

/* ---- integer polynomials mod m ---- */

IntPoly mod_sym(const IntPoly& a, const Int& m)
{
    Int half = m / 2;
    std::vector<Int> c;
    for (const auto& v : a.c) {
        Int r = v % m;
        if (r < 0)
            r += m;
        if (r > half)
            r -= m;
        c.push_back(r);
    }
    return IntPoly(std::move(c));
}

/* Division by a monic polynomial over Z. */
void divmod_monic(const IntPoly& a, const IntPoly& h, IntPoly& q, IntPoly& r)
{
    std::vector<Int> rr = a.c;
    int dh = h.degree();
    int dq = a.degree() - dh;
    if (dq < 0) {
        q = IntPoly();
        r = a;
        return;
    }
    std::vector<Int> qq(dq + 1, Int(0));
    for (int i = dq; i >= 0; --i) {
        Int t = rr[i + dh];
        qq[i] = t;
        if (t == 0)
            continue;
        for (int j = 0; j <= dh; ++j)
            rr[i + j] -= t * h.c[j];
    }
    rr.resize(dh);
    q = IntPoly(std::move(qq));
    r = IntPoly(std::move(rr));
}

IntPoly lift_mp(const MP& a)
{
    std::vector<Int> c;
    for (u64 v : a)
        c.emplace_back(static_cast<unsigned long>(v));
    return IntPoly(std::move(c));
}

/* One quadratic Hensel step (f = g h mod m -> mod m^2), h monic. */
void hensel_step(const IntPoly& f, IntPoly& g, IntPoly& h, IntPoly& s, IntPoly& t, const Int& m)
{
    Int m2 = m * m;
    IntPoly e = mod_sym(f - g * h, m2);
    IntPoly q, r;
    divmod_monic(mod_sym(s * e, m2), h, q, r);
    IntPoly gs = mod_sym(g + t * e + q * g, m2);
    IntPoly hs = mod_sym(h + r, m2);
    IntPoly b = mod_sym(s * gs + t * hs - IntPoly::constant(1), m2);
    IntPoly c, d;
    divmod_monic(mod_sym(s * b, m2), hs, c, d);
    s = mod_sym(s - d, m2);
    t = mod_sym(t - t * b - c * gs, m2);
    g = gs;
    h = hs;
}

IntPoly to_monic_mod(const IntPoly& a, const Int& m)
{
    Int l = a.lead(), il;
    if (!mpz_invert(il.get_mpz_t(), l.get_mpz_t(), m.get_mpz_t()))
        throw std::logic_error("leading coefficient not invertible");
    IntPoly r = mod_sym(a * il, m);
    r.c.back() = 1;
    return r;
}

/* F = lc * prod(factors) mod p; returns the factors lifted mod p^k (monic). */
std::vector<IntPoly> multi_lift(const IntPoly& F, const std::vector<MP>& factors, u64 p,
                                const Int& pk)
{
    if (factors.size() == 1)
        return {to_monic_mod(F, pk)};
    size_t half = factors.size() / 2;
    MP g0{1}, h0{1};
    for (size_t i = 0; i < half; ++i)
        g0 = mul(g0, factors[i], p);
    for (size_t i = half; i < factors.size(); ++i)
        h0 = mul(h0, factors[i], p);
    MP Fp = reduce(F, p);
    u64 lc = Fp.back();
    for (auto& v : g0)
        v = v * lc % p;
    MP s0, t0;
    ext_gcd(g0, h0, p, s0, t0);
    IntPoly g = lift_mp(g0), h = lift_mp(h0), s = lift_mp(s0), t = lift_mp(t0);
    Int m = p;
    g = mod_sym(g, m);
    h = mod_sym(h, m);
    h.c.back() = 1;
    s = mod_sym(s, m);
    t = mod_sym(t, m);
    while (m < pk) {
        hensel_step(F, g, h, s, t, m);
        m = m * m;
    }
    g = mod_sym(g, pk);
    h = mod_sym(h, pk);
    std::vector<MP> first(factors.begin(), factors.begin() + half);
    std::vector<MP> second(factors.begin() + half, factors.end());
    auto a = multi_lift(g, first, p, pk);
    auto b = multi_lift(h, second, p, pk);
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

std::vector<IntPoly> zassenhaus(const IntPoly& f0)
{
    IntPoly f = primitive_part(f0);
    int n = f.degree();
    if (n <= 1)
        return {f};
    Int lc = f.lead();

    // pick a good prime with few modular factors
    u64 best_p = 0;
    std::vector<MP> best;
    int tried = 0;
    for (u64 p = 3; tried < 8 && p < 100000; p += 2) {
        if (!is_probable_prime(p))
            continue;
        if (lc % Int(p) == 0)
            continue;
        MP fp = reduce(f, p);
        if (deg(fp) != n)
            continue;
        MP g = gcd(fp, derivative(fp, p), p);
        if (deg(g) > 0)
            continue;
        ++tried;
        auto fs = factor_mod_p(make_monic(fp, p), p);
        if (fs.size() == 1)
            return {f};
        if (best_p == 0 || fs.size() < best.size()) {
            best_p = p;
            best = fs;
        }
    }
    if (best_p == 0)
        throw std::logic_error("no good prime found");
    u64 p = best_p;

    // coefficient bound for factors scaled by lc
    Int norm2 = 0;
    for (const auto& c : f.c)
        norm2 += c * c;
    Int root;
    mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
    Int bound = (root + 1) * abs(lc);
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n + 1);
    Int pk = p;
    while (pk <= bound)
        pk *= p;

    std::vector<IntPoly> lifted = multi_lift(f, best, p, pk);

    std::vector<IntPoly> result;
    std::vector<IntPoly> rem = lifted;
    IntPoly cur = f;
    int s = 1;
    while (2 * s <= int(rem.size())) {
        bool found = false;
        std::vector<int> idx(s);
        std::function<bool(int, int)> search = [&](int start, int depth) -> bool {
            if (depth == s) {
                Int clc = cur.lead();
                // constant-term filter
                Int c0 = clc;
                for (int i : idx)
                    c0 = c0 * rem[i].coeff(0) % pk;
                c0 = mod_sym(IntPoly::constant(c0), pk).coeff(0);
                Int tail = cur.coeff(0) * clc;
                if (c0 == 0 ? tail != 0 : (tail % c0) != 0)
                    return false;
                IntPoly g = IntPoly::constant(clc);
                for (int i : idx)
                    g = mod_sym(g * rem[i], pk);
                IntPoly cand = primitive_part(g);
                if (cand.degree() < 1 || !divides(cand, cur))
                    return false;
                result.push_back(cand);
                cur = exact_div(cur, cand);
                std::vector<IntPoly> keep;
                for (int i = 0; i < int(rem.size()); ++i)
                    if (std::find(idx.begin(), idx.end(), i) == idx.end())
                        keep.push_back(rem[i]);
                rem = keep;
                return true;
            }
            for (int i = start; i <= int(rem.size()) - (s - depth); ++i) {
                idx[depth] = i;
                if (search(i + 1, depth + 1))
                    return true;
            }
            return false;
        };
        found = search(0, 0);
        if (!found)
            ++s;
    }
    if (cur.degree() > 0)
        result.push_back(primitive_part(cur));
    return result;
}

} // namespace

IntPoly FactorList::product() const
{
    IntPoly r = IntPoly::constant(unit);
    for (const auto& f : factors)
        r = r * pow(f.poly, f.multiplicity);
    return r;
}

bool factor_less(const IntPoly& a, const IntPoly& b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a.c[i] != b.c[i])
            return a.c[i] < b.c[i];
    return false;
}

std::vector<IntPoly> factor_squarefree(const IntPoly& f)
{
    auto fs = zassenhaus(f);
    std::sort(fs.begin(), fs.end(), factor_less);
    return fs;
}

FactorList factor_over_rationals(const IntPoly& f)
{
    if (f.is_zero())
        throw InputError("cannot factor the zero polynomial");
    if (f.degree() > 64)
        throw InputError("factorization supports degree <= 64");
    FactorList out;
    Int c = content(f);
    out.unit = f.lead() < 0 ? Int(-c) : c;
    IntPoly g = primitive_part(f);
    int xpow = 0;
    while (g.degree() > 0 && g.c[0] == 0) {
        g.c.erase(g.c.begin());
        ++xpow;
    }
    if (xpow)
        out.factors.push_back({IntPoly{0, 1}, xpow});
    auto parts = squarefree_decomposition(g);
    for (size_t m = 0; m < parts.size(); ++m) {
        if (parts[m].degree() < 1)
            continue;
        for (auto& h : factor_squarefree(parts[m]))
            out.factors.push_back({h, int(m) + 1});
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const Factor& a, const Factor& b) {
        if (a.poly != b.poly)
            return factor_less(a.poly, b.poly);
        return a.multiplicity < b.multiplicity;
    });
    return out;
}

} // namespace anosov
