#include "anosov/unitlattice.hpp"

#include "anosov/errors.hpp"
#include "anosov/factor.hpp"
#include "anosov/polycore.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace anosov {

namespace {

double root_log2_abs(const RootSet& rs, size_t i)
{
    const ComplexBox& b = rs.roots[i].box;
    double re = Rat((b.re_lo + b.re_hi) / 2).get_d();
    double im = Rat((b.im_lo + b.im_hi) / 2).get_d();
    double a = std::hypot(re, im);
    return a > 0 ? std::log2(a) : -1e9;
}

Int multinomial_count(std::vector<long> z)
{
    std::sort(z.begin(), z.end());
    Int total;
    mpz_fac_ui(total.get_mpz_t(), z.size());
    size_t i = 0;
    while (i < z.size()) {
        size_t j = i;
        while (j < z.size() && z[j] == z[i])
            ++j;
        Int f;
        mpz_fac_ui(f.get_mpz_t(), j - i);
        total /= f;
        i = j;
    }
    return total;
}

std::vector<long> to_longs(const IntVec& z)
{
    std::vector<long> out;
    for (const auto& v : z) {
        if (!v.fits_slong_p())
            throw InputError("exponent out of range");
        out.push_back(v.get_si());
    }
    return out;
}

bool is_zero_vec(const IntVec& z)
{
    return std::all_of(z.begin(), z.end(), [](const Int& v) { return v == 0; });
}

/* Expanding root test, refining until decided. */
bool expanding(const RootSet& rs, size_t i)
{
    RootSet cur = rs;
    for (int p = rs.precision; p <= kPrecisionCap; p *= 2) {
        cur = cur.refined(p);
        CBall b = cur.ball(i);
        if (mpfr_cmp_ui(b.abs_lower().get(), 1) > 0)
            return true;
        if (mpfr_cmp_ui(b.abs_upper().get(), 1) < 0)
            return false;
    }
    throw PrecisionError("cannot separate root modulus from 1");
}

Int coordinate_sum_gcd(const std::vector<IntVec>& basis)
{
    Int g = 0;
    for (const auto& v : basis) {
        Int s = 0;
        for (const auto& x : v)
            s += x;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_mpz_t());
    }
    return g;
}

/* LLL on [e_i | C log|l_i| | C arg l_i] plus the 2 pi row. */
std::vector<IntVec> lll_candidates(const RootSet& rs, int p)
{
    auto idx = rs.indexed();
    size_t k = idx.size();
    mpfr_prec_t wp = p + 32;
    Real C(wp), lg(wp), ar(wp), t(wp);
    mpfr_set_ui(C.get(), 1, MPFR_RNDN);
    mpfr_mul_2si(C.get(), C.get(), p / 2, MPFR_RNDN);
    auto scaled_round = [&](Real& x) {
        mpfr_mul(x.get(), x.get(), C.get(), MPFR_RNDN);
        Int n;
        mpfr_get_z(n.get_mpz_t(), x.get(), MPFR_RNDN);
        return n;
    };
    std::vector<IntVec> rows;
    for (size_t i = 0; i < k; ++i) {
        CBall b = rs.ball(idx[i], wp);
        mpfr_hypot(lg.get(), b.re.get(), b.im.get(), MPFR_RNDN);
        mpfr_log(lg.get(), lg.get(), MPFR_RNDN);
        mpfr_atan2(ar.get(), b.im.get(), b.re.get(), MPFR_RNDN);
        IntVec row(k + 2, Int(0));
        row[i] = 1;
        row[k] = scaled_round(lg);
        row[k + 1] = scaled_round(ar);
        rows.push_back(std::move(row));
    }
    IntVec twopi(k + 2, Int(0));
    mpfr_const_pi(t.get(), MPFR_RNDN);
    mpfr_mul_ui(t.get(), t.get(), 2, MPFR_RNDN);
    twopi[k + 1] = scaled_round(t);
    rows.push_back(twopi);

    auto red = lll_reduce(rows);
    Int T = 1;
    mpz_mul_2exp(T.get_mpz_t(), T.get_mpz_t(), p / 4);
    std::vector<IntVec> cands;
    for (const auto& v : red) {
        if (abs(v[k]) > T || abs(v[k + 1]) > T)
            continue;
        IntVec z(v.begin(), v.begin() + long(k));
        if (is_zero_vec(z))
            continue;
        bool small = std::all_of(z.begin(), z.end(),
                                 [](const Int& x) { return abs(x) <= kRelationBound; });
        if (small)
            cands.push_back(z);
    }
    return cands;
}

} // namespace

const char* to_string(QuarticRankCase c)
{
    switch (c) {
    case QuarticRankCase::FullRank: return "FullRank";
    case QuarticRankCase::RankTwo: return "RankTwo";
    case QuarticRankCase::RankOne: return "RankOne";
    }
    return "?";
}

const char* to_string(Completeness c)
{
    return c == Completeness::Certified ? "certified" : "heuristic";
}

CBall monomial_ball(const RootSet& roots, const IntVec& z, mpfr_prec_t prec)
{
    auto idx = roots.indexed();
    if (z.size() != idx.size())
        throw InputError("exponent vector length differs from the root count");
    CBall acc = CBall::from_int(1, prec);
    for (size_t i = 0; i < z.size(); ++i) {
        if (z[i] == 0)
            continue;
        acc = acc * roots.ball(idx[i], prec).pow(z[i].get_si());
    }
    return acc;
}

std::optional<IntPoly> orbit_polynomial(const RootSet& roots, const IntVec& z, size_t limit)
{
    auto idx = roots.indexed();
    if (z.size() != idx.size())
        throw InputError("exponent vector length differs from the root count");
    std::vector<long> e = to_longs(z);
    if (multinomial_count(e) > Int(static_cast<unsigned long>(limit)))
        return std::nullopt;
    std::sort(e.begin(), e.end());

    std::vector<double> l2(idx.size());
    for (size_t i = 0; i < idx.size(); ++i)
        l2[i] = root_log2_abs(roots, idx[i]);
    double bits = 0;
    size_t count = 0;
    {
        std::vector<long> a = e;
        do {
            double s = 0;
            for (size_t i = 0; i < a.size(); ++i)
                s += double(a[i]) * l2[i];
            bits += std::max(0.0, s) + 1;
            ++count;
        } while (std::next_permutation(a.begin(), a.end()));
    }
    int prec = std::max(128, int(bits) + 64 + 2 * int(count));
    while (true) {
        if (prec > kPrecisionCap)
            throw PrecisionError("orbit polynomial exceeded the precision cap");
        RootSet rs = roots.refined(prec);
        mpfr_prec_t wp = prec + 32;
        std::vector<CBall> coef{CBall::from_int(1, wp)};
        std::vector<long> a = e;
        do {
            IntVec av;
            for (long v : a)
                av.emplace_back(v);
            CBall v = monomial_ball(rs, av, wp);
            std::vector<CBall> next(coef.size() + 1, CBall(wp));
            for (size_t j = 0; j < coef.size(); ++j) {
                next[j + 1] = next[j + 1] + coef[j];
                next[j] = next[j] - v * coef[j];
            }
            coef = std::move(next);
        } while (std::next_permutation(a.begin(), a.end()));
        std::vector<Int> out;
        bool ok = true;
        for (const auto& c : coef) {
            auto r = c.round_to_int();
            if (!r) {
                ok = false;
                break;
            }
            out.push_back(*r);
        }
        if (ok)
            return IntPoly(std::move(out));
        prec *= 2;
    }
}

bool verify_relation(const RootSet& roots, const IntVec& z)
{
    if (is_zero_vec(z))
        return true;
    auto P = orbit_polynomial(roots, z);
    if (!P)
        throw InputError("relation too large to verify");
    IntPoly Q = *P;
    IntPoly xm1{-1, 1};
    int mult = 0;
    while (Q.degree() > 0 && Q.eval(1) == 0) {
        Q = exact_div(Q, xm1);
        ++mult;
    }
    if (mult == 0)
        return false;
    // the product is a root of (x-1)^mult Q with Q(1) != 0
    for (int p = std::max(roots.precision, 128); p <= kPrecisionCap; p *= 2) {
        RootSet rs = roots.refined(p);
        CBall mu = monomial_ball(rs, z, p + 32);
        CBall diff = mu - CBall::from_int(1, p + 32);
        if (!diff.may_contain_zero())
            return false;
        if (!eval(Q, mu).may_contain_zero())
            return true;
    }
    throw PrecisionError("relation verification exceeded the precision cap");
}

RelationLattice relation_lattice(const RootSet& roots, Completeness* completeness)
{
    auto idx = roots.indexed();
    int k = int(idx.size());
    std::map<IntVec, bool> cache;
    std::vector<RelationLattice> history;
    int p = std::max(128, roots.precision);
    for (int level = 0; level < 7 && p <= kPrecisionCap; ++level, p *= 2) {
        RootSet rs = roots.refined(p);
        std::vector<IntVec> good;
        for (auto& z : lll_candidates(rs, p)) {
            IntVec key = z;
            if (!key.empty()) {
                // canonical sign for the cache
                auto it = std::find_if(key.begin(), key.end(), [](const Int& v) { return v != 0; });
                if (it != key.end() && *it < 0)
                    for (auto& v : key)
                        v = -v;
            }
            auto found = cache.find(key);
            bool ok;
            if (found != cache.end()) {
                ok = found->second;
            } else {
                ok = verify_relation(roots, key);
                cache[key] = ok;
            }
            if (ok)
                good.push_back(key);
        }
        RelationLattice L{k, hnf(good)};
        history.push_back(L);
        size_t h = history.size();
        if (h >= 3 && history[h - 1] == history[h - 2] && history[h - 2] == history[h - 3]) {
            if (completeness)
                *completeness = Completeness::Certified;
            return L;
        }
    }
    if (completeness)
        *completeness = Completeness::Heuristic;
    return history.back();
}

AnosovProfile rank_of_roots(const IntPoly& f1)
{
    if (f1.degree() < 1 || f1.lead() != 1 || !is_integer_like(f1))
        throw InputError("rank_of_roots needs a monic integer polynomial with constant term +-1");
    AnosovProfile prof;
    prof.f1 = f1;
    int n = f1.degree();
    Int prod = (n % 2 ? -1 : 1) * f1.c[0];
    if (prod == -1) {
        prof.profiled = composed_power(f1, 2);
        prof.normalization_power = 2;
    } else {
        prof.profiled = f1;
    }
    prof.roots = isolate_roots(prof.profiled, 128);
    prof.lattice = relation_lattice(prof.roots, &prof.completeness);
    prof.rank = n - prof.lattice.rank();
    prof.d = coordinate_sum_gcd(prof.lattice.basis);
    return prof;
}

bool is_full_rank(const IntPoly& f1)
{
    return rank_of_roots(f1).rank == f1.degree() - 1;
}

IntPoly monomial_min_poly(const RootSet& roots, const IntVec& e)
{
    if (is_zero_vec(e))
        return IntPoly{-1, 1};
    auto P = orbit_polynomial(roots, e);
    if (!P)
        throw InputError("monomial too large for an exact minimal polynomial");
    FactorList fl = factor_over_rationals(*P);
    std::vector<IntPoly> cands;
    for (const auto& f : fl.factors)
        cands.push_back(f.poly);
    for (int p = std::max(roots.precision, 128); p <= kPrecisionCap; p *= 2) {
        RootSet rs = roots.refined(p);
        CBall mu = monomial_ball(rs, e, p + 32);
        std::vector<IntPoly> keep;
        for (const auto& c : cands)
            if (eval(c, mu).may_contain_zero())
                keep.push_back(c);
        cands = keep;
        if (cands.size() == 1)
            return cands[0];
        if (cands.empty())
            throw std::logic_error("monomial is a root of no factor");
    }
    throw PrecisionError("minimal polynomial selection exceeded the precision cap");
}

IntPoly monomial_min_poly(const IntPoly& f, const IntVec& e)
{
    return monomial_min_poly(isolate_roots(f, 128), e);
}

EvenDegreeResult even_degree_check(const IntPoly& f, const IntVec& e)
{
    if (f.degree() != 4 || !is_anosov_polynomial(f))
        throw InputError("even_degree_check needs an Anosov quartic");
    IntPoly m = monomial_min_poly(f, e);
    if (m.degree() == 1)
        throw InputError("monomial is rational: " + to_string(m));
    return {m.degree() % 2 == 0, m};
}

QuarticClassification classify_quartic_rank_case(const IntPoly& f)
{
    if (f.degree() != 4 || !is_anosov_polynomial(f))
        throw InputError("classify_quartic_rank_case needs an Anosov quartic");
    QuarticClassification out;
    out.profile = rank_of_roots(f);
    const auto& prof = out.profile;
    const auto& L = prof.lattice.basis;
    if (prof.rank == 3) {
        out.kind = QuarticRankCase::FullRank;
        out.power = prof.normalization_power;
        out.d = prof.d;
        out.permutation = {0, 1, 2, 3};
        return out;
    }
    if (prof.roots.size() != 4 && prof.roots.indexed().size() != 4)
        throw std::logic_error("quartic with unexpected root count");
    auto idx = prof.roots.indexed();
    auto unit = [](int a, int b) {
        IntVec v(4, Int(0));
        v[a] += 1;
        v[b] += 1;
        return v;
    };
    const int matchings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    int m = 0, which = -1;
    std::vector<IntVec> Lm;
    for (int cand = 1; cand <= 64 && which < 0; ++cand) {
        Lm = scaled_preimage(L, cand, 4);
        for (int t = 0; t < 3; ++t) {
            const int* q = matchings[t];
            if (hnf_contains(Lm, unit(q[0], q[1])) && hnf_contains(Lm, unit(q[2], q[3]))) {
                m = cand;
                which = t;
                break;
            }
        }
    }
    if (which < 0)
        throw std::logic_error("no reciprocal pairing found for a non-full-rank quartic");
    const int* q = matchings[which];
    int a = q[0], b = q[1], c = q[2], dd = q[3];
    if (!expanding(prof.roots, idx[a]))
        std::swap(a, b);
    if (!expanding(prof.roots, idx[c]))
        std::swap(c, dd);
    if (root_log2_abs(prof.roots, idx[a]) > root_log2_abs(prof.roots, idx[c])) {
        std::swap(a, c);
        std::swap(b, dd);
    }
    out.permutation = {a, b, c, dd};

    if (prof.rank == 2) {
        out.kind = QuarticRankCase::RankTwo;
        out.power = prof.normalization_power * m;
        out.d = coordinate_sum_gcd(Lm);
        return out;
    }
    long M = m;
    while (true) {
        Lm = scaled_preimage(L, M, 4);
        std::vector<IntVec> img;
        for (const auto& z : Lm)
            img.push_back({z[a] - z[b], z[c] - z[dd]});
        auto h = hnf(img);
        if (h.size() != 1)
            throw std::logic_error("rank-one quartic with unexpected relation image");
        Int u = h[0][0], v = h[0][1];
        Int g;
        mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
        if (g == 1) {
            out.kind = QuarticRankCase::RankOne;
            out.k = Int(abs(u)).get_si();
            out.l = Int(abs(v)).get_si();
            break;
        }
        M *= g.get_si();
        if (M > 1 << 20)
            throw std::logic_error("rank-one power search diverged");
    }
    out.power = prof.normalization_power * int(M);
    out.d = coordinate_sum_gcd(Lm);
    return out;
}

int normalized_power_for_rank1(const IntPoly& f)
{
    AnosovProfile prof = rank_of_roots(f);
    if (prof.rank != 1)
        throw InputError("normalized_power_for_rank1 needs a rank-one polynomial");
    for (int m = 1; m <= 64; ++m) {
        FactorList fl = factor_over_rationals(composed_power(f, m));
        bool ok = true;
        for (const auto& fac : fl.factors)
            if (fac.poly.degree() != 2 || !is_anosov_polynomial(fac.poly))
                ok = false;
        if (ok)
            return m;
    }
    throw std::logic_error("no power up to 64 splits into Anosov quadratics");
}

} // namespace anosov
