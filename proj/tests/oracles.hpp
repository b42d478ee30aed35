#ifndef ANOSOV_TESTS_ORACLES_HPP
#define ANOSOV_TESTS_ORACLES_HPP

// Independent reference computations for the tests. Nothing here calls the
// routine it is used to check.

#include "anosov/factor.hpp"
#include "anosov/galois.hpp"
#include "anosov/matrix.hpp"
#include "anosov/polycore.hpp"
#include "anosov/roots.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace oracle {

using namespace anosov;

inline RatMatrix mat_pow(const RatMatrix& m, int e)
{
    RatMatrix r = RatMatrix::identity(m.rows());
    for (int i = 0; i < e; ++i)
        r = r * m;
    return r;
}

inline RatMatrix kron(const RatMatrix& a, const RatMatrix& b)
{
    RatMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return r;
}

inline IntPoly int_char_poly(const RatMatrix& m)
{
    return to_int_poly(char_poly(m).poly);
}

/* Characteristic polynomial of companion(f)^e. */
inline IntPoly power_by_matrix(const IntPoly& f, int e)
{
    return int_char_poly(mat_pow(companion(f), e));
}

inline IntPoly product_by_kronecker(const IntPoly& f, const IntPoly& g)
{
    return int_char_poly(kron(companion(f), companion(g)));
}

/* Pell solution by scanning b = 1, 2, ... */
inline std::pair<Int, Int> pell_brute_force(long k)
{
    for (Int b = 1;; ++b) {
        Int a2 = 1 + k * b * b;
        Int a = sqrt(a2);
        if (a * a == a2)
            return {a, b};
    }
}

/*
 * Hyperbolicity read off 256-bit isolating boxes: every box must lie
 * strictly inside or strictly outside the unit circle. A box meeting the
 * circle counts as a root on it.
 */
inline bool hyperbolic_numeric(const IntPoly& f, int bits = 256)
{
    RootSet rs = isolate_roots(f, bits);
    for (const auto& r : rs.roots) {
        const ComplexBox& b = r.box;
        auto clamp0 = [](const Rat& lo, const Rat& hi) {
            if (lo > 0)
                return lo;
            if (hi < 0)
                return hi;
            return Rat(0);
        };
        Rat nx = clamp0(b.re_lo, b.re_hi), ny = clamp0(b.im_lo, b.im_hi);
        Rat fx = std::max(abs(b.re_lo), abs(b.re_hi)), fy = std::max(abs(b.im_lo), abs(b.im_hi));
        Rat near = nx * nx + ny * ny, far = fx * fx + fy * fy;
        if (!(near > 1 || far < 1))
            return false;
    }
    return true;
}

/*
 * Galois group of a polynomial of degree <= 4 by brute force: the resolvent
 * R(x) = prod_s (x - sum c_i lambda_s(i)) over all permutations s of the
 * distinct roots is rounded to Z[x] from certified balls and factored; the
 * group is the set of s whose theta lies on the factor vanishing at the
 * identity's theta. The tag is read from order, transitivity and cycle type.
 */
inline std::optional<GaloisGroupTag> galois_brute_force(const IntPoly& f)
{
    IntPoly sf = squarefree_part(f);
    RootSet rs = isolate_roots(sf, 640);
    int n = int(rs.size());
    if (n < 2 || n > 4)
        return std::nullopt;
    const mpfr_prec_t prec = 700;
    std::vector<CBall> lam;
    for (int i = 0; i < n; ++i)
        lam.push_back(rs.ball(i, prec));
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do
        perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    const long weights[][4] = {{1, 3, 7, 19}, {2, 5, 11, 23}, {1, -4, 9, 29}};
    for (const auto& c : weights) {
        std::vector<CBall> theta;
        for (const auto& s : perms) {
            CBall t = CBall::from_int(0, prec);
            for (int i = 0; i < n; ++i)
                t = t + CBall::from_int(c[i], prec) * lam[s[i]];
            theta.push_back(t);
        }
        bool separated = true;
        for (size_t i = 0; i < theta.size() && separated; ++i)
            for (size_t j = i + 1; j < theta.size() && separated; ++j)
                separated = !(theta[i] - theta[j]).may_contain_zero();
        if (!separated)
            continue;
        std::vector<CBall> coeffs{CBall::from_int(1, prec)};
        for (const auto& t : theta) {
            std::vector<CBall> next(coeffs.size() + 1, CBall::from_int(0, prec));
            for (size_t i = 0; i < coeffs.size(); ++i) {
                next[i + 1] = next[i + 1] + coeffs[i];
                next[i] = next[i] - coeffs[i] * t;
            }
            coeffs = next;
        }
        std::vector<Int> ic;
        for (const auto& b : coeffs) {
            auto v = b.round_to_int();
            if (!v)
                return std::nullopt;
            ic.push_back(*v);
        }
        FactorList fl = factor_over_rationals(IntPoly(ic));
        const IntPoly* own = nullptr;
        for (const auto& fac : fl.factors)
            if (eval(fac.poly, theta[0]).may_contain_zero())
                own = &fac.poly;
        if (!own)
            return std::nullopt;
        std::vector<std::vector<int>> group;
        for (size_t i = 0; i < perms.size(); ++i)
            if (eval(*own, theta[i]).may_contain_zero())
                group.push_back(perms[i]);
        if (int(group.size()) != own->degree())
            return std::nullopt;

        std::vector<bool> orbit0(n, false);
        for (const auto& s : group)
            orbit0[s[0]] = true;
        bool transitive = std::all_of(orbit0.begin(), orbit0.end(), [](bool b) { return b; });
        bool four_cycle = false;
        for (const auto& s : group) {
            int len = 1;
            for (int j = s[0]; j != 0; j = s[j])
                ++len;
            four_cycle = four_cycle || (n == 4 && len == 4);
        }
        size_t order = group.size();
        if (n == 2)
            return GaloisGroupTag::Z2;
        if (n == 3)
            return order == 3 ? GaloisGroupTag::Z3 : GaloisGroupTag::S3;
        if (!transitive)
            return order == 2 ? GaloisGroupTag::Z2 : GaloisGroupTag::Z2xZ2;
        switch (order) {
        case 4: return four_cycle ? GaloisGroupTag::Z4 : GaloisGroupTag::K4;
        case 8: return GaloisGroupTag::D8;
        case 12: return GaloisGroupTag::A4;
        case 24: return GaloisGroupTag::S4;
        default: return std::nullopt;
        }
    }
    return std::nullopt;
}

/* Monic polynomials of the given degree, middle coefficients in [-b, b], constant +-1. */
inline void for_each_unit_poly(int degree, int bound, const std::function<void(const IntPoly&)>& fn)
{
    std::vector<int> mid(degree - 1, -bound);
    while (true) {
        for (int c0 : {-1, 1}) {
            std::vector<Int> c(degree + 1);
            c[0] = c0;
            c[degree] = 1;
            for (int i = 1; i < degree; ++i)
                c[i] = mid[i - 1];
            fn(IntPoly(c));
        }
        int t = 0;
        while (t < degree - 1 && mid[t] == bound)
            mid[t++] = -bound;
        if (t == degree - 1)
            break;
        ++mid[t];
    }
}

inline std::vector<IntPoly> anosov_corpus(int degree, int bound)
{
    std::vector<IntPoly> out;
    for_each_unit_poly(degree, bound, [&](const IntPoly& f) {
        if (is_anosov_polynomial(f))
            out.push_back(f);
    });
    return out;
}

} // namespace oracle

#endif
