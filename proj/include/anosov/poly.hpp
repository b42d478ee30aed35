#ifndef ANOSOV_POLY_HPP
#define ANOSOV_POLY_HPP

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace anosov {

using Int = mpz_class;
using Rat = mpq_class;

/*
 * Dense univariate polynomial, coefficients in ascending degree order.
 * The coefficient vector never has a trailing zero; the zero polynomial
 * is the empty vector and has degree -1.
 */
template <class R>
class Polynomial {
public:
    std::vector<R> c;

    Polynomial() = default;
    explicit Polynomial(std::vector<R> coeffs) : c(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<long> ascending)
    {
        for (long v : ascending)
            c.emplace_back(v);
        trim();
    }

    static Polynomial constant(const R& v) { return Polynomial(std::vector<R>{v}); }
    static Polynomial monomial(const R& v, int deg)
    {
        std::vector<R> cs(deg + 1, R(0));
        cs[deg] = v;
        return Polynomial(std::move(cs));
    }
    static Polynomial x() { return monomial(R(1), 1); }

    int degree() const { return int(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const R& lead() const { return c.back(); }
    R coeff(int i) const { return (i >= 0 && i < int(c.size())) ? c[i] : R(0); }

    void trim()
    {
        while (!c.empty() && c.back() == 0)
            c.pop_back();
    }

    R eval(const R& x) const
    {
        R acc = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    Polynomial derivative() const
    {
        std::vector<R> d;
        for (size_t i = 1; i < c.size(); ++i)
            d.push_back(c[i] * R(long(i)));
        return Polynomial(std::move(d));
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        if (o.c.size() > c.size())
            c.resize(o.c.size(), R(0));
        for (size_t i = 0; i < o.c.size(); ++i)
            c[i] += o.c[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o)
    {
        if (o.c.size() > c.size())
            c.resize(o.c.size(), R(0));
        for (size_t i = 0; i < o.c.size(); ++i)
            c[i] -= o.c[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const R& s)
    {
        for (auto& v : c)
            v *= s;
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a)
    {
        for (auto& v : a.c)
            v = -v;
        return a;
    }
    friend Polynomial operator*(Polynomial a, const R& s) { return a *= s; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<R> r(a.c.size() + b.c.size() - 1, R(0));
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i] == 0)
                continue;
            for (size_t j = 0; j < b.c.size(); ++j)
                r[i + j] += a.c[i] * b.c[j];
        }
        return Polynomial(std::move(r));
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c == b.c; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
};

using IntPoly = Polynomial<Int>;
using RatPoly = Polynomial<Rat>;

RatPoly to_rat(const IntPoly& p);
Int content(const IntPoly& p);
/* Primitive integer multiple with positive leading coefficient. */
IntPoly primitive_part(const IntPoly& p);
IntPoly primitive_part(const RatPoly& p);
RatPoly monic(const RatPoly& p);

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
/* Exact division over Z; throws std::logic_error when b does not divide a. */
IntPoly exact_div(const IntPoly& a, const IntPoly& b);
bool divides(const IntPoly& b, const IntPoly& a);

RatPoly gcd(const RatPoly& a, const RatPoly& b);
IntPoly gcd(const IntPoly& a, const IntPoly& b);

IntPoly squarefree_part(const IntPoly& p);
/* Yun decomposition: result[m-1] is the product of the irreducible factors of multiplicity m. */
std::vector<IntPoly> squarefree_decomposition(const IntPoly& p);

/* x^deg p(1/x) */
IntPoly reverse(const IntPoly& p);
/* p(x^e) */
IntPoly inflate(const IntPoly& p, int e);
IntPoly pow(const IntPoly& p, int e);

/* Number of distinct real roots in (a, b]; p must be nonzero. */
int sturm_count(const RatPoly& p, const Rat& a, const Rat& b);
/* Exact test that every complex root lies in the open unit disk. */
bool schur_stable(const RatPoly& p);

Int discriminant(const IntPoly& p);
Int resultant(const IntPoly& a, const IntPoly& b);

/* Power sums p_1..p_count of the roots, in Q. */
std::vector<Rat> power_sums(const RatPoly& p, int count);
/* Monic polynomial of degree n with the given power sums p_1..p_n. */
RatPoly from_power_sums(const std::vector<Rat>& sums, int n);

IntPoly composed_power(const IntPoly& f, int e);
IntPoly composed_product(const IntPoly& f, const IntPoly& g);

IntPoly parse_poly(const std::string& text);
IntPoly poly_from_descending(const std::vector<std::string>& coeffs);
std::vector<std::string> descending_strings(const IntPoly& p);
std::string to_string(const IntPoly& p);
std::string to_string(const RatPoly& p);

} // namespace anosov

#endif
