#include "anosov/poly.hpp"

#include "anosov/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace anosov {

RatPoly to_rat(const IntPoly& p)
{
    std::vector<Rat> c(p.c.begin(), p.c.end());
    return RatPoly(std::move(c));
}

Int content(const IntPoly& p)
{
    Int g = 0;
    for (const auto& v : p.c)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g;
}

IntPoly primitive_part(const IntPoly& p)
{
    if (p.is_zero())
        return p;
    Int g = content(p);
    if (p.lead() < 0)
        g = -g;
    IntPoly r = p;
    for (auto& v : r.c)
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return r;
}

IntPoly primitive_part(const RatPoly& p)
{
    Int den = 1;
    for (const auto& v : p.c)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    std::vector<Int> c;
    for (const auto& v : p.c) {
        Rat s = v * den;
        c.push_back(s.get_num());
    }
    return primitive_part(IntPoly(std::move(c)));
}

RatPoly monic(const RatPoly& p)
{
    if (p.is_zero())
        return p;
    Rat l = p.lead();
    RatPoly r = p;
    for (auto& v : r.c)
        v /= l;
    return r;
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b)
{
    if (b.is_zero())
        throw std::domain_error("polynomial division by zero");
    std::vector<Rat> r = a.c;
    int db = b.degree();
    int dq = a.degree() - db;
    if (dq < 0)
        return {RatPoly(), a};
    std::vector<Rat> q(dq + 1, Rat(0));
    for (int i = dq; i >= 0; --i) {
        Rat t = r[i + db] / b.lead();
        q[i] = t;
        if (t == 0)
            continue;
        for (int j = 0; j <= db; ++j)
            r[i + j] -= t * b.c[j];
    }
    r.resize(db);
    return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b)
{
    if (b.is_zero())
        throw std::domain_error("polynomial division by zero");
    std::vector<Int> r = a.c;
    int db = b.degree();
    int dq = a.degree() - db;
    if (a.is_zero())
        return {};
    if (dq < 0)
        throw std::logic_error("inexact polynomial division");
    std::vector<Int> q(dq + 1, Int(0));
    for (int i = dq; i >= 0; --i) {
        Int& top = r[i + db];
        if (top == 0)
            continue;
        if (!mpz_divisible_p(top.get_mpz_t(), b.lead().get_mpz_t()))
            throw std::logic_error("inexact polynomial division");
        Int t = top / b.lead();
        q[i] = t;
        for (int j = 0; j <= db; ++j)
            r[i + j] -= t * b.c[j];
    }
    for (int j = 0; j < db; ++j)
        if (r[j] != 0)
            throw std::logic_error("inexact polynomial division");
    return IntPoly(std::move(q));
}

bool divides(const IntPoly& b, const IntPoly& a)
{
    try {
        exact_div(a, b);
        return true;
    } catch (const std::logic_error&) {
        return false;
    }
}

RatPoly gcd(const RatPoly& a, const RatPoly& b)
{
    RatPoly x = a, y = b;
    while (!y.is_zero()) {
        RatPoly r = divmod(x, y).second;
        x = std::move(y);
        y = monic(r);
    }
    return monic(x);
}

IntPoly gcd(const IntPoly& a, const IntPoly& b)
{
    return primitive_part(gcd(to_rat(a), to_rat(b)));
}

IntPoly squarefree_part(const IntPoly& p)
{
    if (p.degree() <= 0)
        return primitive_part(p);
    IntPoly g = gcd(p, p.derivative());
    return primitive_part(exact_div(primitive_part(p), g));
}

std::vector<IntPoly> squarefree_decomposition(const IntPoly& p)
{
    std::vector<IntPoly> out;
    if (p.degree() <= 0)
        return out;
    RatPoly f = to_rat(primitive_part(p));
    RatPoly a = gcd(f, f.derivative());
    RatPoly b = divmod(f, a).first;
    RatPoly c = divmod(f.derivative(), a).first;
    RatPoly d = c - b.derivative();
    while (b.degree() > 0) {
        RatPoly ai = gcd(b, d);
        out.push_back(primitive_part(ai));
        b = divmod(b, ai).first;
        c = divmod(d, ai).first;
        d = c - b.derivative();
    }
    while (!out.empty() && out.back().degree() == 0)
        out.pop_back();
    return out;
}

IntPoly reverse(const IntPoly& p)
{
    std::vector<Int> c(p.c.rbegin(), p.c.rend());
    return IntPoly(std::move(c));
}

IntPoly inflate(const IntPoly& p, int e)
{
    if (p.is_zero())
        return p;
    std::vector<Int> c(size_t(p.degree()) * e + 1, Int(0));
    for (size_t i = 0; i < p.c.size(); ++i)
        c[i * e] = p.c[i];
    return IntPoly(std::move(c));
}

IntPoly pow(const IntPoly& p, int e)
{
    IntPoly r = IntPoly::constant(1);
    for (int i = 0; i < e; ++i)
        r = r * p;
    return r;
}

static int sign_variations(const std::vector<RatPoly>& seq, const Rat& x)
{
    int count = 0, last = 0;
    for (const auto& q : seq) {
        int s = sgn(q.eval(x));
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++count;
        last = s;
    }
    return count;
}

int sturm_count(const RatPoly& p, const Rat& a, const Rat& b)
{
    if (p.is_zero())
        throw std::domain_error("sturm_count of zero polynomial");
    RatPoly g = gcd(p, p.derivative());
    RatPoly s = divmod(p, g).first;
    std::vector<RatPoly> seq{s, s.derivative()};
    while (!seq.back().is_zero()) {
        RatPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
        if (r.is_zero())
            break;
        seq.push_back(-r);
    }
    return sign_variations(seq, a) - sign_variations(seq, b);
}

bool schur_stable(const RatPoly& p)
{
    RatPoly cur = p;
    while (cur.degree() > 0) {
        int n = cur.degree();
        Rat a0 = cur.c[0], an = cur.lead();
        if (abs(a0) >= abs(an))
            return false;
        std::vector<Rat> q(n);
        for (int i = 1; i <= n; ++i)
            q[i - 1] = an * cur.c[i] - a0 * cur.c[n - i];
        cur = RatPoly(std::move(q));
    }
    return !cur.is_zero();
}

static Int bareiss_det(std::vector<std::vector<Int>> m)
{
    size_t n = m.size();
    if (n == 0)
        return 1;
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0)
                ++piv;
            if (piv == n)
                return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = t;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

Int resultant(const IntPoly& a, const IntPoly& b)
{
    int m = a.degree(), n = b.degree();
    if (m < 0 || n < 0)
        return 0;
    if (m == 0 && n == 0)
        return 1;
    size_t sz = size_t(m + n);
    std::vector<std::vector<Int>> s(sz, std::vector<Int>(sz, Int(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j)
            s[i][i + j] = a.c[m - j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j)
            s[n + i][i + j] = b.c[n - j];
    return bareiss_det(std::move(s));
}

Int discriminant(const IntPoly& p)
{
    int n = p.degree();
    if (n < 1)
        throw std::domain_error("discriminant of a constant");
    if (n == 1)
        return 1;
    Int r = resultant(p, p.derivative());
    mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), p.lead().get_mpz_t());
    if ((n * (n - 1) / 2) % 2)
        r = -r;
    return r;
}

std::vector<Rat> power_sums(const RatPoly& p, int count)
{
    RatPoly m = monic(p);
    int n = m.degree();
    std::vector<Rat> e(n + 1, Rat(0));
    e[0] = 1;
    for (int k = 1; k <= n; ++k)
        e[k] = (k % 2 ? -1 : 1) * m.c[n - k];
    std::vector<Rat> s(count + 1, Rat(0));
    for (int k = 1; k <= count; ++k) {
        Rat acc = 0;
        for (int i = 1; i < k && i <= n; ++i)
            acc += (i % 2 ? 1 : -1) * e[i] * s[k - i];
        if (k <= n)
            acc += (k % 2 ? 1 : -1) * Rat(k) * e[k];
        s[k] = acc;
    }
    s.erase(s.begin());
    return s;
}

RatPoly from_power_sums(const std::vector<Rat>& sums, int n)
{
    std::vector<Rat> e(n + 1, Rat(0));
    e[0] = 1;
    for (int k = 1; k <= n; ++k) {
        Rat acc = 0;
        for (int i = 1; i <= k; ++i)
            acc += (i % 2 ? 1 : -1) * e[k - i] * sums[i - 1];
        e[k] = acc / k;
    }
    std::vector<Rat> c(n + 1);
    for (int k = 0; k <= n; ++k)
        c[n - k] = (k % 2 ? -1 : 1) * e[k];
    return RatPoly(std::move(c));
}

IntPoly composed_power(const IntPoly& f, int e)
{
    if (e < 1)
        throw InputError("composed_power needs a positive exponent");
    if (f.degree() < 1)
        throw InputError("composed_power needs a nonconstant polynomial");
    if (e == 1)
        return primitive_part(f);
    int n = f.degree();
    std::vector<Rat> s = power_sums(to_rat(f), n * e);
    std::vector<Rat> t(n);
    for (int k = 1; k <= n; ++k)
        t[k - 1] = s[size_t(k) * e - 1];
    return primitive_part(from_power_sums(t, n));
}

IntPoly composed_product(const IntPoly& f, const IntPoly& g)
{
    if (f.degree() < 1 || g.degree() < 1)
        throw InputError("composed_product needs nonconstant polynomials");
    int n = f.degree() * g.degree();
    std::vector<Rat> a = power_sums(to_rat(f), n);
    std::vector<Rat> b = power_sums(to_rat(g), n);
    std::vector<Rat> t(n);
    for (int k = 0; k < n; ++k)
        t[k] = a[k] * b[k];
    return primitive_part(from_power_sums(t, n));
}

/* Parsing accepts "x^4-10x^2+1", "3*x - 2" and comma-separated descending lists. */
IntPoly parse_poly(const std::string& text)
{
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s.push_back(ch);
    if (s.empty())
        throw InputError("empty polynomial");
    bool has_var = s.find_first_of("xX") != std::string::npos;
    if (!has_var && (s.find(',') != std::string::npos || s.front() == '[')) {
        std::string body = s;
        body.erase(std::remove(body.begin(), body.end(), '['), body.end());
        body.erase(std::remove(body.begin(), body.end(), ']'), body.end());
        body.erase(std::remove(body.begin(), body.end(), '"'), body.end());
        std::vector<std::string> parts;
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ','))
            parts.push_back(item);
        return poly_from_descending(parts);
    }
    std::vector<Int> c;
    size_t i = 0;
    auto digits = [&](size_t& j) {
        size_t start = j;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
            ++j;
        return s.substr(start, j - start);
    };
    bool first = true;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw InputError("bad polynomial syntax: " + text);
        }
        first = false;
        std::string num = digits(i);
        Int coef = num.empty() ? Int(1) : Int(num);
        int deg = 0;
        if (i < s.size() && s[i] == '*') {
            ++i;
            if (num.empty())
                throw InputError("bad polynomial syntax: " + text);
        }
        if (i < s.size() && (s[i] == 'x' || s[i] == 'X')) {
            ++i;
            deg = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string ex = digits(i);
                if (ex.empty())
                    throw InputError("bad exponent in: " + text);
                deg = std::stoi(ex);
            }
        } else if (num.empty()) {
            throw InputError("bad polynomial syntax: " + text);
        }
        if (int(c.size()) <= deg)
            c.resize(deg + 1, Int(0));
        c[deg] += sign * coef;
    }
    return IntPoly(std::move(c));
}

IntPoly poly_from_descending(const std::vector<std::string>& coeffs)
{
    std::vector<Int> c;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        Int v;
        std::string t = *it;
        if (!t.empty() && t[0] == '+')
            t.erase(0, 1);
        if (t.empty() || v.set_str(t, 10) != 0)
            throw InputError("bad coefficient: '" + *it + "'");
        c.push_back(v);
    }
    return IntPoly(std::move(c));
}

std::vector<std::string> descending_strings(const IntPoly& p)
{
    std::vector<std::string> out;
    if (p.is_zero())
        return {"0"};
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it)
        out.push_back(it->get_str());
    return out;
}

template <class R>
static std::string render(const Polynomial<R>& p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        R v = p.c[i];
        if (v == 0)
            continue;
        bool neg = v < 0;
        R a = neg ? R(-v) : v;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? "-" : "+";
        std::string coef = a.get_str();
        if (i == 0 || a != 1)
            out += coef;
        if (i >= 1) {
            if (a != 1 && coef.find('/') != std::string::npos)
                out += "*";
            out += "x";
            if (i > 1)
                out += "^" + std::to_string(i);
        }
    }
    return out;
}

std::string to_string(const IntPoly& p) { return render(p); }
std::string to_string(const RatPoly& p) { return render(p); }

} // namespace anosov
