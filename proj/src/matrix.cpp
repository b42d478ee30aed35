#include "anosov/matrix.hpp"

#include <stdexcept>

namespace anosov {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<long>> rows)
{
    r_ = int(rows.size());
    c_ = r_ ? int(rows.begin()->size()) : 0;
    for (const auto& row : rows) {
        if (int(row.size()) != c_)
            throw std::invalid_argument("ragged matrix literal");
        for (long v : row)
            a_.emplace_back(v);
    }
}

RatMatrix RatMatrix::identity(int n)
{
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVec>& cols, int rows)
{
    RatMatrix m(rows, int(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < rows; ++i)
            m(i, int(j)) = cols[j][i];
    return m;
}

RatVec RatMatrix::column(int j) const
{
    RatVec v(r_);
    for (int i = 0; i < r_; ++i)
        v[i] = (*this)(i, j);
    return v;
}

RatVec RatMatrix::row(int i) const
{
    return RatVec(a_.begin() + size_t(i) * c_, a_.begin() + size_t(i + 1) * c_);
}

RatMatrix RatMatrix::transpose() const
{
    RatMatrix t(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b)
{
    if (a.c_ != b.r_)
        throw std::invalid_argument("matrix shape mismatch");
    RatMatrix m(a.r_, b.c_);
    for (int i = 0; i < a.r_; ++i)
        for (int k = 0; k < a.c_; ++k) {
            const Rat& x = a(i, k);
            if (x == 0)
                continue;
            for (int j = 0; j < b.c_; ++j)
                m(i, j) += x * b(k, j);
        }
    return m;
}

RatVec operator*(const RatMatrix& a, const RatVec& v)
{
    if (a.c_ != int(v.size()))
        throw std::invalid_argument("matrix shape mismatch");
    RatVec out(a.r_, Rat(0));
    for (int i = 0; i < a.r_; ++i)
        for (int k = 0; k < a.c_; ++k)
            if (v[k] != 0)
                out[i] += a(i, k) * v[k];
    return out;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b)
{
    RatMatrix m = a;
    for (size_t i = 0; i < m.a_.size(); ++i)
        m.a_[i] += b.a_[i];
    return m;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b)
{
    RatMatrix m = a;
    for (size_t i = 0; i < m.a_.size(); ++i)
        m.a_[i] -= b.a_[i];
    return m;
}

RatMatrix RatMatrix::scaled(const Rat& s) const
{
    RatMatrix m = *this;
    for (auto& v : m.a_)
        v *= s;
    return m;
}

bool RatMatrix::is_zero() const
{
    for (const auto& v : a_)
        if (v != 0)
            return false;
    return true;
}

bool RatMatrix::is_integral() const
{
    for (const auto& v : a_)
        if (v.get_den() != 1)
            return false;
    return true;
}

RatMatrix block_diagonal(const std::vector<RatMatrix>& blocks)
{
    int n = 0;
    for (const auto& b : blocks)
        n += b.rows();
    RatMatrix m(n, n);
    int off = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j)
                m(off + i, off + j) = b(i, j);
        off += b.rows();
    }
    return m;
}

RatMatrix companion(const IntPoly& p)
{
    int n = p.degree();
    if (n < 1 || p.lead() != 1)
        throw std::invalid_argument("companion matrix needs a monic polynomial");
    RatMatrix m(n, n);
    for (int i = 1; i < n; ++i)
        m(i, i - 1) = 1;
    for (int i = 0; i < n; ++i)
        m(i, n - 1) = -p.c[i];
    return m;
}

std::vector<int> rref(RatMatrix& m)
{
    std::vector<int> piv;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = row;
        while (p < m.rows() && m(p, col) == 0)
            ++p;
        if (p == m.rows())
            continue;
        if (p != row)
            for (int j = 0; j < m.cols(); ++j)
                std::swap(m(p, j), m(row, j));
        Rat inv = 1 / m(row, col);
        for (int j = col; j < m.cols(); ++j)
            m(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0)
                continue;
            Rat f = m(i, col);
            for (int j = col; j < m.cols(); ++j)
                m(i, j) -= f * m(row, j);
        }
        piv.push_back(col);
        ++row;
    }
    return piv;
}

int rank(const RatMatrix& m)
{
    RatMatrix t = m;
    return int(rref(t).size());
}

Rat det(const RatMatrix& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("det of non-square matrix");
    RatMatrix t = m;
    int n = m.rows();
    Rat d = 1;
    for (int col = 0; col < n; ++col) {
        int p = col;
        while (p < n && t(p, col) == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != col) {
            for (int j = 0; j < n; ++j)
                std::swap(t(p, j), t(col, j));
            d = -d;
        }
        d *= t(col, col);
        for (int i = col + 1; i < n; ++i) {
            if (t(i, col) == 0)
                continue;
            Rat f = t(i, col) / t(col, col);
            for (int j = col; j < n; ++j)
                t(i, j) -= f * t(col, j);
        }
    }
    return d;
}

RatMatrix inverse(const RatMatrix& m)
{
    int n = m.rows();
    if (n != m.cols())
        throw std::domain_error("inverse of non-square matrix");
    RatMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto piv = rref(aug);
    if (int(piv.size()) < n || piv[n - 1] != n - 1)
        throw std::domain_error("singular matrix");
    RatMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            inv(i, j) = aug(i, n + j);
    return inv;
}

std::vector<RatVec> nullspace(const RatMatrix& m)
{
    RatMatrix t = m;
    auto piv = rref(t);
    std::vector<bool> is_piv(m.cols(), false);
    for (int p : piv)
        is_piv[p] = true;
    std::vector<RatVec> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_piv[free])
            continue;
        RatVec v(m.cols(), Rat(0));
        v[free] = 1;
        for (size_t r = 0; r < piv.size(); ++r)
            v[piv[r]] = -t(int(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool solve_unique(const RatMatrix& m, const RatVec& b, RatVec& x)
{
    int rows = m.rows(), cols = m.cols();
    RatMatrix aug(rows, cols + 1);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j)
            aug(i, j) = m(i, j);
        aug(i, cols) = b[i];
    }
    auto piv = rref(aug);
    if (!piv.empty() && piv.back() == cols)
        return false;
    if (int(piv.size()) != cols)
        return false;
    x.assign(cols, Rat(0));
    for (int r = 0; r < cols; ++r)
        x[r] = aug(r, cols);
    return true;
}

RatMatrix poly_eval(const RatPoly& p, const RatMatrix& m)
{
    int n = m.rows();
    RatMatrix acc(n, n);
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * m;
        for (int k = 0; k < n; ++k)
            acc(k, k) += p.c[i];
    }
    return acc;
}

CharPoly char_poly(const RatMatrix& a)
{
    int n = a.rows();
    if (n != a.cols())
        throw std::invalid_argument("char_poly of non-square matrix");
    RatMatrix h = a;
    // similarity reduction to upper Hessenberg form
    for (int m = 1; m + 1 < n; ++m) {
        int i = m;
        while (i < n && h(i, m - 1) == 0)
            ++i;
        if (i == n)
            continue;
        if (i != m) {
            for (int j = 0; j < n; ++j)
                std::swap(h(i, j), h(m, j));
            for (int j = 0; j < n; ++j)
                std::swap(h(j, i), h(j, m));
        }
        Rat t = h(m, m - 1);
        for (int r = m + 1; r < n; ++r) {
            if (h(r, m - 1) == 0)
                continue;
            Rat u = h(r, m - 1) / t;
            for (int j = 0; j < n; ++j)
                h(r, j) -= u * h(m, j);
            for (int j = 0; j < n; ++j)
                h(j, m) += u * h(j, r);
        }
    }
    std::vector<RatPoly> p(n + 1);
    p[0] = RatPoly::constant(1);
    RatPoly x = RatPoly::x();
    for (int m = 0; m < n; ++m) {
        p[m + 1] = (x - RatPoly::constant(h(m, m))) * p[m];
        Rat t = 1;
        for (int i = m - 1; i >= 0; --i) {
            t *= h(i + 1, i);
            if (t == 0)
                break;
            p[m + 1] -= p[i] * (t * h(i, m));
        }
    }
    CharPoly out{p[n], true};
    for (const auto& v : out.poly.c)
        if (v.get_den() != 1)
            out.integral = false;
    return out;
}

} // namespace anosov
