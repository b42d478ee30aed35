#include "anosov/lattice.hpp"

#include <stdexcept>

namespace anosov {

namespace {

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b)
{
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

void gram_schmidt(const std::vector<IntVec>& b, std::vector<std::vector<Rat>>& mu,
                  std::vector<Rat>& B)
{
    size_t n = b.size(), m = b.empty() ? 0 : b[0].size();
    std::vector<std::vector<Rat>> bs(n, std::vector<Rat>(m));
    mu.assign(n, std::vector<Rat>(n, Rat(0)));
    B.assign(n, Rat(0));
    for (size_t i = 0; i < n; ++i) {
        std::vector<Rat> bi(b[i].begin(), b[i].end());
        bs[i] = bi;
        for (size_t j = 0; j < i; ++j) {
            mu[i][j] = dot(bi, bs[j]) / B[j];
            for (size_t t = 0; t < m; ++t)
                bs[i][t] -= mu[i][j] * bs[j][t];
        }
        B[i] = dot(bs[i], bs[i]);
        if (B[i] == 0)
            throw std::invalid_argument("lll_reduce: dependent rows");
    }
}

Int round_rat(const Rat& q)
{
    // nearest integer, halves rounded down
    Rat t = q + Rat(1, 2);
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
    return f;
}

} // namespace

std::vector<IntVec> lll_reduce(std::vector<IntVec> b)
{
    size_t n = b.size();
    if (n < 2)
        return b;
    std::vector<std::vector<Rat>> mu;
    std::vector<Rat> B;
    gram_schmidt(b, mu, B);
    const Rat delta(3, 4);
    size_t k = 1;
    while (k < n) {
        for (size_t j = k; j-- > 0;) {
            if (abs(mu[k][j]) <= Rat(1, 2))
                continue;
            Int q = round_rat(mu[k][j]);
            for (size_t t = 0; t < b[k].size(); ++t)
                b[k][t] -= q * b[j][t];
            for (size_t t = 0; t < j; ++t)
                mu[k][t] -= Rat(q) * mu[j][t];
            mu[k][j] -= Rat(q);
        }
        if (B[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
            ++k;
        } else {
            Rat m = mu[k][k - 1];
            Rat Bn = B[k] + m * m * B[k - 1];
            std::swap(b[k], b[k - 1]);
            for (size_t j = 0; j + 1 < k; ++j)
                std::swap(mu[k][j], mu[k - 1][j]);
            mu[k][k - 1] = m * B[k - 1] / Bn;
            B[k] = B[k - 1] * B[k] / Bn;
            B[k - 1] = Bn;
            for (size_t i = k + 1; i < n; ++i) {
                Rat t = mu[i][k];
                mu[i][k] = mu[i][k - 1] - m * t;
                mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k];
            }
            k = k > 1 ? k - 1 : 1;
        }
    }
    return b;
}

std::vector<IntVec> hnf(std::vector<IntVec> rows)
{
    if (rows.empty())
        return rows;
    size_t m = rows[0].size();
    size_t r = 0;
    for (size_t col = 0; col < m && r < rows.size(); ++col) {
        // Euclid on column col among rows r..end
        while (true) {
            size_t piv = rows.size();
            for (size_t i = r; i < rows.size(); ++i)
                if (rows[i][col] != 0 &&
                    (piv == rows.size() || abs(rows[i][col]) < abs(rows[piv][col])))
                    piv = i;
            if (piv == rows.size())
                break;
            std::swap(rows[r], rows[piv]);
            bool clean = true;
            for (size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][col] == 0)
                    continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[r][col].get_mpz_t());
                for (size_t t = 0; t < m; ++t)
                    rows[i][t] -= q * rows[r][t];
                if (rows[i][col] != 0)
                    clean = false;
            }
            if (clean)
                break;
        }
        if (r < rows.size() && rows[r][col] != 0) {
            if (rows[r][col] < 0)
                for (auto& v : rows[r])
                    v = -v;
            for (size_t i = 0; i < r; ++i) {
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[r][col].get_mpz_t());
                if (q != 0)
                    for (size_t t = 0; t < m; ++t)
                        rows[i][t] -= q * rows[r][t];
            }
            ++r;
        }
    }
    rows.resize(r);
    return rows;
}

bool hnf_contains(const std::vector<IntVec>& h, const IntVec& v)
{
    IntVec w = v;
    size_t row = 0;
    for (size_t col = 0; col < w.size(); ++col) {
        if (row < h.size() && h[row][col] != 0) {
            if (w[col] % h[row][col] != 0)
                return false;
            Int q = w[col] / h[row][col];
            for (size_t t = 0; t < w.size(); ++t)
                w[t] -= q * h[row][t];
            ++row;
        } else if (w[col] != 0) {
            return false;
        }
    }
    return true;
}

std::vector<IntVec> integer_kernel(const std::vector<IntVec>& rows)
{
    size_t n = rows.size();
    if (n == 0)
        return {};
    size_t m = rows[0].size();
    std::vector<IntVec> aug;
    for (size_t i = 0; i < n; ++i) {
        IntVec v = rows[i];
        for (size_t j = 0; j < n; ++j)
            v.push_back(Int(i == j ? 1 : 0));
        aug.push_back(std::move(v));
    }
    auto h = hnf(aug);
    std::vector<IntVec> ker;
    for (const auto& v : h) {
        bool zero = true;
        for (size_t t = 0; t < m; ++t)
            if (v[t] != 0)
                zero = false;
        if (zero)
            ker.emplace_back(v.begin() + long(m), v.end());
    }
    return hnf(ker);
}

std::vector<IntVec> scaled_preimage(const std::vector<IntVec>& rows, long mult, int dim)
{
    std::vector<IntVec> gens = rows;
    for (int i = 0; i < dim; ++i) {
        IntVec v(dim, Int(0));
        v[i] = mult;
        gens.push_back(v);
    }
    auto ker = integer_kernel(gens);
    std::vector<IntVec> out;
    for (const auto& k : ker)
        out.emplace_back(k.end() - dim, k.end());
    return hnf(out);
}

} // namespace anosov
