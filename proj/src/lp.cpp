#include "anosov/lp.hpp"

#include <stdexcept>

namespace anosov {

namespace {

struct Tableau {
    int m = 0, n = 0;
    std::vector<std::vector<Rat>> t; // m rows, n + 1 columns, rhs last
    std::vector<int> basis;

    void pivot(int r, int c)
    {
        Rat inv = 1 / t[r][c];
        for (auto& v : t[r])
            v *= inv;
        for (int i = 0; i < m; ++i) {
            if (i == r || t[i][c] == 0)
                continue;
            Rat f = t[i][c];
            for (int j = 0; j <= n; ++j)
                if (t[r][j] != 0)
                    t[i][j] -= f * t[r][j];
        }
        basis[r] = c;
    }

    /* Returns false when unbounded. */
    bool optimize(const std::vector<Rat>& cost, const std::vector<bool>& allowed)
    {
        while (true) {
            int enter = -1;
            for (int j = 0; j < n && enter < 0; ++j) {
                if (!allowed[j])
                    continue;
                Rat d = cost[j];
                for (int i = 0; i < m; ++i)
                    if (t[i][j] != 0)
                        d -= cost[basis[i]] * t[i][j];
                if (d < 0)
                    enter = j;
            }
            if (enter < 0)
                return true;
            int leave = -1;
            Rat best;
            for (int i = 0; i < m; ++i) {
                if (t[i][enter] <= 0)
                    continue;
                Rat ratio = t[i][n] / t[i][enter];
                if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0)
                return false;
            pivot(leave, enter);
        }
    }
};

} // namespace

std::optional<RatVec> lp_minimize(const RatMatrix& A, const RatVec& b, const RatVec& cost)
{
    int m = A.rows(), n = A.cols();
    Tableau tab;
    tab.m = m;
    tab.n = n + m;
    tab.t.assign(m, std::vector<Rat>(n + m + 1, Rat(0)));
    tab.basis.resize(m);
    for (int i = 0; i < m; ++i) {
        int s = b[i] < 0 ? -1 : 1;
        for (int j = 0; j < n; ++j)
            tab.t[i][j] = s * A(i, j);
        tab.t[i][n + i] = 1;
        tab.t[i][n + m] = s * b[i];
        tab.basis[i] = n + i;
    }
    std::vector<Rat> c1(n + m, Rat(0));
    for (int i = 0; i < m; ++i)
        c1[n + i] = 1;
    std::vector<bool> all(n + m, true);
    tab.optimize(c1, all);
    for (int i = 0; i < m; ++i)
        if (tab.basis[i] >= n && tab.t[i][n + m] != 0)
            return std::nullopt;
    // drive artificials out; drop redundant rows
    for (int i = 0; i < tab.m; ++i) {
        if (tab.basis[i] < n)
            continue;
        int col = -1;
        for (int j = 0; j < n; ++j)
            if (tab.t[i][j] != 0) {
                col = j;
                break;
            }
        if (col >= 0) {
            tab.pivot(i, col);
        } else {
            tab.t.erase(tab.t.begin() + i);
            tab.basis.erase(tab.basis.begin() + i);
            --tab.m;
            --i;
        }
    }
    std::vector<Rat> c2(n + m, Rat(0));
    for (int j = 0; j < n; ++j)
        c2[j] = cost[j];
    std::vector<bool> orig(n + m, false);
    for (int j = 0; j < n; ++j)
        orig[j] = true;
    if (!tab.optimize(c2, orig))
        throw std::runtime_error("linear program is unbounded");
    RatVec x(n, Rat(0));
    for (int i = 0; i < tab.m; ++i)
        if (tab.basis[i] < n)
            x[tab.basis[i]] = tab.t[i][n + m];
    return x;
}

} // namespace anosov
