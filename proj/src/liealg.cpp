#include "anosov/liealg.hpp"

#include "anosov/errors.hpp"
#include "anosov/lp.hpp"
#include "anosov/polycore.hpp"

#include <algorithm>
#include <set>

namespace anosov {

namespace {

bool is_zero(const RatVec& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

RatVec unit(int n, int i)
{
    RatVec v(n, Rat(0));
    v[i] = 1;
    return v;
}

void axpy(RatVec& y, const Rat& a, const RatVec& x)
{
    if (a == 0)
        return;
    for (size_t t = 0; t < y.size(); ++t)
        if (x[t] != 0)
            y[t] += a * x[t];
}

/* [b_i, v] */
RatVec ad(const LieAlgebra& g, int i, const RatVec& v)
{
    RatVec out(g.dim(), Rat(0));
    for (int t = 0; t < g.dim(); ++t)
        if (v[t] != 0 && t != i)
            axpy(out, v[t], g.bracket(i, t));
    return out;
}

Int lcm_of_denominators(const std::vector<Rat>& v)
{
    Int l = 1;
    for (const auto& x : v)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    return l;
}

std::vector<Int> to_primitive_ints(const std::vector<Rat>& v)
{
    Int l = lcm_of_denominators(v);
    std::vector<Int> out;
    Int g = 0;
    for (const auto& x : v) {
        Rat s = x * l;
        out.push_back(s.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
    }
    if (g > 1)
        for (auto& x : out)
            x /= g;
    return out;
}

RatVec constraint_row(const GradingConstraint& c, int n)
{
    RatVec r(n, Rat(0));
    r[c.k] += 1;
    r[c.i] -= 1;
    r[c.j] -= 1;
    return r;
}

void check_square(const LieAlgebra& g, const RatMatrix& m)
{
    if (m.rows() != g.dim() || m.cols() != g.dim())
        throw InputError("matrix size does not match the algebra dimension");
}

} // namespace

SparseVec to_sparse(const RatVec& v)
{
    SparseVec out;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0)
            out.emplace_back(int(i), v[i]);
    return out;
}

RatVec to_dense(const SparseVec& v, int dim)
{
    RatVec out(dim, Rat(0));
    for (const auto& [i, c] : v) {
        if (i < 0 || i >= dim)
            throw InputError("basis index out of range");
        out[i] = c;
    }
    return out;
}

LieAlgebra::LieAlgebra(std::vector<std::string> labels) : labels_(std::move(labels))
{
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size())
        throw InputError("duplicate basis labels");
}

LieAlgebra LieAlgebra::abelian(int n, const std::string& prefix)
{
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i)
        labels.push_back(prefix + std::to_string(i));
    return LieAlgebra(labels);
}

int LieAlgebra::index_of(const std::string& label) const
{
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end())
        throw InputError("unknown basis label: " + label);
    return int(it - labels_.begin());
}

void LieAlgebra::set_bracket(int i, int j, const RatVec& out)
{
    if (int(out.size()) != dim())
        throw InputError("bracket vector has the wrong dimension");
    if (i < 0 || j < 0 || i >= dim() || j >= dim())
        throw InputError("basis index out of range");
    if (i == j) {
        if (!is_zero(out))
            throw InputError("[b_i, b_i] must vanish");
        return;
    }
    RatVec v = out;
    if (i > j) {
        std::swap(i, j);
        for (auto& x : v)
            x = -x;
    }
    if (is_zero(v))
        table_.erase({i, j});
    else
        table_[{i, j}] = to_sparse(v);
}

void LieAlgebra::set_bracket(int i, int j, const SparseVec& out)
{
    set_bracket(i, j, to_dense(out, dim()));
}

void LieAlgebra::add_bracket(int i, int j, int k, const Rat& c)
{
    RatVec v = bracket(i, j);
    if (k < 0 || k >= dim())
        throw InputError("basis index out of range");
    v[k] += c;
    set_bracket(i, j, v);
}

void LieAlgebra::add_bracket(const std::string& a, const std::string& b, const std::string& target,
                             const Rat& c)
{
    add_bracket(index_of(a), index_of(b), index_of(target), c);
}

RatVec LieAlgebra::bracket(int i, int j) const
{
    RatVec out(dim(), Rat(0));
    if (i == j)
        return out;
    int s = 1;
    if (i > j) {
        std::swap(i, j);
        s = -1;
    }
    auto it = table_.find({i, j});
    if (it != table_.end())
        for (const auto& [k, c] : it->second)
            out[k] = s * c;
    return out;
}

RatVec LieAlgebra::bracket(const RatVec& u, const RatVec& v) const
{
    RatVec out(dim(), Rat(0));
    for (const auto& [key, vec] : table_) {
        auto [i, j] = key;
        Rat c = u[i] * v[j] - u[j] * v[i];
        if (c == 0)
            continue;
        for (const auto& [k, x] : vec)
            out[k] += c * x;
    }
    return out;
}

Subspace Subspace::span(int ambient, const std::vector<RatVec>& vectors)
{
    Subspace s(ambient);
    if (vectors.empty())
        return s;
    RatMatrix m(int(vectors.size()), ambient);
    for (size_t r = 0; r < vectors.size(); ++r) {
        if (int(vectors[r].size()) != ambient)
            throw InputError("vector has the wrong dimension");
        for (int c = 0; c < ambient; ++c)
            m(int(r), c) = vectors[r][c];
    }
    auto piv = rref(m);
    for (size_t r = 0; r < piv.size(); ++r)
        s.basis_.push_back(m.row(int(r)));
    return s;
}

Subspace Subspace::whole(int ambient)
{
    std::vector<RatVec> e;
    for (int i = 0; i < ambient; ++i)
        e.push_back(unit(ambient, i));
    return span(ambient, e);
}

bool Subspace::contains(const RatVec& v) const
{
    RatVec w = v;
    for (const auto& row : basis_) {
        auto p = std::find_if(row.begin(), row.end(), [](const Rat& x) { return x != 0; });
        int col = int(p - row.begin());
        if (w[col] != 0)
            axpy(w, -w[col], row);
    }
    return is_zero(w);
}

bool Subspace::contains(const Subspace& s) const
{
    return std::all_of(s.basis().begin(), s.basis().end(),
                       [&](const RatVec& v) { return contains(v); });
}

Subspace sum(const Subspace& a, const Subspace& b)
{
    std::vector<RatVec> all = a.basis();
    all.insert(all.end(), b.basis().begin(), b.basis().end());
    return Subspace::span(a.ambient(), all);
}

Subspace intersect(const Subspace& a, const Subspace& b)
{
    int n = a.ambient();
    if (a.dim() == 0 || b.dim() == 0)
        return Subspace(n);
    RatMatrix m(n, a.dim() + b.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int t = 0; t < n; ++t)
            m(t, i) = a.basis()[i][t];
    for (int i = 0; i < b.dim(); ++i)
        for (int t = 0; t < n; ++t)
            m(t, a.dim() + i) = -b.basis()[i][t];
    std::vector<RatVec> out;
    for (const auto& x : nullspace(m)) {
        RatVec v(n, Rat(0));
        for (int i = 0; i < a.dim(); ++i)
            axpy(v, x[i], a.basis()[i]);
        out.push_back(v);
    }
    return Subspace::span(n, out);
}

std::vector<RatVec> complement_vectors(const Subspace& big, const Subspace& small)
{
    Subspace cur = small;
    std::vector<RatVec> added;
    for (const auto& v : big.basis()) {
        if (cur.contains(v))
            continue;
        added.push_back(v);
        cur = sum(cur, Subspace::span(big.ambient(), {v}));
    }
    return added;
}

ValidationReport validate(const LieAlgebra& g)
{
    ValidationReport rep;
    int n = g.dim();
    for (const auto& [key, vec] : g.structure()) {
        if (key.first < 0 || key.second >= n || key.first >= key.second)
            throw InputError("structure constants do not match the dimension");
        for (const auto& [k, c] : vec)
            if (k < 0 || k >= n)
                throw InputError("structure constants do not match the dimension");
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                RatVec s = ad(g, i, g.bracket(j, k));
                RatVec t = ad(g, j, g.bracket(k, i));
                RatVec u = ad(g, k, g.bracket(i, j));
                for (int r = 0; r < n; ++r)
                    s[r] += t[r] + u[r];
                if (!is_zero(s))
                    rep.jacobi_violations.push_back({i, j, k});
            }
    rep.jacobi = rep.jacobi_violations.empty();
    Subspace gamma = Subspace::whole(n);
    while (gamma.dim() > 0) {
        std::vector<RatVec> gens;
        for (int a = 0; a < n; ++a)
            for (const auto& w : gamma.basis())
                gens.push_back(ad(g, a, w));
        Subspace next = Subspace::span(n, gens);
        if (next.dim() == gamma.dim())
            break;
        gamma = next;
    }
    rep.nilpotent = gamma.dim() == 0;
    rep.ok = rep.jacobi && rep.nilpotent;
    if (!rep.jacobi)
        rep.message = "Jacobi identity fails on " + std::to_string(rep.jacobi_violations.size()) +
                      " basis triples";
    else if (!rep.nilpotent)
        rep.message = "lower central series stabilizes at dimension " +
                      std::to_string(gamma.dim());
    else
        rep.message = "ok";
    return rep;
}

SeriesChain lower_central_series(const LieAlgebra& g)
{
    int n = g.dim();
    SeriesChain sc;
    sc.chain.push_back(Subspace::whole(n));
    while (sc.chain.back().dim() > 0) {
        const Subspace& gamma = sc.chain.back();
        std::vector<RatVec> gens;
        for (int a = 0; a < n; ++a)
            for (const auto& w : gamma.basis())
                gens.push_back(ad(g, a, w));
        Subspace next = Subspace::span(n, gens);
        if (next.dim() == gamma.dim())
            throw InputError("algebra is not nilpotent");
        sc.type.push_back(gamma.dim() - next.dim());
        sc.chain.push_back(next);
    }
    return sc;
}

Subspace center(const LieAlgebra& g)
{
    int n = g.dim();
    if (n == 0)
        return Subspace(0);
    RatMatrix m(n * n, n);
    for (int a = 0; a < n; ++a)
        for (int j = 0; j < n; ++j) {
            RatVec v = g.bracket(a, j);
            for (int t = 0; t < n; ++t)
                m(j * n + t, a) = v[t];
        }
    return Subspace::span(n, nullspace(m));
}

Subspace derived(const LieAlgebra& g)
{
    std::vector<RatVec> gens;
    for (const auto& [key, vec] : g.structure())
        gens.push_back(to_dense(vec, g.dim()));
    return Subspace::span(g.dim(), gens);
}

int abelian_factor_dim(const LieAlgebra& g)
{
    Subspace z = center(g);
    return z.dim() - intersect(z, derived(g)).dim();
}

AbelianSplit split_abelian_factor(const LieAlgebra& g)
{
    int n = g.dim();
    Subspace z = center(g), d = derived(g);
    Subspace a = Subspace::span(n, complement_vectors(z, intersect(z, d)));
    std::vector<RatVec> rest = complement_vectors(Subspace::whole(n), sum(a, d));
    Subspace ideal = sum(d, Subspace::span(n, rest));
    return {a, ideal};
}

bool is_automorphism(const LieAlgebra& g, const RatMatrix& m)
{
    check_square(g, m);
    int n = g.dim();
    if (det(m) == 0)
        return false;
    std::vector<RatVec> img;
    for (int j = 0; j < n; ++j)
        img.push_back(m.column(j));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (m * g.bracket(i, j) != g.bracket(img[i], img[j]))
                return false;
    return true;
}

bool is_expanding(const LieAlgebra& g, const RatMatrix& m)
{
    return is_automorphism(g, m) && all_roots_outside_unit_disk(char_poly(m).poly);
}

bool is_anosov(const LieAlgebra& g, const RatMatrix& m)
{
    if (!is_automorphism(g, m))
        return false;
    CharPoly cp = char_poly(m);
    if (!cp.integral)
        return false;
    IntPoly f = to_int_poly(cp.poly);
    return is_integer_like(f) && is_hyperbolic(f);
}

LieAlgebra direct_sum(const std::vector<LieAlgebra>& gs)
{
    std::vector<std::string> labels;
    std::set<std::string> seen;
    for (const auto& g : gs)
        for (auto l : g.labels()) {
            while (seen.count(l))
                l += "'";
            seen.insert(l);
            labels.push_back(l);
        }
    LieAlgebra out(labels);
    int off = 0;
    for (const auto& g : gs) {
        for (const auto& [key, vec] : g.structure()) {
            SparseVec shifted;
            for (const auto& [k, c] : vec)
                shifted.emplace_back(k + off, c);
            out.set_bracket(key.first + off, key.second + off, shifted);
        }
        off += g.dim();
    }
    return out;
}

RatMatrix combine_automorphisms(const std::vector<RatMatrix>& ms)
{
    return block_diagonal(ms);
}

LieAlgebra change_basis(const LieAlgebra& g, const RatMatrix& p, std::vector<std::string> labels)
{
    check_square(g, p);
    int n = g.dim();
    RatMatrix pinv = inverse(p);
    if (labels.empty())
        for (int i = 1; i <= n; ++i)
            labels.push_back("b" + std::to_string(i));
    if (int(labels.size()) != n)
        throw InputError("label count does not match the dimension");
    LieAlgebra out(labels);
    std::vector<RatVec> cols;
    for (int j = 0; j < n; ++j)
        cols.push_back(p.column(j));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            out.set_bracket(i, j, pinv * g.bracket(cols[i], cols[j]));
    return out;
}

RatMatrix gamma_adapted_basis(const LieAlgebra& g)
{
    SeriesChain sc = lower_central_series(g);
    std::vector<RatVec> cols;
    for (size_t i = 0; i + 1 < sc.chain.size(); ++i) {
        auto c = complement_vectors(sc.chain[i], sc.chain[i + 1]);
        cols.insert(cols.end(), c.begin(), c.end());
    }
    return RatMatrix::from_columns(cols, g.dim());
}

GradingAssignment GradingAssignment::from_weights(const std::vector<Rat>& weights,
                                                  const RatMatrix& basis)
{
    int n = int(weights.size());
    RatMatrix b = basis.rows() == 0 ? RatMatrix::identity(n) : basis;
    if (b.cols() != n)
        throw InputError("one weight per basis vector is required");
    std::map<Rat, std::vector<RatVec>> groups;
    for (int i = 0; i < n; ++i)
        groups[weights[i]].push_back(b.column(i));
    GradingAssignment ga;
    for (const auto& [w, vs] : groups)
        ga.pieces.emplace_back(w, Subspace::span(b.rows(), vs));
    return ga;
}

bool check_grading(const LieAlgebra& g, const GradingAssignment& grading, std::string* reason)
{
    int n = g.dim();
    auto fail = [&](const std::string& why) {
        if (reason)
            *reason = why;
        return false;
    };
    std::map<Rat, Subspace> pieces;
    int total = 0;
    Subspace all(n);
    for (const auto& [w, s] : grading.pieces) {
        if (s.ambient() != n)
            throw InputError("grading piece has the wrong ambient dimension");
        total += s.dim();
        all = sum(all, s);
        auto it = pieces.find(w);
        if (it == pieces.end())
            pieces.emplace(w, s);
        else
            it->second = sum(it->second, s);
    }
    if (total != n || all.dim() != n)
        throw InputError("grading pieces do not form a direct sum of the algebra");
    for (const auto& [w, s] : pieces)
        if (w <= 0 && s.dim() > 0)
            return fail("non-positive weight " + w.get_str());
    for (const auto& [wa, sa] : pieces)
        for (const auto& [wb, sb] : pieces) {
            auto target = pieces.find(wa + wb);
            for (const auto& u : sa.basis())
                for (const auto& v : sb.basis()) {
                    RatVec br = g.bracket(u, v);
                    if (is_zero(br))
                        continue;
                    if (target == pieces.end() || !target->second.contains(br))
                        return fail("bracket of weights " + wa.get_str() + " and " + wb.get_str() +
                                    " leaves weight " + Rat(wa + wb).get_str());
                }
        }
    if (reason)
        *reason = "ok";
    return true;
}

std::vector<GradingConstraint> grading_constraints(const LieAlgebra& g)
{
    std::set<GradingConstraint> rows;
    for (const auto& [key, vec] : g.structure())
        for (const auto& [k, c] : vec)
            rows.insert({key.first, key.second, k});
    return {rows.begin(), rows.end()};
}

FeasibilityCertificate diagonal_grading_feasible(const LieAlgebra& g,
                                                 const std::optional<RatMatrix>& basis)
{
    LieAlgebra h = basis ? change_basis(g, *basis, g.labels()) : g;
    int n = h.dim();
    FeasibilityCertificate cert;
    cert.constraints = grading_constraints(h);
    int m = int(cert.constraints.size());
    RatMatrix A(m, n);
    for (int r = 0; r < m; ++r) {
        RatVec row = constraint_row(cert.constraints[r], n);
        for (int t = 0; t < n; ++t)
            A(r, t) = row[t];
    }
    // w = 1 + u with u >= 0
    RatVec b(m, Rat(0));
    for (int r = 0; r < m; ++r)
        for (int t = 0; t < n; ++t)
            b[r] -= A(r, t);
    auto u = lp_minimize(A, b, RatVec(n, Rat(1)));
    if (u) {
        cert.feasible = true;
        RatVec w(n);
        for (int t = 0; t < n; ++t)
            w[t] = 1 + (*u)[t];
        cert.weights = to_primitive_ints(w);
        return cert;
    }
    // A^T y = s, s >= 0, sum s = 1; y split into y+ - y-
    RatMatrix D(n + 1, 2 * m + n);
    for (int t = 0; t < n; ++t) {
        for (int r = 0; r < m; ++r) {
            D(t, r) = A(r, t);
            D(t, m + r) = -A(r, t);
        }
        D(t, 2 * m + t) = -1;
        D(n, 2 * m + t) = 1;
    }
    RatVec rhs(n + 1, Rat(0));
    rhs[n] = 1;
    RatVec cost(2 * m + n, Rat(0));
    for (int r = 0; r < 2 * m; ++r)
        cost[r] = 1;
    auto sol = lp_minimize(D, rhs, cost);
    if (!sol)
        throw std::logic_error("grading LP and its alternative are both infeasible");
    RatVec y(m);
    for (int r = 0; r < m; ++r)
        y[r] = (*sol)[r] - (*sol)[m + r];
    cert.multipliers = to_primitive_ints(y);
    cert.combination.assign(n, Int(0));
    for (int r = 0; r < m; ++r)
        for (int t = 0; t < n; ++t)
            if (A(r, t) != 0)
                cert.combination[t] += cert.multipliers[r] * A(r, t).get_num();
    std::string id;
    for (int t = 0; t < n; ++t) {
        if (cert.combination[t] == 0)
            continue;
        if (!id.empty())
            id += " + ";
        if (cert.combination[t] != 1)
            id += cert.combination[t].get_str() + "*";
        id += "w(" + h.labels()[t] + ")";
    }
    cert.identity = id + " = 0";
    return cert;
}

bool check_certificate(const LieAlgebra& g, const FeasibilityCertificate& cert,
                       const std::optional<RatMatrix>& basis)
{
    LieAlgebra h = basis ? change_basis(g, *basis, g.labels()) : g;
    int n = h.dim();
    if (grading_constraints(h) != cert.constraints)
        return false;
    if (cert.feasible) {
        if (int(cert.weights.size()) != n)
            return false;
        for (const auto& w : cert.weights)
            if (w <= 0)
                return false;
        for (const auto& c : cert.constraints)
            if (cert.weights[c.k] != cert.weights[c.i] + cert.weights[c.j])
                return false;
        return true;
    }
    if (cert.multipliers.size() != cert.constraints.size() || int(cert.combination.size()) != n)
        return false;
    std::vector<Int> comb(n, Int(0));
    for (size_t r = 0; r < cert.constraints.size(); ++r) {
        const auto& c = cert.constraints[r];
        comb[c.k] += cert.multipliers[r];
        comb[c.i] -= cert.multipliers[r];
        comb[c.j] -= cert.multipliers[r];
    }
    if (comb != cert.combination)
        return false;
    bool positive = false;
    for (const auto& x : comb) {
        if (x < 0)
            return false;
        positive = positive || x > 0;
    }
    return positive;
}

} // namespace anosov
