#include "anosov/engine.hpp"

#include "anosov/errors.hpp"
#include "anosov/factor.hpp"
#include "anosov/polycore.hpp"

#include <algorithm>

namespace anosov {

namespace {

bool is_square(const Int& n)
{
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t());
}

void check_k(const Int& k)
{
    if (k <= 0 || is_square(k))
        throw InputError("k must be a positive non-square integer, got " + k.get_str());
}

QuadraticNumber qmul(const QuadraticNumber& x, const QuadraticNumber& y, const Int& k)
{
    return {x.a * y.a + Rat(k) * x.b * y.b, x.a * y.b + x.b * y.a};
}

/* Power of a norm-one unit; negative exponents use the conjugate. */
QuadraticNumber qpow(QuadraticNumber x, long e, const Int& k)
{
    if (e < 0) {
        x.b = -x.b;
        e = -e;
    }
    QuadraticNumber r{Rat(1), Rat(0)};
    for (long i = 0; i < e; ++i)
        r = qmul(r, x, k);
    return r;
}

RatVec add(const RatVec& a, const RatVec& b)
{
    RatVec r = a;
    for (size_t i = 0; i < r.size(); ++i)
        r[i] += b[i];
    return r;
}

RatVec scale(const RatVec& a, const Rat& s)
{
    RatVec r = a;
    for (auto& x : r)
        x *= s;
    return r;
}

RatVec stack(const RatVec& a, const RatVec& b)
{
    RatVec r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

/* [u1 + sqrt(k) w1, u2 + sqrt(k) w2] */
std::pair<RatVec, RatVec> qbracket(const LieAlgebra& g, const Int& k,
                                   const std::pair<RatVec, RatVec>& x,
                                   const std::pair<RatVec, RatVec>& y)
{
    RatVec u = add(g.bracket(x.first, y.first), scale(g.bracket(x.second, y.second), Rat(k)));
    RatVec w = add(g.bracket(x.first, y.second), g.bracket(x.second, y.first));
    return {u, w};
}

RatVec unit_vec(int n, int i)
{
    RatVec v(n, Rat(0));
    v[i] = 1;
    return v;
}

/* Partner index when rho is a permutation matrix of order <= 2, else nothing. */
std::optional<std::vector<int>> swap_pattern(const RatMatrix& rho)
{
    int n = rho.rows();
    std::vector<int> partner(n, -1);
    for (int j = 0; j < n; ++j) {
        int hit = -1;
        for (int i = 0; i < n; ++i) {
            if (rho(i, j) == 0)
                continue;
            if (rho(i, j) != 1 || hit >= 0)
                return std::nullopt;
            hit = i;
        }
        if (hit < 0)
            return std::nullopt;
        partner[j] = hit;
    }
    for (int j = 0; j < n; ++j)
        if (partner[partner[j]] != j)
            return std::nullopt;
    return partner;
}

RatMatrix restrict_to(const RatMatrix& a, const Subspace& s)
{
    int n = a.rows();
    RatMatrix b = RatMatrix::from_columns(s.basis(), n);
    RatMatrix out(s.dim(), s.dim());
    for (int t = 0; t < s.dim(); ++t) {
        RatVec x;
        if (!solve_unique(b, a * s.basis()[t], x))
            throw std::logic_error("subspace is not invariant");
        for (int r = 0; r < s.dim(); ++r)
            out(r, t) = x[r];
    }
    return out;
}

Subspace sum_of(const std::vector<Subspace>& parts, int n)
{
    Subspace s(n);
    for (const auto& p : parts)
        s = sum(s, p);
    return s;
}

} // namespace

std::pair<RatVec, RatVec> QuadraticMatrix::apply(const RatVec& u, const RatVec& w) const
{
    RatVec pu = p * u, qw = q * w, qu = q * u, pw = p * w;
    return {add(pu, scale(qw, Rat(k))), add(qu, pw)};
}

RatMatrix QuadraticMatrix::realification() const
{
    int n = size();
    RatMatrix m(2 * n, 2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            m(i, j) = p(i, j);
            m(i, n + j) = Rat(k) * q(i, j);
            m(n + i, j) = q(i, j);
            m(n + i, n + j) = p(i, j);
        }
    return m;
}

QuadraticMatrix operator*(const QuadraticMatrix& x, const QuadraticMatrix& y)
{
    if (x.k != y.k)
        throw InputError("quadratic matrices over different fields");
    return {x.k, x.p * y.p + (x.q * y.q).scaled(Rat(x.k)), x.p * y.q + x.q * y.p};
}

void check_params(const FamilyParams& params)
{
    check_k(params.k);
    const auto& [a, b] = params.xi;
    if (a * a - Rat(params.k) * b * b != 1)
        throw InputError("xi must have norm 1");
    if (a <= 0 || b <= 0)
        throw InputError("xi must exceed 1");
}

FamilyParams fundamental_unit(const Int& k)
{
    check_k(k);
    Int a0 = sqrt(k);
    Int m = 0, d = 1, a = a0;
    Int h_prev = 1, h = a0, q_prev = 0, q = 1;
    while (h * h - k * q * q != 1) {
        m = d * a - m;
        d = (k - m * m) / d;
        a = (a0 + m) / d;
        Int h_next = a * h + h_prev, q_next = a * q + q_prev;
        h_prev = h;
        h = h_next;
        q_prev = q;
        q = q_next;
    }
    return {k, {Rat(h), Rat(q)}};
}

LieAlgebra build_base_algebra()
{
    LieAlgebra g({"X1", "X2", "X3", "X4", "Y1", "Y2", "Z1", "Z2", "V1", "V2", "W1", "W2"});
    for (const std::string s : {"1", "2"}) {
        std::string o = s == "1" ? "3" : "4";
        g.add_bracket("X" + s, "X" + o, "Y" + s);
        g.add_bracket("X" + s, "Y" + s, "Z" + s);
        g.add_bracket("X" + s, "Z" + s, "V" + s);
        g.add_bracket("X" + o, "V" + s, "W" + s);
        g.add_bracket("Z" + s, "Y" + s, "W" + s);
    }
    g.add_bracket("X1", "X4", "W1");
    g.add_bracket("X2", "X3", "W2");
    return g;
}

FamilyAutomorphism family_automorphism(const FamilyParams& params)
{
    check_params(params);
    const long exps[6] = {3, -2, 1, 4, 7, 5};
    RatMatrix p(12, 12), q(12, 12), rho(12, 12);
    for (int blk = 0; blk < 6; ++blk) {
        QuadraticNumber x = qpow(params.xi, exps[blk], params.k);
        int i = 2 * blk;
        p(i, i) = x.a;
        q(i, i) = x.b;
        p(i + 1, i + 1) = x.a;
        q(i + 1, i + 1) = -x.b;
        rho(i, i + 1) = 1;
        rho(i + 1, i) = 1;
    }
    return {{params.k, p, q}, rho};
}

DescentResult galois_descent_quadratic(const DescentInput& in)
{
    const LieAlgebra& g = in.base;
    int n = g.dim();
    check_k(in.k);
    if (in.rho.rows() != n || in.rho.cols() != n || in.a.size() != n || in.a.q.rows() != n ||
        in.a.k != in.k)
        throw InputError("descent input sizes do not match");
    if (in.rho * in.rho != RatMatrix::identity(n))
        throw InputError("rho must be an involution");
    if (!is_automorphism(g, in.rho))
        throw InputError("rho is not an automorphism of the base algebra");
    if (det(in.a.realification()) == 0)
        throw InputError("A is singular");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            RatVec zero(n, Rat(0));
            auto lhs = in.a.apply(g.bracket(i, j), zero);
            auto rhs = qbracket(g, in.k, in.a.apply(unit_vec(n, i), zero),
                                in.a.apply(unit_vec(n, j), zero));
            if (lhs != rhs)
                throw InputError("A is not an automorphism of the extended algebra");
        }
    if (in.rho * in.a.p * in.rho != in.a.p ||
        in.rho * in.a.q * in.rho != in.a.q.scaled(Rat(-1)))
        throw InputError("rho A rho^-1 differs from the conjugate of A");

    DescentResult res;
    std::vector<std::string> labels;
    RatVec zero(n, Rat(0));
    if (auto partner = swap_pattern(in.rho)) {
        res.basis.resize(n);
        labels.resize(n);
        for (int i = 0; i < n; ++i) {
            int j = (*partner)[i];
            if (j == i) {
                res.basis[i] = {unit_vec(n, i), zero};
                labels[i] = g.labels()[i];
            } else if (i < j) {
                res.basis[i] = {add(unit_vec(n, i), unit_vec(n, j)), zero};
                res.basis[j] = {zero, add(unit_vec(n, i), scale(unit_vec(n, j), Rat(-1)))};
                labels[i] = g.labels()[i] + "bar";
                labels[j] = g.labels()[j] + "bar";
            }
        }
    } else {
        RatMatrix plus = in.rho - RatMatrix::identity(n);
        RatMatrix minus = in.rho + RatMatrix::identity(n);
        int c = 0;
        for (const auto& u : Subspace::span(n, nullspace(plus)).basis()) {
            res.basis.push_back({u, zero});
            labels.push_back("u" + std::to_string(++c));
        }
        c = 0;
        for (const auto& w : Subspace::span(n, nullspace(minus)).basis()) {
            res.basis.push_back({zero, w});
            labels.push_back("w" + std::to_string(++c));
        }
    }
    if (!in.labels.empty()) {
        if (int(in.labels.size()) != n)
            throw InputError("label count does not match the dimension");
        labels = in.labels;
    }
    std::vector<RatVec> cols;
    for (const auto& [u, w] : res.basis)
        cols.push_back(stack(u, w));
    RatMatrix m = RatMatrix::from_columns(cols, 2 * n);
    auto coords = [&](const std::pair<RatVec, RatVec>& v) {
        RatVec x;
        if (!solve_unique(m, stack(v.first, v.second), x))
            throw std::logic_error("vector outside the rational form");
        return x;
    };
    res.algebra = LieAlgebra(labels);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            res.algebra.set_bracket(i, j, coords(qbracket(g, in.k, res.basis[i], res.basis[j])));
    res.automorphism = RatMatrix(n, n);
    for (int t = 0; t < n; ++t) {
        RatVec x = coords(in.a.apply(res.basis[t].first, res.basis[t].second));
        for (int r = 0; r < n; ++r)
            res.automorphism(r, t) = x[r];
    }
    return res;
}

FamilyMember build_family_member(const Int& k)
{
    return build_family_member(fundamental_unit(k));
}

FamilyMember build_family_member(const FamilyParams& params)
{
    FamilyAutomorphism fa = family_automorphism(params);
    DescentInput in{build_base_algebra(), params.k, fa.rho, fa.a, {}};
    DescentResult res = galois_descent_quadratic(in);
    return {params, res.algebra, res.automorphism};
}

const char* const kGradingReduction =
    "an expanding automorphism of the base algebra can be chosen to commute with A "
    "(external reduction); infeasibility of diagonal gradings then rules out every "
    "positive grading";

FamilyReport verify_family_member(const Int& k)
{
    return verify_family_member(fundamental_unit(k));
}

FamilyReport verify_family_member(const FamilyParams& params)
{
    FamilyMember fm = build_family_member(params);
    FamilyReport rep;
    rep.params = fm.params;
    rep.valid = validate(fm.algebra).ok;
    rep.automorphism = is_automorphism(fm.algebra, fm.automorphism);
    CharPoly cp = char_poly(fm.automorphism);
    if (cp.integral) {
        rep.char_poly = to_int_poly(cp.poly);
        rep.anosov = rep.automorphism && is_integer_like(rep.char_poly) &&
                     is_hyperbolic(rep.char_poly);
    }
    if (rep.valid) {
        rep.type = lower_central_series(fm.algebra).type;
        rep.type_ok = rep.type == std::vector<int>{4, 2, 2, 2, 2};
    }
    LieAlgebra base = build_base_algebra();
    rep.base_grading = diagonal_grading_feasible(base);
    rep.certificate_checked = !rep.base_grading.feasible && check_certificate(base, rep.base_grading);
    rep.note = kGradingReduction;
    return rep;
}

bool same_family_field(const Int& k, const Int& l)
{
    check_k(k);
    check_k(l);
    return is_square(k * l);
}

bool is_semisimple(const RatMatrix& a)
{
    RatPoly f = char_poly(a).poly;
    RatPoly s = divmod(f, gcd(f, f.derivative())).first;
    return poly_eval(s, a).is_zero();
}

std::vector<Subspace> invariant_refinement(const LieAlgebra& g, const RatMatrix& a)
{
    int n = g.dim();
    if (a.rows() != n || a.cols() != n)
        throw InputError("matrix size does not match the algebra dimension");
    if (!is_automorphism(g, a))
        throw InputError("matrix is not an automorphism");
    if (!is_semisimple(a))
        throw InputError("automorphism is not semisimple");
    SeriesChain sc = lower_central_series(g);
    IntPoly f = primitive_part(char_poly(a).poly);
    std::vector<Subspace> primary;
    for (const auto& fac : factor_over_rationals(f).factors)
        primary.push_back(Subspace::span(n, nullspace(poly_eval(to_rat(fac.poly), a))));
    std::vector<Subspace> layers;
    for (size_t i = 0; i + 1 < sc.chain.size(); ++i) {
        std::vector<RatVec> vecs;
        for (const auto& k : primary) {
            Subspace top = intersect(sc.chain[i], k);
            Subspace cur = intersect(sc.chain[i + 1], k);
            for (const auto& v : top.basis()) {
                if (cur.contains(v))
                    continue;
                // A-cyclic span of v inside the isotypic component
                std::vector<RatVec> krylov{v};
                Subspace kspan = Subspace::span(n, krylov);
                while (true) {
                    RatVec next = a * krylov.back();
                    if (kspan.contains(next))
                        break;
                    krylov.push_back(next);
                    kspan = Subspace::span(n, krylov);
                }
                cur = sum(cur, kspan);
                vecs.insert(vecs.end(), krylov.begin(), krylov.end());
            }
        }
        layers.push_back(Subspace::span(n, vecs));
        if (layers.back().dim() != sc.type[i])
            throw std::logic_error("invariant complement has the wrong dimension");
    }
    return layers;
}

const char* to_string(VerdictStatus s)
{
    switch (s) {
    case VerdictStatus::GradedGuaranteed: return "GradedGuaranteed";
    case VerdictStatus::AnosovImpossible: return "AnosovImpossible";
    case VerdictStatus::OutsideGuarantee: return "OutsideGuarantee";
    case VerdictStatus::NotAnosovType: return "NotAnosovType";
    case VerdictStatus::AnosovWithoutGrading: return "AnosovWithoutGrading";
    case VerdictStatus::Unknown: return "Unknown";
    }
    return "?";
}

Verdict grading_from_dA(const LieAlgebra& g, const RatMatrix& a)
{
    if (!is_anosov(g, a))
        throw InputError("automorphism is not Anosov");
    std::vector<Subspace> layers = invariant_refinement(g, a);
    int n = g.dim();
    int c = int(layers.size());
    CharPoly cp1 = char_poly(restrict_to(a, layers[0]));
    AnosovProfile prof = rank_of_roots(to_int_poly(cp1.poly));
    Verdict v;
    v.d_a = prof.d;
    v.heuristic = prof.completeness != Completeness::Certified;
    if (prof.normalization_power != 1)
        v.assumptions.push_back("d_A computed for the square of A");
    if (v.heuristic)
        v.assumptions.push_back("relation lattice completeness is heuristic");
    long d = prof.d.get_si();
    bool contained = true;
    for (int i = 1; i <= c && contained; ++i)
        for (int j = 1; j <= c && contained; ++j) {
            std::vector<Subspace> target;
            for (int t = i + j; t <= c; t += int(d))
                target.push_back(layers[t - 1]);
            Subspace allowed = sum_of(target, n);
            for (const auto& x : layers[i - 1].basis())
                for (const auto& y : layers[j - 1].basis())
                    if (!allowed.contains(g.bracket(x, y)))
                        contained = false;
        }
    v.containment = contained;
    if (c <= d + 1) {
        GradingAssignment ga;
        for (int i = 0; i < c; ++i)
            ga.pieces.emplace_back(Rat(i + 1), layers[i]);
        if (!check_grading(g, ga)) {
            v.status = VerdictStatus::Unknown;
            v.rule = "witness grading failed verification";
            return v;
        }
        v.status = VerdictStatus::GradedGuaranteed;
        v.rule = "c <= d_A + 1: the A-invariant layers form a positive grading";
        v.witness = ga;
    } else {
        v.status = VerdictStatus::OutsideGuarantee;
        v.rule = "c > d_A + 1: the d_A criterion does not apply";
    }
    return v;
}

Extension extend_family(const Int& k, int n)
{
    if (n < 14)
        throw InputError("extension needs n >= 14: an abelian Anosov factor has dimension at least 2");
    FamilyMember fm = build_family_member(k);
    int extra = n - 12;
    std::vector<RatMatrix> blocks{fm.automorphism};
    IntPoly quad = parse_poly("x^2-3x+1"), cubic = parse_poly("x^3-x-1");
    IntPoly product = to_int_poly(char_poly(fm.automorphism).poly);
    for (int left = extra; left > 0;) {
        const IntPoly& p = left % 2 ? cubic : quad;
        blocks.push_back(companion(p));
        product = product * p;
        left -= p.degree();
    }
    Extension ext;
    ext.algebra = direct_sum({fm.algebra, LieAlgebra::abelian(extra, "A")});
    ext.automorphism = combine_automorphisms(blocks);
    bool ok = validate(ext.algebra).ok && is_anosov(ext.algebra, ext.automorphism) &&
              to_int_poly(char_poly(ext.automorphism).poly) == product &&
              abelian_factor_dim(ext.algebra) == extra;
    Verdict& v = ext.verdict;
    if (ok) {
        v.status = VerdictStatus::AnosovWithoutGrading;
        v.rule = "Anosov factors plus an abelian factor of dimension >= 2 give an Anosov sum; "
                 "a factor without positive grading leaves the sum without one";
        v.assumptions.push_back(kGradingReduction);
    } else {
        v.status = VerdictStatus::Unknown;
        v.rule = "extension failed verification";
    }
    return ext;
}

Verdict type_feasibility_verdict(const std::vector<int>& type, const std::optional<IntPoly>& f1)
{
    if (type.empty() || std::any_of(type.begin(), type.end(), [](int x) { return x <= 0; }))
        throw InputError("type entries must be positive");
    int c = int(type.size());
    int dim = 0;
    for (int x : type)
        dim += x;
    int n1 = type[0];
    auto make = [](VerdictStatus s, std::string rule) {
        Verdict v;
        v.status = s;
        v.rule = std::move(rule);
        return v;
    };
    if (f1 && (f1->degree() != n1 || !is_anosov_polynomial(*f1)))
        throw InputError("f1 must be an Anosov polynomial of degree n1");
    if (c <= 2)
        return make(VerdictStatus::GradedGuaranteed, "2-step nilpotent Lie algebras are positively graded");
    if (n1 < 3 || std::any_of(type.begin() + 1, type.end(), [](int x) { return x < 2; }))
        return make(VerdictStatus::NotAnosovType, "Anosov types satisfy n1 >= 3 and ni >= 2");
    if (type == std::vector<int>{6, 2, 3})
        return make(VerdictStatus::AnosovImpossible, "no Anosov Lie algebras of type (6,2,3)");
    if (dim < 12) {
        if (n1 == 3)
            return make(VerdictStatus::GradedGuaranteed, "n1 = 3 in dimension < 12: positively graded");
        if (n1 == 4) {
            if (std::any_of(type.begin() + 1, type.end(), [](int x) { return x % 2; }))
                return make(VerdictStatus::NotAnosovType, "n1 = 4 forces 2 | ni for i >= 2");
            return make(VerdictStatus::GradedGuaranteed, "n1 = 4 in dimension < 12: positively graded");
        }
        if (n1 == 5)
            return make(VerdictStatus::GradedGuaranteed, "n1 = 5 in dimension < 12: positively graded");
        if (n1 == 6 || n1 == 7)
            return make(VerdictStatus::GradedGuaranteed,
                        "n1 in {6,7} in dimension < 12: positively graded");
    }
    if (f1) {
        AnosovProfile prof = rank_of_roots(*f1);
        if (c <= prof.d + 1) {
            Verdict v = make(VerdictStatus::GradedGuaranteed, "c <= d_A + 1 for the supplied f1");
            v.d_a = prof.d;
            v.heuristic = prof.completeness != Completeness::Certified;
            return v;
        }
    }
    if (dim >= 12)
        return make(VerdictStatus::OutsideGuarantee,
                    "dimension >= 12: the 12-dimensional family has no positive grading");
    return make(VerdictStatus::Unknown, "no rule applies");
}

AlgebraWithAutomorphism h3_pair_example()
{
    LieAlgebra base({"x1", "y1", "z1", "x2", "y2", "z2"});
    base.add_bracket("x1", "y1", "z1");
    base.add_bracket("x2", "y2", "z2");
    Int k = 5;
    QuadraticNumber lam{Rat(3, 2), Rat(1, 2)};
    const long exps[6] = {1, 1, 2, -1, -1, -2};
    RatMatrix p(6, 6), q(6, 6), rho(6, 6);
    for (int i = 0; i < 6; ++i) {
        QuadraticNumber x = qpow(lam, exps[i], k);
        p(i, i) = x.a;
        q(i, i) = x.b;
        rho(i, (i + 3) % 6) = 1;
    }
    DescentResult res = galois_descent_quadratic({base, k, rho, {k, p, q}, {}});
    return {res.algebra, res.automorphism};
}

AlgebraWithAutomorphism free_two_step_example()
{
    LieAlgebra g({"x1", "x2", "x3", "y12", "y13", "y23"});
    g.add_bracket("x1", "x2", "y12");
    g.add_bracket("x1", "x3", "y13");
    g.add_bracket("x2", "x3", "y23");
    RatMatrix c = companion(parse_poly("x^3-x^2-2x+1"));
    RatMatrix a(6, 6);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            a(i, j) = c(i, j);
    const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (int t = 0; t < 3; ++t) {
        RatVec img = g.bracket(a.column(pairs[t][0]), a.column(pairs[t][1]));
        for (int r = 0; r < 6; ++r)
            a(r, 3 + t) = img[r];
    }
    return {g, a};
}

} // namespace anosov
