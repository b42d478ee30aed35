#include "anosov/io.hpp"

#include "anosov/errors.hpp"

#include <fstream>

namespace anosov {

std::string rat_to_string(const Rat& q)
{
    Rat c = q;
    c.canonicalize();
    return c.get_str();
}

Rat rat_from_json(const Json& j)
{
    if (j.is_number_integer())
        return Rat(Int(std::to_string(j.get<long long>())));
    if (!j.is_string())
        throw InputError("rational must be a string or an integer");
    Rat q;
    if (q.set_str(j.get<std::string>(), 10) != 0 || q.get_den() == 0)
        throw InputError("malformed rational: " + j.get<std::string>());
    q.canonicalize();
    return q;
}

Json to_json(const IntPoly& p)
{
    return descending_strings(p);
}

Json to_json(const RatMatrix& m)
{
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j)
            row.push_back(rat_to_string(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Json to_json(const Subspace& s)
{
    Json b = Json::array();
    for (const auto& v : s.basis()) {
        Json row = Json::array();
        for (const auto& x : v)
            row.push_back(rat_to_string(x));
        b.push_back(row);
    }
    return {{"ambient_dim", s.ambient()}, {"basis", b}};
}

Json to_json(const LieAlgebra& g)
{
    Json br = Json::array();
    for (const auto& [key, vec] : g.structure()) {
        Json out = Json::array();
        for (const auto& [k, c] : vec)
            out.push_back(Json::array({rat_to_string(c), k}));
        br.push_back({{"i", key.first}, {"j", key.second}, {"out", out}});
    }
    return {{"dim", g.dim()}, {"basis", g.labels()}, {"brackets", br}};
}

Json to_json(const ValidationReport& r)
{
    Json v = Json::array();
    for (const auto& t : r.jacobi_violations)
        v.push_back(Json::array({t[0], t[1], t[2]}));
    return {{"ok", r.ok},
            {"jacobi", r.jacobi},
            {"nilpotent", r.nilpotent},
            {"jacobi_violations", v},
            {"message", r.message}};
}

Json to_json(const GradingAssignment& g)
{
    Json pieces = Json::array();
    for (const auto& [w, s] : g.pieces)
        pieces.push_back({{"weight", rat_to_string(w)}, {"subspace", to_json(s)}});
    return {{"pieces", pieces}};
}

Json to_json(const FeasibilityCertificate& c, const LieAlgebra& g)
{
    Json j;
    j["kind"] = c.feasible ? "Feasible" : "Infeasible";
    Json rows = Json::array();
    for (const auto& r : c.constraints)
        rows.push_back("w(" + g.labels()[r.k] + ") = w(" + g.labels()[r.i] + ") + w(" +
                       g.labels()[r.j] + ")");
    j["constraints"] = rows;
    auto strs = [](const std::vector<Int>& v) {
        Json a = Json::array();
        for (const auto& x : v)
            a.push_back(x.get_str());
        return a;
    };
    if (c.feasible) {
        j["weights"] = strs(c.weights);
    } else {
        j["multipliers"] = strs(c.multipliers);
        j["combination"] = strs(c.combination);
        j["identity"] = c.identity;
    }
    return j;
}

Json to_json(const Verdict& v)
{
    Json j;
    j["status"] = to_string(v.status);
    j["rule"] = v.rule;
    j["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
    j["assumptions"] = v.assumptions;
    if (v.d_a)
        j["d_A"] = v.d_a->get_si();
    if (v.containment)
        j["containment"] = *v.containment;
    j["heuristic"] = v.heuristic;
    return j;
}

Json to_json(const AnosovProfile& p)
{
    Json basis = Json::array();
    for (const auto& row : p.lattice.basis) {
        Json r = Json::array();
        for (const auto& x : row)
            r.push_back(x.get_str());
        basis.push_back(r);
    }
    Json order = Json::array();
    for (const auto& r : p.roots.roots)
        order.push_back({{"re", {rat_to_string(r.box.re_lo), rat_to_string(r.box.re_hi)}},
                         {"im", {rat_to_string(r.box.im_lo), rat_to_string(r.box.im_hi)}},
                         {"multiplicity", r.multiplicity}});
    return {{"poly", to_json(p.f1)},
            {"poly_text", to_string(p.f1)},
            {"profiled", to_json(p.profiled)},
            {"normalization_power", p.normalization_power},
            {"rank", p.rank},
            {"d", p.d.get_si()},
            {"full_rank", p.rank == p.f1.degree() - 1},
            {"lattice", basis},
            {"completeness", to_string(p.completeness)},
            {"root_order", order}};
}

Json to_json(const GaloisReport& r)
{
    return {{"poly", to_json(r.poly)},
            {"poly_text", to_string(r.poly)},
            {"degree", r.degree},
            {"irreducible", r.irreducible},
            {"full_rank", r.full_rank},
            {"group", to_string(r.group)},
            {"table1_row_ok", r.table1_row_ok}};
}

Json to_json(const FamilyReport& r)
{
    LieAlgebra base = build_base_algebra();
    return {{"k", r.params.k.get_si()},
            {"xi", {rat_to_string(r.params.xi.a), rat_to_string(r.params.xi.b)}},
            {"valid", r.valid},
            {"automorphism", r.automorphism},
            {"anosov", r.anosov},
            {"char_poly", to_json(r.char_poly)},
            {"char_poly_text", to_string(r.char_poly)},
            {"type", r.type},
            {"type_ok", r.type_ok},
            {"base_grading", to_json(r.base_grading, base)},
            {"certificate_checked", r.certificate_checked},
            {"assumptions", Json::array({r.note})},
            {"passed", r.passed()}};
}

Json family_bundle(const FamilyMember& m, const FamilyReport& r)
{
    return {{"k", m.params.k.get_si()},
            {"xi", {rat_to_string(m.params.xi.a), rat_to_string(m.params.xi.b)}},
            {"algebra", to_json(m.algebra)},
            {"automorphism", to_json(m.automorphism)},
            {"report", to_json(r)}};
}

LieAlgebra lie_algebra_from_json(const Json& j)
{
    try {
        int n = j.at("dim").get<int>();
        std::vector<std::string> labels;
        if (j.contains("basis"))
            labels = j.at("basis").get<std::vector<std::string>>();
        else
            for (int i = 1; i <= n; ++i)
                labels.push_back("e" + std::to_string(i));
        if (n <= 0 || int(labels.size()) != n)
            throw InputError("basis label count does not match dim");
        LieAlgebra g(labels);
        for (const auto& b : j.value("brackets", Json::array())) {
            int i = b.at("i").get<int>(), k = b.at("j").get<int>();
            if (i < 0 || k < 0 || i >= n || k >= n)
                throw InputError("bracket index out of range");
            for (const auto& term : b.at("out")) {
                if (!term.is_array() || term.size() != 2)
                    throw InputError("bracket terms are [coefficient, index] pairs");
                int t = term[1].get<int>();
                if (t < 0 || t >= n)
                    throw InputError("bracket target out of range");
                g.add_bracket(i, k, t, rat_from_json(term[0]));
            }
        }
        return g;
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed algebra JSON: ") + e.what());
    }
}

RatMatrix matrix_from_json(const Json& j)
{
    if (!j.is_array() || j.empty())
        throw InputError("matrix must be a non-empty array of rows");
    int r = int(j.size());
    int c = j[0].is_array() ? int(j[0].size()) : 0;
    RatMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (!j[i].is_array() || int(j[i].size()) != c)
            throw InputError("matrix rows differ in length");
        for (int k = 0; k < c; ++k)
            m(i, k) = rat_from_json(j[i][k]);
    }
    return m;
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw InputError("invalid JSON in " + path + ": " + e.what());
    }
}

} // namespace anosov
