#include "anosov/engine.hpp"
#include "anosov/errors.hpp"
#include "anosov/galois.hpp"
#include "anosov/io.hpp"
#include "anosov/polycore.hpp"

#include "CLI11.hpp"

#include <functional>
#include <iostream>
#include <sstream>

using namespace anosov;

namespace {

enum Exit { kHolds = 0, kInputError = 1, kPrecision = 2, kFails = 3 };

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty())
            out.push_back(item);
    return out;
}

IntPoly read_poly(const std::string& text, const std::string& coeffs)
{
    if (text.empty() == coeffs.empty())
        throw InputError("give exactly one of --poly and --coeffs");
    return text.empty() ? poly_from_descending(split(coeffs, ',')) : parse_poly(text);
}

Json envelope(const std::string& command, Json result, std::vector<std::string> assumptions = {})
{
    return {{"tool_version", kToolVersion},
            {"command", command},
            {"result", std::move(result)},
            {"assumptions", std::move(assumptions)}};
}

int emit(const Json& j, bool holds)
{
    std::cout << j.dump(2) << "\n";
    return holds ? kHolds : kFails;
}

Json poly_check_result(const IntPoly& f, bool& anosov)
{
    Json r;
    r["poly"] = to_json(f);
    r["poly_text"] = to_string(f);
    r["degree"] = f.degree();
    bool monic = f.degree() >= 1 && f.lead() == 1;
    r["monic"] = monic;
    r["hyperbolic"] = f.degree() >= 1 && is_hyperbolic(f);
    r["integer_like"] = monic && is_integer_like(f);
    anosov = is_anosov_polynomial(f);
    r["anosov"] = anosov;
    if (anosov) {
        AnosovProfile prof = rank_of_roots(f);
        r["rank"] = prof.rank;
        r["d"] = prof.d.get_si();
        r["full_rank"] = prof.rank == f.degree() - 1;
        r["profile"] = to_json(prof);
    }
    return r;
}

/* Calls fn on every monic polynomial of the given degree, coefficients in [-b, b], constant +-1. */
void enumerate(int degree, int bound, const std::function<void(const IntPoly&)>& fn)
{
    std::vector<int> mid(std::max(degree - 1, 0), -bound);
    while (true) {
        for (int c0 : {-1, 1}) {
            std::vector<Int> c(degree + 1);
            c[0] = c0;
            c[degree] = 1;
            for (int i = 1; i < degree; ++i)
                c[i] = mid[degree - 1 - i];
            fn(IntPoly(c));
        }
        int t = int(mid.size()) - 1;
        while (t >= 0 && mid[t] == bound)
            mid[t--] = -bound;
        if (t < 0)
            break;
        ++mid[t];
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Anosov polynomials, relation lattices and positively graded nilpotent Lie algebras"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    std::string poly_text, coeffs, input, auto_path, basis_kind = "standard", type_text, f1_text,
        xi_text;
    long k = 0;
    int n = 0, degree = 4, bound = 6;

    auto* poly = app.add_subcommand("poly", "polynomial predicates");
    poly->require_subcommand(1);
    auto add_poly_opts = [&](CLI::App* c) {
        c->add_option("--poly", poly_text, "polynomial text, e.g. x^4-10x^2+1");
        c->add_option("--coeffs", coeffs, "descending coefficients, e.g. 1,0,-10,0,1");
    };
    auto* p_check = poly->add_subcommand("check", "Anosov test with rank and d");
    add_poly_opts(p_check);
    auto* p_rank = poly->add_subcommand("rank", "relation lattice profile");
    add_poly_opts(p_rank);
    auto* p_galois = poly->add_subcommand("galois", "Galois group and Table 1 row");
    add_poly_opts(p_galois);
    auto* p_scan = poly->add_subcommand("scan", "newline-delimited reports over a coefficient box");
    p_scan->add_option("--degree", degree)->check(CLI::Range(2, 8));
    p_scan->add_option("--coeff-bound", bound)->check(CLI::Range(0, 50));

    auto* alg = app.add_subcommand("algebra", "Lie algebras from JSON");
    alg->require_subcommand(1);
    auto* a_validate = alg->add_subcommand("validate", "Jacobi, nilpotency and type");
    a_validate->add_option("--input", input)->required();
    auto* a_grade = alg->add_subcommand("grade", "diagonal grading feasibility or d_A verdict");
    a_grade->add_option("--input", input)->required();
    a_grade->add_option("--basis", basis_kind)->check(CLI::IsMember({"standard", "gamma"}));
    a_grade->add_option("--automorphism", auto_path, "JSON matrix; runs the d_A criterion");

    auto* fam = app.add_subcommand("family", "the 12-dimensional family m_k");
    fam->require_subcommand(1);
    auto* f_build = fam->add_subcommand("build", "algebra and automorphism bundle");
    f_build->add_option("-k", k)->required();
    f_build->add_option("--xi", xi_text, "unit a,b with a^2 - k b^2 = 1");
    auto* f_verify = fam->add_subcommand("verify", "full verification report");
    f_verify->add_option("-k", k)->required();
    auto* f_extend = fam->add_subcommand("extend", "direct sum with an abelian Anosov factor");
    f_extend->add_option("-k", k)->required();
    f_extend->add_option("-n", n)->required();

    auto* typ = app.add_subcommand("type", "type feasibility");
    typ->require_subcommand(1);
    auto* t_verdict = typ->add_subcommand("verdict", "verdict for a type n1,...,nc");
    t_verdict->add_option("type", type_text)->required();
    t_verdict->add_option("--f1", f1_text, "characteristic polynomial on the first layer");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kInputError;
    }

    try {
        if (p_check->parsed()) {
            bool anosov = false;
            Json r = poly_check_result(read_poly(poly_text, coeffs), anosov);
            return emit(envelope("poly.check", r), anosov);
        }
        if (p_rank->parsed()) {
            IntPoly f = read_poly(poly_text, coeffs);
            if (f.degree() < 1 || f.lead() != 1 || !is_integer_like(f))
                throw InputError("rank needs a monic integer polynomial with constant term +-1");
            AnosovProfile prof = rank_of_roots(f);
            return emit(envelope("poly.rank", to_json(prof)), true);
        }
        if (p_galois->parsed()) {
            IntPoly f = read_poly(poly_text, coeffs);
            if (is_anosov_polynomial(f) && f.degree() <= 4) {
                GaloisReport rep = table1_check(f);
                return emit(envelope("poly.galois", to_json(rep)), rep.table1_row_ok);
            }
            Json r = {{"poly", to_json(f)}, {"poly_text", to_string(f)}, {"group", to_string(galois_group_small(f))}};
            return emit(envelope("poly.galois", r), true);
        }
        if (p_scan->parsed()) {
            int found = 0, bad = 0;
            enumerate(degree, bound, [&](const IntPoly& f) {
                if (!is_anosov_polynomial(f))
                    return;
                ++found;
                Json r;
                if (degree <= 4) {
                    GaloisReport rep = table1_check(f);
                    bad += !rep.table1_row_ok;
                    r = to_json(rep);
                } else {
                    bool anosov = false;
                    r = poly_check_result(f, anosov);
                }
                std::cout << envelope("poly.scan", r).dump() << "\n";
            });
            std::cerr << "scanned degree " << degree << " bound " << bound << ": " << found
                      << " Anosov polynomials, " << bad << " Table 1 violations\n";
            return bad ? kFails : kHolds;
        }
        if (a_validate->parsed()) {
            LieAlgebra g = lie_algebra_from_json(read_json_file(input));
            ValidationReport rep = validate(g);
            Json r = {{"validation", to_json(rep)}};
            if (rep.ok) {
                r["type"] = lower_central_series(g).type;
                r["abelian_factor_dim"] = abelian_factor_dim(g);
                r["center_dim"] = center(g).dim();
            }
            return emit(envelope("algebra.validate", r), rep.ok);
        }
        if (a_grade->parsed()) {
            LieAlgebra g = lie_algebra_from_json(read_json_file(input));
            if (!validate(g).ok)
                throw InputError("algebra fails validation");
            std::optional<RatMatrix> basis;
            if (basis_kind == "gamma")
                basis = gamma_adapted_basis(g);
            FeasibilityCertificate cert = diagonal_grading_feasible(g, basis);
            Json r = {{"certificate", to_json(cert, g)},
                      {"certificate_checked", check_certificate(g, cert, basis)},
                      {"basis", basis_kind}};
            std::vector<std::string> assumptions{
                "only gradings diagonal in the chosen basis are searched"};
            if (!auto_path.empty()) {
                RatMatrix a = matrix_from_json(read_json_file(auto_path));
                Verdict v = grading_from_dA(g, a);
                r["d_A_verdict"] = to_json(v);
                assumptions.insert(assumptions.end(), v.assumptions.begin(), v.assumptions.end());
                return emit(envelope("algebra.grade", r, assumptions),
                            v.status == VerdictStatus::GradedGuaranteed);
            }
            return emit(envelope("algebra.grade", r, assumptions), cert.feasible);
        }
        if (f_build->parsed()) {
            FamilyParams params = fundamental_unit(Int(k));
            if (!xi_text.empty()) {
                auto parts = split(xi_text, ',');
                if (parts.size() != 2)
                    throw InputError("--xi takes a,b");
                params.xi = {rat_from_json(parts[0]), rat_from_json(parts[1])};
                check_params(params);
            }
            FamilyMember m = build_family_member(params);
            FamilyReport rep = verify_family_member(params);
            return emit(envelope("family.build", family_bundle(m, rep), {rep.note}), true);
        }
        if (f_verify->parsed()) {
            FamilyReport rep = verify_family_member(Int(k));
            return emit(envelope("family.verify", to_json(rep), {rep.note}), rep.passed());
        }
        if (f_extend->parsed()) {
            Extension ext = extend_family(Int(k), n);
            Json r = {{"algebra", to_json(ext.algebra)},
                      {"automorphism", to_json(ext.automorphism)},
                      {"abelian_factor_dim", abelian_factor_dim(ext.algebra)},
                      {"verdict", to_json(ext.verdict)}};
            return emit(envelope("family.extend", r, ext.verdict.assumptions),
                        ext.verdict.status == VerdictStatus::AnosovWithoutGrading);
        }
        if (t_verdict->parsed()) {
            std::vector<int> type;
            for (const auto& s : split(type_text, ',')) {
                try {
                    type.push_back(std::stoi(s));
                } catch (const std::exception&) {
                    throw InputError("malformed type entry: " + s);
                }
            }
            std::optional<IntPoly> f1;
            if (!f1_text.empty())
                f1 = parse_poly(f1_text);
            Verdict v = type_feasibility_verdict(type, f1);
            Json r = to_json(v);
            r["type"] = type;
            return emit(envelope("type.verdict", r, v.assumptions), true);
        }
    } catch (const PrecisionError& e) {
        std::cerr << "precision cap reached: " << e.what() << "\n";
        return kPrecision;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
