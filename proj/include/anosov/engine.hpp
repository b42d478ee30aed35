#ifndef ANOSOV_ENGINE_HPP
#define ANOSOV_ENGINE_HPP

#include "anosov/liealg.hpp"
#include "anosov/unitlattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace anosov {

/* a + b sqrt(k) */
struct QuadraticNumber {
    Rat a, b;
};

/* P + Q sqrt(k) */
struct QuadraticMatrix {
    Int k;
    RatMatrix p, q;

    int size() const { return p.rows(); }
    QuadraticMatrix conjugate() const { return {k, p, q.scaled(Rat(-1))}; }
    /* Image of u + sqrt(k) w as the pair (u', w'). */
    std::pair<RatVec, RatVec> apply(const RatVec& u, const RatVec& w) const;
    /* [[P, kQ], [Q, P]]: the action on Q^n + sqrt(k) Q^n. */
    RatMatrix realification() const;

    friend QuadraticMatrix operator*(const QuadraticMatrix& x, const QuadraticMatrix& y);
    friend bool operator==(const QuadraticMatrix& x, const QuadraticMatrix& y)
    {
        return x.k == y.k && x.p == y.p && x.q == y.q;
    }
};

struct FamilyParams {
    Int k;
    QuadraticNumber xi;
};

/* Checks a^2 - k b^2 = 1 and a + b sqrt(k) > 1. */
void check_params(const FamilyParams& params);

/* Smallest Pell solution a^2 - k b^2 = 1 with a, b > 0. */
FamilyParams fundamental_unit(const Int& k);

LieAlgebra build_base_algebra();

struct FamilyAutomorphism {
    QuadraticMatrix a;
    RatMatrix rho;
};
FamilyAutomorphism family_automorphism(const FamilyParams& params);

struct DescentInput {
    LieAlgebra base;
    Int k;
    RatMatrix rho;
    QuadraticMatrix a;
    std::vector<std::string> labels; // optional names for the fixed-form basis
};

struct DescentResult {
    LieAlgebra algebra;
    RatMatrix automorphism;
    std::vector<std::pair<RatVec, RatVec>> basis; // u + sqrt(k) w per basis vector
};

/* Throws InputError when an input invariant fails. */
DescentResult galois_descent_quadratic(const DescentInput& in);

struct FamilyMember {
    FamilyParams params;
    LieAlgebra algebra;
    RatMatrix automorphism;
};
FamilyMember build_family_member(const Int& k);
FamilyMember build_family_member(const FamilyParams& params);

struct FamilyReport {
    FamilyParams params;
    bool valid = false;
    bool automorphism = false;
    bool anosov = false;
    IntPoly char_poly;
    std::vector<int> type;
    bool type_ok = false;
    FeasibilityCertificate base_grading;
    bool certificate_checked = false;
    std::string note;
    bool passed() const
    {
        return valid && automorphism && anosov && type_ok && !base_grading.feasible &&
               certificate_checked;
    }
};
FamilyReport verify_family_member(const Int& k);
FamilyReport verify_family_member(const FamilyParams& params);

bool same_family_field(const Int& k, const Int& l);

/* A-invariant complements n_i of gamma_{i+1} in gamma_i. */
std::vector<Subspace> invariant_refinement(const LieAlgebra& g, const RatMatrix& a);
bool is_semisimple(const RatMatrix& a);

enum class VerdictStatus {
    GradedGuaranteed,
    AnosovImpossible,
    OutsideGuarantee,
    NotAnosovType,
    AnosovWithoutGrading,
    Unknown
};
const char* to_string(VerdictStatus s);

struct Verdict {
    VerdictStatus status = VerdictStatus::Unknown;
    std::string rule;
    std::optional<GradingAssignment> witness;
    std::vector<std::string> assumptions;
    std::optional<Int> d_a;
    std::optional<bool> containment;
    bool heuristic = false;
};

extern const char* const kGradingReduction;

Verdict grading_from_dA(const LieAlgebra& g, const RatMatrix& a);

struct Extension {
    LieAlgebra algebra;
    RatMatrix automorphism;
    Verdict verdict;
};
/* n >= 14. */
Extension extend_family(const Int& k, int n);

Verdict type_feasibility_verdict(const std::vector<int>& type,
                                 const std::optional<IntPoly>& f1 = {});

/* Sample algebras with automorphisms. */
struct AlgebraWithAutomorphism {
    LieAlgebra algebra;
    RatMatrix automorphism;
};
/* h3 + h3 over Q(sqrt 5), copies swapped by the Galois action, descended to Q. */
AlgebraWithAutomorphism h3_pair_example();
/* Free 2-step nilpotent on 3 generators, companion of x^3 - x^2 - 2x + 1 on generators. */
AlgebraWithAutomorphism free_two_step_example();

} // namespace anosov

#endif
