#ifndef ANOSOV_UNITLATTICE_HPP
#define ANOSOV_UNITLATTICE_HPP

#include "anosov/lattice.hpp"
#include "anosov/poly.hpp"
#include "anosov/roots.hpp"

#include <optional>
#include <vector>

namespace anosov {

/* Integer relations z with prod lambda_i^z_i = 1 among roots counted with multiplicity. */
struct RelationLattice {
    int dim = 0;
    std::vector<IntVec> basis; // HNF rows

    int rank() const { return int(basis.size()); }
    bool contains(const IntVec& z) const { return hnf_contains(basis, z); }
    friend bool operator==(const RelationLattice& a, const RelationLattice& b)
    {
        return a.dim == b.dim && a.basis == b.basis;
    }
};

enum class Completeness { Certified, Heuristic };

struct AnosovProfile {
    IntPoly f1;               // input
    IntPoly profiled;         // f1, or its root-squaring when the root product is -1
    int normalization_power = 1;
    int rank = 0;             // deg - lattice rank
    Int d = 0;                // gcd of coordinate sums of the lattice basis
    RelationLattice lattice;  // over the roots of `profiled`
    Completeness completeness = Completeness::Heuristic;
    RootSet roots;            // root order the lattice refers to
};

constexpr int kRelationBound = 64;

/* prod roots[idx_i]^z_i as a certified ball. */
CBall monomial_ball(const RootSet& roots, const IntVec& z, mpfr_prec_t prec);

/*
 * Integer polynomial whose roots are prod lambda_{s(i)}^z_i over all
 * distinct rearrangements s of z; exact (coefficients certified to round).
 * Returns nothing when the rearrangement count exceeds the limit.
 */
std::optional<IntPoly> orbit_polynomial(const RootSet& roots, const IntVec& z,
                                        size_t limit = 5040);

/* Exact decision of prod lambda_i^z_i == 1. */
bool verify_relation(const RootSet& roots, const IntVec& z);

RelationLattice relation_lattice(const RootSet& roots, Completeness* completeness = nullptr);

/* Requires a monic integer polynomial with constant term +-1. */
AnosovProfile rank_of_roots(const IntPoly& f1);
bool is_full_rank(const IntPoly& f1);

IntPoly monomial_min_poly(const RootSet& roots, const IntVec& e);
IntPoly monomial_min_poly(const IntPoly& f, const IntVec& e);

struct EvenDegreeResult {
    bool even;
    IntPoly min_poly;
};
/* Throws InputError when the monomial is rational. */
EvenDegreeResult even_degree_check(const IntPoly& f, const IntVec& e);

enum class QuarticRankCase { FullRank, RankTwo, RankOne };

struct QuarticClassification {
    QuarticRankCase kind;
    int power = 1;              // total power of A (normalization included)
    long k = 0, l = 0;          // RankOne: lambda_1^k = lambda_3^l, coprime, k >= l > 0
    Int d = 0;                  // d of the powered automorphism
    std::vector<int> permutation; // root indices playing lambda_1..lambda_4
    AnosovProfile profile;
};

QuarticClassification classify_quartic_rank_case(const IntPoly& f);

/* Smallest m with composed_power(f, m) a product of Anosov quadratics; rank 1 only. */
int normalized_power_for_rank1(const IntPoly& f);

const char* to_string(QuarticRankCase c);
const char* to_string(Completeness c);

} // namespace anosov

#endif
