#ifndef ANOSOV_LIEALG_HPP
#define ANOSOV_LIEALG_HPP

#include "anosov/matrix.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace anosov {

/* (index, coefficient) pairs, sorted by index, no zero coefficients. */
using SparseVec = std::vector<std::pair<int, Rat>>;

SparseVec to_sparse(const RatVec& v);
RatVec to_dense(const SparseVec& v, int dim);

/* Structure constants over Q, stored for i < j only. */
class LieAlgebra {
public:
    LieAlgebra() = default;
    explicit LieAlgebra(std::vector<std::string> labels);
    static LieAlgebra abelian(int n, const std::string& prefix = "e");

    int dim() const { return int(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    int index_of(const std::string& label) const;

    /* Sets [b_i, b_j]; i > j stores the negation, i == j must be zero. */
    void set_bracket(int i, int j, const RatVec& out);
    void set_bracket(int i, int j, const SparseVec& out);
    /* Adds c b_k to [b_i, b_j]. */
    void add_bracket(int i, int j, int k, const Rat& c);
    void add_bracket(const std::string& a, const std::string& b, const std::string& target,
                     const Rat& c = Rat(1));

    RatVec bracket(int i, int j) const;
    RatVec bracket(const RatVec& u, const RatVec& v) const;
    const std::map<std::pair<int, int>, SparseVec>& structure() const { return table_; }

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b)
    {
        return a.labels_ == b.labels_ && a.table_ == b.table_;
    }

private:
    std::vector<std::string> labels_;
    std::map<std::pair<int, int>, SparseVec> table_;
};

/* Row-echelon canonical subspace of Q^n. */
class Subspace {
public:
    explicit Subspace(int ambient = 0) : n_(ambient) {}
    static Subspace span(int ambient, const std::vector<RatVec>& vectors);
    static Subspace whole(int ambient);

    int ambient() const { return n_; }
    int dim() const { return int(basis_.size()); }
    const std::vector<RatVec>& basis() const { return basis_; }
    bool contains(const RatVec& v) const;
    bool contains(const Subspace& s) const;

    friend bool operator==(const Subspace& a, const Subspace& b)
    {
        return a.n_ == b.n_ && a.basis_ == b.basis_;
    }

private:
    int n_;
    std::vector<RatVec> basis_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
/* Basis vectors of `big` completing `small` (small must lie in big). */
std::vector<RatVec> complement_vectors(const Subspace& big, const Subspace& small);

struct ValidationReport {
    bool ok = false;
    bool jacobi = false;
    bool nilpotent = false;
    std::vector<std::array<int, 3>> jacobi_violations;
    std::string message;
};

ValidationReport validate(const LieAlgebra& g);

struct SeriesChain {
    std::vector<Subspace> chain; // gamma_1 ... gamma_{c+1} = 0
    std::vector<int> type;
    int step() const { return int(type.size()); }
};

/* Throws InputError when the algebra is not nilpotent. */
SeriesChain lower_central_series(const LieAlgebra& g);

Subspace center(const LieAlgebra& g);
Subspace derived(const LieAlgebra& g);
int abelian_factor_dim(const LieAlgebra& g);

struct AbelianSplit {
    Subspace abelian;
    Subspace ideal;
};
AbelianSplit split_abelian_factor(const LieAlgebra& g);

/* Columns of m are the images of the basis vectors. */
bool is_automorphism(const LieAlgebra& g, const RatMatrix& m);
bool is_expanding(const LieAlgebra& g, const RatMatrix& m);
bool is_anosov(const LieAlgebra& g, const RatMatrix& m);

LieAlgebra direct_sum(const std::vector<LieAlgebra>& gs);
RatMatrix combine_automorphisms(const std::vector<RatMatrix>& ms);

/* Structure constants in the basis given by the columns of p. */
LieAlgebra change_basis(const LieAlgebra& g, const RatMatrix& p,
                        std::vector<std::string> labels = {});
/* Columns: complements of gamma_{i+1} in gamma_i, layer by layer. */
RatMatrix gamma_adapted_basis(const LieAlgebra& g);

struct GradingAssignment {
    std::vector<std::pair<Rat, Subspace>> pieces;
    /* One weight per basis vector of the given basis (standard basis if empty). */
    static GradingAssignment from_weights(const std::vector<Rat>& weights,
                                          const RatMatrix& basis = RatMatrix());
};

/* Throws InputError when the pieces do not form a direct sum of the whole algebra. */
bool check_grading(const LieAlgebra& g, const GradingAssignment& grading,
                   std::string* reason = nullptr);

/* w_k - w_i - w_j = 0, one row per target k in the support of [b_i, b_j]. */
struct GradingConstraint {
    int i, j, k;
    friend auto operator<=>(const GradingConstraint&, const GradingConstraint&) = default;
};

struct FeasibilityCertificate {
    bool feasible = false;
    std::vector<GradingConstraint> constraints;
    std::vector<Int> weights;     // feasible: positive integer weights
    std::vector<Int> multipliers; // infeasible: one per constraint
    std::vector<Int> combination; // infeasible: sum of multiplier * row, all >= 0, not all 0
    std::string identity;         // infeasible: "2*X1 + ... = 0"
};

std::vector<GradingConstraint> grading_constraints(const LieAlgebra& g);
FeasibilityCertificate diagonal_grading_feasible(const LieAlgebra& g,
                                                 const std::optional<RatMatrix>& basis = {});
/* Recomputes the certificate against g (in the same basis) by substitution. */
bool check_certificate(const LieAlgebra& g, const FeasibilityCertificate& cert,
                       const std::optional<RatMatrix>& basis = {});

} // namespace anosov

#endif
