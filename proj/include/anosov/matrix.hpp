#ifndef ANOSOV_MATRIX_HPP
#define ANOSOV_MATRIX_HPP

#include "anosov/poly.hpp"

#include <vector>

namespace anosov {

using RatVec = std::vector<Rat>;

/* Dense row-major matrix over Q. */
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols) : r_(rows), c_(cols), a_(size_t(rows) * cols, Rat(0)) {}
    RatMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static RatMatrix identity(int n);
    static RatMatrix from_columns(const std::vector<RatVec>& cols, int rows);

    int rows() const { return r_; }
    int cols() const { return c_; }
    Rat& operator()(int i, int j) { return a_[size_t(i) * c_ + j]; }
    const Rat& operator()(int i, int j) const { return a_[size_t(i) * c_ + j]; }

    RatVec column(int j) const;
    RatVec row(int i) const;
    RatMatrix transpose() const;

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend RatVec operator*(const RatMatrix& a, const RatVec& v);
    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
    friend bool operator==(const RatMatrix& a, const RatMatrix& b)
    {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }
    RatMatrix scaled(const Rat& s) const;

    bool is_zero() const;
    bool is_integral() const;

private:
    int r_ = 0, c_ = 0;
    std::vector<Rat> a_;
};

RatMatrix block_diagonal(const std::vector<RatMatrix>& blocks);
RatMatrix companion(const IntPoly& monic_poly);

/* Reduced row echelon form in place; returns pivot columns. */
std::vector<int> rref(RatMatrix& m);
int rank(const RatMatrix& m);
Rat det(const RatMatrix& m);
/* Throws std::domain_error when singular. */
RatMatrix inverse(const RatMatrix& m);
/* Basis of the right kernel, in canonical RREF-derived order. */
std::vector<RatVec> nullspace(const RatMatrix& m);
/* Unique solution of m x = b, or false when inconsistent or underdetermined. */
bool solve_unique(const RatMatrix& m, const RatVec& b, RatVec& x);
RatMatrix poly_eval(const RatPoly& p, const RatMatrix& m);

struct CharPoly {
    RatPoly poly;       // monic, det(xI - A)
    bool integral;      // all coefficients integers
};
CharPoly char_poly(const RatMatrix& m);

} // namespace anosov

#endif
