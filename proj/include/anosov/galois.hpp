#ifndef ANOSOV_GALOIS_HPP
#define ANOSOV_GALOIS_HPP

#include "anosov/poly.hpp"

#include <string>
#include <vector>

namespace anosov {

enum class GaloisGroupTag { Z2, Z2xZ2, Z3, S3, Z4, K4, D8, A4, S4 };

const char* to_string(GaloisGroupTag g);
GaloisGroupTag galois_tag_from_string(const std::string& s);

bool is_rational_square(const Rat& q);

/* Irreducible cubic: square discriminant gives Z3, otherwise S3. */
GaloisGroupTag galois_group_cubic(const IntPoly& f);

/* y^3 - b y^2 + (ac - 4d) y - (a^2 d - 4 b d + c^2) for x^4 + a x^3 + b x^2 + c x + d. */
IntPoly resolvent_cubic(const IntPoly& monic_quartic);

/* Irreducible monic quartic. */
GaloisGroupTag galois_group_quartic(const IntPoly& f);

/* Degree 2..4 polynomial without linear factors (reducible quartics included). */
GaloisGroupTag galois_group_small(const IntPoly& f);

struct GaloisReport {
    IntPoly poly;
    int degree = 0;
    bool irreducible = false;
    bool full_rank = false;
    GaloisGroupTag group = GaloisGroupTag::Z2;
    bool table1_row_ok = false;
};

struct Table1Row {
    int degree;
    bool full_rank;
    bool irreducible;
    std::vector<GaloisGroupTag> allowed;
};

const std::vector<Table1Row>& table1_rows();

/* Anosov polynomial of degree 2..4. */
GaloisReport table1_check(const IntPoly& f);

} // namespace anosov

#endif
