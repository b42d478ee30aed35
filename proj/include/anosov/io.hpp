#ifndef ANOSOV_IO_HPP
#define ANOSOV_IO_HPP

#include "anosov/engine.hpp"
#include "anosov/galois.hpp"

#include "json.hpp"

namespace anosov {

using Json = nlohmann::json;

/* Rationals travel as "p" or "p/q" strings; plain JSON integers are accepted on input. */
std::string rat_to_string(const Rat& q);
Rat rat_from_json(const Json& j);

/* Descending coefficient strings. */
Json to_json(const IntPoly& p);
Json to_json(const RatMatrix& m);
Json to_json(const Subspace& s);
Json to_json(const LieAlgebra& g);
Json to_json(const ValidationReport& r);
Json to_json(const GradingAssignment& g);
Json to_json(const FeasibilityCertificate& c, const LieAlgebra& g);
Json to_json(const Verdict& v);
Json to_json(const AnosovProfile& p);
Json to_json(const GaloisReport& r);
Json to_json(const FamilyReport& r);
Json family_bundle(const FamilyMember& m, const FamilyReport& r);

/* Throw InputError on malformed input. */
LieAlgebra lie_algebra_from_json(const Json& j);
RatMatrix matrix_from_json(const Json& j);
Json read_json_file(const std::string& path);

} // namespace anosov

#endif
