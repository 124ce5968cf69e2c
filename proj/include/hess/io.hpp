#pragma once

// Serialization of the library types: JSON (nlohmann), CSV for transition
// blocks, LaTeX for tableaux, matrices and q-polynomials. JSON objects have
// sorted keys and every list is emitted in the library's canonical order, so
// output is byte-stable.

#include <gmpxx.h>

#include <json.hpp>
#include <string>
#include <vector>

#include "hess/bijections.hpp"
#include "hess/cohomology.hpp"
#include "hess/error.hpp"
#include "hess/gkm.hpp"
#include "hess/hessenberg.hpp"
#include "hess/poincare.hpp"
#include "hess/qpoly.hpp"
#include "hess/symfunc.hpp"
#include "hess/tableaux.hpp"

namespace hess {

using Json = nlohmann::json;

// a JSON number when it fits in int64, a decimal string otherwise
Json mpz_json(const mpz_class& z);

Json to_json(const HessenbergFunction& h);
Json to_json(const Partition& p);
// rows bottom first
Json to_json(const Tableau& t);
// [[exponent, coefficient], ...] ascending
Json to_json(const QPolynomial& p);
Json to_json(const SymFn& f);
Json to_json(const PositivityReport& r);
// {"n": n, "values": {"123": "t_2", ...}}
Json to_json(const GkmClass& c);
Json to_json(const GkmGraph& g);
Json to_json(const RelationReport& r);
Json to_json(const XYMonomial& m);
// {"terms": [{"x": [...], "y": k, "c": c}, ...], "text": "..."}
Json to_json(const XYElement& e);
Json to_json(const BasisSet& b);
Json to_json(const TransitionBlock& b);
Json to_json(const DecompositionCounts& d);
Json to_json(const OrbitPartition& o);
Json to_json(const TabPair& p);
Json to_json(const PoincareReport& r);
// {"error": {"code": "...", "message": "..."}}
Json to_json(const Error& e);

// inverse of to_json for the types the CLI reads back
Tableau tableau_from_json(const Json& j);
XYElement element_from_json(const Json& j);
QPolynomial qpoly_from_json(const Json& j);

// one "# degree d" header per block, then a label row and one row per B1∪B2
// monomial
std::string blocks_csv(const std::vector<TransitionBlock>& blocks);
std::string matrix_latex(const MatZ& m);
// French orientation: bottom row drawn last
std::string tableau_latex(const Tableau& t);

}  // namespace hess
