#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "compat/algebra.hpp"
#include "compat/commutative.hpp"
#include "compat/dynkin.hpp"
#include "compat/matrix_ops.hpp"
#include "compat/mstructure.hpp"
#include "compat/pmstructure.hpp"
#include "compat/poisson.hpp"

namespace compat {

// Insertion-ordered so that output is byte-for-byte reproducible.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "compat-json/1";

// Raised for documents that parse as JSON but do not match a schema; the
// message starts with the JSON path of the offending value.
struct SchemaError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Top-level header: {"schema": ..., "kind": kind, "field": {...}}.
Json document(const std::string& kind, const Field& field);
// Field of a document header, or `fallback` when it has none.
Field document_field(const Json& doc, const Field& fallback);

Json field_to_json(const Field& field);
Field field_from_json(const Json& j, const std::string& path = "field");

// Scalars travel as strings: "p/q", "c0 + c1*z + ..." or floating literals.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, const Field& field, const std::string& path);
Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j, const Field& field, const std::string& path);
// Row-major nested arrays.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const Field& field, const std::string& path);

// {"dim": d, "c": [[k, i, j, "scalar"], ...]}: e_i e_j has coefficient on e_k;
// 1-based, sorted by (k, i, j), zero entries omitted.
Json structure_to_json(const StructureConstants& sc);
StructureConstants structure_from_json(const Json& j, const Field& field, const std::string& path);
Json pencil_to_json(const Pencil& p);
Pencil pencil_from_json(const Json& j, const Field& field, const std::string& path);

Json residual_to_json(const Residual& r);
Json report_to_json(const IdentityReport& r);

// {"n": n, "a": [...], "b": [...], "c": matrix}
Json presentation_to_json(const RPresentation& rep);
RPresentation presentation_from_json(const Json& j, const Field& field, const std::string& path);

// {"p": p, "phi": [[i, j, k, "s"], ...], "mu": ..., "psi": ..., "lambda": ..., "t": ...}
// plus "act_a", "act_b", "unit_a", "unit_b" when C actions are stored.
Json mpresentation_to_json(const MPresentation& m);
MPresentation mpresentation_from_json(const Json& j, const Field& field, const std::string& path);

// {"m": m, "p": counts, "c_actions": bool, "tensors": {name: [[indices..., "s"], ...]}}
Json pmpresentation_to_json(const PMPresentation& pres);
PMPresentation pmpresentation_from_json(const Json& j, const Field& field, const std::string& path);
// {"dims": [...], "generators": {"a/i/x/y": matrix, "b/i/x/y": matrix, "c/x": matrix}}
Json pmrepresentation_to_json(const PMRepresentation& rep);
PMRepresentation pmrepresentation_from_json(const Json& j, const PMPresentation& pres, const Field& field,
                                            const std::string& path);

// {"u": [...], "v": [...], "q": matrix}
CommutativeData commutative_from_json(const Json& j, const Field& field, const std::string& path);
Json commutative_to_json(const CommutativeData& d);

Json multiplicity_to_json(const MultiplicityMatrix& a);
MultiplicityMatrix multiplicity_from_json(const Json& j, const std::string& path);

// {"dim": D, "gamma": [[c, a, b, "s"], ...]} with a < b only.
Json bracket_to_json(const LinearPoissonBracket& b);

}  // namespace compat
