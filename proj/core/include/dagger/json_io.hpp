#pragma once

// JSON encodings of the library's values. Rationals are strings "n/d" or
// "n"; every serializer is deterministic and every parser accepts what the
// matching serializer produces. Parsers throw ParseError on malformed
// payloads and let DomainError from the constructors propagate.

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "dagger/classify.hpp"
#include "dagger/localquad.hpp"
#include "dagger/maximality.hpp"

namespace dagger::json {

using Json = nlohmann::json;

/// Parses JSON text, mapping syntax errors to ParseError.
Json parse_text(std::string_view text);

Json to_json(const Rat& x);
/// Accepts a string "n/d" or "n", or a JSON integer.
Rat rat_from_json(const Json& j);

/// Rendered as the decimal generator.
Json to_json(const IdealZ& ideal);
IdealZ ideal_from_json(const Json& j);

/// {"a": …, "b": …}
Json to_json(const QuaternionAlgebra& alg);
QuaternionAlgebra algebra_from_json(const Json& j);

/// {"w": …, "x": …, "y": …, "z": …}
Json to_json(const Quat& x);
Quat quat_from_json(const QuaternionAlgebra& alg, const Json& j);

/// {"u": element}, and "algebra" when `with_algebra`.
Json to_json(const OrthogonalInvolution& inv, bool with_algebra = false);
/// An "algebra" member, if present, must equal `alg`.
OrthogonalInvolution involution_from_json(const QuaternionAlgebra& alg, const Json& j);
/// Requires an "algebra" member.
OrthogonalInvolution involution_from_json(const Json& j);

/// {"algebra": …, "basis": [[4 strings] × 4]}, rows in canonical HNF.
Json to_json(const IntegralLattice4& lattice);
/// Rows of "basis" are generators; any number of full-rank rows is accepted
/// and canonicalized.
IntegralLattice4 lattice_from_json(const Json& j);
/// Throws DomainError unless the lattice is an order.
Order4 order_from_json(const Json& j);

/// {"verdict": "maximal" | "not-maximal", "target": …, "achieved": …,
///  "witnesses": [{"prime", "achieved", "target"}], "dagger_stable": bool,
///  "eichler_form": bool | null, "order": lattice}
Json to_json(const MaximalityCertificate& cert);
MaximalityCertificate certificate_from_json(const Json& j);

/// {"p": int, "lambda": …, "basis": [[2 strings] × 2]}; rows of "basis" are
/// the basis vectors.
Json to_json(const LocalQuadLattice2& lattice);
LocalQuadLattice2 local_lattice_from_json(const Json& j);

/// Rows of a rational matrix as arrays of rational strings.
Json matrix_to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols);

/// {"p", "lambda", "classes", "representatives": [{"gram", "lattice"}]}
/// with `classes` the given class count.
Json classification_report(const LocalClassification& c, long classes);

/// {"error": {"kind": …, "message": …}}
Json error_object(std::string_view kind, std::string_view message);

/// Compact single-line rendering used for all output.
std::string dump(const Json& j);

}  // namespace dagger::json
