#pragma once

#include "json.hpp"

#include <string>

#include "liekit/actions.hpp"
#include "liekit/deformation.hpp"
#include "liekit/derivations.hpp"
#include "liekit/group_deformation.hpp"
#include "liekit/lie_algebra.hpp"
#include "liekit/obstructions.hpp"
#include "liekit/vector_field.hpp"

namespace liekit {

using Json = nlohmann::ordered_json;

/// {"name", "dim", "basis", "brackets": [{"i", "j", "result": {"k": "p/q"}}]} with 1-based indices, i < j.
/// The returned algebra is not Jacobi-checked.
LieAlgebra algebra_from_json(const Json& doc);
Json algebra_to_json(const LieAlgebra& g);
LieAlgebra load_algebra_file(const std::string& path);

/// Polynomial as {"e1,...,en": "p/q"}; the key "0" in one variable means the constant term.
Poly poly_from_json(const Json& doc, std::size_t nvars);
Json poly_to_json(const Poly& p);
PolyVectorField field_from_json(const Json& doc, std::size_t nvars);

Json rational_matrix_to_json(const RatMatrix& m);
Json subspace_to_json(const Subspace& s);
Json point_to_json(const Eigen::VectorXd& p);
Json optional_count(const std::optional<std::size_t>& v);

Json series_to_json(const SeriesReport& s);
Json obstruction_to_json(const ObstructionReport& r);
Json contractibility_to_json(const ContractibilityReport& r);
Json deformation_descriptor(const AlgebraDeformation& d);
Json deformation_descriptor(const GroupDeformation& d);
Json deformation_report_to_json(const DeformationReport& r);
Json deformation_report_to_json(const GroupDeformationReport& r);
Json action_report_to_json(const ActionReport& r);

Json read_json_file(const std::string& path);

/// Serializes with insertion-ordered keys, two-space indentation and every
/// floating-point number printed with 17 significant digits.
std::string dump_report(const Json& doc);

}  // namespace liekit
