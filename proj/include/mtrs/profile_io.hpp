#pragma once

#include <string>

#include "json.hpp"
#include "mtrs/criteria.hpp"
#include "mtrs/enumerate.hpp"
#include "mtrs/field.hpp"
#include "mtrs/hull.hpp"
#include "mtrs/matrix.hpp"
#include "mtrs/twisted_code.hpp"

namespace mtrs {

using json = nlohmann::ordered_json;

/// Accepts {"p":..,"m":..,"modulus":[c0..cm]}, {"q":..} or "p,m,c0,...,cm".
FieldSpec field_spec_from_json(const json& j);
json field_spec_to_json(const FieldSpec& spec);

/// Code profile {field, alpha, k, t, h, eta}; element values are strings in
/// the `a`-polynomial notation (integers are also accepted). A document
/// with a "profile" member is unwrapped first.
MultiTwistedCode code_from_json(const json& j);
json code_to_json(const MultiTwistedCode& code);
MultiTwistedCode load_code(const std::string& path);

json elems_to_json(const Field& f, std::span<const Elem> v);
std::vector<Elem> elems_from_json(const Field& f, const json& j);
json matrix_to_json(const Matrix& m);
json verdict_to_json(const MdsVerdict& v);
json hull_report_to_json(const HullReport& r);
json gram_decomposition_to_json(const GramDecomposition& d);

json table_to_json(const std::vector<TableCell>& cells);
std::vector<TableCell> table_from_json(const json& j);

}  // namespace mtrs
