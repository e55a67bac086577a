#pragma once

#include "qortho/families.hpp"
#include "qortho/poly.hpp"

#include <json.hpp>

#include <string>

namespace qortho {

/// {"family": id, "n": n, "terms": [{"x": e1, "s": e2, "coeff": "<scalar>"}],
///  "text": "<canonical rendering>"}; term order is the canonical term order,
/// so serialization is deterministic.
nlohmann::ordered_json poly_record(const std::string& family_id, int n, const Poly& p);
/// Rebuilds the polynomial of a record produced by poly_record.
Poly poly_from_record(const nlohmann::ordered_json& record);

}  // namespace qortho
