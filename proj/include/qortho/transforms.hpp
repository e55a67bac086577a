#pragma once

#include "qortho/cheb.hpp"
#include "qortho/families.hpp"
#include "qortho/poly.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace qortho {

/// The named connection identities, one per equation tag exposed by the CLI.
enum class ConnectionId {
    eq_3_4,
    eq_3_5,
    eq_4_10,
    eq_4_11,
    eq_5_11,
    eq_5_12,
    eq_5_20,
    eq_5_23,
    eq_5_28,
    eq_5_29,
    eq_6_4,
    eq_6_5,
    eq_6_6,
    eq_6_7,
};

std::optional<ConnectionId> connection_from_string(std::string_view id);
std::string_view connection_to_string(ConnectionId id);
const std::vector<ConnectionId>& all_connections();

/// Both sides of the identity at index n, s symbolic.
struct ConnectionSides {
    Poly lhs;
    Poly rhs;
};
ConnectionSides connection_sides(ConnectionId id, int n);

/// Failure is a verdict carrying the nonzero residual, not an error.
struct ConnectionVerdict {
    bool pass;
    Poly residual;  // lhs - rhs
};
ConnectionVerdict connection_check(ConnectionId id, int n);

/// Coefficients c_k with p = sum c_k * basis_k where basis_k is the family's
/// functional row of degree k; coefficients are polynomials in s.
std::vector<Poly> to_basis(const Poly& p, Family f);
Poly from_basis(const std::vector<Poly>& coeffs, Family f);

enum class PairId { pair_3_6, pair_3_8, pair_5_21, pair_5_24 };
enum class PairDirection { forward, backward };

std::optional<PairId> pair_from_string(std::string_view id);
std::string_view pair_to_string(PairId id);

/// Applies the inverse-relation rule b(n) = sum_k w(n,k) a(n-2k) (or its
/// inverse); the weight's s is substituted with s_value (symbolic s by
/// default). Throws std::invalid_argument on an empty sequence.
std::vector<Poly> inverse_pair_apply(PairId id, const std::vector<Poly>& seq, PairDirection dir,
                                     const Poly& s_value = Poly::s());

/// cheb_convert under its CLI-facing operation name.
ChebPoly cheb_basis_convert(const ChebPoly& p, ChebBasis to);

}  // namespace qortho
