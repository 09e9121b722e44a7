#ifndef MHP_OUTPUT_HPP
#define MHP_OUTPUT_HPP

// Serialization of computed invariants: canonical plain text, LaTeX, and a
// line-delimited record format that survives a round trip.

#include "mhp/invariants.hpp"
#include "mhp/rational_poly.hpp"
#include "mhp/weyl.hpp"

#include "json.hpp"

#include <string>

namespace mhp {

// One self-describing record per computed polynomial.  Fields: family (atom
// name for single-atom groups, the full descriptor string otherwise), n
// (atom size, 0 for compound groups), r, kind, vars (variable names in
// order), terms ([coefficient string, exponent vector] in canonical term
// order), and order for truncated series kinds.
nlohmann::ordered_json poly_record(const GroupDescriptor& group, const InvariantRequest& request,
                                   const RationalPoly& poly);

// Rebuilds the polynomial carried by a record.  Throws std::invalid_argument
// on a malformed record.
RationalPoly poly_from_record(const nlohmann::json& record);

}  // namespace mhp

#endif
