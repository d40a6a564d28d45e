#ifndef CSKNOT_IO_HPP
#define CSKNOT_IO_HPP

#include <string>

#include <json.hpp>

#include "csknot/class_monoid.hpp"
#include "csknot/correspondence.hpp"
#include "csknot/cs.hpp"
#include "csknot/family.hpp"

namespace csknot {

using Json = nlohmann::ordered_json;

/// polynomial text: whitespace-separated ascending coefficients
IntPoly parse_poly_text(const std::string& text);
std::string poly_to_text(const IntPoly& f);

/// matrix text: one row per line, whitespace-separated entries
IntMatrix parse_matrix_text(const std::string& text);
std::string matrix_to_text(const IntMatrix& m);

std::string read_file(const std::string& path); // ParseError when unreadable

/// JSON fields mirror the text formats; all integers are decimal strings so
/// arbitrary precision survives the round trip.
Json conventions_json();
Json poly_to_json(const IntPoly& f);
IntPoly poly_from_json(const Json& j);
Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);
Json cs_report_to_json(const CsReport& rep);
Json family_report_to_json(const FamilyReport& rep);
Json ideal_to_json(const IdealLattice& i);
Json class_list_to_json(const ClassList& cl);
Json knot_pair_report_to_json(const KnotPairReport& rep);
Json star_verdict_to_json(const StarVerdict& v);

std::string equiv_kind_name(EquivKind k);
std::string star_route_name(StarRoute r);
std::string tri_name(Tri t);

} // namespace csknot

#endif
