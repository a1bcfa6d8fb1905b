#pragma once

#include <string>

#include <json.hpp>

#include "burnside/bisets.hpp"
#include "burnside/burnside_ring.hpp"
#include "burnside/filtration.hpp"
#include "burnside/lattice.hpp"

namespace burnside::json_io {

using nlohmann::json;

// Groups serialize as {"name": ...} when they carry a catalog name, else as
// {"order": n, "cayley": [[...]]}. Parsing additionally accepts
// {"degree": d, "generators": [[...]]} for permutation groups. All malformed
// input surfaces as ParseError.
json group_to_json(const GroupPtr& g);
GroupPtr group_from_json(const json& j);

// "catalog name", "@file.json", or inline JSON starting with '{'.
GroupPtr parse_group_spec(const std::string& spec);

json element_to_json(const BurnsideElement& x);
BurnsideElement element_from_json(const json& j);

json marks_to_json(const TableOfMarks& t);

json mark_vector_to_json(const MarkVector& v);

json lattice_to_json(const IntegerLattice& l);
IntegerLattice lattice_from_json(const json& j);

json biset_to_json(const BisetElement& x);
BisetElement biset_from_json(const json& j);

json character_to_json(const CharacterVector& chi);

// Coefficients ride as JSON integers; values outside int64 raise ParseError
// on output rather than silently losing precision.
json int_to_json(const Int& v);
Int int_from_json(const json& j);

json parse_text(const std::string& text);   // ParseError on bad JSON
json load_file(const std::string& path);    // ParseError on bad file or JSON

}  // namespace burnside::json_io
