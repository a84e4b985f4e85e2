#pragma once

#include <string>

#include "json.hpp"

#include "fintop/category.hpp"
#include "fintop/cocomplete.hpp"
#include "fintop/lattice.hpp"

namespace fintop {

using json = nlohmann::json;

/// {"points": ["a", "b"], "opens": [[], ["b"], ["a", "b"]]}
FinSpace space_from_json(const json& j);
json space_to_json(const FinSpace& x);

/// {"gen": ["b"]}
json filter_to_json(const FinSpace& x, const Filter& f);
Filter filter_from_json(const FinSpace& x, const json& j);

/// TX as an ordinary space plus "points_as_filters".
json filter_space_to_json(const FilterSpace& tx);

/// {"elements": [...], "leq": [...]} where leq is either a list of pairs
/// [lo, hi] of element names (closed reflexively and transitively) or a
/// square 0/1 matrix.
FiniteLattice lattice_from_json(const json& j);
json lattice_to_json(const FiniteLattice& l);

/// {"objects": ["A"], "arrows": [{"name": "e", "dom": "A", "cod": "A"}],
///  "identities": {"A": "1"}, "compose": [["e", "e", "e"]]}
/// Each compose triple [g, f, h] states g . f = h; composites with an
/// identity may be omitted.
FinCategory category_from_json(const json& j);
json category_to_json(const FinCategory& c);

enum class InputKind { space, lattice, category };

/// Decides by the keys present; throws invalid_input when none match.
InputKind detect_kind(const json& j);

/// Reads and parses a JSON file; throws invalid_input on I/O or syntax
/// errors.
json load_json_file(const std::string& path);

}  // namespace fintop
