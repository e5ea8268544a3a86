#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "xtop/lattice.hpp"
#include "xtop/poset.hpp"
#include "xtop/semiring.hpp"
#include "xtop/separation.hpp"
#include "xtop/space.hpp"

namespace xtop {

using Json = nlohmann::ordered_json;

// Reads a file; malformed JSON raises ParseError.
Json load_json_file(const std::string& path);

// {"labels": [...], "leq": [[a, b], ...]}; pairs are label references.
FinitePoset poset_from_json(const Json& j);
Json to_json(const FinitePoset& p);

// Poset format plus optional "meet" and "join" label tables, which are then
// validated against the order.
FiniteLattice lattice_from_json(const Json& j);
Json to_json(const FiniteLattice& l);

// {"lattice": {...}, "X": [labels], "closed_sets": [[labels], ...]}.
// closed_sets is optional on input; when present it must match.
XTopSpace space_from_json(const Json& j);
Json to_json(const XTopSpace& s);

// {"labels", "add", "mul", "zero", "one"}; table cells are labels.
FiniteSemiring semiring_from_json(const Json& j);
Json to_json(const FiniteSemiring& r);

Json to_json(const XTopSpace& s, const SeparationReport& r);
Json to_json(const XTopSpace& s, const std::vector<PointFlags>& points);
Json to_json(const FiniteSemiring& r, const SpectrumReport& rep);
Json to_json(const std::vector<CheckResult>& checks);

// Sorted label list of a set of lattice or semiring indices.
Json label_array(const std::vector<std::string>& labels, const ElementSet& s);

}  // namespace xtop
