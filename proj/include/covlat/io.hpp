#pragma once

#include <string>

#include "covlat/classical.hpp"
#include "covlat/classify.hpp"
#include "covlat/covering.hpp"
#include "covlat/lattice.hpp"

namespace covlat {

// Covering document: {"ground": ["a","b"], "blocks": [["a"],["a","b"]]}.
// Key names are exact; block order is significant. Parse failures raise
// ParseError naming the offending key; validation failures raise the
// validate_covering error kinds naming the offending label.
Covering covering_from_json(const std::string& text);
std::string covering_to_json(const Covering& c, bool pretty = true);

// Lattice document as written by export_json. Accepts flats given either as
// arrays of element labels or as plain label strings.
GradedLattice lattice_from_json(const std::string& text);

// Cayley table document: {"order": m, "table": [[...], ...]}, identity 0.
GroupTable cayley_from_json(const std::string& text);

std::string report_to_json(const ClassificationReport& r, bool pretty = true);

std::string read_file(const std::string& path);  // errors: FileError

}  // namespace covlat
