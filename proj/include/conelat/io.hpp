#pragma once

// JSON file formats.  Every exact number is written as a "p" or "p/q"
// string; readers accept those strings as well as plain JSON integers.

#include "conelat/cones.hpp"
#include "conelat/exactlat.hpp"

#include "json.hpp"

#include <map>
#include <optional>
#include <string>

namespace conelat::io {

using json = nlohmann::ordered_json;

// {"label": s, "rank": n, "gram": [[...]], "named_vectors": {name: [...]},
//  "reference": name?, "isometries": {name: [[...]]}?}
struct LatticeFile {
    Lattice lattice;
    std::map<std::string, QVec> vectors;
    std::map<std::string, ZMatrix> isometries;
    std::optional<std::string> reference;
};

Rational rational_from_json(const json& j);
json to_json(const Rational& r);
json to_json(const Integer& z);
json to_json(const QVec& v);
json to_json(const ZVec& v);
json to_json(const QMatrix& m);
json to_json(const ZMatrix& m);

QVec vector_from_json(const json& j);
QMatrix matrix_from_json(const json& j);

LatticeFile lattice_from_json(const json& j);
json to_json(const LatticeFile& f);
LatticeFile read_lattice_file(const std::string& path);

// A name from the file, a literal "[1,-2,1/2]" / "1,-2,1/2", or a linear
// combination of names such as "s+2*e+2*f" or "C2+1/2*C1".
QVec resolve_vector(const LatticeFile& f, const std::string& expr);

// The file's reference vector, or the named/literal override.
QVec resolve_reference(const LatticeFile& f, const std::optional<std::string>& override_expr);

// {"generators": [...], "halfspaces": [...], "strict": [...],
//  "reference": [...], "positive_cone": bool}
cones::Cone cone_from_json(const json& j);
json to_json(const cones::Cone& c);
cones::Cone read_cone_file(const std::string& path);

json read_json_file(const std::string& path);

} // namespace conelat::io
