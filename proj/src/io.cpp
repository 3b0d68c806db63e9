#include "conelat/io.hpp"

#include <fstream>
#include <sstream>

namespace conelat::io {

Rational rational_from_json(const json& j)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(Integer(j.dump()));
    throw Error("expected an exact number (integer or \"p/q\" string), got " + j.dump());
}

json to_json(const Rational& r)
{
    return to_string(r);
}

json to_json(const Integer& z)
{
    return to_string(z);
}

json to_json(const QVec& v)
{
    json a = json::array();
    for (const auto& x : v)
        a.push_back(to_json(x));
    return a;
}

json to_json(const ZVec& v)
{
    json a = json::array();
    for (const auto& x : v)
        a.push_back(to_json(x));
    return a;
}

json to_json(const QMatrix& m)
{
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        a.push_back(to_json(m.row(i)));
    return a;
}

json to_json(const ZMatrix& m)
{
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        a.push_back(to_json(m.row(i)));
    return a;
}

QVec vector_from_json(const json& j)
{
    if (!j.is_array())
        throw Error("expected a vector, got " + j.dump());
    QVec v;
    for (const auto& x : j)
        v.push_back(rational_from_json(x));
    return v;
}

QMatrix matrix_from_json(const json& j)
{
    if (!j.is_array() || j.empty())
        throw Error("expected a nonempty matrix, got " + j.dump());
    std::vector<QVec> rows;
    for (const auto& r : j)
        rows.push_back(vector_from_json(r));
    return QMatrix::from_rows(rows, rows[0].size());
}

LatticeFile lattice_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("gram"))
        throw Error("malformed lattice file: missing \"gram\"");
    QMatrix gram = matrix_from_json(j.at("gram"));
    if (j.contains("rank") && j.at("rank").get<std::size_t>() != gram.rows())
        throw Error("malformed lattice file: rank does not match the Gram matrix");
    LatticeFile f{Lattice(gram, j.value("label", std::string())), {}, {}, std::nullopt};
    if (j.contains("named_vectors")) {
        for (const auto& [name, v] : j.at("named_vectors").items()) {
            QVec q = vector_from_json(v);
            f.lattice.check_dimension(q);
            f.vectors.emplace(name, std::move(q));
        }
    }
    if (j.contains("isometries")) {
        for (const auto& [name, m] : j.at("isometries").items())
            f.isometries.emplace(name, to_integer(matrix_from_json(m)));
    }
    if (j.contains("reference")) {
        f.reference = j.at("reference").get<std::string>();
        if (!f.vectors.count(*f.reference))
            throw Error("malformed lattice file: reference '" + *f.reference + "' is not a named vector");
    }
    return f;
}

json to_json(const LatticeFile& f)
{
    json j;
    j["label"] = f.lattice.label();
    j["rank"] = f.lattice.rank();
    j["gram"] = to_json(f.lattice.gram());
    json named = json::object();
    for (const auto& [name, v] : f.vectors)
        named[name] = to_json(v);
    j["named_vectors"] = named;
    if (!f.isometries.empty()) {
        json iso = json::object();
        for (const auto& [name, m] : f.isometries)
            iso[name] = to_json(m);
        j["isometries"] = iso;
    }
    if (f.reference)
        j["reference"] = *f.reference;
    return j;
}

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw Error("malformed JSON in '" + path + "': " + e.what());
    }
}

LatticeFile read_lattice_file(const std::string& path)
{
    try {
        return lattice_from_json(read_json_file(path));
    } catch (const json::exception& e) {
        throw Error("malformed lattice file '" + path + "': " + e.what());
    }
}

namespace {

std::string strip(const std::string& s)
{
    std::string t;
    for (char c : s)
        if (c != ' ' && c != '\t')
            t.push_back(c);
    return t;
}

QVec parse_literal(const std::string& s)
{
    std::string body = s;
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']')
            throw Error("unterminated vector literal '" + s + "'");
        body = body.substr(1, body.size() - 2);
    }
    QVec v;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ','))
        v.push_back(parse_rational(item));
    return v;
}

} // namespace

QVec resolve_vector(const LatticeFile& f, const std::string& expr)
{
    const std::string e = strip(expr);
    if (e.empty())
        throw Error("empty vector expression");
    if (auto it = f.vectors.find(e); it != f.vectors.end())
        return it->second;
    const bool numeric = e.find_first_not_of("0123456789-+/") == std::string::npos;
    if (e.front() == '[' || e.find(',') != std::string::npos || numeric) {
        QVec out = parse_literal(e);
        f.lattice.check_dimension(out);
        return out;
    }
    QVec out(f.lattice.rank());
    std::size_t pos = 0;
    while (pos < e.size()) {
        int sign = 1;
        if (e[pos] == '+' || e[pos] == '-') {
            sign = e[pos] == '-' ? -1 : 1;
            ++pos;
        }
        std::size_t end = e.find_first_of("+-", pos);
        std::string term = e.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        if (term.empty())
            throw Error("malformed vector expression '" + expr + "'");
        Rational coeff = 1;
        std::string name = term;
        if (auto star = term.find('*'); star != std::string::npos) {
            coeff = parse_rational(term.substr(0, star));
            name = term.substr(star + 1);
        }
        auto it = f.vectors.find(name);
        if (it == f.vectors.end())
            throw Error("unknown vector '" + name + "' in '" + expr + "'");
        out = add(out, scale(coeff * sign, it->second));
        pos = end == std::string::npos ? e.size() : end;
    }
    return out;
}

QVec resolve_reference(const LatticeFile& f, const std::optional<std::string>& override_expr)
{
    if (override_expr)
        return resolve_vector(f, *override_expr);
    if (f.reference)
        return f.vectors.at(*f.reference);
    throw Error("no reference vector: pass one or set \"reference\" in the lattice file");
}

cones::Cone cone_from_json(const json& j)
{
    if (!j.is_object())
        throw Error("malformed cone file");
    cones::Cone c;
    if (j.contains("generators"))
        for (const auto& g : j.at("generators"))
            c.generators.push_back(vector_from_json(g));
    if (j.contains("halfspaces"))
        for (const auto& h : j.at("halfspaces"))
            c.halfspaces.push_back(vector_from_json(h));
    if (j.contains("strict")) {
        for (const auto& s : j.at("strict"))
            c.strict.push_back(s.get<bool>());
        if (c.strict.size() != c.halfspaces.size())
            throw Error("malformed cone file: one strict flag per halfspace");
    } else {
        c.strict.assign(c.halfspaces.size(), false);
    }
    if (!j.contains("reference"))
        throw Error("malformed cone file: missing \"reference\"");
    c.reference = vector_from_json(j.at("reference"));
    c.positive_cone = j.value("positive_cone", false);
    if (!c.generators.empty() && !c.halfspaces.empty())
        c.authority = cones::Authority::both;
    else if (!c.halfspaces.empty() || c.positive_cone)
        c.authority = cones::Authority::halfspaces;
    else
        c.authority = cones::Authority::generators;
    return c;
}

json to_json(const cones::Cone& c)
{
    json j;
    json gens = json::array();
    for (const auto& g : c.generators)
        gens.push_back(to_json(g));
    json hs = json::array();
    for (const auto& h : c.halfspaces)
        hs.push_back(to_json(h));
    json strict = json::array();
    for (bool s : c.strict)
        strict.push_back(s);
    j["generators"] = gens;
    j["halfspaces"] = hs;
    j["strict"] = strict;
    j["reference"] = to_json(c.reference);
    j["positive_cone"] = c.positive_cone;
    return j;
}

cones::Cone read_cone_file(const std::string& path)
{
    try {
        return cone_from_json(read_json_file(path));
    } catch (const json::exception& e) {
        throw Error("malformed cone file '" + path + "': " + e.what());
    }
}

} // namespace conelat::io
