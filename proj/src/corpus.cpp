#include "conelat/corpus.hpp"

#include "conelat/ade.hpp"
#include "conelat/domains.hpp"
#include "conelat/roots.hpp"
#include "conelat/zariski.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <optional>

#ifndef CONELAT_CORPUS_DEFAULT
#define CONELAT_CORPUS_DEFAULT "corpus"
#endif

namespace conelat::corpus {

using io::json;

std::string corpus_dir()
{
    if (const char* env = std::getenv("CONELAT_CORPUS_DIR"); env && *env)
        return env;
    return CONELAT_CORPUS_DEFAULT;
}

std::vector<std::string> list_cases(const std::string& dir)
{
    namespace fs = std::filesystem;
    const fs::path cases = fs::path(dir) / "cases";
    if (!fs::is_directory(cases))
        throw Error("corpus directory '" + cases.string() + "' does not exist");
    std::vector<std::string> names;
    for (const auto& entry : fs::directory_iterator(cases))
        if (entry.path().extension() == ".json")
            names.push_back(entry.path().stem().string());
    std::sort(names.begin(), names.end());
    return names;
}

namespace {

bool same_rational(const json& expect, const Rational& actual)
{
    return io::rational_from_json(expect) == actual;
}

bool same_vector(const json& expect, const QVec& actual)
{
    return io::vector_from_json(expect) == actual;
}

const io::LatticeFile& need(const std::optional<io::LatticeFile>& f)
{
    if (!f)
        throw Error("check needs a lattice but the case has none");
    return *f;
}

// Evaluates one check; writes "actual" (and sometimes "detail") into out and
// returns whether it matches "expect".
bool evaluate(const json& check, const std::optional<io::LatticeFile>& file, json& out)
{
    const std::string kind = check.at("kind").get<std::string>();
    const json& expect = check.at("expect");
    if (kind == "square") {
        const auto& f = need(file);
        Rational s = f.lattice.square(io::resolve_vector(f, check.at("vector")));
        out["actual"] = io::to_json(s);
        return same_rational(expect, s);
    }
    if (kind == "pair") {
        const auto& f = need(file);
        Rational p = f.lattice.pair(io::resolve_vector(f, check.at("u")), io::resolve_vector(f, check.at("v")));
        out["actual"] = io::to_json(p);
        return same_rational(expect, p);
    }
    if (kind == "primitive") {
        const auto& f = need(file);
        bool p = is_primitive(to_integer(io::resolve_vector(f, check.at("vector"))));
        out["actual"] = p;
        return expect.get<bool>() == p;
    }
    if (kind == "divisibility") {
        const auto& f = need(file);
        Integer d = divisibility(f.lattice, to_integer(io::resolve_vector(f, check.at("vector"))));
        out["actual"] = io::to_json(d);
        return same_rational(expect, Rational(d));
    }
    if (kind == "signature") {
        const auto& f = need(file);
        Signature s = signature(f.lattice);
        out["actual"] = json::array({s.plus, s.minus});
        return expect == out["actual"];
    }
    if (kind == "integral_reflection" || kind == "reflection_denominator" || kind == "offending_image") {
        const auto& f = need(file);
        auto rep = roots::reflection_integrality(f.lattice, io::resolve_vector(f, check.at("root")));
        if (kind == "integral_reflection") {
            out["actual"] = rep.integral;
            return expect.get<bool>() == rep.integral;
        }
        if (kind == "reflection_denominator") {
            out["actual"] = io::to_json(rep.denominator);
            return same_rational(expect, Rational(rep.denominator));
        }
        out["actual"] = rep.offending_index ? io::to_json(rep.offending_image) : json(nullptr);
        return rep.offending_index && same_vector(expect, rep.offending_image);
    }
    if (kind == "fold") {
        auto type = ade::parse_type(check.at("type").get<std::string>());
        auto tau = ade::diagram_automorphism(type, check.at("tau").get<std::string>());
        auto order = ade::folded_weyl_order(type, tau);
        out["actual"] = order;
        out["detail"] = {{"weyl_order", ade::weyl_group_order(type)}};
        return expect.get<std::uint64_t>() == order;
    }
    if (kind == "rank2_rational") {
        const auto& f = need(file);
        auto rays = domains::rank2_boundary_rays(f.lattice);
        out["actual"] = rays.rational;
        out["detail"] = {{"discriminant", io::to_json(rays.discriminant)}};
        return expect.get<bool>() == rays.rational;
    }
    if (kind == "rank2_generator") {
        const auto& f = need(file);
        const long bound = check.at("bound").get<long>();
        bool found = true;
        try {
            auto g = domains::rank2_isometry_generator(f.lattice, bound);
            out["detail"] = {{"matrix", io::to_json(g.matrix())},
                             {"trace", io::to_json(Integer(g.matrix()(0, 0) + g.matrix()(1, 1)))}};
        } catch (const Error&) {
            found = false;
        }
        out["actual"] = found;
        return expect.get<bool>() == found;
    }
    if (kind == "zariski_support") {
        const auto& f = need(file);
        std::vector<std::string> names = check.at("roots").get<std::vector<std::string>>();
        std::vector<QVec> rs;
        for (const auto& n : names)
            rs.push_back(io::resolve_vector(f, n));
        auto dec = zariski::decompose(f.lattice, io::resolve_vector(f, check.at("class")), rs);
        json support = json::array();
        for (auto i : dec.support)
            support.push_back(names[i]);
        json coeffs = json::object();
        for (std::size_t i = 0; i < names.size(); ++i)
            coeffs[names[i]] = io::to_json(dec.coefficients[i]);
        out["actual"] = support;
        out["detail"] = {{"P", io::to_json(dec.positive)}, {"N_coeffs", coeffs}};
        return expect == support;
    }
    throw Error("unknown check kind '" + kind + "'");
}

} // namespace

CaseResult run_case(const json& case_file, const std::string& name)
{
    std::optional<io::LatticeFile> file;
    if (case_file.contains("lattice"))
        file = io::lattice_from_json(case_file.at("lattice"));
    CaseResult res;
    res.ok = true;
    json checks = json::array();
    for (const auto& check : case_file.at("checks")) {
        json entry = check;
        bool ok = false;
        try {
            ok = evaluate(check, file, entry);
        } catch (const Error& e) {
            entry["error"] = e.what();
        }
        entry["ok"] = ok;
        res.ok = res.ok && ok;
        checks.push_back(std::move(entry));
    }
    res.report = {{"case", name},
                  {"provenance", case_file.value("provenance", std::string())},
                  {"checks", checks},
                  {"ok", res.ok}};
    if (case_file.contains("notes"))
        res.report["notes"] = case_file.at("notes");
    return res;
}

CaseResult run_case_file(const std::string& dir, const std::string& name)
{
    namespace fs = std::filesystem;
    const fs::path path = fs::path(dir) / "cases" / (name + ".json");
    if (!fs::exists(path))
        throw Error("no corpus case named '" + name + "'");
    try {
        return run_case(io::read_json_file(path.string()), name);
    } catch (const json::exception& e) {
        throw Error("malformed corpus case '" + name + "': " + e.what());
    }
}

} // namespace conelat::corpus
