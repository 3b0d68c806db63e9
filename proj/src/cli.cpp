#include "conelat/cli.hpp"

#include "conelat/ade.hpp"
#include "conelat/cones.hpp"
#include "conelat/corpus.hpp"
#include "conelat/domains.hpp"
#include "conelat/hunt.hpp"
#include "conelat/io.hpp"
#include "conelat/roots.hpp"
#include "conelat/zariski.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

namespace conelat::cli {

using io::json;

namespace {

std::vector<std::string> split_list(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(item);
    return out;
}

std::string cell(const json& v)
{
    return v.is_string() ? v.get<std::string>() : v.dump();
}

// Human-readable rendering: key/value lines for an object, a column table
// for a list of objects.
void print_pretty(std::ostream& out, const std::vector<json>& records)
{
    if (records.size() == 1 && records[0].is_object()) {
        std::size_t width = 0;
        for (const auto& [k, v] : records[0].items())
            width = std::max(width, k.size());
        for (const auto& [k, v] : records[0].items())
            out << std::left << std::setw(static_cast<int>(width)) << k << "  " << cell(v) << "\n";
        return;
    }
    if (records.empty())
        return;
    std::vector<std::string> keys;
    for (const auto& [k, v] : records[0].items())
        keys.push_back(k);
    std::vector<std::size_t> width(keys.size());
    for (std::size_t c = 0; c < keys.size(); ++c) {
        width[c] = keys[c].size();
        for (const auto& r : records)
            width[c] = std::max(width[c], cell(r.value(keys[c], json())).size());
    }
    for (std::size_t c = 0; c < keys.size(); ++c)
        out << std::left << std::setw(static_cast<int>(width[c])) << keys[c] << (c + 1 < keys.size() ? "  " : "\n");
    for (const auto& r : records)
        for (std::size_t c = 0; c < keys.size(); ++c)
            out << std::left << std::setw(static_cast<int>(width[c])) << cell(r.value(keys[c], json()))
                << (c + 1 < keys.size() ? "  " : "\n");
}

struct Emitter {
    std::ostream& out;
    bool pretty = false;
    std::vector<json> records;

    void add(json j) { records.push_back(std::move(j)); }
    void flush()
    {
        if (pretty) {
            print_pretty(out, records);
            return;
        }
        for (const auto& r : records)
            out << r.dump() << "\n";
    }
};

struct Options {
    std::string lattice, cone;
    std::string u, v, c, root, alpha, h, g, D, x, x0;
    std::string roots, walls, of, gens;
    std::string type, tau, B, M = "auto", widen = "1";
    std::size_t radius = 1;
    long bound = 50;
    bool inverse = false, allow_large = false, pretty = false;
    std::string case_name, corpus_dir;
};

std::vector<QVec> resolve_list(const io::LatticeFile& f, const std::vector<std::string>& names)
{
    std::vector<QVec> out;
    for (const auto& n : names)
        out.push_back(io::resolve_vector(f, n));
    return out;
}

std::optional<std::string> opt(const std::string& s)
{
    return s.empty() ? std::nullopt : std::optional<std::string>(s);
}

ZMatrix named_isometry(const io::LatticeFile& f, const std::string& name)
{
    auto it = f.isometries.find(name);
    if (it == f.isometries.end())
        throw Error("unknown isometry '" + name + "'");
    return it->second;
}

json word_json(const std::vector<std::string>& names, const std::vector<std::size_t>& letters)
{
    json w = json::array();
    for (auto i : letters)
        w.push_back(names[i]);
    return w;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact lattice computations for hyperbolic reflection chambers, Zariski decompositions, "
                 "wall enumeration and fundamental domains.",
                 "conelat"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    Options o;
    app.add_flag("--pretty", o.pretty, "Human-readable table instead of JSON lines");

    auto lattice_opt = [&](CLI::App* s) { s->add_option("--lattice", o.lattice, "Lattice JSON file")->required(); };
    auto ref_opt = [&](CLI::App* s) { s->add_option("--h", o.h, "Reference positive vector (default: file reference)"); };

    auto* pair_cmd = app.add_subcommand("pair", "Pairing of two vectors");
    lattice_opt(pair_cmd);
    pair_cmd->add_option("--u", o.u, "First vector")->required();
    pair_cmd->add_option("--v", o.v, "Second vector")->required();

    auto* sig_cmd = app.add_subcommand("signature", "Signature of the Gram matrix");
    lattice_opt(sig_cmd);

    auto* dual_cmd = app.add_subcommand("dual", "Dual class gram*c, or gram^-1*c with --inverse");
    lattice_opt(dual_cmd);
    dual_cmd->add_option("--c", o.c, "Vector")->required();
    dual_cmd->add_flag("--inverse", o.inverse, "Map a functional back to a class");

    auto* div_cmd = app.add_subcommand("divisibility", "gcd of the pairings of v with the lattice");
    lattice_opt(div_cmd);
    div_cmd->add_option("--v", o.v, "Integral vector")->required();

    auto* comp_cmd = app.add_subcommand("complement", "Saturated orthogonal complement");
    lattice_opt(comp_cmd);
    comp_cmd->add_option("--of", o.of, "Comma-separated vectors (empty: whole lattice)");

    auto* refl_cmd = app.add_subcommand("reflect", "Reflection matrix, or the image of --v");
    lattice_opt(refl_cmd);
    refl_cmd->add_option("--root", o.root, "Vector to reflect in")->required();
    refl_cmd->add_option("--v", o.v, "Vector to reflect");

    auto* int_cmd = app.add_subcommand("integral", "Whether the reflection in a root is integral");
    lattice_opt(int_cmd);
    int_cmd->add_option("--root", o.root, "Root")->required();

    auto* walk_cmd = app.add_subcommand("walk", "Walk a positive vector into the fundamental chamber");
    lattice_opt(walk_cmd);
    ref_opt(walk_cmd);
    walk_cmd->add_option("--roots", o.roots, "Comma-separated roots")->required();
    walk_cmd->add_option("--alpha", o.alpha, "Positive vector")->required();

    auto* fact_cmd = app.add_subcommand("factorize", "Split an isometry as (Weyl word) * (chamber symmetry)");
    lattice_opt(fact_cmd);
    ref_opt(fact_cmd);
    fact_cmd->add_option("--roots", o.roots, "Comma-separated roots")->required();
    fact_cmd->add_option("--g", o.g, "Isometry name from the lattice file")->required();

    auto* fold_cmd = app.add_subcommand("fold", "Order of the subgroup of W fixed by a diagram automorphism");
    fold_cmd->add_option("--type", o.type, "A_n, D_n or E6/E7/E8, e.g. A3")->required();
    fold_cmd->add_option("--tau", o.tau, "id, flip, triality, or 1-based images '3,2,1'")->required();
    fold_cmd->add_flag("--allow-large", o.allow_large, "Permit enumerating E7 and E8");

    auto* fe_cmd = app.add_subcommand("fe", "Fundamental exceptional chamber of a root list");
    lattice_opt(fe_cmd);
    ref_opt(fe_cmd);
    fe_cmd->add_option("--roots", o.roots, "Comma-separated roots");
    fe_cmd->add_option("--x", o.x, "Vector to classify against the chamber");

    auto* sub_cmd = app.add_subcommand("subdivide", "Cells of a wall arrangement inside a cone");
    lattice_opt(sub_cmd);
    sub_cmd->add_option("--cone", o.cone, "Cone JSON file")->required();
    sub_cmd->add_option("--walls", o.walls, "Comma-separated walls");

    auto* zar_cmd = app.add_subcommand("zariski", "Zariski decomposition against a root list");
    lattice_opt(zar_cmd);
    zar_cmd->add_option("--D", o.D, "Class to decompose")->required();
    zar_cmd->add_option("--roots", o.roots, "Comma-separated roots");

    auto* hunt_cmd = app.add_subcommand("hunt", "Primitive negative vectors of bounded square and height");
    lattice_opt(hunt_cmd);
    hunt_cmd->add_option("--h", o.h, "Integral positive base point (default: file reference)");
    hunt_cmd->add_option("--B", o.B, "Square bound, -B <= v^2 < 0")->required();
    hunt_cmd->add_option("--M", o.M, "Height bound, or 'auto' (needs --cone)");
    hunt_cmd->add_option("--cone", o.cone, "Keep only vectors whose orthogonal meets this cone");
    hunt_cmd->add_option("--widen", o.widen, "Multiply the automatic height bound by this factor");

    auto* dom_cmd = app.add_subcommand("domain", "Dirichlet domain of a truncated group ball");
    lattice_opt(dom_cmd);
    ref_opt(dom_cmd);
    dom_cmd->add_option("--x0", o.x0, "Base point")->required();
    dom_cmd->add_option("--gens", o.gens, "Comma-separated isometry names")->required();
    dom_cmd->add_option("--radius", o.radius, "Ball radius in word length");

    auto* r2_cmd = app.add_subcommand("rank2", "Boundary rays of a rank-2 hyperbolic lattice");
    lattice_opt(r2_cmd);
    r2_cmd->add_option("--bound", o.bound, "Entry bound for the infinite-order isometry search");

    auto* corpus_cmd = app.add_subcommand("corpus", "Worked-example corpus");
    corpus_cmd->require_subcommand(1);
    corpus_cmd->fallthrough();
    corpus_cmd->add_option("--dir", o.corpus_dir, "Corpus directory (default: $CONELAT_CORPUS_DIR or built-in)");
    auto* corpus_list = corpus_cmd->add_subcommand("list", "List case names");
    auto* corpus_run = corpus_cmd->add_subcommand("run", "Run a case and report its checks");
    corpus_run->add_option("name", o.case_name, "Case name")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    Emitter emit{out, o.pretty, {}};
    try {
        if (fold_cmd->parsed()) {
            auto type = ade::parse_type(o.type);
            auto tau = ade::diagram_automorphism(type, o.tau);
            ade::FoldOptions fo;
            fo.allow_large = o.allow_large;
            emit.add({{"type", type.name()},
                      {"tau", o.tau},
                      {"order", ade::folded_weyl_order(type, tau, fo)},
                      {"weyl_order", ade::weyl_group_order(type)}});
            emit.flush();
            return kExitOk;
        }
        if (corpus_cmd->parsed()) {
            const std::string dir = o.corpus_dir.empty() ? corpus::corpus_dir() : o.corpus_dir;
            if (corpus_list->parsed()) {
                json names = corpus::list_cases(dir);
                emit.add({{"cases", names}});
                emit.flush();
                return kExitOk;
            }
            auto res = corpus::run_case_file(dir, o.case_name);
            if (o.pretty) {
                std::vector<json> rows;
                for (const auto& c : res.report["checks"])
                    rows.push_back({{"kind", c["kind"]}, {"expect", c["expect"]},
                                    {"actual", c.value("actual", json())}, {"ok", c["ok"]}});
                out << res.report["case"].get<std::string>() << " -- " << res.report["provenance"].get<std::string>()
                    << "\n";
                print_pretty(out, rows);
            } else {
                out << res.report.dump(2) << "\n";
            }
            return res.ok ? kExitOk : kExitDomainError;
        }

        const io::LatticeFile f = io::read_lattice_file(o.lattice);
        const Lattice& L = f.lattice;

        if (pair_cmd->parsed()) {
            emit.add({{"pair", io::to_json(L.pair(io::resolve_vector(f, o.u), io::resolve_vector(f, o.v)))}});
        } else if (sig_cmd->parsed()) {
            auto s = signature(L);
            emit.add({{"plus", s.plus}, {"minus", s.minus}});
        } else if (dual_cmd->parsed()) {
            QVec c = io::resolve_vector(f, o.c);
            emit.add({{"dual", io::to_json(o.inverse ? dual_class_inverse(L, c) : dual_class(L, c))}});
        } else if (div_cmd->parsed()) {
            emit.add({{"divisibility", io::to_json(divisibility(L, to_integer(io::resolve_vector(f, o.v))))}});
        } else if (comp_cmd->parsed()) {
            auto sub = orthogonal_complement(L, resolve_list(f, split_list(o.of)));
            json basis = json::array();
            for (std::size_t j = 0; j < sub.rank(); ++j)
                basis.push_back(io::to_json(sub.basis.column(j)));
            emit.add({{"rank", sub.rank()}, {"basis", basis}, {"gram", io::to_json(sub.gram)}});
        } else if (refl_cmd->parsed()) {
            QVec e = io::resolve_vector(f, o.root);
            if (o.v.empty())
                emit.add({{"matrix", io::to_json(roots::reflection(L, e))}});
            else
                emit.add({{"image", io::to_json(roots::reflect(L, e, io::resolve_vector(f, o.v)))}});
        } else if (int_cmd->parsed()) {
            auto rep = roots::reflection_integrality(L, io::resolve_vector(f, o.root));
            json j{{"integral", rep.integral}, {"denominator", io::to_json(rep.denominator)}};
            if (rep.offending_index) {
                j["offending_index"] = *rep.offending_index;
                j["offending_image"] = io::to_json(rep.offending_image);
            }
            emit.add(j);
        } else if (walk_cmd->parsed()) {
            auto names = split_list(o.roots);
            auto res = roots::chamber_walk(L, resolve_list(f, names), io::resolve_vector(f, o.alpha),
                                           io::resolve_reference(f, opt(o.h)));
            emit.add({{"word", word_json(names, res.word.letters)}, {"rep", io::to_json(res.rep)}});
        } else if (fact_cmd->parsed()) {
            auto names = split_list(o.roots);
            auto fac = roots::weyl_factorize(L, resolve_list(f, names), named_isometry(f, o.g),
                                             io::resolve_reference(f, opt(o.h)));
            emit.add({{"w", word_json(names, fac.weyl.letters)},
                      {"w_matrix", io::to_json(fac.weyl.matrix)},
                      {"b", io::to_json(fac.chamber)},
                      {"probe", io::to_json(fac.probe)}});
        } else if (fe_cmd->parsed()) {
            QVec h = io::resolve_reference(f, opt(o.h));
            auto c = cones::fundamental_exceptional_chamber(L, resolve_list(f, split_list(o.roots)), h);
            json j{{"cone", io::to_json(c)}};
            if (!o.x.empty())
                j["position"] = cones::to_string(cones::contains(L, c, io::resolve_vector(f, o.x)));
            emit.add(j);
        } else if (sub_cmd->parsed()) {
            auto cone = io::read_cone_file(o.cone);
            for (const auto& p : cones::subdivide(L, cone, resolve_list(f, split_list(o.walls)))) {
                json gens = json::array();
                for (const auto& g : p.cone.generators)
                    gens.push_back(io::to_json(g));
                emit.add({{"signs", p.signs}, {"witness", io::to_json(p.witness)}, {"generators", gens}});
            }
        } else if (zar_cmd->parsed()) {
            auto names = split_list(o.roots);
            auto dec = zariski::decompose(L, io::resolve_vector(f, o.D), resolve_list(f, names));
            json coeffs = json::object();
            for (std::size_t i = 0; i < names.size(); ++i)
                coeffs[names[i]] = io::to_json(dec.coefficients[i]);
            json support = json::array();
            for (auto i : dec.support)
                support.push_back(names[i]);
            emit.add({{"P", io::to_json(dec.positive)},
                      {"N_coeffs", coeffs},
                      {"support", support},
                      {"qP", io::to_json(dec.positive_square)},
                      {"qD", io::to_json(dec.class_square)}});
        } else if (hunt_cmd->parsed()) {
            const QVec h = io::resolve_reference(f, opt(o.h));
            const Rational B = parse_rational(o.B);
            std::optional<cones::Cone> cone;
            if (!o.cone.empty())
                cone = io::read_cone_file(o.cone);
            Rational M;
            if (o.M == "auto") {
                if (!cone)
                    throw Error("--M auto needs --cone");
                M = hunt::cone_bound(L, *cone, h, B, parse_rational(o.widen));
            } else {
                M = parse_rational(o.M);
            }
            for (const auto& cand : hunt::enum_negative(L, {to_integer(h), B, M})) {
                if (cone && !cones::wall_meets_cone(L, to_rational(cand.coords), *cone))
                    continue;
                emit.add({{"coords", io::to_json(cand.coords)},
                          {"square", io::to_json(cand.square)},
                          {"height", io::to_json(cand.height)}});
            }
        } else if (dom_cmd->parsed()) {
            const QVec h = io::resolve_reference(f, opt(o.h));
            std::vector<Isometry> gens;
            for (const auto& name : split_list(o.gens))
                gens.emplace_back(L, named_isometry(f, name));
            auto b = domains::ball(L, gens, o.radius, h);
            auto d = domains::dirichlet_domain(L, io::resolve_vector(f, o.x0), b);
            json active = json::array();
            for (auto k : d.active) {
                const auto& hs = d.halfspaces[k];
                active.push_back({{"element", io::to_json(b.elements[hs.element].matrix())},
                                  {"word_length", b.word_length[hs.element]},
                                  {"normal", io::to_json(hs.normal)}});
            }
            emit.add({{"x0", io::to_json(d.x0)},
                      {"radius", b.radius},
                      {"ball_size", b.elements.size()},
                      {"active", active},
                      {"reduced", d.reduced},
                      {"stabilized", d.stabilized}});
        } else if (r2_cmd->parsed()) {
            auto rays = domains::rank2_boundary_rays(L);
            json j{{"rational", rays.rational}, {"discriminant", io::to_json(rays.discriminant)}};
            json rj = json::array();
            if (rays.rational) {
                for (const auto& r : rays.rays)
                    rj.push_back(io::to_json(r));
            } else {
                for (const auto& r : rays.surd_rays) {
                    json coords = json::array();
                    for (const auto& s : r)
                        coords.push_back({{"a", io::to_json(s.a)}, {"b", io::to_json(s.b)}, {"d", io::to_json(s.d)}});
                    rj.push_back(coords);
                }
                try {
                    auto g = domains::rank2_isometry_generator(L, o.bound);
                    j["generator"] = io::to_json(g.matrix());
                } catch (const Error& e) {
                    j["generator"] = nullptr;
                    j["generator_error"] = e.what();
                }
            }
            j["rays"] = rj;
            emit.add(j);
        }
        emit.flush();
        return kExitOk;
    } catch (const Error& e) {
        err << json{{"error", e.what()}}.dump() << "\n";
        return kExitDomainError;
    } catch (const json::exception& e) {
        err << json{{"error", e.what()}}.dump() << "\n";
        return kExitDomainError;
    }
}

} // namespace conelat::cli
