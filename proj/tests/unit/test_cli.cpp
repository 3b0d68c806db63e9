#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "conelat/cli.hpp"
#include "conelat/corpus.hpp"
#include "conelat/io.hpp"

#include <fstream>
#include <sstream>

using conelat::io::json;

namespace {

const std::string kSource = CONELAT_SOURCE_DIR;
const std::string kLattices = kSource + "/corpus/lattices/";

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = conelat::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json line(const Result& r) { return json::parse(r.out); }

} // namespace

TEST_CASE("spec examples")
{
    auto sig = run({"signature", "--lattice", kLattices + "u.json"});
    CHECK(sig.code == 0);
    CHECK(sig.out == "{\"plus\":1,\"minus\":1}\n");

    auto fold = run({"fold", "--type", "A2", "--tau", "flip"});
    CHECK(fold.code == 0);
    CHECK(line(fold)["order"] == 2);

    auto ell = run({"corpus", "run", "elliptic-k3-i2", "--dir", kSource + "/corpus"});
    REQUIRE(ell.code == 0);
    bool found = false;
    const json report = line(ell);
    for (const auto& c : report["checks"])
        if (c["kind"] == "square" && c["vector"] == "s+2*e+2*f") {
            found = true;
            CHECK(c["actual"] == "-2");
            CHECK(c["ok"] == true);
        }
    CHECK(found);
}

TEST_CASE("corpus cases reproduce their golden output byte for byte")
{
    const std::string dir = kSource + "/corpus";
    auto names = conelat::corpus::list_cases(dir);
    CHECK(names.size() == 5);
    for (const auto& name : names) {
        CAPTURE(name);
        auto r = run({"corpus", "run", name, "--dir", dir});
        CHECK(r.code == 0);
        CHECK(r.out == slurp(dir + "/golden/" + name + ".json"));
        // two runs agree
        CHECK(run({"corpus", "run", name, "--dir", dir}).out == r.out);
        // every case carries provenance and its checks all hold
        json j = json::parse(r.out);
        CHECK(!j["provenance"].get<std::string>().empty());
        CHECK(j["ok"] == true);
    }
    auto list = run({"corpus", "list", "--dir", dir});
    CHECK(line(list)["cases"].size() == 5);
}

TEST_CASE("commands")
{
    const std::string ell = kLattices + "elliptic-k3.json";
    CHECK(line(run({"pair", "--lattice", ell, "--u", "f", "--v", "s"}))["pair"] == "1");
    CHECK(line(run({"dual", "--lattice", kLattices + "u.json", "--c", "1,0", "--inverse"}))["dual"] ==
          json::array({"0", "1"}));
    CHECK(line(run({"divisibility", "--lattice", ell, "--v", "2*f"}))["divisibility"] == "2");
    CHECK(line(run({"complement", "--lattice", kLattices + "quartic.json", "--of", "C1"}))["rank"] == 2);
    CHECK(line(run({"reflect", "--lattice", ell, "--root", "s", "--v", "f"}))["image"] == json::array({"1", "1", "0"}));
    auto integral = line(run({"integral", "--lattice", kLattices + "neg6.json", "--root", "e1"}));
    CHECK(integral["integral"] == false);
    CHECK(integral["denominator"] == "3");

    auto walk = line(run({"walk", "--lattice", ell, "--roots", "s,e", "--alpha", "s+4*f+e"}));
    CHECK(walk["word"] == json::array({"e"}));

    auto z = line(run({"zariski", "--lattice", ell, "--D", "s", "--roots", "s,e"}));
    CHECK(z["support"] == json::array({"s"}));
    CHECK(z["qP"] == "0");
    CHECK(z["qD"] == "-2");

    auto fe = line(run({"fe", "--lattice", ell, "--roots", "s,e", "--x", "3*f+s"}));
    CHECK(fe["position"] == "interior");

    auto hunt = run({"hunt", "--lattice", ell, "--B", "2", "--M", "5"});
    CHECK(hunt.code == 0);
    bool alpha = false;
    std::istringstream lines(hunt.out);
    for (std::string l; std::getline(lines, l);)
        alpha = alpha || json::parse(l)["coords"] == json::array({"1", "2", "2"});
    CHECK(alpha);

    auto dom = line(run({"domain", "--lattice", kLattices + "pell.json", "--x0", "x0", "--gens", "g", "--radius", "3"}));
    CHECK(dom["active"].size() == 2);
    CHECK(dom["stabilized"] == true);

    auto r2 = line(run({"rank2", "--lattice", kLattices + "pell.json", "--bound", "10"}));
    CHECK(r2["rational"] == false);
    CHECK(r2["generator"].is_array());

    auto fact = line(run({"factorize", "--lattice", kLattices + "pell.json", "--roots", "", "--g", "g"}));
    CHECK(fact["w"].empty());

    auto pretty = run({"--pretty", "signature", "--lattice", kLattices + "u.json"});
    CHECK(pretty.out.find("plus") != std::string::npos);
    CHECK(pretty.out.find('{') == std::string::npos);
}

TEST_CASE("cones from files")
{
    const std::string path = std::string(CONELAT_BINARY_DIR) + "/wedge.json";
    {
        std::ofstream out(path);
        out << R"({"generators": [[2, 1], [2, -1]], "reference": [1, 0]})";
    }
    const std::string d2 = std::string(CONELAT_BINARY_DIR) + "/diag2.json";
    {
        std::ofstream out(d2);
        out << R"({"gram": [[2, 0], [0, -2]], "named_vectors": {"h": [1, 0], "w": [0, 1], "u": [1, 4]},
                   "reference": "h"})";
    }
    auto sub = run({"subdivide", "--lattice", d2, "--cone", path, "--walls", "w,u"});
    CHECK(sub.code == 0);
    CHECK(std::count(sub.out.begin(), sub.out.end(), '\n') == 3);

    auto hunt = run({"hunt", "--lattice", d2, "--B", "2", "--M", "auto", "--cone", path});
    CHECK(hunt.code == 0);
    CHECK(line(hunt)["coords"] == json::array({"0", "1"}));
    CHECK(run({"hunt", "--lattice", d2, "--B", "2", "--M", "auto"}).code == 1);
}

TEST_CASE("exit codes")
{
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"pair", "--lattice", kLattices + "u.json"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    auto missing = run({"signature", "--lattice", "/nonexistent.json"});
    CHECK(missing.code == 1);
    CHECK(!missing.err.empty());
    CHECK(run({"divisibility", "--lattice", kLattices + "u.json", "--v", "0,0"}).code == 1);
    CHECK(run({"fold", "--type", "A3", "--tau", "2,1,3"}).code == 1);
    CHECK(run({"corpus", "run", "no-such-case", "--dir", kSource + "/corpus"}).code == 1);
}
