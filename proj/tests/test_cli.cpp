// End-to-end tests for the graphprod command-line tool.
//
// The binary under test is named by the GRAPHPROD_BIN environment variable
// (wired up by the build). Each case writes a job document to a scratch
// directory, invokes the tool as a subprocess, and checks the exact bytes on
// stdout together with the exit code. Reports must be byte-for-byte
// deterministic, so goldens are compared with plain string equality.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string scratch_dir() {
    static const std::string dir = [] {
        std::string d = "/tmp/graphprod_cli_test_" + std::to_string(getpid());
        if (std::system(("mkdir -p " + d).c_str()) != 0)
            d = "/tmp";
        return d;
    }();
    return dir;
}

std::string binary_path() {
    const char* bin = std::getenv("GRAPHPROD_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "GRAPHPROD_BIN must point at the graphprod binary");
    return bin;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string write_doc(const std::string& name, const std::string& body) {
    const std::string path = scratch_dir() + "/" + name;
    std::ofstream out(path);
    out << body;
    return path;
}

CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string out_path = scratch_dir() + "/stdout.txt";
    const std::string err_path = scratch_dir() + "/stderr.txt";
    const std::string cmd = env_prefix + binary_path() + " " + args + " > " + out_path +
                            " 2> " + err_path;
    const int status = std::system(cmd.c_str());
    CliResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    return r;
}

// Square (4-cycle) with Z/2 at every vertex.
const char* kSquareGroups = R"({
  "complex": {"m": 4, "edges": [[1,2],[2,3],[3,4],[1,4]]},
  "groups": [{"kind":"cyclic","order":2},{"kind":"cyclic","order":2},
             {"kind":"cyclic","order":2},{"kind":"cyclic","order":2}],
  "words": [[[1,1],[3,1],[1,1],[2,1]], [[2,1],[2,1]]]
})";

// Square with rank-one exterior algebras.
const char* kSquareExterior = R"({
  "complex": {"m": 4, "edges": [[1,2],[2,3],[3,4],[1,4]]},
  "algebras": [{"builtin":"exterior","degree":1},{"builtin":"exterior","degree":1},
               {"builtin":"exterior","degree":1},{"builtin":"exterior","degree":1}],
  "n_max": 6
})";

} // namespace

TEST_CASE("reports are deterministic and match expected bytes") {
    const std::string doc = write_doc("square_groups.json", kSquareGroups);

    const CliResult first = run_cli("normalize --spec " + doc);
    CHECK(first.code == 0);
    CHECK(first.out == "command: normalize\n"
                       "word 1: (1:1)(2:1)(3:1)(1:1)\n"
                       "word 2: e\n");
    // Timing is stderr-only so stdout stays deterministic.
    CHECK(first.err.find("timing:") != std::string::npos);

    const CliResult second = run_cli("normalize --spec " + doc);
    CHECK(second.out == first.out);

    const CliResult machine = run_cli("normalize --spec " + doc + " --machine");
    CHECK(machine.code == 0);
    const CliResult machine2 = run_cli("normalize --spec " + doc + " --machine");
    CHECK(machine.out == machine2.out);

    const std::string chordal_doc = write_doc("chordal.json", kSquareExterior);
    const CliResult chordal = run_cli("chordal --spec " + chordal_doc + " --machine");
    CHECK(chordal.code == 0);
    CHECK(chordal.out == "{\n  \"chordal\": false,\n  \"command\": \"chordal\"\n}\n");
}

TEST_CASE("machine reports round-trip words through the document format") {
    const std::string doc = write_doc("square_groups.json", kSquareGroups);
    const CliResult first = run_cli("normalize --spec " + doc + " --machine");
    REQUIRE(first.code == 0);

    // Feed the normalized words back in as the new input; normal forms are
    // fixed points, so the report must reproduce itself.
    nlohmann::json rep = nlohmann::json::parse(first.out);
    nlohmann::json redoc = nlohmann::json::parse(kSquareGroups);
    redoc["words"] = rep["words"];
    const std::string doc2 = write_doc("square_groups_rt.json", redoc.dump());
    const CliResult second = run_cli("normalize --spec " + doc2 + " --machine");
    CHECK(second.code == 0);
    CHECK(second.out == first.out);
}

TEST_CASE("machine reports round-trip monomials through the document format") {
    nlohmann::json doc = nlohmann::json::parse(kSquareExterior);
    doc["monomials"] = {{{2, "x"}, {1, "x"}}};
    const std::string path = write_doc("lex.json", doc.dump());
    const CliResult first = run_cli("lex-order --spec " + path + " --machine");
    REQUIRE(first.code == 0);

    nlohmann::json rep = nlohmann::json::parse(first.out);
    REQUIRE(rep["results"].size() == 1);
    REQUIRE(rep["results"][0]["terms"].size() == 1);
    // (2:x)(1:x) swaps with a Koszul sign to -(1:x)(2:x).
    CHECK(rep["results"][0]["terms"][0][0] == "-1");

    doc["monomials"] = {rep["results"][0]["terms"][0][1]};
    const std::string path2 = write_doc("lex_rt.json", doc.dump());
    const CliResult second = run_cli("lex-order --spec " + path2 + " --machine");
    CHECK(second.code == 0);
    nlohmann::json rep2 = nlohmann::json::parse(second.out);
    // The canonical monomial is a fixed point with a positive sign.
    CHECK(rep2["results"][0]["terms"][0][0] == "1");
    CHECK(rep2["results"][0]["terms"][0][1] == rep["results"][0]["terms"][0][1]);
}

TEST_CASE("dual series routes agree through the command surface") {
    const std::string doc = write_doc("square_ext.json", kSquareExterior);

    const CliResult ep = run_cli("ep-series --spec " + doc + " --machine");
    REQUIRE(ep.code == 0);
    const CliResult hb = run_cli("hilbert --spec " + doc + " --machine");
    REQUIRE(hb.code == 0);
    const CliResult gp = run_cli("gp-basis --spec " + doc + " --machine");
    REQUIRE(gp.code == 0);

    const nlohmann::json ep_j = nlohmann::json::parse(ep.out);
    const nlohmann::json hb_j = nlohmann::json::parse(hb.out);
    const nlohmann::json gp_j = nlohmann::json::parse(gp.out);
    // Three independent routes to the product's dimension series.
    CHECK(ep_j["ak"] == hb_j["coefficients"]);
    for (size_t n = 0; n < gp_j["counts"].size(); ++n)
        CHECK(std::to_string(gp_j["counts"][n].get<long long>()) ==
              ep_j["ak"][n].get<std::string>());
    CHECK(ep_j["inverse_aprime"] ==
          nlohmann::json({"1", "0", "-2", "0", "1", "0", "0"}));
}

TEST_CASE("closed-form and oracle tor tables agree through the command surface") {
    nlohmann::json doc = nlohmann::json::parse(kSquareExterior);
    doc["variant"] = "ak";
    doc["n_max"] = 4;
    const std::string path = write_doc("tor.json", doc.dump());

    const CliResult closed = run_cli("tor-closed --spec " + path + " --machine");
    const CliResult oracle = run_cli("tor-oracle --spec " + path + " --machine");
    REQUIRE(closed.code == 0);
    REQUIRE(oracle.code == 0);
    const nlohmann::json c = nlohmann::json::parse(closed.out);
    const nlohmann::json o = nlohmann::json::parse(oracle.out);
    CHECK(c["table"]["entries"] == o["table"]["entries"]);
    CHECK(c["table"]["provenance"] == "closed-form");
    CHECK(o["table"]["provenance"] == "bar-oracle");
}

TEST_CASE("field and truncation flags override the document") {
    const std::string doc = write_doc("square_ext.json", kSquareExterior);

    const CliResult q = run_cli("homology --spec " + doc);
    REQUIRE(q.code == 0);
    CHECK(q.out == "command: homology\nfield: q\nH~_1 = 1\n");

    const CliResult gf2 = run_cli("homology --spec " + doc + " --field gf2");
    REQUIRE(gf2.code == 0);
    CHECK(gf2.out == "command: homology\nfield: gf2\nH~_1 = 1\n");

    const CliResult short_series = run_cli("hilbert --spec " + doc + " --nmax 2");
    REQUIRE(short_series.code == 0);
    CHECK(short_series.out == "command: hilbert\ncoefficients: 1 4 8\n");

    nlohmann::json with_variant = nlohmann::json::parse(kSquareExterior);
    with_variant["variant"] = "aprime";
    const std::string tor_doc = write_doc("tor_clip.json", with_variant.dump());
    const CliResult clipped = run_cli("tor-closed --spec " + tor_doc +
                                      " --smax 1 --machine",
                                      "GRAPHPROD_THREADS=2 ");
    REQUIRE(clipped.code == 0);
    const nlohmann::json c = nlohmann::json::parse(clipped.out);
    CHECK(c["table"]["s_max"] == 1);
}

TEST_CASE("invalid input is rejected with the validation exit code") {
    const std::string doc = write_doc("square_groups.json", kSquareGroups);

    CHECK(run_cli("chordal --spec /does/not/exist.json").code == 2);
    CHECK(run_cli("bogus-command --spec " + doc).code == 2);
    CHECK(run_cli("normalize --spec " + doc + " --field gf6").code == 2);
    CHECK(run_cli("normalize --spec " + doc + " --nmax -3").code == 2);
    CHECK(run_cli("normalize --spec " + doc, "GRAPHPROD_THREADS=zero ").code == 2);
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("normalize").code == 2); // --spec is required

    const std::string bad_key = write_doc("bad_key.json",
                                          R"({"complex": {"m": 1, "edges": []},
                                              "groups": [{"kind":"cyclic","order":2}],
                                              "bogus": 1})");
    const CliResult r = run_cli("chordal --spec " + bad_key);
    CHECK(r.code == 2);
    CHECK(r.err.find("unknown key 'bogus'") != std::string::npos);

    const std::string not_json = write_doc("not_json.json", "]]]");
    CHECK(run_cli("chordal --spec " + not_json).code == 2);

    // Group commands refuse algebra payloads and vice versa.
    const std::string alg = write_doc("square_ext.json", kSquareExterior);
    CHECK(run_cli("normalize --spec " + alg).code == 2);
    CHECK(run_cli("hilbert --spec " + doc).code == 2);

    // The document's own command record must match the request...
    const std::string named = write_doc("named.json", kSquareGroups);
    CHECK(run_cli("multiply --spec " + named).code == 0); // no command recorded
    nlohmann::json with_cmd = nlohmann::json::parse(kSquareGroups);
    with_cmd["command"] = "normalize";
    const std::string named2 = write_doc("named2.json", with_cmd.dump());
    CHECK(run_cli("multiply --spec " + named2).code == 2);
    // ...except verify-all, which re-validates any document.
    CHECK(run_cli("verify-all --spec " + named2).code == 0);
}

TEST_CASE("unsettled truncation windows are refused with their own exit code") {
    const std::string doc = write_doc("free_pair.json", R"({
      "complex": {"m": 2, "edges": []},
      "algebras": [{"builtin":"free","degree":1},{"builtin":"free","degree":1}],
      "n_max": 3, "variant": "ak"
    })");
    // The builtin tables are sized for the document's window; asking for more
    // must refuse rather than underreport.
    const CliResult r = run_cli("tor-closed --spec " + doc + " --nmax 7");
    CHECK(r.code == 3);
    CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("verify-all passes across the job corpus") {
    const std::vector<std::pair<std::string, std::string>> corpus = {
        {"va_square_groups.json", kSquareGroups},
        {"va_square_ext.json", kSquareExterior},
        {"va_path3_mixed_groups.json", R"({
          "complex": {"m": 3, "edges": [[1,2],[2,3]]},
          "groups": [{"kind":"cyclic","order":2},{"kind":"cyclic","order":3},
                     {"kind":"table","names":["e","a"],"identity":0,
                      "table":[[0,1],[1,0]]}]
        })"},
        {"va_free_product.json", R"({
          "complex": {"m": 2, "edges": []},
          "groups": [{"kind":"cyclic","order":3},{"kind":"cyclic","order":2}]
        })"},
        {"va_path3_mixed_algebras.json", R"({
          "complex": {"m": 3, "edges": [[1,2],[2,3]]},
          "algebras": [{"builtin":"exterior","degree":1},
                       {"builtin":"trunc_poly","degree":1,"order":3},
                       {"builtin":"free","degree":2}],
          "n_max": 5
        })"},
        {"va_triangle_explicit.json", R"({
          "complex": {"m": 3, "edges": [[1,2],[2,3],[1,3]]},
          "algebras": [{"name":"ext","limit":4,"complete":true,
                        "basis":[["1"],["x"],[],[],[]],
                        "hilbert":{"num":[1,1],"den":[1]}},
                       {"builtin":"exterior","degree":1},
                       {"builtin":"exterior","degree":1}],
          "n_max": 4
        })"},
        {"va_two_points.json", R"({
          "complex": {"m": 2, "edges": []},
          "algebras": [{"builtin":"exterior","degree":1},
                       {"builtin":"exterior","degree":1}],
          "n_max": 6
        })"},
        {"va_integers_with_gens.json", R"({
          "complex": {"m": 2, "edges": [[1,2]]},
          "groups": [{"kind":"integers"},{"kind":"cyclic","order":2}],
          "gens": [[1,-1],[1]]
        })"}};
    for (const auto& [name, body] : corpus) {
        CAPTURE(name);
        const CliResult r = run_cli("verify-all --spec " + write_doc(name, body));
        CHECK(r.code == 0);
        CHECK(r.out.find("all checks passed") != std::string::npos);
    }

    // Infinite vertex groups skip the enumeration-based checks with a reason.
    const CliResult inf = run_cli(
        "verify-all --spec " + write_doc("va_int.json", R"({
          "complex": {"m": 2, "edges": [[1,2]]},
          "groups": [{"kind":"integers"},{"kind":"cyclic","order":2}],
          "gens": [[1,-1],[1]]
        })"));
    CHECK(inf.code == 0);
    CHECK(inf.out.find("census-enumerated-vs-predicted: skipped") != std::string::npos);
    CHECK(inf.out.find("kernel-gens-in-kernel: ok") != std::string::npos);
}
