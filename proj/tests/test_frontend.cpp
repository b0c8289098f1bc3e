#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hopfgk/builtins.hpp"
#include "hopfgk/cli.hpp"
#include "hopfgk/report.hpp"

using namespace hopfgk;

namespace {

const std::string kData = HOPFGK_DATA_DIR;

const char* kExample = R"(hopf "ex"
gen x1 deg 1
gen x2 deg 1
gen x3 deg 1
gen z deg 2
rel [x1,x2] = x2
rel [x1,x3] = 0
rel [x2,x3] = 0
rel [x1,z] = z
rel [z,x2] = 0
rel [z,x3] = x2
delta z = x1 ox x2 - x2 ox x1
)";

std::string replaceLine(std::string text, const std::string& from, const std::string& to) {
    const auto at = text.find(from);
    REQUIRE(at != std::string::npos);
    return text.replace(at, from.size(), to);
}

std::vector<Diagnostic> diagnostics(const std::string& text) { return parse({text, "t"}).diagnostics; }

bool hasError(const std::string& text, const std::string& message) {
    for (const auto& d : diagnostics(text))
        if (d.severity == Diagnostic::Severity::Error && d.message.find(message) != std::string::npos) return true;
    return false;
}

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = runCLI(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("the example document parses") {
    const ParseResult r = parse({kExample, "ex"});
    REQUIRE(r.ok());
    CHECK(r.diagnostics.empty());
    const Presentation& p = *r.presentation;
    CHECK(p.name() == "ex");
    CHECK(p.generatorCount() == 4);
    CHECK(p.relations().size() == 6);
    CHECK(p.generatorsOfDegree(2).size() == 1);
    CHECK(p.deltaTail(3).size() == 2);
    CHECK(structurallyEqual(p, parseOrThrow(*findBuiltin("wzz-3-5a"))) == false);  // names differ
}

TEST_CASE("layout, comments and coefficients") {
    const char* text = R"(# leading comment
  hopf   "spaced"   # trailing comment
gen a deg 1
gen   b   deg 1

gen c deg 2
rel [ a , b ] = 0
rel [b,c] = 3/6*a*b - 2 * a
rel [a,c] = -1/2*(a - b)
delta c = 1/2 a ox b - 1/2*b ox a
)";
    const Presentation p = parseOrThrow({text, "spaced"});
    const auto a = p.element("a"), b = p.element("b");
    CHECK(p.bracket(1, 2) == Scalar(1, 2) * a * b - 2 * a);
    CHECK(p.bracket(0, 2) == Scalar(-1, 2) * a + Scalar(1, 2) * b);
    CHECK(p.bracket(2, 1) == -p.bracket(1, 2));
    CHECK(p.deltaTail(2) == Scalar(1, 2) * (TensorElement::pure(a, b) - TensorElement::pure(b, a)));
}

TEST_CASE("diagnostics") {
    CHECK(hasError(replaceLine(kExample, "rel [x1,x3] = 0\n", ""), "missing relation for pair (x1,x3)"));
    CHECK(hasError(replaceLine(kExample, "delta z = x1 ox x2 - x2 ox x1", "delta z = x1 ox x2"),
                   "tail not antisymmetric"));
    CHECK(hasError(replaceLine(kExample, "rel [x1,x3] = 0", "rel [x1,x4] = 0"), "unknown identifier 'x4'"));
    CHECK(hasError(replaceLine(kExample, "rel [x1,x3] = 0", "rel [x3,x1] = 0\nrel [x1,x3] = 0"),
                   "duplicate relation for pair (x1,x3)"));
    CHECK(hasError(std::string(kExample) + "delta x1 = x2 ox x3 - x3 ox x2\n", "delta on degree-1 generator"));
    CHECK(hasError(replaceLine(kExample, "rel [x1,x2] = x2", "rel [x1,x2] = 1/0*x2"), "malformed rational"));
    CHECK(hasError(replaceLine(kExample, "rel [x1,x2] = x2", "rel [x1,x2] = 1/*x2"), "malformed rational"));
    CHECK(hasError(replaceLine(kExample, "rel [x1,x2] = x2", "rel [x1,x2] = 1"), "constant term"));
    CHECK(hasError(replaceLine(kExample, "rel [x1,x2] = x2", "rel [x1,x2] = x1*x1*x1"), "longer than 2"));
    CHECK(hasError(replaceLine(kExample, "rel [x1,x2] = x2", "rel [x1,x2] = x2*x1"), "not in normal form"));
    CHECK(hasError(replaceLine(kExample, "rel [x1,x2] = x2", "rel [x1,x2] = z"), "not degree-dropping"));
    CHECK(hasError(replaceLine(kExample, "ox x2 - x2 ox x1", "ox z - z ox x1"), "not a degree-1 generator"));
    CHECK(hasError(replaceLine(kExample, "hopf \"ex\"\n", ""), "missing 'hopf"));
    CHECK(hasError(replaceLine(kExample, "delta z = x1 ox x2 - x2 ox x1\n", ""), "missing delta"));
    CHECK(hasError(replaceLine(kExample, "gen x1 deg 1", "gen x1 deg 3"), "degree must be 1 or 2"));
    CHECK(hasError(replaceLine(kExample, "gen x2 deg 1", "gen x1 deg 1"), "duplicate generator"));
    CHECK(hasError(replaceLine(kExample, "rel [x1,x2] = x2", "rel [x1,x2] = x2 ox x1"), "unexpected 'ox'"));
    CHECK(hasError(replaceLine(kExample, "rel [x1,x2] = x2", "rel [x1,x2] = 2*ox"), "only allowed in delta"));
    CHECK(hasError(replaceLine(kExample, "rel [x1,x3] = 0", "rel [x1,x1] = 0\nrel [x1,x3] = 0"), "itself"));
}

TEST_CASE("diagnostics are positioned") {
    const auto ds = diagnostics(replaceLine(kExample, "rel [x1,x3] = 0", "rel [x1,x3] = 2*q"));
    REQUIRE(ds.size() >= 1);
    CHECK(ds.front().line == 7);
    CHECK(ds.front().column == 17);
    CHECK(ds.front().str("f.hopf") == "f.hopf:7:17: error: unknown identifier 'q'");
    CHECK_THROWS_AS(parseOrThrow({replaceLine(kExample, "rel [x1,x3] = 0", "rel [x1,x3] = 2*q"), "f"}), ParseError);
}

TEST_CASE("a zero tail is a warning") {
    const auto r = parse({replaceLine(kExample, "delta z = x1 ox x2 - x2 ox x1", "delta z = 0"), "w"});
    CHECK(r.ok());
    REQUIRE(r.diagnostics.size() == 1);
    CHECK(r.diagnostics.front().severity == Diagnostic::Severity::Warning);
}

TEST_CASE("print and parse round-trip") {
    for (const auto& src : builtins()) {
        CAPTURE(src.origin);
        const Presentation p = parseOrThrow(src);
        const std::string text = print(p);
        const Presentation q = parseOrThrow({text, "printed"});
        CHECK(structurallyEqual(p, q));
        CHECK(print(q) == text);
    }
    const char* fractions = R"(hopf "fr"
gen a deg 1
gen b deg 1
gen c deg 2
rel [a,b] = -2/3*b
rel [a,c] = 5/7*c + 1/2*a*b - b
rel [b,c] = 0
delta c = -3/4*a ox b + 3/4*b ox a
)";
    const Presentation p = parseOrThrow({fractions, "fr"});
    CHECK(structurallyEqual(p, parseOrThrow({print(p), "fr2"})));
}

TEST_CASE("built-in corpus") {
    std::vector<std::string> names;
    for (const auto& b : builtins()) names.push_back(b.origin);
    CHECK(names == std::vector<std::string>{"wzz-3-5a", "env-abelian-3", "env-nonabelian-2", "env-heisenberg",
                                            "central-acc", "double-acc", "heisenberg-acc"});
    CHECK_FALSE(findBuiltin("nope").has_value());
    for (const auto& b : builtins()) {
        CAPTURE(b.origin);
        const Presentation p = parseOrThrow(b);
        CHECK(p.name() == b.origin);
        CHECK(p.isConfluent());
        CHECK(verifyHopfAxioms(p).passed());
        // The shipped data files hold the same presentations.
        std::ifstream f(kData + "/" + b.origin + ".hopf");
        std::stringstream text;
        text << f.rdbuf();
        CHECK(structurallyEqual(p, parseOrThrow({text.str(), b.origin})));
    }
}

TEST_CASE("cli: check") {
    for (const auto& b : builtins()) {
        const Run r = cli({"check", b.origin});
        CAPTURE(b.origin);
        CHECK(r.code == 0);
        CHECK(r.out.find("hopf axioms: ok") != std::string::npos);
    }
    const Run bad = cli({"check", kData + "/jacobi-violation.hopf"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("FAILED at overlap z*y*x") != std::string::npos);

    const Run missing = cli({"check", "no-such-thing"});
    CHECK(missing.code == 1);
    CHECK(missing.err.find("no such file") != std::string::npos);

    const auto tmp = std::filesystem::temp_directory_path() / "hopfgk-broken.hopf";
    std::ofstream(tmp) << replaceLine(kExample, "rel [x1,x3] = 0\n", "");
    const Run broken = cli({"check", tmp.string()});
    CHECK(broken.code == 1);
    CHECK(broken.err.find("missing relation for pair (x1,x3)") != std::string::npos);
    std::filesystem::remove(tmp);
}

TEST_CASE("cli: gk, primitives, normal, ace, lemmas") {
    const Run gk = cli({"gk", "wzz-3-5a"});
    CHECK(gk.code == 0);
    CHECK(gk.out.find("exactGK = 4") != std::string::npos);
    CHECK(gk.out.find("dims: 1 5 15 35 70 126 210 330 495") != std::string::npos);

    const Run est = cli({"gk", kData + "/jacobi-violation.hopf", "--max-degree", "6"});
    CHECK(est.code == 0);
    CHECK(est.out.find("estimate only") != std::string::npos);

    const Run prim = cli({"primitives", "wzz-3-5a", "--bound", "4"});
    CHECK(prim.out.find("dim P = 3") != std::string::npos);
    CHECK(prim.out.find("dim P2 = 4") != std::string::npos);

    const Run normal = cli({"normal", "wzz-3-5a", "--sub", "x1,x2,x3"});
    CHECK(normal.code == 0);
    CHECK(normal.out.find("not normal") != std::string::npos);
    CHECK(normal.out.find("ad_l[z](x1)") != std::string::npos);
    CHECK(cli({"normal", "wzz-3-5a", "--sub", "x1, x2, z"}).out.find("is normal") != std::string::npos);

    const Run ace = cli({"ace", "wzz-3-5a", "--sub", "x1,x2,z"});
    CHECK(ace.code == 0);
    CHECK(ace.out.find("agree = yes") != std::string::npos);
    CHECK(cli({"ace", "wzz-3-5a", "--sub", "x1,x3"}).code == 1);

    const Run lemmas = cli({"lemmas", "central-acc", "--pairs", "10"});
    CHECK(lemmas.code == 0);
    CHECK(lemmas.out.find("10 random pairs") != std::string::npos);
}

TEST_CASE("cli: usage errors and resource caps") {
    CHECK(cli({}).code == 1);
    CHECK(cli({"frobnicate"}).code == 1);
    CHECK(cli({"normal", "wzz-3-5a"}).code == 1);  // --sub is required
    CHECK(cli({"normal", "wzz-3-5a", "--sub", "x9"}).code == 1);
    CHECK(cli({"--help"}).code == 0);
    CHECK(cli({"builtins"}).out.find("central-acc") != std::string::npos);

    ::setenv("HOPFGK_MAX_BASIS", "100", 1);
    const Run capped = cli({"gk", "wzz-3-5a"});
    ::unsetenv("HOPFGK_MAX_BASIS");
    CHECK(capped.code == 2);
    CHECK(capped.err.find("resource limit") != std::string::npos);
}

TEST_CASE("cli: report is structured and byte-stable") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto a = (dir / "hopfgk-report-a.json").string();
    const auto b = (dir / "hopfgk-report-b.json").string();
    REQUIRE(cli({"report", "wzz-3-5a", "-o", a}).code == 0);
    REQUIRE(cli({"report", "wzz-3-5a", "-o", b}).code == 0);
    auto slurp = [](const std::string& path) {
        std::ifstream f(path, std::ios::binary);
        std::stringstream s;
        s << f.rdbuf();
        return s.str();
    };
    const std::string text = slurp(a);
    CHECK(text == slurp(b));
    std::filesystem::remove(a);
    std::filesystem::remove(b);

    const Json doc = Json::parse(text);
    CHECK(doc["schemaVersion"] == 1);
    std::vector<std::string> keys;
    for (const auto& [k, v] : doc.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"schemaVersion", "origin", "parse", "checkConfluence", "verifyHopfAxioms",
                                           "primitiveSpace", "antiCocommutativeSpace", "checkNormal",
                                           "bracketCriterion", "checkAlmostCentralizing", "almostCentralizingEquivalence",
                                           "bracketProperties", "growthFunction", "gkVersusP2"});
    CHECK(doc["growthFunction"]["exactGK"] == 4);
    CHECK(doc["checkNormal"]["U_H"]["isNormal"] == false);
    CHECK(doc["checkNormal"]["A"]["isNormal"] == true);
    const Json& w = doc["checkNormal"]["U_H"]["witnesses"][0];
    CHECK(w["actor"][0]["word"] == Json::array({"z"}));
    CHECK(w["target"][0]["word"] == Json::array({"x1"}));
    CHECK(w["side"] == "left");
    CHECK(doc["parse"]["deltaTails"]["z"][0]["coefficient"] == "1/1");
    CHECK(doc["gkVersusP2"]["agreement"] == true);

    const Run jac = cli({"report", kData + "/jacobi-violation.hopf"});
    CHECK(jac.code == 0);
    const Json j = Json::parse(jac.out);
    CHECK(j["checkConfluence"]["confluent"] == false);
    CHECK(j["checkConfluence"]["failures"][0]["triple"] == Json::array({"z", "y", "x"}));
    CHECK_FALSE(j.contains("verifyHopfAxioms"));
}

TEST_CASE("json encoders") {
    const Presentation p = parseOrThrow({kExample, "ex"});
    CHECK(toJson(Scalar(-3, 6)) == "-1/2");
    CHECK(toJson(*p.table(), Word{0, 3}) == Json::array({"x1", "z"}));
    CHECK(toJson(p.one()) == Json::parse(R"([{"word":[],"coefficient":"1/1"}])"));
    CHECK(toJson(p.zero()) == Json::array());
}
