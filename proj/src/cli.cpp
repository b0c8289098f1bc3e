#include "hopfgk/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hopfgk/builtins.hpp"
#include "hopfgk/error.hpp"
#include "hopfgk/report.hpp"
#include "hopfgk/rewrite.hpp"

namespace hopfgk {

namespace {

struct Failure {
    int code;
};

PresentationSource loadSource(const std::string& arg) {
    if (std::filesystem::is_regular_file(arg)) {
        std::ifstream in(arg);
        std::stringstream buf;
        buf << in.rdbuf();
        return {buf.str(), arg};
    }
    if (auto b = findBuiltin(arg)) return *b;
    throw DomainError("no such file or built-in presentation: " + arg);
}

Presentation load(const std::string& arg, std::ostream& err) {
    const PresentationSource src = loadSource(arg);
    ParseResult r = parse(src);
    for (const auto& d : r.diagnostics) err << d.str(src.origin) << "\n";
    if (!r.ok()) throw Failure{1};
    return std::move(*r.presentation);
}

std::vector<std::string> splitNames(const std::string& list) {
    std::vector<std::string> out;
    std::stringstream ss(list);
    for (std::string item; std::getline(ss, item, ',');) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

void printSequence(std::ostream& out, const std::string& label, const std::vector<std::size_t>& v) {
    out << label << ":";
    for (std::size_t x : v) out << " " << x;
    out << "\n";
}

void printBasis(std::ostream& out, const SubspaceBasis& b) {
    for (const auto& v : b.vectors) out << "  " << v.str() << "\n";
}

std::string yesNo(bool b) { return b ? "yes" : "no"; }

void printConfluenceFailure(std::ostream& out, const Presentation& p, const ConfluenceReport& r) {
    const auto& f = r.failures.front();
    out << "confluence: FAILED at overlap " << p.table()->spell(f.triple) << "\n";
    out << "  left reduct:  " << f.leftReduct.str() << "\n";
    out << "  right reduct: " << f.rightReduct.str() << "\n";
}

int cmdCheck(const std::string& file, std::ostream& out, std::ostream& err) {
    const Presentation p = load(file, err);
    out << p.name() << ": " << p.generatorCount() << " generators, " << p.relations().size() << " relations\n";
    const ConfluenceReport& c = p.confluence();
    if (!c.confluent) {
        printConfluenceFailure(out, p, c);
        return 1;
    }
    out << "confluence: ok (" << c.triplesChecked << " triples)\n";
    const AxiomReport a = verifyHopfAxioms(p);
    if (!a.passed()) {
        out << "hopf axioms: FAILED\n";
        for (const auto& f : a.failures)
            out << "  " << axiomName(f.axiom) << " on " << f.subject << ": " << f.witness << "\n";
        return 1;
    }
    out << "hopf axioms: ok (" << a.checks << " checks)\n";
    return 0;
}

int cmdGrowth(const std::string& file, int maxDegree, const std::string& filtration, std::ostream& out,
              std::ostream& err) {
    const Presentation p = load(file, err);
    const Filtration f = filtration == "weighted" ? Filtration::Weighted : Filtration::Standard;
    const GrowthReport r = growthFunction(p, maxDegree, f);
    out << p.name() << ": growth up to degree " << maxDegree << " (" << filtration << " filtration)\n";
    printSequence(out, "dims", r.dims);
    if (f == Filtration::Standard) printSequence(out, "weighted dims", r.weightedDims);
    if (r.pbwCount) printSequence(out, "pbw count", *r.pbwCount);
    out << "fitted exponent = " << std::fixed << std::setprecision(4) << r.fittedExponent << "\n";
    out.unsetf(std::ios::floatfield);
    if (r.exactGK) {
        out << "exactGK = " << *r.exactGK << "\n";
        out << "certificate: " << certificateName(r.certificate);
        if (r.base)
        {
            out << " over {";
            for (std::size_t i = 0; i < r.base->generators.size(); ++i)
                out << (i ? "," : "") << p.generator(r.base->generators[i]).name;
            out << "}, GK " << r.baseGK << " + " << r.extensionRank;
        }
        out << "\n";
    } else {
        out << "exactGK unavailable: estimate only (presentation is not confluent)\n";
    }
    return 0;
}

int cmdPrimitives(const std::string& file, int bound, std::ostream& out, std::ostream& err) {
    const Presentation p = load(file, err);
    const HopfAlgebra hopf(p);
    if (bound <= 0) bound = defaultDegreeBound(p);
    const SubspaceBasis prim = primitiveSpace(hopf, bound);
    const SubspaceBasis p2 = antiCocommutativeSpace(hopf, bound, prim);
    out << p.name() << ": degree bound " << bound << "\n";
    out << "dim P = " << prim.dim() << "\n";
    printBasis(out, prim);
    out << "dim P2 = " << p2.dim() << "\n";
    printBasis(out, p2);
    return 0;
}

SubalgebraSpec subFrom(const Presentation& p, const std::string& list) {
    const auto names = splitNames(list);
    if (names.empty()) throw DomainError("--sub needs at least one generator");
    return p.subalgebra(names, "A");
}

int cmdNormal(const std::string& file, const std::string& list, bool full, std::ostream& out, std::ostream& err) {
    const Presentation p = load(file, err);
    const SubalgebraSpec sub = subFrom(p, list);
    const NormalityReport r = checkNormal(p, sub, {full, 3});
    out << "{" << list << "} is " << (r.isNormal ? "normal" : "not normal") << " (" << r.checks << " checks)\n";
    for (const auto& w : r.witnesses)
        out << "  ad_" << (w.side == Side::Left ? "l" : "r") << "[" << w.actor.str() << "](" << w.target.str()
            << ") = " << w.value.str() << "\n";
    return 0;
}

int cmdAce(const std::string& file, const std::string& list, int bound, std::ostream& out, std::ostream& err) {
    const Presentation p = load(file, err);
    const SubalgebraSpec sub = subFrom(p, list);
    const ACEReport r = checkAlmostCentralizing(p, sub, bound);
    out << "almost centralizing over {" << list << "}: " << (r.passed() ? "yes" : "no") << "\n";
    for (const auto& f : r.preconditionFailures) out << "  precondition: " << f << "\n";
    if (!r.preconditionsHold()) return 1;
    out << "  [a,h] in A: " << yesNo(r.commutesIntoSub) << "\n";
    out << "  [h_i,h_j] in sum h_m A + A: " << yesNo(r.bracketsInModule) << "\n";
    for (const auto& w : r.witnesses) out << "  " << w << "\n";
    const EquivalenceReport l = almostCentralizingEquivalence(p, sub, bound);
    out << "equivalence: almost centralizing = " << yesNo(l.almostCentralizing) << ", normal = " << yesNo(l.normal)
        << ", delta condition = " << yesNo(l.deltaCondition) << ", agree = " << yesNo(l.agree) << "\n";
    return l.agree ? 0 : 1;
}

int cmdLemmas(const std::string& file, std::size_t pairs, std::uint32_t seed, std::ostream& out, std::ostream& err) {
    const Presentation p = load(file, err);
    const BracketPropertyReport r = bracketProperties(p, pairs, seed);
    if (!r.inClass) {
        out << p.name() << ": no degree-2 generators; property runs skipped\n";
        return 0;
    }
    out << p.name() << ": " << r.pairs << " random pairs from P2\n";
    out << "  delta_cc([s,t]) = [delta s, delta t]: " << r.bracketIdentityFailures << " failures\n";
    out << "  delta_cc in delta(U3) <=> delta_ac in delta(P2): " << r.biconditionalFailures << " failures\n";
    out << "  bracket criterion = "
        << (r.bracketCriterion ? yesNo(*r.bracketCriterion) : std::string("inapplicable"))
        << ", U_H normal (full adjoint check) = " << yesNo(r.normalFull)
        << (r.criterionAgrees() ? ", agree" : ", DISAGREE") << "\n";
    for (const auto& w : r.witnesses) out << "  " << w << "\n";
    return r.passed() ? 0 : 1;
}

int cmdReport(const std::string& file, const std::string& output, int maxDegree, std::ostream& out,
              std::ostream& err) {
    const PresentationSource src = loadSource(file);
    const Presentation p = load(file, err);
    ReportOptions options;
    options.maxDegree = maxDegree;
    const std::string text = fullReport(p, src.origin, options).dump(2) + "\n";
    if (output.empty() || output == "-") {
        out << text;
    } else {
        std::ofstream f(output, std::ios::binary);
        if (!f) throw DomainError("cannot write " + output);
        f << text;
    }
    return 0;
}

}  // namespace

int runCLI(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations in connected Hopf algebras given by generators and relations", "hopfgk"};
    app.require_subcommand(1);

    std::string file;
    std::string sub;
    std::string output;
    std::string filtration = "standard";
    int maxDegree = 12;
    int bound = 0;
    int aceBound = 4;
    bool full = false;
    std::size_t pairs = 100;
    std::uint32_t seed = 20240601;

    auto fileArg = [&](CLI::App* c) {
        c->add_option("file", file, "presentation file or built-in name")->required();
    };

    auto* check = app.add_subcommand("check", "parse, confluence and Hopf axioms");
    fileArg(check);
    auto* gk = app.add_subcommand("gk", "growth function and GK dimension");
    fileArg(gk);
    gk->add_option("--max-degree", maxDegree)->check(CLI::Range(0, 64));
    gk->add_option("--filtration", filtration)->check(CLI::IsMember({"standard", "weighted"}));
    auto* prims = app.add_subcommand("primitives", "bases of P(H) and P2(H)");
    fileArg(prims);
    prims->add_option("--bound", bound, "filtration degree bound (default 2*maxdeg+1)");
    auto* normal = app.add_subcommand("normal", "normality of a generated subalgebra");
    fileArg(normal);
    normal->add_option("--sub", sub, "comma-separated generators")->required();
    normal->add_flag("--full", full, "check adjoint actions of all words up to degree 3");
    auto* ace = app.add_subcommand("ace", "almost centralizing extension check and equivalence");
    fileArg(ace);
    ace->add_option("--sub", sub, "comma-separated generators")->required();
    ace->add_option("--bound", aceBound);
    auto* lemmas = app.add_subcommand("lemmas", "randomized bracket and coproduct property runs");
    fileArg(lemmas);
    lemmas->add_option("--pairs", pairs);
    lemmas->add_option("--seed", seed);
    auto* report = app.add_subcommand("report", "all analyses as JSON");
    fileArg(report);
    report->add_option("-o,--output", output, "output path (default stdout)");
    report->add_option("--max-degree", maxDegree)->check(CLI::Range(0, 64));
    auto* list = app.add_subcommand("builtins", "list built-in presentations");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    }

    try {
        if (*check) return cmdCheck(file, out, err);
        if (*gk) return cmdGrowth(file, maxDegree, filtration, out, err);
        if (*prims) return cmdPrimitives(file, bound, out, err);
        if (*normal) return cmdNormal(file, sub, full, out, err);
        if (*ace) return cmdAce(file, sub, aceBound, out, err);
        if (*lemmas) return cmdLemmas(file, pairs, seed, out, err);
        if (*report) return cmdReport(file, output, maxDegree, out, err);
        if (*list) {
            for (const auto& b : builtins()) out << b.origin << "\n";
            return 0;
        }
    } catch (const Failure& f) {
        return f.code;
    } catch (const ResourceLimit& e) {
        err << "resource limit: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace hopfgk
