#include "hopfgk/report.hpp"

#include <cmath>

#include "hopfgk/error.hpp"
#include "hopfgk/rewrite.hpp"

namespace hopfgk {

namespace {

double rounded(double x) { return std::round(x * 1e6) / 1e6; }

Json names(const SymbolTable& table, const std::vector<Letter>& letters) {
    Json out = Json::array();
    for (Letter l : letters) out.push_back(table[l].name);
    return out;
}

std::string sideName(Side s) { return s == Side::Left ? "left" : "right"; }

}  // namespace

Json toJson(const Scalar& s) { return s.fractionString(); }

Json toJson(const SymbolTable& table, const Word& w) {
    Json out = Json::array();
    for (Letter l : w) out.push_back(table[l].name);
    return out;
}

Json toJson(const AlgebraElement& a) {
    Json out = Json::array();
    for (const auto& [w, c] : a.terms())
        out.push_back({{"word", toJson(*a.table(), w)}, {"coefficient", toJson(c)}});
    return out;
}

Json toJson(const TensorElement& t) {
    Json out = Json::array();
    for (const auto& [key, c] : t.terms())
        out.push_back({{"left", toJson(*t.table(), key.first)},
                       {"right", toJson(*t.table(), key.second)},
                       {"coefficient", toJson(c)}});
    return out;
}

Json toJson(const SymbolTable& table, const SubalgebraSpec& sub) {
    return {{"label", sub.label}, {"generators", names(table, sub.generators)}};
}

Json toJson(const Presentation& p) {
    const auto& table = *p.table();
    Json gens = Json::array();
    for (const auto& g : table.generators()) gens.push_back({{"name", g.name}, {"degree", g.degree}});
    Json rels = Json::array();
    for (const Relation& r : p.relations())
        rels.push_back({{"bracket", {table[r.hi].name, table[r.lo].name}}, {"value", toJson(r.rhs)}});
    Json tails = Json::object();
    for (Letter l : p.generatorsOfDegree(2)) tails[table[l].name] = toJson(p.deltaTail(l));
    return {{"name", p.name()}, {"generators", gens}, {"relations", rels}, {"deltaTails", tails}};
}

Json toJson(const Presentation& p, const ConfluenceReport& r) {
    Json failures = Json::array();
    for (const auto& f : r.failures)
        failures.push_back({{"triple", toJson(*p.table(), f.triple)},
                            {"leftReduct", toJson(f.leftReduct)},
                            {"rightReduct", toJson(f.rightReduct)}});
    return {{"confluent", r.confluent}, {"triplesChecked", r.triplesChecked}, {"failures", failures}};
}

Json toJson(const AxiomReport& r) {
    Json failures = Json::array();
    for (const auto& f : r.failures)
        failures.push_back({{"axiom", axiomName(f.axiom)}, {"subject", f.subject}, {"witness", f.witness}});
    return {{"passed", r.passed()}, {"checks", r.checks}, {"failures", failures}};
}

Json toJson(const SubspaceBasis& b, int degreeBound) {
    Json basis = Json::array();
    for (const auto& v : b.vectors) basis.push_back(toJson(v));
    return {{"degreeBound", degreeBound}, {"dimension", b.dim()}, {"basis", basis}};
}

Json toJson(const NormalityReport& r) {
    Json witnesses = Json::array();
    for (const auto& w : r.witnesses)
        witnesses.push_back({{"actor", toJson(w.actor)},
                             {"target", toJson(w.target)},
                             {"value", toJson(w.value)},
                             {"side", sideName(w.side)}});
    return {{"isNormal", r.isNormal}, {"checks", r.checks}, {"witnesses", witnesses}};
}

Json toJson(const Presentation& p, const ACEReport& r) {
    return {{"subalgebra", toJson(*p.table(), r.sub)},
            {"complement", names(*p.table(), r.complement)},
            {"preconditionFailures", r.preconditionFailures},
            {"commutesIntoSubalgebra", r.commutesIntoSub},
            {"bracketsInModule", r.bracketsInModule},
            {"passed", r.passed()},
            {"witnesses", r.witnesses}};
}

Json toJson(const EquivalenceReport& r) {
    return {{"almostCentralizing", r.almostCentralizing},
            {"normal", r.normal},
            {"deltaCondition", r.deltaCondition},
            {"agree", r.agree}};
}

Json toJson(const BracketPropertyReport& r) {
    Json criterion = r.bracketCriterion ? Json(*r.bracketCriterion) : Json(nullptr);
    return {{"inClass", r.inClass},
            {"pairs", r.pairs},
            {"bracketIdentityFailures", r.bracketIdentityFailures},
            {"biconditionalFailures", r.biconditionalFailures},
            {"bracketCriterion", criterion},
            {"normalFullAdjoint", r.normalFull},
            {"criterionAgrees", r.criterionAgrees()},
            {"passed", r.passed()},
            {"witnesses", r.witnesses}};
}

Json toJson(const Presentation& p, const GrowthReport& r) {
    Json out = {{"filtration", r.filtration == Filtration::Standard ? "standard" : "weighted"},
                {"maxDegree", r.maxDegree},
                {"dims", r.dims},
                {"weightedDims", r.weightedDims},
                {"pbwCount", r.pbwCount ? Json(*r.pbwCount) : Json(nullptr)},
                {"fittedExponent", rounded(r.fittedExponent)},
                {"exactGK", r.exactGK ? Json(*r.exactGK) : Json(nullptr)},
                {"estimateOnly", r.estimateOnly},
                {"certificate", certificateName(r.certificate)}};
    if (r.base) {
        out["base"] = toJson(*p.table(), *r.base);
        out["baseGK"] = r.baseGK;
        out["extensionRank"] = r.extensionRank;
    }
    out["note"] = "dimensions are relative to the declared-degree filtration";
    return out;
}

Json toJson(const GkVersusP2Report& r) {
    return {{"inClass", r.inClass},
            {"hypothesis", r.hypothesis},
            {"note", r.note},
            {"exactGK", r.exactGK ? Json(*r.exactGK) : Json(nullptr)},
            {"dimP", r.dimP},
            {"dimP2", r.dimP2},
            {"degreeBound", r.degreeBound},
            {"agreement", r.agreement},
            {"consistent", r.consistent()}};
}

Json fullReport(const Presentation& p, const std::string& origin, const ReportOptions& options) {
    Json doc = {{"schemaVersion", kSchemaVersion}, {"origin", origin}};
    doc["parse"] = toJson(p);
    doc["checkConfluence"] = toJson(p, p.confluence());
    const GrowthReport growth = growthFunction(p, options.maxDegree);
    if (!p.isConfluent()) {
        doc["growthFunction"] = toJson(p, growth);
        return doc;
    }

    const HopfAlgebra hopf(p);
    const int bound = options.degreeBound > 0 ? options.degreeBound : defaultDegreeBound(p);
    doc["verifyHopfAxioms"] = toJson(verifyHopfAxioms(p));
    const SubspaceBasis prim = primitiveSpace(hopf, bound);
    doc["primitiveSpace"] = toJson(prim, bound);
    doc["antiCocommutativeSpace"] = toJson(antiCocommutativeSpace(hopf, bound, prim), bound);

    const SubalgebraSpec uh = p.primitiveSubalgebra();
    std::vector<SubalgebraSpec> subs{uh};
    if (growth.base) subs.push_back(*growth.base);

    Json normal = Json::object();
    Json ace = Json::object();
    Json equivalence = Json::object();
    for (const auto& sub : subs) {
        normal[sub.label] = toJson(checkNormal(hopf, sub));
        ace[sub.label] = toJson(p, checkAlmostCentralizing(hopf, sub));
        try {
            equivalence[sub.label] = toJson(almostCentralizingEquivalence(hopf, sub));
        } catch (const CriterionInapplicable& e) {
            equivalence[sub.label] = {{"inapplicable", e.what()}};
        }
    }
    doc["checkNormal"] = normal;
    try {
        doc["bracketCriterion"] = bracketCriterion(hopf);
    } catch (const CriterionInapplicable& e) {
        doc["bracketCriterion"] = {{"inapplicable", e.what()}};
    }
    doc["checkAlmostCentralizing"] = ace;
    doc["almostCentralizingEquivalence"] = equivalence;
    doc["bracketProperties"] = toJson(bracketProperties(p, options.pairs, options.seed));
    doc["growthFunction"] = toJson(p, growth);
    doc["gkVersusP2"] = toJson(gkVersusP2(p));
    return doc;
}

}  // namespace hopfgk
