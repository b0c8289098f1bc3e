#include "hopfgk/structure.hpp"

#include "hopfgk/error.hpp"
#include "hopfgk/linalg.hpp"

namespace hopfgk {

namespace {

std::vector<Word> wordsOn(const Presentation& p, const SubalgebraSpec& sub, int bound, bool includeUnit) {
    std::vector<Word> out;
    for (const Word& w : enumerateBasis(p, bound).words) {
        if (w.empty() && !includeUnit) continue;
        bool inside = true;
        for (Letter l : w) inside = inside && sub.contains(l);
        if (inside) out.push_back(w);
    }
    return out;
}

std::vector<Letter> complementOf(const Presentation& p, const SubalgebraSpec& sub) {
    std::vector<Letter> out;
    for (Letter l = 0; l < p.generatorCount(); ++l)
        if (!sub.contains(l)) out.push_back(l);
    return out;
}

std::vector<std::string> tailsOutside(const Presentation& p, const SubalgebraSpec& sub,
                                      const std::vector<Letter>& complement) {
    std::vector<std::string> out;
    for (Letter h : complement) {
        for (const auto& [key, c] : p.deltaTail(h).terms()) {
            bool inside = true;
            for (Letter l : key.first) inside = inside && sub.contains(l);
            for (Letter l : key.second) inside = inside && sub.contains(l);
            if (!inside) {
                out.push_back("delta(" + p.generator(h).name + ") = " + p.deltaTail(h).str() + " is not in " +
                              sub.label + " ox " + sub.label);
                break;
            }
        }
    }
    return out;
}

// Normal forms of h_m·w and of w, for w ranging over subalgebra words.
std::vector<AlgebraElement> moduleSpan(const HopfAlgebra& hopf, const SubalgebraSpec& sub,
                                       const std::vector<Letter>& complement, int bound) {
    const Presentation& p = hopf.presentation();
    std::vector<AlgebraElement> out;
    const auto words = wordsOn(p, sub, bound, true);
    for (const Word& w : words) out.push_back(AlgebraElement::word(p.table(), w));
    for (Letter h : complement)
        for (const Word& w : words)
            if (p.table()->weight(w) + p.generator(h).degree <= bound)
                out.push_back(hopf.multiply(p.element(h), AlgebraElement::word(p.table(), w)));
    return out;
}

}  // namespace

AlgebraElement adjointLeft(const HopfAlgebra& hopf, const AlgebraElement& h, const AlgebraElement& a) {
    AlgebraElement out(hopf.table());
    for (const auto& [h1, h2] : hopf.sweedler(h).pairs) out += h1 * a * hopf.antipode(h2);
    return hopf.normalize(out);
}

AlgebraElement adjointRight(const HopfAlgebra& hopf, const AlgebraElement& h, const AlgebraElement& a) {
    AlgebraElement out(hopf.table());
    for (const auto& [h1, h2] : hopf.sweedler(h).pairs) out += hopf.antipode(h1) * a * h2;
    return hopf.normalize(out);
}

AlgebraElement adjointLeft(const Presentation& p, const AlgebraElement& h, const AlgebraElement& a) {
    return adjointLeft(HopfAlgebra(p), h, a);
}

AlgebraElement adjointRight(const Presentation& p, const AlgebraElement& h, const AlgebraElement& a) {
    return adjointRight(HopfAlgebra(p), h, a);
}

NormalityReport checkNormal(const HopfAlgebra& hopf, const SubalgebraSpec& sub, NormalityOptions options) {
    const Presentation& p = hopf.presentation();
    requireRelationClosed(p, sub);

    std::vector<AlgebraElement> actors;
    std::vector<AlgebraElement> targets;
    if (options.fullElements) {
        for (const Word& w : wordsOn(p, p.wholeAlgebra(), options.degreeBound, false))
            actors.push_back(AlgebraElement::word(p.table(), w));
        for (const Word& w : wordsOn(p, sub, options.degreeBound, false))
            targets.push_back(AlgebraElement::word(p.table(), w));
    } else {
        for (Letter l = 0; l < p.generatorCount(); ++l) actors.push_back(p.element(l));
        for (Letter l : sub.generators) targets.push_back(p.element(l));
    }

    NormalityReport report;
    for (const auto& h : actors) {
        for (const auto& a : targets) {
            for (Side side : {Side::Left, Side::Right}) {
                ++report.checks;
                AlgebraElement v = side == Side::Left ? adjointLeft(hopf, h, a) : adjointRight(hopf, h, a);
                if (!v.supportedOn(sub.generators)) {
                    report.isNormal = false;
                    report.witnesses.push_back({h, a, std::move(v), side});
                }
            }
        }
    }
    return report;
}

NormalityReport checkNormal(const Presentation& p, const SubalgebraSpec& sub, NormalityOptions options) {
    return checkNormal(HopfAlgebra(p), sub, options);
}

bool bracketCriterion(const HopfAlgebra& hopf) {
    const Presentation& p = hopf.presentation();
    const auto primitives = p.generatorsOfDegree(1);
    const std::size_t dimP = primitiveSpace(hopf, defaultDegreeBound(p)).dim();
    if (dimP != primitives.size())
        throw CriterionInapplicable("degree-1 generators span a " + std::to_string(primitives.size()) +
                                    "-dimensional space but P(H) has dimension " + std::to_string(dimP));
    for (Letter t : p.generatorsOfDegree(2)) {
        for (Letter g : primitives) {
            const AlgebraElement b = hopf.commutator(p.element(t), p.element(g));
            for (const auto& [w, c] : b.terms())
                if (w.size() != 1 || p.generator(w[0]).degree != 1) return false;
        }
    }
    return true;
}

bool bracketCriterion(const Presentation& p) { return bracketCriterion(HopfAlgebra(p)); }

ACEReport checkAlmostCentralizing(const HopfAlgebra& hopf, const SubalgebraSpec& sub, int degreeBound) {
    const Presentation& p = hopf.presentation();
    requireRelationClosed(p, sub);
    ACEReport report;
    report.sub = sub;
    report.complement = complementOf(p, sub);
    report.preconditionFailures = tailsOutside(p, sub, report.complement);
    if (!report.preconditionsHold()) return report;

    const auto& t = *p.table();
    for (Letter a : sub.generators) {
        for (Letter h : report.complement) {
            const AlgebraElement b = hopf.commutator(p.element(a), p.element(h));
            if (!b.supportedOn(sub.generators)) {
                report.commutesIntoSub = false;
                report.witnesses.push_back("[" + t[a].name + "," + t[h].name + "] = " + b.str() + " is not in " +
                                           sub.label);
            }
        }
    }

    for (std::size_t i = 0; i < report.complement.size(); ++i) {
        for (std::size_t j = i + 1; j < report.complement.size(); ++j) {
            const Letter hi = report.complement[i];
            const Letter hj = report.complement[j];
            const AlgebraElement b = hopf.commutator(p.element(hi), p.element(hj));
            const int bound = std::max(degreeBound, b.degree());
            if (!inSpan(moduleSpan(hopf, sub, report.complement, bound), b)) {
                report.bracketsInModule = false;
                report.witnesses.push_back("[" + t[hi].name + "," + t[hj].name + "] = " + b.str() +
                                           " is not in sum h_m*" + sub.label + " + " + sub.label);
            }
        }
    }
    return report;
}

ACEReport checkAlmostCentralizing(const Presentation& p, const SubalgebraSpec& sub, int degreeBound) {
    return checkAlmostCentralizing(HopfAlgebra(p), sub, degreeBound);
}

EquivalenceReport almostCentralizingEquivalence(const HopfAlgebra& hopf, const SubalgebraSpec& sub, int degreeBound) {
    const Presentation& p = hopf.presentation();
    requireRelationClosed(p, sub);
    const auto complement = complementOf(p, sub);
    if (const auto bad = tailsOutside(p, sub, complement); !bad.empty()) throw CriterionInapplicable(bad.front());

    EquivalenceReport report;
    report.almostCentralizing = checkAlmostCentralizing(hopf, sub, degreeBound).passed();
    report.normal = checkNormal(hopf, sub).isNormal;

    report.deltaCondition = true;
    for (std::size_t i = 0; i < complement.size() && report.deltaCondition; ++i) {
        for (std::size_t j = i + 1; j < complement.size() && report.deltaCondition; ++j) {
            const AlgebraElement b = hopf.commutator(p.element(complement[i]), p.element(complement[j]));
            const int bound = std::max(degreeBound, b.degree());
            std::vector<TensorElement> images;
            for (const auto& v : moduleSpan(hopf, sub, complement, bound)) images.push_back(hopf.delta(v));
            report.deltaCondition = inSpan(images, hopf.delta(b));
        }
    }
    report.agree = report.almostCentralizing == (report.normal && report.deltaCondition);
    return report;
}

EquivalenceReport almostCentralizingEquivalence(const Presentation& p, const SubalgebraSpec& sub, int degreeBound) {
    return almostCentralizingEquivalence(HopfAlgebra(p), sub, degreeBound);
}

DeltaPartsReport deltaPartsCheck(const HopfAlgebra& hopf, const AlgebraElement& s, const AlgebraElement& t,
                           const SubspaceBasis& p2) {
    const Presentation& p = hopf.presentation();
    const AlgebraElement sn = hopf.normalize(s);
    const AlgebraElement tn = hopf.normalize(t);
    if (!p2.contains(sn) || !p2.contains(tn)) throw DomainError("delta-parts inputs must lie in P2(H)");

    const AlgebraElement bracket = hopf.commutator(sn, tn);

    std::vector<TensorElement> deltaU3;
    for (const Word& w : enumerateBasis(p, 3, Filtration::Standard).words) {
        if (w.empty()) continue;
        bool primitiveLetters = true;
        for (Letter l : w) primitiveLetters = primitiveLetters && p.generator(l).degree == 1;
        if (primitiveLetters) deltaU3.push_back(hopf.delta(AlgebraElement::word(p.table(), w)));
    }
    std::vector<TensorElement> deltaP2;
    for (const auto& v : p2.vectors) deltaP2.push_back(hopf.delta(v));

    DeltaPartsReport report;
    report.ccInDeltaU3 = inSpan(deltaU3, hopf.deltaCC(bracket));
    report.acInDeltaP2 = inSpan(deltaP2, hopf.deltaAC(bracket));
    return report;
}

DeltaPartsReport deltaPartsCheck(const Presentation& p, const AlgebraElement& s, const AlgebraElement& t,
                           int degreeBound) {
    const HopfAlgebra hopf(p);
    const SubspaceBasis p2 = antiCocommutativeSpace(hopf, degreeBound, primitiveSpace(hopf, degreeBound));
    return deltaPartsCheck(hopf, s, t, p2);
}

bool deltaBracketIdentity(const HopfAlgebra& hopf, const AlgebraElement& s, const AlgebraElement& t) {
    const AlgebraElement bracket = hopf.commutator(s, t);
    return hopf.deltaCC(bracket) == hopf.commutator(hopf.delta(s), hopf.delta(t));
}

AlgebraElement randomCombination(SymbolTablePtr table, const SubspaceBasis& basis, std::mt19937& rng) {
    std::uniform_int_distribution<long> coef(-3, 3);
    AlgebraElement out(std::move(table));
    for (const auto& v : basis.vectors) out += Scalar(coef(rng)) * v;
    return out;
}

BracketPropertyReport bracketProperties(const Presentation& p, std::size_t pairs, std::uint32_t seed, int degreeBound) {
    BracketPropertyReport report;
    if (!p.isConfluent() || p.generatorsOfDegree(2).empty()) return report;
    report.inClass = true;

    const HopfAlgebra hopf(p);
    try {
        report.bracketCriterion = bracketCriterion(hopf);
    } catch (const CriterionInapplicable&) {
    }
    report.normalFull = checkNormal(hopf, p.primitiveSubalgebra(), {true, 3}).isNormal;

    const SubspaceBasis p2 = antiCocommutativeSpace(hopf, degreeBound, primitiveSpace(hopf, degreeBound));
    std::mt19937 rng(seed);
    for (std::size_t i = 0; i < pairs; ++i) {
        const AlgebraElement s = randomCombination(p.table(), p2, rng);
        const AlgebraElement t = randomCombination(p.table(), p2, rng);
        ++report.pairs;
        if (!deltaBracketIdentity(hopf, s, t)) {
            ++report.bracketIdentityFailures;
            report.witnesses.push_back("bracket identity fails for s = " + s.str() + ", t = " + t.str());
        }
        if (!deltaPartsCheck(hopf, s, t, p2).holds()) {
            ++report.biconditionalFailures;
            report.witnesses.push_back("delta_cc/delta_ac biconditional fails for s = " + s.str() + ", t = " + t.str());
        }
    }
    return report;
}

}  // namespace hopfgk
