#include "hopfgk/coalgebra.hpp"

#include <map>
#include <tuple>

#include "hopfgk/error.hpp"

namespace hopfgk {

TensorElement SweedlerDecomposition::reassemble(const SymbolTablePtr& table) const {
    TensorElement out(table);
    for (const auto& [a, b] : pairs) out += TensorElement::pure(a, b);
    return out;
}

HopfAlgebra::HopfAlgebra(const Presentation& p)
    : p_(&p), nf_(p), antipodeInProgress_(p.generatorCount(), false) {
    p.requireConfluent("Hopf structure");
}

TensorElement HopfAlgebra::commutator(const TensorElement& a, const TensorElement& b) const {
    return nf_(a * b - b * a);
}

const TensorElement& HopfAlgebra::coproductWord(const Word& w) const {
    if (const auto it = coproductCache_.find(w); it != coproductCache_.end()) return it->second;
    const auto& t = table();
    TensorElement product = TensorElement::pure(t, Word{}, Word{});
    for (Letter l : w) {
        const Word g = Word::letter(l);
        TensorElement factor = TensorElement::pure(t, g, Word{});
        factor.addTerm(Word{}, g, 1);
        factor += p_->deltaTail(l);
        product = product * factor;
    }
    return coproductCache_.emplace(w, nf_(product)).first->second;
}

TensorElement HopfAlgebra::coproduct(const AlgebraElement& a) const {
    a.checkCompatible(p_->zero());
    TensorElement out(table());
    for (const auto& [w, c] : a.terms()) {
        TensorElement term = coproductWord(w);
        term *= c;
        out += term;
    }
    return out;
}

TensorElement HopfAlgebra::delta(const AlgebraElement& a) const {
    const AlgebraElement n = nf_(a);
    const AlgebraElement one = p_->one();
    return coproduct(n) - TensorElement::pure(n, one) - TensorElement::pure(one, n);
}

TensorElement HopfAlgebra::deltaCC(const AlgebraElement& a) const {
    const TensorElement d = delta(a);
    return Scalar(1, 2) * (d + d.twist());
}

TensorElement HopfAlgebra::deltaAC(const AlgebraElement& a) const {
    const TensorElement d = delta(a);
    return Scalar(1, 2) * (d - d.twist());
}

Scalar HopfAlgebra::counit(const AlgebraElement& a) const { return nf_(a).counit(); }

AlgebraElement HopfAlgebra::antipodeGenerator(Letter g) const {
    const AlgebraElement gen = p_->element(g);
    if (p_->generator(g).degree == 1) return -gen;
    if (antipodeInProgress_[g])
        throw MalformedPresentation("antipode of '" + p_->generator(g).name +
                                    "' depends on itself through its delta tail");
    antipodeInProgress_[g] = true;
    // m∘(S⊗id)∘Δ(g) = 0  ⇒  S(g) = −g − Σ c·S(u)·v over the tail.
    AlgebraElement out = -gen;
    try {
        for (const auto& [key, c] : p_->deltaTail(g).terms()) {
            const AlgebraElement v = AlgebraElement::word(table(), key.second);
            out -= c * (antipodeWord(key.first) * v);
        }
    } catch (...) {
        antipodeInProgress_[g] = false;
        throw;
    }
    antipodeInProgress_[g] = false;
    return nf_(out);
}

const AlgebraElement& HopfAlgebra::antipodeWord(const Word& w) const {
    if (const auto it = antipodeCache_.find(w); it != antipodeCache_.end()) return it->second;
    AlgebraElement product = p_->one();
    // S(w₁⋯wₙ) = S(wₙ)⋯S(w₁)
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
        product = product * antipodeGenerator(*it);
    return antipodeCache_.emplace(w, nf_(product)).first->second;
}

AlgebraElement HopfAlgebra::antipode(const AlgebraElement& a) const {
    a.checkCompatible(p_->zero());
    AlgebraElement out(table());
    for (const auto& [w, c] : a.terms()) out += c * antipodeWord(w);
    return nf_(out);
}

SweedlerDecomposition HopfAlgebra::sweedler(const AlgebraElement& h) const {
    SweedlerDecomposition out;
    const TensorElement cop = coproduct(h);
    for (const auto& [key, c] : cop.terms())
        out.pairs.emplace_back(AlgebraElement::word(table(), key.first, c),
                               AlgebraElement::word(table(), key.second));
    return out;
}

TensorElement coproduct(const Presentation& p, const AlgebraElement& a) { return HopfAlgebra(p).coproduct(a); }
TensorElement deltaMap(const Presentation& p, const AlgebraElement& a) { return HopfAlgebra(p).delta(a); }
TensorElement deltaCC(const Presentation& p, const AlgebraElement& a) { return HopfAlgebra(p).deltaCC(a); }
TensorElement deltaAC(const Presentation& p, const AlgebraElement& a) { return HopfAlgebra(p).deltaAC(a); }
AlgebraElement antipode(const Presentation& p, const AlgebraElement& a) { return HopfAlgebra(p).antipode(a); }
Scalar counit(const Presentation& p, const AlgebraElement& a) { return HopfAlgebra(p).counit(a); }
SweedlerDecomposition sweedler(const Presentation& p, const AlgebraElement& h) {
    return HopfAlgebra(p).sweedler(h);
}

std::string axiomName(HopfAxiom a) {
    switch (a) {
        case HopfAxiom::RelationCompatibility: return "relation-compatibility";
        case HopfAxiom::Coassociativity: return "coassociativity";
        case HopfAxiom::Counit: return "counit";
        case HopfAxiom::Antipode: return "antipode";
        case HopfAxiom::TailAntisymmetry: return "tail-antisymmetry";
    }
    return "unknown";
}

bool AxiomReport::failed(HopfAxiom a) const {
    for (const auto& f : failures)
        if (f.axiom == a) return true;
    return false;
}

namespace {

using Triple = std::tuple<Word, Word, Word>;
using TripleTensor = std::map<Triple, Scalar>;

void accumulate(TripleTensor& t, Triple key, const Scalar& c) {
    auto [it, inserted] = t.try_emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) t.erase(it);
    }
}

std::string spellTriple(const SymbolTable& table, const TripleTensor& t) {
    std::string out;
    for (const auto& [k, c] : t) {
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ")*" + table.spell(std::get<0>(k)) + " ox " + table.spell(std::get<1>(k)) +
               " ox " + table.spell(std::get<2>(k));
    }
    return out.empty() ? "0" : out;
}

}  // namespace

AxiomReport verifyHopfAxioms(const Presentation& p) {
    const HopfAlgebra hopf(p);
    const auto& table = *p.table();
    AxiomReport report;
    auto fail = [&](HopfAxiom a, std::string subject, std::string witness) {
        report.failures.push_back({a, std::move(subject), std::move(witness)});
    };

    // (v) first: the antipode recursion relies on primitive tail legs.
    std::vector<bool> tailOk(p.generatorCount(), true);
    for (Letter g = 0; g < p.generatorCount(); ++g) {
        if (table[g].degree != 2) continue;
        ++report.checks;
        const TensorElement& tail = p.deltaTail(g);
        const TensorElement residual = tail + tail.twist();
        bool legsPrimitive = true;
        for (const auto& [key, c] : tail.terms())
            for (const Word* leg : {&key.first, &key.second})
                if (leg->size() != 1 || table[(*leg)[0]].degree != 1) legsPrimitive = false;
        if (!residual.isZero()) {
            tailOk[g] = false;
            fail(HopfAxiom::TailAntisymmetry, table[g].name, "tau(delta)+delta = " + residual.str());
        } else if (!legsPrimitive) {
            tailOk[g] = false;
            fail(HopfAxiom::TailAntisymmetry, table[g].name, "non-primitive leg in " + tail.str());
        }
    }

    // (i) Δ respects every relation.
    for (const Relation& r : p.relations()) {
        ++report.checks;
        const AlgebraElement hi = p.element(r.hi);
        const AlgebraElement lo = p.element(r.lo);
        const TensorElement residual = hopf.coproduct(hi * lo - lo * hi - r.rhs);
        if (!residual.isZero())
            fail(HopfAxiom::RelationCompatibility, "[" + table[r.hi].name + "," + table[r.lo].name + "]",
                 residual.str());
    }

    for (Letter g = 0; g < p.generatorCount(); ++g) {
        const AlgebraElement gen = p.element(g);
        const TensorElement cop = hopf.coproduct(gen);

        // (ii) coassociativity
        ++report.checks;
        TripleTensor lhs;
        TripleTensor rhs;
        for (const auto& [key, c] : cop.terms()) {
            const TensorElement first = hopf.coproduct(AlgebraElement::word(p.table(), key.first));
            const TensorElement second = hopf.coproduct(AlgebraElement::word(p.table(), key.second));
            for (const auto& [k2, d] : first.terms()) accumulate(lhs, {k2.first, k2.second, key.second}, c * d);
            for (const auto& [k2, d] : second.terms()) accumulate(rhs, {key.first, k2.first, k2.second}, c * d);
        }
        if (lhs != rhs) {
            TripleTensor diff = lhs;
            for (const auto& [k, c] : rhs) accumulate(diff, k, -c);
            fail(HopfAxiom::Coassociativity, table[g].name, spellTriple(table, diff));
        }

        // (iii) counit, with ε(g) = 0
        ++report.checks;
        const AlgebraElement left = cop.contractLeft([](const Word& w) { return Scalar(w.empty() ? 1 : 0); });
        const AlgebraElement right = cop.contractRight([](const Word& w) { return Scalar(w.empty() ? 1 : 0); });
        if (!(left == gen) || !(right == gen) || !hopf.counit(gen).isZero())
            fail(HopfAxiom::Counit, table[g].name,
                 "(eps x id)Delta = " + left.str() + ", (id x eps)Delta = " + right.str());

        // (iv) antipode convolution, both sides
        ++report.checks;
        if (!tailOk[g]) {
            fail(HopfAxiom::Antipode, table[g].name, "skipped: malformed delta tail");
            continue;
        }
        try {
            AlgebraElement sLeft(p.table());
            AlgebraElement sRight(p.table());
            for (const auto& [key, c] : cop.terms()) {
                const AlgebraElement u = AlgebraElement::word(p.table(), key.first);
                const AlgebraElement v = AlgebraElement::word(p.table(), key.second);
                sLeft += c * (hopf.antipode(u) * v);
                sRight += c * (u * hopf.antipode(v));
            }
            sLeft = hopf.normalize(sLeft);
            sRight = hopf.normalize(sRight);
            if (!sLeft.isZero() || !sRight.isZero())
                fail(HopfAxiom::Antipode, table[g].name,
                     "m(S x id)Delta = " + sLeft.str() + ", m(id x S)Delta = " + sRight.str());
        } catch (const MalformedPresentation& e) {
            fail(HopfAxiom::Antipode, table[g].name, e.what());
        }
    }
    return report;
}

}  // namespace hopfgk
