#include "hopfgk/presentation.hpp"

#include <algorithm>

#include "hopfgk/error.hpp"
#include "hopfgk/rewrite.hpp"

namespace hopfgk {

bool SubalgebraSpec::contains(Letter l) const {
    return std::binary_search(generators.begin(), generators.end(), l);
}

const Relation& Presentation::relation(Letter a, Letter b) const {
    if (a == b || a >= generatorCount() || b >= generatorCount())
        throw DomainError("no relation for this generator pair");
    const Letter hi = std::max(a, b);
    const Letter lo = std::min(a, b);
    return relations_[relationAt_[hi * generatorCount() + lo]];
}

AlgebraElement Presentation::bracket(Letter a, Letter b) const {
    if (a == b) return zero();
    const Relation& r = relation(a, b);
    return a == r.hi ? r.rhs : -r.rhs;
}

std::vector<Letter> Presentation::generatorsOfDegree(int degree) const {
    std::vector<Letter> out;
    for (const auto& g : table_->generators())
        if (g.degree == degree) out.push_back(g.index);
    return out;
}

SubalgebraSpec Presentation::primitiveSubalgebra() const { return {generatorsOfDegree(1), "U_H"}; }

SubalgebraSpec Presentation::wholeAlgebra() const {
    SubalgebraSpec s{{}, "H"};
    for (Letter l = 0; l < generatorCount(); ++l) s.generators.push_back(l);
    return s;
}

SubalgebraSpec Presentation::subalgebra(const std::vector<std::string>& names, std::string label) const {
    SubalgebraSpec s{{}, std::move(label)};
    for (const auto& n : names) {
        const auto l = table_->find(n);
        if (!l) throw DomainError("unknown generator '" + n + "'");
        s.generators.push_back(*l);
    }
    std::sort(s.generators.begin(), s.generators.end());
    s.generators.erase(std::unique(s.generators.begin(), s.generators.end()), s.generators.end());
    return s;
}

void Presentation::requireConfluent(std::string_view operation) const {
    if (!isConfluent())
        throw NonConfluentError(std::string(operation) + " requires a confluent presentation; '" +
                                name_ + "' is not confluent");
}

PresentationBuilder& PresentationBuilder::generator(std::string name, int degree) {
    if (table_) throw MalformedPresentation("generators must be declared before relations");
    pending_.emplace_back(std::move(name), degree);
    return *this;
}

const SymbolTablePtr& PresentationBuilder::table() {
    if (!table_) {
        table_ = SymbolTable::make(pending_);
        const std::size_t n = table_->size();
        rules_.assign(n * n, std::nullopt);
        tails_.assign(n, std::nullopt);
    }
    return table_;
}

Letter PresentationBuilder::lookup(std::string_view name) {
    const auto l = table()->find(name);
    if (!l) throw MalformedPresentation("unknown identifier '" + std::string(name) + "'");
    return *l;
}

PresentationBuilder& PresentationBuilder::bracket(std::string_view a, std::string_view b,
                                                  const AlgebraElement& rhs) {
    const Letter la = lookup(a);
    const Letter lb = lookup(b);
    return bracket(la, lb, rhs);
}

PresentationBuilder& PresentationBuilder::bracket(Letter a, Letter b, const AlgebraElement& rhs) {
    const auto& t = table();
    if (a >= t->size() || b >= t->size()) throw MalformedPresentation("generator index out of range");
    if (a == b) throw MalformedPresentation("relation [" + (*t)[a].name + "," + (*t)[a].name +
                                            "] relates a generator with itself");
    rhs.checkCompatible(AlgebraElement(t));
    const Letter hi = std::max(a, b);
    const Letter lo = std::min(a, b);
    auto& slot = rules_[hi * t->size() + lo];
    if (slot)
        throw MalformedPresentation("duplicate relation for pair (" + (*t)[lo].name + "," +
                                    (*t)[hi].name + ")");
    // [a,b] = rhs; stored as hi·lo = lo·hi + [hi,lo].
    slot = Relation{hi, lo, a == hi ? rhs : -rhs};
    return *this;
}

PresentationBuilder& PresentationBuilder::deltaTail(std::string_view g, const TensorElement& tail) {
    return deltaTail(lookup(g), tail);
}

PresentationBuilder& PresentationBuilder::deltaTail(Letter g, const TensorElement& tail) {
    const auto& t = table();
    if (g >= t->size()) throw MalformedPresentation("generator index out of range");
    if ((*t)[g].degree != 2)
        throw MalformedPresentation("delta given for degree-1 generator '" + (*t)[g].name + "'");
    tail.checkCompatible(TensorElement(t));
    if (tails_[g]) throw MalformedPresentation("duplicate delta for '" + (*t)[g].name + "'");
    tails_[g] = tail;
    return *this;
}

Presentation PresentationBuilder::build() const {
    if (!table_ && pending_.empty()) throw MalformedPresentation("presentation has no generators");
    const SymbolTablePtr t = table_ ? table_ : SymbolTable::make(pending_);
    const std::size_t n = t->size();

    Presentation p;
    p.name_ = name_;
    p.table_ = t;
    p.relationAt_.assign(n * n, 0);
    for (Letter hi = 0; hi < n; ++hi) {
        for (Letter lo = 0; lo < hi; ++lo) {
            const std::optional<Relation>* slot = table_ ? &rules_[hi * n + lo] : nullptr;
            if (!slot || !*slot)
                throw MalformedPresentation("missing relation for pair (" + (*t)[lo].name + "," +
                                            (*t)[hi].name + ")");
            const Relation& r = **slot;
            const int budget = (*t)[hi].degree + (*t)[lo].degree;
            for (const auto& [w, c] : r.rhs.terms()) {
                const std::string where = "relation [" + (*t)[hi].name + "," + (*t)[lo].name + "]";
                if (w.empty()) throw MalformedPresentation(where + " has a constant term");
                if (w.size() > 2)
                    throw MalformedPresentation(where + " has a right-hand word longer than 2");
                if (!w.isNondecreasing())
                    throw MalformedPresentation(where + " right-hand word " + t->spell(w) +
                                                " is not in normal form");
                if (t->weight(w) >= budget)
                    throw MalformedPresentation(where + " is not degree-dropping (word " + t->spell(w) +
                                                ")");
            }
            p.relationAt_[hi * n + lo] = p.relations_.size();
            p.relations_.push_back(r);
        }
    }
    for (Letter g = 0; g < n; ++g) {
        const std::optional<TensorElement>* tail = table_ ? &tails_[g] : nullptr;
        if (tail && *tail) {
            for (const auto& [key, c] : (*tail)->terms())
                if (!key.first.isNondecreasing() || !key.second.isNondecreasing())
                    throw MalformedPresentation("delta tail of '" + (*t)[g].name +
                                                "' has a leg outside normal form");
            p.tails_.push_back(**tail);
        } else {
            p.tails_.emplace_back(t);
        }
    }
    p.confluence_ = checkConfluence(p);
    return p;
}

Presentation restrictTo(const Presentation& p, const SubalgebraSpec& sub, std::string name) {
    requireRelationClosed(p, sub);
    const auto& src = *p.table();
    PresentationBuilder b(name.empty() ? p.name() + "/" + sub.label : std::move(name));
    for (Letter l : sub.generators) b.generator(src[l].name, src[l].degree);
    const SymbolTablePtr& t = b.table();

    // Old letter -> new letter.
    std::vector<Letter> remap(p.generatorCount(), 0);
    for (std::size_t i = 0; i < sub.generators.size(); ++i) remap[sub.generators[i]] = static_cast<Letter>(i);
    auto translate = [&](const Word& w) {
        std::vector<Letter> out;
        for (Letter l : w) out.push_back(remap[l]);
        return Word(std::move(out));
    };

    for (const Relation& r : p.relations()) {
        if (!sub.contains(r.hi) || !sub.contains(r.lo)) continue;
        AlgebraElement rhs(t);
        for (const auto& [w, c] : r.rhs.terms()) rhs.addTerm(translate(w), c);
        b.bracket(remap[r.hi], remap[r.lo], rhs);
    }
    for (Letter g : sub.generators) {
        if (src[g].degree != 2) continue;
        TensorElement tail(t);
        for (const auto& [key, c] : p.deltaTail(g).terms()) {
            for (Letter l : key.first)
                if (!sub.contains(l))
                    throw InvalidSubalgebra("delta tail of '" + src[g].name + "' leaves " + sub.label);
            for (Letter l : key.second)
                if (!sub.contains(l))
                    throw InvalidSubalgebra("delta tail of '" + src[g].name + "' leaves " + sub.label);
            tail.addTerm(translate(key.first), translate(key.second), c);
        }
        b.deltaTail(remap[g], tail);
    }
    return b.build();
}

}  // namespace hopfgk
