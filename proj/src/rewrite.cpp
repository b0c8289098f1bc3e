#include "hopfgk/rewrite.hpp"

#include "hopfgk/error.hpp"

namespace hopfgk {

namespace {

void accumulate(AlgebraElement::Terms& terms, const Word& w, const Scalar& c) {
    if (c.isZero()) return;
    auto [it, inserted] = terms.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) terms.erase(it);
    }
}

// Terms of one rewrite step at a descent position, without normalizing.
AlgebraElement::Terms stepTerms(const Presentation& p, const Word& w, std::size_t pos) {
    const Relation& r = p.relation(w[pos], w[pos + 1]);
    const Word prefix = w.slice(0, pos);
    const Word suffix = w.slice(pos + 2, w.size());
    AlgebraElement::Terms out;
    accumulate(out, prefix * Word{r.lo, r.hi} * suffix, 1);
    for (const auto& [u, c] : r.rhs.terms()) accumulate(out, prefix * u * suffix, c);
    return out;
}

}  // namespace

const AlgebraElement::Terms& Normalizer::wordTerms(const Word& w) const {
    if (const auto it = cache_.find(w); it != cache_.end()) return it->second;

    AlgebraElement::Terms result;
    if (const auto pos = w.firstDescent(); !pos) {
        result.emplace(w, Scalar(1));
    } else {
        if (++steps_ > budget_)
            throw MalformedPresentation("reduction budget exhausted in presentation '" + p_->name() +
                                        "'");
        for (const auto& [u, c] : stepTerms(*p_, w, *pos))
            for (const auto& [v, d] : wordTerms(u)) accumulate(result, v, c * d);
    }
    return cache_.emplace(w, std::move(result)).first->second;
}

AlgebraElement Normalizer::word(const Word& w) const { return AlgebraElement(p_->table(), wordTerms(w)); }

AlgebraElement Normalizer::operator()(const AlgebraElement& a) const {
    a.checkCompatible(p_->zero());
    AlgebraElement::Terms out;
    for (const auto& [w, c] : a.terms()) {
        if (w.isNondecreasing()) {
            accumulate(out, w, c);
            continue;
        }
        for (const auto& [v, d] : wordTerms(w)) accumulate(out, v, c * d);
    }
    return AlgebraElement(p_->table(), std::move(out));
}

TensorElement Normalizer::operator()(const TensorElement& t) const {
    TensorElement out(p_->table());
    for (const auto& [key, c] : t.terms()) {
        const auto& left = wordTerms(key.first);
        const auto& right = wordTerms(key.second);
        for (const auto& [u, a] : left)
            for (const auto& [v, b] : right) out.addTerm(u, v, c * a * b);
    }
    return out;
}

AlgebraElement Normalizer::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
    return (*this)(a * b);
}

AlgebraElement Normalizer::commutator(const AlgebraElement& a, const AlgebraElement& b) const {
    return (*this)(commutatorFree(a, b));
}

TensorElement Normalizer::multiply(const TensorElement& a, const TensorElement& b) const {
    return (*this)(a * b);
}

AlgebraElement normalForm(const Presentation& p, const AlgebraElement& a) { return Normalizer(p)(a); }

AlgebraElement rewriteAt(const Presentation& p, const Word& w, std::size_t pos) {
    if (pos + 1 >= w.size() || w[pos] <= w[pos + 1])
        throw DomainError("no descent at position " + std::to_string(pos));
    return AlgebraElement(p.table(), stepTerms(p, w, pos));
}

std::pair<int, std::size_t> reductionMeasure(const Presentation& p, const Word& w) {
    return {p.table()->weight(w), w.inversions()};
}

ConfluenceReport checkConfluence(const Presentation& p) {
    ConfluenceReport report;
    const Normalizer nf(p);
    const auto n = static_cast<Letter>(p.generatorCount());
    for (Letter i = 0; i < n; ++i) {
        for (Letter j = 0; j < i; ++j) {
            for (Letter k = 0; k < j; ++k) {
                const Word w{i, j, k};
                AlgebraElement left = nf(rewriteAt(p, w, 0));
                AlgebraElement right = nf(rewriteAt(p, w, 1));
                ++report.triplesChecked;
                if (!(left == right)) {
                    report.confluent = false;
                    report.failures.push_back({w, std::move(left), std::move(right)});
                }
            }
        }
    }
    return report;
}

void requireRelationClosed(const Presentation& p, const SubalgebraSpec& sub) {
    for (Letter l : sub.generators)
        if (l >= p.generatorCount()) throw InvalidSubalgebra("generator index out of range");
    for (const Relation& r : p.relations()) {
        if (!sub.contains(r.hi) || !sub.contains(r.lo)) continue;
        if (!r.rhs.supportedOn(sub.generators))
            throw InvalidSubalgebra("'" + sub.label + "' is not closed under relation [" +
                                    p.generator(r.hi).name + "," + p.generator(r.lo).name + "]");
    }
}

bool isMember(const Normalizer& nf, const AlgebraElement& a, const SubalgebraSpec& sub) {
    requireRelationClosed(nf.presentation(), sub);
    return nf(a).supportedOn(sub.generators);
}

bool isMember(const Presentation& p, const AlgebraElement& a, const SubalgebraSpec& sub) {
    return isMember(Normalizer(p), a, sub);
}

}  // namespace hopfgk
