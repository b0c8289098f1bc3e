#include "hopfgk/element.hpp"

#include <algorithm>

#include "hopfgk/error.hpp"

namespace hopfgk {

namespace {

void accumulate(std::map<Word, Scalar>& terms, const Word& w, const Scalar& c) {
    if (c.isZero()) return;
    auto [it, inserted] = terms.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) terms.erase(it);
    }
}

bool sameTable(const SymbolTablePtr& a, const SymbolTablePtr& b) {
    return a == b || (a && b && a->sameAs(*b));
}

}  // namespace

AlgebraElement::AlgebraElement(SymbolTablePtr table, Terms terms) : table_(std::move(table)) {
    for (const auto& [w, c] : terms) accumulate(terms_, w, c);
}

AlgebraElement AlgebraElement::scalar(SymbolTablePtr table, const Scalar& c) {
    return word(std::move(table), Word{}, c);
}

AlgebraElement AlgebraElement::word(SymbolTablePtr table, const Word& w, const Scalar& c) {
    for (Letter l : w)
        if (l >= table->size()) throw DomainError("letter index out of range");
    AlgebraElement out(std::move(table));
    out.addTerm(w, c);
    return out;
}

AlgebraElement AlgebraElement::generator(SymbolTablePtr table, Letter l) {
    return word(std::move(table), Word::letter(l));
}

AlgebraElement AlgebraElement::generator(SymbolTablePtr table, std::string_view name) {
    const auto l = table->find(name);
    if (!l) throw DomainError("unknown generator '" + std::string(name) + "'");
    return generator(std::move(table), *l);
}

Scalar AlgebraElement::coefficient(const Word& w) const {
    const auto it = terms_.find(w);
    return it == terms_.end() ? Scalar(0) : it->second;
}

bool AlgebraElement::isNormal() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.first.isNondecreasing(); });
}

int AlgebraElement::degree(Filtration f) const {
    int d = -1;
    for (const auto& [w, c] : terms_) d = std::max(d, table_->weight(w, f));
    return d;
}

bool AlgebraElement::supportedOn(std::span<const Letter> letters) const {
    for (const auto& [w, c] : terms_)
        for (Letter l : w)
            if (!std::binary_search(letters.begin(), letters.end(), l)) return false;
    return true;
}

void AlgebraElement::addTerm(const Word& w, const Scalar& c) { accumulate(terms_, w, c); }

void AlgebraElement::checkCompatible(const AlgebraElement& other) const {
    if (!sameTable(table_, other.table_)) throw PresentationMismatch();
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement out(table_);
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
    return out;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    checkCompatible(o);
    for (const auto& [w, c] : o.terms_) accumulate(terms_, w, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    checkCompatible(o);
    for (const auto& [w, c] : o.terms_) accumulate(terms_, w, -c);
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Scalar& c) {
    if (c.isZero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    a.checkCompatible(b);
    AlgebraElement out(a.table_);
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) accumulate(out.terms_, wa * wb, ca * cb);
    return out;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    a.checkCompatible(b);
    return a.terms_ == b.terms_;
}

std::string AlgebraElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        Scalar mag = c.sign() < 0 ? -c : c;
        if (first)
            out += c.sign() < 0 ? "-" : "";
        else
            out += c.sign() < 0 ? " - " : " + ";
        first = false;
        if (w.empty()) {
            out += mag.str();
        } else {
            if (!mag.isOne()) out += mag.str() + "*";
            out += table_->spell(w);
        }
    }
    return out;
}

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) { return a + b; }

AlgebraElement multiplyFree(const AlgebraElement& a, const AlgebraElement& b) { return a * b; }

AlgebraElement commutatorFree(const AlgebraElement& a, const AlgebraElement& b) {
    return a * b - b * a;
}

}  // namespace hopfgk
