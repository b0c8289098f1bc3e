#include "hopfgk/tensor.hpp"

#include "hopfgk/error.hpp"

namespace hopfgk {

namespace {

void accumulate(TensorElement::Terms& terms, const TensorElement::Key& k, const Scalar& c) {
    if (c.isZero()) return;
    auto [it, inserted] = terms.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) terms.erase(it);
    }
}

}  // namespace

TensorElement TensorElement::pure(const AlgebraElement& left, const AlgebraElement& right) {
    left.checkCompatible(right);
    TensorElement out(left.table());
    for (const auto& [u, a] : left.terms())
        for (const auto& [v, b] : right.terms()) accumulate(out.terms_, {u, v}, a * b);
    return out;
}

TensorElement TensorElement::pure(SymbolTablePtr table, const Word& left, const Word& right,
                                  const Scalar& c) {
    TensorElement out(std::move(table));
    out.addTerm(left, right, c);
    return out;
}

Scalar TensorElement::coefficient(const Word& left, const Word& right) const {
    const auto it = terms_.find({left, right});
    return it == terms_.end() ? Scalar(0) : it->second;
}

void TensorElement::addTerm(const Word& left, const Word& right, const Scalar& c) {
    accumulate(terms_, {left, right}, c);
}

void TensorElement::checkCompatible(const TensorElement& other) const {
    if (table_ != other.table_ && !(table_ && other.table_ && table_->sameAs(*other.table_)))
        throw PresentationMismatch();
}

TensorElement TensorElement::twist() const {
    TensorElement out(table_);
    for (const auto& [k, c] : terms_) out.terms_.emplace(Key{k.second, k.first}, c);
    return out;
}

TensorElement TensorElement::operator-() const {
    TensorElement out(table_);
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
    checkCompatible(o);
    for (const auto& [k, c] : o.terms_) accumulate(terms_, k, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
    checkCompatible(o);
    for (const auto& [k, c] : o.terms_) accumulate(terms_, k, -c);
    return *this;
}

TensorElement& TensorElement::operator*=(const Scalar& c) {
    if (c.isZero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
    a.checkCompatible(b);
    TensorElement out(a.table_);
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            accumulate(out.terms_, {ka.first * kb.first, ka.second * kb.second}, ca * cb);
    return out;
}

bool operator==(const TensorElement& a, const TensorElement& b) {
    a.checkCompatible(b);
    return a.terms_ == b.terms_;
}

std::string TensorElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        Scalar mag = c.sign() < 0 ? -c : c;
        if (first)
            out += c.sign() < 0 ? "-" : "";
        else
            out += c.sign() < 0 ? " - " : " + ";
        first = false;
        if (!mag.isOne()) out += mag.str() + "*";
        out += table_->spell(k.first) + " ox " + table_->spell(k.second);
    }
    return out;
}

}  // namespace hopfgk
