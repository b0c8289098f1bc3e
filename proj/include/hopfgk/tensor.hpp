#pragma once

#include <map>
#include <string>
#include <utility>

#include "hopfgk/element.hpp"

namespace hopfgk {

/// Element of H ⊗ H: rational combination of pairs of words.
class TensorElement {
public:
    using Key = std::pair<Word, Word>;
    using Terms = std::map<Key, Scalar>;

    explicit TensorElement(SymbolTablePtr table) : table_(std::move(table)) {}

    static TensorElement pure(const AlgebraElement& left, const AlgebraElement& right);
    static TensorElement pure(SymbolTablePtr table, const Word& left, const Word& right,
                              const Scalar& c = 1);

    const SymbolTablePtr& table() const { return table_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool isZero() const { return terms_.empty(); }
    Scalar coefficient(const Word& left, const Word& right) const;

    void addTerm(const Word& left, const Word& right, const Scalar& c);
    void checkCompatible(const TensorElement& other) const;

    /// τ(v⊗w) = w⊗v.
    TensorElement twist() const;
    /// Applies a linear functional-like map to the left leg: Σ c·f(u)·v.
    /// `leftWeight` returns the scalar the functional assigns to a word.
    template <class F>
    AlgebraElement contractLeft(F&& leftWeight) const {
        AlgebraElement out(table_);
        for (const auto& [key, c] : terms_) {
            const Scalar w = leftWeight(key.first);
            if (!w.isZero()) out.addTerm(key.second, c * w);
        }
        return out;
    }
    template <class F>
    AlgebraElement contractRight(F&& rightWeight) const {
        AlgebraElement out(table_);
        for (const auto& [key, c] : terms_) {
            const Scalar w = rightWeight(key.second);
            if (!w.isZero()) out.addTerm(key.first, c * w);
        }
        return out;
    }

    TensorElement operator-() const;
    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);
    TensorElement& operator*=(const Scalar& c);

    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend TensorElement operator*(const Scalar& c, TensorElement a) { return a *= c; }
    /// Componentwise free product (a⊗b)(c⊗d) = ac⊗bd; legs are not normalized.
    friend TensorElement operator*(const TensorElement& a, const TensorElement& b);

    friend bool operator==(const TensorElement& a, const TensorElement& b);

    std::string str() const;

private:
    SymbolTablePtr table_;
    Terms terms_;
};

}  // namespace hopfgk
