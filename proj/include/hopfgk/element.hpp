#pragma once

#include <map>
#include <string>

#include "hopfgk/scalar.hpp"
#include "hopfgk/word.hpp"

namespace hopfgk {

/// Finite linear combination of words with nonzero rational coefficients.
///
/// Every element carries the symbol table it was built over; arithmetic
/// between elements of different tables throws PresentationMismatch.
/// Words are not necessarily in normal form; see rewrite.hpp.
class AlgebraElement {
public:
    using Terms = std::map<Word, Scalar>;

    explicit AlgebraElement(SymbolTablePtr table) : table_(std::move(table)) {}
    AlgebraElement(SymbolTablePtr table, Terms terms);

    static AlgebraElement zero(SymbolTablePtr table) { return AlgebraElement(std::move(table)); }
    static AlgebraElement one(SymbolTablePtr table) { return scalar(std::move(table), 1); }
    static AlgebraElement scalar(SymbolTablePtr table, const Scalar& c);
    static AlgebraElement word(SymbolTablePtr table, const Word& w, const Scalar& c = 1);
    static AlgebraElement generator(SymbolTablePtr table, Letter l);
    /// Generator by name; throws DomainError if unknown.
    static AlgebraElement generator(SymbolTablePtr table, std::string_view name);

    const SymbolTablePtr& table() const { return table_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool isZero() const { return terms_.empty(); }
    Scalar coefficient(const Word& w) const;
    /// Coefficient of the unit word (the counit, since all generators have ε = 0).
    Scalar counit() const { return coefficient(Word{}); }
    bool isNormal() const;
    /// Largest weight of a word in the support; -1 for zero.
    int degree(Filtration f = Filtration::Weighted) const;
    /// True iff every letter of every word is in `letters` (sorted).
    bool supportedOn(std::span<const Letter> letters) const;

    void addTerm(const Word& w, const Scalar& c);
    void checkCompatible(const AlgebraElement& other) const;

    AlgebraElement operator-() const;
    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    AlgebraElement& operator*=(const Scalar& c);

    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(const Scalar& c, AlgebraElement a) { return a *= c; }
    friend AlgebraElement operator*(AlgebraElement a, const Scalar& c) { return a *= c; }
    /// Free (concatenation) product.
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

    /// Human-readable form, e.g. "x1*z - 1/2*x2 + 3".
    std::string str() const;

private:
    SymbolTablePtr table_;
    Terms terms_;
};

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement multiplyFree(const AlgebraElement& a, const AlgebraElement& b);
/// ab - ba in the free algebra.
AlgebraElement commutatorFree(const AlgebraElement& a, const AlgebraElement& b);

}  // namespace hopfgk
