#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hopfgk {

using Letter = std::uint32_t;

/// Monomial in the free algebra: a sequence of generator indices. The empty
/// word is the unit. Ordered shortlex (length first, then lexicographic).
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}

    static Word letter(Letter l) { return Word({l}); }

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }
    std::span<const Letter> letters() const { return letters_; }

    /// Normal form for the PBW ordering: letter indices nondecreasing.
    bool isNondecreasing() const;
    /// Number of pairs i<j with letters[i] > letters[j].
    std::size_t inversions() const;
    /// Index of the first position i with letters[i] > letters[i+1].
    std::optional<std::size_t> firstDescent() const;

    Word concat(const Word& other) const;
    Word slice(std::size_t from, std::size_t to) const;
    Word reversed() const;

    friend Word operator*(const Word& a, const Word& b) { return a.concat(b); }
    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b);

private:
    std::vector<Letter> letters_;
};

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept;
};

struct GeneratorSymbol {
    std::string name;
    Letter index = 0;
    int degree = 1;  ///< declared coradical degree: 1 primitive, 2 anti-cocommutative

    friend bool operator==(const GeneratorSymbol&, const GeneratorSymbol&) = default;
};

/// Which per-letter weight a degree count uses.
enum class Filtration {
    Weighted,  ///< letters weigh their declared degree
    Standard,  ///< every letter weighs 1 (V = k + span of generators)
};

class SymbolTable;
using SymbolTablePtr = std::shared_ptr<const SymbolTable>;

/// Ordered generator declarations shared by every element of a presentation.
class SymbolTable {
public:
    /// Throws MalformedPresentation on duplicate names, bad identifiers or
    /// degrees outside {1, 2}.
    static SymbolTablePtr make(const std::vector<std::pair<std::string, int>>& generators);

    std::size_t size() const { return generators_.size(); }
    const GeneratorSymbol& operator[](Letter i) const { return generators_.at(i); }
    const std::vector<GeneratorSymbol>& generators() const { return generators_; }
    std::optional<Letter> find(std::string_view name) const;

    int weight(Letter l, Filtration f) const {
        return f == Filtration::Weighted ? generators_[l].degree : 1;
    }
    int weight(const Word& w, Filtration f = Filtration::Weighted) const;
    int maxDegree() const;

    std::string spell(const Word& w) const;  ///< "x1*x2", "1" for the unit

    /// Same generator names and degrees in the same order.
    bool sameAs(const SymbolTable& other) const { return generators_ == other.generators_; }

private:
    std::vector<GeneratorSymbol> generators_;
    std::unordered_map<std::string, Letter> byName_;
};

bool isIdentifier(std::string_view s);

}  // namespace hopfgk
