#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hopfgk/element.hpp"
#include "hopfgk/tensor.hpp"

namespace hopfgk {

/// Ordered rewrite rule hi·lo → lo·hi + rhs, with hi > lo in declaration order.
struct Relation {
    Letter hi = 0;
    Letter lo = 0;
    AlgebraElement rhs;
};

struct ConfluenceFailure {
    Word triple;                ///< g_i g_j g_k with i > j > k
    AlgebraElement leftReduct;  ///< rewrite (g_i g_j) first, then normalize
    AlgebraElement rightReduct; ///< rewrite (g_j g_k) first, then normalize
};

struct ConfluenceReport {
    bool confluent = true;
    std::size_t triplesChecked = 0;
    std::vector<ConfluenceFailure> failures;
};

/// A set of generators naming a subalgebra, e.g. U_H (all degree-1 generators).
struct SubalgebraSpec {
    std::vector<Letter> generators;  ///< sorted, unique
    std::string label;

    bool contains(Letter l) const;
};

/// Finite presentation of a connected Hopf algebra generated by primitive
/// (degree 1) and anti-cocommutative (degree 2) elements: one commutator
/// relation per pair of generators and a δ-tail for every degree-2 generator.
///
/// Immutable once built. Confluence of the rewrite system is determined at
/// build time; operations that rely on PBW normal forms call requireConfluent.
class Presentation {
public:
    const std::string& name() const { return name_; }
    const SymbolTablePtr& table() const { return table_; }
    std::size_t generatorCount() const { return table_->size(); }
    const GeneratorSymbol& generator(Letter l) const { return (*table_)[l]; }

    /// The rule for the unordered pair {a, b}; a != b.
    const Relation& relation(Letter a, Letter b) const;
    const std::vector<Relation>& relations() const { return relations_; }
    /// [a, b] = ab - ba as given by the relations.
    AlgebraElement bracket(Letter a, Letter b) const;

    /// δ(g) for a generator; zero for degree-1 generators.
    const TensorElement& deltaTail(Letter g) const { return tails_.at(g); }

    std::vector<Letter> generatorsOfDegree(int degree) const;
    SubalgebraSpec primitiveSubalgebra() const;  ///< U_H
    SubalgebraSpec wholeAlgebra() const;
    /// Throws DomainError on unknown names.
    SubalgebraSpec subalgebra(const std::vector<std::string>& names, std::string label = "A") const;

    const ConfluenceReport& confluence() const { return confluence_; }
    bool isConfluent() const { return confluence_.confluent; }
    /// Throws NonConfluentError naming `operation` when the system is not confluent.
    void requireConfluent(std::string_view operation) const;

    AlgebraElement element(Letter l) const { return AlgebraElement::generator(table_, l); }
    AlgebraElement element(std::string_view name) const { return AlgebraElement::generator(table_, name); }
    AlgebraElement one() const { return AlgebraElement::one(table_); }
    AlgebraElement zero() const { return AlgebraElement::zero(table_); }

private:
    friend class PresentationBuilder;
    Presentation() = default;

    std::string name_;
    SymbolTablePtr table_;
    std::vector<Relation> relations_;      // sorted by (hi, lo)
    std::vector<std::size_t> relationAt_;  // hi * n + lo -> index into relations_
    std::vector<TensorElement> tails_;
    ConfluenceReport confluence_;
};

/// Two-phase construction: declare generators, then relations and tails.
/// build() validates the structural invariants and throws
/// MalformedPresentation on the first violation.
class PresentationBuilder {
public:
    explicit PresentationBuilder(std::string name) : name_(std::move(name)) {}

    PresentationBuilder& generator(std::string name, int degree);
    /// Freezes the generator list; further generator() calls throw.
    const SymbolTablePtr& table();

    /// Declares [a, b] = rhs.
    PresentationBuilder& bracket(std::string_view a, std::string_view b, const AlgebraElement& rhs);
    PresentationBuilder& bracket(Letter a, Letter b, const AlgebraElement& rhs);
    PresentationBuilder& deltaTail(std::string_view g, const TensorElement& tail);
    PresentationBuilder& deltaTail(Letter g, const TensorElement& tail);

    Presentation build() const;

private:
    Letter lookup(std::string_view name);

    std::string name_;
    std::vector<std::pair<std::string, int>> pending_;
    SymbolTablePtr table_;
    std::vector<std::optional<Relation>> rules_;  // hi * n + lo
    std::vector<std::optional<TensorElement>> tails_;
};

/// Restriction of `p` to a relation-closed generator subset whose tails live
/// on the subset. Throws InvalidSubalgebra otherwise.
Presentation restrictTo(const Presentation& p, const SubalgebraSpec& sub, std::string name = {});

}  // namespace hopfgk
