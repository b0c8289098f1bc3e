#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hopfgk/rewrite.hpp"

namespace hopfgk {

/// Σ h₁ ⊗ h₂ as an explicit list of pure tensors.
struct SweedlerDecomposition {
    std::vector<std::pair<AlgebraElement, AlgebraElement>> pairs;

    TensorElement reassemble(const SymbolTablePtr& table) const;
};

/// Coalgebra and antipode structure of a confluent presentation.
///
/// Δ is the algebra morphism with Δ(g) = g⊗1 + 1⊗g + δ-tail(g) on
/// generators; S is the anti-morphism determined on generators by the
/// convolution identity m∘(S⊗id)∘Δ(g) = 0. Both are memoized per word.
/// Holds a reference to the presentation, which must outlive it.
class HopfAlgebra {
public:
    /// Throws NonConfluentError when `p` is not confluent.
    explicit HopfAlgebra(const Presentation& p);

    const Presentation& presentation() const { return *p_; }
    const Normalizer& normalizer() const { return nf_; }
    const SymbolTablePtr& table() const { return p_->table(); }

    AlgebraElement normalize(const AlgebraElement& a) const { return nf_(a); }
    AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const {
        return nf_.multiply(a, b);
    }
    AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b) const {
        return nf_.commutator(a, b);
    }
    TensorElement multiply(const TensorElement& a, const TensorElement& b) const {
        return nf_.multiply(a, b);
    }
    TensorElement commutator(const TensorElement& a, const TensorElement& b) const;

    /// Δ(a); accepts non-normal words (Δ is applied letterwise, legs normalized).
    TensorElement coproduct(const AlgebraElement& a) const;
    /// δ(a) = Δ(a) − a⊗1 − 1⊗a.
    TensorElement delta(const AlgebraElement& a) const;
    TensorElement deltaCC(const AlgebraElement& a) const;
    TensorElement deltaAC(const AlgebraElement& a) const;
    Scalar counit(const AlgebraElement& a) const;
    AlgebraElement antipode(const AlgebraElement& a) const;
    SweedlerDecomposition sweedler(const AlgebraElement& h) const;

private:
    const TensorElement& coproductWord(const Word& w) const;
    const AlgebraElement& antipodeWord(const Word& w) const;
    AlgebraElement antipodeGenerator(Letter g) const;

    const Presentation* p_;
    Normalizer nf_;
    mutable std::unordered_map<Word, TensorElement, WordHash> coproductCache_;
    mutable std::unordered_map<Word, AlgebraElement, WordHash> antipodeCache_;
    mutable std::vector<bool> antipodeInProgress_;
};

TensorElement coproduct(const Presentation& p, const AlgebraElement& a);
TensorElement deltaMap(const Presentation& p, const AlgebraElement& a);
TensorElement deltaCC(const Presentation& p, const AlgebraElement& a);
TensorElement deltaAC(const Presentation& p, const AlgebraElement& a);
AlgebraElement antipode(const Presentation& p, const AlgebraElement& a);
Scalar counit(const Presentation& p, const AlgebraElement& a);
SweedlerDecomposition sweedler(const Presentation& p, const AlgebraElement& h);

enum class HopfAxiom {
    RelationCompatibility,  ///< Δ(hi·lo − lo·hi − rhs) = 0 in H⊗H
    Coassociativity,
    Counit,
    Antipode,               ///< m∘(S⊗id)∘Δ(g) = ε(g)1 = m∘(id⊗S)∘Δ(g)
    TailAntisymmetry,       ///< τ(δg) = −δg with primitive generator legs
};

std::string axiomName(HopfAxiom a);

struct AxiomFailure {
    HopfAxiom axiom;
    std::string subject;  ///< generator or relation checked
    std::string witness;  ///< the nonzero residual
};

struct AxiomReport {
    std::size_t checks = 0;
    std::vector<AxiomFailure> failures;

    bool passed() const { return failures.empty(); }
    bool failed(HopfAxiom a) const;
};

/// Checks every axiom on every generator and relation, exactly.
/// Throws NonConfluentError for non-confluent input.
AxiomReport verifyHopfAxioms(const Presentation& p);

}  // namespace hopfgk
