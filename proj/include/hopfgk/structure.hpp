#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hopfgk/solver.hpp"

namespace hopfgk {

/// ad_l[h](a) = Σ h₁·a·S(h₂), normalized.
AlgebraElement adjointLeft(const HopfAlgebra& hopf, const AlgebraElement& h, const AlgebraElement& a);
/// ad_r[h](a) = Σ S(h₁)·a·h₂, normalized.
AlgebraElement adjointRight(const HopfAlgebra& hopf, const AlgebraElement& h, const AlgebraElement& a);
AlgebraElement adjointLeft(const Presentation& p, const AlgebraElement& h, const AlgebraElement& a);
AlgebraElement adjointRight(const Presentation& p, const AlgebraElement& h, const AlgebraElement& a);

enum class Side { Left, Right };

struct NormalityWitness {
    AlgebraElement actor;
    AlgebraElement target;
    AlgebraElement value;  ///< the adjoint image, which leaves the subalgebra
    Side side;
};

struct NormalityReport {
    bool isNormal = true;
    std::size_t checks = 0;
    std::vector<NormalityWitness> witnesses;
};

struct NormalityOptions {
    /// Check every normal word of H (actors) against every normal word of the
    /// subalgebra (targets) up to `degreeBound`, instead of generators only.
    bool fullElements = false;
    int degreeBound = 3;
};

/// Stability of `sub` under both adjoint actions. Generator checks suffice
/// because ad_l[bc] = ad_l[c]∘ad_l[b]; fullElements audits that reduction.
NormalityReport checkNormal(const HopfAlgebra& hopf, const SubalgebraSpec& sub, NormalityOptions options = {});
NormalityReport checkNormal(const Presentation& p, const SubalgebraSpec& sub, NormalityOptions options = {});

/// [t, g] ⊂ g for every degree-2 generator t and degree-1 generator g, i.e.
/// each such bracket is a linear combination of degree-1 generators.
/// Throws CriterionInapplicable when the degree-1 generators do not span
/// P(H) at the default bound.
bool bracketCriterion(const HopfAlgebra& hopf);
bool bracketCriterion(const Presentation& p);

struct ACEReport {
    SubalgebraSpec sub;
    std::vector<Letter> complement;
    /// Violations of "δ(h_i) ∈ A⊗A"; when nonempty the conditions are not evaluated.
    std::vector<std::string> preconditionFailures;
    bool commutesIntoSub = true;     ///< [a, h_i] ∈ A for every generator a of A
    bool bracketsInModule = true;    ///< [h_i, h_j] ∈ Σ h_m A + A
    std::vector<std::string> witnesses;

    bool preconditionsHold() const { return preconditionFailures.empty(); }
    bool passed() const { return preconditionsHold() && commutesIntoSub && bracketsInModule; }
};

/// Whether H is an almost centralizing extension of `sub`, generated over it
/// by the remaining generators. Membership in Σ h_m A + A is decided by exact
/// linear algebra over words of degree ≤ degreeBound.
ACEReport checkAlmostCentralizing(const HopfAlgebra& hopf, const SubalgebraSpec& sub, int degreeBound = 4);
ACEReport checkAlmostCentralizing(const Presentation& p, const SubalgebraSpec& sub, int degreeBound = 4);

struct EquivalenceReport {
    bool almostCentralizing = false;  ///< left side, from checkAlmostCentralizing
    bool normal = false;              ///< right side, part 1 (adjoint actions)
    bool deltaCondition = false;      ///< right side, part 2: δ([h_i,h_j]) ∈ Σ δ(h_m A) + δ(A)
    bool agree = false;
};

/// Evaluates "almost centralizing" and "normal and δ-condition" on
/// independent code paths and compares them. Throws CriterionInapplicable
/// when a complement generator has δ outside A⊗A.
EquivalenceReport almostCentralizingEquivalence(const HopfAlgebra& hopf, const SubalgebraSpec& sub, int degreeBound = 4);
EquivalenceReport almostCentralizingEquivalence(const Presentation& p, const SubalgebraSpec& sub, int degreeBound = 4);

struct DeltaPartsReport {
    bool ccInDeltaU3 = false;  ///< δ_cc([s,t]) ∈ δ(U₃)
    bool acInDeltaP2 = false;  ///< δ_ac([s,t]) ∈ δ(P₂(H))
    bool holds() const { return ccInDeltaU3 == acInDeltaP2; }
};

/// The biconditional δ_cc([s,t]) ∈ δ(U₃) ⇔ δ_ac([s,t]) ∈ δ(P₂), with U₃
/// the span of nonempty degree-1 words of length ≤ 3. `p2` must be
/// antiCocommutativeSpace at a bound covering s and t; inputs outside its
/// span throw DomainError.
DeltaPartsReport deltaPartsCheck(const HopfAlgebra& hopf, const AlgebraElement& s, const AlgebraElement& t,
                           const SubspaceBasis& p2);
DeltaPartsReport deltaPartsCheck(const Presentation& p, const AlgebraElement& s, const AlgebraElement& t,
                           int degreeBound = 4);

/// δ_cc([s,t]) == [δ(s), δ(t)] in H⊗H.
bool deltaBracketIdentity(const HopfAlgebra& hopf, const AlgebraElement& s, const AlgebraElement& t);

/// Randomized runs of the bracket identity and the δ_cc/δ_ac biconditional on
/// pairs drawn from P₂(H), plus the bracket criterion against the full adjoint
/// normality check of U_H. Deterministic for a given seed.
struct BracketPropertyReport {
    bool inClass = false;  ///< confluent with at least one degree-2 generator
    std::size_t pairs = 0;
    std::size_t bracketIdentityFailures = 0;
    std::size_t biconditionalFailures = 0;
    std::optional<bool> bracketCriterion;  ///< empty when inapplicable
    bool normalFull = false;
    std::vector<std::string> witnesses;

    bool criterionAgrees() const { return !bracketCriterion || *bracketCriterion == normalFull; }
    bool passed() const { return bracketIdentityFailures == 0 && biconditionalFailures == 0 && criterionAgrees(); }
};

/// Random element Σ c_i b_i of span(basis) with integer c_i in [-3, 3].
AlgebraElement randomCombination(SymbolTablePtr table, const SubspaceBasis& basis, std::mt19937& rng);

BracketPropertyReport bracketProperties(const Presentation& p, std::size_t pairs = 100, std::uint32_t seed = 20240601,
                                    int degreeBound = 4);

}  // namespace hopfgk
