#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hopfgk/presentation.hpp"

namespace hopfgk {

/// Which structural fact certifies exactGK.
enum class GrowthCertificate {
    EnvelopingAlgebra,             ///< no degree-2 generators: H = U(g)
    NormalPrimitiveSubalgebra,     ///< U_H normal, so GK.dim = dim P₂(H)
    AlmostCentralizingExtension,   ///< H almost centralizing over a sub A: GK.dim(A) + d
    PbwCount,                      ///< confluent PBW basis, no sharper certificate found
    None,                          ///< not confluent: fitted estimate only
};

std::string certificateName(GrowthCertificate c);

struct GrowthReport {
    Filtration filtration = Filtration::Standard;
    int maxDegree = 0;
    /// dims[n] = number of normal words of filtration degree ≤ n, n = 0..maxDegree.
    std::vector<std::size_t> dims;
    /// The same count under the weighted filtration (primitives 1, others 2).
    std::vector<std::size_t> weightedDims;
    /// Closed-form multiset count of PBW monomials; present when confluent.
    std::optional<std::vector<std::size_t>> pbwCount;
    double fittedExponent = 0.0;
    std::optional<int> exactGK;
    bool estimateOnly = false;
    GrowthCertificate certificate = GrowthCertificate::None;
    /// For AlmostCentralizingExtension: the base subalgebra, its GK dimension
    /// and the number of complement generators d.
    std::optional<SubalgebraSpec> base;
    int baseGK = 0;
    int extensionRank = 0;
};

/// Number of multisets of generators with total weight ≤ n, for n = 0..maxDegree.
std::vector<std::size_t> pbwMonomialCount(const SymbolTable& table, int maxDegree, Filtration f);

/// Growth exponent of a dimension sequence: least-squares fit of
/// log dims(n) ≈ c + e·log n + a₁/n + a₂/n² + a₃/n³ over n ≥ max(1, N/2).
/// The 1/n terms absorb the lower-order terms of a polynomial count, which a
/// bare log-log slope cannot at N ≈ 12.
double fittedExponent(const std::vector<std::size_t>& dims);

GrowthReport growthFunction(const Presentation& p, int maxDegree, Filtration f = Filtration::Standard);

struct GkVersusP2Report {
    bool inClass = false;         ///< confluent, has a degree-2 generator
    bool hypothesis = false;      ///< U_H normal (adjoint check and bracket criterion)
    std::string note;
    std::optional<int> exactGK;
    std::size_t dimP = 0;
    std::size_t dimP2 = 0;
    int degreeBound = 0;
    bool agreement = false;       ///< exactGK == dim P₂
    /// False only when the hypothesis holds and the numbers disagree.
    bool consistent() const { return !(inClass && hypothesis) || agreement; }
};

/// Compares exactGK with dim P₂(H) and evaluates whether U_H is normal.
GkVersusP2Report gkVersusP2(const Presentation& p);

}  // namespace hopfgk
