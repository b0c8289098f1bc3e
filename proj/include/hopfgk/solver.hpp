#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hopfgk/coalgebra.hpp"

namespace hopfgk {

/// All normal-form words of filtration degree ≤ degreeBound, graded-lex
/// ordered (degree first, then letters).
struct FilteredBasis {
    SymbolTablePtr table;
    int degreeBound = 0;
    Filtration filtration = Filtration::Weighted;
    std::vector<Word> words;
    std::map<Word, std::size_t> indexOf;

    /// Builds a basis over an explicit word list (any order).
    static FilteredBasis fromWords(SymbolTablePtr table, int degreeBound, Filtration f,
                                   std::vector<Word> words);
};

/// Linearly independent elements spanning a subspace.
struct SubspaceBasis {
    std::vector<AlgebraElement> vectors;

    std::size_t dim() const { return vectors.size(); }
    bool contains(const AlgebraElement& a) const;
};

/// Enumeration cap: HOPFGK_MAX_BASIS if set, else 2,000,000 words.
std::size_t defaultEnumerationCap();

/// 2 · (largest declared degree) + 1.
int defaultDegreeBound(const Presentation& p);

/// Throws ResourceLimit when more than `cap` words would be produced.
FilteredBasis enumerateBasis(const Presentation& p, int degreeBound,
                             Filtration f = Filtration::Weighted,
                             std::size_t cap = defaultEnumerationCap());

/// A linear map into a product of copies of H⊗H.
using LinearMap = std::function<std::vector<TensorElement>(const AlgebraElement&)>;

/// Exact kernel of `map` restricted to span(basis). With augmentationZero
/// the unit word is dropped, i.e. the solve runs on the ε = 0 slice.
SubspaceBasis kernelOf(const LinearMap& map, const FilteredBasis& basis, bool augmentationZero = true);

/// P(H) ∩ (filtration piece of the given bound).
SubspaceBasis primitiveSpace(const HopfAlgebra& hopf, int degreeBound);
SubspaceBasis primitiveSpace(const Presentation& p, int degreeBound);

/// P₂(H) ∩ (filtration piece): kernel of c ↦ (δc + τδc, δc modulo P⊗P).
SubspaceBasis antiCocommutativeSpace(const HopfAlgebra& hopf, int degreeBound,
                                     const SubspaceBasis& primitives);
SubspaceBasis antiCocommutativeSpace(const Presentation& p, int degreeBound);

}  // namespace hopfgk
