#pragma once

#include <cstddef>
#include <unordered_map>
#include <utility>

#include "hopfgk/presentation.hpp"

namespace hopfgk {

/// Reduces elements to PBW normal form (nondecreasing words) by repeatedly
/// rewriting the leftmost descent. Normal forms of words are memoized, so a
/// Normalizer should be reused for many calls; it is not safe to share one
/// instance between threads.
class Normalizer {
public:
    static constexpr std::size_t kDefaultBudget = 4'000'000;

    explicit Normalizer(const Presentation& p, std::size_t budget = kDefaultBudget)
        : p_(&p), budget_(budget) {}

    const Presentation& presentation() const { return *p_; }

    AlgebraElement operator()(const AlgebraElement& a) const;
    AlgebraElement word(const Word& w) const;
    /// Normalizes both legs.
    TensorElement operator()(const TensorElement& t) const;

    /// Normal-form product and commutator.
    AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;
    AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b) const;
    TensorElement multiply(const TensorElement& a, const TensorElement& b) const;

    std::size_t rewriteSteps() const { return steps_; }

private:
    const AlgebraElement::Terms& wordTerms(const Word& w) const;

    const Presentation* p_;
    std::size_t budget_;
    mutable std::size_t steps_ = 0;
    mutable std::unordered_map<Word, AlgebraElement::Terms, WordHash> cache_;
};

AlgebraElement normalForm(const Presentation& p, const AlgebraElement& a);

/// One rewrite step at position `pos` (requires w[pos] > w[pos+1]).
AlgebraElement rewriteAt(const Presentation& p, const Word& w, std::size_t pos);

/// (weighted degree, inversion count); strictly decreases along every
/// rewrite step of a filtration-compatible presentation.
std::pair<int, std::size_t> reductionMeasure(const Presentation& p, const Word& w);

/// Resolves every overlap g_i g_j g_k (i > j > k) both ways.
ConfluenceReport checkConfluence(const Presentation& p);

/// Throws InvalidSubalgebra unless every relation between two generators of
/// `sub` has its rhs supported on `sub`.
void requireRelationClosed(const Presentation& p, const SubalgebraSpec& sub);

/// True iff normalForm(a) only uses generators of `sub`.
bool isMember(const Presentation& p, const AlgebraElement& a, const SubalgebraSpec& sub);
bool isMember(const Normalizer& nf, const AlgebraElement& a, const SubalgebraSpec& sub);

}  // namespace hopfgk
