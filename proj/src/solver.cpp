#include "hopfgk/solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <tuple>

#include "hopfgk/error.hpp"
#include "hopfgk/linalg.hpp"

namespace hopfgk {

namespace {

bool gradedLess(const SymbolTable& t, Filtration f, const Word& a, const Word& b) {
    const int da = t.weight(a, f);
    const int db = t.weight(b, f);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void extend(const SymbolTable& t, Filtration f, int budget, Letter from, std::vector<Letter>& prefix,
            std::vector<Word>& out, std::size_t cap) {
    if (out.size() >= cap)
        throw ResourceLimit("basis enumeration exceeds the cap of " + std::to_string(cap) + " words");
    out.emplace_back(prefix);
    for (Letter l = from; l < t.size(); ++l) {
        const int w = t.weight(l, f);
        if (w > budget) continue;
        prefix.push_back(l);
        extend(t, f, budget - w, l, prefix, out, cap);
        prefix.pop_back();
    }
}

// Reduced row echelon form of a subspace, keyed by pivot word. reduce(a)
// clears every pivot coordinate; the remainder is zero iff a lies in the
// subspace, so its coordinates are a basis of the annihilator.
class SubspaceReducer {
public:
    explicit SubspaceReducer(const SubspaceBasis& sub) {
        for (const auto& v : sub.vectors) {
            AlgebraElement r = reduce(v);
            if (r.isZero()) continue;
            const auto [pivot, lead] = *r.terms().begin();
            r *= Scalar(1) / lead;
            for (auto& [w, other] : pivots_) {
                const Scalar c = other.coefficient(pivot);
                if (!c.isZero()) other -= c * r;
            }
            pivots_.emplace_back(pivot, std::move(r));
        }
    }

    AlgebraElement reduce(AlgebraElement a) const {
        for (const auto& [w, v] : pivots_) {
            const Scalar c = a.coefficient(w);
            if (!c.isZero()) a -= c * v;
        }
        return a;
    }

private:
    std::vector<std::pair<Word, AlgebraElement>> pivots_;
};

}  // namespace

FilteredBasis FilteredBasis::fromWords(SymbolTablePtr table, int degreeBound, Filtration f,
                                       std::vector<Word> words) {
    FilteredBasis b;
    b.table = std::move(table);
    b.degreeBound = degreeBound;
    b.filtration = f;
    b.words = std::move(words);
    for (std::size_t i = 0; i < b.words.size(); ++i)
        if (!b.indexOf.emplace(b.words[i], i).second) throw DomainError("duplicate word in basis");
    return b;
}

bool SubspaceBasis::contains(const AlgebraElement& a) const { return inSpan(vectors, a); }

std::size_t defaultEnumerationCap() {
    if (const char* env = std::getenv("HOPFGK_MAX_BASIS")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 2'000'000;
}

int defaultDegreeBound(const Presentation& p) { return 2 * p.table()->maxDegree() + 1; }

FilteredBasis enumerateBasis(const Presentation& p, int degreeBound, Filtration f, std::size_t cap) {
    if (degreeBound < 0) throw DomainError("negative degree bound");
    const SymbolTable& t = *p.table();
    std::vector<Word> words;
    std::vector<Letter> prefix;
    extend(t, f, degreeBound, 0, prefix, words, cap);
    std::sort(words.begin(), words.end(),
              [&](const Word& a, const Word& b) { return gradedLess(t, f, a, b); });
    return FilteredBasis::fromWords(p.table(), degreeBound, f, std::move(words));
}

SubspaceBasis kernelOf(const LinearMap& map, const FilteredBasis& basis, bool augmentationZero) {
    std::vector<Word> domain;
    for (const Word& w : basis.words)
        if (!(augmentationZero && w.empty())) domain.push_back(w);

    using Key = std::tuple<std::size_t, Word, Word>;
    std::map<Key, SparseEchelon::Row> rows;
    for (std::size_t j = 0; j < domain.size(); ++j) {
        const auto parts = map(AlgebraElement::word(basis.table, domain[j]));
        for (std::size_t part = 0; part < parts.size(); ++part)
            for (const auto& [k, c] : parts[part].terms()) rows[Key{part, k.first, k.second}].emplace(j, c);
    }
    SparseEchelon e(domain.size());
    for (auto& [key, row] : rows) e.addRow(std::move(row));

    SubspaceBasis out;
    for (const auto& v : e.kernelBasis()) {
        AlgebraElement e(basis.table);
        for (std::size_t j = 0; j < v.size(); ++j) e.addTerm(domain[j], v[j]);
        out.vectors.push_back(std::move(e));
    }
    return out;
}

SubspaceBasis primitiveSpace(const HopfAlgebra& hopf, int degreeBound) {
    const FilteredBasis basis = enumerateBasis(hopf.presentation(), degreeBound);
    return kernelOf([&](const AlgebraElement& a) { return std::vector<TensorElement>{hopf.delta(a)}; },
                    basis);
}

SubspaceBasis primitiveSpace(const Presentation& p, int degreeBound) {
    return primitiveSpace(HopfAlgebra(p), degreeBound);
}

SubspaceBasis antiCocommutativeSpace(const HopfAlgebra& hopf, int degreeBound,
                                     const SubspaceBasis& primitives) {
    const FilteredBasis basis = enumerateBasis(hopf.presentation(), degreeBound);
    const SubspaceReducer reducer(primitives);
    const SymbolTablePtr& t = hopf.table();
    // δc ∈ P⊗P iff both legs reduce to zero modulo P.
    auto residual = [&](const AlgebraElement& c) {
        const TensorElement d = hopf.delta(c);
        std::map<Word, AlgebraElement> byRight, byLeft;
        for (const auto& [key, x] : d.terms()) {
            byRight.try_emplace(key.second, t).first->second.addTerm(key.first, x);
            byLeft.try_emplace(key.first, t).first->second.addTerm(key.second, x);
        }
        TensorElement leftOut(t), rightOut(t);
        for (const auto& [v, left] : byRight) {
            const AlgebraElement r = reducer.reduce(left);
            for (const auto& [u, x] : r.terms()) leftOut.addTerm(u, v, x);
        }
        for (const auto& [u, right] : byLeft) {
            const AlgebraElement r = reducer.reduce(right);
            for (const auto& [v, x] : r.terms()) rightOut.addTerm(u, v, x);
        }
        return std::vector<TensorElement>{d + d.twist(), std::move(leftOut), std::move(rightOut)};
    };
    return kernelOf(residual, basis);
}

SubspaceBasis antiCocommutativeSpace(const Presentation& p, int degreeBound) {
    const HopfAlgebra hopf(p);
    return antiCocommutativeSpace(hopf, degreeBound, primitiveSpace(hopf, degreeBound));
}

}  // namespace hopfgk
