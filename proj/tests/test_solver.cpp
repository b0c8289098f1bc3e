#include <doctest.h>

#include <cstdlib>
#include <random>

#include "hopfgk/builtins.hpp"
#include "hopfgk/error.hpp"
#include "hopfgk/linalg.hpp"
#include "hopfgk/solver.hpp"
#include "oracles.hpp"

using namespace hopfgk;

namespace {

Presentation example() { return parseOrThrow(*findBuiltin("wzz-3-5a")); }

// rows × cols matrix of rank ≤ r: a product of random r-column and r-row factors.
RationalMatrix randomMatrix(std::mt19937& rng, std::size_t rows, std::size_t cols, std::size_t r) {
    std::uniform_int_distribution<long> num(-4, 4), den(1, 3);
    std::vector<std::vector<Scalar>> a(rows, std::vector<Scalar>(r)), b(r, std::vector<Scalar>(cols));
    for (auto& row : a)
        for (auto& x : row) x = Scalar(num(rng), den(rng));
    for (auto& row : b)
        for (auto& x : row) x = Scalar(num(rng), den(rng));
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            for (std::size_t k = 0; k < r; ++k) m.at(i, j) += a[i][k] * b[k][j];
    return m;
}

std::vector<std::vector<mpq_class>> dense(const RationalMatrix& m) {
    std::vector<std::vector<mpq_class>> out(m.rows(), std::vector<mpq_class>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m.at(i, j).value();
    return out;
}

}  // namespace

TEST_CASE("fraction-free elimination agrees with dense Gauss-Jordan") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 7, r = rng() % 5;
        const RationalMatrix m = randomMatrix(rng, rows, cols, r);
        const std::size_t expected = oracle::denseRank(dense(m));
        CHECK(rank(m) == expected);
        const EchelonForm e = fractionFreeEchelon(m);
        CHECK(e.rank() == expected);
        for (std::size_t k = 1; k < e.pivotColumns.size(); ++k) CHECK(e.pivotColumns[k - 1] < e.pivotColumns[k]);

        const auto kernel = kernelBasis(m);
        CHECK(kernel.size() == cols - expected);
        for (const auto& v : kernel)
            for (std::size_t i = 0; i < rows; ++i) {
                Scalar s;
                for (std::size_t j = 0; j < cols; ++j) s += m.at(i, j) * v[j];
                CHECK(s.isZero());
            }
        // Kernel vectors are independent.
        std::vector<std::vector<mpq_class>> k(kernel.size(), std::vector<mpq_class>(cols));
        for (std::size_t a = 0; a < kernel.size(); ++a)
            for (std::size_t j = 0; j < cols; ++j) k[a][j] = kernel[a][j].value();
        CHECK(oracle::denseRank(k) == kernel.size());
    }
}

TEST_CASE("sparse incremental echelon agrees with dense Gauss-Jordan") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 1 + rng() % 9, cols = 1 + rng() % 7, r = rng() % 5;
        const RationalMatrix m = randomMatrix(rng, rows, cols, r);
        SparseEchelon e(cols);
        for (std::size_t i = 0; i < rows; ++i) {
            SparseEchelon::Row row;
            for (std::size_t j = 0; j < cols; ++j) row.emplace(j, m.at(i, j));
            e.addRow(std::move(row));
        }
        CHECK(e.rank() == oracle::denseRank(dense(m)));
        CHECK(e.kernelBasis() == kernelBasis(m));
        for (std::size_t i = 0; i < rows; ++i) {
            SparseEchelon::Row row;
            for (std::size_t j = 0; j < cols; ++j) row.emplace(j, m.at(i, j));
            CHECK(e.reduce(std::move(row)).empty());
        }
    }
}

TEST_CASE("edge-case matrices") {
    CHECK(rank(RationalMatrix(0, 0)) == 0);
    CHECK(kernelBasis(RationalMatrix(0, 3)).size() == 3);
    RationalMatrix zero(3, 2);
    CHECK(rank(zero) == 0);
    CHECK(kernelBasis(zero).size() == 2);
    RationalMatrix id(2, 2);
    id.at(0, 0) = 1;
    id.at(1, 1) = Scalar(1, 3);
    CHECK(rank(id) == 2);
    CHECK(kernelBasis(id).empty());
}

TEST_CASE("span membership") {
    const Presentation p = example();
    const auto x1 = p.element("x1"), x2 = p.element("x2"), z = p.element("z");
    const std::vector<AlgebraElement> gens{x1 + x2, x1 - x2};
    CHECK(inSpan(gens, x1));
    CHECK(inSpan(gens, Scalar(3, 7) * x2));
    CHECK_FALSE(inSpan(gens, z));
    CHECK_FALSE(inSpan(gens, x1 + z));
    CHECK(inSpan(gens, p.zero()));
    CHECK(inSpan(std::vector<AlgebraElement>{}, p.zero()));
    CHECK_FALSE(inSpan(std::vector<AlgebraElement>{}, x1));
}

TEST_CASE("basis enumeration matches brute force") {
    for (const auto& src : builtins()) {
        const Presentation p = parseOrThrow(src);
        for (Filtration f : {Filtration::Weighted, Filtration::Standard})
            for (int bound = 0; bound <= 5; ++bound) {
                CAPTURE(src.origin);
                CAPTURE(bound);
                const FilteredBasis b = enumerateBasis(p, bound, f);
                auto words = b.words;
                std::sort(words.begin(), words.end());
                CHECK(words == oracle::bruteForceNormalWords(*p.table(), bound, f));
                for (std::size_t i = 0; i < b.words.size(); ++i) CHECK(b.indexOf.at(b.words[i]) == i);
            }
    }
}

TEST_CASE("basis of the example at weighted bound 2") {
    const Presentation p = example();
    const FilteredBasis b = enumerateBasis(p, 2);
    // 1, x1, x2, x3, z and the six nondecreasing products of two primitives.
    CHECK(b.words.size() == 11);
    CHECK(b.words.front() == Word{});
    for (std::size_t i = 1; i < b.words.size(); ++i)
        CHECK(p.table()->weight(b.words[i - 1]) <= p.table()->weight(b.words[i]));
}

TEST_CASE("enumeration cap") {
    const Presentation p = example();
    CHECK_THROWS_AS(enumerateBasis(p, 6, Filtration::Weighted, 50), ResourceLimit);
    CHECK_NOTHROW(enumerateBasis(p, 2, Filtration::Weighted, 11));
    CHECK(defaultDegreeBound(p) == 5);
    CHECK(defaultDegreeBound(parseOrThrow(*findBuiltin("env-abelian-3"))) == 3);

    ::setenv("HOPFGK_MAX_BASIS", "123", 1);
    CHECK(defaultEnumerationCap() == 123);
    ::unsetenv("HOPFGK_MAX_BASIS");
    CHECK(defaultEnumerationCap() == 2'000'000);
}

TEST_CASE("kernel of delta on the example") {
    const Presentation p = example();
    const HopfAlgebra h(p);
    const FilteredBasis b = enumerateBasis(p, 2);
    const SubspaceBasis k = kernelOf([&](const AlgebraElement& a) { return std::vector{h.delta(a)}; }, b);
    CHECK(k.dim() == 3);
    for (const char* g : {"x1", "x2", "x3"}) CHECK(k.contains(p.element(g)));
    CHECK_FALSE(k.contains(p.element("z")));
    CHECK_FALSE(k.contains(p.one()));
    // δ(1) = −1⊗1, so lifting the augmentation restriction changes nothing.
    const SubspaceBasis all =
        kernelOf([&](const AlgebraElement& a) { return std::vector{h.delta(a)}; }, b, false);
    CHECK(all.dim() == 3);
    CHECK(h.delta(p.one()) == -TensorElement::pure(p.one(), p.one()));
}

TEST_CASE("primitive and anti-cocommutative spaces against the dense oracle") {
    for (const auto& src : builtins()) {
        const Presentation p = parseOrThrow(src);
        const HopfAlgebra h(p);
        for (int bound = 1; bound <= 4; ++bound) {
            CAPTURE(src.origin);
            CAPTURE(bound);
            const SubspaceBasis prim = primitiveSpace(h, bound);
            CHECK(prim.dim() == oracle::primitiveDim(h, bound));
            CHECK(antiCocommutativeSpace(h, bound, prim).dim() == oracle::antiCocommutativeDim(h, bound));
        }
    }
}

TEST_CASE("P and P2 of the example") {
    const Presentation p = example();
    CHECK(primitiveSpace(p, 2).dim() == 3);
    const SubspaceBasis p2 = antiCocommutativeSpace(p, 2);
    CHECK(p2.dim() == 4);
    CHECK(p2.contains(p.element("z")));
    CHECK(p2.contains(p.element("z") - Scalar(2, 3) * p.element("x3")));
    CHECK_FALSE(p2.contains(p.element("x1") * p.element("x2")));
    CHECK(primitiveSpace(p, 4).dim() == 3);
    CHECK(antiCocommutativeSpace(p, 4).dim() == 4);
}
