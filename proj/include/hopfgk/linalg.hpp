#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "hopfgk/scalar.hpp"

namespace hopfgk {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> data_;
};

/// Row echelon form with integer entries produced by Bareiss elimination.
/// Row k has its pivot at pivotColumns[k]; only the first rank() rows are kept.
struct EchelonForm {
    std::size_t cols = 0;
    std::vector<std::vector<mpz_class>> rows;
    std::vector<std::size_t> pivotColumns;

    std::size_t rank() const { return pivotColumns.size(); }
};

/// Fraction-free Gaussian elimination. Each row is first scaled to integers
/// (which preserves the row space); every later update is an exact division
/// by the previous pivot.
EchelonForm fractionFreeEchelon(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Basis of {x : m·x = 0}: one vector per free column, with that column set
/// to 1 and the other free columns 0.
std::vector<std::vector<Scalar>> kernelBasis(const RationalMatrix& m);

/// Incremental reduced row echelon form over sparse rows. Rows can be fed
/// one at a time; only independent rows are stored, so memory and work stay
/// bounded by the column count however many rows arrive.
class SparseEchelon {
public:
    using Row = std::map<std::size_t, Scalar>;

    explicit SparseEchelon(std::size_t cols) : cols_(cols) {}

    /// Returns true iff the row was independent of the rows already added.
    bool addRow(Row row);
    /// Reduces `row` against the stored rows; zero iff it lies in their span.
    Row reduce(Row row) const;

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return pivots_.size(); }
    /// Same convention as kernelBasis(): one vector per free column.
    std::vector<std::vector<Scalar>> kernelBasis() const;

private:
    std::size_t cols_;
    std::map<std::size_t, Row> pivots_;  // pivot column -> row with 1 there, 0 at other pivots
};

/// Linear membership test for sparse vectors (anything exposing terms() as
/// an ordered map key → Scalar). True iff `target` lies in span(`generators`).
template <class Vec>
bool inSpan(const std::vector<Vec>& generators, const Vec& target) {
    if (target.terms().empty()) return true;
    using Key = typename std::decay_t<decltype(target.terms())>::key_type;
    std::map<Key, std::size_t> index;
    for (const auto& g : generators)
        for (const auto& [k, c] : g.terms()) index.try_emplace(k, 0);
    for (const auto& [k, c] : target.terms())
        if (index.find(k) == index.end()) return false;
    std::size_t next = 0;
    for (auto& [k, i] : index) i = next++;

    // Generators become rows; target is in their span iff it reduces to zero.
    SparseEchelon e(index.size());
    for (const auto& g : generators) {
        SparseEchelon::Row row;
        for (const auto& [k, c] : g.terms()) row.emplace(index.at(k), c);
        e.addRow(std::move(row));
    }
    SparseEchelon::Row t;
    for (const auto& [k, c] : target.terms()) t.emplace(index.at(k), c);
    return e.reduce(std::move(t)).empty();
}

}  // namespace hopfgk
