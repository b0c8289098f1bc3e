#include "hopfgk/linalg.hpp"

#include <iterator>
#include <utility>

namespace hopfgk {

EchelonForm fractionFreeEchelon(const RationalMatrix& m) {
    EchelonForm out;
    out.cols = m.cols();

    std::vector<std::vector<mpz_class>> a;
    a.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        mpz_class scale = 1;
        bool nonzero = false;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (m.at(r, c).isZero()) continue;
            nonzero = true;
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m.at(r, c).value().get_den_mpz_t());
        }
        if (!nonzero) continue;
        std::vector<mpz_class> row(m.cols());
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const mpq_class& q = m.at(r, c).value();
            row[c] = q.get_num() * (scale / q.get_den());
        }
        a.push_back(std::move(row));
    }

    const std::size_t rows = a.size();
    std::size_t pivotRow = 0;
    mpz_class previous = 1;
    for (std::size_t col = 0; col < m.cols() && pivotRow < rows; ++col) {
        std::size_t found = pivotRow;
        while (found < rows && a[found][col] == 0) ++found;
        if (found == rows) continue;
        std::swap(a[pivotRow], a[found]);
        const mpz_class& pivot = a[pivotRow][col];
        for (std::size_t i = pivotRow + 1; i < rows; ++i) {
            const mpz_class factor = a[i][col];
            for (std::size_t j = col + 1; j < m.cols(); ++j) {
                mpz_class v = pivot * a[i][j] - factor * a[pivotRow][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
                a[i][j] = std::move(v);
            }
            a[i][col] = 0;
        }
        previous = pivot;
        out.pivotColumns.push_back(col);
        ++pivotRow;
    }
    a.resize(pivotRow);
    out.rows = std::move(a);
    return out;
}

std::size_t rank(const RationalMatrix& m) { return fractionFreeEchelon(m).rank(); }

std::vector<std::vector<Scalar>> kernelBasis(const RationalMatrix& m) {
    const EchelonForm e = fractionFreeEchelon(m);
    std::vector<bool> isPivot(m.cols(), false);
    for (std::size_t c : e.pivotColumns) isPivot[c] = true;

    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (isPivot[free]) continue;
        std::vector<mpq_class> x(m.cols(), 0);
        x[free] = 1;
        for (std::size_t k = e.rank(); k-- > 0;) {
            const std::size_t pc = e.pivotColumns[k];
            mpq_class sum = 0;
            for (std::size_t j = pc + 1; j < m.cols(); ++j)
                if (x[j] != 0 && e.rows[k][j] != 0) sum += mpq_class(e.rows[k][j]) * x[j];
            x[pc] = -sum / mpq_class(e.rows[k][pc]);
        }
        std::vector<Scalar> v;
        v.reserve(x.size());
        for (auto& q : x) v.emplace_back(std::move(q));
        basis.push_back(std::move(v));
    }
    return basis;
}


SparseEchelon::Row SparseEchelon::reduce(Row row) const {
    for (auto it = row.begin(); it != row.end();) it = it->second.isZero() ? row.erase(it) : std::next(it);
    // Stored rows vanish at each other's pivots, so each pivot coefficient of
    // `row` can be read once up front.
    std::vector<std::pair<const Row*, Scalar>> hits;
    for (const auto& [col, c] : row) {
        const auto it = pivots_.find(col);
        if (it != pivots_.end()) hits.emplace_back(&it->second, c);
    }
    for (const auto& [pivotRow, c] : hits) {
        for (const auto& [col, x] : *pivotRow) {
            Scalar& slot = row[col];
            slot -= c * x;
            if (slot.isZero()) row.erase(col);
        }
    }
    return row;
}

bool SparseEchelon::addRow(Row row) {
    row = reduce(std::move(row));
    if (row.empty()) return false;
    const std::size_t pivot = row.begin()->first;
    const Scalar inv = Scalar(1) / row.begin()->second;
    for (auto& [col, x] : row) x *= inv;
    for (auto& [p, other] : pivots_) {
        const auto it = other.find(pivot);
        if (it == other.end()) continue;
        const Scalar c = it->second;
        for (const auto& [col, x] : row) {
            Scalar& slot = other[col];
            slot -= c * x;
            if (slot.isZero()) other.erase(col);
        }
    }
    pivots_.emplace(pivot, std::move(row));
    return true;
}

std::vector<std::vector<Scalar>> SparseEchelon::kernelBasis() const {
    std::vector<std::vector<Scalar>> out;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (pivots_.count(free)) continue;
        std::vector<Scalar> v(cols_);
        v[free] = 1;
        for (const auto& [p, row] : pivots_) {
            const auto it = row.find(free);
            if (it != row.end()) v[p] = -it->second;
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace hopfgk
