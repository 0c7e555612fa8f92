#include "hilb/linalg.hpp"

#include "hilb/errors.hpp"

namespace hilb {

std::vector<long> QMatrix::rref() {
    std::vector<long> pivots;
    long row = 0;
    for (long col = 0; col < cols_ && row < rows_; ++col) {
        long pivot = -1;
        for (long r = row; r < rows_; ++r) {
            if (!at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != row)
            for (long c = 0; c < cols_; ++c) std::swap(at(pivot, c), at(row, c));
        const Rational inv = at(row, col).inverse();
        for (long c = col; c < cols_; ++c) at(row, c) *= inv;
        for (long r = 0; r < rows_; ++r) {
            if (r == row || at(r, col).is_zero()) continue;
            const Rational factor = at(r, col);
            for (long c = col; c < cols_; ++c) at(r, c) -= factor * at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

long QMatrix::rank() const {
    QMatrix copy(*this);
    return static_cast<long>(copy.rref().size());
}

std::vector<std::vector<Rational>> QMatrix::nullspace() const {
    QMatrix copy(*this);
    const std::vector<long> pivots = copy.rref();

    std::vector<bool> is_pivot(static_cast<size_t>(cols_), false);
    for (long p : pivots) is_pivot[static_cast<size_t>(p)] = true;

    std::vector<std::vector<Rational>> basis;
    for (long free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[static_cast<size_t>(free_col)]) continue;
        std::vector<Rational> v(static_cast<size_t>(cols_));
        v[static_cast<size_t>(free_col)] = Rational(1);
        for (size_t i = 0; i < pivots.size(); ++i)
            v[static_cast<size_t>(pivots[i])] = -copy.at(static_cast<long>(i), free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational QMatrix::determinant() const {
    if (rows_ != cols_) throw InputError("determinant of non-square matrix");
    QMatrix a(*this);
    Rational det(1);
    for (long col = 0; col < cols_; ++col) {
        long pivot = -1;
        for (long r = col; r < rows_; ++r) {
            if (!a.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            for (long c = 0; c < cols_; ++c) std::swap(a.at(pivot, c), a.at(col, c));
            det = -det;
        }
        det *= a.at(col, col);
        const Rational inv = a.at(col, col).inverse();
        for (long r = col + 1; r < rows_; ++r) {
            if (a.at(r, col).is_zero()) continue;
            const Rational factor = a.at(r, col) * inv;
            for (long c = col; c < cols_; ++c) a.at(r, c) -= factor * a.at(col, c);
        }
    }
    return det;
}

bool RowReducer::add_row(std::vector<Rational> row) {
    if (static_cast<long>(row.size()) != cols_) throw InputError("row width mismatch");
    for (size_t k = 0; k < echelon_.size(); ++k) {
        const Rational& lead = row[static_cast<size_t>(pivot_[k])];
        if (lead.is_zero()) continue;
        const Rational factor = lead; // echelon rows are monic at their pivot
        const auto& er = echelon_[k];
        for (long c = pivot_[k]; c < cols_; ++c)
            row[static_cast<size_t>(c)] -= factor * er[static_cast<size_t>(c)];
    }
    long pivot = -1;
    for (long c = 0; c < cols_; ++c) {
        if (!row[static_cast<size_t>(c)].is_zero()) {
            pivot = c;
            break;
        }
    }
    if (pivot < 0) return false;
    const Rational inv = row[static_cast<size_t>(pivot)].inverse();
    for (long c = pivot; c < cols_; ++c) row[static_cast<size_t>(c)] *= inv;
    echelon_.push_back(std::move(row));
    pivot_.push_back(pivot);
    return true;
}

} // namespace hilb
