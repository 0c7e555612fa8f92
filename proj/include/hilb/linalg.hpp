#pragma once

#include <vector>

#include "hilb/rational.hpp"

namespace hilb {

// Dense matrix over Q with deterministic Gauss-Jordan elimination
// (first-nonzero pivoting).  Sized for the few-hundred-row systems that
// syzygy and catalecticant computations produce.
class QMatrix {
public:
    QMatrix(long rows, long cols)
        : rows_(rows), cols_(cols),
          data_(static_cast<size_t>(rows * cols)) {}

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    Rational& at(long r, long c) { return data_[static_cast<size_t>(r * cols_ + c)]; }
    const Rational& at(long r, long c) const { return data_[static_cast<size_t>(r * cols_ + c)]; }

    // Reduced row echelon form in place; returns the pivot column indices.
    std::vector<long> rref();

    long rank() const;

    // Basis of the right kernel {x : Ax = 0}; deterministic: one vector per
    // free column, free coordinate set to 1.
    std::vector<std::vector<Rational>> nullspace() const;

    // Square matrices only.
    Rational determinant() const;

private:
    long rows_, cols_;
    std::vector<Rational> data_;
};

// Incremental rank computation: rows are reduced against a stored echelon
// basis as they arrive, so memory stays bounded by the column count no
// matter how many constraint rows a computation generates.
class RowReducer {
public:
    explicit RowReducer(long cols) : cols_(cols) {}

    // Reduces the row and stores it when independent; returns whether the
    // row increased the rank.
    bool add_row(std::vector<Rational> row);
    long rank() const { return static_cast<long>(echelon_.size()); }
    long cols() const { return cols_; }

private:
    long cols_;
    std::vector<std::vector<Rational>> echelon_; // each row monic at its pivot
    std::vector<long> pivot_;                    // pivot column per stored row
};

} // namespace hilb
