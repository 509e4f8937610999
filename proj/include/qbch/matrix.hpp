#ifndef QBCH_MATRIX_HPP
#define QBCH_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qbch/error.hpp"
#include "qbch/galois_field.hpp"

namespace qbch {

/// Dense row-major matrix of field encodings.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Elem> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

    Elem& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    Elem at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
    std::span<Elem> row(std::size_t r) { return {data.data() + r * cols, cols}; }
    std::span<const Elem> row(std::size_t r) const { return {data.data() + r * cols, cols}; }

    bool is_zero() const {
        return std::all_of(data.begin(), data.end(), [](Elem e) { return e == 0; });
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;
};

inline Elem dot(const GaloisField& f, std::span<const Elem> a, std::span<const Elem> b) {
    Elem acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) acc = f.add(acc, f.mul(a[i], b[i]));
    return acc;
}

/// A * B^T.
inline Matrix multiply_transpose(const GaloisField& f, const Matrix& a, const Matrix& b) {
    if (a.cols != b.cols) fail(Errc::InvalidArgument, "column counts differ");
    Matrix out(a.rows, b.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < b.rows; ++j) out.at(i, j) = dot(f, a.row(i), b.row(j));
    return out;
}

/// Entrywise x -> x^power (the Frobenius conjugate for power = q).
inline Matrix conjugate(const GaloisField& f, const Matrix& a, std::uint64_t power) {
    Matrix out = a;
    for (Elem& e : out.data) e = f.pow_u(e, power);
    return out;
}

/// Incremental reduced row echelon form.
class RowSpace {
   public:
    RowSpace(FieldPtr field, std::size_t cols) : field_(std::move(field)), cols_(cols) {}

    std::size_t cols() const noexcept { return cols_; }
    std::size_t rank() const noexcept { return rows_.size(); }

    /// Adds v to the span; returns true if it was independent.
    bool insert(std::span<const Elem> v) {
        if (v.size() != cols_) fail(Errc::InvalidArgument, "row length mismatch");
        const GaloisField& f = *field_;
        std::vector<Elem> r(v.begin(), v.end());
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Elem c = r[pivots_[i]];
            if (c != 0) axpy(r, f.neg(c), rows_[i]);
        }
        const auto it = std::find_if(r.begin(), r.end(), [](Elem e) { return e != 0; });
        if (it == r.end()) return false;
        const auto pivot = static_cast<std::size_t>(it - r.begin());
        const Elem s = f.inv(r[pivot]);
        for (Elem& e : r) e = f.mul(e, s);
        for (auto& row : rows_) {
            const Elem c = row[pivot];
            if (c != 0) axpy(row, f.neg(c), r);
        }
        rows_.push_back(std::move(r));
        pivots_.push_back(pivot);
        return true;
    }

    bool contains(std::span<const Elem> v) const {
        const GaloisField& f = *field_;
        std::vector<Elem> r(v.begin(), v.end());
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Elem c = r[pivots_[i]];
            if (c != 0) axpy(r, f.neg(c), rows_[i]);
        }
        return std::all_of(r.begin(), r.end(), [](Elem e) { return e == 0; });
    }

    /// RREF basis, rows ordered by pivot column.
    Matrix basis() const {
        Matrix out(rows_.size(), cols_);
        const auto order = pivot_order();
        for (std::size_t i = 0; i < order.size(); ++i) std::copy(rows_[order[i]].begin(), rows_[order[i]].end(), out.row(i).begin());
        return out;
    }

    /// Basis of { x : B x^T = 0 }, one vector per free column, ascending.
    Matrix null_space() const {
        const GaloisField& f = *field_;
        std::vector<bool> is_pivot(cols_, false);
        for (std::size_t p : pivots_) is_pivot[p] = true;
        Matrix out(cols_ - rows_.size(), cols_);
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_; ++c) {
            if (is_pivot[c]) continue;
            out.at(r, c) = 1;
            for (std::size_t i = 0; i < rows_.size(); ++i) out.at(r, pivots_[i]) = f.neg(rows_[i][c]);
            ++r;
        }
        return out;
    }

   private:
    void axpy(std::vector<Elem>& y, Elem a, const std::vector<Elem>& x) const {
        const GaloisField& f = *field_;
        for (std::size_t j = 0; j < cols_; ++j)
            if (x[j] != 0) y[j] = f.add(y[j], f.mul(a, x[j]));
    }

    std::vector<std::size_t> pivot_order() const {
        std::vector<std::size_t> order(rows_.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
        return order;
    }

    FieldPtr field_;
    std::size_t cols_;
    std::vector<std::vector<Elem>> rows_;
    std::vector<std::size_t> pivots_;
};

inline std::size_t rank(const FieldPtr& field, const Matrix& a) {
    RowSpace rs(field, a.cols);
    for (std::size_t i = 0; i < a.rows; ++i) rs.insert(a.row(i));
    return rs.rank();
}

}  // namespace qbch

#endif  // QBCH_MATRIX_HPP
