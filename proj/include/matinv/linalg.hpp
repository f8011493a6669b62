#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "matinv/multipoly.hpp"
#include "matinv/rational.hpp"
#include "matinv/zp.hpp"

namespace matinv {

// Dense row-major matrix.
template <class C>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const C& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix from_rows(const std::vector<std::vector<C>>& rows, const C& zero) {
        std::size_t cols = rows.empty() ? 0 : rows.front().size();
        Matrix m(rows.size(), cols, zero);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw std::invalid_argument("ragged rows");
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    C& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const C& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    std::span<const C> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    Matrix transposed() const {
        if (data_.empty()) return Matrix(cols_, rows_, C{});
        Matrix t(cols_, rows_, data_.front());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    template <class F>
    auto map(F&& f) const -> Matrix<std::decay_t<decltype(f(std::declval<const C&>()))>> {
        using D = std::decay_t<decltype(f(std::declval<const C&>()))>;
        Matrix<D> r;
        r.rows_ = rows_;
        r.cols_ = cols_;
        r.data_.reserve(data_.size());
        for (const auto& c : data_) r.data_.push_back(f(c));
        return r;
    }

private:
    template <class>
    friend class Matrix;

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<C> data_;
};

using QMatrix = Matrix<Rat>;
using ZpMatrix = Matrix<Zp>;

template <class C>
struct RankNullspace {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_columns;
    // Basis of {v : M v = 0} read off the reduced row echelon form: one
    // vector per free column f, with v[f] = 1 and zeros at the other free
    // columns.
    std::vector<std::vector<C>> nullspace;
};

// Fraction-free (Bareiss) elimination on the integer matrix obtained by
// clearing row denominators, followed by back substitution to RREF.
RankNullspace<Rat> rank_nullspace(const QMatrix& m);
// Plain Gauss-Jordan over F_p.
RankNullspace<Zp> rank_nullspace(const ZpMatrix& m);

// Rank only; skips the back substitution.
std::size_t rank(const QMatrix& m);
std::size_t rank(const ZpMatrix& m);

// M v computed exactly.
template <class C>
std::vector<C> apply(const Matrix<C>& m, std::span<const C> v, const C& zero) {
    if (v.size() != m.cols()) throw std::invalid_argument("dimension mismatch in apply");
    std::vector<C> out(m.rows(), zero);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m.at(i, j) * v[j];
    return out;
}

// Incremental echelon basis of a span of sparse polynomials. Tracks how each
// basis element is combined from the inputs, so that an input that reduces
// to zero yields a linear relation among the inputs.
template <class C>
class PolySpan {
public:
    explicit PolySpan(C one) : one_(std::move(one)) {}

    // Returns true iff `p` is independent of the polynomials added so far.
    bool add(MultiPoly<C> p) {
        const std::size_t index = inputs_++;
        for (auto& row : rows_) row.second.combo.resize(inputs_, zero_like(one_));
        std::vector<C> combo(inputs_, zero_like(one_));
        combo[index] = one_;
        while (!p.is_zero()) {
            const auto& lead = p.terms().front();
            auto it = rows_.find(lead.first);
            if (it == rows_.end()) {
                C scale = inverse(lead.second);
                for (auto& c : combo) c *= scale;
                rows_.emplace(lead.first, Row{scale * p, std::move(combo)});
                return true;
            }
            C c = lead.second;
            p -= c * it->second.poly;
            for (std::size_t k = 0; k < inputs_; ++k) combo[k] -= c * it->second.combo[k];
        }
        relations_.push_back(std::move(combo));
        return false;
    }

    std::size_t rank() const { return rows_.size(); }
    std::size_t inputs() const { return inputs_; }

    // One relation per dependent input, zero-padded to inputs() entries.
    std::vector<std::vector<C>> relations() const {
        auto out = relations_;
        for (auto& r : out) r.resize(inputs_, zero_like(one_));
        return out;
    }

private:
    struct Row {
        MultiPoly<C> poly;
        std::vector<C> combo;
    };

    C one_;
    std::size_t inputs_ = 0;
    std::map<Exponents, Row, std::greater<Exponents>> rows_;
    std::vector<std::vector<C>> relations_;
};

}  // namespace matinv
