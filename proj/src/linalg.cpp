#include "matinv/linalg.hpp"

#include <utility>

namespace matinv {

namespace {

// Integer matrix with the same row space as m: row i is scaled by the lcm of
// its denominators.
std::vector<std::vector<BigInt>> clear_denominators(const QMatrix& m) {
    std::vector<std::vector<BigInt>> out(m.rows(), std::vector<BigInt>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        BigInt l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m.at(i, j).get_num() * (l / m.at(i, j).get_den());
    }
    return out;
}

// In-place fraction-free row echelon form; returns pivot columns. Row k of
// the result has its pivot in pivots[k].
std::vector<std::size_t> bareiss(std::vector<std::vector<BigInt>>& a, std::size_t cols) {
    std::vector<std::size_t> pivots;
    const std::size_t rows = a.size();
    BigInt prev = 1;
    std::size_t k = 0;
    BigInt tmp;
    for (std::size_t col = 0; col < cols && k < rows; ++col) {
        std::size_t r = k;
        while (r < rows && a[r][col] == 0) ++r;
        if (r == rows) continue;
        std::swap(a[r], a[k]);
        for (std::size_t i = k + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                tmp = a[k][col] * a[i][j];
                tmp -= a[i][col] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[k][col];
        pivots.push_back(col);
        ++k;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const QMatrix& m) {
    auto a = clear_denominators(m);
    return bareiss(a, m.cols()).size();
}

RankNullspace<Rat> rank_nullspace(const QMatrix& m) {
    auto a = clear_denominators(m);
    RankNullspace<Rat> out;
    out.pivot_columns = bareiss(a, m.cols());
    out.rank = out.pivot_columns.size();
    const std::size_t r = out.rank, n = m.cols();

    std::vector<std::vector<Rat>> red(r, std::vector<Rat>(n));
    for (std::size_t i = 0; i < r; ++i) {
        const BigInt& piv = a[i][out.pivot_columns[i]];
        for (std::size_t j = 0; j < n; ++j) red[i][j] = make_rat(a[i][j], piv);
    }
    // Back substitution: clear the entries above every pivot.
    for (std::size_t i = r; i-- > 0;) {
        const std::size_t pc = out.pivot_columns[i];
        for (std::size_t h = 0; h < i; ++h) {
            if (is_zero(red[h][pc])) continue;
            Rat f = red[h][pc];
            for (std::size_t j = pc; j < n; ++j) red[h][j] -= f * red[i][j];
        }
    }

    std::vector<bool> is_pivot(n, false);
    for (auto c : out.pivot_columns) is_pivot[c] = true;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(n, Rat(0));
        v[f] = 1;
        for (std::size_t i = 0; i < r; ++i) v[out.pivot_columns[i]] = -red[i][f];
        out.nullspace.push_back(std::move(v));
    }
    return out;
}

namespace {

RankNullspace<Zp> gauss_jordan(const ZpMatrix& m, bool want_nullspace) {
    RankNullspace<Zp> out;
    const std::size_t rows = m.rows(), n = m.cols();
    if (rows == 0 || n == 0) {
        if (want_nullspace && n > 0) {
            // Without entries the modulus is unknown; callers always supply
            // at least one row when they need a nullspace over F_p.
            throw std::invalid_argument("nullspace over F_p of a matrix without rows");
        }
        return out;
    }
    const std::uint64_t p = m.at(0, 0).p;
    std::vector<std::vector<Zp>> a(rows);
    for (std::size_t i = 0; i < rows; ++i) a[i].assign(m.row(i).begin(), m.row(i).end());
    std::size_t k = 0;
    for (std::size_t col = 0; col < n && k < rows; ++col) {
        std::size_t r = k;
        while (r < rows && a[r][col].v == 0) ++r;
        if (r == rows) continue;
        std::swap(a[r], a[k]);
        Zp inv = inverse(a[k][col]);
        for (std::size_t j = col; j < n; ++j) a[k][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == k || a[i][col].v == 0) continue;
            if (!want_nullspace && i < k) continue;
            Zp f = a[i][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[k][j];
        }
        out.pivot_columns.push_back(col);
        ++k;
    }
    out.rank = k;
    if (!want_nullspace) return out;
    std::vector<bool> is_pivot(n, false);
    for (auto c : out.pivot_columns) is_pivot[c] = true;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Zp> v(n, Zp(0, p));
        v[f] = Zp(1, p);
        for (std::size_t i = 0; i < k; ++i) v[out.pivot_columns[i]] = -a[i][f];
        out.nullspace.push_back(std::move(v));
    }
    return out;
}

}  // namespace

RankNullspace<Zp> rank_nullspace(const ZpMatrix& m) { return gauss_jordan(m, true); }

std::size_t rank(const ZpMatrix& m) { return gauss_jordan(m, false).rank; }

}  // namespace matinv
