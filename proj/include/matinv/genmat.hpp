#pragma once

#include <array>
#include <cstdint>
#include <mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "matinv/exprlang.hpp"
#include "matinv/linalg.hpp"
#include "matinv/multipoly.hpp"
#include "matinv/words.hpp"

namespace matinv {

inline constexpr std::size_t kFreeVars = 18;

// x1, x2, x3, y11, ..., y43 (y44 excluded), in this order.
const VarSetPtr& traceless_vars();

// 4x4 matrix with entries in a commutative ring.
template <class C>
struct Mat4 {
    std::array<C, 16> e;

    C& at(int i, int j) { return e[static_cast<std::size_t>(4 * i + j)]; }
    const C& at(int i, int j) const { return e[static_cast<std::size_t>(4 * i + j)]; }

    C trace() const {
        C t = at(0, 0);
        for (int i = 1; i < 4; ++i) t += at(i, i);
        return t;
    }

    friend Mat4 operator*(const Mat4& a, const Mat4& b) {
        Mat4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                C s = a.at(i, 0) * b.at(0, j);
                for (int k = 1; k < 4; ++k) s += a.at(i, k) * b.at(k, j);
                r.at(i, j) = std::move(s);
            }
        return r;
    }

    friend Mat4 operator+(Mat4 a, const Mat4& b) {
        for (std::size_t i = 0; i < 16; ++i) a.e[i] += b.e[i];
        return a;
    }

    friend Mat4 operator-(Mat4 a, const Mat4& b) {
        for (std::size_t i = 0; i < 16; ++i) a.e[i] -= b.e[i];
        return a;
    }
};

// tr(AB) without forming AB.
template <class C>
C trace_of_product(const Mat4<C>& a, const Mat4<C>& b) {
    C s = a.at(0, 0) * b.at(0, 0);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i || j) s += a.at(i, j) * b.at(j, i);
    return s;
}

using SymMatrix = Mat4<QPoly>;

struct GenericPair {
    SymMatrix x;  // diag(x1, x2, x3, -(x1 + x2 + x3))
    SymMatrix y;  // y44 = -(y11 + y22 + y33)
};

const GenericPair& generic_traceless_pair();

// Symbolic evaluation with caches of word matrices and word traces. Safe to
// share between threads.
class SymbolicEvaluator {
public:
    explicit SymbolicEvaluator(const GenericPair& pair);

    QPoly trace(const CyclicWord& w);
    QPoly eval(const TracePoly& tp);
    QPoly eval(const FormalTracePoly& f);

private:
    const SymMatrix& word_matrix(const std::string& w);

    GenericPair pair_;
    std::mutex mutex_;
    std::unordered_map<std::string, SymMatrix> matrices_;
    std::unordered_map<std::string, QPoly> traces_;
};

// Evaluators over the shared generic traceless pair.
SymbolicEvaluator& shared_symbolic_evaluator();
QPoly eval_trace_poly(const TracePoly& tp, const GenericPair& pair);
QPoly eval_expr(const TraceExpr& e, const GenericPair& pair);

// ---------------------------------------------------------------- points

// Values of the 18 free variables. The values are derived from
// (seed, prime index, point index) alone, so a point can be regenerated.
struct EvalPoint {
    std::uint64_t seed = 0;
    std::size_t prime_index = 0;
    std::size_t index = 0;
    std::uint64_t prime = 0;
    std::array<Zp, kFreeVars> values;
};

struct RatPoint {
    std::uint64_t seed = 0;
    std::size_t index = 0;
    std::array<Rat, kFreeVars> values;
};

std::uint64_t splitmix64(std::uint64_t& state);

std::vector<EvalPoint> make_points(std::uint64_t seed, std::size_t prime_index, std::uint64_t prime, std::size_t count);
// Integer values in [-bound, bound].
std::vector<RatPoint> make_rat_points(std::uint64_t seed, std::size_t count, long bound = 1000);

template <class C>
Mat4<C> point_x(std::span<const C, kFreeVars> v) {
    C zero = zero_like(v[0]);
    Mat4<C> x;
    x.e.fill(zero);
    x.at(0, 0) = v[0];
    x.at(1, 1) = v[1];
    x.at(2, 2) = v[2];
    x.at(3, 3) = zero - (v[0] + v[1] + v[2]);
    return x;
}

template <class C>
Mat4<C> point_y(std::span<const C, kFreeVars> v) {
    Mat4<C> y;
    std::size_t k = 3;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (i == 3 && j == 3) continue;
            y.at(i, j) = v[k++];
        }
    y.at(3, 3) = zero_like(v[0]) - (y.at(0, 0) + y.at(1, 1) + y.at(2, 2));
    return y;
}

// Numeric word traces at one point; each cyclic word is evaluated once.
template <class C>
class PointTraces {
public:
    PointTraces(Mat4<C> x, Mat4<C> y) : x_(std::move(x)), y_(std::move(y)) {}

    const C& trace(const CyclicWord& w) {
        auto it = cache_.find(w.word());
        if (it != cache_.end()) return it->second;
        Mat4<C> m = w.word()[0] == 'x' ? x_ : y_;
        for (std::size_t i = 1; i + 1 < w.length(); ++i) m = m * (w.word()[i] == 'x' ? x_ : y_);
        C t = w.length() == 1 ? m.trace() : trace_of_product(m, w.word().back() == 'x' ? x_ : y_);
        return cache_.emplace(w.word(), std::move(t)).first->second;
    }

    C eval(const FormalTracePoly& f) {
        C one = one_like(x_.at(0, 0));
        C acc = zero_like(one);
        for (const auto& [m, c] : f.terms()) {
            C term = coefficient(c, one);
            for (const auto& w : m) term *= trace(w);
            acc += term;
        }
        return acc;
    }

    C eval(const TracePoly& tp) {
        C one = one_like(x_.at(0, 0));
        C acc = zero_like(one);
        for (const auto& [w, c] : tp.terms()) acc += coefficient(c, one) * trace(w);
        return acc;
    }

private:
    static C coefficient(const Rat& c, const C& one);

    Mat4<C> x_, y_;
    std::unordered_map<std::string, C> cache_;
};

template <>
Zp PointTraces<Zp>::coefficient(const Rat& c, const Zp& one);
template <>
Rat PointTraces<Rat>::coefficient(const Rat& c, const Rat& one);

PointTraces<Zp> point_traces(const EvalPoint& p);
PointTraces<Rat> point_traces(const RatPoint& p);

// One value per point, in point order. The parallel version distributes
// points over OpenMP threads; the serial one is the reference.
std::vector<Zp> eval_at_points(const FormalTracePoly& f, std::span<const EvalPoint> points);
std::vector<Zp> eval_at_points_serial(const FormalTracePoly& f, std::span<const EvalPoint> points);

// Rows are points, columns are expressions.
ZpMatrix evaluation_matrix(std::span<const FormalTracePoly> exprs, std::span<const EvalPoint> points);
ZpMatrix evaluation_matrix_serial(std::span<const FormalTracePoly> exprs, std::span<const EvalPoint> points);
QMatrix evaluation_matrix(std::span<const FormalTracePoly> exprs, std::span<const RatPoint> points);

// ---------------------------------------------------------------- Cayley-Hamilton

// x^4 = c2 tr(x^2) x^2 + c3 tr(x^3) x + (c4_p22 tr(x^2)^2 + c4_p4 tr(x^4)) e
// for the generic traceless x. The coefficients are solved from the
// symbolic identity, which is then re-checked entry by entry.
struct CayleyHamilton {
    Rat c2, c3, c4_p22, c4_p4;
    bool residual_zero = false;
    // tr(x^5) - (5/6) tr(x^2) tr(x^3), evaluated symbolically.
    bool trace_x5_identity = false;
};

CayleyHamilton cayley_hamilton_traceless();

}  // namespace matinv
