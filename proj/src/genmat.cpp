#include "matinv/genmat.hpp"

#include <omp.h>

#include <map>
#include <stdexcept>

#include "matinv/modp.hpp"

namespace matinv {

const VarSetPtr& traceless_vars() {
    static const VarSetPtr vars = [] {
        std::vector<std::string> names = {"x1", "x2", "x3"};
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j)
                if (i != 4 || j != 4) names.push_back("y" + std::to_string(i) + std::to_string(j));
        return VarSet::intern(names);
    }();
    return vars;
}

const GenericPair& generic_traceless_pair() {
    static const GenericPair pair = [] {
        const auto& vars = traceless_vars();
        auto var = [&](const std::string& n) { return QPoly::variable(vars, n, Rat(1)); };
        GenericPair g;
        g.x.e.fill(QPoly(vars));
        g.y.e.fill(QPoly(vars));
        for (int i = 0; i < 3; ++i) g.x.at(i, i) = var("x" + std::to_string(i + 1));
        g.x.at(3, 3) = -(var("x1") + var("x2") + var("x3"));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (i != 3 || j != 3) g.y.at(i, j) = var("y" + std::to_string(i + 1) + std::to_string(j + 1));
        g.y.at(3, 3) = -(var("y11") + var("y22") + var("y33"));
        return g;
    }();
    return pair;
}

// ---------------------------------------------------------------- symbolic

SymbolicEvaluator::SymbolicEvaluator(const GenericPair& pair) : pair_(pair) {}

const SymMatrix& SymbolicEvaluator::word_matrix(const std::string& w) {
    if (w == "x") return pair_.x;
    if (w == "y") return pair_.y;
    auto it = matrices_.find(w);
    if (it != matrices_.end()) return it->second;
    const std::size_t h = w.size() / 2;
    SymMatrix m = word_matrix(w.substr(0, h)) * word_matrix(w.substr(h));
    return matrices_.emplace(w, std::move(m)).first->second;
}

QPoly SymbolicEvaluator::trace(const CyclicWord& cw) {
    std::lock_guard lock(mutex_);
    const std::string& w = cw.word();
    auto it = traces_.find(w);
    if (it != traces_.end()) return it->second;
    QPoly t(traceless_vars());
    if (w.size() == 1) {
        t = word_matrix(w).trace();
    } else {
        const std::size_t h = (w.size() + 1) / 2;
        t = trace_of_product(word_matrix(w.substr(0, h)), word_matrix(w.substr(h)));
    }
    return traces_.emplace(w, std::move(t)).first->second;
}

QPoly SymbolicEvaluator::eval(const TracePoly& tp) {
    QPoly acc(traceless_vars());
    for (const auto& [w, c] : tp.terms()) acc += c * trace(w);
    return acc;
}

QPoly SymbolicEvaluator::eval(const FormalTracePoly& f) {
    QPoly acc(traceless_vars());
    for (const auto& [m, c] : f.terms()) {
        QPoly term = QPoly::constant(traceless_vars(), c);
        for (const auto& w : m) term *= trace(w);
        acc += term;
    }
    return acc;
}

SymbolicEvaluator& shared_symbolic_evaluator() {
    static SymbolicEvaluator ev(generic_traceless_pair());
    return ev;
}

QPoly eval_trace_poly(const TracePoly& tp, const GenericPair& pair) {
    if (&pair == &generic_traceless_pair()) return shared_symbolic_evaluator().eval(tp);
    return SymbolicEvaluator(pair).eval(tp);
}

QPoly eval_expr(const TraceExpr& e, const GenericPair& pair) {
    FormalTracePoly f = expand_formal(e);
    if (&pair == &generic_traceless_pair()) return shared_symbolic_evaluator().eval(f);
    return SymbolicEvaluator(pair).eval(f);
}

// ---------------------------------------------------------------- points

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

std::uint64_t point_state(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = seed;
    std::uint64_t h = splitmix64(s) ^ (a * 0xd1b54a32d192ed03ULL);
    s = h;
    h = splitmix64(s) ^ (b * 0x8cb92ba72f3d8dd7ULL);
    return h;
}

}  // namespace

std::vector<EvalPoint> make_points(std::uint64_t seed, std::size_t prime_index, std::uint64_t prime, std::size_t count) {
    std::vector<EvalPoint> out(count);
    for (std::size_t i = 0; i < count; ++i) {
        auto& p = out[i];
        p.seed = seed;
        p.prime_index = prime_index;
        p.index = i;
        p.prime = prime;
        std::uint64_t state = point_state(seed, prime_index + 1, i);
        for (auto& v : p.values) v = Zp(splitmix64(state) % prime, prime);
    }
    return out;
}

std::vector<RatPoint> make_rat_points(std::uint64_t seed, std::size_t count, long bound) {
    std::vector<RatPoint> out(count);
    const std::uint64_t width = static_cast<std::uint64_t>(2 * bound + 1);
    for (std::size_t i = 0; i < count; ++i) {
        out[i].seed = seed;
        out[i].index = i;
        std::uint64_t state = point_state(seed, 0, i);
        for (auto& v : out[i].values) v = Rat(static_cast<long>(splitmix64(state) % width) - bound);
    }
    return out;
}

template <>
Zp PointTraces<Zp>::coefficient(const Rat& c, const Zp& one) {
    return to_zp(c, one.p);
}

template <>
Rat PointTraces<Rat>::coefficient(const Rat& c, const Rat&) {
    return c;
}

PointTraces<Zp> point_traces(const EvalPoint& p) {
    std::span<const Zp, kFreeVars> v(p.values);
    return PointTraces<Zp>(point_x(v), point_y(v));
}

PointTraces<Rat> point_traces(const RatPoint& p) {
    std::span<const Rat, kFreeVars> v(p.values);
    return PointTraces<Rat>(point_x(v), point_y(v));
}

std::vector<Zp> eval_at_points(const FormalTracePoly& f, std::span<const EvalPoint> points) {
    std::vector<Zp> out(points.size());
    const long n = static_cast<long>(points.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
        auto pt = point_traces(points[static_cast<std::size_t>(i)]);
        out[static_cast<std::size_t>(i)] = pt.eval(f);
    }
    return out;
}

std::vector<Zp> eval_at_points_serial(const FormalTracePoly& f, std::span<const EvalPoint> points) {
    std::vector<Zp> out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back(point_traces(p).eval(f));
    return out;
}

ZpMatrix evaluation_matrix(std::span<const FormalTracePoly> exprs, std::span<const EvalPoint> points) {
    if (points.empty()) return ZpMatrix();
    ZpMatrix m(points.size(), exprs.size(), Zp(0, points[0].prime));
    const long n = static_cast<long>(points.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
        auto pt = point_traces(points[static_cast<std::size_t>(i)]);
        for (std::size_t j = 0; j < exprs.size(); ++j) m.at(static_cast<std::size_t>(i), j) = pt.eval(exprs[j]);
    }
    return m;
}

ZpMatrix evaluation_matrix_serial(std::span<const FormalTracePoly> exprs, std::span<const EvalPoint> points) {
    if (points.empty()) return ZpMatrix();
    ZpMatrix m(points.size(), exprs.size(), Zp(0, points[0].prime));
    for (std::size_t i = 0; i < points.size(); ++i) {
        auto pt = point_traces(points[i]);
        for (std::size_t j = 0; j < exprs.size(); ++j) m.at(i, j) = pt.eval(exprs[j]);
    }
    return m;
}

QMatrix evaluation_matrix(std::span<const FormalTracePoly> exprs, std::span<const RatPoint> points) {
    QMatrix m(points.size(), exprs.size(), Rat(0));
    const long n = static_cast<long>(points.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
        auto pt = point_traces(points[static_cast<std::size_t>(i)]);
        for (std::size_t j = 0; j < exprs.size(); ++j) m.at(static_cast<std::size_t>(i), j) = pt.eval(exprs[j]);
    }
    return m;
}

// ---------------------------------------------------------------- Cayley-Hamilton

CayleyHamilton cayley_hamilton_traceless() {
    auto& ev = shared_symbolic_evaluator();
    const auto& vars = traceless_vars();
    const SymMatrix& x = generic_traceless_pair().x;
    SymMatrix x2 = x * x, x4 = x2 * x2;
    QPoly p2 = ev.trace(CyclicWord("xx")), p3 = ev.trace(CyclicWord("xxx")), p4 = ev.trace(CyclicWord("xxxx"));

    // x is diagonal, so the identity holds iff it holds on each diagonal
    // entry. Unknowns (a, b, c, d) multiply p2*x^2, p3*x, p2^2, p4.
    std::vector<std::vector<Rat>> rows;
    for (int i = 0; i < 4; ++i) {
        QPoly cols[4] = {p2 * x2.at(i, i), p3 * x.at(i, i), p2 * p2, p4};
        QPoly target = x4.at(i, i);
        std::map<Exponents, std::array<Rat, 5>, std::greater<Exponents>> eqs;
        for (int k = 0; k < 4; ++k)
            for (const auto& [e, c] : cols[k].terms()) eqs[e][static_cast<std::size_t>(k)] += c;
        for (const auto& [e, c] : target.terms()) eqs[e][4] += c;
        for (const auto& [e, row] : eqs) rows.push_back({row[0], row[1], row[2], row[3], -row[4]});
    }
    // Solve [A | -b] v = 0 with the last coordinate scaled to 1.
    auto rn = rank_nullspace(QMatrix::from_rows(rows, Rat(0)));
    if (rn.nullspace.size() != 1 || sgn(rn.nullspace[0][4]) == 0)
        throw std::logic_error("Cayley-Hamilton system does not have a unique solution");
    const auto& v = rn.nullspace[0];
    CayleyHamilton ch;
    ch.c2 = v[0] / v[4];
    ch.c3 = v[1] / v[4];
    ch.c4_p22 = v[2] / v[4];
    ch.c4_p4 = v[3] / v[4];

    SymMatrix residual = x4;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            QPoly id = i == j ? QPoly::constant(vars, Rat(1)) : QPoly(vars);
            residual.at(i, j) -= ch.c2 * (p2 * x2.at(i, j)) + ch.c3 * (p3 * x.at(i, j)) +
                                 (ch.c4_p22 * (p2 * p2) + ch.c4_p4 * p4) * id;
        }
    ch.residual_zero = true;
    for (const auto& e : residual.e) ch.residual_zero = ch.residual_zero && e.is_zero();

    QPoly t5 = ev.trace(CyclicWord("xxxxx"));
    ch.trace_x5_identity = (t5 - make_rat(5, 6) * (p2 * p3)).is_zero();
    return ch;
}

}  // namespace matinv
