#include "matinv/words.hpp"

#include <set>
#include <stdexcept>

#include "matinv/errors.hpp"
#include "matinv/series.hpp"

namespace matinv {

Bidegree bidegree_of(std::string_view w) {
    Bidegree b;
    for (char c : w) (c == 'x' ? b.p : b.q)++;
    return b;
}

std::vector<int> run_key(std::string_view w) {
    std::vector<int> a, b;
    std::size_t i = 0;
    while (i < w.size()) {
        int cx = 0, cy = 0;
        while (i < w.size() && w[i] == 'x') ++cx, ++i;
        while (i < w.size() && w[i] == 'y') ++cy, ++i;
        a.push_back(cx);
        b.push_back(cy);
    }
    if (b.size() == 1 && b[0] == 0) return a;
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

CyclicWord::CyclicWord(std::string_view w) {
    if (w.empty()) throw std::invalid_argument("empty word has no trace");
    for (char c : w)
        if (c != 'x' && c != 'y') throw std::invalid_argument("letter outside {x, y} in word '" + std::string(w) + "'");
    const std::size_t n = w.size();
    std::string doubled = std::string(w) + std::string(w);
    bool first = true;
    for (std::size_t r = 0; r < n; ++r) {
        std::string_view rot(doubled.data() + r, n);
        // Only rotations starting with x and ending with y (or pure powers)
        // can carry the largest key; others are skipped for speed.
        bool mixed = rot.find('x') != std::string_view::npos && rot.find('y') != std::string_view::npos;
        if (mixed && (rot.front() != 'x' || rot.back() != 'y')) continue;
        auto key = run_key(rot);
        if (first || key > key_) {
            key_ = std::move(key);
            word_ = std::string(rot);
            first = false;
        }
    }
}

CyclicWord cyclic_canonicalize(std::string_view w) { return CyclicWord(w); }

std::string render_word(std::string_view w) {
    std::string out;
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (!out.empty()) out += "*";
        out += w[i];
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

// ---------------------------------------------------------------- TracePoly

TracePoly TracePoly::trace(std::string_view w, const Rat& c) {
    TracePoly t;
    t.add(CyclicWord(w), c);
    return t;
}

Rat TracePoly::coefficient(const CyclicWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rat(0) : it->second;
}

void TracePoly::add(const CyclicWord& w, const Rat& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (inserted) return;
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
}

TracePoly& TracePoly::operator+=(const TracePoly& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

TracePoly& TracePoly::operator-=(const TracePoly& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

TracePoly operator*(const Rat& s, const TracePoly& a) {
    TracePoly r;
    if (sgn(s) == 0) return r;
    for (const auto& [w, c] : a.terms_) r.terms_.emplace(w, s * c);
    return r;
}

bool TracePoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    Bidegree b = terms_.begin()->first.bidegree();
    for (const auto& t : terms_)
        if (t.first.bidegree() != b) return false;
    return true;
}

Bidegree TracePoly::bidegree() const {
    if (!is_homogeneous()) throw NotHomogeneous("trace polynomial mixes bidegrees: " + to_string());
    return terms_.empty() ? Bidegree{} : terms_.begin()->first.bidegree();
}

std::string TracePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        Rat mag = abs(c);
        if (first) {
            if (sgn(c) < 0) out += "-";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        first = false;
        if (mag != 1) out += mag.get_str() + "*";
        out += "tr(" + render_word(w.word()) + ")";
    }
    return out;
}

// ---------------------------------------------------------------- NCPoly

NCPoly NCPoly::word(std::string_view w, const Rat& c) {
    NCPoly p;
    if (sgn(c) != 0) p.terms_.emplace(std::string(w), c);
    return p;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted && sgn(it->second += c) == 0) terms_.erase(it);
    }
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) { return *this += Rat(-1) * o; }

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly r;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) r += NCPoly::word(wa + wb, ca * cb);
    return r;
}

NCPoly operator*(const Rat& s, const NCPoly& a) {
    NCPoly r;
    if (sgn(s) == 0) return r;
    for (const auto& [w, c] : a.terms_) r.terms_.emplace(w, s * c);
    return r;
}

NCPoly NCPoly::pow(unsigned e) const {
    NCPoly acc = word("");
    for (unsigned i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

TracePoly NCPoly::trace() const {
    TracePoly t;
    for (const auto& [w, c] : terms_) {
        if (w.empty()) throw std::invalid_argument("trace of a scalar term is not a word trace");
        t.add(CyclicWord(w), c);
    }
    return t;
}

// ---------------------------------------------------------------- bases

std::vector<CyclicWord> enumerate_basis(Bidegree b) {
    if (b.p < 0 || b.q < 0 || b.degree() < 1) throw std::invalid_argument("basis needs p, q >= 0 and p + q >= 1");
    const int n = b.degree();
    std::set<CyclicWord> seen;
    // Every subset of q positions holding y, as an increasing bitmask walk.
    std::string w(static_cast<std::size_t>(n), 'x');
    std::vector<int> pos(static_cast<std::size_t>(b.q));
    for (int i = 0; i < b.q; ++i) pos[i] = i;
    while (true) {
        std::fill(w.begin(), w.end(), 'x');
        for (int i : pos) w[static_cast<std::size_t>(i)] = 'y';
        seen.insert(CyclicWord(w));
        int i = b.q - 1;
        while (i >= 0 && pos[i] == n - b.q + i) --i;
        if (i < 0) break;
        ++pos[i];
        for (int j = i + 1; j < b.q; ++j) pos[j] = pos[j - 1] + 1;
    }
    return {seen.begin(), seen.end()};
}

QPoly u_n_hilbert(int n) {
    if (n < 1) throw std::invalid_argument("u_n_hilbert needs n >= 1");
    QPoly h(tu_vars());
    for (int p = 0; p <= n; ++p)
        h += tu_monomial(p, n - p, Rat(static_cast<long>(enumerate_basis({p, n - p}).size())));
    return h;
}

namespace {

TracePoly substitute_letter(const TracePoly& tp, char from, char to) {
    TracePoly out;
    for (const auto& [cw, c] : tp.terms()) {
        Word w = cw.word();
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] != from) continue;
            w[i] = to;
            out.add(CyclicWord(w), c);
            w[i] = from;
        }
    }
    return out;
}

}  // namespace

TracePoly delta(const TracePoly& tp) { return substitute_letter(tp, 'y', 'x'); }

TracePoly lower(const TracePoly& tp) { return substitute_letter(tp, 'x', 'y'); }

TracePoly expand_bracket_power(int s, int r) {
    if (s < 0 || r < 0 || s + r < 1) throw std::invalid_argument("bracket power needs s, r >= 0 and s + r >= 1");
    return (NCPoly::commutator().pow(static_cast<unsigned>(s)) * NCPoly::x().pow(static_cast<unsigned>(r))).trace();
}

TracePoly expand_55_generator() {
    NCPoly tail = NCPoly::word("xxyy") - NCPoly::word("xyyx") - NCPoly::word("yxxy") + NCPoly::word("yyxx");
    return (NCPoly::commutator().pow(3) * tail).trace();
}

}  // namespace matinv
