#include "matinv/exprlang.hpp"

#include <algorithm>
#include <optional>
#include <cctype>
#include <set>
#include <stdexcept>

#include "matinv/errors.hpp"

namespace matinv {

// ---------------------------------------------------------------- nodes

ExprPtr TraceExpr::constant(Rat value) {
    auto e = std::make_shared<TraceExpr>();
    e->kind_ = Kind::Const;
    e->value_ = std::move(value);
    return e;
}

ExprPtr TraceExpr::trace(std::vector<TraceAtom> word) {
    if (word.empty()) throw std::invalid_argument("trace of an empty word");
    for (const auto& a : word)
        if (a.power < 1) throw std::invalid_argument("atom powers must be positive");
    auto e = std::make_shared<TraceExpr>();
    e->kind_ = Kind::Trace;
    e->word_ = std::move(word);
    return e;
}

ExprPtr TraceExpr::sum(std::vector<std::pair<Rat, ExprPtr>> terms) {
    if (terms.empty()) throw std::invalid_argument("empty sum");
    auto e = std::make_shared<TraceExpr>();
    e->kind_ = Kind::Sum;
    e->terms_ = std::move(terms);
    return e;
}

ExprPtr TraceExpr::product(std::vector<ExprPtr> factors) {
    if (factors.size() < 2) throw std::invalid_argument("products need at least two factors");
    auto e = std::make_shared<TraceExpr>();
    e->kind_ = Kind::Product;
    e->factors_ = std::move(factors);
    return e;
}

ExprPtr TraceExpr::power(ExprPtr base, int exponent) {
    if (exponent < 1) throw std::invalid_argument("power exponents must be positive");
    auto e = std::make_shared<TraceExpr>();
    e->kind_ = Kind::Power;
    e->base_ = std::move(base);
    e->exponent_ = exponent;
    return e;
}

bool equal(const TraceExpr& a, const TraceExpr& b) {
    if (a.kind_ != b.kind_) return false;
    switch (a.kind_) {
        case TraceExpr::Kind::Const:
            return a.value_ == b.value_;
        case TraceExpr::Kind::Trace:
            return a.word_ == b.word_;
        case TraceExpr::Kind::Sum:
            if (a.terms_.size() != b.terms_.size()) return false;
            for (std::size_t i = 0; i < a.terms_.size(); ++i)
                if (a.terms_[i].first != b.terms_[i].first || !equal(*a.terms_[i].second, *b.terms_[i].second))
                    return false;
            return true;
        case TraceExpr::Kind::Product:
            if (a.factors_.size() != b.factors_.size()) return false;
            for (std::size_t i = 0; i < a.factors_.size(); ++i)
                if (!equal(*a.factors_[i], *b.factors_[i])) return false;
            return true;
        case TraceExpr::Kind::Power:
            return a.exponent_ == b.exponent_ && equal(*a.base_, *b.base_);
    }
    return false;
}

// ---------------------------------------------------------------- parser

namespace {

class ExprParser {
public:
    explicit ExprParser(std::string_view s) : s_(s) {}

    ExprPtr parse_all() {
        auto e = expr();
        skip();
        if (pos_ != s_.size()) {
            if (peek() == ')') throw ParseError("unbalanced ')'", pos_);
            throw ParseError("unexpected character '" + std::string(1, peek()) + "'", pos_);
        }
        return e;
    }

private:
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    void expect(char c) {
        if (peek() != c) {
            if (pos_ >= s_.size()) throw ParseError(std::string("expected '") + c + "' before end of input", pos_);
            throw ParseError(std::string("expected '") + c + "'", pos_);
        }
        ++pos_;
    }
    bool starts_factor() {
        char c = peek();
        return c == '(' || (c == 't' && s_.substr(pos_, 2) == "tr");
    }

    ExprPtr expr() {
        std::vector<std::pair<Rat, ExprPtr>> terms;
        bool first = true;
        while (true) {
            char c = peek();
            Rat sign(1);
            if (c == '+' || c == '-') {
                if (c == '-') sign = -1;
                ++pos_;
            } else if (!first) {
                break;
            }
            auto [coeff, body] = term();
            terms.push_back({sign * coeff, body});
            first = false;
        }
        if (terms.size() == 1 && terms[0].first == 1) return terms[0].second;
        return TraceExpr::sum(std::move(terms));
    }

    std::pair<Rat, ExprPtr> term() {
        Rat coeff(1);
        std::vector<ExprPtr> factors;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            Rat r = number();
            if (peek() == '*') {
                ++pos_;
                if (!starts_factor()) throw ParseError("expected a factor after '*'", pos_);
            }
            if (!starts_factor()) return {Rat(1), TraceExpr::constant(r)};
            coeff = r;
        }
        if (!starts_factor()) {
            if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
            throw ParseError("expected a term", pos_);
        }
        factors.push_back(factor());
        while (true) {
            if (peek() == '*') {
                ++pos_;
                if (!starts_factor()) throw ParseError("expected a factor after '*'", pos_);
                factors.push_back(factor());
            } else if (starts_factor()) {
                factors.push_back(factor());
            } else {
                break;
            }
        }
        if (factors.size() == 1) return {coeff, factors[0]};
        return {coeff, TraceExpr::product(std::move(factors))};
    }

    Rat number() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            std::size_t d = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (d == pos_) throw ParseError("expected denominator", pos_);
        }
        try {
            return parse_rat(s_.substr(start, pos_ - start));
        } catch (const ParseError& e) {
            throw ParseError(e.reason(), start + e.position());
        }
    }

    int exponent() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected an exponent", pos_);
        if (pos_ - start > 4) throw ParseError("exponent too large", start);
        int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
        if (e == 0) throw ParseError("exponent 0 is not allowed", start);
        return e;
    }

    ExprPtr factor() {
        ExprPtr base;
        if (peek() == '(') {
            std::size_t open = pos_;
            ++pos_;
            base = expr();
            if (peek() != ')') throw ParseError("unbalanced '('", open);
            ++pos_;
        } else {
            pos_ += 2;  // "tr"
            expect('(');
            base = TraceExpr::trace(word());
            expect(')');
        }
        while (peek() == '^') {
            ++pos_;
            base = TraceExpr::power(base, exponent());
        }
        return base;
    }

    std::vector<TraceAtom> word() {
        std::vector<TraceAtom> atoms;
        while (true) {
            char c = peek();
            TraceAtom a;
            if (c == 'x') {
                a.kind = TraceAtom::Kind::X;
                ++pos_;
            } else if (c == 'y') {
                a.kind = TraceAtom::Kind::Y;
                ++pos_;
            } else if (c == '[') {
                std::size_t open = pos_;
                ++pos_;
                expect('x');
                expect(',');
                expect('y');
                if (peek() != ']') throw ParseError("unbalanced '['", open);
                ++pos_;
                a.kind = TraceAtom::Kind::Bracket;
            } else {
                if (atoms.empty()) throw ParseError("expected x, y or [x,y]", pos_);
                throw ParseError("unexpected character in trace argument", pos_);
            }
            while (peek() == '^') {
                ++pos_;
                a.power *= exponent();
            }
            atoms.push_back(a);
            if (peek() == '*') {
                ++pos_;
                continue;
            }
            c = peek();
            if (c == 'x' || c == 'y' || c == '[') continue;
            break;
        }
        return atoms;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

std::string print_atom(const TraceAtom& a) {
    std::string s = a.kind == TraceAtom::Kind::X ? "x" : a.kind == TraceAtom::Kind::Y ? "y" : "[x,y]";
    if (a.power != 1) s += "^" + std::to_string(a.power);
    return s;
}

std::string print_factor(const TraceExpr& e) {
    switch (e.kind()) {
        case TraceExpr::Kind::Trace:
            return print_expr(e);
        case TraceExpr::Kind::Power:
            return print_factor(*e.base()) + "^" + std::to_string(e.exponent());
        default:
            return "(" + print_expr(e) + ")";
    }
}

}  // namespace

ExprPtr parse_expr(std::string_view text) { return ExprParser(text).parse_all(); }

std::string print_expr(const TraceExpr& e) {
    switch (e.kind()) {
        case TraceExpr::Kind::Const:
            return e.value().get_str();
        case TraceExpr::Kind::Trace: {
            std::string s = "tr(";
            for (std::size_t i = 0; i < e.word().size(); ++i) s += (i ? "*" : "") + print_atom(e.word()[i]);
            return s + ")";
        }
        case TraceExpr::Kind::Power:
            return print_factor(e);
        case TraceExpr::Kind::Product: {
            std::string s;
            for (std::size_t i = 0; i < e.factors().size(); ++i) s += (i ? "*" : "") + print_factor(*e.factors()[i]);
            return s;
        }
        case TraceExpr::Kind::Sum: {
            std::string s;
            for (std::size_t i = 0; i < e.terms().size(); ++i) {
                const auto& [c, body] = e.terms()[i];
                Rat mag = abs(c);
                if (i == 0) {
                    if (sgn(c) < 0) s += "-";
                } else {
                    s += sgn(c) < 0 ? " - " : " + ";
                }
                // A constant body stays bare only where the parser would read
                // it back as a term of its own.
                bool wrap = body->kind() == TraceExpr::Kind::Sum ||
                            (body->kind() == TraceExpr::Kind::Const && (mag != 1 || sgn(body->value()) < 0));
                if (mag != 1) s += mag.get_str() + "*";
                s += wrap ? "(" + print_expr(*body) + ")" : print_expr(*body);
            }
            return s;
        }
    }
    return {};
}

NCPoly expand_word(const std::vector<TraceAtom>& word) {
    NCPoly acc = NCPoly::word("");
    for (const auto& a : word) {
        NCPoly base = a.kind == TraceAtom::Kind::X   ? NCPoly::x()
                      : a.kind == TraceAtom::Kind::Y ? NCPoly::y()
                                                     : NCPoly::commutator();
        acc = acc * base.pow(static_cast<unsigned>(a.power));
    }
    return acc;
}

// ---------------------------------------------------------------- formal

FormalTracePoly FormalTracePoly::constant(const Rat& c) {
    FormalTracePoly f;
    f.add({}, c);
    return f;
}

FormalTracePoly FormalTracePoly::from_trace_poly(const TracePoly& tp) {
    FormalTracePoly f;
    for (const auto& [w, c] : tp.terms()) f.add({w}, c);
    return f;
}

void FormalTracePoly::add(Monomial m, const Rat& c) {
    if (sgn(c) == 0) return;
    std::sort(m.begin(), m.end());
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted && sgn(it->second += c) == 0) terms_.erase(it);
}

FormalTracePoly& FormalTracePoly::operator+=(const FormalTracePoly& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

FormalTracePoly operator-(FormalTracePoly a, const FormalTracePoly& b) {
    for (const auto& [m, c] : b.terms_) a.add(m, -c);
    return a;
}

FormalTracePoly operator*(const FormalTracePoly& a, const FormalTracePoly& b) {
    FormalTracePoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            FormalTracePoly::Monomial m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            r.add(std::move(m), ca * cb);
        }
    return r;
}

FormalTracePoly operator*(const Rat& s, const FormalTracePoly& a) {
    FormalTracePoly r;
    if (sgn(s) == 0) return r;
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, s * c);
    return r;
}

std::vector<CyclicWord> FormalTracePoly::words() const {
    std::set<CyclicWord> seen;
    for (const auto& kv : terms_) seen.insert(kv.first.begin(), kv.first.end());
    return {seen.begin(), seen.end()};
}

Bidegree FormalTracePoly::bidegree() const {
    std::optional<Bidegree> b;
    for (const auto& kv : terms_) {
        Bidegree m;
        for (const auto& w : kv.first) {
            m.p += w.bidegree().p;
            m.q += w.bidegree().q;
        }
        if (b && *b != m) throw NotHomogeneous("expression mixes bidegrees: " + to_string());
        b = m;
    }
    return b.value_or(Bidegree{});
}

TracePoly FormalTracePoly::to_trace_poly() const {
    TracePoly t;
    for (const auto& [m, c] : terms_) {
        if (m.size() != 1) throw std::invalid_argument("not a linear combination of single traces: " + to_string());
        t.add(m[0], c);
    }
    return t;
}

std::string FormalTracePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat mag = abs(c);
        if (first) {
            if (sgn(c) < 0) out += "-";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < m.size();) {
            std::size_t j = i;
            while (j < m.size() && m[j] == m[i]) ++j;
            if (!mono.empty()) mono += "*";
            mono += "tr(" + render_word(m[i].word()) + ")";
            if (j - i > 1) mono += "^" + std::to_string(j - i);
            i = j;
        }
        if (mono.empty()) {
            out += mag.get_str();
        } else {
            if (mag != 1) out += mag.get_str() + "*";
            out += mono;
        }
    }
    return out;
}

FormalTracePoly expand_formal(const TraceExpr& e) {
    switch (e.kind()) {
        case TraceExpr::Kind::Const:
            return FormalTracePoly::constant(e.value());
        case TraceExpr::Kind::Trace:
            return FormalTracePoly::from_trace_poly(expand_word(e.word()).trace());
        case TraceExpr::Kind::Sum: {
            FormalTracePoly f;
            for (const auto& [c, body] : e.terms()) f += c * expand_formal(*body);
            return f;
        }
        case TraceExpr::Kind::Product: {
            FormalTracePoly f = FormalTracePoly::constant(Rat(1));
            for (const auto& factor : e.factors()) f = f * expand_formal(*factor);
            return f;
        }
        case TraceExpr::Kind::Power: {
            FormalTracePoly base = expand_formal(*e.base());
            FormalTracePoly f = FormalTracePoly::constant(Rat(1));
            for (int i = 0; i < e.exponent(); ++i) f = f * base;
            return f;
        }
    }
    return {};
}

FormalTracePoly delta(const FormalTracePoly& f) {
    FormalTracePoly out;
    for (const auto& [m, c] : f.terms()) {
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i > 0 && m[i] == m[i - 1]) continue;
            std::size_t mult = 1;
            while (i + mult < m.size() && m[i + mult] == m[i]) ++mult;
            TracePoly d = delta(TracePoly::trace(m[i].word()));
            for (const auto& [w, dc] : d.terms()) {
                FormalTracePoly::Monomial next = m;
                next[i] = w;
                out.add(std::move(next), c * dc * Rat(static_cast<long>(mult)));
            }
        }
    }
    return out;
}

}  // namespace matinv
