#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "matinv/multipoly.hpp"
#include "matinv/rational.hpp"

namespace matinv {

// A word over {x, y}, stored as a plain string of the letters 'x' and 'y'.
using Word = std::string;

struct Bidegree {
    int p = 0;  // number of x
    int q = 0;  // number of y
    auto operator<=>(const Bidegree&) const = default;
    int degree() const { return p + q; }
};

Bidegree bidegree_of(std::string_view w);

// Run-length key of a word written as x^a1 y^b1 ... x^ak y^bk: the tuple
// (a1, ..., ak, b1, ..., bk). Pure powers get (n) for x^n and (0, n) for y^n.
std::vector<int> run_key(std::string_view w);

// A word up to rotation. The stored representative is the rotation whose
// run key is lexicographically largest.
class CyclicWord {
public:
    // Throws std::invalid_argument on an empty word or a letter other than x, y.
    explicit CyclicWord(std::string_view w);

    const Word& word() const { return word_; }
    const std::vector<int>& key() const { return key_; }
    Bidegree bidegree() const { return bidegree_of(word_); }
    std::size_t length() const { return word_.size(); }

    // Greater key first; this is the order of every basis listing.
    friend bool operator==(const CyclicWord& a, const CyclicWord& b) { return a.word_ == b.word_; }
    friend bool operator<(const CyclicWord& a, const CyclicWord& b) {
        if (a.word_.size() != b.word_.size()) return a.word_.size() < b.word_.size();
        return a.key_ > b.key_;
    }

private:
    Word word_;
    std::vector<int> key_;
};

CyclicWord cyclic_canonicalize(std::string_view w);

// "x^2*y^2", "x*y*x*y".
std::string render_word(std::string_view w);

// Linear combination of traces of cyclic words.
class TracePoly {
public:
    using Map = std::map<CyclicWord, Rat>;

    TracePoly() = default;
    static TracePoly trace(std::string_view w, const Rat& c = Rat(1));

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coefficient(const CyclicWord& w) const;

    void add(const CyclicWord& w, const Rat& c);
    TracePoly& operator+=(const TracePoly& o);
    TracePoly& operator-=(const TracePoly& o);
    friend TracePoly operator+(TracePoly a, const TracePoly& b) { return a += b; }
    friend TracePoly operator-(TracePoly a, const TracePoly& b) { return a -= b; }
    friend TracePoly operator*(const Rat& s, const TracePoly& a);
    friend bool operator==(const TracePoly& a, const TracePoly& b) { return a.terms_ == b.terms_; }

    // Throws NotHomogeneous when the terms do not share one bidegree.
    Bidegree bidegree() const;
    bool is_homogeneous() const;

    // "tr(x^2*y^2) - 2*tr(x*y*x*y)"; "0" for the zero polynomial.
    std::string to_string() const;

private:
    Map terms_;
};

// Noncommutative polynomial in x, y: words with rational coefficients.
class NCPoly {
public:
    NCPoly() = default;
    static NCPoly word(std::string_view w, const Rat& c = Rat(1));
    static NCPoly x() { return word("x"); }
    static NCPoly y() { return word("y"); }
    static NCPoly commutator() { return word("xy") - word("yx"); }

    const std::map<Word, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
    friend NCPoly operator*(const Rat& s, const NCPoly& a);
    NCPoly pow(unsigned e) const;

    TracePoly trace() const;

private:
    std::map<Word, Rat> terms_;
};

// All cyclic words of bidegree b, greatest first.
std::vector<CyclicWord> enumerate_basis(Bidegree b);

// Sum over p+q = n of |enumerate_basis(p, q)| t^p u^q.
QPoly u_n_hilbert(int n);

// Derivation with delta(x) = 0, delta(y) = x, applied inside every trace.
TracePoly delta(const TracePoly& tp);
// The opposite derivation x -> y, y -> 0; moves (p, q) to (p - 1, q + 1).
TracePoly lower(const TracePoly& tp);

// tr([x,y]^s x^r).
TracePoly expand_bracket_power(int s, int r);
// tr([x,y]^3 (x^2y^2 - xy^2x - yx^2y + y^2x^2)), the degree 10 generator.
TracePoly expand_55_generator();

}  // namespace matinv
