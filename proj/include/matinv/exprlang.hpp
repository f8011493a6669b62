#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matinv/rational.hpp"
#include "matinv/schur.hpp"
#include "matinv/words.hpp"

namespace matinv {

// One letter of a trace argument: x, y or the commutator [x,y], raised to a
// positive power.
struct TraceAtom {
    enum class Kind { X, Y, Bracket };
    Kind kind = Kind::X;
    int power = 1;
    friend bool operator==(const TraceAtom&, const TraceAtom&) = default;
};

class TraceExpr;
using ExprPtr = std::shared_ptr<const TraceExpr>;

// Expression tree over formal traces. Nodes are immutable and shared.
class TraceExpr {
public:
    enum class Kind { Const, Trace, Sum, Product, Power };

    static ExprPtr constant(Rat value);
    static ExprPtr trace(std::vector<TraceAtom> word);
    static ExprPtr sum(std::vector<std::pair<Rat, ExprPtr>> terms);
    static ExprPtr product(std::vector<ExprPtr> factors);
    static ExprPtr power(ExprPtr base, int exponent);

    Kind kind() const { return kind_; }
    const Rat& value() const { return value_; }
    const std::vector<TraceAtom>& word() const { return word_; }
    const std::vector<std::pair<Rat, ExprPtr>>& terms() const { return terms_; }
    const std::vector<ExprPtr>& factors() const { return factors_; }
    const ExprPtr& base() const { return base_; }
    int exponent() const { return exponent_; }

    friend bool equal(const TraceExpr& a, const TraceExpr& b);

private:
    Kind kind_ = Kind::Const;
    Rat value_;
    std::vector<TraceAtom> word_;
    std::vector<std::pair<Rat, ExprPtr>> terms_;
    std::vector<ExprPtr> factors_;
    ExprPtr base_;
    int exponent_ = 1;
};

bool equal(const TraceExpr& a, const TraceExpr& b);

// Grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := rat ['*'] factor ('*'? factor)* | rat | factor ('*'? factor)*
//   factor := primary ('^' int)*
//   primary:= 'tr' '(' word ')' | '(' expr ')'
//   word   := atom ('*'? atom)*
//   atom   := ('x' | 'y' | '[x,y]') ('^' int)*
// Factors may be juxtaposed as in tr(x^3)tr(x*y^2). Throws ParseError with
// the offending position.
ExprPtr parse_expr(std::string_view text);
std::string print_expr(const TraceExpr& e);

// Noncommutative expansion of a trace argument.
NCPoly expand_word(const std::vector<TraceAtom>& word);

// Commutative polynomial in the symbols tr(w): each monomial is a sorted
// list of cyclic words (with repetition).
class FormalTracePoly {
public:
    using Monomial = std::vector<CyclicWord>;

    static FormalTracePoly constant(const Rat& c);
    static FormalTracePoly from_trace_poly(const TracePoly& tp);

    const std::map<Monomial, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(Monomial m, const Rat& c);
    FormalTracePoly& operator+=(const FormalTracePoly& o);
    friend FormalTracePoly operator+(FormalTracePoly a, const FormalTracePoly& b) { return a += b; }
    friend FormalTracePoly operator-(FormalTracePoly a, const FormalTracePoly& b);
    friend FormalTracePoly operator*(const FormalTracePoly& a, const FormalTracePoly& b);
    friend FormalTracePoly operator*(const Rat& s, const FormalTracePoly& a);
    friend bool operator==(const FormalTracePoly&, const FormalTracePoly&) = default;

    // Distinct cyclic words appearing anywhere.
    std::vector<CyclicWord> words() const;
    // Throws NotHomogeneous unless all monomials share one bidegree.
    Bidegree bidegree() const;
    // Throws std::invalid_argument when a monomial is not a single trace.
    TracePoly to_trace_poly() const;
    std::string to_string() const;

private:
    std::map<Monomial, Rat> terms_;
};

FormalTracePoly expand_formal(const TraceExpr& e);

// delta applied by the Leibniz rule to every trace factor.
FormalTracePoly delta(const FormalTracePoly& f);

// ------------------------------------------------------------------ corpus

// A named element w_i (from the tableau catalogue) or v_j (an expression).
struct NamedTerm {
    std::string name;  // "w1", "v3", ...
    Rat coefficient;
};

struct RelationRecord {
    std::string id;  // "(5,3)-1"
    Partition shape;
    std::vector<NamedTerm> terms;
    std::vector<std::string> notes;
};

struct ShapeDefinitions {
    Partition shape;
    // v_j definitions in the order they appear.
    std::vector<std::pair<std::string, ExprPtr>> vs;
    std::vector<std::string> notes;
};

struct Corpus {
    std::vector<ShapeDefinitions> shapes;
    std::vector<RelationRecord> records;

    const ShapeDefinitions& definitions(Partition shape) const;
    const RelationRecord& record(std::string_view id) const;
    // Assembles sum c_i w_i + sum d_j v_j for a record.
    FormalTracePoly assemble(const RelationRecord& r) const;
    // The value bound to a name ("w2" or "v5") for a shape.
    FormalTracePoly named(Partition shape, std::string_view name) const;
};

// Path from MATINV_CORPUS, falling back to the bundled corpus file.
std::string default_corpus_path();
// Parse failures are reported with the enclosing block id.
Corpus parse_corpus(std::string_view text);
Corpus load_corpus(const std::string& path = default_corpus_path());

}  // namespace matinv
