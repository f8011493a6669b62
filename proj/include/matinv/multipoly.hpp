#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "matinv/rational.hpp"
#include "matinv/zp.hpp"

namespace matinv {

inline constexpr std::size_t kMaxVars = 32;

// Exponent vector; only the first VarSet::size() slots are meaningful, the
// rest stay zero so that equality and hashing work on the whole array.
using Exponents = std::array<std::uint8_t, kMaxVars>;

struct ExponentsHash {
    std::size_t operator()(const Exponents& e) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (std::size_t i = 0; i < kMaxVars; i += 8) {
            std::uint64_t chunk = 0;
            for (std::size_t j = 0; j < 8; ++j) chunk |= std::uint64_t(e[i + j]) << (8 * j);
            h ^= chunk + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h *= 0xbf58476d1ce4e5b9ULL;
        }
        return static_cast<std::size_t>(h ^ (h >> 31));
    }
};

inline Exponents add_exponents(const Exponents& a, const Exponents& b) {
    Exponents r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r[i] = static_cast<std::uint8_t>(a[i] + b[i]);
    return r;
}

inline int exponent_degree(const Exponents& e) {
    int d = 0;
    for (auto v : e) d += v;
    return d;
}

class VarSet;
using VarSetPtr = std::shared_ptr<const VarSet>;

// Ordered, interned list of variable names. Two polynomials share a varset
// iff their VarSetPtr compare equal.
class VarSet {
public:
    // Names are sorted lexicographically and deduplicated before interning.
    static VarSetPtr intern(std::vector<std::string> names);
    static VarSetPtr unite(const VarSetPtr& a, const VarSetPtr& b);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    // Throws std::out_of_range for unknown names.
    std::size_t index_of(std::string_view name) const;
    bool contains(std::string_view name) const;

    explicit VarSet(std::vector<std::string> sorted_names) : names_(std::move(sorted_names)) {}

private:
    std::vector<std::string> names_;
};

template <class C>
class MultiPoly {
public:
    using Coeff = C;
    using Term = std::pair<Exponents, C>;

    MultiPoly() : vars_(VarSet::intern({})) {}
    explicit MultiPoly(VarSetPtr vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(VarSetPtr vars, const C& c) {
        MultiPoly p(std::move(vars));
        if (!matinv::is_zero(c)) p.terms_.push_back({Exponents{}, c});
        return p;
    }

    static MultiPoly monomial(VarSetPtr vars, const Exponents& e, const C& c) {
        MultiPoly p(std::move(vars));
        if (!matinv::is_zero(c)) p.terms_.push_back({e, c});
        return p;
    }

    static MultiPoly variable(VarSetPtr vars, std::string_view name, const C& one, std::uint8_t power = 1) {
        Exponents e{};
        e[vars->index_of(name)] = power;
        return monomial(std::move(vars), e, one);
    }

    // Builds a polynomial from arbitrary (possibly repeated, possibly zero) terms.
    static MultiPoly from_terms(VarSetPtr vars, std::vector<Term> raw) {
        MultiPoly p(std::move(vars));
        std::sort(raw.begin(), raw.end(), [](const Term& a, const Term& b) { return a.first > b.first; });
        for (auto& t : raw) {
            if (!p.terms_.empty() && p.terms_.back().first == t.first) {
                p.terms_.back().second += t.second;
            } else {
                p.terms_.push_back(std::move(t));
            }
        }
        p.drop_zeros();
        return p;
    }

    const VarSetPtr& vars() const { return vars_; }
    // Terms sorted by exponent vector, lexicographically descending.
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    int total_degree() const {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, exponent_degree(t.first));
        return d;
    }

    const C* find(const Exponents& e) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                                   [](const Term& t, const Exponents& key) { return t.first > key; });
        if (it != terms_.end() && it->first == e) return &it->second;
        return nullptr;
    }

    // Re-expresses the polynomial over a superset of its variables.
    MultiPoly rebased(const VarSetPtr& target) const {
        if (target == vars_) return *this;
        std::vector<std::size_t> map(vars_->size());
        for (std::size_t i = 0; i < vars_->size(); ++i) map[i] = target->index_of(vars_->name(i));
        std::vector<Term> raw;
        raw.reserve(terms_.size());
        for (const auto& [e, c] : terms_) {
            Exponents f{};
            for (std::size_t i = 0; i < vars_->size(); ++i) f[map[i]] = e[i];
            raw.push_back({f, c});
        }
        return from_terms(target, std::move(raw));
    }

    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return merge(a, b, false); }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return merge(a, b, true); }
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) { return multiply(a, b, -1); }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    friend MultiPoly operator*(const C& s, const MultiPoly& a) {
        if (matinv::is_zero(s)) return MultiPoly(a.vars_);
        MultiPoly r = a;
        for (auto& t : r.terms_) t.second *= s;
        r.drop_zeros();
        return r;
    }

    // Product with every term of total degree > max_degree discarded.
    friend MultiPoly mul_truncated(const MultiPoly& a, const MultiPoly& b, int max_degree) {
        return multiply(a, b, max_degree);
    }

    MultiPoly pow(unsigned e) const {
        MultiPoly acc = constant(vars_, one_like_any());
        MultiPoly base = *this;
        if (e > 0 && is_zero()) return MultiPoly(vars_);
        while (e) {
            if (e & 1) acc *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return acc;
    }

    // Homogeneous component of the given total degree.
    MultiPoly component(int degree) const {
        MultiPoly r(vars_);
        for (const auto& t : terms_)
            if (exponent_degree(t.first) == degree) r.terms_.push_back(t);
        return r;
    }

    MultiPoly truncated(int max_degree) const {
        MultiPoly r(vars_);
        for (const auto& t : terms_)
            if (exponent_degree(t.first) <= max_degree) r.terms_.push_back(t);
        return r;
    }

    template <class F>
    auto map_coefficients(F&& f) const -> MultiPoly<std::decay_t<decltype(f(std::declval<const C&>()))>> {
        using D = std::decay_t<decltype(f(std::declval<const C&>()))>;
        MultiPoly<D> r(vars_);
        std::vector<typename MultiPoly<D>::Term> raw;
        raw.reserve(terms_.size());
        for (const auto& [e, c] : terms_) raw.push_back({e, f(c)});
        return MultiPoly<D>::from_terms(vars_, std::move(raw));
    }

    // Evaluates at values[i] for variable i; values.size() must equal the
    // number of variables. `one` supplies the multiplicative unit of C.
    C evaluate(std::span<const C> values, const C& one) const {
        C acc = zero_like(one);
        for (const auto& [e, c] : terms_) {
            C m = c;
            for (std::size_t i = 0; i < vars_->size(); ++i)
                for (int k = 0; k < e[i]; ++k) m *= values[i];
            acc += m;
        }
        return acc;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        if (a.vars_ != b.vars_) {
            auto u = VarSet::unite(a.vars_, b.vars_);
            return a.rebased(u).terms_ == b.rebased(u).terms_;
        }
        return a.terms_ == b.terms_;
    }

    std::string to_string() const;

private:
    C one_like_any() const {
        if (!terms_.empty()) return one_like(terms_.front().second);
        if constexpr (std::is_same_v<C, Zp>) {
            throw std::logic_error("MultiPoly<Zp>::pow of zero polynomial needs a modulus");
        } else {
            return C(1);
        }
    }

    void drop_zeros() {
        terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                    [](const Term& t) { return matinv::is_zero(t.second); }),
                     terms_.end());
    }

    static MultiPoly merge(const MultiPoly& a0, const MultiPoly& b0, bool subtract) {
        if (a0.vars_ != b0.vars_) {
            auto u = VarSet::unite(a0.vars_, b0.vars_);
            return merge(a0.rebased(u), b0.rebased(u), subtract);
        }
        MultiPoly r(a0.vars_);
        r.terms_.reserve(a0.terms_.size() + b0.terms_.size());
        auto i = a0.terms_.begin(), ie = a0.terms_.end();
        auto j = b0.terms_.begin(), je = b0.terms_.end();
        while (i != ie || j != je) {
            if (j == je || (i != ie && i->first > j->first)) {
                r.terms_.push_back(*i++);
            } else if (i == ie || j->first > i->first) {
                r.terms_.push_back({j->first, subtract ? C(-j->second) : j->second});
                ++j;
            } else {
                C c = subtract ? C(i->second - j->second) : C(i->second + j->second);
                if (!matinv::is_zero(c)) r.terms_.push_back({i->first, std::move(c)});
                ++i;
                ++j;
            }
        }
        return r;
    }

    static MultiPoly multiply(const MultiPoly& a0, const MultiPoly& b0, int max_degree) {
        if (a0.vars_ != b0.vars_) {
            auto u = VarSet::unite(a0.vars_, b0.vars_);
            return multiply(a0.rebased(u), b0.rebased(u), max_degree);
        }
        MultiPoly r(a0.vars_);
        if (a0.is_zero() || b0.is_zero()) return r;
        if (a0.size() == 1 && b0.size() == 1) {
            Exponents e = add_exponents(a0.terms_[0].first, b0.terms_[0].first);
            if (max_degree >= 0 && exponent_degree(e) > max_degree) return r;
            C c = a0.terms_[0].second * b0.terms_[0].second;
            if (!matinv::is_zero(c)) r.terms_.push_back({e, std::move(c)});
            return r;
        }
        std::unordered_map<Exponents, C, ExponentsHash> acc;
        acc.reserve(std::min<std::size_t>(a0.size() * b0.size(), 1u << 22));
        C prod = a0.terms_[0].second;
        for (const auto& [ea, ca] : a0.terms_) {
            for (const auto& [eb, cb] : b0.terms_) {
                Exponents e = add_exponents(ea, eb);
                if (max_degree >= 0 && exponent_degree(e) > max_degree) continue;
                prod = ca;
                prod *= cb;
                auto [it, inserted] = acc.try_emplace(e, prod);
                if (!inserted) it->second += prod;
            }
        }
        r.terms_.reserve(acc.size());
        for (auto& kv : acc)
            if (!matinv::is_zero(kv.second)) r.terms_.push_back({kv.first, std::move(kv.second)});
        std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& x, const Term& y) { return x.first > y.first; });
        return r;
    }

    VarSetPtr vars_;
    std::vector<Term> terms_;
};

using QPoly = MultiPoly<Rat>;
using ZpPoly = MultiPoly<Zp>;

std::string format_monomial(const VarSet& vars, const Exponents& e);

template <class C>
std::string MultiPoly<C>::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string mono = format_monomial(*vars_, e);
        std::string cs = matinv::to_string(c);
        bool negative = !cs.empty() && cs[0] == '-';
        if (negative) cs.erase(0, 1);
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        if (mono.empty()) {
            out += cs;
        } else if (cs == "1") {
            out += mono;
        } else {
            out += cs + "*" + mono;
        }
    }
    return out;
}

// Parses a polynomial such as "t^2 + 3/2*t*u - u^2" over the given variables.
QPoly parse_qpoly(std::string_view text, const VarSetPtr& vars);

}  // namespace matinv
