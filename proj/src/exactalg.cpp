#include <cctype>
#include <map>
#include <mutex>
#include <stdexcept>

#include "matinv/errors.hpp"
#include "matinv/multipoly.hpp"
#include "matinv/rational.hpp"
#include "matinv/zp.hpp"

namespace matinv {

Rat parse_rat(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    auto check_digits = [&](const std::string& part, std::size_t offset, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && i < part.size() && (part[i] == '-' || part[i] == '+')) ++i;
        if (i == part.size()) throw ParseError("expected digits in rational '" + s + "'", offset + i);
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                throw ParseError("unexpected character in rational '" + s + "'", offset + i);
    };
    std::string num = s.substr(0, slash);
    check_digits(num, 0, true);
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    BigInt n(num);
    if (slash == std::string::npos) return Rat(n);
    std::string den = s.substr(slash + 1);
    check_digits(den, slash + 1, false);
    BigInt d(den);
    if (d == 0) throw ParseError("zero denominator in '" + s + "'", slash + 1);
    return make_rat(n, d);
}

Zp inverse(const Zp& a) {
    if (a.v == 0) throw std::domain_error("inverse of zero in F_p");
    return a.pow(a.p - 2);
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0) return n == small;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// ---------------------------------------------------------------- VarSet

namespace {

std::mutex& registry_mutex() {
    static std::mutex m;
    return m;
}

std::map<std::vector<std::string>, std::weak_ptr<const VarSet>>& registry() {
    static std::map<std::vector<std::string>, std::weak_ptr<const VarSet>> r;
    return r;
}

}  // namespace

VarSetPtr VarSet::intern(std::vector<std::string> names) {
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    if (names.size() > kMaxVars) throw std::invalid_argument("too many variables for a VarSet");
    std::lock_guard lock(registry_mutex());
    auto& slot = registry()[names];
    if (auto existing = slot.lock()) return existing;
    auto fresh = std::make_shared<const VarSet>(names);
    slot = fresh;
    return fresh;
}

VarSetPtr VarSet::unite(const VarSetPtr& a, const VarSetPtr& b) {
    if (a == b) return a;
    std::vector<std::string> all = a->names();
    all.insert(all.end(), b->names().begin(), b->names().end());
    return intern(std::move(all));
}

std::size_t VarSet::index_of(std::string_view name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name) throw std::out_of_range("unknown variable '" + std::string(name) + "'");
    return static_cast<std::size_t>(it - names_.begin());
}

bool VarSet::contains(std::string_view name) const {
    return std::binary_search(names_.begin(), names_.end(), name);
}

std::string format_monomial(const VarSet& vars, const Exponents& e) {
    std::string out;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += vars.name(i);
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

// ---------------------------------------------------------------- parsing

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, VarSetPtr vars) : s_(text), vars_(std::move(vars)) {}

    QPoly parse() {
        QPoly acc(vars_);
        skip();
        bool first = true;
        while (pos_ < s_.size()) {
            Rat sign(1);
            if (peek() == '+' || peek() == '-') {
                if (peek() == '-') sign = -1;
                ++pos_;
                skip();
            } else if (!first) {
                throw ParseError("expected '+' or '-'", pos_);
            }
            acc += sign * term();
            first = false;
            skip();
        }
        if (first) throw ParseError("empty polynomial", pos_);
        return acc;
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    QPoly term() {
        QPoly t = QPoly::constant(vars_, Rat(1));
        bool need_factor = true;
        while (need_factor) {
            skip();
            t *= factor();
            skip();
            need_factor = peek() == '*';
            if (need_factor) ++pos_;
        }
        return t;
    }

    QPoly factor() {
        std::size_t start = pos_;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/') ++pos_;
            return QPoly::constant(vars_, parse_rat(s_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(peek()))) {
            while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            if (!vars_->contains(name)) throw ParseError("unknown variable '" + name + "'", start);
            unsigned power = 1;
            skip();
            if (peek() == '^') {
                ++pos_;
                skip();
                std::size_t e0 = pos_;
                while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
                if (e0 == pos_) throw ParseError("expected exponent", pos_);
                power = static_cast<unsigned>(std::stoul(std::string(s_.substr(e0, pos_ - e0))));
                if (power > 255) throw ParseError("exponent too large", e0);
            }
            return QPoly::variable(vars_, name, Rat(1), static_cast<std::uint8_t>(power));
        }
        if (peek() == '(') {
            ++pos_;
            std::size_t close = pos_;
            for (int depth = 1; close < s_.size(); ++close) {
                if (s_[close] == '(') ++depth;
                if (s_[close] == ')' && --depth == 0) break;
            }
            if (close >= s_.size()) throw ParseError("unbalanced parenthesis", start);
            QPoly inner;
            try {
                inner = PolyParser(s_.substr(pos_, close - pos_), vars_).parse();
            } catch (const ParseError& e) {
                throw ParseError(e.reason(), pos_ + e.position());
            }
            pos_ = close + 1;
            return inner;
        }
        throw ParseError("unexpected character", pos_);
    }

    std::string_view s_;
    VarSetPtr vars_;
    std::size_t pos_ = 0;
};

}  // namespace

QPoly parse_qpoly(std::string_view text, const VarSetPtr& vars) { return PolyParser(text, vars).parse(); }

}  // namespace matinv
