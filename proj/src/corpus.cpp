#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "matinv/errors.hpp"
#include "matinv/exprlang.hpp"
#include "matinv/tableaux.hpp"

namespace matinv {

namespace {

std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

struct Entry {
    std::string key;
    std::string value;
    std::size_t line = 0;
};

struct Block {
    std::string kind;  // shape | record | family
    std::string id;
    std::size_t line = 0;
    std::vector<Entry> entries;
};

[[noreturn]] void fail(const Block& b, std::size_t line, const std::string& what) {
    throw Error("corpus block '" + b.id + "' (line " + std::to_string(line) + "): " + what);
}

std::vector<Block> split_blocks(std::string_view text) {
    std::vector<Block> blocks;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        if (line[0] == '[') {
            if (line.back() != ']') throw Error("corpus line " + std::to_string(lineno) + ": unterminated block header");
            std::string inner = trim(std::string_view(line).substr(1, line.size() - 2));
            auto sp = inner.find(' ');
            if (sp == std::string::npos) throw Error("corpus line " + std::to_string(lineno) + ": block header needs a kind and an id");
            blocks.push_back({inner.substr(0, sp), trim(std::string_view(inner).substr(sp + 1)), lineno, {}});
            continue;
        }
        if (blocks.empty()) throw Error("corpus line " + std::to_string(lineno) + ": content before the first block");
        Block& b = blocks.back();
        if (std::isspace(static_cast<unsigned char>(raw[0]))) {
            if (b.entries.empty()) fail(b, lineno, "continuation line without an entry");
            b.entries.back().value += " " + line;
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) fail(b, lineno, "expected 'key = value'");
        b.entries.push_back({trim(std::string_view(line).substr(0, eq)), trim(std::string_view(line).substr(eq + 1)), lineno});
    }
    return blocks;
}

Partition parse_shape(const Block& b, std::size_t line, const std::string& s) {
    int l1 = 0, l2 = 0;
    char tail = 0;
    if (std::sscanf(s.c_str(), " (%d,%d)%c", &l1, &l2, &tail) != 2) fail(b, line, "bad shape '" + s + "'");
    try {
        return Partition::make(l1, l2);
    } catch (const std::invalid_argument&) {
        fail(b, line, "bad shape '" + s + "'");
    }
}

bool is_term_name(const std::string& n) {
    if (n.size() < 2 || (n[0] != 'w' && n[0] != 'v')) return false;
    for (std::size_t i = 1; i < n.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(n[i]))) return false;
    return n[1] != '0';
}

// "6w1 - 12w2 + 5/2 v1": optional sign, optional rational, optional '*', name.
std::vector<NamedTerm> parse_terms(const Block& b, std::size_t line, const std::string& s) {
    std::vector<NamedTerm> out;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    skip();
    bool first = true;
    while (i < s.size()) {
        bool neg = false;
        if (s[i] == '+' || s[i] == '-') {
            neg = s[i] == '-';
            ++i;
            skip();
        } else if (!first) {
            fail(b, line, "expected '+' or '-' at offset " + std::to_string(i) + " in terms");
        }
        std::size_t start = i;
        while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
        Rat c(1);
        if (i > start) {
            try {
                c = parse_rat(std::string_view(s).substr(start, i - start));
            } catch (const ParseError&) {
                fail(b, line, "bad coefficient in terms");
            }
            skip();
            if (i < s.size() && s[i] == '*') {
                ++i;
                skip();
            }
        }
        start = i;
        while (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i]))) ++i;
        std::string name = s.substr(start, i - start);
        if (!is_term_name(name)) fail(b, line, "expected a term name such as w1 or v2, got '" + name + "'");
        out.push_back({name, neg ? Rat(-c) : c});
        skip();
        first = false;
    }
    if (out.empty()) fail(b, line, "empty terms");
    return out;
}

const Entry* find_entry(const Block& b, const std::string& key) {
    for (const auto& e : b.entries)
        if (e.key == key) return &e;
    return nullptr;
}

const Entry& require_entry(const Block& b, const std::string& key) {
    if (auto* e = find_entry(b, key)) return *e;
    fail(b, b.line, "missing '" + key + "'");
}

std::size_t name_index(const std::string& name) { return std::stoul(name.substr(1)); }

}  // namespace

const ShapeDefinitions& Corpus::definitions(Partition shape) const {
    for (const auto& s : shapes)
        if (s.shape == shape) return s;
    throw std::out_of_range("no corpus definitions for shape " + shape.to_string());
}

const RelationRecord& Corpus::record(std::string_view id) const {
    for (const auto& r : records)
        if (r.id == id) return r;
    throw std::out_of_range("no corpus record " + std::string(id));
}

FormalTracePoly Corpus::named(Partition shape, std::string_view name) const {
    std::string n(name);
    if (!is_term_name(n)) throw std::invalid_argument("bad term name " + n);
    if (n[0] == 'w') {
        const auto& entries = catalogue_entries(shape);
        std::size_t k = name_index(n);
        if (k > entries.size()) throw std::out_of_range(n + " exceeds the catalogue of " + shape.to_string());
        return FormalTracePoly::from_trace_poly(entries[k - 1].value);
    }
    for (const auto& [vn, e] : definitions(shape).vs)
        if (vn == n) return expand_formal(*e);
    throw std::out_of_range(n + " is not defined for " + shape.to_string());
}

FormalTracePoly Corpus::assemble(const RelationRecord& r) const {
    FormalTracePoly acc;
    for (const auto& t : r.terms) acc += t.coefficient * named(r.shape, t.name);
    return acc;
}

Corpus parse_corpus(std::string_view text) {
    Corpus c;
    std::set<std::string> ids;
    auto add_record = [&](const Block& b, RelationRecord r) {
        if (!ids.insert(r.id).second) fail(b, b.line, "duplicate record id " + r.id);
        c.records.push_back(std::move(r));
    };

    for (const Block& b : split_blocks(text)) {
        if (b.kind == "shape") {
            ShapeDefinitions d;
            d.shape = parse_shape(b, b.line, b.id);
            for (const auto& s : c.shapes)
                if (s.shape == d.shape) fail(b, b.line, "shape defined twice");
            for (const auto& e : b.entries) {
                if (e.key == "note") {
                    d.notes.push_back(e.value);
                    continue;
                }
                if (!is_term_name(e.key) || e.key[0] != 'v') fail(b, e.line, "unknown key '" + e.key + "'");
                if (name_index(e.key) != d.vs.size() + 1) fail(b, e.line, e.key + " out of order");
                try {
                    d.vs.emplace_back(e.key, parse_expr(e.value));
                } catch (const ParseError& err) {
                    fail(b, e.line, e.key + ": " + err.what());
                }
            }
            c.shapes.push_back(std::move(d));
        } else if (b.kind == "record") {
            RelationRecord r;
            r.id = b.id;
            const Entry& se = require_entry(b, "shape");
            r.shape = parse_shape(b, se.line, se.value);
            const Entry& te = require_entry(b, "terms");
            r.terms = parse_terms(b, te.line, te.value);
            for (const auto& e : b.entries) {
                if (e.key == "note")
                    r.notes.push_back(e.value);
                else if (e.key != "shape" && e.key != "terms")
                    fail(b, e.line, "unknown key '" + e.key + "'");
            }
            add_record(b, std::move(r));
        } else if (b.kind == "family") {
            // sum_i alpha_i w_i + sum_j beta_j(alpha) v_j, beta_j = scale * <row, alpha>.
            const Entry& se = require_entry(b, "shape");
            Partition shape = parse_shape(b, se.line, se.value);
            const Entry& ae = require_entry(b, "alphas");
            std::size_t n = std::stoul(ae.value);
            std::vector<std::pair<std::string, std::vector<Rat>>> betas;
            for (const auto& e : b.entries) {
                if (e.key == "shape" || e.key == "alphas") continue;
                if (e.key.rfind("beta", 0) != 0) fail(b, e.line, "unknown key '" + e.key + "'");
                std::string vname = "v" + e.key.substr(4);
                if (!is_term_name(vname)) fail(b, e.line, "bad beta name");
                auto colon = e.value.find(':');
                if (colon == std::string::npos) fail(b, e.line, "expected 'scale : coefficients'");
                Rat scale;
                try {
                    scale = parse_rat(trim(std::string_view(e.value).substr(0, colon)));
                } catch (const ParseError&) {
                    fail(b, e.line, "bad scale");
                }
                std::istringstream row(e.value.substr(colon + 1));
                std::vector<Rat> coeffs;
                std::string tok;
                while (row >> tok) {
                    try {
                        coeffs.push_back(scale * parse_rat(tok));
                    } catch (const ParseError&) {
                        fail(b, e.line, "bad coefficient '" + tok + "'");
                    }
                }
                if (coeffs.size() != n) fail(b, e.line, "expected " + std::to_string(n) + " coefficients");
                betas.emplace_back(vname, std::move(coeffs));
            }
            for (std::size_t k = 0; k < n; ++k) {
                RelationRecord r;
                r.id = b.id + "-" + std::to_string(k + 1);
                r.shape = shape;
                r.terms.push_back({"w" + std::to_string(k + 1), Rat(1)});
                for (const auto& [vname, coeffs] : betas)
                    if (!is_zero(coeffs[k])) r.terms.push_back({vname, coeffs[k]});
                r.notes.push_back("instance of the linear family at alpha = e" + std::to_string(k + 1));
                add_record(b, std::move(r));
            }
        } else {
            fail(b, b.line, "unknown block kind '" + b.kind + "'");
        }
    }

    // Every name must resolve; shape notes travel with the records.
    for (auto& r : c.records) {
        const ShapeDefinitions* defs = nullptr;
        for (const auto& s : c.shapes)
            if (s.shape == r.shape) defs = &s;
        for (const auto& t : r.terms) {
            std::size_t k = name_index(t.name);
            std::size_t limit = t.name[0] == 'w' ? catalogue_entries(r.shape).size() : (defs ? defs->vs.size() : 0);
            if (k > limit) throw Error("corpus record '" + r.id + "': " + t.name + " is undefined");
        }
        if (defs) r.notes.insert(r.notes.begin(), defs->notes.begin(), defs->notes.end());
    }
    return c;
}

std::string default_corpus_path() {
    if (const char* env = std::getenv("MATINV_CORPUS"); env && *env) return env;
#ifdef MATINV_DEFAULT_CORPUS
    return MATINV_DEFAULT_CORPUS;
#else
    return "data/corpus/relations.txt";
#endif
}

Corpus load_corpus(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open corpus file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_corpus(ss.str());
}

}  // namespace matinv
