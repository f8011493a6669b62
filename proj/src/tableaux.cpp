#include "matinv/tableaux.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "matinv/errors.hpp"
#include "matinv/linalg.hpp"

namespace matinv {

StdTableau StdTableau::make(std::vector<int> row1, std::vector<int> row2) {
    StdTableau t{Partition::make(static_cast<int>(row1.size()), static_cast<int>(row2.size())), std::move(row1),
                 std::move(row2)};
    const int n = t.shape.degree();
    std::vector<int> all = t.row1;
    all.insert(all.end(), t.row2.begin(), t.row2.end());
    std::sort(all.begin(), all.end());
    for (int i = 0; i < n; ++i)
        if (all[i] != i + 1) throw std::invalid_argument("tableau entries must be 1.." + std::to_string(n));
    auto increasing = [](const std::vector<int>& r) { return std::is_sorted(r.begin(), r.end()); };
    if (!increasing(t.row1) || !increasing(t.row2)) throw std::invalid_argument("tableau rows must increase");
    for (std::size_t i = 0; i < t.row2.size(); ++i)
        if (t.row1[i] >= t.row2[i]) throw std::invalid_argument("tableau columns must increase");
    return t;
}

StdTableau StdTableau::identity(Partition shape) {
    shape = Partition::make(shape.l1, shape.l2);
    std::vector<int> r1, r2;
    for (int i = 0; i < shape.l2; ++i) {
        r1.push_back(2 * i + 1);
        r2.push_back(2 * i + 2);
    }
    for (int k = 2 * shape.l2 + 1; k <= shape.degree(); ++k) r1.push_back(k);
    return make(r1, r2);
}

std::string StdTableau::to_string() const {
    auto join = [](const std::vector<int>& r) {
        std::string s;
        for (int v : r) s += (s.empty() ? "" : ",") + std::to_string(v);
        return s;
    };
    return "[" + join(row1) + " | " + join(row2) + "]";
}

void ModuleDecomp::add(Partition l, long m) {
    if (m == 0) return;
    if ((terms[l] += m) == 0) terms.erase(l);
}

long ModuleDecomp::multiplicity(Partition l) const {
    auto it = terms.find(l);
    return it == terms.end() ? 0 : it->second;
}

std::string ModuleDecomp::to_string() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [l, m] : terms) {
        if (!out.empty()) out += " + ";
        if (m != 1) out += std::to_string(m) + "*";
        out += "W" + l.to_string();
    }
    return out;
}

ModuleDecomp to_modules(const SchurDecomp& d) {
    ModuleDecomp m;
    for (const auto& [l, k] : d.terms) m.add(l, k);
    return m;
}

std::vector<StdTableau> standard_tableaux(Partition shape) {
    shape = Partition::make(shape.l1, shape.l2);
    const int n = shape.degree();
    std::vector<StdTableau> out;
    // Choose the second row; the filling is standard iff the i-th entry of
    // row 2 exceeds 2i (ballot condition).
    std::vector<int> r2(static_cast<std::size_t>(shape.l2));
    auto rec = [&](auto&& self, int i, int from) -> void {
        if (i == shape.l2) {
            std::vector<int> r1;
            for (int k = 1; k <= n; ++k)
                if (std::find(r2.begin(), r2.end(), k) == r2.end()) r1.push_back(k);
            out.push_back(StdTableau::make(r1, r2));
            return;
        }
        for (int v = std::max(from, 2 * i + 2); v <= n - (shape.l2 - i - 1); ++v) {
            r2[static_cast<std::size_t>(i)] = v;
            self(self, i + 1, v + 1);
        }
    };
    rec(rec, 0, 1);
    return out;
}

long hook_length_count(Partition shape) {
    shape = Partition::make(shape.l1, shape.l2);
    // n! / prod(hooks), computed exactly with GMP.
    BigInt num = 1, den = 1;
    for (int k = 2; k <= shape.degree(); ++k) num *= k;
    for (int j = 1; j <= shape.l1; ++j) den *= (shape.l1 - j) + 1 + (j <= shape.l2 ? 1 : 0);
    for (int j = 1; j <= shape.l2; ++j) den *= (shape.l2 - j) + 1;
    return BigInt(num / den).get_si();
}

TracePoly hwv_from_tableau(const StdTableau& t) {
    const int n = t.shape.degree();
    const int s = t.shape.l2;
    TracePoly out;
    std::string w(static_cast<std::size_t>(n), 'x');
    for (int mask = 0; mask < (1 << s); ++mask) {
        std::fill(w.begin(), w.end(), 'x');
        int sign = 1;
        for (int i = 0; i < s; ++i) {
            bool swapped = mask >> i & 1;
            w[static_cast<std::size_t>((swapped ? t.row1[i] : t.row2[i]) - 1)] = 'y';
            if (swapped) sign = -sign;
        }
        out.add(CyclicWord(w), Rat(sign));
    }
    return out;
}

namespace {

struct RawEntry {
    std::vector<int> row1, row2;
    long num = 1, den = 1;
};

// Tableaux and scale factors of the catalogued bases, keyed by shape.
const std::map<Partition, std::vector<RawEntry>>& raw_catalogue() {
    static const std::map<Partition, std::vector<RawEntry>> cat = {
        {{2, 2}, {{{1, 3}, {2, 4}, 1, 2}}},
        {{3, 2}, {{{1, 3, 5}, {2, 4}}}},
        {{4, 2}, {{{1, 3, 5, 6}, {2, 4}}, {{1, 2, 5, 6}, {3, 4}}}},
        {{3, 3}, {{{1, 3, 5}, {2, 4, 6}, 1, 3}}},
        {{5, 2}, {{{1, 3, 5, 6, 7}, {2, 4}}, {{1, 2, 5, 6, 7}, {3, 4}}}},
        {{4, 3}, {{{1, 3, 5, 7}, {2, 4, 6}}, {{1, 2, 5, 7}, {3, 4, 6}}}},
        {{6, 2}, {{{1, 3, 5, 6, 7, 8}, {2, 4}}, {{1, 2, 5, 6, 7, 8}, {3, 4}}, {{1, 3, 4, 6, 7, 8}, {2, 5}}}},
        {{5, 3}, {{{1, 3, 5, 7, 8}, {2, 4, 6}}, {{1, 2, 5, 7, 8}, {3, 4, 6}}, {{1, 3, 5, 6, 8}, {2, 4, 7}}}},
        {{4, 4},
         {{{1, 3, 5, 7}, {2, 4, 6, 8}, 1, 2}, {{1, 2, 5, 7}, {3, 4, 6, 8}}, {{1, 2, 5, 6}, {3, 4, 7, 8}, 1, 2}}},
        {{7, 2},
         {{{1, 3, 5, 6, 7, 8, 9}, {2, 4}}, {{1, 2, 5, 6, 7, 8, 9}, {3, 4}}, {{1, 2, 4, 6, 7, 8, 9}, {3, 5}}}},
        {{6, 3},
         {{{1, 3, 5, 7, 8, 9}, {2, 4, 6}},
          {{1, 2, 5, 7, 8, 9}, {3, 4, 6}},
          {{1, 2, 4, 7, 8, 9}, {3, 5, 6}},
          {{1, 3, 5, 6, 8, 9}, {2, 4, 7}},
          {{1, 3, 5, 6, 7, 9}, {2, 4, 8}},
          {{1, 2, 4, 6, 8, 9}, {3, 5, 7}}}},
        {{5, 4},
         {{{1, 3, 5, 7, 9}, {2, 4, 6, 8}},
          {{1, 2, 5, 7, 9}, {3, 4, 6, 8}},
          {{1, 2, 4, 7, 9}, {3, 5, 6, 8}},
          {{1, 2, 3, 4, 9}, {5, 6, 7, 8}}}},
        {{8, 2},
         {{{1, 3, 5, 6, 7, 8, 9, 10}, {2, 4}},
          {{1, 3, 4, 6, 7, 8, 9, 10}, {2, 5}},
          {{1, 3, 4, 5, 7, 8, 9, 10}, {2, 6}},
          {{1, 3, 4, 5, 6, 8, 9, 10}, {2, 7}}}},
        {{7, 3},
         {{{1, 3, 5, 7, 8, 9, 10}, {2, 4, 6}},
          {{1, 3, 5, 6, 8, 9, 10}, {2, 4, 7}},
          {{1, 3, 5, 6, 7, 9, 10}, {2, 4, 8}},
          {{1, 3, 5, 6, 7, 8, 10}, {2, 4, 9}},
          {{1, 2, 5, 6, 7, 9, 10}, {3, 4, 8}},
          {{1, 3, 4, 7, 8, 9, 10}, {2, 5, 6}},
          {{1, 2, 3, 7, 8, 9, 10}, {4, 5, 6}}}},
        {{6, 4},
         {{{1, 3, 5, 7, 9, 10}, {2, 4, 6, 8}},
          {{1, 2, 3, 4, 5, 6}, {7, 8, 9, 10}},
          {{1, 2, 3, 7, 9, 10}, {4, 5, 6, 8}},
          {{1, 2, 5, 7, 9, 10}, {3, 4, 6, 8}},
          {{1, 2, 5, 6, 9, 10}, {3, 4, 7, 8}},
          {{1, 2, 5, 6, 7, 10}, {3, 4, 8, 9}},
          {{1, 3, 4, 7, 8, 10}, {2, 5, 6, 9}},
          {{1, 2, 4, 6, 8, 10}, {3, 5, 7, 9}},
          {{1, 3, 4, 5, 8, 9}, {2, 6, 7, 10}},
          {{1, 3, 4, 7, 9, 10}, {2, 5, 6, 8}}}},
        {{5, 5},
         {{{1, 3, 5, 7, 9}, {2, 4, 6, 8, 10}},
          {{1, 3, 5, 7, 8}, {2, 4, 6, 9, 10}},
          {{1, 3, 5, 6, 7}, {2, 4, 8, 9, 10}},
          {{1, 2, 3, 4, 9}, {5, 6, 7, 8, 10}}}},
    };
    return cat;
}

std::map<Partition, std::vector<CatalogueEntry>> build_catalogue() {
    std::map<Partition, std::vector<CatalogueEntry>> out;
    for (int n = 1; n <= 10; ++n) {
        auto t = StdTableau::identity({n, 0});
        out[{n, 0}].push_back({t, Rat(1), hwv_from_tableau(t)});
    }
    for (const auto& [shape, entries] : raw_catalogue()) {
        for (const auto& e : entries) {
            auto t = StdTableau::make(e.row1, e.row2);
            if (t.shape != shape) throw std::logic_error("catalogue tableau has the wrong shape");
            Rat scale = make_rat(e.num, e.den);
            out[shape].push_back({t, scale, scale * hwv_from_tableau(t)});
        }
    }
    return out;
}

const std::map<Partition, std::vector<CatalogueEntry>>& catalogue() {
    static const auto cat = build_catalogue();
    return cat;
}

}  // namespace

std::vector<Partition> catalogued_shapes() {
    std::vector<Partition> out;
    for (const auto& kv : catalogue()) out.push_back(kv.first);
    std::sort(out.begin(), out.end(), [](Partition a, Partition b) {
        return a.degree() != b.degree() ? a.degree() < b.degree() : a.l1 > b.l1;
    });
    return out;
}

const std::vector<CatalogueEntry>& catalogue_entries(Partition shape) {
    auto it = catalogue().find(shape);
    if (it == catalogue().end()) throw std::out_of_range("shape " + shape.to_string() + " is not catalogued");
    return it->second;
}

std::vector<TracePoly> catalogue_basis(Partition shape) {
    std::vector<TracePoly> out;
    for (const auto& e : catalogue_entries(shape)) out.push_back(e.value);
    return out;
}

std::vector<std::vector<Rat>> coefficient_matrix(const std::vector<TracePoly>& vs) {
    if (vs.empty()) return {};
    std::optional<Bidegree> b;
    for (const auto& v : vs) {
        if (v.is_zero()) continue;
        Bidegree bv = v.bidegree();
        if (b && *b != bv) throw NotHomogeneous("vectors of different bidegrees");
        b = bv;
    }
    if (!b) return std::vector<std::vector<Rat>>(vs.size());
    auto basis = enumerate_basis(*b);
    std::vector<std::vector<Rat>> rows;
    for (const auto& v : vs) {
        rows.emplace_back();
        for (const auto& w : basis) rows.back().push_back(v.coefficient(w));
    }
    return rows;
}

std::size_t independence_rank(const std::vector<TracePoly>& vs) {
    auto rows = coefficient_matrix(vs);
    if (rows.empty() || rows.front().empty()) return 0;
    return rank(QMatrix::from_rows(rows, Rat(0)));
}

}  // namespace matinv
