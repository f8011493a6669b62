#pragma once

#include <map>
#include <string>
#include <vector>

#include "matinv/rational.hpp"
#include "matinv/schur.hpp"
#include "matinv/words.hpp"

namespace matinv {

struct StdTableau {
    Partition shape;
    std::vector<int> row1;
    std::vector<int> row2;

    // Throws std::invalid_argument unless the rows form a standard filling
    // of 1..n with row lengths l1, l2.
    static StdTableau make(std::vector<int> row1, std::vector<int> row2);
    // Row 1 = 1,3,...,2*l2-1,2*l2+1,...,n and row 2 = 2,4,...,2*l2.
    static StdTableau identity(Partition shape);

    friend bool operator==(const StdTableau&, const StdTableau&) = default;
    std::string to_string() const;  // "[1,3,5,6 | 2,4]"
};

struct ModuleDecomp {
    std::map<Partition, long, std::greater<Partition>> terms;

    void add(Partition l, long m = 1);
    long multiplicity(Partition l) const;
    friend bool operator==(const ModuleDecomp&, const ModuleDecomp&) = default;
    std::string to_string() const;  // "W(4,2) + 2*W(3,3)"; "0" when empty
};

ModuleDecomp to_modules(const SchurDecomp& d);

// All standard tableaux of the shape, in lexicographic order of row 2.
std::vector<StdTableau> standard_tableaux(Partition shape);
long hook_length_count(Partition shape);

// Sum over the 2^l2 ways of placing x, y at each column pair (row1[i],
// row2[i]): x at the top entry and y at the bottom entry counts +1, the swap
// counts -1; every other position holds x. The product is traced.
TracePoly hwv_from_tableau(const StdTableau& t);

// One highest weight vector of a catalogued basis: scale * w(tableau).
struct CatalogueEntry {
    StdTableau tableau;
    Rat scale;
    TracePoly value;
};

// Shapes of degree <= 10 covered by the catalogue: every (n, 0) and every
// two-row shape with l2 >= 2 and l1 + l2 <= 10.
std::vector<Partition> catalogued_shapes();
// Throws std::out_of_range for a shape outside the catalogue.
const std::vector<CatalogueEntry>& catalogue_entries(Partition shape);
std::vector<TracePoly> catalogue_basis(Partition shape);

// Coefficient matrix of vs over enumerate_basis of their common bidegree.
// Throws NotHomogeneous on mixed bidegrees.
std::vector<std::vector<Rat>> coefficient_matrix(const std::vector<TracePoly>& vs);
std::size_t independence_rank(const std::vector<TracePoly>& vs);

}  // namespace matinv
