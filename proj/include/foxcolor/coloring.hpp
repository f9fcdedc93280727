#pragma once

// Fox colorings of a diagram: determinants, colorability, kernel solving,
// palette-restricted search, per-diagram minimum colors and normalization.

#include <optional>
#include <string>
#include <vector>

#include "foxcolor/colorset.hpp"
#include "foxcolor/diagram.hpp"
#include "foxcolor/modular.hpp"

namespace foxcolor {

struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotColorableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Arc-indexed assignment of residues satisfying every crossing relation.
struct Coloring {
    Modulus modulus;
    std::vector<int> values;  // one residue per arc index

    bool is_nontrivial() const;
    int distinct_colors() const;
};

bool check_coloring(const Diagram& d, const Coloring& c);

/// Basis of the mod-p solution space of the crossing relations.
struct KernelDescription {
    Modulus prime;
    int dimension = 0;
    std::vector<std::vector<int>> basis;  // arc-vectors over Z_p
};

// |first minor| of the coloring matrix (last row and column deleted),
// exact integer arithmetic; 0 for split inputs.
long long determinant(const Diagram& d);

// gcd(det, m) != 1, with gcd(0, m) = m.
bool is_colorable(const Diagram& d, const Modulus& m);

// Throws std::invalid_argument for composite p (use search_colorings there).
KernelDescription kernel_mod_p(const Diagram& d, const Modulus& p);

constexpr std::size_t kDefaultStateLimit = 10'000'000;

struct SearchOptions {
    std::optional<ColorSet> palette;
    std::size_t limit = 64;                        // max results returned
    std::size_t state_limit = kDefaultStateLimit;  // enumeration ceiling
};

// Nontrivial colorings with values from the palette (or all of Z_m).
// Prime m enumerates kernel combinations; composite m backtracks over arcs.
std::vector<Coloring> search_colorings(const Diagram& d, const Modulus& m,
                                       const SearchOptions& opts = {});

// n_{m,D}: minimum number of distinct values over all nontrivial m-colorings.
// Throws NotColorableError when no nontrivial coloring exists.
int diagram_min_colors(const Diagram& d, const Modulus& m,
                       std::size_t state_limit = kDefaultStateLimit);

// Affine change of colors making the coloring contain 0, 1 and 2, found from
// a polychromatic crossing. Odd prime modulus, non-split diagram.
std::pair<Coloring, AffineMap> normalize_coloring(const Diagram& d, const Coloring& c);

std::string coloring_json(const Diagram& d, const Coloring& c);

}  // namespace foxcolor
