#pragma once

// Color sets modulo m: equivalence under affine maps, canonical forms,
// the red/blue palette graph, obstruction tests and the census pipeline.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "foxcolor/modular.hpp"

namespace foxcolor {

/// A nonempty, strictly increasing subset of Z_m.
class ColorSet {
public:
    ColorSet(Modulus mod, std::vector<int> elements);

    const Modulus& modulus() const { return mod_; }
    const std::vector<int>& elements() const { return elems_; }
    std::size_t size() const { return elems_.size(); }
    bool contains(int c) const;

    ColorSet apply(const AffineMap& f) const;
    ColorSet without(int c) const;

    friend bool operator==(const ColorSet& a, const ColorSet& b) {
        return a.mod_ == b.mod_ && a.elems_ == b.elems_;
    }
    friend bool operator<(const ColorSet& a, const ColorSet& b) {
        return a.elems_ < b.elems_;
    }

    std::string str() const;  // "0,1,2,3,6"

private:
    Modulus mod_;
    std::vector<int> elems_;
};

// Lexicographically least sorted image over all automorphisms; idempotent.
ColorSet canonical_form(const ColorSet& s);

// First automorphism (enumeration order) carrying `from` onto `to`, if any.
std::optional<AffineMap> find_witness(const ColorSet& from, const ColorSet& to);

bool equivalent(const ColorSet& s1, const ColorSet& s2, AffineMap* witness = nullptr);

/// Edge-colored graph of a color set: red edges average over the integers,
/// blue edges only modulo m.
struct PaletteGraph {
    std::vector<int> vertices;
    std::vector<std::pair<int, int>> red_edges;
    std::vector<std::pair<int, int>> blue_edges;

    std::string to_dot() const;
};

PaletteGraph palette_graph(const ColorSet& s);

// Half-set obstruction for odd m = 2k+1: first automorphism mapping S into
// {0..k}, if one exists. Throws std::invalid_argument for even modulus.
std::optional<AffineMap> test_halfset(const ColorSet& s);

// True iff the palette graph has at least one blue edge (odd modulus only).
bool test_blue_edge(const ColorSet& s);

// Isolated vertices of the underlying graph (odd modulus only).
std::vector<int> test_isolated(const ColorSet& s);

// Connected components of the underlying graph.
int component_count(const ColorSet& s);

struct ObstructionReport {
    std::optional<AffineMap> halfset_failure;
    bool has_blue_edge = false;
    std::vector<int> isolated_vertices;
    int components = 0;
};

ObstructionReport obstruction_report(const ColorSet& s);

// A set passes when no half-set witness exists, a blue edge is present and
// no vertex is isolated.
bool passes_obstruction_tests(const ColorSet& s);

// All subsets of Z_m of the given cardinality containing `required`,
// lexicographic order.
std::vector<ColorSet> enumerate_sets(const Modulus& m, int cardinality,
                                     const std::vector<int>& required);

struct EquivalenceClass {
    ColorSet canonical;
    std::vector<ColorSet> members;  // in enumeration order
};

// Partition by canonical form, classes sorted by canonical representative.
// The parallel path and the serial reference produce identical output.
std::vector<EquivalenceClass> classify(const std::vector<ColorSet>& sets);
std::vector<EquivalenceClass> classify_serial(const std::vector<ColorSet>& sets);

// Classes of cardinality-k sets containing {0,1,2} in which every member
// passes the obstruction tests. Throws unless m is an odd prime.
std::vector<EquivalenceClass> candidate_minimal_sets(const Modulus& m, int cardinality);

enum class Verdict { kEquivalentToRep, kExcludedHalfset, kExcludedGraph };

std::string verdict_name(Verdict v);

struct VerdictRow {
    ColorSet set;
    Verdict verdict;
    ColorSet representative;  // surviving rep, or the excluding image
    AffineMap witness;
};

// Verdict table over all 5-sets containing {0,1,2} mod m (m odd).
std::vector<VerdictRow> five_set_verdicts(const Modulus& m);

std::string verdict_table_text(const std::vector<VerdictRow>& rows);
std::string verdict_table_csv(const std::vector<VerdictRow>& rows);
std::string verdict_table_json(const std::vector<VerdictRow>& rows);

struct RemovableColor {
    int color;
    ColorSet target;
    AffineMap witness;
};

// Colors c such that S \ {c} is equivalent to one of `targets`.
std::vector<RemovableColor> removable_colors(const ColorSet& s,
                                             const std::vector<ColorSet>& targets);

}  // namespace foxcolor
