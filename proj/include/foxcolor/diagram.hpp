#pragma once

// Link diagrams as PD codes: parsing, validation, arc identification,
// pretzel diagram generation and the coloring relation matrix.

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace foxcolor {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One crossing (a, b, c, d), counterclockwise from the incoming under-edge a.
/// The under-strand runs a -> c; the over-strand occupies b and d.
struct Crossing {
    std::array<int, 4> edges;

    int under_in() const { return edges[0]; }
    int over_first() const { return edges[1]; }
    int under_out() const { return edges[2]; }
    int over_second() const { return edges[3]; }
};

class Diagram {
public:
    // Grammar: pd := term (';' term)* ; term := 'X(' int ',' int ',' int ',' int ')'.
    // Whitespace is insignificant.
    static Diagram parse_pd(const std::string& text);

    // Standard pretzel diagram P(p_1, ..., p_n) with sum |p_i| crossings.
    static Diagram pretzel(const std::vector<int>& twists);

    const std::vector<Crossing>& crossings() const { return crossings_; }
    int edge_count() const { return edge_count_; }
    int arc_count() const { return arc_count_; }
    int arc_of_edge(int edge) const;      // arc index, columns by least edge label
    int arc_least_edge(int arc) const;
    int component_count() const { return component_count_; }
    bool is_split() const { return split_; }

    std::string pd_text() const;

private:
    explicit Diagram(std::vector<Crossing> crossings);

    std::vector<Crossing> crossings_;
    int edge_count_ = 0;
    int arc_count_ = 0;
    int component_count_ = 0;
    bool split_ = false;
    std::vector<int> arc_of_edge_;    // 1-based edge label -> arc index
    std::vector<int> arc_least_;
};

/// Crossing relation matrix: one row per crossing, one column per arc.
/// Row for (a,b,c,d): +2 at arc(b), -1 at arc(a), -1 at arc(c), accumulated.
struct ColoringMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<long long> entries;  // row-major

    long long at(int r, int c) const { return entries[static_cast<std::size_t>(r) * cols + c]; }
    long long& at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }
};

ColoringMatrix coloring_matrix(const Diagram& d);

}  // namespace foxcolor
