#include "foxcolor/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace foxcolor {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct Scanner {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    void expect(char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw ParseError(std::string("expected '") + c + "'", pos);
        ++pos;
    }
    int integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected integer", pos);
        long long v = 0;
        for (std::size_t i = start; i < pos; ++i) {
            v = v * 10 + (text[i] - '0');
            if (v > 1'000'000) throw ParseError("edge label too large", start);
        }
        if (v < 1) throw ParseError("edge label must be >= 1", start);
        return static_cast<int>(v);
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
};

}  // namespace

Diagram Diagram::parse_pd(const std::string& text) {
    Scanner sc{text};
    if (sc.done()) throw ParseError("empty PD code", 0);
    std::vector<Crossing> crossings;
    while (true) {
        sc.expect('X');
        sc.expect('(');
        Crossing cr{};
        for (int i = 0; i < 4; ++i) {
            cr.edges[i] = sc.integer();
            if (i < 3) sc.expect(',');
        }
        sc.expect(')');
        crossings.push_back(cr);
        if (sc.done()) break;
        sc.expect(';');
    }
    return Diagram(std::move(crossings));
}

Diagram Diagram::pretzel(const std::vector<int>& twists) {
    if (twists.size() < 2) throw std::invalid_argument("pretzel needs at least 2 twist regions");
    for (int p : twists)
        if (p == 0) throw std::invalid_argument("pretzel twist count must be nonzero");

    const int n = static_cast<int>(twists.size());
    int next_label = 0;
    auto fresh = [&next_label]() { return ++next_label; };

    std::vector<int> top(n), bottom(n);
    for (int i = 0; i < n; ++i) top[i] = fresh();
    for (int i = 0; i < n; ++i) bottom[i] = fresh();

    std::vector<Crossing> crossings;
    for (int i = 0; i < n; ++i) {
        const int k = std::abs(twists[i]);
        const bool positive = twists[i] > 0;
        // Strand A enters at the region's top left, B at the top right;
        // they swap sides at every crossing.
        std::vector<int> a(k + 1), b(k + 1);
        a[0] = top[(i + n - 1) % n];
        b[0] = top[i];
        if (k % 2 == 0) {
            a[k] = bottom[(i + n - 1) % n];
            b[k] = bottom[i];
        } else {
            a[k] = bottom[i];
            b[k] = bottom[(i + n - 1) % n];
        }
        for (int j = 1; j < k; ++j) a[j] = fresh();
        for (int j = 1; j < k; ++j) b[j] = fresh();
        for (int j = 1; j <= k; ++j) {
            const bool a_on_left = (j % 2 == 1);
            const bool under_is_a = positive ? !a_on_left : a_on_left;
            if (under_is_a)
                crossings.push_back({{a[j - 1], b[j - 1], a[j], b[j]}});
            else
                crossings.push_back({{b[j - 1], a[j - 1], b[j], a[j]}});
        }
    }
    return Diagram(std::move(crossings));
}

Diagram::Diagram(std::vector<Crossing> crossings) : crossings_(std::move(crossings)) {
    if (crossings_.empty()) throw ValidationError("diagram has no crossings");

    int max_label = 0;
    for (const Crossing& c : crossings_)
        for (int e : c.edges) max_label = std::max(max_label, e);
    edge_count_ = max_label;

    std::vector<int> count(edge_count_ + 1, 0);
    for (const Crossing& c : crossings_)
        for (int e : c.edges) ++count[e];
    for (int e = 1; e <= edge_count_; ++e)
        if (count[e] != 2)
            throw ValidationError("edge label " + std::to_string(e) + " appears " +
                                  std::to_string(count[e]) + " times, expected 2");

    // Arcs: merge the over-strand pair b ~ d at every crossing.
    Dsu arcs(edge_count_ + 1);
    for (const Crossing& c : crossings_) arcs.unite(c.over_first(), c.over_second());

    std::map<int, int> least;  // arc root -> least edge label
    for (int e = 1; e <= edge_count_; ++e) {
        int r = arcs.find(e);
        auto [it, inserted] = least.try_emplace(r, e);
        if (!inserted) it->second = std::min(it->second, e);
    }
    std::vector<std::pair<int, int>> order;  // (least label, root)
    for (auto [root, lo] : least) order.emplace_back(lo, root);
    std::sort(order.begin(), order.end());

    std::map<int, int> arc_index;
    arc_least_.clear();
    for (auto [lo, root] : order) {
        arc_index[root] = static_cast<int>(arc_least_.size());
        arc_least_.push_back(lo);
    }
    arc_count_ = static_cast<int>(arc_least_.size());
    arc_of_edge_.assign(edge_count_ + 1, -1);
    for (int e = 1; e <= edge_count_; ++e) arc_of_edge_[e] = arc_index[arcs.find(e)];

    // Link components: edges connected along both strands through each crossing.
    Dsu comp(edge_count_ + 1);
    for (const Crossing& c : crossings_) {
        comp.unite(c.under_in(), c.under_out());
        comp.unite(c.over_first(), c.over_second());
    }
    std::vector<int> roots;
    for (int e = 1; e <= edge_count_; ++e) roots.push_back(comp.find(e));
    std::sort(roots.begin(), roots.end());
    component_count_ =
        static_cast<int>(std::unique(roots.begin(), roots.end()) - roots.begin());

    // Split detection: does any crossing chain connect all edges?
    Dsu diag(edge_count_ + 1);
    for (const Crossing& c : crossings_) {
        diag.unite(c.edges[0], c.edges[1]);
        diag.unite(c.edges[1], c.edges[2]);
        diag.unite(c.edges[2], c.edges[3]);
    }
    int root0 = diag.find(1);
    split_ = false;
    for (int e = 2; e <= edge_count_; ++e)
        if (diag.find(e) != root0) { split_ = true; break; }
}

int Diagram::arc_of_edge(int edge) const {
    if (edge < 1 || edge > edge_count_) throw std::out_of_range("edge label out of range");
    return arc_of_edge_[edge];
}

int Diagram::arc_least_edge(int arc) const {
    if (arc < 0 || arc >= arc_count_) throw std::out_of_range("arc index out of range");
    return arc_least_[arc];
}

std::string Diagram::pd_text() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < crossings_.size(); ++i) {
        if (i) os << ";";
        const auto& e = crossings_[i].edges;
        os << "X(" << e[0] << "," << e[1] << "," << e[2] << "," << e[3] << ")";
    }
    return os.str();
}

ColoringMatrix coloring_matrix(const Diagram& d) {
    ColoringMatrix m;
    m.rows = static_cast<int>(d.crossings().size());
    m.cols = d.arc_count();
    m.entries.assign(static_cast<std::size_t>(m.rows) * m.cols, 0);
    for (int r = 0; r < m.rows; ++r) {
        const Crossing& c = d.crossings()[r];
        m.at(r, d.arc_of_edge(c.over_first())) += 2;
        m.at(r, d.arc_of_edge(c.under_in())) -= 1;
        m.at(r, d.arc_of_edge(c.under_out())) -= 1;
    }
    return m;
}

}  // namespace foxcolor
