#include "foxcolor/colorset.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace foxcolor {

ColorSet::ColorSet(Modulus mod, std::vector<int> elements)
    : mod_(mod), elems_(std::move(elements)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    if (elems_.empty()) throw std::invalid_argument("color set must be nonempty");
    if (elems_.front() < 0 || elems_.back() >= mod_.value())
        throw std::invalid_argument("color set element out of range");
}

bool ColorSet::contains(int c) const {
    return std::binary_search(elems_.begin(), elems_.end(), c);
}

ColorSet ColorSet::apply(const AffineMap& f) const {
    if (f.modulus() != mod_) throw std::invalid_argument("color set modulus mismatch");
    std::vector<int> image;
    image.reserve(elems_.size());
    for (int c : elems_) image.push_back(f(c));
    return ColorSet(mod_, std::move(image));
}

ColorSet ColorSet::without(int c) const {
    std::vector<int> rest;
    for (int x : elems_)
        if (x != c) rest.push_back(x);
    return ColorSet(mod_, std::move(rest));
}

std::string ColorSet::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (i) os << ',';
        os << elems_[i];
    }
    return os.str();
}

ColorSet canonical_form(const ColorSet& s) {
    std::vector<int> best = s.elements();
    std::vector<int> image(s.size());
    for (const AffineMap& f : enumerate_automorphisms(s.modulus())) {
        for (std::size_t i = 0; i < s.size(); ++i) image[i] = f(s.elements()[i]);
        std::sort(image.begin(), image.end());
        if (image < best) best = image;
    }
    return ColorSet(s.modulus(), std::move(best));
}

std::optional<AffineMap> find_witness(const ColorSet& from, const ColorSet& to) {
    if (from.modulus() != to.modulus())
        throw std::invalid_argument("color set modulus mismatch");
    if (from.size() != to.size()) return std::nullopt;
    for (const AffineMap& f : enumerate_automorphisms(from.modulus()))
        if (from.apply(f) == to) return f;
    return std::nullopt;
}

bool equivalent(const ColorSet& s1, const ColorSet& s2, AffineMap* witness) {
    auto w = find_witness(s1, s2);
    if (w && witness) *witness = *w;
    return w.has_value();
}

PaletteGraph palette_graph(const ColorSet& s) {
    const int m = s.modulus().value();
    const auto& c = s.elements();
    PaletteGraph g;
    g.vertices = c;
    for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t j = i + 1; j < c.size(); ++j) {
            bool red = false, blue = false;
            for (int ck : c) {
                if (2 * ck == c[i] + c[j]) red = true;
                else if (mod_reduce(2LL * ck - c[i] - c[j], m) == 0) blue = true;
            }
            if (red) g.red_edges.emplace_back(c[i], c[j]);
            else if (blue) g.blue_edges.emplace_back(c[i], c[j]);
        }
    }
    return g;
}

std::string PaletteGraph::to_dot() const {
    std::ostringstream os;
    os << "graph palette {\n";
    for (int v : vertices) os << "  \"" << v << "\";\n";
    for (auto [a, b] : red_edges)
        os << "  \"" << a << "\" -- \"" << b << "\" [color=red];\n";
    for (auto [a, b] : blue_edges)
        os << "  \"" << a << "\" -- \"" << b << "\" [color=blue];\n";
    os << "}\n";
    return os.str();
}

namespace {

void require_odd(const Modulus& m, const char* what) {
    if (!m.is_odd())
        throw std::invalid_argument(std::string(what) + " requires an odd modulus");
}

}  // namespace

std::optional<AffineMap> test_halfset(const ColorSet& s) {
    require_odd(s.modulus(), "half-set test");
    const int k = (s.modulus().value() - 1) / 2;
    for (const AffineMap& f : enumerate_automorphisms(s.modulus())) {
        bool inside = true;
        for (int c : s.elements())
            if (f(c) > k) { inside = false; break; }
        if (inside) return f;
    }
    return std::nullopt;
}

bool test_blue_edge(const ColorSet& s) {
    require_odd(s.modulus(), "blue-edge test");
    return !palette_graph(s).blue_edges.empty();
}

std::vector<int> test_isolated(const ColorSet& s) {
    require_odd(s.modulus(), "isolated-vertex test");
    PaletteGraph g = palette_graph(s);
    std::vector<int> touched;
    for (auto& edges : {g.red_edges, g.blue_edges})
        for (auto [a, b] : edges) {
            touched.push_back(a);
            touched.push_back(b);
        }
    std::sort(touched.begin(), touched.end());
    std::vector<int> isolated;
    for (int v : g.vertices)
        if (!std::binary_search(touched.begin(), touched.end(), v))
            isolated.push_back(v);
    return isolated;
}

int component_count(const ColorSet& s) {
    PaletteGraph g = palette_graph(s);
    const auto& vs = g.vertices;
    std::vector<int> parent(vs.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto index_of = [&](int v) {
        return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    };
    for (auto& edges : {g.red_edges, g.blue_edges})
        for (auto [a, b] : edges) parent[find(index_of(a))] = find(index_of(b));
    int count = 0;
    for (std::size_t i = 0; i < vs.size(); ++i)
        if (find(static_cast<int>(i)) == static_cast<int>(i)) ++count;
    return count;
}

ObstructionReport obstruction_report(const ColorSet& s) {
    ObstructionReport r;
    r.halfset_failure = test_halfset(s);
    r.has_blue_edge = test_blue_edge(s);
    r.isolated_vertices = test_isolated(s);
    r.components = component_count(s);
    return r;
}

bool passes_obstruction_tests(const ColorSet& s) {
    if (test_halfset(s)) return false;
    if (!test_blue_edge(s)) return false;
    if (!test_isolated(s).empty()) return false;
    return true;
}

std::vector<ColorSet> enumerate_sets(const Modulus& m, int cardinality,
                                     const std::vector<int>& required) {
    std::vector<int> req = required;
    std::sort(req.begin(), req.end());
    req.erase(std::unique(req.begin(), req.end()), req.end());
    if (!req.empty() && (req.front() < 0 || req.back() >= m.value()))
        throw std::invalid_argument("required element out of range");
    if (cardinality < static_cast<int>(req.size()) || cardinality > m.value())
        throw std::invalid_argument("cardinality out of range");

    std::vector<int> pool;
    for (int x = 0; x < m.value(); ++x)
        if (!std::binary_search(req.begin(), req.end(), x)) pool.push_back(x);

    const int extra = cardinality - static_cast<int>(req.size());
    std::vector<ColorSet> out;
    std::vector<int> pick(extra);
    std::iota(pick.begin(), pick.end(), 0);
    if (extra > static_cast<int>(pool.size()) && extra > 0)
        throw std::invalid_argument("cardinality out of range");
    while (true) {
        std::vector<int> elems = req;
        for (int i : pick) elems.push_back(pool[i]);
        out.emplace_back(m, std::move(elems));
        if (extra == 0) break;
        int i = extra - 1;
        while (i >= 0 && pick[i] == static_cast<int>(pool.size()) - extra + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < extra; ++j) pick[j] = pick[j - 1] + 1;
    }
    std::sort(out.begin(), out.end(),
              [](const ColorSet& a, const ColorSet& b) { return a.elements() < b.elements(); });
    return out;
}

namespace {

std::vector<EquivalenceClass> group_by_canonical(const std::vector<ColorSet>& sets,
                                                 const std::vector<ColorSet>& canon) {
    std::map<std::vector<int>, std::size_t> index;
    std::vector<EquivalenceClass> classes;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        auto [it, inserted] = index.try_emplace(canon[i].elements(), classes.size());
        if (inserted) classes.push_back({canon[i], {}});
        classes[it->second].members.push_back(sets[i]);
    }
    std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
        return a.canonical.elements() < b.canonical.elements();
    });
    return classes;
}

void require_single_modulus(const std::vector<ColorSet>& sets) {
    for (const ColorSet& s : sets)
        if (s.modulus() != sets.front().modulus())
            throw std::invalid_argument("classify requires a single modulus");
}

}  // namespace

std::vector<EquivalenceClass> classify_serial(const std::vector<ColorSet>& sets) {
    if (sets.empty()) return {};
    require_single_modulus(sets);
    std::vector<ColorSet> canon;
    canon.reserve(sets.size());
    for (const ColorSet& s : sets) canon.push_back(canonical_form(s));
    return group_by_canonical(sets, canon);
}

std::vector<EquivalenceClass> classify(const std::vector<ColorSet>& sets) {
    if (sets.empty()) return {};
    require_single_modulus(sets);
    std::vector<ColorSet> canon(sets.size(), sets.front());
    const auto n = static_cast<long long>(sets.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < n; ++i) canon[i] = canonical_form(sets[i]);
    return group_by_canonical(sets, canon);
}

std::vector<EquivalenceClass> candidate_minimal_sets(const Modulus& m, int cardinality) {
    if (!m.is_odd() || !m.is_prime())
        throw std::invalid_argument("census requires an odd prime modulus");
    auto classes = classify(enumerate_sets(m, cardinality, {0, 1, 2}));
    std::vector<EquivalenceClass> surviving;
    for (auto& cls : classes) {
        bool ok = true;
        for (const ColorSet& s : cls.members)
            if (!passes_obstruction_tests(s)) { ok = false; break; }
        if (ok) surviving.push_back(std::move(cls));
    }
    return surviving;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::kEquivalentToRep: return "equivalent";
        case Verdict::kExcludedHalfset: return "excluded-halfset";
        case Verdict::kExcludedGraph: return "excluded-graph";
    }
    return "?";
}

std::vector<VerdictRow> five_set_verdicts(const Modulus& m) {
    require_odd(m, "five-set verdict table");
    auto sets = enumerate_sets(m, 5, {0, 1, 2});
    auto classes = classify(sets);

    std::map<std::vector<int>, bool> survives;
    std::map<std::vector<int>, ColorSet> canon_of;
    for (const auto& cls : classes) {
        bool ok = true;
        for (const ColorSet& s : cls.members)
            if (!passes_obstruction_tests(s)) { ok = false; break; }
        for (const ColorSet& s : cls.members) {
            survives.emplace(s.elements(), ok);
            canon_of.emplace(s.elements(), cls.canonical);
        }
    }

    std::vector<VerdictRow> rows;
    for (const ColorSet& s : sets) {
        const ColorSet& canon = canon_of.at(s.elements());
        if (survives.at(s.elements())) {
            auto w = find_witness(s, canon);
            rows.push_back({s, Verdict::kEquivalentToRep, canon, *w});
        } else if (auto h = test_halfset(s)) {
            rows.push_back({s, Verdict::kExcludedHalfset, s.apply(*h), *h});
        } else {
            auto w = find_witness(s, canon);
            rows.push_back({s, Verdict::kExcludedGraph, canon, *w});
        }
    }
    return rows;
}

namespace {

std::string map_str(const AffineMap& f) {
    std::ostringstream os;
    os << "(x" << f.lambda() << "+" << f.mu() << ")";
    return os.str();
}

}  // namespace

std::string verdict_table_text(const std::vector<VerdictRow>& rows) {
    std::size_t w1 = 0, w2 = 0;
    for (const auto& r : rows) {
        w1 = std::max(w1, r.set.str().size());
        w2 = std::max(w2, map_str(r.witness).size() + 1 + r.representative.str().size());
    }
    std::ostringstream os;
    for (const auto& r : rows) {
        os << std::left << std::setw(static_cast<int>(w1) + 2) << r.set.str()
           << std::setw(static_cast<int>(w2) + 2)
           << (map_str(r.witness) + "=" + r.representative.str())
           << verdict_name(r.verdict) << "\n";
    }
    return os.str();
}

std::string verdict_table_csv(const std::vector<VerdictRow>& rows) {
    std::ostringstream os;
    os << "modulus,elements,verdict,representative,witness_lambda,witness_mu\n";
    for (const auto& r : rows) {
        os << r.set.modulus().value() << ",\"" << r.set.str() << "\","
           << verdict_name(r.verdict) << ",\"" << r.representative.str() << "\","
           << r.witness.lambda() << "," << r.witness.mu() << "\n";
    }
    return os.str();
}

std::string verdict_table_json(const std::vector<VerdictRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        arr.push_back({{"modulus", r.set.modulus().value()},
                       {"elements", r.set.elements()},
                       {"verdict", verdict_name(r.verdict)},
                       {"representative", r.representative.elements()},
                       {"witness_lambda", r.witness.lambda()},
                       {"witness_mu", r.witness.mu()}});
    }
    return arr.dump(2) + "\n";
}

std::vector<RemovableColor> removable_colors(const ColorSet& s,
                                             const std::vector<ColorSet>& targets) {
    require_odd(s.modulus(), "color removal");
    std::vector<RemovableColor> out;
    if (s.size() < 2) return out;
    for (int c : s.elements()) {
        ColorSet rest = s.without(c);
        for (const ColorSet& target : targets) {
            if (auto w = find_witness(rest, target)) {
                out.push_back({c, target, *w});
                break;
            }
        }
    }
    return out;
}

}  // namespace foxcolor
