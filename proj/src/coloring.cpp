#include "foxcolor/coloring.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include <json.hpp>

namespace foxcolor {

bool Coloring::is_nontrivial() const {
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i] != values[0]) return true;
    return false;
}

int Coloring::distinct_colors() const {
    std::vector<int> v = values;
    std::sort(v.begin(), v.end());
    return static_cast<int>(std::unique(v.begin(), v.end()) - v.begin());
}

bool check_coloring(const Diagram& d, const Coloring& c) {
    if (static_cast<int>(c.values.size()) != d.arc_count()) return false;
    const int m = c.modulus.value();
    for (const Crossing& cr : d.crossings()) {
        long long over = c.values[d.arc_of_edge(cr.over_first())];
        long long u1 = c.values[d.arc_of_edge(cr.under_in())];
        long long u2 = c.values[d.arc_of_edge(cr.under_out())];
        if (mod_reduce(2 * over - u1 - u2, m) != 0) return false;
    }
    return true;
}

long long determinant(const Diagram& d) {
    if (d.is_split()) return 0;
    ColoringMatrix cm = coloring_matrix(d);
    const int n = cm.rows - 1;
    // More arcs than crossings means some arc is a closed over-circle, i.e.
    // a component lying entirely above the rest: a split link.
    if (cm.cols > cm.rows) return 0;
    if (cm.rows != cm.cols)
        throw ValidationError("coloring matrix is not square; diagram is not a valid link PD");
    if (n == 0) return 1;

    // Bareiss fraction-free elimination on the first minor.
    std::vector<std::vector<long long>> a(n, std::vector<long long>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) a[r][c] = cm.at(r, c);

    long long prev = 1;
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r)
            if (a[r][k] != 0) { pivot = r; break; }
        if (pivot < 0) return 0;
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r) {
            for (int c = k + 1; c < n; ++c) {
                __int128 t = static_cast<__int128>(a[r][c]) * a[k][k] -
                             static_cast<__int128>(a[r][k]) * a[k][c];
                a[r][c] = static_cast<long long>(t / prev);
            }
            a[r][k] = 0;
        }
        prev = a[k][k];
    }
    long long det = sign * a[n - 1][n - 1];
    return det < 0 ? -det : det;
}

bool is_colorable(const Diagram& d, const Modulus& m) {
    long long det = determinant(d);
    long long g = det == 0 ? m.value() : std::gcd(det, static_cast<long long>(m.value()));
    return g != 1;
}

KernelDescription kernel_mod_p(const Diagram& d, const Modulus& p) {
    if (!p.is_prime())
        throw std::invalid_argument("kernel solving needs a prime modulus; use search_colorings");
    ColoringMatrix cm = coloring_matrix(d);
    const int rows = cm.rows, cols = cm.cols, m = p.value();

    std::vector<std::vector<int>> a(rows, std::vector<int>(cols));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) a[r][c] = mod_reduce(cm.at(r, c), m);

    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pr = -1;
        for (int r = row; r < rows; ++r)
            if (a[r][col] != 0) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(a[pr], a[row]);
        int inv = mod_inverse(a[row][col], m);
        for (int c = col; c < cols; ++c) a[row][c] = mod_reduce(1LL * a[row][c] * inv, m);
        for (int r = 0; r < rows; ++r) {
            if (r == row || a[r][col] == 0) continue;
            int f = a[r][col];
            for (int c = col; c < cols; ++c)
                a[r][c] = mod_reduce(a[r][c] - 1LL * f * a[row][c], m);
        }
        pivot_col.push_back(col);
        ++row;
    }

    KernelDescription k{p, 0, {}};
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    for (int free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<int> v(cols, 0);
        v[free_col] = 1;
        for (std::size_t r = 0; r < pivot_col.size(); ++r)
            v[pivot_col[r]] = mod_reduce(-a[r][free_col], m);
        k.basis.push_back(std::move(v));
    }
    k.dimension = static_cast<int>(k.basis.size());
    return k;
}

namespace {

// Backtracking over arcs with propagation of the crossing relation.
class BacktrackSearch {
public:
    BacktrackSearch(const Diagram& d, const Modulus& m, const SearchOptions& opts,
                    std::function<bool(const std::vector<int>&)> emit)
        : d_(d), m_(m.value()), opts_(opts), emit_(std::move(emit)) {
        values_.assign(d.arc_count(), -1);
        incidence_.assign(d.arc_count(), 0);
        for (const Crossing& c : d.crossings())
            for (int e : c.edges) ++incidence_[d.arc_of_edge(e)];
        order_.resize(d.arc_count());
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [this](int a, int b) { return incidence_[a] > incidence_[b]; });
        if (opts.palette) {
            candidates_ = opts.palette->elements();
        } else {
            candidates_.resize(m_);
            std::iota(candidates_.begin(), candidates_.end(), 0);
        }
        if (m_ % 2 == 1) inv2_ = mod_inverse(2, m_);
    }

    void run() { recurse(0); }

private:
    bool allowed(int v) const {
        return !opts_.palette ||
               std::binary_search(candidates_.begin(), candidates_.end(), v);
    }

    bool assign(int arc, int v, std::vector<int>& trail) {
        if (values_[arc] >= 0) return values_[arc] == v;
        if (!allowed(v)) return false;
        values_[arc] = v;
        trail.push_back(arc);
        for (const Crossing& c : d_.crossings()) {
            int o = d_.arc_of_edge(c.over_first());
            int u1 = d_.arc_of_edge(c.under_in());
            int u2 = d_.arc_of_edge(c.under_out());
            if (arc != o && arc != u1 && arc != u2) continue;
            int vo = values_[o], v1 = values_[u1], v2 = values_[u2];
            if (vo >= 0 && v1 >= 0 && v2 >= 0) {
                if (mod_reduce(2LL * vo - v1 - v2, m_) != 0) return false;
            } else if (vo >= 0 && v1 >= 0) {
                if (!assign(u2, mod_reduce(2LL * vo - v1, m_), trail)) return false;
            } else if (vo >= 0 && v2 >= 0) {
                if (!assign(u1, mod_reduce(2LL * vo - v2, m_), trail)) return false;
            } else if (v1 >= 0 && v2 >= 0) {
                if (m_ % 2 == 1) {
                    if (!assign(o, mod_reduce(1LL * inv2_ * (v1 + v2), m_), trail)) return false;
                } else if ((v1 + v2) % 2 != 0) {
                    return false;  // 2x = odd has no solution mod even m
                }
            }
        }
        return true;
    }

    void undo(std::vector<int>& trail, std::size_t mark) {
        while (trail.size() > mark) {
            values_[trail.back()] = -1;
            trail.pop_back();
        }
    }

    bool recurse(std::size_t depth) {  // returns false to stop the search
        int arc = -1;
        for (std::size_t i = 0; i < order_.size(); ++i)
            if (values_[order_[i]] < 0) { arc = order_[i]; break; }
        if (arc < 0) {
            Coloring c{Modulus(m_), values_};
            if (c.is_nontrivial()) return emit_(values_);
            return true;
        }
        std::vector<int> trail;
        for (int v : candidates_) {
            if (++states_ > opts_.state_limit)
                throw ResourceLimitError("coloring search exceeded the state ceiling");
            if (assign(arc, v, trail)) {
                if (!recurse(depth + 1)) return false;
            }
            undo(trail, 0);
        }
        return true;
    }

    const Diagram& d_;
    int m_;
    SearchOptions opts_;
    std::function<bool(const std::vector<int>&)> emit_;
    std::vector<int> values_, incidence_, order_, candidates_;
    int inv2_ = 0;
    std::size_t states_ = 0;
};

// Enumerate all kernel combinations mod prime p, calling emit for each
// nontrivial coloring. emit returns false to stop.
void enumerate_kernel(const Diagram& d, const Modulus& p, std::size_t state_limit,
                      const std::function<bool(const std::vector<int>&)>& emit) {
    KernelDescription k = kernel_mod_p(d, p);
    const int m = p.value();
    const int dim = k.dimension;
    double total = 1;
    for (int i = 0; i < dim; ++i) total *= m;
    if (total > static_cast<double>(state_limit))
        throw ResourceLimitError("kernel enumeration exceeded the state ceiling");

    std::vector<int> coeff(dim, 0);
    std::vector<int> values(d.arc_count());
    while (true) {
        std::fill(values.begin(), values.end(), 0);
        for (int i = 0; i < dim; ++i) {
            if (coeff[i] == 0) continue;
            for (int a = 0; a < d.arc_count(); ++a)
                values[a] = mod_reduce(values[a] + 1LL * coeff[i] * k.basis[i][a], m);
        }
        bool nontrivial = false;
        for (int a = 1; a < d.arc_count(); ++a)
            if (values[a] != values[0]) { nontrivial = true; break; }
        if (d.arc_count() == 1) nontrivial = false;
        if (nontrivial && !emit(values)) return;

        int i = dim - 1;
        while (i >= 0 && coeff[i] == m - 1) coeff[i--] = 0;
        if (i < 0) break;
        ++coeff[i];
    }
}

}  // namespace

std::vector<Coloring> search_colorings(const Diagram& d, const Modulus& m,
                                       const SearchOptions& opts) {
    if (opts.palette && opts.palette->modulus() != m)
        throw std::invalid_argument("palette modulus mismatch");
    std::vector<Coloring> out;
    auto emit = [&](const std::vector<int>& values) {
        if (opts.palette) {
            for (int v : values)
                if (!opts.palette->contains(v)) return true;
        }
        out.push_back(Coloring{m, values});
        return out.size() < opts.limit;
    };
    if (m.is_prime())
        enumerate_kernel(d, m, opts.state_limit, emit);
    else
        BacktrackSearch(d, m, opts, emit).run();
    return out;
}

int diagram_min_colors(const Diagram& d, const Modulus& m, std::size_t state_limit) {
    int best = -1;
    auto emit = [&](const std::vector<int>& values) {
        Coloring c{m, values};
        int k = c.distinct_colors();
        if (best < 0 || k < best) best = k;
        return best > 2;  // nothing beats two distinct colors
    };
    if (m.is_prime()) {
        enumerate_kernel(d, m, state_limit, emit);
    } else {
        SearchOptions opts;
        opts.state_limit = state_limit;
        BacktrackSearch(d, m, opts, emit).run();
    }
    if (best < 0)
        throw NotColorableError("diagram admits no nontrivial coloring mod " +
                                std::to_string(m.value()));
    return best;
}

std::pair<Coloring, AffineMap> normalize_coloring(const Diagram& d, const Coloring& c) {
    const Modulus& m = c.modulus;
    if (!m.is_prime() || !m.is_odd())
        throw std::invalid_argument("normalization requires an odd prime modulus");
    if (d.is_split()) throw std::invalid_argument("normalization requires a non-split diagram");
    if (!check_coloring(d, c)) throw std::invalid_argument("not a valid coloring");

    for (const Crossing& cr : d.crossings()) {
        int a = c.values[d.arc_of_edge(cr.under_in())];
        int b = c.values[d.arc_of_edge(cr.over_first())];
        int cc = c.values[d.arc_of_edge(cr.under_out())];
        if (a == cc) continue;  // monochromatic crossing
        // f(x) = (b-a)^{-1} (x-a) sends a,b,c to 0,1,2.
        int lambda = mod_inverse(mod_reduce(b - a, m.value()), m.value());
        AffineMap f(lambda, mod_reduce(-1LL * lambda * a, m.value()), m);
        Coloring mapped{m, {}};
        mapped.values.reserve(c.values.size());
        for (int v : c.values) mapped.values.push_back(f(v));
        return {mapped, f};
    }
    throw std::invalid_argument("no polychromatic crossing: coloring is trivial");
}

std::string coloring_json(const Diagram& d, const Coloring& c) {
    std::vector<int> arcs;
    for (int a = 0; a < d.arc_count(); ++a) arcs.push_back(d.arc_least_edge(a));
    nlohmann::json j = {{"modulus", c.modulus.value()},
                        {"arcs", arcs},
                        {"values", c.values},
                        {"distinct", c.distinct_colors()}};
    return j.dump() + "\n";
}

}  // namespace foxcolor
