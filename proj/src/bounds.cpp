#include "foxcolor/bounds.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "foxcolor/modular.hpp"

namespace foxcolor {

namespace {

int floor_log2(const BigInt& v) {
    if (v <= 0) throw std::invalid_argument("log of nonpositive value");
    return static_cast<int>(boost::multiprecision::msb(v));
}

}  // namespace

int nns_lower_bound(int p) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("expected an odd prime >= 3");
    if (!Modulus(p).is_prime()) throw std::invalid_argument("expected an odd prime >= 3");
    return floor_log2(BigInt(p)) + 2;
}

std::vector<BoundRow> stoimenow_table(int n_max) {
    if (n_max < 3) throw std::invalid_argument("table starts at n = 3");
    static const long long seeds[4] = {3, 5, 8, 16};
    std::vector<BoundRow> rows;
    for (int n = 3; n <= n_max; ++n) {
        BigInt v;
        bool exact = n <= 6;
        if (exact)
            v = seeds[n - 3];
        else
            v = rows[n - 4].value + rows[n - 5].value + rows[n - 6].value;
        rows.push_back({n, v, exact, floor_log2(v) + 2});
    }
    return rows;
}

std::string bound_table_text(const std::vector<BoundRow>& rows) {
    std::size_t w = 0;
    for (const auto& r : rows) w = std::max(w, r.value.str().size());
    std::ostringstream os;
    os << "n     d_n" << std::string(w > 3 ? w - 3 : 0, ' ') << "    log2-bound  exact\n";
    for (const auto& r : rows) {
        std::string v = r.value.str();
        os << r.n << std::string(r.n < 10 ? 5 : 4, ' ') << v
           << std::string(w - v.size() + 4, ' ') << r.log_bound
           << std::string(r.log_bound < 10 ? 11 : 10, ' ') << (r.exact ? "yes" : "no") << "\n";
    }
    return os.str();
}

std::string bound_table_json(const std::vector<BoundRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows)
        arr.push_back({{"n", r.n},
                       {"value", r.value.str()},
                       {"exact", r.exact},
                       {"log_bound", r.log_bound}});
    return arr.dump(2) + "\n";
}

bool delta_bound_check(const BigInt& det, int c) {
    if (det < 0 || c < 1) throw std::invalid_argument("need det >= 0 and c >= 1");
    if (det <= 1) return true;

    // delta^c = A delta^2 + B delta + C in Z[x]/(x^3 - x^2 - x - 1).
    BigInt A = 0, B = 0, C = 1;
    for (int i = 0; i < c; ++i) {
        BigInt nA = A + B, nB = A + C, nC = A;
        A = nA; B = nB; C = nC;
    }
    // Decide the sign of q(delta) = A delta^2 + B delta + (C - det) by
    // refining exact rational brackets of delta, the root of x^3-x^2-x-1
    // in (1, 2). Equality is impossible: delta has degree 3 over Q.
    BigInt C0 = C - det;
    if (A == 0 && B == 0) return C0 >= 0;

    auto cubic_sign = [](const BigInt& p, const BigInt& q) {
        BigInt v = p * p * p - p * p * q - p * q * q - q * q * q;
        return v > 0 ? 1 : (v < 0 ? -1 : 0);
    };
    auto q_sign = [&](const BigInt& p, const BigInt& q) {
        BigInt v = A * p * p + B * p * q + C0 * q * q;
        return v > 0 ? 1 : (v < 0 ? -1 : 0);
    };

    BigInt lo_p = 1, lo_q = 1, hi_p = 2, hi_q = 1;
    while (true) {
        int slo = q_sign(lo_p, lo_q), shi = q_sign(hi_p, hi_q);
        if (slo == shi && slo != 0) return slo > 0;
        BigInt mid_p = lo_p * hi_q + hi_p * lo_q, mid_q = 2 * lo_q * hi_q;
        if (cubic_sign(mid_p, mid_q) < 0) {
            lo_p = mid_p; lo_q = mid_q;
        } else {
            hi_p = mid_p; hi_q = mid_q;
        }
    }
}

long long pretzel_determinant(const std::vector<int>& twists) {
    if (twists.size() < 2) throw std::invalid_argument("pretzel needs at least 2 twist regions");
    for (int p : twists)
        if (p == 0) throw std::invalid_argument("pretzel twist count must be nonzero");
    BigInt total = 0;
    for (std::size_t j = 0; j < twists.size(); ++j) {
        BigInt prod = 1;
        for (std::size_t i = 0; i < twists.size(); ++i)
            if (i != j) prod *= twists[i];
        total += prod;
    }
    if (total < 0) total = -total;
    return static_cast<long long>(total);
}

CrossingReport equality_case_report(int n_max, const std::vector<KnotDatum>& knots) {
    std::set<long long> small_dets;
    for (const auto& k : knots)
        if (k.crossing_number == 5 || k.crossing_number == 6) small_dets.insert(k.determinant);
    for (long long required : {5LL, 7LL, 9LL, 11LL, 13LL})
        if (!small_dets.count(required))
            throw std::invalid_argument("missing bundled 5- or 6-crossing knot data");

    CrossingReport r;
    r.n_max = n_max;

    auto table = stoimenow_table(16);
    r.table_regime_strict = true;
    for (const auto& row : table)
        if (row.n >= 7 && !(row.n > row.log_bound)) r.table_regime_strict = false;

    // c > 0.87915 c + 2 with 0.87915 = 87915/100000, exactly.
    r.rational_regime_strict = true;
    for (long long c = 17; c <= n_max; ++c)
        if (!(100000 * c > 87915 * c + 200000)) r.rational_regime_strict = false;

    for (const auto& k : knots) {
        long long det = k.determinant;
        for (long long p = 3; p <= det; p += 2) {
            if (det % p != 0) continue;
            while (det % p == 0) det /= p;
            int bound = nns_lower_bound(static_cast<int>(p));
            r.knot_cases.push_back({k.name, k.crossing_number, static_cast<int>(p), bound,
                                    k.crossing_number == bound});
        }
    }
    return r;
}

std::string crossing_report_text(const CrossingReport& r) {
    std::ostringstream os;
    os << "table regime 7..16: " << (r.table_regime_strict ? "strict" : "VIOLATED") << "\n";
    os << "rational regime 17.." << r.n_max << ": "
       << (r.rational_regime_strict ? "strict" : "VIOLATED") << "\n";
    for (const auto& k : r.knot_cases) {
        os << k.name << " p=" << k.prime << " bound=" << k.bound << " c=" << k.crossing_number
           << (k.equality ? "  EQUALITY" : "  strict") << "\n";
    }
    return os.str();
}

}  // namespace foxcolor
