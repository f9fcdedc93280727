#pragma once

// Closed-form and recursive bounds: the floor(log2 p)+2 lower bound, the
// determinant growth recursion and its table, the crossing-number equality
// analysis and the pretzel determinant formula.

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace foxcolor {

using BigInt = boost::multiprecision::cpp_int;

// floor(log2 p) + 2 by integer bit length; p must be an odd prime.
int nns_lower_bound(int p);

struct BoundRow {
    int n;
    BigInt value;    // d_n: exact for n <= 6, an upper bound beyond
    bool exact;
    int log_bound;   // floor(log2 d_n) + 2
};

// Seeds 3, 5, 8, 16 then d_n = d_{n-1} + d_{n-2} + d_{n-3}.
std::vector<BoundRow> stoimenow_table(int n_max);

std::string bound_table_text(const std::vector<BoundRow>& rows);
std::string bound_table_json(const std::vector<BoundRow>& rows);

// True iff det <= delta^c where delta is the real positive root of
// x^3 - x^2 - x - 1. Decided exactly; no floating point.
bool delta_bound_check(const BigInt& det, int c);

// |sum_j prod_{i != j} p_i| for the pretzel link P(p_1, ..., p_n).
long long pretzel_determinant(const std::vector<int>& twists);

struct KnotDatum {
    std::string name;
    int crossing_number;
    long long determinant;
};

struct EqualityCase {
    std::string name;
    int crossing_number;
    int prime;
    int bound;      // floor(log2 p) + 2
    bool equality;  // crossing number equals the bound
};

struct CrossingReport {
    std::vector<EqualityCase> knot_cases;
    bool table_regime_strict = false;     // c in 7..16: c > floor(log2 d_c) + 2
    bool rational_regime_strict = false;  // c in 17..n_max: c > 0.87915 c + 2
    int n_max = 0;
};

// Verifies the strict-inequality regimes and flags equality cases among the
// supplied small-knot data. Requires the 5- and 6-crossing knots to be present.
CrossingReport equality_case_report(int n_max, const std::vector<KnotDatum>& knots);

std::string crossing_report_text(const CrossingReport& r);

}  // namespace foxcolor
