#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "foxcolor/coloring.hpp"
#include "foxcolor/corpus.hpp"

using namespace foxcolor;

namespace {

Diagram corpus_diagram(const std::string& name) {
    return Diagram::parse_pd(corpus_lookup(name)->pd);
}

}  // namespace

TEST_CASE("determinants of the bundled corpus") {
    const std::pair<const char*, long long> expected[] = {
        {"3_1", 3}, {"4_1", 5}, {"5_1", 5}, {"5_2", 7},
        {"6_1", 9}, {"6_2", 11}, {"6_3", 13}, {"L8n8", 0},
    };
    for (auto [name, det] : expected) CHECK(determinant(corpus_diagram(name)) == det);
}

TEST_CASE("determinant of a split diagram is zero") {
    auto d = Diagram::parse_pd(
        "X(1,4,2,5);X(3,6,4,1);X(5,2,6,3);"
        "X(7,10,8,11);X(9,12,10,7);X(11,8,12,9)");
    CHECK(determinant(d) == 0);
}

TEST_CASE("colorability") {
    auto tref = corpus_diagram("3_1");
    CHECK(is_colorable(tref, Modulus(3)));
    CHECK(is_colorable(tref, Modulus(9)));
    CHECK(is_colorable(tref, Modulus(6)));
    CHECK_FALSE(is_colorable(tref, Modulus(5)));
    CHECK_FALSE(is_colorable(tref, Modulus(7)));

    auto l8n8 = corpus_diagram("L8n8");
    for (int m = 2; m <= 12; ++m) CHECK(is_colorable(l8n8, Modulus(m)));

    CHECK(is_colorable(corpus_diagram("6_1"), Modulus(3)));  // det 9, gcd 3
}

TEST_CASE("kernel mod p") {
    auto k = kernel_mod_p(corpus_diagram("3_1"), Modulus(3));
    CHECK(k.dimension == 2);
    REQUIRE(k.basis.size() == 2);
    for (const auto& v : k.basis)
        CHECK(check_coloring(corpus_diagram("3_1"), {Modulus(3), v}));

    CHECK(kernel_mod_p(corpus_diagram("3_1"), Modulus(5)).dimension == 1);
    CHECK(kernel_mod_p(corpus_diagram("4_1"), Modulus(5)).dimension == 2);
    CHECK(kernel_mod_p(corpus_diagram("L8n8"), Modulus(5)).dimension == 2);

    CHECK_THROWS_AS(kernel_mod_p(corpus_diagram("3_1"), Modulus(9)), std::invalid_argument);
}

TEST_CASE("check_coloring") {
    auto tref = corpus_diagram("3_1");
    // arcs: {1,6}, {2,3}, {4,5}
    CHECK(check_coloring(tref, {Modulus(3), {0, 1, 2}}));
    CHECK(check_coloring(tref, {Modulus(3), {1, 1, 1}}));
    CHECK_FALSE(check_coloring(tref, {Modulus(3), {0, 1, 1}}));
    CHECK_FALSE(check_coloring(tref, {Modulus(5), {0, 1, 2}}));
}

TEST_CASE("search_colorings on primes") {
    auto cols = search_colorings(corpus_diagram("3_1"), Modulus(3));
    CHECK(cols.size() == 6);
    for (const auto& c : cols) {
        CHECK(c.is_nontrivial());
        CHECK(c.distinct_colors() == 3);
        CHECK(check_coloring(corpus_diagram("3_1"), c));
    }

    CHECK(search_colorings(corpus_diagram("4_1"), Modulus(5)).size() == 20);
    CHECK(search_colorings(corpus_diagram("3_1"), Modulus(5)).empty());

    SearchOptions two;
    two.limit = 2;
    CHECK(search_colorings(corpus_diagram("4_1"), Modulus(5), two).size() == 2);
}

TEST_CASE("search_colorings on composites") {
    auto l8n8 = corpus_diagram("L8n8");
    for (int m = 5; m <= 10; ++m) {
        SearchOptions opts;
        opts.palette = ColorSet(Modulus(m), {0, 1, 2, 3});
        opts.limit = 1000;
        auto cols = search_colorings(l8n8, Modulus(m), opts);
        CHECK_FALSE(cols.empty());
        for (const auto& c : cols) {
            CHECK(check_coloring(l8n8, c));
            CHECK(c.is_nontrivial());
            for (int v : c.values) CHECK(v <= 3);
        }
    }

    SearchOptions opts;
    opts.palette = ColorSet(Modulus(6), {0, 1, 2, 3});
    opts.limit = 1000;
    CHECK(search_colorings(l8n8, Modulus(6), opts).size() == 16);

    // composite search agrees with the prime kernel path where both apply
    auto via_kernel = search_colorings(corpus_diagram("6_1"), Modulus(3));
    SearchOptions all;
    all.limit = 1000;
    auto mod9 = search_colorings(corpus_diagram("6_1"), Modulus(9), all);
    CHECK(mod9.size() == 72);
    CHECK(via_kernel.size() == 6);
}

TEST_CASE("palette restriction on primes") {
    SearchOptions opts;
    opts.palette = ColorSet(Modulus(5), {0, 1, 2, 3});
    opts.limit = 1000;
    auto cols = search_colorings(corpus_diagram("L8n8"), Modulus(5), opts);
    CHECK(cols.size() == 4);
    for (const auto& c : cols)
        CHECK(std::set<int>(c.values.begin(), c.values.end()).size() == 4);
}

TEST_CASE("state limit guard") {
    SearchOptions opts;
    opts.state_limit = 3;
    CHECK_THROWS_AS(search_colorings(corpus_diagram("4_1"), Modulus(5), opts),
                    ResourceLimitError);
    CHECK_THROWS_AS(search_colorings(corpus_diagram("L8n8"), Modulus(6), opts),
                    ResourceLimitError);
}

TEST_CASE("diagram_min_colors") {
    CHECK(diagram_min_colors(corpus_diagram("3_1"), Modulus(3)) == 3);
    CHECK(diagram_min_colors(corpus_diagram("4_1"), Modulus(5)) == 4);
    CHECK(diagram_min_colors(corpus_diagram("5_1"), Modulus(5)) == 5);
    CHECK(diagram_min_colors(corpus_diagram("5_2"), Modulus(7)) == 5);
    CHECK(diagram_min_colors(corpus_diagram("6_1"), Modulus(9)) == 3);
    CHECK(diagram_min_colors(corpus_diagram("6_2"), Modulus(11)) == 6);
    CHECK(diagram_min_colors(corpus_diagram("6_3"), Modulus(13)) == 6);
    CHECK(diagram_min_colors(corpus_diagram("L8n8"), Modulus(5)) == 4);
    CHECK(diagram_min_colors(corpus_diagram("L8n8"), Modulus(6)) == 2);

    CHECK_THROWS_AS(diagram_min_colors(corpus_diagram("3_1"), Modulus(5)),
                    NotColorableError);
}

TEST_CASE("normalize_coloring") {
    auto d = corpus_diagram("4_1");
    for (const auto& c : search_colorings(d, Modulus(5))) {
        auto [norm, f] = normalize_coloring(d, c);
        CHECK(check_coloring(d, norm));
        CHECK(norm.distinct_colors() == c.distinct_colors());
        for (int v : {0, 1, 2})
            CHECK(std::find(norm.values.begin(), norm.values.end(), v) != norm.values.end());
        for (std::size_t i = 0; i < c.values.size(); ++i)
            CHECK(norm.values[i] == f(c.values[i]));
    }
}

TEST_CASE("coloring_json") {
    auto d = corpus_diagram("3_1");
    auto js = coloring_json(d, {Modulus(3), {0, 1, 2}});
    CHECK(js.find("\"modulus\":3") != std::string::npos);
    CHECK(js.find("\"arcs\":[1,2,4]") != std::string::npos);
    CHECK(js.find("\"values\":[0,1,2]") != std::string::npos);
    CHECK(js.find("\"distinct\":3") != std::string::npos);
}
