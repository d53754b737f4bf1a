#include <doctest.h>

#include <cspace/params.hpp>
#include <cspace/structure.hpp>

#include "oracle/weyl_oracle.hpp"

#include <cmath>
#include <stdexcept>

using namespace cspace;

TEST_CASE("make_params derives N, module dimensions and the degenerate flag")
{
    const auto p = make_params(1, 2, 3);
    CHECK(p.N == 6);
    CHECK(p.d1 == 4);
    CHECK(p.d2 == 6);
    CHECK(p.d3 == 12);
    CHECK(p.dim_m() == 24);
    CHECK_FALSE(p.degenerate_flag);
    CHECK(p.label() == "M_{1,2,3}");

    CHECK(make_params(1, 1, 2).degenerate_flag);
    CHECK(make_params(3, 1, 1).degenerate_flag);
    CHECK_FALSE(make_params(2, 2, 1).degenerate_flag);
    CHECK(make_params(100000, 99999, 99998).dim_m() == 59998800006LL);
    CHECK(make_params(100000, 2, 3).dim_m() == 1000014);
}

TEST_CASE("make_params rejects non-positive blocks")
{
    CHECK_THROWS_AS(make_params(0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_params(1, -2, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_params(1, 1, 0), std::invalid_argument);
}

TEST_CASE("fiber Gram matrix and validity")
{
    InvariantMetric g{1, 1, 1, 2, 3, 0.5};
    const auto [a, b, d] = fiber_gram(g);
    CHECK(a == doctest::Approx(2.75));
    CHECK(b == doctest::Approx(1.5));
    CHECK(d == doctest::Approx(3));
    CHECK(is_valid(g));
    g.v4 = 0;
    CHECK_FALSE(is_valid(g));
    g = {1, -1, 1, 1, 1, 0};
    CHECK_FALSE(is_valid(g));
}

TEST_CASE("normalising constants give B-unit fiber generators")
{
    for (int l = 1; l <= 3; ++l)
        for (int m = 1; m <= 3; ++m)
            for (int n = 1; n <= 3; ++n) {
                const auto p = make_params(l, m, n);
                const auto c = norm_constants(p);
                oracle::WeylOracle o(l, m, n);
                // the oracle normalises Z4, Z5 itself; compare the scale it used
                const int k4 = o.dim() - 2;
                const double z4 = o.element(k4)(o.N() - 1, o.N() - 1).imag(); // = -c4 / n
                const double z5 = o.element(k4 + 1)(0, 0).imag();             // = c5 / l
                CHECK(-z4 * n == doctest::Approx(c.c4).epsilon(1e-13));
                CHECK(z5 * l == doctest::Approx(c.c5).epsilon(1e-13));
            }
}

TEST_CASE("Killing table canonicalises all index orders")
{
    StructureTable t(TableKind::Killing);
    t.set({3, 1, 2}, 0.25);
    for (Triple x : t.orbit({1, 2, 3}))
        CHECK(t.get(x) == 0.25);
    CHECK(t.orbit({1, 2, 3}).size() == 6);
    CHECK(t(2, 1, 3) == 0.25);
    CHECK(t(4, 1, 1) == 0.0);
    CHECK_THROWS_AS(t.get({0, 1, 1}), std::out_of_range);
    CHECK_THROWS_AS(t.get({6, 1, 1}), std::out_of_range);
}

TEST_CASE("metric-adapted table is symmetric only in the lower pair")
{
    StructureTable t(TableKind::MetricAdapted);
    t.set({5, 2, 2}, 0.5);
    t.set({4, 1, 2}, 0.1);
    CHECK(t(4, 2, 1) == 0.1);
    CHECK(t(2, 4, 1) == 0.0);
    CHECK(t.orbit({5, 2, 2}).size() == 1);
    CHECK(t.orbit({4, 1, 2}).size() == 2);
}

TEST_CASE("B-structure constants agree with brute force over su(N)")
{
    const int cases[][3] = {{1, 2, 3}, {2, 2, 1}, {2, 3, 4}, {1, 1, 1}, {3, 1, 2}};
    for (const auto& c : cases) {
        const auto p = make_params(c[0], c[1], c[2]);
        oracle::WeylOracle o(c[0], c[1], c[2]);
        const auto t = b_structure_constants(p);
        CAPTURE(p.label());
        for (int k = 1; k <= 5; ++k)
            for (int i = 1; i <= 5; ++i)
                for (int j = 1; j <= 5; ++j) {
                    CAPTURE(k);
                    CAPTURE(i);
                    CAPTURE(j);
                    CHECK(t(k, i, j) == doctest::Approx(o.structure_constant(k, i, j)).epsilon(1e-12).scale(1));
                }
    }
}

TEST_CASE("metric-adapted {5;2,2} and {5;3,3} follow the sheared fiber direction")
{
    const auto p = make_params(2, 3, 4);
    oracle::WeylOracle o(2, 3, 4);
    // W = c Z4~ + Z5~ acting on f2 and f3
    for (double c : {-0.7, 0.0, 0.31, 1.9}) {
        const auto [k522, k533] = adapted_522_533<double>(p, c);
        double s2 = 0, s3 = 0;
        const auto W = (c * o.element(o.dim() - 2) + o.element(o.dim() - 1)).eval();
        for (int a = 0; a < o.dim() - 2; ++a) {
            const auto v = o.project(oracle::WeylOracle::bracket(W, o.element(a)));
            const int mod = o.modules()[a];
            if (mod == 2)
                s2 += v.squaredNorm();
            if (mod == 3)
                s3 += v.squaredNorm();
        }
        CHECK(k522 == doctest::Approx(s2).epsilon(1e-12));
        CHECK(k533 == doctest::Approx(s3).epsilon(1e-12));
        const auto mt = metric_structure_constants(p, {1, 1, 1, 1, 1, c});
        CHECK(mt(5, 2, 2) == doctest::Approx(s2).epsilon(1e-12));
        CHECK(mt(5, 3, 3) == doctest::Approx(s3).epsilon(1e-12));
    }
}

TEST_CASE("eliminated {5;2,2}, {5;3,3} equal the general form at c = c(x2, x3)")
{
    const auto p = make_params(3, 5, 2);
    for (double x2 : {0.3, 1.0, 2.7})
        for (double x3 : {0.5, 1.0, 4.0}) {
            const double c = c_from_x<double>(p, x2, x3);
            const auto [a, b] = adapted_522_533<double>(p, c);
            const auto [e, f] = adapted_522_533_eliminated<double>(p, x2, x3);
            CHECK(a == doctest::Approx(e).epsilon(1e-12));
            CHECK(b == doctest::Approx(f).epsilon(1e-12));
        }
}

TEST_CASE("c_from_x vanishes on x2 = x3 and matches the M_{1,2,3} value")
{
    const auto p = make_params(1, 2, 3);
    CHECK(c_from_x<double>(p, 1.7, 1.7) == 0.0);
    CHECK(c_from_x<double>(p, 1.19781, 1.0) == doctest::Approx(0.112353).epsilon(1e-5));
    const auto q = make_params(1, 3, 2);
    CHECK(c_from_x<double>(q, 0.472295, 1.0) == doctest::Approx(-0.465459).epsilon(1e-5));
}
