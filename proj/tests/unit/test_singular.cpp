#include <doctest.h>

#include "testkit.hpp"

using namespace vlab;
using testkit::config;
using testkit::Rng;

namespace {

const RationalField q;

ProjPoint<RationalField> P(std::initializer_list<long long> c) { return testkit::point(q, c); }

bool fired(const ClassificationReport<RationalField>& r, Criterion c) {
    return std::find(r.fired.begin(), r.fired.end(), c) != r.fired.end();
}

} // namespace

TEST_CASE("singular support") {
    Rng rng(1);
    const auto conic = testkit::form(q, 2, 2, {{{1, 0, 1}, 1}, {{0, 2, 0}, -1}});
    const auto six = testkit::conic_points(Matrix<RationalField>::identity(q, 3), rng, 6);
    CHECK(singular_support(conic, config(q, 2, six)).indices.empty());

    const auto planes = testkit::form(q, 3, 2, {{{1, 1, 0, 0}, 1}});
    const auto s = singular_support(planes, config(q, 3, {P({1, 0, 2, 3}), P({0, 0, 1, 5}), P({0, 1, 1, 1}),
                                                          P({0, 0, 1, -1})}));
    CHECK(s.indices == std::vector<std::size_t>{1, 3});
    CHECK_FALSE(s.has_duplicates);

    const auto cubic = testkit::nodal_cubic();
    auto pts = testkit::nodal_cubic_smooth_points(rng, 8);
    pts.insert(pts.begin() + 2, P({1, 0, 0}));
    pts.push_back(P({1, 0, 0}));
    const auto sn = singular_support(cubic, config(q, 2, pts));
    CHECK(sn.indices == std::vector<std::size_t>{2, 9});
    CHECK(sn.has_duplicates);
    CHECK(sn.distinct_points.size() == 1);

    CHECK_THROWS_AS(singular_support(conic, config(q, 2, {P({1, 1, 2})})), PreconditionError);
}

TEST_CASE("d-normality examples and oracle") {
    const std::vector collinear{P({1, 0, 0}), P({1, 1, 0}), P({1, 2, 0})};
    CHECK_FALSE(is_d_normal(collinear, 1));
    CHECK(is_d_normal(collinear, 2));
    CHECK(is_d_normal(std::vector{P({1, 2, 3})}, 0));
    CHECK(is_d_normal(std::vector{P({1, 2, 3})}, 4));
    CHECK(is_d_normal(std::vector<ProjPoint<RationalField>>{}, 3));
    CHECK_THROWS_AS(is_d_normal(std::vector{P({1, 2, 3}), P({2, 4, 6})}, 2), PreconditionError);

    Rng rng(2);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t r = testkit::rand_int(rng, 1, 3);
        const auto pts = testkit::distinct_random_points(q, r, testkit::rand_int(rng, 1, 9), rng, 4);
        for (std::size_t d = 0; d <= 4; ++d) CHECK(is_d_normal(pts, d) == testkit::d_normal_oracle(pts, d));
    }
}

TEST_CASE("regularity examples") {
    CHECK(regularity_of_points(std::vector{P({1, 5, 7})}) == 1);
    for (long long m = 2; m <= 6; ++m) {
        std::vector<ProjPoint<RationalField>> line;
        for (long long i = 0; i < m; ++i) line.push_back(P({1, i, 2 * i}));
        CHECK(regularity_of_points(line) == static_cast<std::size_t>(m));
    }
    CHECK(regularity_of_points(std::vector{P({1, 0, 0}), P({0, 1, 0}), P({0, 0, 1}), P({1, 1, 1})}) == 3);
    CHECK(regularity_of_points(std::vector<ProjPoint<RationalField>>{}) == 0);
}

TEST_CASE("secants and generality") {
    CHECK(max_secant(std::vector{P({1, 0, 0}), P({0, 1, 0}), P({0, 0, 1})}).count == 2);
    const auto five = std::vector{P({1, 0, 0}), P({1, 1, 0}), P({1, 2, 0}), P({1, 3, 0}), P({1, 1, 1})};
    const auto sec = max_secant(five);
    CHECK(sec.count == 4);
    CHECK(five[sec.witness.first] != five[sec.witness.second]);

    const PrimeField f(1000003);
    Rng rng(3);
    std::vector<ProjPoint<PrimeField>> random10;
    for (int i = 0; i < 10; ++i) random10.push_back(testkit::random_point(f, 2, rng, 500000));
    CHECK(max_secant(random10).count == 2);

    CHECK(k_generality(five).k == 1);
    CHECK(k_generality(std::vector{P({1, 0, 0, 0}), P({0, 1, 0, 0}), P({0, 0, 1, 0}), P({0, 0, 0, 1})}).k == 3);
    const auto six = testkit::distinct_random_points(q, 3, 6, rng, 50);
    CHECK(k_generality(six).k == 3);
    CHECK_FALSE(k_generality(six).capped);

    // Eight general points in P^7 are 7-general, beyond the default cap.
    std::vector<ProjPoint<RationalField>> eight;
    for (int i = 0; i < 8; ++i) {
        std::vector<Rational> e(8, 0);
        e[static_cast<std::size_t>(i)] = 1;
        eight.push_back(testkit::qpoint(e));
    }
    const auto capped = k_generality(eight);
    CHECK(capped.k == kDefaultGeneralityCap);
    CHECK(capped.capped);
    CHECK(k_generality(eight, 7).k == 7);
}

TEST_CASE("classify: conics") {
    Rng rng(4);
    const auto g = testkit::random_invertible(q, 3, rng);
    const auto six = testkit::conic_points(g, rng, 6);
    const auto report = classify(config(q, 2, six), 2);
    CHECK(report.verdict == Verdict::Smooth);
    CHECK(report.m == 1);
    CHECK(report.q.indices.empty());
    CHECK(fired(report, Criterion::AtMostDPlusOnePoints));

    const auto five = std::vector(six.begin(), six.begin() + 5);
    CHECK(classify(config(q, 2, five), 2).verdict == Verdict::SmoothAmbient);

    CHECK(classify(config(q, 2, testkit::distinct_random_points(q, 2, 7, rng, 40)), 2).verdict == Verdict::NotOnVariety);

    // Five collinear points plus one: a net of reducible conics.
    std::vector<ProjPoint<RationalField>> m2;
    for (long long i = 0; i < 5; ++i) m2.push_back(P({1, i, 0}));
    m2.push_back(P({1, 1, 1}));
    const auto r2 = classify(config(q, 2, m2), 2);
    CHECK(r2.m == 2);
    CHECK(r2.verdict == Verdict::Singular);
    CHECK(r2.reason == SingularReason::MultipleHypersurfaces);
}

TEST_CASE("classify: nodal cubic") {
    Rng rng(5);
    auto once = testkit::nodal_cubic_smooth_points(rng, 9);
    once.push_back(P({1, 0, 0}));
    const auto r1 = classify(config(q, 2, once), 3);
    CHECK(r1.m == 1);
    CHECK(r1.verdict == Verdict::Smooth);
    CHECK(r1.q.indices.size() == 1);

    auto twice = testkit::nodal_cubic_smooth_points(rng, 8);
    twice.push_back(P({1, 0, 0}));
    twice.push_back(P({1, 0, 0}));
    const auto r2 = classify(config(q, 2, twice), 3);
    CHECK(r2.m == 1);
    CHECK(r2.verdict == Verdict::Singular);
    CHECK(r2.reason == SingularReason::CoincidentSingularPoints);

    // Nine points of a pencil: two cubics through them.
    std::vector<ProjPoint<RationalField>> grid;
    for (long long a : {0, 1, 2})
        for (long long b : {0, 1, 2}) grid.push_back(P({1, a, b}));
    grid.push_back(grid.front());
    const auto r3 = classify(config(q, 2, grid), 3);
    CHECK(r3.m == 2);
    CHECK(r3.verdict == Verdict::Singular);
    CHECK(r3.reason == SingularReason::MultipleHypersurfaces);
}

TEST_CASE("classify: plane pair in P^3") {
    Rng rng(6);
    for (std::size_t k = 1; k <= 4; ++k) {
        const auto pts = testkit::plane_pair_points(rng, k);
        const auto report = classify(config(q, 3, pts), 2);
        REQUIRE(report.m == 1);
        CHECK(report.form == testkit::form(q, 3, 2, {{{1, 1, 0, 0}, 1}}));
        CHECK(report.q.indices.size() == k);
        if (k <= 3) {
            CHECK(report.verdict == Verdict::Smooth);
        } else {
            CHECK(report.verdict == Verdict::Singular);
            CHECK(report.reason == SingularReason::NotDNormal);
            CHECK(fired(report, Criterion::SecantLine));
            REQUIRE(report.regularity_of_q);
            CHECK(*report.regularity_of_q == 4);
        }
    }
}

TEST_CASE("classify: criteria are consistent with the verdict") {
    Rng rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t k = testkit::rand_int(rng, 0, 5);
        auto pts = testkit::plane_pair_points(rng, k);
        if (trial % 3 == 0) pts.push_back(pts.back());
        const auto report = classify(config(q, 3, testkit::transformed(testkit::random_invertible(q, 4, rng), pts)), 2);
        for (auto c : report.fired) {
            if (certifies_singular(c))
                CHECK(report.verdict == Verdict::Singular);
            else
                CHECK(report.verdict == Verdict::Smooth);
        }
    }
}

TEST_CASE("classify over a prime field skips characteristic-0 criteria with a warning") {
    const PrimeField f(1000003);
    std::vector<ProjPoint<PrimeField>> pts;
    for (long long i = 0; i < 5; ++i) pts.push_back(testkit::point(f, {0, 1, i, i * i + 2}));
    for (long long i = 0; i < 5; ++i) pts.push_back(testkit::point(f, {1, 0, i * i + 1, i + 3}));
    pts.push_back(testkit::point(f, {0, 0, 1, 2}));
    pts.push_back(testkit::point(f, {0, 0, 1, 3}));
    const auto report = classify(PointConfig<PrimeField>(f, 3, pts), 2);
    REQUIRE(report.m == 1);
    CHECK(report.verdict == Verdict::Smooth);
    CHECK_FALSE(report.char_warnings.empty());
}

TEST_CASE("specialized classifiers") {
    Rng rng(8);
    const auto g = testkit::random_invertible(q, 4, rng);
    const auto smooth = classify_quadric_p3(config(q, 3, testkit::segre_points(g, rng, 10)));
    CHECK(smooth.verdict == Verdict::Smooth);
    CHECK(smooth.quadric_rank == 4u);

    auto cone = testkit::cone_points(rng, 9);
    cone.push_back(P({0, 0, 0, 1}));
    cone.push_back(P({0, 0, 0, 1}));
    const auto cone_twice = classify_quadric_p3(config(q, 3, cone));
    CHECK(cone_twice.verdict == Verdict::Singular);
    CHECK(cone_twice.quadric_rank == 3u);
    cone.pop_back();
    CHECK(classify_quadric_p3(config(q, 3, cone)).verdict == Verdict::Smooth);

    const auto pair = classify_quadric_p3(config(q, 3, testkit::plane_pair_points(rng, 4)));
    CHECK(pair.verdict == Verdict::Singular);
    CHECK(pair.reason == SingularReason::NotDNormal);
    CHECK(pair.quadric_rank == 2u);
    CHECK(pair.points_on_singular_locus == 4u);

    auto nodal = testkit::nodal_cubic_smooth_points(rng, 9);
    nodal.push_back(P({1, 0, 0}));
    CHECK(classify_plane(config(q, 2, nodal), 3).verdict == Verdict::Smooth);
    nodal.back() = nodal.front();
    nodal.push_back(P({1, 0, 0}));
    nodal.push_back(P({1, 0, 0}));
    CHECK(classify_plane(config(q, 2, nodal), 3).reason == SingularReason::CoincidentSingularPoints);

    const PrimeField f(7);
    CHECK_THROWS_AS(classify_plane(PointConfig<PrimeField>(f, 2, {testkit::point(f, {1, 0, 0})}), 2), PreconditionError);
    CHECK_THROWS_AS(classify_plane(config(q, 3, {P({1, 0, 0, 0})}), 2), PreconditionError);
}

TEST_CASE("classify is invariant under permutations and projective transformations") {
    Rng rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        auto pts = testkit::plane_pair_points(rng, testkit::rand_int(rng, 0, 4));
        const auto base = classify(config(q, 3, pts), 2);
        testkit::shuffle(pts, rng);
        const auto moved = testkit::transformed(testkit::random_invertible(q, 4, rng), pts);
        const auto other = classify(config(q, 3, moved), 2);
        CHECK(other.verdict == base.verdict);
        CHECK(other.reason == base.reason);
        CHECK(other.m == base.m);
        CHECK(other.q.indices.size() == base.q.indices.size());
    }
}
