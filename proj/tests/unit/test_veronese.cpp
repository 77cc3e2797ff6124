#include <doctest.h>

#include "testkit.hpp"

using namespace vlab;
using testkit::Rng;
using testkit::config;

TEST_CASE("monomial basis order and size") {
    for (std::size_t r = 1; r <= 4; ++r)
        for (std::size_t d = 1; d <= 5; ++d) {
            const auto basis = monomial_basis(r, d);
            CHECK(basis.exponents == testkit::monomials_oracle(r, d));
            CHECK(basis.size() == testkit::pascal_binomial(r + d, d));
            CHECK(basis_size(r, d) == basis.size());
        }
    CHECK(monomial_basis(1, 1).exponents == std::vector<std::vector<unsigned>>{{1, 0}, {0, 1}});
    CHECK(monomial_basis(3, 2).size() == 10);
    CHECK(monomial_basis(2, 2).exponents ==
          std::vector<std::vector<unsigned>>{{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}});
    CHECK_THROWS_AS(monomial_basis(0, 2), PreconditionError);
    CHECK_THROWS_AS(monomial_basis(2, 0), PreconditionError);
    CHECK_THROWS_AS(monomial_basis(10, 10), CapError);
}

TEST_CASE("projective points are stored canonically") {
    const RationalField q;
    const auto p = testkit::point(q, {0, 3, -6});
    CHECK(p.coords()[0] == 0);
    CHECK(p.coords()[1] == 1);
    CHECK(p.coords()[2] == -2);
    CHECK(p == testkit::point(q, {0, -1, 2}));
    CHECK_THROWS_AS(testkit::point(q, {0, 0, 0}), InputError);
    CHECK_THROWS_AS(testkit::point(q, {5}), InputError);
    CHECK_THROWS_AS(config(q, 2, {testkit::point(q, {1, 2})}), InputError);
}

TEST_CASE("Veronese evaluation examples") {
    const RationalField q;
    const auto b22 = monomial_basis(2, 2);
    CHECK(veronese_eval(testkit::point(q, {1, 0, 0}), b22) == std::vector<Rational>{1, 0, 0, 0, 0, 0});
    CHECK(veronese_eval(testkit::point(q, {1, 1}), monomial_basis(1, 3)) == std::vector<Rational>{1, 1, 1, 1});
    CHECK(veronese_eval(testkit::point(q, {1, 2}), monomial_basis(1, 2)) == std::vector<Rational>{1, 2, 4});

    const auto single = multi_veronese(config(q, 1, {testkit::point(q, {1, 0})}), 2);
    CHECK(single.rows() == 3);
    CHECK(single.cols() == 1);
    CHECK(single == Matrix<RationalField>(q, 3, 1, {1, 0, 0}));

    const auto twice = multi_veronese(config(q, 2, {testkit::point(q, {1, 2, 3}), testkit::point(q, {2, 4, 6})}), 2);
    CHECK(rank(twice) == 1);
}

TEST_CASE("six points on a conic have vanishing determinant") {
    const RationalField q;
    Rng rng(1);
    const auto g = Matrix<RationalField>::identity(q, 3);
    for (int trial = 0; trial < 20; ++trial) {
        const auto pts = testkit::conic_points(g, rng, 6);
        const auto m = multi_veronese(config(q, 2, pts), 2);
        CHECK(determinant(m) == 0);
        CHECK(testkit::leibniz_det(m) == 0);
    }
}

TEST_CASE("evaluation agrees with brute-force monomials") {
    Rng rng(2);
    const PrimeField f(1000003);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t r = testkit::rand_int(rng, 1, 4), d = testkit::rand_int(rng, 1, 4);
        const auto p = testkit::random_point(f, r, rng, 1000);
        const auto v = veronese_eval(p, monomial_basis(r, d));
        const auto mons = testkit::monomials_oracle(r, d);
        for (std::size_t k = 0; k < mons.size(); ++k) CHECK(v[k] == testkit::monomial_value(f, p.coords(), mons[k]));
    }
}

TEST_CASE("degree homogeneity on raw representatives") {
    Rng rng(3);
    const RationalField q;
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t r = testkit::rand_int(rng, 1, 3), d = testkit::rand_int(rng, 1, 4);
        const auto basis = monomial_basis(r, d);
        std::vector<Rational> x(r + 1), scaled(r + 1);
        Rational lambda = 0;
        while (lambda == 0) lambda = testkit::rand_rational(rng, 7, 5);
        for (std::size_t j = 0; j <= r; ++j) {
            x[j] = testkit::rand_rational(rng, 9, 3);
            scaled[j] = lambda * x[j];
        }
        const auto v = veronese_eval_raw(q, std::span<const Rational>(x), basis);
        const auto w = veronese_eval_raw(q, std::span<const Rational>(scaled), basis);
        Rational ld = 1;
        for (std::size_t k = 0; k < d; ++k) ld *= lambda;
        for (std::size_t k = 0; k < v.size(); ++k) CHECK(w[k] == ld * v[k]);
    }
}

TEST_CASE("rank is invariant under projective transformations and permutations") {
    Rng rng(4);
    const RationalField q;
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t r = testkit::rand_int(rng, 1, 3), d = testkit::rand_int(rng, 1, 3);
        const std::size_t n = testkit::rand_int(rng, 1, 12);
        std::vector<ProjPoint<RationalField>> pts;
        // Reuse a few points so some configurations are degenerate.
        const auto pool = testkit::distinct_random_points(q, r, 4, rng, 3);
        for (std::size_t i = 0; i < n; ++i)
            pts.push_back(trial % 2 ? pool[i % pool.size()] : testkit::random_point(q, r, rng, 3));
        const PointConfig<RationalField> cfg(q, r, pts);
        const std::size_t rk = rank(multi_veronese(cfg, d));

        const auto g = testkit::random_invertible(q, r + 1, rng);
        CHECK(rank(multi_veronese(transform(g, cfg), d)) == rk);

        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        testkit::shuffle(order, rng);
        const auto permuted = permute(cfg, order);
        const auto m = multi_veronese(cfg, d), mp = multi_veronese(permuted, d);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < m.rows(); ++k) CHECK(mp(k, i) == m(k, order[i]));
        CHECK(rank(mp) == rk);
    }
}

TEST_CASE("gradient examples") {
    const RationalField q;
    const auto x0x1 = testkit::form(q, 2, 2, {{{1, 1, 0}, 1}});
    CHECK(gradient_eval(x0x1, testkit::point(q, {1, 0, 1})) == std::vector<Rational>{0, 1, 0});

    const auto sphere = testkit::form(q, 2, 2, {{{2, 0, 0}, 1}, {{0, 2, 0}, 1}, {{0, 0, 2}, 1}});
    Rng rng(5);
    for (int i = 0; i < 20; ++i) {
        const auto g = gradient_eval(sphere, testkit::random_point(q, 2, rng, 9));
        CHECK(std::any_of(g.begin(), g.end(), [](const Rational& v) { return v != 0; }));
    }

    const auto planes = testkit::form(q, 3, 2, {{{1, 1, 0, 0}, 1}});
    CHECK(gradient_eval(planes, testkit::point(q, {0, 0, 0, 1})) == std::vector<Rational>{0, 0, 0, 0});
}

namespace {

template <class K>
HypersurfaceForm<K> random_form(const K& field, std::size_t r, std::size_t d, Rng& rng) {
    const auto basis = monomial_basis(r, d);
    std::vector<typename K::Element> c(basis.size());
    for (auto& x : c) x = testkit::rand_element(field, rng, 9);
    c[0] = field.one();
    return HypersurfaceForm<K>(field, basis, c);
}

} // namespace

TEST_CASE("Euler relation") {
    Rng rng(6);
    const RationalField q;
    const PrimeField f3(3);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t r = testkit::rand_int(rng, 1, 3), d = testkit::rand_int(rng, 1, 4);
        {
            const auto form = random_form(q, r, d, rng);
            const auto p = testkit::random_point(q, r, rng, 7);
            const auto grad = gradient_eval(form, p);
            Rational lhs = 0;
            for (std::size_t j = 0; j <= r; ++j) lhs += p[j] * grad[j];
            CHECK(lhs == Rational(static_cast<long>(d)) * form(p));
        }
        {
            // In characteristic 3 the right side vanishes when 3 | d.
            const auto form = random_form(f3, r, d, rng);
            const auto p = testkit::random_point(f3, r, rng, 2);
            const auto grad = gradient_eval(form, p);
            Fp lhs = f3.zero();
            for (std::size_t j = 0; j <= r; ++j) lhs += p[j] * grad[j];
            CHECK(lhs == f3.from_int(static_cast<long long>(d)) * form(p));
        }
    }
}

TEST_CASE("gradient agrees with central differences") {
    Rng rng(7);
    const RationalField q;
    std::normal_distribution<double> normal;
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t r = testkit::rand_int(rng, 1, 3), d = testkit::rand_int(rng, 1, 4);
        const auto form = random_form(q, r, d, rng);
        std::vector<double> x(r + 1);
        for (auto& v : x) v = normal(rng);
        // A rational point close to x, so the exact gradient can be compared.
        std::vector<Rational> xq;
        for (double v : x) xq.emplace_back(static_cast<long>(std::lround(v * 1e6)), 1000000);
        for (std::size_t j = 0; j <= r; ++j) x[j] = xq[j].get_d();
        const auto grad = gradient_eval_raw(form, std::span<const Rational>(xq));

        auto eval = [&](const std::vector<double>& y) {
            double s = 0;
            for (std::size_t k = 0; k < form.basis().size(); ++k) {
                double m = form.coeffs()[k].get_d();
                for (std::size_t j = 0; j <= r; ++j) m *= std::pow(y[j], form.basis().exponents[k][j]);
                s += m;
            }
            return s;
        };
        const double h = 1e-5;
        for (std::size_t j = 0; j <= r; ++j) {
            auto up = x, down = x;
            up[j] += h;
            down[j] -= h;
            const double numeric = (eval(up) - eval(down)) / (2 * h);
            const double exact = grad[j].get_d();
            CHECK(std::abs(numeric - exact) <= 1e-6 * std::max(1.0, std::abs(exact)));
        }
    }
}

TEST_CASE("hypersurface forms are scaled canonically") {
    const RationalField q;
    const auto basis = monomial_basis(2, 1);
    HypersurfaceForm<RationalField> f(q, basis, {0, 3, -6});
    CHECK(f.coeffs()[1] == 1);
    CHECK(f.coeffs()[2] == -2);
    CHECK_THROWS_AS(HypersurfaceForm<RationalField>(q, basis, {0, 0, 0}), InputError);
    CHECK_THROWS_AS(HypersurfaceForm<RationalField>(q, basis, {1, 0}), InputError);
}
