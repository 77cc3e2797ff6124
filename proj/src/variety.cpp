#include "vlab/variety.hpp"

#include <random>
#include <optional>

#include "vlab/linalg.hpp"

namespace vlab {

namespace {

template <class E>
std::vector<E> poly_mul(const std::vector<E>& a, const std::vector<E>& b, const E& zero) {
    std::vector<E> c(a.size() + b.size() - 1, zero);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

template <class E>
void poly_trim(std::vector<E>& a) {
    while (!a.empty() && is_zero(a.back())) a.pop_back();
}

template <class K>
std::vector<typename K::Element> poly_mod(std::vector<typename K::Element> a, const std::vector<typename K::Element>& b) {
    poly_trim(a);
    while (a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        typename K::Element f = a.back() / b.back();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        a.pop_back();
        poly_trim(a);
    }
    return a;
}

// True when gcd(g, g') is constant; g is trimmed and nonzero.
template <class K>
bool univariate_squarefree(const K& field, const std::vector<typename K::Element>& g) {
    if (g.size() <= 1) return true;
    std::vector<typename K::Element> dg;
    for (std::size_t k = 1; k < g.size(); ++k) dg.push_back(g[k] * field.from_int(static_cast<long long>(k)));
    poly_trim(dg);
    if (dg.empty()) return false; // inseparable in positive characteristic
    auto a = g;
    auto b = dg;
    while (!b.empty()) {
        auto rem = poly_mod<K>(a, b);
        a = std::move(b);
        b = std::move(rem);
    }
    return a.size() == 1;
}

// Uniform draw in [0, p) from raw 64-bit output by rejection; fixed across platforms.
std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t p) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % p);
    std::uint64_t x;
    do {
        x = gen();
    } while (x >= limit);
    return x % p;
}

ProjPoint<PrimeField> random_point(const PrimeField& field, std::size_t r, std::mt19937_64& gen) {
    for (;;) {
        std::vector<Fp> c(r + 1);
        bool nonzero = false;
        for (auto& x : c) {
            x = Fp{uniform_below(gen, field.modulus()), field.modulus()};
            nonzero = nonzero || x.v != 0;
        }
        if (nonzero) return ProjPoint<PrimeField>(field, std::move(c));
    }
}

} // namespace

template <class K>
MembershipVerdict membership(const PointConfig<K>& cfg, std::size_t d, std::size_t m) {
    const std::uint64_t b = basis_size(cfg.r(), d);
    if (m < 1) throw PreconditionError("m: must be at least 1");
    if (m >= b)
        throw PreconditionError("m: empty variety, m = " + std::to_string(m) + " >= b(r,d) = " + std::to_string(b));
    MembershipVerdict v;
    v.basis_size = b;
    v.m_requested = m;
    v.rank = rank(multi_veronese(cfg, d));
    v.kernel_dim = b - v.rank;
    v.member = v.kernel_dim >= m;
    v.trivially_member = cfg.size() < b - m + 1;
    return v;
}

template <class K>
bool membership_p1_oracle(const PointConfig<K>& cfg, std::size_t d) {
    if (cfg.r() != 1) throw PreconditionError("membership_p1_oracle: requires points of P^1");
    std::vector<ProjPoint<K>> distinct;
    for (const auto& p : cfg.points()) {
        bool seen = false;
        for (const auto& q : distinct) seen = seen || q == p;
        if (!seen) distinct.push_back(p);
    }
    return distinct.size() <= d;
}

template <class K>
LinearSystem<K> hypersurface_system(const PointConfig<K>& cfg, std::size_t d) {
    const MonomialBasis basis = monomial_basis(cfg.r(), d);
    LinearSystem<K> system{d, {}};
    for (auto& v : kernel_basis(multi_veronese(cfg, d).transpose()))
        system.forms.emplace_back(cfg.field(), basis, std::move(v));
    return system;
}

template <class K>
HypersurfaceForm<K> recover_coefficients_local(const PointConfig<K>& cfg, std::size_t d) {
    using E = typename K::Element;
    const K& field = cfg.field();
    const MonomialBasis basis = monomial_basis(cfg.r(), d);
    const Matrix<K> M = multi_veronese(cfg, d);
    const std::size_t b = basis.size();
    const std::size_t rk = rank(M);
    if (b - rk != 1)
        throw PreconditionError("hypersurface not unique: " + std::to_string(b - rk) +
                                " independent forms through the points");

    auto columns = [&](const std::vector<std::size_t>& cols) {
        Matrix<K> sub(field, b, cols.size());
        for (std::size_t i = 0; i < b; ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = M(i, cols[j]);
        return sub;
    };

    std::vector<std::size_t> J;
    for (std::size_t c = 0; c < cfg.size() && J.size() < b - 1; ++c) {
        J.push_back(c);
        if (rank(columns(J)) < J.size()) J.pop_back();
    }
    const Matrix<K> MJ = columns(J);

    for (std::size_t k = 0; k < b; ++k) {
        // Transposed system: M[!k, J]^T * A_{!k}^T = -M[k, J]^T.
        Matrix<K> lhs(field, b - 1, b - 1);
        std::vector<E> rhs(b - 1, field.zero());
        for (std::size_t j = 0; j < b - 1; ++j) {
            std::size_t row = 0;
            for (std::size_t i = 0; i < b; ++i) {
                if (i == k) continue;
                lhs(j, row++) = MJ(i, j);
            }
            rhs[j] = -MJ(k, j);
        }
        auto solution = solve_square(lhs, rhs);
        if (!solution) continue;
        std::vector<E> coeffs;
        coeffs.reserve(b);
        std::size_t next = 0;
        for (std::size_t i = 0; i < b; ++i) coeffs.push_back(i == k ? field.one() : (*solution)[next++]);
        return HypersurfaceForm<K>(field, basis, std::move(coeffs));
    }
    throw PreconditionError("recover_coefficients_local: no invertible block found");
}

template <class K>
Matrix<K> incidence_jacobian(const HypersurfaceForm<K>& f, const PointConfig<K>& cfg) {
    if (cfg.r() != f.ambient_dim()) throw PreconditionError("incidence_jacobian: ambient dimensions differ");
    const std::size_t n = cfg.size();
    const std::size_t b = f.basis().size();
    const std::size_t width = cfg.r() + 1;
    Matrix<K> jac(cfg.field(), n, b + width * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!is_zero(f(cfg[i])))
            throw PreconditionError("point not on hypersurface: points[" + std::to_string(i) + "]");
        auto v = veronese_eval(cfg[i], f.basis());
        for (std::size_t k = 0; k < b; ++k) jac(i, k) = std::move(v[k]);
        auto g = gradient_eval(f, cfg[i]);
        for (std::size_t j = 0; j < width; ++j) jac(i, b + i * width + j) = std::move(g[j]);
    }
    return jac;
}

std::uint64_t expected_dimension(std::size_t r, std::size_t d, std::size_t n) {
    const std::uint64_t b = basis_size(r, d);
    if (n < b) return static_cast<std::uint64_t>(n) * r;
    return b - 1 + static_cast<std::uint64_t>(n) * (r - 1);
}

template <class K>
LineRestriction<K> line_restriction(const HypersurfaceForm<K>& f, const ProjPoint<K>& a, const ProjPoint<K>& b) {
    using E = typename K::Element;
    if (a.ambient_dim() != f.ambient_dim() || b.ambient_dim() != f.ambient_dim())
        throw PreconditionError("line_restriction: ambient dimensions differ");
    if (a == b) throw PreconditionError("line_restriction: the two points coincide");
    const K& field = f.field();
    const std::size_t d = f.degree();
    const std::size_t width = f.ambient_dim() + 1;

    // pw[j][e] = (a_j + b_j t)^e as a polynomial in t.
    std::vector<std::vector<std::vector<E>>> pw(width);
    for (std::size_t j = 0; j < width; ++j) {
        pw[j].push_back({field.one()});
        const std::vector<E> linear{a[j], b[j]};
        for (std::size_t e = 1; e <= d; ++e) pw[j].push_back(poly_mul(pw[j].back(), linear, field.zero()));
    }

    LineRestriction<K> out;
    out.coefficients.assign(d + 1, field.zero());
    const auto& exps = f.basis().exponents;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        const E& c = f.coeffs()[i];
        if (is_zero(c)) continue;
        std::vector<E> term{c};
        for (std::size_t j = 0; j < width; ++j)
            if (exps[i][j]) term = poly_mul(term, pw[j][exps[i][j]], field.zero());
        for (std::size_t k = 0; k < term.size(); ++k) out.coefficients[k] += term[k];
    }

    std::vector<E> g = out.coefficients;
    poly_trim(g);
    out.identically_zero = g.empty();
    if (out.identically_zero) return out;
    out.degree = d;
    // Roots at s = 0 (the point b) have multiplicity d - deg_t g.
    const std::size_t at_infinity = d - (g.size() - 1);
    out.squarefree = at_infinity <= 1 && univariate_squarefree(field, g);
    return out;
}

MultidegreeReport multidegree_check(const PrimeField& field, std::size_t r, std::size_t d, std::size_t n,
                                    std::size_t trials, std::uint64_t seed, std::size_t resample_bound) {
    const std::uint64_t b = basis_size(r, d);
    if (n < b)
        throw PreconditionError("multidegree_check: n = " + std::to_string(n) + " is below b(r,d) = " +
                                std::to_string(b));
    const std::uint64_t p = field.modulus();
    if (p < 100ULL * d * n)
        throw PreconditionError("field too small: p = " + std::to_string(p) + " < 100 d n = " +
                                std::to_string(100ULL * d * n));

    MultidegreeReport report;
    report.r = r;
    report.d = d;
    report.n = n;
    report.trials = trials;
    report.seed = seed;
    report.modulus = p;
    report.lines_per_trial = n - b + 1;
    mpz_class value;
    mpz_ui_pow_ui(value.get_mpz_t(), d, report.lines_per_trial);
    report.expected_value = value.get_str();

    for (std::size_t t = 0; t < trials; ++t) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(static_cast<std::uint64_t>(t) >> 32)};
        std::mt19937_64 gen(seq);

        std::optional<HypersurfaceForm<PrimeField>> form;
        for (std::size_t attempt = 0; attempt <= resample_bound && !form; ++attempt) {
            std::vector<ProjPoint<PrimeField>> pts;
            for (std::size_t i = 0; i + 1 < b; ++i) pts.push_back(random_point(field, r, gen));
            auto system = hypersurface_system(PointConfig<PrimeField>(field, r, std::move(pts)), d);
            if (system.m() == 1)
                form = system.forms.front();
            else
                ++report.resamples;
        }
        if (!form)
            throw PreconditionError("multidegree_check: trial " + std::to_string(t) + " found no unique hypersurface after " +
                                    std::to_string(resample_bound) + " resamples");

        bool pass = true;
        for (std::size_t l = 0; l < report.lines_per_trial; ++l) {
            auto a = random_point(field, r, gen);
            auto c = random_point(field, r, gen);
            while (c == a) c = random_point(field, r, gen);
            auto restriction = line_restriction(*form, a, c);
            ++report.total_lines;
            if (restriction.identically_zero || restriction.degree != d) pass = false;
            if (restriction.squarefree) ++report.squarefree_lines;
        }
        ++(pass ? report.passes : report.failures);
    }
    return report;
}

#define VLAB_INSTANTIATE(K)                                                                                  \
    template MembershipVerdict membership(const PointConfig<K>&, std::size_t, std::size_t);                  \
    template bool membership_p1_oracle(const PointConfig<K>&, std::size_t);                                  \
    template LinearSystem<K> hypersurface_system(const PointConfig<K>&, std::size_t);                        \
    template HypersurfaceForm<K> recover_coefficients_local(const PointConfig<K>&, std::size_t);             \
    template Matrix<K> incidence_jacobian(const HypersurfaceForm<K>&, const PointConfig<K>&);                \
    template LineRestriction<K> line_restriction(const HypersurfaceForm<K>&, const ProjPoint<K>&,            \
                                                 const ProjPoint<K>&);

VLAB_INSTANTIATE(RationalField)
VLAB_INSTANTIATE(PrimeField)

#undef VLAB_INSTANTIATE

} // namespace vlab
