#include "vlab/linalg.hpp"

#include <limits>
#include <numeric>
#include <string>
#include <type_traits>
#include <utility>

namespace vlab {

namespace {

// Row echelon form over an integral domain R, produced by Bareiss elimination.
template <class R>
struct Echelon {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<R> a;
    std::vector<std::size_t> pivots;
    bool odd_permutation = false;

    R& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const R& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

inline mpz_class exact_div(const mpz_class& x, const mpz_class& y) {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return q;
}
inline Fp exact_div(const Fp& x, const Fp& y) { return x / y; }

template <class R>
void bareiss(Echelon<R>& e, const R& one, const R& zero) {
    R prev = one;
    std::size_t k = 0;
    for (std::size_t c = 0; c < e.cols && k < e.rows; ++c) {
        std::size_t pivot = e.rows;
        for (std::size_t i = k; i < e.rows; ++i) {
            if (!is_zero(e.at(i, c))) {
                pivot = i;
                break;
            }
        }
        if (pivot == e.rows) continue;
        if (pivot != k) {
            for (std::size_t j = 0; j < e.cols; ++j) std::swap(e.at(pivot, j), e.at(k, j));
            e.odd_permutation = !e.odd_permutation;
        }
        const R pkc = e.at(k, c);
        for (std::size_t i = k + 1; i < e.rows; ++i) {
            const R lead = e.at(i, c);
            for (std::size_t j = c + 1; j < e.cols; ++j) {
                R num = pkc * e.at(i, j) - lead * e.at(k, j);
                e.at(i, j) = exact_div(num, prev);
            }
            e.at(i, c) = zero;
        }
        prev = pkc;
        e.pivots.push_back(c);
        ++k;
    }
}

// Integer-valued copy of a rational matrix: row i is multiplied by the lcm of
// its denominators. `scale` receives the product of those multipliers.
Echelon<mpz_class> integer_rows(const Matrix<RationalField>& m, mpz_class* scale) {
    Echelon<mpz_class> e;
    e.rows = m.rows();
    e.cols = m.cols();
    e.a.resize(e.rows * e.cols);
    if (scale) *scale = 1;
    for (std::size_t i = 0; i < e.rows; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < e.cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < e.cols; ++j) e.at(i, j) = m(i, j).get_num() * exact_div(l, m(i, j).get_den());
        if (scale) *scale *= l;
    }
    return e;
}

Echelon<Fp> field_rows(const Matrix<PrimeField>& m) {
    Echelon<Fp> e;
    e.rows = m.rows();
    e.cols = m.cols();
    e.a.assign(m.entries().begin(), m.entries().end());
    return e;
}

template <class K>
auto echelon(const Matrix<K>& m) {
    if constexpr (std::is_same_v<K, RationalField>) {
        auto e = integer_rows(m, nullptr);
        bareiss(e, mpz_class(1), mpz_class(0));
        return e;
    } else {
        auto e = field_rows(m);
        bareiss(e, m.field().one(), m.field().zero());
        return e;
    }
}

template <class K, class R>
typename K::Element lift(const K& field, const R& x) {
    if constexpr (std::is_same_v<K, RationalField>) {
        return Rational(x);
    } else {
        (void)field;
        return x;
    }
}

// Determinant of a small square block by plain Gaussian elimination in the field.
template <class K>
typename K::Element elimination_det(const K& field, std::vector<typename K::Element> a, std::size_t n) {
    using E = typename K::Element;
    E det = field.one();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && is_zero(a[p * n + c])) ++p;
        if (p == n) return field.zero();
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a[p * n + j], a[c * n + j]);
            det = -det;
        }
        E piv = a[c * n + c];
        det = det * piv;
        for (std::size_t i = c + 1; i < n; ++i) {
            if (is_zero(a[i * n + c])) continue;
            E f = a[i * n + c] / piv;
            for (std::size_t j = c; j < n; ++j) a[i * n + j] = a[i * n + j] - f * a[c * n + j];
        }
    }
    return det;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 c = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        c = c * (n - i) / (i + 1);
        if (c > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(c);
}

template <class K>
std::size_t rank(const Matrix<K>& m) {
    return echelon(m).pivots.size();
}

template <class K>
std::vector<std::size_t> pivot_columns(const Matrix<K>& m) {
    return echelon(m).pivots;
}

template <class K>
std::vector<std::vector<typename K::Element>> kernel_basis(const Matrix<K>& m) {
    using E = typename K::Element;
    const K& field = m.field();
    auto e = echelon(m);
    const std::size_t rk = e.pivots.size();

    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;

    std::vector<std::vector<E>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<E> x(m.cols(), field.zero());
        x[f] = field.one();
        for (std::size_t k = rk; k-- > 0;) {
            const std::size_t c = e.pivots[k];
            E acc = field.zero();
            for (std::size_t j = c + 1; j < m.cols(); ++j) {
                if (is_zero(x[j])) continue;
                acc += lift(field, e.at(k, j)) * x[j];
            }
            x[c] = -acc / lift(field, e.at(k, c));
        }
        normalize_leading_one(x);
        basis.push_back(std::move(x));
    }
    return basis;
}

template <class K>
typename K::Element determinant(const Matrix<K>& m) {
    if (m.rows() != m.cols()) throw PreconditionError("determinant of a non-square matrix");
    const K& field = m.field();
    const std::size_t n = m.rows();
    if (n == 0) return field.one();
    if constexpr (std::is_same_v<K, RationalField>) {
        mpz_class scale;
        auto e = integer_rows(m, &scale);
        bareiss(e, mpz_class(1), mpz_class(0));
        if (e.pivots.size() < n) return field.zero();
        Rational det(e.at(n - 1, n - 1), scale);
        det.canonicalize();
        return e.odd_permutation ? Rational(-det) : det;
    } else {
        auto e = field_rows(m);
        bareiss(e, field.one(), field.zero());
        if (e.pivots.size() < n) return field.zero();
        Fp det = e.at(n - 1, n - 1);
        return e.odd_permutation ? -det : det;
    }
}

template <class K>
std::optional<std::vector<typename K::Element>> solve_square(const Matrix<K>& a,
                                                             const std::vector<typename K::Element>& b) {
    using E = typename K::Element;
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) throw PreconditionError("solve_square: shape mismatch");
    std::vector<E> w(a.entries().begin(), a.entries().end());
    std::vector<E> x = b;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && is_zero(w[p * n + c])) ++p;
        if (p == n) return std::nullopt;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(w[p * n + j], w[c * n + j]);
            std::swap(x[p], x[c]);
        }
        E piv = w[c * n + c];
        for (std::size_t j = c; j < n; ++j) w[c * n + j] = w[c * n + j] / piv;
        x[c] = x[c] / piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || is_zero(w[i * n + c])) continue;
            E f = w[i * n + c];
            for (std::size_t j = c; j < n; ++j) w[i * n + j] = w[i * n + j] - f * w[c * n + j];
            x[i] = x[i] - f * x[c];
        }
    }
    return x;
}

template <class K>
bool minors_vanish(const Matrix<K>& m, std::size_t t, std::uint64_t cap) {
    using E = typename K::Element;
    if (t < 1 || t > std::min(m.rows(), m.cols()))
        throw PreconditionError("minors_vanish: minor size " + std::to_string(t) + " outside [1, " +
                                std::to_string(std::min(m.rows(), m.cols())) + "]");
    const std::uint64_t a = binomial(m.rows(), t);
    const std::uint64_t b = binomial(m.cols(), t);
    if (a != 0 && b > cap / a)
        throw CapError("cap-minors: " + std::to_string(a) + " x " + std::to_string(b) + " minors exceed cap " +
                       std::to_string(cap));

    std::vector<std::size_t> ri(t), ci(t);
    std::iota(ri.begin(), ri.end(), 0);
    std::vector<E> block(t * t, m.field().zero());
    do {
        std::iota(ci.begin(), ci.end(), 0);
        do {
            for (std::size_t i = 0; i < t; ++i)
                for (std::size_t j = 0; j < t; ++j) block[i * t + j] = m(ri[i], ci[j]);
            if (!is_zero(elimination_det(m.field(), block, t))) return false;
        } while (next_combination(ci, m.cols()));
    } while (next_combination(ri, m.rows()));
    return true;
}

#define VLAB_INSTANTIATE(K)                                                                                  \
    template std::size_t rank(const Matrix<K>&);                                                             \
    template std::vector<std::size_t> pivot_columns(const Matrix<K>&);                                       \
    template std::vector<std::vector<K::Element>> kernel_basis(const Matrix<K>&);                            \
    template K::Element determinant(const Matrix<K>&);                                                       \
    template std::optional<std::vector<K::Element>> solve_square(const Matrix<K>&,                           \
                                                                 const std::vector<K::Element>&);            \
    template bool minors_vanish(const Matrix<K>&, std::size_t, std::uint64_t);

VLAB_INSTANTIATE(RationalField)
VLAB_INSTANTIATE(PrimeField)

#undef VLAB_INSTANTIATE

} // namespace vlab
