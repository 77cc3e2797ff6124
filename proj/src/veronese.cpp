#include "vlab/veronese.hpp"

#include <string>

#include "vlab/linalg.hpp"

namespace vlab {

namespace {

void append_exponents(std::size_t var, std::size_t nvars, unsigned remaining, std::vector<unsigned>& current,
                      std::vector<std::vector<unsigned>>& out) {
    if (var + 1 == nvars) {
        current[var] = remaining;
        out.push_back(current);
        return;
    }
    for (unsigned e = remaining + 1; e-- > 0;) {
        current[var] = e;
        append_exponents(var + 1, nvars, remaining - e, current, out);
    }
}

// powers[j][k] = x_j^k for k <= d.
template <class K>
std::vector<std::vector<typename K::Element>> power_table(const K& field, std::span<const typename K::Element> x,
                                                          std::size_t d) {
    std::vector<std::vector<typename K::Element>> powers(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        powers[j].reserve(d + 1);
        powers[j].push_back(field.one());
        for (std::size_t k = 1; k <= d; ++k) powers[j].push_back(powers[j].back() * x[j]);
    }
    return powers;
}

} // namespace

std::uint64_t basis_size(std::size_t r, std::size_t d) { return binomial(r + d, d); }

MonomialBasis monomial_basis(std::size_t r, std::size_t d, std::uint64_t cap) {
    if (r < 1) throw PreconditionError("monomial_basis: ambient dimension r must be at least 1");
    if (d < 1) throw PreconditionError("monomial_basis: degree must be at least 1");
    const std::uint64_t b = basis_size(r, d);
    if (b > cap)
        throw CapError("degree: b(" + std::to_string(r) + "," + std::to_string(d) + ") = " + std::to_string(b) +
                       " monomials exceeds cap " + std::to_string(cap));
    MonomialBasis basis{r, d, {}};
    basis.exponents.reserve(b);
    std::vector<unsigned> current(r + 1, 0);
    append_exponents(0, r + 1, static_cast<unsigned>(d), current, basis.exponents);
    return basis;
}

template <class K>
ProjPoint<K>::ProjPoint(K field, std::vector<Element> coords) : field_(field), coords_(std::move(coords)) {
    if (coords_.size() < 2) throw InputError("projective point needs at least two coordinates");
    if (!normalize_leading_one(coords_)) throw InputError("projective point has all coordinates zero");
}

template <class K>
PointConfig<K>::PointConfig(K field, std::size_t r, std::vector<ProjPoint<K>> points)
    : field_(field), r_(r), points_(std::move(points)) {
    if (r_ < 1) throw InputError("r: ambient dimension must be at least 1");
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (points_[i].ambient_dim() != r_)
            throw InputError("points[" + std::to_string(i) + "]: expected " + std::to_string(r_ + 1) +
                             " coordinates, got " + std::to_string(points_[i].ambient_dim() + 1));
        if (!(points_[i].field() == field_)) throw InputError("points[" + std::to_string(i) + "]: field mismatch");
    }
}

template <class K>
HypersurfaceForm<K>::HypersurfaceForm(K field, MonomialBasis basis, std::vector<Element> coeffs)
    : field_(field), basis_(std::move(basis)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != basis_.size())
        throw InputError("form has " + std::to_string(coeffs_.size()) + " coefficients for " +
                         std::to_string(basis_.size()) + " monomials");
    if (!normalize_leading_one(coeffs_)) throw InputError("form has all coefficients zero");
}

template <class K>
typename K::Element HypersurfaceForm<K>::evaluate(std::span<const Element> x) const {
    if (x.size() != basis_.r + 1) throw PreconditionError("form evaluation: ambient dimensions differ");
    auto v = veronese_eval_raw(field_, x, basis_);
    Element acc = field_.zero();
    for (std::size_t i = 0; i < v.size(); ++i) acc += coeffs_[i] * v[i];
    return acc;
}

template <class K>
std::vector<typename K::Element> veronese_eval_raw(const K& field, std::span<const typename K::Element> x,
                                                   const MonomialBasis& basis) {
    if (x.size() != basis.r + 1) throw PreconditionError("veronese_eval: ambient dimensions differ");
    auto powers = power_table(field, x, basis.d);
    std::vector<typename K::Element> out;
    out.reserve(basis.size());
    for (const auto& e : basis.exponents) {
        typename K::Element m = field.one();
        for (std::size_t j = 0; j < e.size(); ++j)
            if (e[j]) m *= powers[j][e[j]];
        out.push_back(std::move(m));
    }
    return out;
}

template <class K>
Matrix<K> multi_veronese(const PointConfig<K>& cfg, std::size_t d, std::uint64_t cap) {
    const MonomialBasis basis = monomial_basis(cfg.r(), d, cap);
    Matrix<K> m(cfg.field(), basis.size(), cfg.size());
    for (std::size_t i = 0; i < cfg.size(); ++i) {
        auto v = veronese_eval(cfg[i], basis);
        for (std::size_t k = 0; k < v.size(); ++k) m(k, i) = std::move(v[k]);
    }
    return m;
}

template <class K>
std::vector<typename K::Element> gradient_eval_raw(const HypersurfaceForm<K>& f,
                                                   std::span<const typename K::Element> x) {
    const MonomialBasis& basis = f.basis();
    if (x.size() != basis.r + 1) throw PreconditionError("gradient_eval: ambient dimensions differ");
    const K& field = f.field();
    auto powers = power_table(field, x, basis.d);
    std::vector<typename K::Element> grad(x.size(), field.zero());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto& a = f.coeffs()[i];
        if (is_zero(a)) continue;
        const auto& e = basis.exponents[i];
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0) continue;
            typename K::Element term = a * field.from_int(e[j]);
            for (std::size_t l = 0; l < e.size(); ++l) {
                const unsigned power = l == j ? e[l] - 1 : e[l];
                if (power) term *= powers[l][power];
            }
            grad[j] += term;
        }
    }
    return grad;
}

template <class K>
PointConfig<K> transform(const Matrix<K>& g, const PointConfig<K>& cfg) {
    if (g.rows() != cfg.r() + 1 || g.cols() != cfg.r() + 1) throw PreconditionError("transform: shape mismatch");
    std::vector<ProjPoint<K>> pts;
    pts.reserve(cfg.size());
    for (const auto& p : cfg.points()) pts.emplace_back(cfg.field(), g.apply(p.coords()));
    return PointConfig<K>(cfg.field(), cfg.r(), std::move(pts));
}

template <class K>
PointConfig<K> permute(const PointConfig<K>& cfg, std::span<const std::size_t> order) {
    if (order.size() != cfg.size()) throw PreconditionError("permute: wrong permutation length");
    std::vector<ProjPoint<K>> pts;
    pts.reserve(cfg.size());
    for (auto i : order) pts.push_back(cfg[i]);
    return PointConfig<K>(cfg.field(), cfg.r(), std::move(pts));
}

#define VLAB_INSTANTIATE(K)                                                                                  \
    template class ProjPoint<K>;                                                                             \
    template class PointConfig<K>;                                                                           \
    template class HypersurfaceForm<K>;                                                                      \
    template std::vector<K::Element> veronese_eval_raw(const K&, std::span<const K::Element>,                \
                                                       const MonomialBasis&);                                \
    template Matrix<K> multi_veronese(const PointConfig<K>&, std::size_t, std::uint64_t);                    \
    template std::vector<K::Element> gradient_eval_raw(const HypersurfaceForm<K>&, std::span<const K::Element>); \
    template PointConfig<K> transform(const Matrix<K>&, const PointConfig<K>&);                              \
    template PointConfig<K> permute(const PointConfig<K>&, std::span<const std::size_t>);

VLAB_INSTANTIATE(RationalField)
VLAB_INSTANTIATE(PrimeField)

#undef VLAB_INSTANTIATE

} // namespace vlab
