#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "vlab/matrix.hpp"

namespace vlab {

inline constexpr std::uint64_t kDefaultBasisCap = 100'000;

// Degree-d monomials in x0..xr, graded-lexicographic with x0 > x1 > ... > xr:
// x0^d comes first and xr^d last. This order is part of the file format.
struct MonomialBasis {
    std::size_t r = 0;
    std::size_t d = 0;
    std::vector<std::vector<unsigned>> exponents;

    std::size_t size() const { return exponents.size(); }
    friend bool operator==(const MonomialBasis&, const MonomialBasis&) = default;
};

// b(r, d) = C(r + d, d), saturating.
std::uint64_t basis_size(std::size_t r, std::size_t d);

// Requires r >= 1 and d >= 1. Throws CapError when b(r, d) exceeds cap.
MonomialBasis monomial_basis(std::size_t r, std::size_t d, std::uint64_t cap = kDefaultBasisCap);

// A point of P^r stored by its canonical representative (first nonzero coordinate 1).
template <class K>
class ProjPoint {
public:
    using Element = typename K::Element;

    ProjPoint(K field, std::vector<Element> coords);

    const K& field() const { return field_; }
    std::size_t ambient_dim() const { return coords_.size() - 1; }
    std::span<const Element> coords() const { return coords_; }
    const Element& operator[](std::size_t i) const { return coords_[i]; }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.coords_ == b.coords_; }

private:
    K field_;
    std::vector<Element> coords_;
};

// An ordered n-tuple of points of P^r over one field; repeated points are allowed.
template <class K>
class PointConfig {
public:
    PointConfig(K field, std::size_t r, std::vector<ProjPoint<K>> points);

    const K& field() const { return field_; }
    std::size_t r() const { return r_; }
    std::size_t size() const { return points_.size(); }
    const std::vector<ProjPoint<K>>& points() const { return points_; }
    const ProjPoint<K>& operator[](std::size_t i) const { return points_[i]; }

private:
    K field_;
    std::size_t r_;
    std::vector<ProjPoint<K>> points_;
};

// F = sum_I a_I x^I with coefficients indexed by a MonomialBasis, scaled so the
// first nonzero coefficient is 1.
template <class K>
class HypersurfaceForm {
public:
    using Element = typename K::Element;

    HypersurfaceForm(K field, MonomialBasis basis, std::vector<Element> coeffs);

    const K& field() const { return field_; }
    const MonomialBasis& basis() const { return basis_; }
    std::size_t degree() const { return basis_.d; }
    std::size_t ambient_dim() const { return basis_.r; }
    std::span<const Element> coeffs() const { return coeffs_; }

    // Evaluates on an arbitrary (not necessarily canonical) coordinate vector.
    Element evaluate(std::span<const Element> x) const;
    Element operator()(const ProjPoint<K>& p) const { return evaluate(p.coords()); }

    friend bool operator==(const HypersurfaceForm& a, const HypersurfaceForm& b) {
        return a.basis_ == b.basis_ && a.coeffs_ == b.coeffs_;
    }

private:
    K field_;
    MonomialBasis basis_;
    std::vector<Element> coeffs_;
};

// (x^I)_I on a raw coordinate vector.
template <class K>
std::vector<typename K::Element> veronese_eval_raw(const K& field, std::span<const typename K::Element> x,
                                                   const MonomialBasis& basis);

template <class K>
std::vector<typename K::Element> veronese_eval(const ProjPoint<K>& p, const MonomialBasis& basis) {
    if (p.ambient_dim() != basis.r) throw PreconditionError("veronese_eval: ambient dimensions differ");
    return veronese_eval_raw(p.field(), p.coords(), basis);
}

// b(r,d) x n matrix whose i-th column is the degree-d Veronese image of point i.
template <class K>
Matrix<K> multi_veronese(const PointConfig<K>& cfg, std::size_t d, std::uint64_t cap = kDefaultBasisCap);

// Formal partial derivatives (dF/dx0, ..., dF/dxr) at a raw coordinate vector.
template <class K>
std::vector<typename K::Element> gradient_eval_raw(const HypersurfaceForm<K>& f,
                                                   std::span<const typename K::Element> x);

template <class K>
std::vector<typename K::Element> gradient_eval(const HypersurfaceForm<K>& f, const ProjPoint<K>& p) {
    if (p.ambient_dim() != f.ambient_dim()) throw PreconditionError("gradient_eval: ambient dimensions differ");
    return gradient_eval_raw(f, p.coords());
}

// Image of every point under x -> g x for an invertible (r+1) x (r+1) matrix g.
template <class K>
PointConfig<K> transform(const Matrix<K>& g, const PointConfig<K>& cfg);

// Points listed in `order` (a permutation of 0..n-1).
template <class K>
PointConfig<K> permute(const PointConfig<K>& cfg, std::span<const std::size_t> order);

} // namespace vlab
