#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vlab/matrix.hpp"

namespace vlab {

inline constexpr std::uint64_t kDefaultMinorCap = 1'000'000;

// Exact rank by fraction-free (Bareiss) elimination. Over Q each row is first
// cleared of denominators, so elimination runs entirely in Z.
template <class K>
std::size_t rank(const Matrix<K>& m);

// Pivot columns of the row echelon form, in increasing order.
template <class K>
std::vector<std::size_t> pivot_columns(const Matrix<K>& m);

// Basis of {v : m v = 0}. One vector per non-pivot column, in column order,
// each scaled so its first nonzero entry is 1.
template <class K>
std::vector<std::vector<typename K::Element>> kernel_basis(const Matrix<K>& m);

template <class K>
typename K::Element determinant(const Matrix<K>& m);

// Solves a x = b for square invertible a; nullopt when a is singular.
template <class K>
std::optional<std::vector<typename K::Element>> solve_square(const Matrix<K>& a,
                                                             const std::vector<typename K::Element>& b);

// Brute-force check that every t x t minor vanishes. Each minor is expanded by
// ordinary Gaussian elimination, independent of the Bareiss path used by rank().
// Throws CapError when C(rows,t) * C(cols,t) exceeds cap.
template <class K>
bool minors_vanish(const Matrix<K>& m, std::size_t t, std::uint64_t cap = kDefaultMinorCap);

// Binomial coefficient saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Scales v in place so that its first nonzero entry is 1. Returns false for the zero vector.
template <class Element>
bool normalize_leading_one(std::vector<Element>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!is_zero(v[i])) {
            Element lead = v[i];
            for (std::size_t j = i; j < v.size(); ++j) v[j] = v[j] / lead;
            return true;
        }
    }
    return false;
}

} // namespace vlab
