#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vlab/veronese.hpp"

namespace vlab {

// Outcome of the rank test for "n points on m independent degree-d hypersurfaces".
// For m >= 2 this is set-theoretic membership only; no scheme structure is implied.
struct MembershipVerdict {
    bool member = false;
    std::size_t rank = 0;
    std::size_t kernel_dim = 0;
    std::size_t m_requested = 0;
    std::size_t basis_size = 0;
    bool trivially_member = false;
};

// Basis of all degree-d forms through a configuration.
template <class K>
struct LinearSystem {
    std::size_t d = 0;
    std::vector<HypersurfaceForm<K>> forms;

    std::size_t m() const { return forms.size(); }
};

// Requires 1 <= m < b(r,d); m >= b(r,d) throws PreconditionError ("empty variety").
template <class K>
MembershipVerdict membership(const PointConfig<K>& cfg, std::size_t d, std::size_t m);

// On P^1 a tuple lies on a degree-d form iff it has at most d distinct points.
template <class K>
bool membership_p1_oracle(const PointConfig<K>& cfg, std::size_t d);

template <class K>
LinearSystem<K> hypersurface_system(const PointConfig<K>& cfg, std::size_t d);

// Recovers the unique hypersurface through cfg from one invertible maximal
// block of the multi-Veronese matrix instead of a kernel computation.
//
// J is the lexicographically first set of b-1 independent columns (points),
// K the first row (monomial) whose removal leaves M[rows != K, J] invertible.
// Setting a_K = 1, the remaining coefficients solve
//     A_{!K} * M[rows != K, J] = -M[K, J].
// Throws PreconditionError("hypersurface not unique") unless exactly one form exists.
template <class K>
HypersurfaceForm<K> recover_coefficients_local(const PointConfig<K>& cfg, std::size_t d);

// n x (b + (r+1) n) Jacobian of the incidence variety {(F, p) : F(p_i) = 0}:
// row i is (v(p_i) | 0 .. grad F(p_i) .. 0) with the gradient in block i.
template <class K>
Matrix<K> incidence_jacobian(const HypersurfaceForm<K>& f, const PointConfig<K>& cfg);

// n r when n < b(r,d), else b(r,d) - 1 + n (r - 1).
std::uint64_t expected_dimension(std::size_t r, std::size_t d, std::size_t n);

template <class K>
struct LineRestriction {
    bool identically_zero = false;
    // Degree of the binary form F(s a + t b); equals deg F unless identically zero.
    std::size_t degree = 0;
    // Coefficient of s^(deg-k) t^k at index k.
    std::vector<typename K::Element> coefficients;
    // No repeated root over the algebraic closure: the line meets V(F) in deg F distinct points.
    bool squarefree = false;
};

template <class K>
LineRestriction<K> line_restriction(const HypersurfaceForm<K>& f, const ProjPoint<K>& a, const ProjPoint<K>& b);

struct MultidegreeReport {
    std::size_t r = 0;
    std::size_t d = 0;
    std::size_t n = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::uint64_t modulus = 0;
    std::size_t lines_per_trial = 0;
    std::size_t passes = 0;
    std::size_t failures = 0;
    std::size_t resamples = 0;
    std::size_t squarefree_lines = 0;
    std::size_t total_lines = 0;
    // d^(n - b + 1) in decimal.
    std::string expected_value;
};

inline constexpr std::size_t kDefaultResampleBound = 20;

// Samples b-1 random points (resampling until the hypersurface through them is
// unique) and n-b+1 random lines per trial; a trial passes when every line
// restriction has degree exactly d. Trial t draws from a generator seeded with
// (seed, t), so trials are independent of each other and of scheduling.
// Throws PreconditionError when p < 100 d n or when resampling is exhausted.
MultidegreeReport multidegree_check(const PrimeField& field, std::size_t r, std::size_t d, std::size_t n,
                                    std::size_t trials, std::uint64_t seed,
                                    std::size_t resample_bound = kDefaultResampleBound);

} // namespace vlab
