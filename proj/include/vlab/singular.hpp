#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vlab/linalg.hpp"
#include "vlab/variety.hpp"

namespace vlab {

// The marked points lying in the singular locus of a hypersurface.
template <class K>
struct SingularSupport {
    std::vector<std::size_t> indices;
    std::vector<ProjPoint<K>> distinct_points;
    bool has_duplicates = false;
};

enum class Verdict { NotOnVariety, SmoothAmbient, Smooth, Singular };
enum class SingularReason { None, MultipleHypersurfaces, CoincidentSingularPoints, NotDNormal };

// Sufficient criteria evaluated alongside the exact decision. The first two
// certify a singular configuration, the last four a smooth one.
enum class Criterion {
    TooManySingularPoints,   // |q| > b(r,d)
    SecantLine,              // q has a (d+2)-secant line
    SpanExcessAtMostD,       // |q| - dim<q> <= d
    AtMostDPlusOnePoints,    // |q| <= d + 1
    GeneralityBound,         // d >= ceil((|q| - dim<q> - 1) / t(q)) + 1, char 0
    LinearGeneralPosition,   // q linearly general in <q>, d >= ceil((|q| - 1) / dim<q>), char 0
};

std::string_view to_string(Verdict v);
std::string_view to_string(SingularReason r);
std::string_view to_string(Criterion c);
bool certifies_singular(Criterion c);

struct SecantResult {
    std::size_t count = 0;
    std::pair<std::size_t, std::size_t> witness{0, 1};
};

struct Generality {
    std::size_t k = 0;
    // The true value may exceed k; only k-generality was confirmed.
    bool capped = false;
};

inline constexpr std::size_t kDefaultGeneralityCap = 6;
inline constexpr std::size_t kDefaultSecantCap = 200;

struct ClassifyOptions {
    std::size_t generality_cap = kDefaultGeneralityCap;
    std::uint64_t minor_cap = kDefaultMinorCap;
};

template <class K>
struct ClassificationReport {
    MembershipVerdict membership;
    std::size_t m = 0;
    Verdict verdict = Verdict::NotOnVariety;
    SingularReason reason = SingularReason::None;
    std::optional<HypersurfaceForm<K>> form;
    SingularSupport<K> q;
    std::optional<std::size_t> regularity_of_q;
    std::optional<SecantResult> max_secant_of_q;
    std::optional<Generality> generality_of_q;
    std::optional<std::size_t> span_dim_of_q;
    std::vector<Criterion> fired;
    std::vector<std::string> char_warnings;
};

// Throws PreconditionError if some point is not on V(f).
template <class K>
SingularSupport<K> singular_support(const HypersurfaceForm<K>& f, const PointConfig<K>& cfg);

// Projective dimension of the span of the points; -1 for the empty set.
template <class K>
long span_dimension(const std::vector<ProjPoint<K>>& pts);

// Whether distinct points impose independent conditions on degree-d forms.
// Empty set: true. d = 0: at most one point. Duplicates throw PreconditionError.
template <class K>
bool is_d_normal(const std::vector<ProjPoint<K>>& pts, std::size_t d);

// 1 + least d with is_d_normal(pts, d); 0 for the empty set. The search stops at
// d = |pts| - dim<pts>, where normality is guaranteed.
template <class K>
std::size_t regularity_of_points(const std::vector<ProjPoint<K>>& pts);

// Largest number of points on a line spanned by two of them.
template <class K>
SecantResult max_secant(const std::vector<ProjPoint<K>>& pts, std::size_t cap = kDefaultSecantCap);

// Largest k <= cap with every (k+1)-subset linearly independent.
template <class K>
Generality k_generality(const std::vector<ProjPoint<K>>& pts, std::size_t cap = kDefaultGeneralityCap,
                        std::uint64_t subset_cap = kDefaultMinorCap);

// Decides whether cfg is a smooth point of the variety of n-tuples on a degree-d
// hypersurface:
//   n < b                      -> SmoothAmbient
//   no hypersurface            -> NotOnVariety
//   two or more hypersurfaces  -> Singular(MultipleHypersurfaces)
//   unique F, q = p on Sing(F) -> Singular(CoincidentSingularPoints) if q repeats,
//                                 otherwise Smooth iff q is d-normal.
template <class K>
ClassificationReport<K> classify(const PointConfig<K>& cfg, std::size_t d, const ClassifyOptions& options = {});

struct SpecializedVerdict {
    Verdict verdict = Verdict::NotOnVariety;
    SingularReason reason = SingularReason::None;
    std::size_t m = 0;
    // Quadric classifier only: rank of the symmetric matrix of the unique quadric.
    std::optional<std::size_t> quadric_rank;
    // Quadric classifier only: marked points on the singular locus (vertex or line).
    std::optional<std::size_t> points_on_singular_locus;
    // Rank-1 quadric with a unique hypersurface cannot occur; flagged rather than judged.
    bool inconsistent = false;
};

// Plane curves in characteristic 0: smooth iff the curve is unique and the marked
// singular points are distinct. Throws PreconditionError outside r = 2, char 0.
template <class K>
SpecializedVerdict classify_plane(const PointConfig<K>& cfg, std::size_t d);

// Quadric surfaces in P^3, characteristic != 2, by the rank of the quadric:
// 4 smooth; 3 (cone) smooth iff the vertex is marked at most once; 2 (plane pair)
// smooth iff at most three distinct marked points lie on the double line.
template <class K>
SpecializedVerdict classify_quadric_p3(const PointConfig<K>& cfg);

} // namespace vlab
