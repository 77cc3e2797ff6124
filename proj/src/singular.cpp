#include "vlab/singular.hpp"

#include <numeric>

namespace vlab {

namespace {

template <class K>
Matrix<K> coordinate_matrix(const std::vector<ProjPoint<K>>& pts) {
    const std::size_t width = pts.front().ambient_dim() + 1;
    Matrix<K> m(pts.front().field(), pts.size(), width);
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < width; ++j) m(i, j) = pts[i][j];
    return m;
}

template <class K>
std::size_t rank_of(const std::vector<const ProjPoint<K>*>& pts) {
    const std::size_t width = pts.front()->ambient_dim() + 1;
    Matrix<K> m(pts.front()->field(), pts.size(), width);
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < width; ++j) m(i, j) = (*pts[i])[j];
    return rank(m);
}

template <class K>
void require_distinct(const std::vector<ProjPoint<K>>& pts, std::string_view op) {
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] == pts[j])
                throw PreconditionError(std::string(op) + ": points " + std::to_string(i) + " and " +
                                        std::to_string(j) + " coincide; distinct points required");
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

} // namespace

std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::NotOnVariety: return "NotOnVariety";
    case Verdict::SmoothAmbient: return "SmoothAmbient";
    case Verdict::Smooth: return "Smooth";
    case Verdict::Singular: return "Singular";
    }
    return "?";
}

std::string_view to_string(SingularReason r) {
    switch (r) {
    case SingularReason::None: return "None";
    case SingularReason::MultipleHypersurfaces: return "MultipleHypersurfaces";
    case SingularReason::CoincidentSingularPoints: return "CoincidentSingularPoints";
    case SingularReason::NotDNormal: return "NotDNormal";
    }
    return "?";
}

std::string_view to_string(Criterion c) {
    switch (c) {
    case Criterion::TooManySingularPoints: return "too_many_singular_points";
    case Criterion::SecantLine: return "secant_line_d_plus_2";
    case Criterion::SpanExcessAtMostD: return "span_excess_at_most_d";
    case Criterion::AtMostDPlusOnePoints: return "at_most_d_plus_1_points";
    case Criterion::GeneralityBound: return "generality_bound";
    case Criterion::LinearGeneralPosition: return "linear_general_position_bound";
    }
    return "?";
}

bool certifies_singular(Criterion c) {
    return c == Criterion::TooManySingularPoints || c == Criterion::SecantLine;
}

template <class K>
SingularSupport<K> singular_support(const HypersurfaceForm<K>& f, const PointConfig<K>& cfg) {
    SingularSupport<K> q;
    for (std::size_t i = 0; i < cfg.size(); ++i) {
        if (!is_zero(f(cfg[i])))
            throw PreconditionError("point not on hypersurface: points[" + std::to_string(i) + "]");
        auto grad = gradient_eval(f, cfg[i]);
        bool singular = true;
        for (const auto& g : grad) singular = singular && is_zero(g);
        if (!singular) continue;
        q.indices.push_back(i);
        bool seen = false;
        for (const auto& p : q.distinct_points) seen = seen || p == cfg[i];
        if (!seen) q.distinct_points.push_back(cfg[i]);
    }
    q.has_duplicates = q.indices.size() > q.distinct_points.size();
    return q;
}

template <class K>
long span_dimension(const std::vector<ProjPoint<K>>& pts) {
    if (pts.empty()) return -1;
    return static_cast<long>(rank(coordinate_matrix(pts))) - 1;
}

template <class K>
bool is_d_normal(const std::vector<ProjPoint<K>>& pts, std::size_t d) {
    require_distinct(pts, "is_d_normal");
    if (pts.empty()) return true;
    if (d == 0) return pts.size() <= 1;
    const std::size_t r = pts.front().ambient_dim();
    if (pts.size() > basis_size(r, d)) return false;
    PointConfig<K> cfg(pts.front().field(), r, pts);
    return rank(multi_veronese(cfg, d)) == pts.size();
}

template <class K>
std::size_t regularity_of_points(const std::vector<ProjPoint<K>>& pts) {
    require_distinct(pts, "regularity_of_points");
    if (pts.empty()) return 0;
    const std::size_t bound = pts.size() - static_cast<std::size_t>(span_dimension(pts));
    for (std::size_t d = 0; d <= bound; ++d)
        if (is_d_normal(pts, d)) return d + 1;
    throw Error("regularity_of_points: points are not " + std::to_string(bound) + "-normal");
}

template <class K>
SecantResult max_secant(const std::vector<ProjPoint<K>>& pts, std::size_t cap) {
    if (pts.size() < 2) throw PreconditionError("max_secant: needs at least two points");
    if (pts.size() > cap)
        throw CapError("max_secant: " + std::to_string(pts.size()) + " points exceed cap " + std::to_string(cap));
    require_distinct(pts, "max_secant");
    SecantResult best{2, {0, 1}};
    std::vector<bool> counted(pts.size() * pts.size(), false);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (counted[i * pts.size() + j]) continue;
            std::vector<std::size_t> on_line{i, j};
            for (std::size_t k = j + 1; k < pts.size(); ++k)
                if (rank_of<K>({&pts[i], &pts[j], &pts[k]}) == 2) on_line.push_back(k);
            for (auto a : on_line)
                for (auto b : on_line)
                    if (a < b) counted[a * pts.size() + b] = true;
            if (on_line.size() > best.count) best = {on_line.size(), {i, j}};
        }
    }
    return best;
}

template <class K>
Generality k_generality(const std::vector<ProjPoint<K>>& pts, std::size_t cap, std::uint64_t subset_cap) {
    if (pts.size() < 2) throw PreconditionError("k_generality: needs at least two points");
    require_distinct(pts, "k_generality");
    // Distinct points are always 1-general; k cannot exceed the span dimension.
    const std::size_t ceiling = static_cast<std::size_t>(span_dimension(pts));
    Generality g{1, false};
    for (std::size_t k = 2; k <= ceiling; ++k) {
        if (k > cap) return {g.k, true};
        if (binomial(pts.size(), k + 1) > subset_cap)
            throw CapError("cap-kgen: C(" + std::to_string(pts.size()) + "," + std::to_string(k + 1) +
                           ") subsets exceed cap " + std::to_string(subset_cap));
        std::vector<std::size_t> idx(k + 1);
        std::iota(idx.begin(), idx.end(), 0);
        bool general = true;
        for (;;) {
            std::vector<const ProjPoint<K>*> subset;
            for (auto i : idx) subset.push_back(&pts[i]);
            if (rank_of<K>(subset) < k + 1) {
                general = false;
                break;
            }
            std::size_t pos = idx.size();
            while (pos-- > 0 && idx[pos] == pts.size() - idx.size() + pos) {
            }
            if (pos == static_cast<std::size_t>(-1)) break;
            ++idx[pos];
            for (std::size_t t = pos + 1; t < idx.size(); ++t) idx[t] = idx[t - 1] + 1;
        }
        if (!general) return g;
        g.k = k;
    }
    return g;
}

template <class K>
ClassificationReport<K> classify(const PointConfig<K>& cfg, std::size_t d, const ClassifyOptions& options) {
    ClassificationReport<K> report;
    const std::size_t b = basis_size(cfg.r(), d);
    report.membership = membership(cfg, d, 1);
    report.m = report.membership.kernel_dim;

    if (cfg.size() < b) {
        report.verdict = Verdict::SmoothAmbient;
        return report;
    }
    if (report.m == 0) {
        report.verdict = Verdict::NotOnVariety;
        return report;
    }
    if (report.m >= 2) {
        report.verdict = Verdict::Singular;
        report.reason = SingularReason::MultipleHypersurfaces;
        return report;
    }

    auto system = hypersurface_system(cfg, d);
    report.form = system.forms.front();
    report.q = singular_support(*report.form, cfg);
    const auto& z = report.q.distinct_points;
    const bool zero_char = cfg.field().characteristic() == 0;

    if (report.q.indices.size() > b) report.fired.push_back(Criterion::TooManySingularPoints);
    if (z.size() >= 2) {
        report.max_secant_of_q = max_secant(z, std::max(kDefaultSecantCap, z.size()));
        if (report.max_secant_of_q->count >= d + 2) report.fired.push_back(Criterion::SecantLine);
    }

    if (report.q.has_duplicates) {
        report.verdict = Verdict::Singular;
        report.reason = SingularReason::CoincidentSingularPoints;
        return report;
    }

    const long span = span_dimension(z);
    if (!z.empty()) report.span_dim_of_q = static_cast<std::size_t>(span);
    report.regularity_of_q = regularity_of_points(z);

    const bool normal = is_d_normal(z, d);
    report.verdict = normal ? Verdict::Smooth : Verdict::Singular;
    report.reason = normal ? SingularReason::None : SingularReason::NotDNormal;

    // |q| - dim<q>, with dim<empty> = -1.
    const std::size_t excess = static_cast<std::size_t>(static_cast<long>(z.size()) - span);
    if (excess <= d) report.fired.push_back(Criterion::SpanExcessAtMostD);
    if (z.size() <= d + 1) report.fired.push_back(Criterion::AtMostDPlusOnePoints);

    if (z.size() >= 2) {
        report.generality_of_q = k_generality(z, options.generality_cap, options.minor_cap);
        if (zero_char) {
            const std::size_t t = report.generality_of_q->k;
            // A capped t is a lower bound for the true value, which only weakens the bound.
            if (d >= ceil_div(excess - 1, t) + 1) report.fired.push_back(Criterion::GeneralityBound);
            const std::size_t dim = static_cast<std::size_t>(span);
            const bool linearly_general = !report.generality_of_q->capped && t == dim;
            if (linearly_general && d >= ceil_div(z.size() - 1, dim))
                report.fired.push_back(Criterion::LinearGeneralPosition);
        } else {
            report.char_warnings.push_back("generality_bound and linear_general_position_bound skipped: they "
                                           "require characteristic 0 (field has characteristic " +
                                           std::to_string(cfg.field().characteristic()) + ")");
        }
    }
    return report;
}

template <class K>
SpecializedVerdict classify_plane(const PointConfig<K>& cfg, std::size_t d) {
    if (cfg.r() != 2) throw PreconditionError("classify_plane: requires points of P^2");
    if (cfg.field().characteristic() != 0) throw PreconditionError("classify_plane: requires characteristic 0");

    SpecializedVerdict out;
    const std::size_t b = basis_size(2, d);
    out.m = b - rank(multi_veronese(cfg, d));
    if (cfg.size() < b) {
        out.verdict = Verdict::SmoothAmbient;
    } else if (out.m == 0) {
        out.verdict = Verdict::NotOnVariety;
    } else if (out.m >= 2) {
        out.verdict = Verdict::Singular;
        out.reason = SingularReason::MultipleHypersurfaces;
    } else {
        auto curve = hypersurface_system(cfg, d).forms.front();
        auto q = singular_support(curve, cfg);
        out.points_on_singular_locus = q.indices.size();
        out.verdict = q.has_duplicates ? Verdict::Singular : Verdict::Smooth;
        if (q.has_duplicates) out.reason = SingularReason::CoincidentSingularPoints;
    }
    return out;
}

template <class K>
SpecializedVerdict classify_quadric_p3(const PointConfig<K>& cfg) {
    using E = typename K::Element;
    if (cfg.r() != 3) throw PreconditionError("classify_quadric_p3: requires points of P^3");
    if (cfg.field().characteristic() == 2) throw PreconditionError("classify_quadric_p3: requires characteristic other than 2");
    const K& field = cfg.field();

    SpecializedVerdict out;
    const std::size_t b = basis_size(3, 2);
    out.m = b - rank(multi_veronese(cfg, 2));
    if (cfg.size() < b) {
        out.verdict = Verdict::SmoothAmbient;
        return out;
    }
    if (out.m == 0) {
        out.verdict = Verdict::NotOnVariety;
        return out;
    }
    if (out.m >= 2) {
        out.verdict = Verdict::Singular;
        out.reason = SingularReason::MultipleHypersurfaces;
        return out;
    }

    // Symmetric matrix: diagonal from x_i^2, off-diagonal half the x_i x_j coefficient.
    auto quadric = hypersurface_system(cfg, 2).forms.front();
    Matrix<K> sym(field, 4, 4);
    const E half = field.one() / field.from_int(2);
    const auto& exps = quadric.basis().exponents;
    for (std::size_t k = 0; k < exps.size(); ++k) {
        std::vector<std::size_t> vars;
        for (std::size_t j = 0; j < 4; ++j)
            for (unsigned e = 0; e < exps[k][j]; ++e) vars.push_back(j);
        const E& c = quadric.coeffs()[k];
        if (vars[0] == vars[1]) {
            sym(vars[0], vars[0]) = c;
        } else {
            sym(vars[0], vars[1]) = c * half;
            sym(vars[1], vars[0]) = c * half;
        }
    }
    const std::size_t rho = rank(sym);
    out.quadric_rank = rho;

    // Singular locus of V(Q) is the projectivized kernel of the symmetric matrix.
    std::vector<ProjPoint<K>> on_locus;
    for (const auto& p : cfg.points()) {
        bool in_kernel = true;
        for (const auto& x : sym.apply(p.coords())) in_kernel = in_kernel && is_zero(x);
        if (in_kernel) on_locus.push_back(p);
    }
    out.points_on_singular_locus = on_locus.size();
    bool repeated = false;
    for (std::size_t i = 0; i < on_locus.size(); ++i)
        for (std::size_t j = i + 1; j < on_locus.size(); ++j) repeated = repeated || on_locus[i] == on_locus[j];

    switch (rho) {
    case 4:
        out.verdict = Verdict::Smooth;
        break;
    case 3:
        out.verdict = on_locus.size() <= 1 ? Verdict::Smooth : Verdict::Singular;
        if (on_locus.size() > 1) out.reason = SingularReason::CoincidentSingularPoints;
        break;
    case 2:
        if (repeated) {
            out.verdict = Verdict::Singular;
            out.reason = SingularReason::CoincidentSingularPoints;
        } else if (on_locus.size() > 3) {
            out.verdict = Verdict::Singular;
            out.reason = SingularReason::NotDNormal;
        } else {
            out.verdict = Verdict::Smooth;
        }
        break;
    default:
        out.verdict = Verdict::Singular;
        out.inconsistent = true;
        break;
    }
    return out;
}

#define VLAB_INSTANTIATE(K)                                                                                  \
    template SingularSupport<K> singular_support(const HypersurfaceForm<K>&, const PointConfig<K>&);         \
    template long span_dimension(const std::vector<ProjPoint<K>>&);                                          \
    template bool is_d_normal(const std::vector<ProjPoint<K>>&, std::size_t);                                \
    template std::size_t regularity_of_points(const std::vector<ProjPoint<K>>&);                             \
    template SecantResult max_secant(const std::vector<ProjPoint<K>>&, std::size_t);                         \
    template Generality k_generality(const std::vector<ProjPoint<K>>&, std::size_t, std::uint64_t);          \
    template ClassificationReport<K> classify(const PointConfig<K>&, std::size_t, const ClassifyOptions&);   \
    template SpecializedVerdict classify_plane(const PointConfig<K>&, std::size_t);                          \
    template SpecializedVerdict classify_quadric_p3(const PointConfig<K>&);

VLAB_INSTANTIATE(RationalField)
VLAB_INSTANTIATE(PrimeField)

#undef VLAB_INSTANTIATE

} // namespace vlab
