#include "vlab/io.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace vlab {

namespace {

std::size_t read_nat(const json& doc, const char* key) {
    const json& v = doc.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0)
        throw InputError(std::string(key) + ": expected a nonnegative integer");
    return v.get<std::size_t>();
}

template <class T>
std::optional<T> optional_nat(const json& doc, const char* key) {
    if (!doc.contains(key) || doc.at(key).is_null()) return std::nullopt;
    return static_cast<T>(read_nat(doc, key));
}

std::string coordinate_text(const json& v, std::size_t i, std::size_t j) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_number_float()) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
        return buf;
    }
    throw InputError("points[" + std::to_string(i) + "][" + std::to_string(j) + "]: expected a string or number");
}

json monomial_terms(const MonomialBasis& basis, const std::vector<std::string>& coeffs) {
    json terms = json::array();
    for (std::size_t k = 0; k < basis.size(); ++k) terms.push_back({{"monomial", basis.exponents[k]}, {"coeff", coeffs[k]}});
    return terms;
}

json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

} // namespace

ConfigFile parse_config(const json& doc) {
    if (!doc.is_object()) throw InputError("config: expected a JSON object");
    ConfigFile cfg;
    if (!doc.contains("r")) throw InputError("r: missing");
    cfg.r = read_nat(doc, "r");
    if (cfg.r < 1) throw InputError("r: must be at least 1");

    if (doc.contains("field")) {
        if (!doc.at("field").is_string()) throw InputError("field: expected a string");
        cfg.field = FieldSpec::parse(doc.at("field").get<std::string>());
    }
    if (doc.contains("homogenize")) {
        if (!doc.at("homogenize").is_boolean()) throw InputError("homogenize: expected a boolean");
        cfg.homogenize = doc.at("homogenize").get<bool>();
        if (cfg.homogenize && cfg.field.exact()) throw InputError("homogenize: only valid with field \"float\"");
    }

    const std::size_t width = cfg.homogenize ? cfg.r : cfg.r + 1;
    if (doc.contains("points")) {
        const json& pts = doc.at("points");
        if (!pts.is_array()) throw InputError("points: expected an array of coordinate rows");
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const json& row = pts[i];
            if (!row.is_array()) throw InputError("points[" + std::to_string(i) + "]: expected an array");
            if (row.size() != width)
                throw InputError("points[" + std::to_string(i) + "]: expected " + std::to_string(width) +
                                 " coordinates, got " + std::to_string(row.size()));
            std::vector<std::string> coords;
            for (std::size_t j = 0; j < row.size(); ++j) coords.push_back(coordinate_text(row[j], i, j));
            cfg.points.push_back(std::move(coords));
        }
    }

    cfg.d = optional_nat<std::size_t>(doc, "d");
    cfg.m = optional_nat<std::size_t>(doc, "m");
    cfg.d_max = optional_nat<std::size_t>(doc, "d_max");
    cfg.trials = optional_nat<std::size_t>(doc, "trials");
    cfg.n = optional_nat<std::size_t>(doc, "n");
    cfg.seed = optional_nat<std::uint64_t>(doc, "seed");
    if (doc.contains("eps") && !doc.at("eps").is_null()) {
        if (!doc.at("eps").is_number()) throw InputError("eps: expected a number");
        cfg.eps = doc.at("eps").get<double>();
    }
    return cfg;
}

template <class K>
PointConfig<K> exact_points(const ConfigFile& cfg, const K& field) {
    std::vector<ProjPoint<K>> pts;
    pts.reserve(cfg.points.size());
    for (std::size_t i = 0; i < cfg.points.size(); ++i) {
        std::vector<typename K::Element> coords;
        for (std::size_t j = 0; j < cfg.points[i].size(); ++j) {
            try {
                coords.push_back(field.parse(cfg.points[i][j]));
            } catch (const InputError& e) {
                throw InputError("points[" + std::to_string(i) + "][" + std::to_string(j) + "]: " + e.what());
            }
        }
        try {
            pts.emplace_back(field, std::move(coords));
        } catch (const InputError& e) {
            throw InputError("points[" + std::to_string(i) + "]: " + e.what());
        }
    }
    return PointConfig<K>(field, cfg.r, std::move(pts));
}

FloatCloud float_cloud(const ConfigFile& cfg) {
    if (cfg.points.empty()) throw InputError("points: cloud is empty");
    const std::size_t width = cfg.points.front().size();
    Eigen::MatrixXd rows(cfg.points.size(), width);
    for (std::size_t i = 0; i < cfg.points.size(); ++i) {
        for (std::size_t j = 0; j < width; ++j) {
            const std::string& s = cfg.points[i][j];
            std::size_t used = 0;
            double x = 0.0;
            try {
                x = std::stod(s, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != s.size() || s.empty()) {
                try {
                    x = RationalField().parse(s).get_d();
                } catch (const InputError&) {
                    throw InputError("points[" + std::to_string(i) + "][" + std::to_string(j) +
                                     "]: not a decimal literal: '" + s + "'");
                }
            }
            rows(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = x;
        }
    }
    return FloatCloud(std::move(rows), cfg.homogenize);
}

template <class K>
json to_json(const ProjPoint<K>& p) {
    json out = json::array();
    for (const auto& x : p.coords()) out.push_back(p.field().format(x));
    return out;
}

template <class K>
json to_json(const PointConfig<K>& cfg) {
    json pts = json::array();
    for (const auto& p : cfg.points()) pts.push_back(to_json(p));
    return {{"r", cfg.r()}, {"field", cfg.field().name()}, {"points", pts}};
}

template <class K>
json to_json(const HypersurfaceForm<K>& f) {
    std::vector<std::string> coeffs;
    for (const auto& c : f.coeffs()) coeffs.push_back(f.field().format(c));
    return {{"r", f.ambient_dim()}, {"degree", f.degree()}, {"terms", monomial_terms(f.basis(), coeffs)}};
}

json to_json(const MembershipVerdict& v) {
    return {{"member", v.member},
            {"rank", v.rank},
            {"kernel_dim", v.kernel_dim},
            {"m_requested", v.m_requested},
            {"basis_size", v.basis_size},
            {"trivially_member", v.trivially_member}};
}

template <class K>
json to_json(const ClassificationReport<K>& report) {
    json out;
    out["membership"] = to_json(report.membership);
    out["m"] = report.m;
    out["verdict"] = std::string(to_string(report.verdict));
    out["reason"] = report.reason == SingularReason::None ? json(nullptr) : json(std::string(to_string(report.reason)));
    out["form"] = report.form ? to_json(*report.form) : json(nullptr);

    json q;
    q["indices"] = report.q.indices;
    json distinct = json::array();
    for (const auto& p : report.q.distinct_points) distinct.push_back(to_json(p));
    q["distinct_points"] = distinct;
    q["has_duplicates"] = report.q.has_duplicates;
    out["q"] = q;

    out["regularity_of_q"] = report.regularity_of_q ? json(*report.regularity_of_q) : json("not computed");
    out["span_dim_of_q"] = report.span_dim_of_q ? json(*report.span_dim_of_q) : json(nullptr);
    if (report.max_secant_of_q)
        out["max_secant_of_q"] = {{"count", report.max_secant_of_q->count},
                                  {"witness", {report.max_secant_of_q->witness.first, report.max_secant_of_q->witness.second}}};
    else
        out["max_secant_of_q"] = nullptr;
    if (report.generality_of_q)
        out["t_generality_of_q"] = report.generality_of_q->capped ? json("capped") : json(report.generality_of_q->k);
    else
        out["t_generality_of_q"] = nullptr;

    json fired = json::array();
    for (auto c : report.fired) fired.push_back(std::string(to_string(c)));
    out["sufficient_conditions_fired"] = fired;
    out["char_warnings"] = report.char_warnings;
    return out;
}

json to_json(const SpecializedVerdict& v) {
    json out;
    out["verdict"] = std::string(to_string(v.verdict));
    out["reason"] = v.reason == SingularReason::None ? json(nullptr) : json(std::string(to_string(v.reason)));
    out["m"] = v.m;
    if (v.quadric_rank) out["quadric_rank"] = *v.quadric_rank;
    if (v.points_on_singular_locus) out["points_on_singular_locus"] = *v.points_on_singular_locus;
    if (v.inconsistent) out["inconsistent_input"] = true;
    return out;
}

json to_json(const MultidegreeReport& r) {
    return {{"r", r.r},
            {"d", r.d},
            {"n", r.n},
            {"trials", r.trials},
            {"seed", r.seed},
            {"field", "fp:" + std::to_string(r.modulus)},
            {"lines_per_trial", r.lines_per_trial},
            {"passes", r.passes},
            {"failures", r.failures},
            {"resamples", r.resamples},
            {"total_lines", r.total_lines},
            {"squarefree_lines", r.squarefree_lines},
            {"expected_value", r.expected_value}};
}

json to_json(const FitResult& fit, const MonomialBasis& basis) {
    json terms = json::array();
    for (std::size_t k = 0; k < basis.size(); ++k)
        terms.push_back({{"monomial", basis.exponents[k]}, {"coeff", fit.coeffs[k]}});
    return {{"d", fit.d},
            {"terms", terms},
            {"residual", fit.residual},
            {"per_point", fit.per_point},
            {"sigma_max", fit.sigma_max},
            {"condition", finite_or_null(fit.condition)},
            {"underdetermined", fit.underdetermined}};
}

std::string input_digest(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

#define VLAB_INSTANTIATE(K)                                                                                  \
    template PointConfig<K> exact_points(const ConfigFile&, const K&);                                       \
    template json to_json(const ProjPoint<K>&);                                                              \
    template json to_json(const PointConfig<K>&);                                                            \
    template json to_json(const HypersurfaceForm<K>&);                                                       \
    template json to_json(const ClassificationReport<K>&);

VLAB_INSTANTIATE(RationalField)
VLAB_INSTANTIATE(PrimeField)

#undef VLAB_INSTANTIATE

} // namespace vlab
