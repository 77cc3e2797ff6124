#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "vlab/fit.hpp"
#include "vlab/singular.hpp"

namespace vlab {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

// Parsed configuration file; coordinates stay textual until a field is chosen.
//
//   { "r": 2, "field": "rational" | "fp:<prime>" | "float",
//     "points": [["1", "0", "-3/2"], ...],
//     "homogenize": false, "d": 2, "m": 1, "d_max": 3, "eps": 1e-8,
//     "seed": 42, "trials": 100, "n": 6 }
struct ConfigFile {
    std::size_t r = 0;
    FieldSpec field;
    std::vector<std::vector<std::string>> points;
    bool homogenize = false;
    std::optional<std::size_t> d;
    std::optional<std::size_t> m;
    std::optional<std::size_t> d_max;
    std::optional<double> eps;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    std::optional<std::size_t> n;
};

// Throws InputError naming the offending field.
ConfigFile parse_config(const json& doc);

template <class K>
PointConfig<K> exact_points(const ConfigFile& cfg, const K& field);

FloatCloud float_cloud(const ConfigFile& cfg);

template <class K>
json to_json(const ProjPoint<K>& p);

template <class K>
json to_json(const PointConfig<K>& cfg);

// {"r", "degree", "terms": [{"monomial": [..], "coeff": ".."}, ...]} in basis order.
template <class K>
json to_json(const HypersurfaceForm<K>& f);

json to_json(const MembershipVerdict& v);

template <class K>
json to_json(const ClassificationReport<K>& report);

json to_json(const SpecializedVerdict& v);
json to_json(const MultidegreeReport& report);
json to_json(const FitResult& fit, const MonomialBasis& basis);

// Hex FNV-1a 64-bit digest of the raw input bytes.
std::string input_digest(std::string_view bytes);

} // namespace vlab
