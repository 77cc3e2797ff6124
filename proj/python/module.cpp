#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vlab/commands.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

template <class R>
R with_field(const std::string& field, auto&& body) {
    const vlab::FieldSpec spec = vlab::FieldSpec::parse(field);
    if (spec.kind == vlab::FieldSpec::Kind::Rationals) return body(vlab::RationalField());
    if (spec.kind == vlab::FieldSpec::Kind::PrimeField) return body(vlab::PrimeField(spec.p));
    throw vlab::InputError("field: exact linear algebra needs \"rational\" or \"fp:<prime>\"");
}

template <class K>
vlab::Matrix<K> parse_matrix(const K& field, const std::vector<std::vector<std::string>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    vlab::Matrix<K> m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw vlab::InputError("rows: ragged matrix at row " + std::to_string(i));
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = field.parse(rows[i][j]);
    }
    return m;
}

std::string run(const std::string& command, const std::string& config, std::optional<std::size_t> degree,
                std::optional<std::size_t> m, std::optional<std::string> field, std::optional<std::uint64_t> seed,
                std::optional<std::size_t> trials, std::optional<std::size_t> d_max, std::optional<double> eps,
                std::optional<std::size_t> r, std::optional<std::size_t> n) {
    vlab::CommandOptions opt;
    opt.degree = degree;
    opt.m = m;
    opt.field = std::move(field);
    opt.seed = seed;
    opt.trials = trials;
    opt.d_max = d_max;
    opt.eps = eps;
    opt.r = r;
    opt.n = n;
    return vlab::run_report(command, config, opt).dump();
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact and numerical tools for point configurations on hypersurfaces";

    // Translators are tried newest first, so the base class goes first.
    py::register_exception<vlab::Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<vlab::InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<vlab::PreconditionError>(m, "PreconditionError", PyExc_ValueError);

    m.attr("__version__") = vlab::kToolVersion;
    m.attr("commands") = vlab::command_names();

    m.def("run", &run, "command"_a, "config"_a, py::kw_only(), "degree"_a = py::none(), "m"_a = py::none(),
          "field"_a = py::none(), "seed"_a = py::none(), "trials"_a = py::none(), "d_max"_a = py::none(),
          "eps"_a = py::none(), "r"_a = py::none(), "n"_a = py::none(),
          "Run a command on a JSON configuration string; returns the JSON report.");

    m.def(
        "monomial_basis", [](std::size_t r, std::size_t d) { return vlab::monomial_basis(r, d).exponents; }, "r"_a,
        "d"_a);
    m.def("basis_size", &vlab::basis_size, "r"_a, "d"_a);
    m.def("expected_dimension", &vlab::expected_dimension, "r"_a, "d"_a, "n"_a);

    m.def(
        "rank",
        [](const std::vector<std::vector<std::string>>& rows, const std::string& field) {
            return with_field<std::size_t>(field, [&](const auto& k) { return vlab::rank(parse_matrix(k, rows)); });
        },
        "rows"_a, "field"_a = "rational");

    m.def(
        "kernel_basis",
        [](const std::vector<std::vector<std::string>>& rows, const std::string& field) {
            using Out = std::vector<std::vector<std::string>>;
            return with_field<Out>(field, [&](const auto& k) {
                Out out;
                for (const auto& v : vlab::kernel_basis(parse_matrix(k, rows))) {
                    auto& row = out.emplace_back();
                    for (const auto& x : v) row.push_back(k.format(x));
                }
                return out;
            });
        },
        "rows"_a, "field"_a = "rational");

    m.def(
        "fit",
        [](const Eigen::MatrixXd& points, std::size_t d, bool homogenize) {
            const vlab::FloatCloud cloud(points, homogenize);
            const auto res = vlab::fit_hypersurface(cloud, d);
            return py::dict("d"_a = res.d, "coeffs"_a = res.coeffs, "residual"_a = res.residual,
                            "per_point"_a = res.per_point, "sigma_max"_a = res.sigma_max,
                            "condition"_a = res.condition, "underdetermined"_a = res.underdetermined,
                            "monomials"_a = vlab::monomial_basis(cloud.r(), d).exponents);
        },
        "points"_a, "d"_a, "homogenize"_a = false);
}
