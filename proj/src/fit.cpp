#include "vlab/fit.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <Eigen/SVD>

namespace vlab {

FloatCloud::FloatCloud(Eigen::MatrixXd rows, bool homogenize) {
    if (rows.rows() == 0) throw InputError("points: cloud is empty");
    if (!rows.allFinite()) throw InputError("points: non-finite coordinate");
    if (homogenize) {
        points_.resize(rows.rows(), rows.cols() + 1);
        points_.leftCols(rows.cols()) = rows;
        points_.col(rows.cols()).setOnes();
    } else {
        points_ = std::move(rows);
    }
    if (points_.cols() < 2) throw InputError("points: need at least two homogeneous coordinates");
    for (Eigen::Index i = 0; i < points_.rows(); ++i)
        if (points_.row(i).isZero(0.0)) throw InputError("points[" + std::to_string(i) + "]: all coordinates zero");
}

Eigen::MatrixXd normalized_veronese(const FloatCloud& cloud, const MonomialBasis& basis) {
    const auto& pts = cloud.points();
    Eigen::MatrixXd m(basis.size(), cloud.size());
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        // Rescale the representative first so high powers stay in range.
        Eigen::VectorXd x = pts.row(static_cast<Eigen::Index>(i)).transpose();
        Eigen::Index big = 0;
        x.cwiseAbs().maxCoeff(&big);
        x /= x[big];
        for (std::size_t k = 0; k < basis.size(); ++k) {
            double v = 1.0;
            for (std::size_t j = 0; j < basis.exponents[k].size(); ++j)
                for (unsigned e = 0; e < basis.exponents[k][j]; ++e) v *= x[static_cast<Eigen::Index>(j)];
            m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(i)) = v;
        }
        const double norm = m.col(static_cast<Eigen::Index>(i)).norm();
        if (!(norm > 0.0) || !std::isfinite(norm))
            throw InputError("points[" + std::to_string(i) + "]: degenerate Veronese column");
        m.col(static_cast<Eigen::Index>(i)) /= norm;
    }
    return m;
}

FitResult fit_hypersurface(const FloatCloud& cloud, std::size_t d) {
    const MonomialBasis basis = monomial_basis(cloud.r(), d);
    const Eigen::MatrixXd m = normalized_veronese(cloud, basis);
    const auto b = static_cast<Eigen::Index>(basis.size());

    // Right singular vectors of M^T are the left singular vectors of M.
    Eigen::BDCSVD<Eigen::MatrixXd> svd(m.transpose(), Eigen::ComputeFullV);
    const Eigen::VectorXd& sigma = svd.singularValues();

    FitResult fit;
    fit.d = d;
    fit.underdetermined = cloud.size() < basis.size();
    fit.sigma_max = sigma.size() ? sigma[0] : 0.0;
    fit.residual = fit.underdetermined ? 0.0 : sigma[b - 1];

    Eigen::VectorXd a = svd.matrixV().col(b - 1);
    Eigen::Index lead = 0;
    const double tiny = 1e-12 * a.cwiseAbs().maxCoeff();
    while (lead < b && std::abs(a[lead]) <= tiny) ++lead;
    if (lead < b && a[lead] < 0) a = -a;
    fit.coeffs.assign(a.data(), a.data() + b);

    const Eigen::VectorXd values = m.transpose() * a;
    fit.per_point.resize(cloud.size());
    for (std::size_t i = 0; i < cloud.size(); ++i) fit.per_point[i] = std::abs(values[static_cast<Eigen::Index>(i)]);

    fit.condition = fit.residual > 0.0 ? fit.sigma_max / fit.residual : std::numeric_limits<double>::infinity();
    return fit;
}

double default_eps(std::size_t n) { return 1e-8 * std::sqrt(static_cast<double>(n)); }

MinimalDegreeResult minimal_degree(const FloatCloud& cloud, std::size_t d_max, double eps) {
    if (d_max < 1) throw PreconditionError("dmax: must be at least 1");
    if (!(eps > 0.0)) throw PreconditionError("eps: must be positive");
    MinimalDegreeResult out;
    out.eps = eps;
    for (std::size_t d = 1; d <= d_max; ++d) {
        FitResult fit = fit_hypersurface(cloud, d);
        out.residuals.push_back(fit.residual);
        if (fit.residual <= eps) {
            out.degree = d;
            out.fit = std::move(fit);
            break;
        }
    }
    return out;
}

} // namespace vlab
