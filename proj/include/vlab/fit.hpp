#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "vlab/veronese.hpp"

namespace vlab {

// Real point cloud in homogeneous coordinates, one point per row.
class FloatCloud {
public:
    // Rows of length r+1, or r when `homogenize` appends a trailing 1.
    FloatCloud(Eigen::MatrixXd rows, bool homogenize = false);

    std::size_t r() const { return static_cast<std::size_t>(points_.cols()) - 1; }
    std::size_t size() const { return static_cast<std::size_t>(points_.rows()); }
    const Eigen::MatrixXd& points() const { return points_; }

private:
    Eigen::MatrixXd points_;
};

struct FitResult {
    std::size_t d = 0;
    // Unit norm, first nonzero entry positive, in the graded-lex monomial order.
    std::vector<double> coeffs;
    // Smallest singular value of the column-normalized multi-Veronese matrix.
    // A proxy for how far the cloud is from a degree-d hypersurface, not a
    // geometric distance.
    double residual = 0.0;
    // |F(p_i)| / ||v(p_i)|| per point.
    std::vector<double> per_point;
    double sigma_max = 0.0;
    // sigma_max / residual; +inf when the residual is exactly 0.
    double condition = 0.0;
    // n < b(r,d): a kernel exists for any data, so the fit carries no evidence.
    bool underdetermined = false;
};

// Column-normalized b(r,d) x n Veronese matrix of the cloud.
Eigen::MatrixXd normalized_veronese(const FloatCloud& cloud, const MonomialBasis& basis);

// Total-least-squares fit: the left singular vector of the smallest singular value.
FitResult fit_hypersurface(const FloatCloud& cloud, std::size_t d);

struct MinimalDegreeResult {
    std::optional<std::size_t> degree;
    std::optional<FitResult> fit;
    double eps = 0.0;
    // Residual of every degree tried, in order from 1.
    std::vector<double> residuals;
};

// 1e-8 * sqrt(n).
double default_eps(std::size_t n);

// Smallest d in [1, d_max] whose residual is at most eps; degree is empty when none fits.
MinimalDegreeResult minimal_degree(const FloatCloud& cloud, std::size_t d_max, double eps);

} // namespace vlab
