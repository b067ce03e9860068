#include "floatbeam/beam.hpp"

#include <algorithm>
#include <cmath>

#include "floatbeam/errors.hpp"

namespace floatbeam {

BeamCoefficient BeamCoefficient::constant(double value) {
    BeamCoefficient c;
    c.points_ = {{0.0, value}};
    return c;
}

BeamCoefficient BeamCoefficient::table(
    std::vector<std::pair<double, double>> points) {
    if (points.empty())
        throw AssemblyError("beam coefficient table is empty");
    for (std::size_t i = 1; i < points.size(); ++i)
        if (!(points[i].first > points[i - 1].first))
            throw AssemblyError("beam coefficient table must be strictly increasing in y");
    BeamCoefficient c;
    c.points_ = std::move(points);
    return c;
}

double BeamCoefficient::operator()(double y) const {
    if (points_.size() == 1) return points_.front().second;
    if (y <= points_.front().first) return points_.front().second;
    if (y >= points_.back().first) return points_.back().second;
    auto hi = std::upper_bound(points_.begin(), points_.end(), y,
                               [](double v, const auto& p) { return v < p.first; });
    auto lo = hi - 1;
    const double t = (y - lo->first) / (hi->first - lo->first);
    return lo->second + t * (hi->second - lo->second);
}

namespace {

// 4-point Gauss rule on [0, 1].
constexpr int kGaussN = 4;
constexpr double kGaussX[kGaussN] = {
    0.5 - 0.43056815579702629 /* sqrt((3+2*sqrt(6/5))/7)/2 */,
    0.5 - 0.16999052179242813,
    0.5 + 0.16999052179242813,
    0.5 + 0.43056815579702629,
};
constexpr double kGaussW[kGaussN] = {
    0.17392742256872692, 0.32607257743127305,
    0.32607257743127305, 0.17392742256872692,
};

// Hermite shape values and derivatives at xi in [0, 1] on an element of
// length len (derivatives with respect to the physical coordinate).
void hermite_shapes(double xi, double len, double n[4], double d2[4]) {
    n[0] = 1.0 - 3.0 * xi * xi + 2.0 * xi * xi * xi;
    n[1] = len * (xi - 2.0 * xi * xi + xi * xi * xi);
    n[2] = 3.0 * xi * xi - 2.0 * xi * xi * xi;
    n[3] = len * (-xi * xi + xi * xi * xi);
    d2[0] = (-6.0 + 12.0 * xi) / (len * len);
    d2[1] = (-4.0 + 6.0 * xi) / len;
    d2[2] = (6.0 - 12.0 * xi) / (len * len);
    d2[3] = (-2.0 + 6.0 * xi) / len;
}

}  // namespace

BeamModel assemble_beam(const BeamParams& params) {
    if (params.n_elements < 4)
        throw AssemblyError("beam needs at least 4 elements");
    if (!(params.L > 0.0)) throw AssemblyError("beam length must be positive");

    const int n = params.n_elements;
    const int ndof = 2 * (n + 1);
    BeamModel model;
    model.params = params;
    model.node_y.resize(n + 1);
    const double len = params.L / n;
    for (int i = 0; i <= n; ++i) model.node_y[i] = params.y0 + i * len;

    model.M_b = Eigen::MatrixXd::Zero(ndof, ndof);
    model.K_b = Eigen::MatrixXd::Zero(ndof, ndof);

    for (int e = 0; e < n; ++e) {
        const double y_left = model.node_y[e];
        Eigen::Matrix4d me = Eigen::Matrix4d::Zero();
        Eigen::Matrix4d ke = Eigen::Matrix4d::Zero();
        for (int g = 0; g < kGaussN; ++g) {
            const double xi = kGaussX[g];
            const double y = y_left + xi * len;
            const double rho = params.rho(y);
            const double ei = params.EI(y);
            if (!(rho > 0.0))
                throw AssemblyError("beam mass density sample <= 0 at y=" +
                                    std::to_string(y));
            if (!(ei > 0.0))
                throw AssemblyError("beam flexural rigidity sample <= 0 at y=" +
                                    std::to_string(y));
            double shp[4], d2[4];
            hermite_shapes(xi, len, shp, d2);
            const double wjac = kGaussW[g] * len;
            for (int i = 0; i < 4; ++i) {
                for (int j = 0; j < 4; ++j) {
                    me(i, j) += wjac * rho * shp[i] * shp[j];
                    ke(i, j) += wjac * ei * d2[i] * d2[j];
                }
            }
        }
        const int base = 2 * e;
        model.M_b.block<4, 4>(base, base) += me;
        model.K_b.block<4, 4>(base, base) += ke;
    }
    return model;
}

BeamModel apply_tip_mass(const BeamModel& model, double m, double J) {
    BeamModel out = model;
    out.M_b(out.tip_deflection_dof(), out.tip_deflection_dof()) += m;
    out.M_b(out.tip_rotation_dof(), out.tip_rotation_dof()) += J;
    out.tip_applied = true;
    return out;
}

Eigen::MatrixXd clamp_transform(const BeamParams& params, double y_G) {
    const int n = params.n_elements;
    const int ndof = 2 * (n + 1);
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(ndof, 3 + 2 * n);
    t(0, 0) = 1.0;                  // surge drags the base deflection
    t(0, 2) = params.y0 - y_G;      // pitch lever arm at the clamp
    t(1, 2) = 1.0;                  // base rotation follows pitch
    for (int k = 0; k < 2 * n; ++k) t(2 + k, 3 + k) = 1.0;
    return t;
}

Eigen::Vector3d internal_force_recovery(const BeamModel& model,
                                        const Eigen::VectorXd& w_full,
                                        double y_G) {
    if (w_full.size() != model.num_dofs())
        throw DimensionError("internal_force_recovery: DOF vector size mismatch");
    const double len = model.node_y[1] - model.node_y[0];
    const double y0 = model.params.y0;
    const Eigen::Vector4d dofs = w_full.head<4>();

    // Hermite curvature and its derivative at the clamp (xi = 0); the cubic
    // has constant third derivative on the element.
    const Eigen::Vector4d d2(-6.0 / (len * len), -4.0 / len, 6.0 / (len * len),
                             -2.0 / len);
    const Eigen::Vector4d d3(12.0 / (len * len * len), 6.0 / (len * len),
                             -12.0 / (len * len * len), 6.0 / (len * len));
    const double w_yy = d2.dot(dofs);
    const double w_yyy = d3.dot(dofs);

    const double ei0 = model.params.EI(y0);
    // d(EI)/dy by a one-sided difference; exact for constant EI and adequate
    // for a post-processing diagnostic.
    const double dy = 1e-2 * len;
    const double dei = (model.params.EI(y0 + dy) - ei0) / dy;

    const double shear = dei * w_yy + ei0 * w_yyy;  // (EI w_yy)_y at y0
    Eigen::Vector3d f;
    f[0] = shear;
    f[1] = 0.0;
    f[2] = -ei0 * w_yy + (y0 - y_G) * shear;
    return f;
}

}  // namespace floatbeam
