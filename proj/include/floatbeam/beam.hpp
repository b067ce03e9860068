#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

namespace floatbeam {

// Strictly positive coefficient profile along the beam: either a constant or
// a table interpolated linearly (clamped beyond the table range).
class BeamCoefficient {
public:
    static BeamCoefficient constant(double value);
    static BeamCoefficient table(std::vector<std::pair<double, double>> points);

    double operator()(double y) const;
    bool is_constant() const { return points_.size() == 1; }

private:
    std::vector<std::pair<double, double>> points_;  // (y, value), sorted
};

struct BeamParams {
    double y0 = 0.0;  // clamp height
    double L = 0.0;   // beam length, tip at y0 + L
    BeamCoefficient rho = BeamCoefficient::constant(1.0);  // kg/m per m
    BeamCoefficient EI = BeamCoefficient::constant(1.0);   // N m^2
    double tip_mass_m = 0.0;
    double tip_inertia_J = 0.0;
    int n_elements = 0;

    double y_tip() const { return y0 + L; }
};

// Cubic Hermite discretization: DOFs (deflection, rotation) per node, so
// 2*(n_elements+1) in total. Element integrals use 4-point Gauss quadrature.
struct BeamModel {
    BeamParams params;
    std::vector<double> node_y;
    Eigen::MatrixXd M_b;  // consistent mass, tip augmentation included if applied
    Eigen::MatrixXd K_b;  // bending stiffness; rigid modes in the kernel
    bool tip_applied = false;

    int num_dofs() const { return static_cast<int>(M_b.rows()); }
    int tip_deflection_dof() const { return num_dofs() - 2; }
    int tip_rotation_dof() const { return num_dofs() - 1; }
};

// Assembles the bare beam matrices (no tip mass). Throws AssemblyError if a
// coefficient sample is not strictly positive or n_elements < 4.
BeamModel assemble_beam(const BeamParams& params);

// Adds m to the tip deflection diagonal of M_b and J to the tip rotation
// diagonal: the discrete form of the two tip balance equations.
BeamModel apply_tip_mass(const BeamModel& model, double m, double J);

// Constraint map from reduced coordinates [q(3); interior DOFs(2n)] to the
// full DOF vector: base deflection = r(y0) . q with r(y) = (1, 0, y - y_G),
// base rotation = r'(y0) . q = q_pitch, identity elsewhere. Eliminating the
// base DOFs this way keeps the reduced matrices symmetric and routes the
// clamp reaction through T^t automatically.
Eigen::MatrixXd clamp_transform(const BeamParams& params, double y_G);

// Diagnostic evaluation of the clamp force vector
// [(EI w_yy)_y, 0, -EI w_yy + (y0 - y_G)(EI w_yy)_y] at y0 from the first
// element's Hermite derivatives. Post-processing only.
Eigen::Vector3d internal_force_recovery(const BeamModel& model,
                                        const Eigen::VectorXd& w_full,
                                        double y_G);

}  // namespace floatbeam
