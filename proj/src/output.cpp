#include "floatbeam/output.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>

namespace floatbeam {

std::string format_g17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

const char* timeseries_csv_header() {
    return "t,q1,q2,q3,qd1,qd2,qd3,w_tip,wth_tip,v_probe,"
           "E_fluid_kin,E_fluid_pot,E_plat_kin,E_plat_pot,"
           "E_beam_kin,E_beam_pot,E_tip_tr,E_tip_rot,E_total,work,residual";
}

void write_timeseries_csv(std::ostream& os,
                          const std::vector<SimRecord>& recs) {
    // Energies are per unit length out of plane (J/m); forces N/m.
    os << timeseries_csv_header() << "\n";
    for (const auto& r : recs) {
        const auto& e = r.energy;
        const double cols[] = {
            r.t,      r.q[0],   r.q[1],        r.q[2],          r.qdot[0],
            r.qdot[1], r.qdot[2], r.w_tip,     r.wth_tip,       r.v_probe,
            e.fluid_kinetic,    e.fluid_potential, e.platform_kinetic,
            e.platform_potential, e.beam_kinetic,  e.beam_potential,
            e.tip_translational, e.tip_rotational, e.total,
            e.work_to_date,     e.residual};
        for (std::size_t i = 0; i < std::size(cols); ++i) {
            if (i) os << ",";
            os << format_g17(cols[i]);
        }
        os << "\n";
    }
}

std::string timeseries_csv_string(const std::vector<SimRecord>& recs) {
    std::ostringstream os;
    write_timeseries_csv(os, recs);
    return os.str();
}

void write_modes_csv(std::ostream& os, const std::vector<EigenMode>& modes) {
    os << "omega,damping,frac_fluid,frac_platform,frac_beam,residual\n";
    for (const auto& m : modes) {
        os << format_g17(m.lambda.imag()) << "," << format_g17(m.lambda.real())
           << "," << format_g17(m.frac_fluid) << ","
           << format_g17(m.frac_platform) << "," << format_g17(m.frac_beam)
           << "," << format_g17(m.residual) << "\n";
    }
}

void write_matrix_market(std::ostream& os, const Eigen::MatrixXd& m) {
    os << "%%MatrixMarket matrix coordinate real general\n";
    Eigen::Index nnz = 0;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (m(i, j) != 0.0) ++nnz;
    os << m.rows() << " " << m.cols() << " " << nnz << "\n";
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (m(i, j) != 0.0)
                os << (i + 1) << " " << (j + 1) << " " << format_g17(m(i, j))
                   << "\n";
}

void write_matrix_market(std::ostream& os,
                         const Eigen::SparseMatrix<double>& m) {
    os << "%%MatrixMarket matrix coordinate real general\n";
    os << m.rows() << " " << m.cols() << " " << m.nonZeros() << "\n";
    for (int k = 0; k < m.outerSize(); ++k)
        for (Eigen::SparseMatrix<double>::InnerIterator it(m, k); it; ++it)
            os << (it.row() + 1) << " " << (it.col() + 1) << " "
               << format_g17(it.value()) << "\n";
}

}  // namespace floatbeam
