#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <iosfwd>
#include <string>
#include <vector>

#include "floatbeam/coupled.hpp"
#include "floatbeam/energy.hpp"

namespace floatbeam {

// %.17g — round-trips doubles exactly and keeps output byte-deterministic.
std::string format_g17(double v);

const char* timeseries_csv_header();
void write_timeseries_csv(std::ostream& os, const std::vector<SimRecord>& recs);
std::string timeseries_csv_string(const std::vector<SimRecord>& recs);

void write_modes_csv(std::ostream& os, const std::vector<EigenMode>& modes);

// MatrixMarket coordinate format, for debugging dumps of Lambda and M_E.
void write_matrix_market(std::ostream& os, const Eigen::MatrixXd& m);
void write_matrix_market(std::ostream& os, const Eigen::SparseMatrix<double>& m);

}  // namespace floatbeam
