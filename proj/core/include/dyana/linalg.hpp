#pragma once

#include <Eigen/Dense>
#include <complex>

namespace dyana {

using cd = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

}  // namespace dyana
