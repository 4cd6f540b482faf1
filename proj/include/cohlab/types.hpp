// Shared scalar/matrix aliases and tolerance knobs.
#pragma once

#include <complex>
#include <Eigen/Dense>

namespace cohlab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Construction noise from matrix exponentials motivates psd_tol > the rest.
struct Tolerances {
    double herm_tol = 1e-10;
    double trace_tol = 1e-10;
    double norm_tol = 1e-10;
    double psd_tol = 1e-9;
};

// Imaginary residue allowed on values that are real by symmetry.
inline constexpr double kImagResidueTol = 1e-10;

// Dual-route quantifier evaluations must agree this closely.
inline constexpr double kConsistencyTol = 1e-10;

inline constexpr double kPi = 3.14159265358979323846;

}  // namespace cohlab
