#include "cohlab/density_matrix.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>
#include <utility>

namespace cohlab {

PureState::PureState(Vector amplitudes, std::string basis_label, const Tolerances& tol)
    : amplitudes_(std::move(amplitudes)), basis_label_(std::move(basis_label)) {
    if (amplitudes_.size() == 0) throw structural_error("PureState: empty amplitude vector");
    const double norm_defect = std::abs(amplitudes_.squaredNorm() - 1.0);
    if (norm_defect > tol.norm_tol) {
        std::ostringstream msg;
        msg << "PureState: norm defect " << norm_defect << " exceeds " << tol.norm_tol;
        throw validation_error(msg.str());
    }
}

RealVector PureState::probabilities() const { return amplitudes_.cwiseAbs2(); }

PureState PureState::canonical_phase() const {
    constexpr double kNegligible = 1e-12;
    for (int i = 0; i < amplitudes_.size(); ++i) {
        const double mag = std::abs(amplitudes_[i]);
        if (mag > kNegligible) {
            Vector fixed = amplitudes_ * (std::conj(amplitudes_[i]) / mag);
            PureState out = *this;
            out.amplitudes_ = std::move(fixed);
            return out;
        }
    }
    return *this;
}

DensityMatrix PureState::density_matrix() const { return DensityMatrix::pure(*this); }

std::string DensityDiagnostics::summary() const {
    std::ostringstream msg;
    if (!square) return "input is not square";
    bool first = true;
    auto item = [&](const std::string& text) {
        if (!first) msg << "; ";
        msg << text;
        first = false;
    };
    if (!hermitian_ok) {
        std::ostringstream part;
        part << "hermiticity defect " << hermiticity_defect;
        item(part.str());
    }
    if (!trace_ok) {
        std::ostringstream part;
        part << "trace defect " << trace_defect;
        item(part.str());
    }
    if (!psd_ok) {
        std::ostringstream part;
        part << "negative eigenvalue " << min_eigenvalue;
        item(part.str());
    }
    if (first) msg << "all invariants hold";
    return msg.str();
}

DensityDiagnostics DensityMatrix::diagnose(const Matrix& entries, const Tolerances& tol) {
    DensityDiagnostics d;
    if (entries.rows() != entries.cols() || entries.rows() == 0) {
        d.square = false;
        return d;
    }
    d.hermiticity_defect = (entries - entries.adjoint()).cwiseAbs().maxCoeff();
    d.hermitian_ok = d.hermiticity_defect <= tol.herm_tol;
    d.trace_defect = std::abs(entries.trace() - Complex(1.0, 0.0));
    d.trace_ok = d.trace_defect <= tol.trace_tol;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(entries, Eigen::EigenvaluesOnly);
    d.min_eigenvalue = solver.eigenvalues().minCoeff();
    d.psd_ok = d.min_eigenvalue >= -tol.psd_tol;
    return d;
}

DensityMatrix::DensityMatrix(unchecked_tag, Matrix entries, std::string basis_label)
    : entries_(std::move(entries)), basis_label_(std::move(basis_label)) {}

DensityMatrix::DensityMatrix(Matrix entries, std::string basis_label, const Tolerances& tol)
    : entries_(std::move(entries)), basis_label_(std::move(basis_label)) {
    if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
        throw structural_error("DensityMatrix: input must be square and non-empty");
    }
    const DensityDiagnostics d = diagnose(entries_, tol);
    if (!d.ok()) throw validation_error("DensityMatrix: " + d.summary());
}

std::optional<DensityMatrix> DensityMatrix::validated(Matrix entries, std::string basis_label,
                                                      const Tolerances& tol,
                                                      DensityDiagnostics* diagnostics) {
    if (entries.rows() != entries.cols() || entries.rows() == 0) {
        throw structural_error("DensityMatrix: input must be square and non-empty");
    }
    DensityDiagnostics d = diagnose(entries, tol);
    if (diagnostics) *diagnostics = d;
    if (!d.ok()) return std::nullopt;
    return DensityMatrix(unchecked_tag{}, std::move(entries), std::move(basis_label));
}

DensityMatrix DensityMatrix::pure(const PureState& psi) {
    Matrix rho = psi.amplitudes() * psi.amplitudes().adjoint();
    return DensityMatrix(unchecked_tag{}, std::move(rho), psi.basis_label());
}

DensityMatrix DensityMatrix::from_probabilities(const RealVector& p, std::string basis_label,
                                                const Tolerances& tol) {
    if (p.size() == 0) throw structural_error("from_probabilities: empty vector");
    if (p.minCoeff() < -tol.psd_tol) {
        std::ostringstream msg;
        msg << "from_probabilities: negative weight " << p.minCoeff();
        throw validation_error(msg.str());
    }
    const double trace_defect = std::abs(p.sum() - 1.0);
    if (trace_defect > tol.trace_tol) {
        std::ostringstream msg;
        msg << "from_probabilities: trace defect " << trace_defect;
        throw validation_error(msg.str());
    }
    Matrix rho = Matrix::Zero(p.size(), p.size());
    for (int i = 0; i < p.size(); ++i) rho(i, i) = std::max(p[i], 0.0);
    return DensityMatrix(unchecked_tag{}, std::move(rho), std::move(basis_label));
}

DensityMatrix DensityMatrix::maximally_mixed(int dim, std::string basis_label) {
    if (dim < 1) throw structural_error("maximally_mixed: dimension must be >= 1");
    Matrix rho = Matrix::Identity(dim, dim) / static_cast<double>(dim);
    return DensityMatrix(unchecked_tag{}, std::move(rho), std::move(basis_label));
}

RealVector DensityMatrix::probabilities() const {
    return entries_.diagonal().real().cwiseMax(0.0);
}

DensityMatrix DensityMatrix::diagonal_part() const {
    Matrix rho = Matrix::Zero(dim(), dim());
    rho.diagonal() = entries_.diagonal().real().cast<Complex>();
    return DensityMatrix(unchecked_tag{}, std::move(rho), basis_label_);
}

bool DensityMatrix::is_diagonal(double tol) const {
    Matrix off = entries_;
    off.diagonal().setZero();
    return off.cwiseAbs().maxCoeff() <= tol;
}

}  // namespace cohlab
