// Density matrices and pure states over a fixed, labelled reference basis.
#pragma once

#include <optional>
#include <string>

#include "cohlab/errors.hpp"
#include "cohlab/types.hpp"

namespace cohlab {

class DensityMatrix;

// Normalized complex amplitude vector. The basis label names the reference
// basis; distance operations refuse to mix labels.
class PureState {
public:
    PureState(Vector amplitudes, std::string basis_label, const Tolerances& tol = {});

    int dim() const { return static_cast<int>(amplitudes_.size()); }
    const Vector& amplitudes() const { return amplitudes_; }
    const std::string& basis_label() const { return basis_label_; }

    RealVector probabilities() const;

    // Multiplies by a global phase so the first non-negligible amplitude is
    // real and positive. Makes independently constructed states comparable
    // entrywise.
    PureState canonical_phase() const;

    DensityMatrix density_matrix() const;

private:
    Vector amplitudes_;
    std::string basis_label_;
};

// Outcome of checking the three density-matrix invariants. Violations are
// reported with their magnitudes, never silently absorbed.
struct DensityDiagnostics {
    bool square = true;
    double hermiticity_defect = 0.0;  // max_ij |rho_ij - conj(rho_ji)|
    double trace_defect = 0.0;        // |tr(rho) - 1|
    double min_eigenvalue = 0.0;
    bool hermitian_ok = false;
    bool trace_ok = false;
    bool psd_ok = false;

    bool ok() const { return square && hermitian_ok && trace_ok && psd_ok; }
    std::string summary() const;
};

// Hermitian, unit-trace, positive-semidefinite matrix. Immutable value type;
// all quantifiers consume it.
class DensityMatrix {
public:
    // Checks all invariants; throws structural_error for a non-square input
    // and validation_error (with the diagnostics summary) otherwise.
    DensityMatrix(Matrix entries, std::string basis_label, const Tolerances& tol = {});

    // Invariant report without construction. Non-square input yields
    // square=false and skips the remaining checks.
    static DensityDiagnostics diagnose(const Matrix& entries, const Tolerances& tol = {});

    // Validating factory; nullopt on violation, diagnostics via out-param.
    static std::optional<DensityMatrix> validated(Matrix entries, std::string basis_label,
                                                  const Tolerances& tol = {},
                                                  DensityDiagnostics* diagnostics = nullptr);

    // |psi><psi| is positive by construction; only the norm is checked
    // (already done by PureState), so this skips the O(N^3) eigen solve.
    static DensityMatrix pure(const PureState& psi);

    // Diagonal state from a probability vector.
    static DensityMatrix from_probabilities(const RealVector& p, std::string basis_label,
                                            const Tolerances& tol = {});

    static DensityMatrix maximally_mixed(int dim, std::string basis_label = "basis");

    int dim() const { return static_cast<int>(entries_.rows()); }
    const Matrix& entries() const { return entries_; }
    const std::string& basis_label() const { return basis_label_; }

    // Diagonal entries clamped to >= 0 (tiny negatives are construction noise
    // admitted by psd_tol; clamping beats projection, which would shift
    // quantifier values).
    RealVector probabilities() const;

    // Off-diagonals zeroed; the diagonal of a PSD matrix is a probability
    // vector, so the result is again a valid DensityMatrix.
    DensityMatrix diagonal_part() const;

    bool is_diagonal(double tol = 1e-12) const;

private:
    struct unchecked_tag {};
    DensityMatrix(unchecked_tag, Matrix entries, std::string basis_label);

    Matrix entries_;
    std::string basis_label_;
};

}  // namespace cohlab
