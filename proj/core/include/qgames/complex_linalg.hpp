#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "qgames/common.hpp"

namespace qgames {

using Complex = std::complex<double>;

/// Dense complex vector. Entries are validated to be finite on construction.
class CVector {
public:
    explicit CVector(std::vector<Complex> entries);
    CVector(std::initializer_list<Complex> entries);

    /// Basis state |k> in a dim-dimensional space.
    static CVector basis(std::size_t dim, std::size_t k);

    std::size_t dim() const { return entries_.size(); }
    const Complex& operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<Complex>& entries() const { return entries_; }

    double norm() const;
    bool is_normalized(double tol) const;
    bool is_normalized() const { return is_normalized(tolerance()); }

private:
    std::vector<Complex> entries_;
};

/// Dense row-major complex matrix.
class CMatrix {
public:
    CMatrix(std::size_t rows, std::size_t cols);
    CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static CMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Complex& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    CMatrix adjoint() const;
    Complex trace() const;
    double max_abs() const;

    bool is_hermitian(double tol) const;
    bool is_unitary(double tol) const;

    CMatrix operator*(const CMatrix& rhs) const;
    CVector operator*(const CVector& v) const;
    CMatrix operator+(const CMatrix& rhs) const;
    CMatrix operator-(const CMatrix& rhs) const;
    CMatrix scaled(Complex s) const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> entries_;
};

/// Kronecker product; result dims multiply.
CMatrix tensor(const CMatrix& a, const CMatrix& b);
CVector tensor(const CVector& a, const CVector& b);

/// Rank-1 projector-style outer product v v^dagger (trace = |v|^2).
CMatrix outer(const CVector& v);

/// u rho u^dagger. Throws NotUnitary if u fails the unitarity check,
/// DimensionMismatch on incompatible shapes.
CMatrix conjugate_by(const CMatrix& u, const CMatrix& rho);

/// Trace of (diag(x_diag) * rho): sum of x_diag[k] * Re(rho[k][k]).
/// Throws DimensionMismatch if lengths disagree.
double trace_product(const std::vector<double>& x_diag, const CMatrix& rho);

/// Largest entrywise absolute difference.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

/// Equality of states up to global phase: compares outer products.
bool same_state(const CVector& a, const CVector& b, double tol);
bool approx_equal(const CMatrix& a, const CMatrix& b, double tol);

/// Density-matrix check: Hermitian, unit trace, nonnegative diagonal and
/// a Gershgorin-style PSD screen at the given tolerance.
bool is_density_matrix(const CMatrix& rho, double tol);

}  // namespace qgames
