#include "qgames/complex_linalg.hpp"

#include <algorithm>
#include <cmath>

namespace qgames {

namespace {
double g_tolerance = 1e-9;

void require_finite(const std::vector<Complex>& entries, const char* what) {
    for (const Complex& z : entries) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw InvalidArgument(std::string(what) + ": non-finite entry");
        }
    }
}
}  // namespace

double tolerance() { return g_tolerance; }

void set_tolerance(double tol) {
    if (!(tol > 0.0) || !std::isfinite(tol)) {
        throw InvalidArgument("tolerance must be a positive finite number");
    }
    g_tolerance = tol;
}

CVector::CVector(std::vector<Complex> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw InvalidArgument("CVector: dim must be >= 1");
    require_finite(entries_, "CVector");
}

CVector::CVector(std::initializer_list<Complex> entries)
    : CVector(std::vector<Complex>(entries)) {}

CVector CVector::basis(std::size_t dim, std::size_t k) {
    if (k >= dim) throw IndexOutOfRange("CVector::basis: index out of range");
    std::vector<Complex> e(dim, Complex(0.0, 0.0));
    e[k] = Complex(1.0, 0.0);
    return CVector(std::move(e));
}

double CVector::norm() const {
    double s = 0.0;
    for (const Complex& z : entries_) s += std::norm(z);
    return std::sqrt(s);
}

bool CVector::is_normalized(double tol) const { return std::abs(norm() - 1.0) <= tol; }

CMatrix::CMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Complex(0.0, 0.0)) {
    if (rows == 0 || cols == 0) throw InvalidArgument("CMatrix: dims must be >= 1");
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0) throw InvalidArgument("CMatrix: dims must be >= 1");
    if (entries_.size() != rows * cols) {
        throw DimensionMismatch("CMatrix: entry count does not match dims");
    }
    require_finite(entries_, "CMatrix");
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Complex(1.0, 0.0);
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = std::conj(at(r, c));
    return m;
}

Complex CMatrix::trace() const {
    if (rows_ != cols_) throw DimensionMismatch("trace: matrix not square");
    Complex t(0.0, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

double CMatrix::max_abs() const {
    double m = 0.0;
    for (const Complex& z : entries_) m = std::max(m, std::abs(z));
    return m;
}

bool CMatrix::is_hermitian(double tol) const {
    if (rows_ != cols_) return false;
    return max_abs_diff(*this, adjoint()) <= tol;
}

bool CMatrix::is_unitary(double tol) const {
    if (rows_ != cols_) return false;
    return max_abs_diff(*this * adjoint(), identity(rows_)) <= tol;
}

CMatrix CMatrix::operator*(const CMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionMismatch("matrix multiply: inner dims differ");
    CMatrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Complex v = at(r, k);
            if (v == Complex(0.0, 0.0)) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c) out.at(r, c) += v * rhs.at(k, c);
        }
    }
    return out;
}

CVector CMatrix::operator*(const CVector& v) const {
    if (cols_ != v.dim()) throw DimensionMismatch("matrix-vector multiply: dims differ");
    std::vector<Complex> out(rows_, Complex(0.0, 0.0));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out[r] += at(r, c) * v[c];
    return CVector(std::move(out));
}

CMatrix CMatrix::operator+(const CMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimensionMismatch("matrix add: shapes differ");
    CMatrix out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += rhs.entries_[i];
    return out;
}

CMatrix CMatrix::operator-(const CMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimensionMismatch("matrix subtract: shapes differ");
    CMatrix out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] -= rhs.entries_[i];
    return out;
}

CMatrix CMatrix::scaled(Complex s) const {
    CMatrix out = *this;
    for (Complex& z : out.entries_) z *= s;
    return out;
}

CMatrix tensor(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ++ar)
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            const Complex v = a.at(ar, ac);
            if (v == Complex(0.0, 0.0)) continue;
            for (std::size_t br = 0; br < b.rows(); ++br)
                for (std::size_t bc = 0; bc < b.cols(); ++bc)
                    out.at(ar * b.rows() + br, ac * b.cols() + bc) = v * b.at(br, bc);
        }
    return out;
}

CVector tensor(const CVector& a, const CVector& b) {
    std::vector<Complex> out;
    out.reserve(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) out.push_back(a[i] * b[j]);
    return CVector(std::move(out));
}

CMatrix outer(const CVector& v) {
    CMatrix out(v.dim(), v.dim());
    for (std::size_t r = 0; r < v.dim(); ++r)
        for (std::size_t c = 0; c < v.dim(); ++c) out.at(r, c) = v[r] * std::conj(v[c]);
    return out;
}

CMatrix conjugate_by(const CMatrix& u, const CMatrix& rho) {
    if (u.rows() != u.cols() || rho.rows() != rho.cols() || u.rows() != rho.rows()) {
        throw DimensionMismatch("conjugate_by: square dims must match");
    }
    if (!u.is_unitary(tolerance())) throw NotUnitary("conjugate_by: operator is not unitary");
    return u * rho * u.adjoint();
}

double trace_product(const std::vector<double>& x_diag, const CMatrix& rho) {
    if (rho.rows() != rho.cols() || x_diag.size() != rho.rows()) {
        throw DimensionMismatch("trace_product: diagonal length must equal matrix dim");
    }
    double s = 0.0;
    for (std::size_t k = 0; k < x_diag.size(); ++k) s += x_diag[k] * rho.at(k, k).real();
    return s;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("max_abs_diff: shapes differ");
    double m = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            m = std::max(m, std::abs(a.at(r, c) - b.at(r, c)));
    return m;
}

bool same_state(const CVector& a, const CVector& b, double tol) {
    if (a.dim() != b.dim()) return false;
    return max_abs_diff(outer(a), outer(b)) <= tol;
}

bool approx_equal(const CMatrix& a, const CMatrix& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return max_abs_diff(a, b) <= tol;
}

bool is_density_matrix(const CMatrix& rho, double tol) {
    if (rho.rows() != rho.cols()) return false;
    if (!rho.is_hermitian(tol)) return false;
    if (std::abs(rho.trace() - Complex(1.0, 0.0)) > tol) return false;
    // PSD screen: diagonally pivoted Cholesky; a pivot below -tol rejects.
    const std::size_t n = rho.rows();
    std::vector<std::vector<Complex>> a(n, std::vector<Complex>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a[r][c] = rho.at(r, c);
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (a[perm[i]][perm[i]].real() > a[perm[pivot]][perm[pivot]].real()) pivot = i;
        std::swap(perm[k], perm[pivot]);
        const double d = a[perm[k]][perm[k]].real();
        if (d < -tol) return false;
        if (d <= tol) {
            // Zero pivot: the remaining block must vanish for PSD.
            for (std::size_t i = k; i < n; ++i)
                for (std::size_t j = k; j < n; ++j)
                    if (std::abs(a[perm[i]][perm[j]]) > std::sqrt(tol)) return false;
            return true;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[perm[i]][perm[j]] -= a[perm[i]][perm[k]] * a[perm[k]][perm[j]] / d;
    }
    return true;
}

}  // namespace qgames
