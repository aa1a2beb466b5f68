#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qloss {

using complex = std::complex<double>;

// Largest row or column count kron and tensor_channels will produce.
inline constexpr std::size_t kMaxDimension = 4096;
// Largest matrix the Jacobi eigensolver accepts.
inline constexpr std::size_t kMaxEigenDimension = 16;
// Entrywise tolerance for |h - h^dagger| in the eigensolver precondition.
inline constexpr double kHermitianTolerance = 1e-10;

// Dense complex matrix, row-major. All entries are finite.
class ComplexMatrix {
public:
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<complex>> rows);

    static ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const double> values);
    static ComplexMatrix diagonal(std::initializer_list<double> values);
    // |i><j| on an n-dimensional space.
    static ComplexMatrix basis_op(std::size_t n, std::size_t i, std::size_t j);
    // |v><v| for a column vector given as its entries.
    static ComplexMatrix projector(std::span<const complex> ket);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    std::span<const complex> entries() const noexcept { return data_; }

    complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    ComplexMatrix adjoint() const;
    complex trace() const;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(complex s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, complex s) { return a *= s; }
    friend ComplexMatrix operator*(complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    void check_finite() const;

    std::size_t rows_;
    std::size_t cols_;
    std::vector<complex> data_;
};

// Tensor-factor dimensions annotating a square matrix, e.g. {2, 2, 2, 2} for
// polarization(A) x polarization(B) x Fock(signal) x Fock(idler).
class Dims {
public:
    Dims() = default;
    Dims(std::initializer_list<std::size_t> dims);
    explicit Dims(std::vector<std::size_t> dims);

    std::size_t size() const noexcept { return dims_.size(); }
    std::size_t operator[](std::size_t i) const { return dims_.at(i); }
    std::size_t product() const noexcept;
    const std::vector<std::size_t>& values() const noexcept { return dims_; }

    friend bool operator==(const Dims&, const Dims&) = default;

private:
    std::vector<std::size_t> dims_;
};

// Maximum entrywise modulus |a_ij - b_ij|. Shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
// Maximum entrywise |h - h^dagger|.
double hermiticity_defect(const ComplexMatrix& h);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Traces out every factor not listed in `keep`. Kept factors retain their order.
ComplexMatrix partial_trace(const ComplexMatrix& rho, const Dims& dims,
                            std::span<const std::size_t> keep);
ComplexMatrix partial_trace(const ComplexMatrix& rho, const Dims& dims,
                            std::initializer_list<std::size_t> keep);

struct HermitianEigen {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // column k is the eigenvector of values[k]
};

// Cyclic Jacobi diagonalization. Throws DimensionError above kMaxEigenDimension
// and ContractError when h is not Hermitian within kHermitianTolerance.
HermitianEigen hermitian_eigen(const ComplexMatrix& h);
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

}  // namespace qloss
