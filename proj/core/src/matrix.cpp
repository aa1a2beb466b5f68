#include "qloss/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qloss/errors.hpp"

namespace qloss {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError(std::string(what) + ": shape mismatch " + std::to_string(a.rows()) +
                             "x" + std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                             "x" + std::to_string(b.cols()));
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) {
        throw DimensionError("ComplexMatrix: dimensions must be positive");
    }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows == 0 || cols == 0) {
        throw DimensionError("ComplexMatrix: dimensions must be positive");
    }
    if (data_.size() != rows * cols) {
        throw DimensionError("ComplexMatrix: expected " + std::to_string(rows * cols) +
                             " entries, got " + std::to_string(data_.size()));
    }
    check_finite();
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    if (rows_ == 0 || cols_ == 0) {
        throw DimensionError("ComplexMatrix: dimensions must be positive");
    }
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw DimensionError("ComplexMatrix: ragged initializer");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
    check_finite();
}

void ComplexMatrix::check_finite() const {
    for (const auto& z : data_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw ContractError("ComplexMatrix: non-finite entry");
        }
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    m.check_finite();
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<double> values) {
    return diagonal(std::span<const double>(values.begin(), values.size()));
}

ComplexMatrix ComplexMatrix::basis_op(std::size_t n, std::size_t i, std::size_t j) {
    if (i >= n || j >= n) {
        throw DimensionError("basis_op: index out of range");
    }
    ComplexMatrix m(n, n);
    m(i, j) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::projector(std::span<const complex> ket) {
    ComplexMatrix m(ket.size(), ket.size());
    for (std::size_t i = 0; i < ket.size(); ++i) {
        for (std::size_t j = 0; j < ket.size(); ++j) {
            m(i, j) = ket[i] * std::conj(ket[j]);
        }
    }
    m.check_finite();
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

complex ComplexMatrix::trace() const {
    if (!is_square()) {
        throw DimensionError("trace: matrix is not square");
    }
    complex t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    require_same_shape(*this, rhs, "operator+");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    require_same_shape(*this, rhs, "operator-");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(complex s) {
    for (auto& z : data_) z *= s;
    check_finite();
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("operator*: inner dimensions differ (" + std::to_string(a.cols()) +
                             " vs " + std::to_string(b.rows()) + ")");
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const complex aik = a(i, k);
            if (aik == complex{}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

Dims::Dims(std::initializer_list<std::size_t> dims) : Dims(std::vector<std::size_t>(dims)) {}

Dims::Dims(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) {
        throw DimensionError("Dims: at least one factor required");
    }
    for (auto d : dims_) {
        if (d == 0) throw DimensionError("Dims: factor dimensions must be positive");
    }
}

std::size_t Dims::product() const noexcept {
    return std::accumulate(dims_.begin(), dims_.end(), std::size_t{1}, std::multiplies<>());
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "max_abs_diff");
    double worst = 0.0;
    auto ea = a.entries();
    auto eb = b.entries();
    for (std::size_t k = 0; k < ea.size(); ++k) worst = std::max(worst, std::abs(ea[k] - eb[k]));
    return worst;
}

double hermiticity_defect(const ComplexMatrix& h) {
    if (!h.is_square()) {
        throw DimensionError("hermiticity_defect: matrix is not square");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        for (std::size_t j = i; j < h.cols(); ++j) {
            worst = std::max(worst, std::abs(h(i, j) - std::conj(h(j, i))));
        }
    }
    return worst;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t rows = a.rows() * b.rows();
    const std::size_t cols = a.cols() * b.cols();
    if (rows > kMaxDimension || cols > kMaxDimension) {
        throw DimensionError("kron: result " + std::to_string(rows) + "x" + std::to_string(cols) +
                             " exceeds maximum dimension " + std::to_string(kMaxDimension));
    }
    ComplexMatrix out(rows, cols);
    for (std::size_t i1 = 0; i1 < a.rows(); ++i1) {
        for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
            const complex s = a(i1, j1);
            if (s == complex{}) continue;
            for (std::size_t i2 = 0; i2 < b.rows(); ++i2) {
                for (std::size_t j2 = 0; j2 < b.cols(); ++j2) {
                    out(i1 * b.rows() + i2, j1 * b.cols() + j2) = s * b(i2, j2);
                }
            }
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, const Dims& dims,
                            std::span<const std::size_t> keep) {
    if (!rho.is_square()) {
        throw DimensionError("partial_trace: matrix is not square");
    }
    if (dims.product() != rho.rows()) {
        throw DimensionError("partial_trace: dims product " + std::to_string(dims.product()) +
                             " does not match matrix dimension " + std::to_string(rho.rows()));
    }
    if (keep.empty()) {
        throw UsageError("partial_trace: at least one factor must be kept");
    }

    const std::size_t n = dims.size();
    std::vector<bool> kept(n, false);
    for (auto k : keep) {
        if (k >= n) {
            throw DimensionError("partial_trace: factor index " + std::to_string(k) +
                                 " out of range");
        }
        if (kept[k]) {
            throw UsageError("partial_trace: duplicate factor index " + std::to_string(k));
        }
        kept[k] = true;
    }

    // Row-major strides of the full index.
    std::vector<std::size_t> stride(n, 1);
    for (std::size_t f = n; f-- > 1;) stride[f - 1] = stride[f] * dims[f];

    std::size_t kept_dim = 1;
    std::size_t traced_dim = 1;
    for (std::size_t f = 0; f < n; ++f) (kept[f] ? kept_dim : traced_dim) *= dims[f];

    // Map a (kept-index, traced-index) pair to a flat index into rho.
    auto offsets = [&](bool kept_side, std::size_t total) {
        std::vector<std::size_t> flat(total, 0);
        for (std::size_t idx = 0; idx < total; ++idx) {
            std::size_t rem = idx;
            std::size_t off = 0;
            for (std::size_t f = n; f-- > 0;) {
                if (kept[f] != kept_side) continue;
                off += (rem % dims[f]) * stride[f];
                rem /= dims[f];
            }
            flat[idx] = off;
        }
        return flat;
    };
    const auto kept_off = offsets(true, kept_dim);
    const auto traced_off = offsets(false, traced_dim);

    ComplexMatrix out(kept_dim, kept_dim);
    for (std::size_t i = 0; i < kept_dim; ++i) {
        for (std::size_t j = 0; j < kept_dim; ++j) {
            complex sum = 0.0;
            for (auto t : traced_off) sum += rho(kept_off[i] + t, kept_off[j] + t);
            out(i, j) = sum;
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, const Dims& dims,
                            std::initializer_list<std::size_t> keep) {
    return partial_trace(rho, dims, std::span<const std::size_t>(keep.begin(), keep.size()));
}

HermitianEigen hermitian_eigen(const ComplexMatrix& h) {
    if (!h.is_square()) {
        throw DimensionError("hermitian_eigen: matrix is not square");
    }
    const std::size_t n = h.rows();
    if (n > kMaxEigenDimension) {
        throw DimensionError("hermitian_eigen: dimension " + std::to_string(n) +
                             " exceeds cap " + std::to_string(kMaxEigenDimension));
    }
    const double defect = hermiticity_defect(h);
    if (defect > kHermitianTolerance) {
        throw ContractError("hermitian_eigen: matrix is not Hermitian (defect " +
                            std::to_string(defect) + ")");
    }

    // Work on the exactly Hermitian part.
    ComplexMatrix a = 0.5 * (h + h.adjoint());
    ComplexMatrix v = ComplexMatrix::identity(n);

    double scale = 0.0;
    for (const auto& z : a.entries()) scale += std::norm(z);
    scale = std::sqrt(scale);

    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) s += std::norm(a(i, j));
        return std::sqrt(s);
    };

    constexpr int kMaxSweeps = 100;
    for (int sweep = 0; sweep < kMaxSweeps && scale > 0.0; ++sweep) {
        if (off_norm() <= 1e-15 * scale) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const complex apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag <= 1e-300) continue;
                // G = diag(1, conj(phase)) * [[c, s], [-s, c]] zeroes a(p, q) under G^dagger A G.
                const complex phase = apq / mag;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * mag);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const complex g00 = c;
                const complex g01 = s;
                const complex g10 = -s * std::conj(phase);
                const complex g11 = c * std::conj(phase);

                for (std::size_t k = 0; k < n; ++k) {
                    const complex akp = a(k, p);
                    const complex akq = a(k, q);
                    a(k, p) = akp * g00 + akq * g10;
                    a(k, q) = akp * g01 + akq * g11;
                    const complex vkp = v(k, p);
                    const complex vkq = v(k, q);
                    v(k, p) = vkp * g00 + vkq * g10;
                    v(k, q) = vkp * g01 + vkq * g11;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const complex apk = a(p, k);
                    const complex aqk = a(q, k);
                    a(p, k) = std::conj(g00) * apk + std::conj(g10) * aqk;
                    a(q, k) = std::conj(g01) * apk + std::conj(g11) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

    HermitianEigen out{std::vector<double>(n), ComplexMatrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
    return hermitian_eigen(h).values;
}

}  // namespace qloss
