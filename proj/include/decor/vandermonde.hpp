#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "decor/rational.hpp"
#include "decor/spin.hpp"

namespace decor {

/// Dense matrix of exact rationals.
struct RationalMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rational> data;

    RationalMatrix() = default;
    RationalMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    Rational& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    static RationalMatrix identity(std::size_t n);
    bool operator==(const RationalMatrix& rhs) const = default;
};

/// Dense matrix of doubles (row-major).
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);
Matrix to_real(const RationalMatrix& m);

inline constexpr std::size_t kKroneckerEntryCap = 1'000'000;

/// Vandermonde matrix on the equidistant moments of spin s:
/// entry (j, k) = x_j^(k-1), nodes ascending, size (2s+1) x (2s+1).
RationalMatrix build_vandermonde(SpinValue s, NodeConvention conv);

/// Exact inverse by Gauss-Jordan with full pivoting over the rationals.
/// Throws std::domain_error for non-square or singular input.
RationalMatrix invert_exact(const RationalMatrix& m);

/// Unsigned Stirling number of the first kind, via the recurrence
/// c(n+1, k) = n c(n, k) + c(n, k-1), c(0, 0) = 1. Zero when k > n.
BigInt stirling_first_unsigned(unsigned n, unsigned k);

/// Closed-form element (i, j), 1-based, of the inverse Vandermonde matrix.
///
/// Implements the Stirling-number expansion of the inverse for equidistant
/// nodes. The hypergeometric factor is read as the terminating Gauss series
/// 2F1(1, i-k; i+1; z) with z = 1 - j/(s+1); the series ends because i-k <= 0
/// wherever binomial(k, i) is nonzero. For normalized nodes the element is
/// s^(i-1) times the physical one (the matrix columns scale by s^(k-1), which
/// is also the only reading of the normalized-node formula that matches the
/// exact inverse; see invert_exact tests).
Rational inverse_element_closed_form(SpinValue s, int i, int j, NodeConvention conv);

/// Kronecker product. Throws std::length_error when the result would exceed
/// entry_cap entries.
RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b,
                    std::size_t entry_cap = kKroneckerEntryCap);
Matrix kron(const Matrix& a, const Matrix& b, std::size_t entry_cap = kKroneckerEntryCap);

/// (A_1 (x) A_2 (x) ... (x) A_m) * v without forming the product matrix.
/// v is indexed with factor 1 slowest, matching linear_index.
std::vector<double> apply_kronecker(const std::vector<Matrix>& factors,
                                    std::span<const double> v);

/// Exact Kronecker product of the inverse Vandermonde matrices of the given
/// legs, the linear map taking log-weight vectors to coupling vectors.
RationalMatrix inverse_vandermonde_kron(const Legs& legs, NodeConvention conv,
                                        std::size_t entry_cap = kKroneckerEntryCap);

}  // namespace decor
