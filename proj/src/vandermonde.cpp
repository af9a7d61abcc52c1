#include "decor/vandermonde.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace decor {

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols != b.rows) throw std::domain_error("multiply: dimension mismatch");
    RationalMatrix out(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

Matrix to_real(const RationalMatrix& m) {
    Matrix out(m.rows, m.cols);
    for (std::size_t i = 0; i < m.data.size(); ++i) out.data[i] = m.data[i].to_double();
    return out;
}

RationalMatrix build_vandermonde(SpinValue s, NodeConvention conv) {
    const std::size_t n = static_cast<std::size_t>(s.moment_count());
    RationalMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const Rational x = moment_exact(s, conv, static_cast<int>(j));
        Rational p(1);
        for (std::size_t k = 0; k < n; ++k) {
            m.at(j, k) = p;
            p *= x;
        }
    }
    return m;
}

RationalMatrix invert_exact(const RationalMatrix& m) {
    if (m.rows != m.cols) throw std::domain_error("invert_exact: matrix not square");
    const std::size_t n = m.rows;
    RationalMatrix a = m;
    RationalMatrix inv = RationalMatrix::identity(n);
    // Row permutation applied to both; column swaps recorded for undoing.
    std::vector<std::size_t> col_of(n);
    for (std::size_t i = 0; i < n; ++i) col_of[i] = i;

    for (std::size_t step = 0; step < n; ++step) {
        // Full pivoting: any nonzero entry of the remaining block will do,
        // exact arithmetic has no conditioning to worry about.
        std::size_t pr = n, pc = n;
        for (std::size_t i = step; i < n && pr == n; ++i)
            for (std::size_t j = step; j < n; ++j)
                if (!a.at(i, j).is_zero()) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr == n) throw std::domain_error("invert_exact: singular matrix");
        if (pr != step)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(step, j), a.at(pr, j));
                std::swap(inv.at(step, j), inv.at(pr, j));
            }
        if (pc != step) {
            for (std::size_t i = 0; i < n; ++i) std::swap(a.at(i, step), a.at(i, pc));
            std::swap(col_of[step], col_of[pc]);
        }

        const Rational pivot = a.at(step, step);
        for (std::size_t j = 0; j < n; ++j) {
            a.at(step, j) /= pivot;
            inv.at(step, j) /= pivot;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == step) continue;
            const Rational factor = a.at(i, step);
            if (factor.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) -= factor * a.at(step, j);
                inv.at(i, j) -= factor * inv.at(step, j);
            }
        }
    }

    // Column swaps in A permute rows of the inverse.
    RationalMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(col_of[i], j) = inv.at(i, j);
    return out;
}

BigInt stirling_first_unsigned(unsigned n, unsigned k) {
    if (k > n) return BigInt();
    std::vector<BigInt> row(n + 1);
    row[0] = BigInt(1);  // c(0,0)
    for (unsigned m = 0; m < n; ++m) {
        // row holds c(m, .); build c(m+1, .) in place from the top down.
        for (unsigned j = std::min(m + 1, n) + 1; j-- > 0;) {
            BigInt next = BigInt(m) * row[j];
            if (j > 0) next += row[j - 1];
            row[j] = next;
        }
    }
    return row[k];
}

namespace {

/// Terminating Gauss series 2F1(1, b; c; z) for integer b <= 0.
Rational gauss_2f1_terminating(int b, int c, const Rational& z) {
    Rational sum(1);
    Rational term(1);
    for (int t = 0; t - 1 >= b; ++t) {
        // term_(t+1) = term_t * (b + t) / (c + t) * z ; (1)_t cancels t!.
        term *= Rational(b + t, c + t) * z;
        if (term.is_zero()) break;
        sum += term;
    }
    return sum;
}

}  // namespace

Rational inverse_element_closed_form(SpinValue s, int i, int j, NodeConvention conv) {
    const int n = s.moment_count();
    if (i < 1 || i > n || j < 1 || j > n)
        throw std::out_of_range("inverse_element_closed_form: index out of range");

    // s + 1 as an exact rational (half-odd spins make it non-integer).
    const Rational s_plus_1 = Rational(s.twice() + 2, 2);
    const Rational z = Rational(1) - Rational(j) / s_plus_1;

    Rational sum(0);
    for (int k = i; k <= n; ++k) {
        const BigInt choose = BigInt::binomial(static_cast<unsigned>(k),
                                               static_cast<unsigned>(i));
        if (choose.is_zero()) continue;
        Rational term = Rational::pow(-s_plus_1, k - i);
        term *= Rational(choose);
        term *= Rational(stirling_first_unsigned(static_cast<unsigned>(n + 1),
                                                 static_cast<unsigned>(k + 1)));
        term *= gauss_2f1_terminating(i - k, i + 1, z);
        sum += term;
    }

    Rational prefactor = Rational(BigInt(1), BigInt::factorial(static_cast<unsigned>(n - j)) *
                                                 BigInt::factorial(static_cast<unsigned>(j - 1)));
    if ((i + j) % 2 != 0) prefactor = -prefactor;
    Rational value = prefactor * sum;

    if (conv == NodeConvention::Normalized)
        value *= Rational::pow(Rational(s.twice(), 2), i - 1);
    return value;
}

namespace {

void check_kron_cap(std::size_t r, std::size_t c, std::size_t cap) {
    if (r != 0 && r * c / r != c)  // overflow
        throw std::length_error("kron: dimension overflow");
    if (r * c > cap)
        throw std::length_error("kron: result would have " + std::to_string(r * c) +
                                " entries, cap is " + std::to_string(cap));
}

template <typename M>
M kron_impl(const M& a, const M& b, std::size_t cap) {
    const std::size_t r = a.rows * b.rows;
    const std::size_t c = a.cols * b.cols;
    check_kron_cap(r, c, cap);
    M out(r, c);
    for (std::size_t ia = 0; ia < a.rows; ++ia)
        for (std::size_t ja = 0; ja < a.cols; ++ja) {
            const auto& av = a.at(ia, ja);
            for (std::size_t ib = 0; ib < b.rows; ++ib)
                for (std::size_t jb = 0; jb < b.cols; ++jb)
                    out.at(ia * b.rows + ib, ja * b.cols + jb) = av * b.at(ib, jb);
        }
    return out;
}

}  // namespace

RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b, std::size_t entry_cap) {
    return kron_impl(a, b, entry_cap);
}

Matrix kron(const Matrix& a, const Matrix& b, std::size_t entry_cap) {
    return kron_impl(a, b, entry_cap);
}

std::vector<double> apply_kronecker(const std::vector<Matrix>& factors,
                                    std::span<const double> v) {
    std::size_t expect = 1;
    for (const Matrix& f : factors) expect *= f.cols;
    if (expect != v.size())
        throw std::domain_error("apply_kronecker: vector length does not match factors");

    std::vector<double> cur(v.begin(), v.end());
    std::size_t left = 1;                 // product of rows of factors already applied
    std::size_t right = v.size();         // product of cols of factors not yet applied
    for (const Matrix& f : factors) {
        right /= f.cols;
        std::vector<double> next(left * f.rows * right, 0.0);
        for (std::size_t l = 0; l < left; ++l)
            for (std::size_t r = 0; r < f.rows; ++r) {
                double* dst = &next[(l * f.rows + r) * right];
                for (std::size_t c = 0; c < f.cols; ++c) {
                    const double w = f.at(r, c);
                    if (w == 0.0) continue;
                    const double* src = &cur[(l * f.cols + c) * right];
                    for (std::size_t k = 0; k < right; ++k) dst[k] += w * src[k];
                }
            }
        cur = std::move(next);
        left *= f.rows;
    }
    return cur;
}

RationalMatrix inverse_vandermonde_kron(const Legs& legs, NodeConvention conv,
                                        std::size_t entry_cap) {
    if (legs.empty()) throw std::domain_error("inverse_vandermonde_kron: no legs");
    RationalMatrix out = invert_exact(build_vandermonde(legs[0], conv));
    for (std::size_t i = 1; i < legs.size(); ++i)
        out = kron(out, invert_exact(build_vandermonde(legs[i], conv)), entry_cap);
    return out;
}

}  // namespace decor
