#pragma once

#include <gmpxx.h>

#include <vector>

#include "raymod/errors.hpp"

namespace raymod {

using BigInt = mpz_class;

/// Dense matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols, 0) {}

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    BigInt& at(size_t i, size_t j) { return a_[i * c_ + j]; }
    const BigInt& at(size_t i, size_t j) const { return a_[i * c_ + j]; }

    static IntMatrix identity(size_t n);
    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

    void swap_rows(size_t i, size_t j);
    void swap_cols(size_t i, size_t j);
    /// row i += k * row j
    void addmul_row(size_t i, size_t j, const BigInt& k);
    void addmul_col(size_t i, size_t j, const BigInt& k);
    void negate_row(size_t i);
    void negate_col(size_t i);

private:
    size_t r_ = 0, c_ = 0;
    std::vector<BigInt> a_;
};

/// U * M * V = diag(d_1, ..., d_k), d_i >= 0, d_i | d_{i+1}; U, V unimodular.
struct SmithResult {
    std::vector<BigInt> invariant_factors; // length min(rows, cols)
    IntMatrix U, V;
};
SmithResult smith_normal_form(const IntMatrix& M);

/// Basis of { v : v . w = 0 } as rows of the returned matrix (n-1 x n when
/// gcd(w) != 0, computed from the SNF transform; deterministic).
IntMatrix integer_kernel_of_vector(const std::vector<BigInt>& w);

/// Solve x * B = r for integer x, where B has full row rank; throws
/// DomainError when no integral solution exists.
std::vector<BigInt> solve_left(const IntMatrix& B, const std::vector<BigInt>& r);

/// Invariant factors (with 1s dropped, 0s kept) of Z^cols / row span.
std::vector<BigInt> cokernel_invariants(const IntMatrix& rels, size_t ambient_rank);

} // namespace raymod
