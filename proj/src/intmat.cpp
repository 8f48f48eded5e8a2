#include "raymod/intmat.hpp"

#include <algorithm>

namespace raymod {

IntMatrix IntMatrix::identity(size_t n) {
    IntMatrix I(n, n);
    for (size_t i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    check_domain(c_ == o.r_, "IntMatrix: shape mismatch in product");
    IntMatrix r(r_, o.c_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t k = 0; k < c_; ++k) {
            const BigInt& aik = at(i, k);
            if (aik == 0) continue;
            for (size_t j = 0; j < o.c_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

void IntMatrix::swap_rows(size_t i, size_t j) {
    if (i == j) return;
    for (size_t k = 0; k < c_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(size_t i, size_t j) {
    if (i == j) return;
    for (size_t k = 0; k < r_; ++k) std::swap(at(k, i), at(k, j));
}

void IntMatrix::addmul_row(size_t i, size_t j, const BigInt& k) {
    for (size_t t = 0; t < c_; ++t) at(i, t) += k * at(j, t);
}

void IntMatrix::addmul_col(size_t i, size_t j, const BigInt& k) {
    for (size_t t = 0; t < r_; ++t) at(t, i) += k * at(t, j);
}

void IntMatrix::negate_row(size_t i) {
    for (size_t t = 0; t < c_; ++t) at(i, t) = -at(i, t);
}

void IntMatrix::negate_col(size_t i) {
    for (size_t t = 0; t < r_; ++t) at(t, i) = -at(t, i);
}

SmithResult smith_normal_form(const IntMatrix& M) {
    const size_t R = M.rows(), C = M.cols();
    SmithResult res;
    res.U = IntMatrix::identity(R);
    res.V = IntMatrix::identity(C);
    IntMatrix A = M;

    size_t k = 0;
    const size_t n = std::min(R, C);
    while (k < n) {
        // find a pivot: nonzero entry of smallest absolute value in A[k.., k..]
        size_t pi = k, pj = k;
        bool found = false;
        BigInt best = 0;
        for (size_t i = k; i < R; ++i)
            for (size_t j = k; j < C; ++j) {
                const BigInt& v = A.at(i, j);
                if (v == 0) continue;
                BigInt av = abs(v);
                if (!found || av < best) {
                    found = true;
                    best = av;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        A.swap_rows(k, pi);
        res.U.swap_rows(k, pi);
        A.swap_cols(k, pj);
        res.V.swap_cols(k, pj);

        bool clean = true;
        for (size_t i = k + 1; i < R; ++i) {
            if (A.at(i, k) == 0) continue;
            BigInt q = A.at(i, k) / A.at(k, k); // C++ truncation is fine: remainder shrinks
            A.addmul_row(i, k, -q);
            res.U.addmul_row(i, k, -q);
            if (A.at(i, k) != 0) clean = false;
        }
        for (size_t j = k + 1; j < C; ++j) {
            if (A.at(k, j) == 0) continue;
            BigInt q = A.at(k, j) / A.at(k, k);
            A.addmul_col(j, k, -q);
            res.V.addmul_col(j, k, -q);
            if (A.at(k, j) != 0) clean = false;
        }
        if (!clean) continue; // re-select a smaller pivot

        // pivot must divide every remaining entry; otherwise fold one in
        bool divides_all = true;
        for (size_t i = k + 1; i < R && divides_all; ++i)
            for (size_t j = k + 1; j < C; ++j)
                if (A.at(i, j) % A.at(k, k) != 0) {
                    A.addmul_row(k, i, 1);
                    res.U.addmul_row(k, i, 1);
                    divides_all = false;
                    break;
                }
        if (!divides_all) continue;

        if (A.at(k, k) < 0) {
            A.negate_row(k);
            res.U.negate_row(k);
        }
        ++k;
    }

    res.invariant_factors.assign(n, 0);
    for (size_t i = 0; i < n; ++i) res.invariant_factors[i] = A.at(i, i);
    check_internal(res.U * M * res.V == A, "SNF: transform identity violated");
    for (size_t i = 0; i + 1 < n; ++i) {
        const BigInt& a = res.invariant_factors[i];
        const BigInt& b = res.invariant_factors[i + 1];
        check_internal(a >= 0 && (a == 0 ? b == 0 : b % a == 0), "SNF: divisibility chain violated");
    }
    return res;
}

IntMatrix integer_kernel_of_vector(const std::vector<BigInt>& w) {
    const size_t n = w.size();
    IntMatrix M(1, n);
    for (size_t j = 0; j < n; ++j) M.at(0, j) = w[j];
    SmithResult s = smith_normal_form(M);
    // U M V = [d, 0, ..., 0]; columns 1..n-1 of V span the kernel
    IntMatrix K(n - 1, n);
    for (size_t j = 1; j < n; ++j)
        for (size_t i = 0; i < n; ++i) K.at(j - 1, i) = s.V.at(i, j);
    return K;
}

std::vector<BigInt> solve_left(const IntMatrix& B, const std::vector<BigInt>& r) {
    // x * B = r  <=>  B^T x^T = r^T; use SNF of B: U B V = S
    // x B = r  =>  x U^{-1} S V^{-1} = r  =>  (x U^{-1}) S = r V
    check_domain(r.size() == B.cols(), "solve_left: size mismatch");
    SmithResult s = smith_normal_form(B);
    const size_t rank = std::min(B.rows(), B.cols());
    std::vector<BigInt> rv(B.cols(), 0);
    for (size_t j = 0; j < B.cols(); ++j) {
        BigInt acc = 0;
        for (size_t t = 0; t < B.cols(); ++t) acc += r[t] * s.V.at(t, j);
        rv[j] = acc;
    }
    std::vector<BigInt> y(B.rows(), 0);
    for (size_t i = 0; i < rank; ++i) {
        const BigInt& d = s.invariant_factors[i];
        if (d == 0) {
            check_domain(rv[i] == 0, "solve_left: no integral solution");
        } else {
            check_domain(rv[i] % d == 0, "solve_left: no integral solution");
            y[i] = rv[i] / d;
        }
    }
    for (size_t j = rank; j < B.cols(); ++j)
        check_domain(rv[j] == 0, "solve_left: no solution (rank deficiency)");
    // x = y * U
    std::vector<BigInt> out(B.rows(), 0);
    for (size_t j = 0; j < B.rows(); ++j) {
        BigInt acc = 0;
        for (size_t i = 0; i < B.rows(); ++i) acc += y[i] * s.U.at(i, j);
        out[j] = acc;
    }
    // verify exactly
    for (size_t j = 0; j < B.cols(); ++j) {
        BigInt acc = 0;
        for (size_t i = 0; i < B.rows(); ++i) acc += out[i] * B.at(i, j);
        check_domain(acc == r[j], "solve_left: verification failed");
    }
    return out;
}

std::vector<BigInt> cokernel_invariants(const IntMatrix& rels, size_t ambient_rank) {
    check_domain(rels.cols() == ambient_rank || rels.rows() == 0,
                 "cokernel_invariants: shape mismatch");
    std::vector<BigInt> diag;
    if (rels.rows() == 0) {
        diag.assign(ambient_rank, 0);
    } else {
        SmithResult s = smith_normal_form(rels);
        diag = s.invariant_factors;
        while (diag.size() < ambient_rank) diag.push_back(0);
        diag.resize(ambient_rank);
    }
    std::vector<BigInt> out;
    for (const BigInt& d : diag)
        if (d != 1) out.push_back(d);
    return out;
}

} // namespace raymod
