#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "raymod/errors.hpp"

namespace raymod {

class Fq;
using FqPtr = std::shared_ptr<const Fq>;

/// Element of F_{p^m}, stored as a coefficient vector over F_p of length m
/// (basis 1, y, ..., y^{m-1} where y is the class of the generator variable).
class FqElem {
public:
    FqElem() = default;
    FqElem(FqPtr field, std::vector<uint32_t> coeffs);

    const FqPtr& field() const { return field_; }
    const std::vector<uint32_t>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;

    FqElem operator+(const FqElem& o) const;
    FqElem operator-(const FqElem& o) const;
    FqElem operator-() const;
    FqElem operator*(const FqElem& o) const;
    FqElem operator/(const FqElem& o) const;
    bool operator==(const FqElem& o) const;
    bool operator!=(const FqElem& o) const { return !(*this == o); }

    FqElem inverse() const;
    FqElem pow(long e) const;
    /// x -> x^p (the absolute Frobenius).
    FqElem frobenius() const;
    FqElem pth_root() const;

    /// Tr_{F_q/F_p}: sum of the m Frobenius conjugates; lands in F_p.
    uint32_t trace_to_prime_field() const;

    /// Index in the canonical enumeration 0 .. q-1 (base-p digits).
    unsigned long index() const;

    std::string to_string() const;

private:
    FqPtr field_;
    std::vector<uint32_t> c_;
    friend class Fq;
};

/// The field F_q = F_p[y]/(h), h a fixed monic irreducible of degree m.
/// For m = 1 this is the prime field (h = y).
class Fq : public std::enable_shared_from_this<Fq> {
public:
    /// Deterministic modulus: the first monic irreducible of degree m (in
    /// base-p enumeration order of the low coefficients) whose class of y
    /// generates the unit group.  Primality of p checked by trial division.
    static FqPtr make(long p, int m = 1);
    /// Same, but with a caller-supplied modulus (verified irreducible).
    static FqPtr make(long p, int m, const std::vector<uint32_t>& modulus);

    long p() const { return p_; }
    int m() const { return m_; }
    unsigned long q() const { return q_; }
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    FqElem zero() const;
    FqElem one() const;
    FqElem from_int(long n) const;
    FqElem element(std::vector<uint32_t> coeffs) const;
    /// Inverse of FqElem::index().
    FqElem from_index(unsigned long k) const;
    /// Class of the generator variable y (for m = 1: 1).
    FqElem gen() const;

    /// Fixed generator of F_q^*: the first primitive element in index order.
    /// With the default modulus and m >= 2 this is the class of y.
    FqElem multiplicative_generator() const;
    /// Discrete log base multiplicative_generator(); a != 0.
    unsigned long dlog(const FqElem& a) const;

    /// Parses "0","1",..,"p-1" (prime field) or "g^k" / "0" (extension).
    FqElem parse(const std::string& text) const;
    std::string to_string(const FqElem& a) const;

    bool same(const Fq& o) const { return this == &o; }

private:
    Fq(long p, int m, std::vector<uint32_t> modulus);
    void ensure_dlog_table() const;

    long p_ = 0;
    int m_ = 0;
    unsigned long q_ = 0;
    std::vector<uint32_t> modulus_; // degree m, monic; coeffs of y^0..y^m

    mutable std::once_flag gen_once_;
    mutable FqElem generator_;
    mutable std::unordered_map<unsigned long, unsigned long> dlog_;

    friend class FqElem;
};

bool is_prime_desk(long p);

} // namespace raymod
