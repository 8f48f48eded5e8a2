#pragma once

#include "raymod/poly.hpp"

namespace raymod {

class ResidueField;
using RFPtr = std::shared_ptr<const ResidueField>;

/// Element of k(q) = F_q[x]/(g), stored as a coefficient vector over F_q of
/// length deg g (basis 1, x, ..., x^{d-1}).
class RFElem {
public:
    RFElem() = default;
    RFElem(RFPtr field, std::vector<FqElem> coeffs);

    const RFPtr& field() const { return field_; }
    const std::vector<FqElem>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;

    RFElem operator+(const RFElem& o) const;
    RFElem operator-(const RFElem& o) const;
    RFElem operator-() const;
    RFElem operator*(const RFElem& o) const;
    RFElem operator/(const RFElem& o) const;
    bool operator==(const RFElem& o) const;
    bool operator!=(const RFElem& o) const { return !(*this == o); }

    RFElem inverse() const;
    RFElem pow(long e) const;
    RFElem frobenius() const; // x -> x^p
    RFElem pth_root() const;

    FqElem trace_to_base() const;   // Tr_{k(q)/F_q}
    FqElem norm_to_base() const;    // N_{k(q)/F_q}
    uint32_t trace_to_prime_field() const;

    unsigned long index() const;
    std::string to_string() const;

private:
    RFPtr field_;
    std::vector<FqElem> c_;
    friend class ResidueField;
};

/// The residue field at a place: k(q) = F_q[x]/(g), g monic irreducible of
/// degree d over the base F_q.  d = 1 covers rational places and infinity.
class ResidueField : public std::enable_shared_from_this<ResidueField> {
public:
    static RFPtr make(FqPtr base, Poly modulus);
    /// Trivial extension (d = 1, modulus x), used for deg-1 places.
    static RFPtr trivial(FqPtr base);

    const FqPtr& base() const { return base_; }
    const Poly& modulus() const { return modulus_; }
    int degree() const { return modulus_.degree(); }
    long p() const { return base_->p(); }
    unsigned long size() const { return size_; }
    /// [k(q) : F_p]
    int dim_over_prime() const { return base_->m() * degree(); }

    RFElem zero() const;
    RFElem one() const;
    RFElem from_int(long n) const;
    RFElem embed(const FqElem& a) const;
    RFElem element(std::vector<FqElem> coeffs) const;
    RFElem from_index(unsigned long k) const;
    /// The class of x (a root of the place polynomial).
    RFElem theta() const;

    RFElem multiplicative_generator() const;
    unsigned long dlog(const RFElem& a) const;
    /// F_p-basis of k(q): products of base-field and extension basis vectors.
    std::vector<RFElem> fp_basis() const;

    /// Evaluate a polynomial over F_q at theta.
    RFElem eval_at_theta(const Poly& f) const;

private:
    ResidueField(FqPtr base, Poly modulus);
    void ensure_dlog_table() const;

    FqPtr base_;
    Poly modulus_;
    unsigned long size_ = 0;

    mutable std::once_flag gen_once_;
    mutable RFElem generator_;
    mutable std::unordered_map<unsigned long, unsigned long> dlog_;
};

} // namespace raymod
