#pragma once

#include "raymod/poly.hpp"

namespace raymod {

/// Reduced rational function num/den over F_q, den monic, gcd(num, den) = 1.
/// The canonical form is unique.
class RatFun {
public:
    RatFun() = default;
    explicit RatFun(const Poly& num);
    RatFun(const Poly& num, const Poly& den);

    static RatFun zero(const FqPtr& F) { return RatFun(Poly::zero(F)); }
    static RatFun one(const FqPtr& F) { return RatFun(Poly::one(F)); }
    static RatFun variable(const FqPtr& F) { return RatFun(Poly::variable(F)); }
    static RatFun constant(const FqElem& c) { return RatFun(Poly::constant(c)); }

    const FqPtr& field() const { return num_.field(); }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const;
    RatFun operator-() const;
    RatFun operator*(const RatFun& o) const;
    RatFun operator/(const RatFun& o) const;
    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    RatFun inverse() const;
    RatFun pow(long e) const;
    /// Valuation at the finite place given by a monic irreducible g.
    int val_finite(const Poly& g) const;
    /// Valuation at infinity: deg den - deg num.
    int val_infinity() const;
    /// d/dt.
    RatFun derivative() const;

    std::string to_string(const std::string& var = "t") const;

private:
    void reduce();
    Poly num_, den_;
};

} // namespace raymod
