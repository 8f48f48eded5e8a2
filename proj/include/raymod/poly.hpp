#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "raymod/gf.hpp"

namespace raymod {

/// Dense univariate polynomial over F_q, coefficients low to high.
/// The zero polynomial has an empty coefficient vector and degree -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(FqPtr field) : field_(std::move(field)) {}
    Poly(FqPtr field, std::vector<FqElem> coeffs);

    static Poly zero(const FqPtr& F) { return Poly(F); }
    static Poly one(const FqPtr& F) { return constant(F->one()); }
    static Poly constant(const FqElem& c);
    static Poly variable(const FqPtr& F); // t
    /// c * t^k
    static Poly monomial(const FqElem& c, int k);

    const FqPtr& field() const { return field_; }
    const std::vector<FqElem>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    bool is_monic() const;
    FqElem coeff(int k) const;
    FqElem lead() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const FqElem& s) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }
    /// Lexicographic-by-(degree, coefficient indices) order; canonical.
    bool operator<(const Poly& o) const;

    std::pair<Poly, Poly> divmod(const Poly& d) const;
    Poly operator/(const Poly& d) const;  // exact or truncating division
    Poly operator%(const Poly& d) const;

    Poly monic() const;
    Poly derivative() const;
    FqElem eval(const FqElem& x) const;
    /// Multiplicity of the monic irreducible g in *this (0 if coprime).
    int multiplicity(const Poly& g) const;

    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    FqPtr field_;
    std::vector<FqElem> c_;
};

Poly gcd(Poly a, Poly b);
/// g = gcd(a,b) = u*a + v*b
std::tuple<Poly, Poly, Poly> xgcd(const Poly& a, const Poly& b);
Poly pow_mod(const Poly& base, unsigned long e, const Poly& mod);

bool is_irreducible(const Poly& f);

/// Distinct-degree + equal-degree factorization; deterministic for a fixed
/// input.  Factors are monic, sorted canonically.  Zero input is a domain
/// error; the unit content is returned alongside.
struct Factorization {
    FqElem unit;
    std::vector<std::pair<Poly, int>> factors;
};
Factorization factor(const Poly& f);

/// All monic polynomials of degree d, in canonical (coefficient-index) order.
std::vector<Poly> all_monic(const FqPtr& F, int d);
/// All monic irreducibles of degree d, canonical order.
std::vector<Poly> monic_irreducibles(const FqPtr& F, int d);

} // namespace raymod
