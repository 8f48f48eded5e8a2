#include "raymod/ratfun.hpp"

namespace raymod {

RatFun::RatFun(const Poly& num) : num_(num), den_(Poly::one(num.field())) {}

RatFun::RatFun(const Poly& num, const Poly& den) : num_(num), den_(den) { reduce(); }

void RatFun::reduce() {
    check_domain(!den_.is_zero(), "RatFun: zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::one(den_.field());
        return;
    }
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    FqElem lead = den_.lead();
    if (!lead.is_one()) {
        FqElem li = lead.inverse();
        num_ = num_ * li;
        den_ = den_ * li;
    }
}

RatFun RatFun::operator+(const RatFun& o) const {
    return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const {
    return RatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun RatFun::operator*(const RatFun& o) const {
    return RatFun(num_ * o.num_, den_ * o.den_);
}

RatFun RatFun::operator/(const RatFun& o) const {
    check_domain(!o.is_zero(), "RatFun: division by zero");
    return RatFun(num_ * o.den_, den_ * o.num_);
}

RatFun RatFun::inverse() const {
    check_domain(!is_zero(), "RatFun: inverse of zero");
    return RatFun(den_, num_);
}

RatFun RatFun::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RatFun r = RatFun::one(field());
    RatFun b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

int RatFun::val_finite(const Poly& g) const {
    check_domain(!is_zero(), "valuation of zero");
    return num_.multiplicity(g) - den_.multiplicity(g);
}

int RatFun::val_infinity() const {
    check_domain(!is_zero(), "valuation of zero");
    return den_.degree() - num_.degree();
}

RatFun RatFun::derivative() const {
    return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

std::string RatFun::to_string(const std::string& var) const {
    if (den_.is_one()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

} // namespace raymod
