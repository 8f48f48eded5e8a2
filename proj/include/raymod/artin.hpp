#pragma once

#include "raymod/ext.hpp"

namespace raymod {

/// Element of k(q)[eps]/(eps^N), the base extension to a residue field of an
/// Artin test ring k[eps]/(eps^N).  Stored as eps-coefficients 0..N-1.
class ArtinElem {
public:
    ArtinElem() = default;
    ArtinElem(RFPtr field, int n, std::vector<RFElem> coeffs)
        : field_(std::move(field)), n_(n), c_(std::move(coeffs)) {
        check_internal(c_.size() == static_cast<size_t>(n_), "ArtinElem: bad length");
    }

    static ArtinElem scalar(const RFElem& a, int n) {
        std::vector<RFElem> c(n, a.field()->zero());
        c[0] = a;
        return ArtinElem(a.field(), n, std::move(c));
    }
    static ArtinElem eps_power(const RFPtr& F, int n, int k, const RFElem& a) {
        check_domain(k >= 0 && k < n, "ArtinElem: eps power out of range");
        std::vector<RFElem> c(n, F->zero());
        c[k] = a;
        return ArtinElem(F, n, std::move(c));
    }

    const RFPtr& field() const { return field_; }
    int n() const { return n_; }
    const std::vector<RFElem>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }
    bool is_one() const {
        if (!c_[0].is_one()) return false;
        for (size_t i = 1; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return false;
        return true;
    }
    bool is_nilpotent() const { return c_[0].is_zero(); }
    bool is_unit() const { return !c_[0].is_zero(); }
    /// Smallest k with nonzero eps^k coefficient; n for zero.
    int eps_degree() const {
        for (int i = 0; i < n_; ++i)
            if (!c_[i].is_zero()) return i;
        return n_;
    }

    ArtinElem operator+(const ArtinElem& o) const {
        same(o);
        std::vector<RFElem> r;
        r.reserve(n_);
        for (int i = 0; i < n_; ++i) r.push_back(c_[i] + o.c_[i]);
        return ArtinElem(field_, n_, std::move(r));
    }
    ArtinElem operator-(const ArtinElem& o) const {
        same(o);
        std::vector<RFElem> r;
        r.reserve(n_);
        for (int i = 0; i < n_; ++i) r.push_back(c_[i] - o.c_[i]);
        return ArtinElem(field_, n_, std::move(r));
    }
    ArtinElem operator-() const {
        std::vector<RFElem> r;
        r.reserve(n_);
        for (const auto& x : c_) r.push_back(-x);
        return ArtinElem(field_, n_, std::move(r));
    }
    ArtinElem operator*(const ArtinElem& o) const {
        same(o);
        std::vector<RFElem> r(n_, field_->zero());
        for (int i = 0; i < n_; ++i) {
            if (c_[i].is_zero()) continue;
            for (int j = 0; j + i < n_; ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
        }
        return ArtinElem(field_, n_, std::move(r));
    }
    bool operator==(const ArtinElem& o) const {
        same(o);
        for (int i = 0; i < n_; ++i)
            if (c_[i] != o.c_[i]) return false;
        return true;
    }
    bool operator!=(const ArtinElem& o) const { return !(*this == o); }

    ArtinElem inverse() const {
        check_domain(is_unit(), "ArtinElem: inverse of non-unit");
        // (u(1+x))^{-1} = u^{-1}(1 - x + x^2 - ...), x nilpotent
        RFElem u = c_[0];
        ArtinElem rest = *this - scalar(u, n_);
        ArtinElem x = rest * scalar(u.inverse(), n_);
        ArtinElem acc = scalar(field_->one(), n_);
        ArtinElem pw = scalar(field_->one(), n_);
        for (int k = 1; k < n_; ++k) {
            pw = pw * x;
            if (pw.is_zero()) break;
            acc = (k % 2 == 1) ? acc - pw : acc + pw;
        }
        return acc * scalar(u.inverse(), n_);
    }

    ArtinElem pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        ArtinElem r = scalar(field_->one(), n_);
        ArtinElem b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    std::string to_string() const {
        std::string s;
        for (int i = 0; i < n_; ++i) {
            if (c_[i].is_zero()) continue;
            if (!s.empty()) s += "+";
            if (i == 0) {
                s += c_[i].to_string();
            } else {
                if (!c_[i].is_one()) s += c_[i].to_string() + "*";
                s += "e";
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s.empty() ? "0" : s;
    }

private:
    void same(const ArtinElem& o) const {
        check_domain(field_.get() == o.field_.get() && n_ == o.n_, "ArtinElem: mixed rings");
    }
    RFPtr field_;
    int n_ = 0;
    std::vector<RFElem> c_;
};

} // namespace raymod
