#pragma once

#include <limits>
#include <string>
#include <vector>

#include "raymod/errors.hpp"
#include "raymod/ring_traits.hpp"

namespace raymod {

/// Truncated Laurent series over a coefficient ring C.
///
/// Stored as a coefficient window [start, start+size) together with a
/// certified end: coefficients of t^e are known exactly for all e < end.
/// end == kExact means the series is exact (a Laurent polynomial).
/// Precision propagates pessimistically; reading a coefficient at or beyond
/// `end` raises PrecisionError instead of returning 0.
template <class C>
class Laurent {
public:
    static constexpr long kExact = std::numeric_limits<long>::max() / 4;

    Laurent() = default;

    static Laurent exact(const C& proto, long start, std::vector<C> coeffs) {
        return build(proto, start, std::move(coeffs), kExact);
    }
    static Laurent with_end(const C& proto, long start, std::vector<C> coeffs, long end) {
        return build(proto, start, std::move(coeffs), end);
    }
    static Laurent zero(const C& proto) { return exact(proto, 0, {}); }
    static Laurent zero_to(const C& proto, long end) { return with_end(proto, end, {}, end); }
    static Laurent monomial(const C& c, long e) { return exact(c, e, {c}); }
    static Laurent one(const C& proto) { return monomial(ring_from_int(proto, 1), 0); }

    const C& proto() const { return zero_; }
    bool exact_p() const { return end_ == kExact; }
    long end() const { return end_; }
    long window_start() const { return start_; }
    size_t window_size() const { return c_.size(); }

    bool is_exactly_zero() const { return c_.empty() && exact_p(); }
    bool is_zero_to_precision() const { return c_.empty(); }

    long valuation() const {
        if (!c_.empty()) return start_;
        if (exact_p()) throw DomainError("Laurent: valuation of zero");
        throw PrecisionError("Laurent: valuation unknown (zero to precision " +
                             std::to_string(end_) + ")");
    }
    /// Valuation when the window is nonempty, else the certified lower bound.
    long val_lower_bound() const {
        if (!c_.empty()) return start_;
        return exact_p() ? kExact : end_;
    }

    C coeff(long e) const {
        if (e >= end_) throw PrecisionError("Laurent: coefficient t^" + std::to_string(e) +
                                            " beyond certified end " + std::to_string(end_));
        return coeff_raw(e);
    }

    Laurent operator+(const Laurent& o) const {
        long e = std::min(end_, o.end_);
        long lo = std::min(stored_start(), o.stored_start());
        long hi = std::min(std::max(stored_stop(), o.stored_stop()), e);
        std::vector<C> r;
        for (long k = lo; k < hi; ++k) r.push_back(coeff_raw(k) + o.coeff_raw(k));
        return build(zero_, lo, std::move(r), e);
    }
    Laurent operator-(const Laurent& o) const { return *this + o.negated(); }
    Laurent negated() const {
        std::vector<C> r;
        r.reserve(c_.size());
        for (const auto& x : c_) r.push_back(-x);
        return build(zero_, start_, std::move(r), end_);
    }

    Laurent operator*(const Laurent& o) const {
        if (is_exactly_zero() || o.is_exactly_zero()) return zero(zero_);
        long e = std::min(sat_add(val_lower_bound(), o.end_), sat_add(o.val_lower_bound(), end_));
        long lo = sat_add(val_lower_bound(), o.val_lower_bound());
        if (lo >= e && e != kExact) return zero_to(zero_, e);
        long hi = (e == kExact) ? stored_stop() + o.stored_stop() - lo - 1 + lo : e;
        if (c_.empty() || o.c_.empty()) return build(zero_, e, {}, e);
        std::vector<C> r(hi - lo, zero_);
        for (size_t i = 0; i < c_.size(); ++i) {
            if (exact_p() && ring_is_zero(c_[i])) continue;
            for (size_t j = 0; j < o.c_.size(); ++j) {
                long k = start_ + static_cast<long>(i) + o.start_ + static_cast<long>(j);
                if (k >= lo && k < hi) r[k - lo] = r[k - lo] + c_[i] * o.c_[j];
            }
        }
        return build(zero_, lo, std::move(r), e);
    }

    /// Multiplicative inverse; the leading coefficient must be certainly
    /// nonzero and invertible.  `terms` sets output length for exact input.
    Laurent inverse(long terms = -1) const {
        if (is_exactly_zero()) throw DomainError("Laurent: inverse of zero");
        if (c_.empty()) throw PrecisionError("Laurent: inverse of zero-to-precision series");
        long T = terms;
        if (T < 0) {
            if (exact_p()) throw DomainError("Laurent: inverse of exact series needs explicit precision");
            T = end_ - start_;
        }
        check_domain(T >= 1, "Laurent: inverse needs at least one term");
        C lead_inv = c_[0].inverse();
        std::vector<C> r(T, zero_);
        r[0] = lead_inv;
        for (long k = 1; k < T; ++k) {
            C acc = zero_;
            for (long i = 1; i <= k; ++i) {
                C ai = (i < static_cast<long>(c_.size())) ? c_[i] : zero_;
                acc = acc + ai * r[k - i];
            }
            r[k] = -(lead_inv * acc);
        }
        return build(zero_, -start_, std::move(r), sat_add(-start_, T));
    }

    Laurent shifted(long k) const {
        return build(zero_, start_ + k, c_, sat_add(end_, k));
    }

    Laurent truncated(long new_end) const {
        if (new_end >= end_) return *this;
        std::vector<C> r = c_;
        while (!r.empty() && start_ + static_cast<long>(r.size()) > new_end) r.pop_back();
        return build(zero_, start_, std::move(r), new_end);
    }

    /// d/dt
    Laurent derivative() const {
        std::vector<C> r;
        r.reserve(c_.size());
        for (size_t i = 0; i < c_.size(); ++i)
            r.push_back(c_[i] * ring_from_int(zero_, start_ + static_cast<long>(i)));
        long e = exact_p() ? kExact : end_ - 1;
        long s = c_.empty() ? (exact_p() ? 0 : e) : start_ - 1;
        return build(zero_, s, std::move(r), e);
    }

    /// Frobenius power for char-p coefficient rings; exact in exponents.
    Laurent pth_power() const {
        long p = ring_char(zero_);
        check_domain(p > 0, "Laurent::pth_power needs positive characteristic");
        long e = exact_p() ? kExact : sat_add((end_ - 1) * p, 1);
        if (c_.empty()) return build(zero_, e, {}, e);
        std::vector<C> r((c_.size() - 1) * p + 1, zero_);
        for (size_t i = 0; i < c_.size(); ++i) r[i * p] = ring_pow(c_[i], p);
        return build(zero_, start_ * p, std::move(r), e);
    }

    template <class F>
    auto map_coeffs(const F& f) const {
        using D = decltype(f(std::declval<C>()));
        std::vector<D> r;
        r.reserve(c_.size());
        for (const auto& x : c_) r.push_back(f(x));
        return Laurent<D>::with_end(f(zero_), start_, std::move(r), end_);
    }

    /// Coefficients agree everywhere both sides are certified.
    bool agrees_with(const Laurent& o) const {
        long e = std::min(end_, o.end_);
        long lo = std::min(stored_start(), o.stored_start());
        long hi = std::min(std::max(stored_stop(), o.stored_stop()), e);
        for (long k = lo; k < hi; ++k)
            if (!(coeff_raw(k) == o.coeff_raw(k))) return false;
        return true;
    }
    bool operator==(const Laurent& o) const { return agrees_with(o); }

    std::string to_string(const std::string& var = "u") const {
        std::string s;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (ring_is_zero(c_[i])) continue;
            if (!s.empty()) s += " + ";
            long e = start_ + static_cast<long>(i);
            s += "(" + coeff_str(c_[i]) + ")";
            if (e != 0) s += "*" + var + "^" + std::to_string(e);
        }
        if (s.empty()) s = "0";
        if (!exact_p()) s += " + O(" + var + "^" + std::to_string(end_) + ")";
        return s;
    }

private:
    static std::string coeff_str(const C& c) {
        if constexpr (requires { c.to_string(); }) return c.to_string();
        else return "?";
    }
    static long sat_add(long a, long b) {
        if (a >= kExact || b >= kExact) return kExact;
        return a + b;
    }
    long stored_start() const { return c_.empty() ? (exact_p() ? 0 : end_) : start_; }
    long stored_stop() const { return stored_start() + static_cast<long>(c_.size()); }
    C coeff_raw(long e) const {
        if (e < start_ || e >= start_ + static_cast<long>(c_.size())) return zero_;
        return c_[e - start_];
    }

    static Laurent build(const C& proto, long start, std::vector<C> coeffs, long end) {
        Laurent s;
        s.zero_ = ring_zero(proto);
        s.start_ = start;
        s.c_ = std::move(coeffs);
        s.end_ = end;
        // trim leading zeros
        size_t drop = 0;
        while (drop < s.c_.size() && ring_is_zero(s.c_[drop])) ++drop;
        if (drop > 0) {
            s.c_.erase(s.c_.begin(), s.c_.begin() + drop);
            s.start_ += static_cast<long>(drop);
        }
        if (s.end_ == kExact) {
            while (!s.c_.empty() && ring_is_zero(s.c_.back())) s.c_.pop_back();
            if (s.c_.empty()) s.start_ = 0;
        } else {
            if (s.c_.empty()) {
                s.start_ = s.end_;
            } else {
                check_internal(s.start_ < s.end_, "Laurent: window exceeds certified end");
                // keep the full certified window [start, end)
                if (s.start_ + static_cast<long>(s.c_.size()) > s.end_)
                    s.c_.resize(s.end_ - s.start_);
                else
                    s.c_.resize(s.end_ - s.start_, s.zero_);
            }
        }
        return s;
    }

    C zero_{};
    long start_ = 0;
    std::vector<C> c_;
    long end_ = kExact;
};

// ring traits so Laurent series can appear as Witt components
template <class C>
long ring_char(const Laurent<C>& s) { return ring_char(s.proto()); }
template <class C>
Laurent<C> ring_from_int(const Laurent<C>& s, const mpz_class& n) {
    C c = ring_from_int(s.proto(), n);
    if (ring_is_zero(c)) return Laurent<C>::zero(s.proto());
    return Laurent<C>::monomial(c, 0);
}
template <class C>
Laurent<C> ring_zero(const Laurent<C>& s) { return Laurent<C>::zero(s.proto()); }
template <class C>
bool ring_is_zero(const Laurent<C>& s) { return s.is_exactly_zero(); }

} // namespace raymod
