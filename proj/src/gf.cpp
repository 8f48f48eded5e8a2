#include "raymod/gf.hpp"

#include <algorithm>

#include "raymod/poly.hpp"

namespace raymod {

bool is_prime_desk(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// ---- FqElem ----------------------------------------------------------------

FqElem::FqElem(FqPtr field, std::vector<uint32_t> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
    check_internal(c_.size() == static_cast<size_t>(field_->m()), "FqElem: bad coefficient length");
}

bool FqElem::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](uint32_t x) { return x == 0; });
}

bool FqElem::is_one() const {
    if (c_[0] != 1) return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](uint32_t x) { return x == 0; });
}

static void check_same_field(const FqElem& a, const FqElem& b) {
    check_domain(a.field().get() == b.field().get(), "FqElem: mixed fields");
}

FqElem FqElem::operator+(const FqElem& o) const {
    check_same_field(*this, o);
    const long p = field_->p();
    std::vector<uint32_t> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = (c_[i] + o.c_[i]) % p;
    return FqElem(field_, std::move(r));
}

FqElem FqElem::operator-(const FqElem& o) const {
    check_same_field(*this, o);
    const long p = field_->p();
    std::vector<uint32_t> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = (c_[i] + p - o.c_[i]) % p;
    return FqElem(field_, std::move(r));
}

FqElem FqElem::operator-() const {
    const long p = field_->p();
    std::vector<uint32_t> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = (p - c_[i]) % p;
    return FqElem(field_, std::move(r));
}

FqElem FqElem::operator*(const FqElem& o) const {
    check_same_field(*this, o);
    const long p = field_->p();
    const int m = field_->m();
    if (m == 1) return FqElem(field_, {static_cast<uint32_t>((uint64_t(c_[0]) * o.c_[0]) % p)});
    // schoolbook product then reduction by the monic modulus
    std::vector<uint64_t> prod(2 * m - 1, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + uint64_t(c_[i]) * o.c_[j]) % p;
    const auto& mod = field_->modulus();
    for (int d = 2 * m - 2; d >= m; --d) {
        uint64_t lead = prod[d] % p;
        if (lead == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < m; ++i) {
            // x^d = -mod[i] x^{d-m+i} (+ ... ), modulus monic
            uint64_t sub = (lead * mod[i]) % p;
            prod[d - m + i] = (prod[d - m + i] + p - sub) % p;
        }
    }
    std::vector<uint32_t> r(m);
    for (int i = 0; i < m; ++i) r[i] = static_cast<uint32_t>(prod[i] % p);
    return FqElem(field_, std::move(r));
}

FqElem FqElem::operator/(const FqElem& o) const { return *this * o.inverse(); }

bool FqElem::operator==(const FqElem& o) const {
    check_same_field(*this, o);
    return c_ == o.c_;
}

FqElem FqElem::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FqElem r = field_->one();
    FqElem b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

FqElem FqElem::inverse() const {
    check_domain(!is_zero(), "FqElem: inverse of zero");
    // a^(q-2)
    return pow(static_cast<long>(field_->q() - 2));
}

FqElem FqElem::frobenius() const { return pow(field_->p()); }

FqElem FqElem::pth_root() const {
    // x^(p^{m-1}) since x^(p^m) = x
    FqElem r = *this;
    for (int i = 0; i < field_->m() - 1; ++i) r = r.frobenius();
    return r;
}

uint32_t FqElem::trace_to_prime_field() const {
    FqElem acc = field_->zero();
    FqElem conj = *this;
    for (int i = 0; i < field_->m(); ++i) {
        acc = acc + conj;
        conj = conj.frobenius();
    }
    check_internal(std::all_of(acc.c_.begin() + 1, acc.c_.end(), [](uint32_t x) { return x == 0; }),
                   "trace not in prime field");
    return acc.c_[0];
}

unsigned long FqElem::index() const {
    unsigned long k = 0;
    for (int i = field_->m() - 1; i >= 0; --i) k = k * field_->p() + c_[i];
    return k;
}

std::string FqElem::to_string() const { return field_->to_string(*this); }

// ---- Fq --------------------------------------------------------------------

Fq::Fq(long p, int m, std::vector<uint32_t> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
    unsigned long q = 1;
    for (int i = 0; i < m; ++i) {
        q *= static_cast<unsigned long>(p);
        check_domain(q < (1ul << 31), "Fq: field too large for desk scale");
    }
    q_ = q;
}

FqElem Fq::zero() const { return FqElem(shared_from_this(), std::vector<uint32_t>(m_, 0)); }

FqElem Fq::one() const { return from_int(1); }

FqElem Fq::from_int(long n) const {
    long v = n % p_;
    if (v < 0) v += p_;
    std::vector<uint32_t> c(m_, 0);
    c[0] = static_cast<uint32_t>(v);
    return FqElem(shared_from_this(), std::move(c));
}

FqElem Fq::element(std::vector<uint32_t> coeffs) const {
    check_domain(coeffs.size() == static_cast<size_t>(m_), "Fq::element: bad length");
    for (auto& x : coeffs) x %= p_;
    return FqElem(shared_from_this(), std::move(coeffs));
}

FqElem Fq::from_index(unsigned long k) const {
    std::vector<uint32_t> c(m_, 0);
    for (int i = 0; i < m_; ++i) {
        c[i] = static_cast<uint32_t>(k % p_);
        k /= p_;
    }
    return FqElem(shared_from_this(), std::move(c));
}

FqElem Fq::gen() const {
    if (m_ == 1) return one();
    std::vector<uint32_t> c(m_, 0);
    c[1] = 1;
    return FqElem(shared_from_this(), std::move(c));
}

FqElem Fq::multiplicative_generator() const {
    std::call_once(gen_once_, [this] {
        for (unsigned long k = 1; k < q_; ++k) {
            FqElem cand = from_index(k);
            // order test: cand^((q-1)/l) != 1 for every prime l | q-1
            unsigned long n = q_ - 1;
            bool primitive = true;
            unsigned long nn = n;
            for (unsigned long l = 2; l * l <= nn; ++l) {
                if (nn % l == 0) {
                    if (cand.pow(static_cast<long>(n / l)).is_one()) { primitive = false; break; }
                    while (nn % l == 0) nn /= l;
                }
            }
            if (primitive && nn > 1 && n > 1 && cand.pow(static_cast<long>(n / nn)).is_one())
                primitive = false;
            if (n == 1) primitive = true; // F_2: unit group trivial, generator 1
            if (primitive) { generator_ = cand; return; }
        }
        throw InternalError("Fq: no primitive element found");
    });
    return generator_;
}

void Fq::ensure_dlog_table() const {
    multiplicative_generator();
    if (!dlog_.empty()) return;
    FqElem g = generator_;
    FqElem cur = one();
    for (unsigned long e = 0; e < q_ - 1; ++e) {
        dlog_.emplace(cur.index(), e);
        cur = cur * g;
    }
}

unsigned long Fq::dlog(const FqElem& a) const {
    check_domain(!a.is_zero(), "dlog of zero");
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    ensure_dlog_table();
    return dlog_.at(a.index());
}

FqElem Fq::parse(const std::string& text) const {
    if (m_ == 1) {
        size_t pos = 0;
        long v = std::stol(text, &pos);
        check_domain(pos == text.size(), "Fq::parse: trailing characters in '" + text + "'");
        return from_int(v);
    }
    if (text == "0") return zero();
    if (text == "1") return one();
    if (text == "g") return multiplicative_generator();
    if (text.rfind("g^", 0) == 0) {
        size_t pos = 0;
        long e = std::stol(text.substr(2), &pos);
        check_domain(pos == text.size() - 2, "Fq::parse: bad exponent in '" + text + "'");
        return multiplicative_generator().pow(e);
    }
    throw DomainError("Fq::parse: cannot parse '" + text + "' (use 0 or g^k)");
}

std::string Fq::to_string(const FqElem& a) const {
    if (m_ == 1) return std::to_string(a.coeffs()[0]);
    if (a.is_zero()) return "0";
    if (a.is_one()) return "1";
    unsigned long e = dlog(a);
    if (e == 1) return "g";
    return "g^" + std::to_string(e);
}

FqPtr Fq::make(long p, int m, const std::vector<uint32_t>& modulus) {
    check_domain(is_prime_desk(p), "Fq: p = " + std::to_string(p) + " is not prime");
    check_domain(m >= 1, "Fq: m must be >= 1");
    check_domain(modulus.size() == static_cast<size_t>(m) + 1 && modulus[m] == 1,
                 "Fq: modulus must be monic of degree m");
    auto F = FqPtr(new Fq(p, m, modulus));
    if (m >= 2) {
        // verify irreducibility over F_p by factoring
        auto Fp = Fq::make(p, 1);
        std::vector<FqElem> pc;
        pc.reserve(modulus.size());
        for (uint32_t x : modulus) pc.push_back(Fp->from_int(static_cast<long>(x % p)));
        Poly h(Fp, pc);
        check_domain(is_irreducible(h), "Fq: modulus polynomial is not irreducible");
    }
    return F;
}

FqPtr Fq::make(long p, int m) {
    check_domain(is_prime_desk(p), "Fq: p = " + std::to_string(p) + " is not prime");
    check_domain(m >= 1, "Fq: m must be >= 1");
    if (m == 1) {
        std::vector<uint32_t> mod = {0, 1}; // y
        return FqPtr(new Fq(p, 1, std::move(mod)));
    }
    auto Fp = Fq::make(p, 1);
    unsigned long total = 1;
    for (int i = 0; i < m; ++i) total *= static_cast<unsigned long>(p);
    for (unsigned long k = 0; k < total; ++k) {
        std::vector<uint32_t> mod(m + 1, 0);
        unsigned long kk = k;
        for (int i = 0; i < m; ++i) {
            mod[i] = static_cast<uint32_t>(kk % p);
            kk /= p;
        }
        mod[m] = 1;
        std::vector<FqElem> pc;
        pc.reserve(mod.size());
        for (uint32_t x : mod) pc.push_back(Fp->from_int(static_cast<long>(x)));
        if (!is_irreducible(Poly(Fp, pc))) continue;
        auto F = FqPtr(new Fq(p, m, mod));
        // require the class of y to generate the unit group
        FqElem y = F->gen();
        unsigned long n = F->q() - 1;
        bool primitive = true;
        unsigned long nn = n;
        for (unsigned long l = 2; l * l <= nn; ++l) {
            if (nn % l == 0) {
                if (y.pow(static_cast<long>(n / l)).is_one()) { primitive = false; break; }
                while (nn % l == 0) nn /= l;
            }
        }
        if (primitive && nn > 1 && y.pow(static_cast<long>(n / nn)).is_one()) primitive = false;
        if (primitive) return F;
    }
    throw InternalError("Fq: no primitive modulus found");
}

} // namespace raymod
