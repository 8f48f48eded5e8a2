#include "raymod/ext.hpp"

#include <algorithm>

namespace raymod {

// ---- RFElem ----------------------------------------------------------------

RFElem::RFElem(RFPtr field, std::vector<FqElem> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
    check_internal(c_.size() == static_cast<size_t>(field_->degree()), "RFElem: bad length");
}

bool RFElem::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const FqElem& x) { return x.is_zero(); });
}

bool RFElem::is_one() const {
    if (!c_[0].is_one()) return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](const FqElem& x) { return x.is_zero(); });
}

static void same_rf(const RFElem& a, const RFElem& b) {
    check_domain(a.field().get() == b.field().get(), "RFElem: mixed fields");
}

RFElem RFElem::operator+(const RFElem& o) const {
    same_rf(*this, o);
    std::vector<FqElem> r;
    r.reserve(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r.push_back(c_[i] + o.c_[i]);
    return RFElem(field_, std::move(r));
}

RFElem RFElem::operator-(const RFElem& o) const {
    same_rf(*this, o);
    std::vector<FqElem> r;
    r.reserve(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r.push_back(c_[i] - o.c_[i]);
    return RFElem(field_, std::move(r));
}

RFElem RFElem::operator-() const {
    std::vector<FqElem> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(-x);
    return RFElem(field_, std::move(r));
}

RFElem RFElem::operator*(const RFElem& o) const {
    same_rf(*this, o);
    const int d = field_->degree();
    if (d == 1) return RFElem(field_, {c_[0] * o.c_[0]});
    Poly a(field_->base(), c_);
    Poly b(field_->base(), o.c_);
    Poly prod = (a * b) % field_->modulus();
    std::vector<FqElem> r(d, field_->base()->zero());
    for (int i = 0; i < d; ++i) r[i] = prod.coeff(i);
    return RFElem(field_, std::move(r));
}

RFElem RFElem::operator/(const RFElem& o) const { return *this * o.inverse(); }

bool RFElem::operator==(const RFElem& o) const {
    same_rf(*this, o);
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

RFElem RFElem::inverse() const {
    check_domain(!is_zero(), "RFElem: inverse of zero");
    if (field_->degree() == 1) return RFElem(field_, {c_[0].inverse()});
    Poly a(field_->base(), c_);
    auto [g, u, v] = xgcd(a, field_->modulus());
    (void)v;
    check_internal(g.is_one(), "RFElem: modulus not coprime to element");
    Poly inv = u % field_->modulus();
    std::vector<FqElem> r(field_->degree(), field_->base()->zero());
    for (int i = 0; i < field_->degree(); ++i) r[i] = inv.coeff(i);
    return RFElem(field_, std::move(r));
}

RFElem RFElem::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RFElem r = field_->one();
    RFElem b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

RFElem RFElem::frobenius() const { return pow(field_->p()); }

RFElem RFElem::pth_root() const {
    RFElem r = *this;
    for (int i = 0; i < field_->dim_over_prime() - 1; ++i) r = r.frobenius();
    return r;
}

FqElem RFElem::trace_to_base() const {
    // sum of conjugates under x -> x^q
    const unsigned long q = field_->base()->q();
    RFElem acc = field_->zero();
    RFElem conj = *this;
    for (int i = 0; i < field_->degree(); ++i) {
        acc = acc + conj;
        conj = conj.pow(static_cast<long>(q));
    }
    for (size_t i = 1; i < acc.c_.size(); ++i)
        check_internal(acc.c_[i].is_zero(), "trace_to_base: not in base field");
    return acc.c_[0];
}

FqElem RFElem::norm_to_base() const {
    const unsigned long q = field_->base()->q();
    RFElem acc = field_->one();
    RFElem conj = *this;
    for (int i = 0; i < field_->degree(); ++i) {
        acc = acc * conj;
        conj = conj.pow(static_cast<long>(q));
    }
    for (size_t i = 1; i < acc.c_.size(); ++i)
        check_internal(acc.c_[i].is_zero(), "norm_to_base: not in base field");
    return acc.c_[0];
}

uint32_t RFElem::trace_to_prime_field() const {
    return trace_to_base().trace_to_prime_field();
}

unsigned long RFElem::index() const {
    unsigned long k = 0;
    const unsigned long q = field_->base()->q();
    for (size_t i = c_.size(); i-- > 0;) k = k * q + c_[i].index();
    return k;
}

std::string RFElem::to_string() const {
    if (field_->degree() == 1) return c_[0].to_string();
    if (is_zero()) return "0";
    if (is_one()) return "1";
    return "G^" + std::to_string(field_->dlog(*this));
}

// ---- ResidueField ----------------------------------------------------------

ResidueField::ResidueField(FqPtr base, Poly modulus)
    : base_(std::move(base)), modulus_(std::move(modulus)) {
    unsigned long s = 1;
    for (int i = 0; i < modulus_.degree(); ++i) {
        s *= base_->q();
        check_domain(s < (1ul << 31), "ResidueField: too large for desk scale");
    }
    size_ = s;
}

RFPtr ResidueField::make(FqPtr base, Poly modulus) {
    check_domain(modulus.is_monic(), "ResidueField: modulus must be monic");
    check_domain(modulus.degree() >= 1, "ResidueField: modulus must be nonconstant");
    if (modulus.degree() > 1)
        check_domain(is_irreducible(modulus), "ResidueField: modulus not irreducible");
    return RFPtr(new ResidueField(std::move(base), std::move(modulus)));
}

RFPtr ResidueField::trivial(FqPtr base) {
    Poly x = Poly::variable(base);
    return make(std::move(base), x);
}

RFElem ResidueField::zero() const {
    return RFElem(shared_from_this(), std::vector<FqElem>(degree(), base_->zero()));
}

RFElem ResidueField::one() const { return embed(base_->one()); }

RFElem ResidueField::from_int(long n) const { return embed(base_->from_int(n)); }

RFElem ResidueField::embed(const FqElem& a) const {
    std::vector<FqElem> c(degree(), base_->zero());
    c[0] = a;
    return RFElem(shared_from_this(), std::move(c));
}

RFElem ResidueField::element(std::vector<FqElem> coeffs) const {
    check_domain(coeffs.size() == static_cast<size_t>(degree()), "ResidueField::element: bad length");
    return RFElem(shared_from_this(), std::move(coeffs));
}

RFElem ResidueField::from_index(unsigned long k) const {
    std::vector<FqElem> c(degree(), base_->zero());
    for (int i = 0; i < degree(); ++i) {
        c[i] = base_->from_index(k % base_->q());
        k /= base_->q();
    }
    return RFElem(shared_from_this(), std::move(c));
}

RFElem ResidueField::theta() const {
    if (degree() == 1) {
        // x = -g(0): the root of the linear modulus
        return embed(-modulus_.coeff(0));
    }
    std::vector<FqElem> c(degree(), base_->zero());
    c[1] = base_->one();
    return RFElem(shared_from_this(), std::move(c));
}

RFElem ResidueField::multiplicative_generator() const {
    std::call_once(gen_once_, [this] {
        const unsigned long n = size_ - 1;
        for (unsigned long k = 1; k < size_; ++k) {
            RFElem cand = from_index(k);
            bool primitive = true;
            unsigned long nn = n;
            for (unsigned long l = 2; l * l <= nn; ++l) {
                if (nn % l == 0) {
                    if (cand.pow(static_cast<long>(n / l)).is_one()) { primitive = false; break; }
                    while (nn % l == 0) nn /= l;
                }
            }
            if (primitive && nn > 1 && cand.pow(static_cast<long>(n / nn)).is_one())
                primitive = false;
            if (n == 1) primitive = true;
            if (primitive) { generator_ = cand; return; }
        }
        throw InternalError("ResidueField: no primitive element found");
    });
    return generator_;
}

void ResidueField::ensure_dlog_table() const {
    multiplicative_generator();
    if (!dlog_.empty()) return;
    RFElem cur = one();
    for (unsigned long e = 0; e < size_ - 1; ++e) {
        dlog_.emplace(cur.index(), e);
        cur = cur * generator_;
    }
}

unsigned long ResidueField::dlog(const RFElem& a) const {
    check_domain(!a.is_zero(), "ResidueField::dlog of zero");
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    ensure_dlog_table();
    return dlog_.at(a.index());
}

std::vector<RFElem> ResidueField::fp_basis() const {
    std::vector<RFElem> out;
    const int m = base_->m();
    for (int i = 0; i < degree(); ++i) {
        for (int j = 0; j < m; ++j) {
            std::vector<FqElem> c(degree(), base_->zero());
            std::vector<uint32_t> bc(m, 0);
            bc[j] = 1;
            c[i] = base_->element(bc);
            out.push_back(RFElem(shared_from_this(), std::move(c)));
        }
    }
    return out;
}

RFElem ResidueField::eval_at_theta(const Poly& f) const {
    check_domain(f.field().get() == base_.get(), "eval_at_theta: wrong base field");
    RFElem th = theta();
    RFElem acc = zero();
    for (int i = f.degree(); i >= 0; --i) acc = acc * th + embed(f.coeff(i));
    return acc;
}

} // namespace raymod
