#include "raymod/poly.hpp"

#include <algorithm>
#include <random>

namespace raymod {

Poly::Poly(FqPtr field, std::vector<FqElem> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
    trim();
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const FqElem& c) {
    Poly r(c.field());
    if (!c.is_zero()) r.c_ = {c};
    return r;
}

Poly Poly::variable(const FqPtr& F) {
    Poly r(F);
    r.c_ = {F->zero(), F->one()};
    return r;
}

Poly Poly::monomial(const FqElem& c, int k) {
    Poly r(c.field());
    if (c.is_zero()) return r;
    r.c_.assign(k + 1, c.field()->zero());
    r.c_[k] = c;
    return r;
}

bool Poly::is_one() const { return c_.size() == 1 && c_[0].is_one(); }
bool Poly::is_monic() const { return !c_.empty() && c_.back().is_one(); }

FqElem Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return field_->zero();
    return c_[k];
}

FqElem Poly::lead() const {
    check_domain(!c_.empty(), "lead of zero polynomial");
    return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
    check_domain(field_.get() == o.field_.get(), "Poly: mixed fields");
    std::vector<FqElem> r(std::max(c_.size(), o.c_.size()), field_->zero());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
    return Poly(field_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    std::vector<FqElem> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(-x);
    return Poly(field_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    check_domain(field_.get() == o.field_.get(), "Poly: mixed fields");
    if (is_zero() || o.is_zero()) return Poly(field_);
    std::vector<FqElem> r(c_.size() + o.c_.size() - 1, field_->zero());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    }
    return Poly(field_, std::move(r));
}

Poly Poly::operator*(const FqElem& s) const {
    std::vector<FqElem> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(x * s);
    return Poly(field_, std::move(r));
}

bool Poly::operator==(const Poly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

bool Poly::operator<(const Poly& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    for (int i = degree(); i >= 0; --i) {
        unsigned long a = coeff(i).index(), b = o.coeff(i).index();
        if (a != b) return a < b;
    }
    return false;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    check_domain(!d.is_zero(), "Poly: division by zero");
    Poly rem = *this;
    Poly quo(field_);
    if (rem.degree() < d.degree()) return {quo, rem};
    quo.c_.assign(rem.degree() - d.degree() + 1, field_->zero());
    FqElem dlinv = d.lead().inverse();
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        int k = rem.degree() - d.degree();
        FqElem f = rem.lead() * dlinv;
        quo.c_[k] = f;
        rem = rem - Poly::monomial(f, k) * d;
    }
    quo.trim();
    return {quo, rem};
}

Poly Poly::operator/(const Poly& d) const { return divmod(d).first; }
Poly Poly::operator%(const Poly& d) const { return divmod(d).second; }

Poly Poly::monic() const {
    check_domain(!is_zero(), "monic of zero polynomial");
    return *this * lead().inverse();
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly(field_);
    std::vector<FqElem> r;
    r.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * field_->from_int(static_cast<long>(i)));
    return Poly(field_, std::move(r));
}

FqElem Poly::eval(const FqElem& x) const {
    FqElem r = field_->zero();
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

int Poly::multiplicity(const Poly& g) const {
    check_domain(!is_zero(), "multiplicity in zero polynomial");
    int k = 0;
    Poly f = *this;
    while (true) {
        auto [q, r] = f.divmod(g);
        if (!r.is_zero()) return k;
        ++k;
        f = q;
    }
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        const FqElem& a = coeff(i);
        if (a.is_zero()) continue;
        if (!s.empty()) s += "+";
        std::string cs = field_->to_string(a);
        if (i == 0) {
            s += cs;
        } else {
            if (!a.is_one()) s += cs + "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

std::tuple<Poly, Poly, Poly> xgcd(const Poly& a, const Poly& b) {
    const FqPtr& F = a.field();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::one(F), s1 = Poly::zero(F);
    Poly t0 = Poly::zero(F), t1 = Poly::one(F);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = r1; r1 = r;
        Poly s = s0 - q * s1; s0 = s1; s1 = s;
        Poly t = t0 - q * t1; t0 = t1; t1 = t;
    }
    if (r0.is_zero()) return {r0, s0, t0};
    FqElem li = r0.lead().inverse();
    return {r0 * li, s0 * li, t0 * li};
}

Poly pow_mod(const Poly& base, unsigned long e, const Poly& mod) {
    Poly r = Poly::one(base.field());
    Poly b = base % mod;
    while (e > 0) {
        if (e & 1) r = (r * b) % mod;
        b = (b * b) % mod;
        e >>= 1;
    }
    return r;
}

// x^(q^e) mod f, by e-fold q-power
static Poly frob_pow(const Poly& x, int e, const Poly& f) {
    Poly r = x % f;
    unsigned long q = f.field()->q();
    for (int i = 0; i < e; ++i) r = pow_mod(r, q, f);
    return r;
}

static std::vector<int> prime_divisors(int n) {
    std::vector<int> ls;
    for (int l = 2; l * l <= n; ++l) {
        if (n % l == 0) {
            ls.push_back(l);
            while (n % l == 0) n /= l;
        }
    }
    if (n > 1) ls.push_back(n);
    return ls;
}

bool is_irreducible(const Poly& f) {
    check_domain(!f.is_zero(), "is_irreducible: zero polynomial");
    int d = f.degree();
    if (d == 0) return false;
    if (d == 1) return true;
    const FqPtr& F = f.field();
    Poly x = Poly::variable(F);
    if (frob_pow(x, d, f) != (x % f)) return false;
    for (int l : prime_divisors(d))
        if (gcd(frob_pow(x, d / l, f) - x, f).degree() > 0) return false;
    return true;
}

// equal-degree splitting of a product of irreducibles of degree d
static void edf(const Poly& f, int d, std::vector<Poly>& out, std::mt19937_64& rng) {
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    const FqPtr& F = f.field();
    const long p = F->p();
    const int n = f.degree();
    while (true) {
        // random polynomial of degree < n
        std::vector<FqElem> rc;
        rc.reserve(n);
        for (int i = 0; i < n; ++i) rc.push_back(F->from_index(rng() % F->q()));
        Poly h(F, rc);
        if (h.is_zero()) continue;
        Poly g;
        if (p == 2) {
            // trace map: h + h^2 + h^4 + ... (m*d-1 doublings)
            Poly tr = h % f;
            Poly cur = h % f;
            int steps = F->m() * d;
            for (int i = 1; i < steps; ++i) {
                cur = (cur * cur) % f;
                tr = tr + cur;
            }
            g = gcd(tr, f);
        } else {
            unsigned long qe = 1;
            for (int i = 0; i < d; ++i) qe *= F->q();
            Poly hh = pow_mod(h, (qe - 1) / 2, f);
            g = gcd(hh - Poly::one(F), f);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            edf(g, d, out, rng);
            edf((f / g).monic(), d, out, rng);
            return;
        }
    }
}

// distinct-degree split of a squarefree monic polynomial, then edf
static void ddf(const Poly& sf, std::vector<Poly>& out, std::mt19937_64& rng) {
    const FqPtr& F = sf.field();
    Poly rem = sf;
    Poly x = Poly::variable(F);
    Poly h = x % rem;
    for (int deg = 1; rem.degree() > 0 && 2 * deg <= rem.degree(); ++deg) {
        h = pow_mod(h, F->q(), rem);
        Poly g1 = gcd(h - x, rem);
        if (g1.degree() > 0) {
            edf(g1, deg, out, rng);
            rem = (rem / g1).monic();
            h = h % rem;
        }
    }
    if (rem.degree() > 0) out.push_back(rem);
}

Factorization factor(const Poly& f0) {
    check_domain(!f0.is_zero(), "factor: zero polynomial");
    const FqPtr& F = f0.field();
    Factorization result;
    result.unit = f0.lead();
    Poly f = f0.monic();
    if (f.degree() == 0) return result;

    // deterministic rng seeded from the input
    uint64_t seed = 0x9e3779b97f4a7c15ull;
    for (const auto& c : f.coeffs()) seed = seed * 1099511628211ull + c.index() + 1;
    std::mt19937_64 rng(seed);

    const long p = F->p();
    std::vector<Poly> irreds;
    Poly g = f;
    while (g.degree() > 0) {
        Poly d = g.derivative();
        if (d.is_zero()) {
            // g = h(t^p); replace by its p-th root and continue
            std::vector<FqElem> hc;
            for (int i = 0; i <= g.degree(); i += static_cast<int>(p))
                hc.push_back(g.coeff(i).pth_root());
            g = Poly(F, hc);
            continue;
        }
        // product of the distinct factors of g whose multiplicity is prime to p
        Poly sf = (g / gcd(g, d)).monic();
        std::vector<Poly> part;
        ddf(sf, part, rng);
        for (const auto& h : part) {
            irreds.push_back(h);
            for (int k = g.multiplicity(h); k > 0; --k) g = g / h;
        }
    }

    std::sort(irreds.begin(), irreds.end());
    irreds.erase(std::unique(irreds.begin(), irreds.end()), irreds.end());
    for (const auto& h : irreds) result.factors.push_back({h, f.multiplicity(h)});

    // verify the factorization round-trips
    Poly prod = Poly::constant(result.unit);
    for (const auto& [h, m] : result.factors)
        for (int i = 0; i < m; ++i) prod = prod * h;
    check_internal(prod == f0, "factor: product does not reproduce input");
    return result;
}

std::vector<Poly> all_monic(const FqPtr& F, int d) {
    std::vector<Poly> out;
    unsigned long total = 1;
    for (int i = 0; i < d; ++i) total *= F->q();
    out.reserve(total);
    for (unsigned long k = 0; k < total; ++k) {
        std::vector<FqElem> c(d + 1, F->zero());
        unsigned long kk = k;
        for (int i = 0; i < d; ++i) {
            c[i] = F->from_index(kk % F->q());
            kk /= F->q();
        }
        c[d] = F->one();
        out.push_back(Poly(F, c));
    }
    return out;
}

std::vector<Poly> monic_irreducibles(const FqPtr& F, int d) {
    std::vector<Poly> out;
    for (const auto& f : all_monic(F, d))
        if (is_irreducible(f)) out.push_back(f);
    return out;
}

} // namespace raymod
