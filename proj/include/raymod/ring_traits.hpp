#pragma once

#include <gmpxx.h>

#include "raymod/artin.hpp"
#include "raymod/gf.hpp"

namespace raymod {

// Free-function ring traits used by the generic Witt / series code.  Every
// coefficient ring provides: characteristic, an integer image built from a
// prototype element, and the ring operations through member operators.

inline long ring_char(const FqElem& proto) { return proto.field()->p(); }
inline long ring_char(const RFElem& proto) { return proto.field()->p(); }
inline long ring_char(const ArtinElem& proto) { return proto.field()->p(); }
inline long ring_char(const mpz_class&) { return 0; }
inline long ring_char(const mpq_class&) { return 0; }

inline FqElem ring_from_int(const FqElem& proto, const mpz_class& n) {
    return proto.field()->from_int(mpz_class(n % proto.field()->p()).get_si());
}
inline RFElem ring_from_int(const RFElem& proto, const mpz_class& n) {
    return proto.field()->from_int(mpz_class(n % proto.field()->p()).get_si());
}
inline ArtinElem ring_from_int(const ArtinElem& proto, const mpz_class& n) {
    return ArtinElem::scalar(ring_from_int(proto.field()->zero(), n), proto.n());
}
inline mpz_class ring_from_int(const mpz_class&, const mpz_class& n) { return n; }
inline mpq_class ring_from_int(const mpq_class&, const mpz_class& n) { return mpq_class(n); }

inline FqElem ring_zero(const FqElem& proto) { return proto.field()->zero(); }
inline RFElem ring_zero(const RFElem& proto) { return proto.field()->zero(); }
inline ArtinElem ring_zero(const ArtinElem& proto) {
    return ArtinElem::scalar(proto.field()->zero(), proto.n());
}
inline mpz_class ring_zero(const mpz_class&) { return mpz_class(0); }
inline mpq_class ring_zero(const mpq_class&) { return mpq_class(0); }

inline bool ring_is_zero(const FqElem& a) { return a.is_zero(); }
inline bool ring_is_zero(const RFElem& a) { return a.is_zero(); }
inline bool ring_is_zero(const ArtinElem& a) { return a.is_zero(); }
inline bool ring_is_zero(const mpz_class& a) { return a == 0; }
inline bool ring_is_zero(const mpq_class& a) { return a == 0; }

template <class T>
T ring_pow(const T& x, long e) {
    check_domain(e >= 0, "ring_pow: negative exponent");
    T r = ring_from_int(x, 1);
    T b = x;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

} // namespace raymod
