#include "ncproj/field.hpp"

namespace ncproj {

static bool is_prime_ul(unsigned long p) {
    if (p < 2) return false;
    for (unsigned long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Field Field::prime(unsigned long p) {
    if (p >= (1ul << 31)) throw Error("prime field characteristic too large: " + std::to_string(p));
    if (!is_prime_ul(p)) throw Error("not a prime: " + std::to_string(p));
    return Field(FieldKind::PrimeField, p);
}

mpq_class reduce_mod(const mpq_class& v, unsigned long p) {
    mpz_class pz(static_cast<unsigned long>(p));
    mpz_class num = v.get_num(), den = v.get_den();
    mpz_class r;
    mpz_mod(r.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t());
    if (den != 1) {
        mpz_class dinv;
        if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()) == 0)
            throw Error("denominator not invertible mod " + std::to_string(p));
        r = r * dinv;
        mpz_mod(r.get_mpz_t(), r.get_mpz_t(), pz.get_mpz_t());
    }
    return mpq_class(r);
}

void Scalar::canonicalize() {
    v_.canonicalize();
    if (f_.is_prime()) v_ = reduce_mod(v_, f_.characteristic());
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("division by zero");
    if (f_.is_prime()) {
        mpz_class pz(f_.characteristic());
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), v_.get_num().get_mpz_t(), pz.get_mpz_t());
        return Scalar(f_, mpq_class(inv));
    }
    return Scalar(f_, 1 / v_);
}

} // namespace ncproj
