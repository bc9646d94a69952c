#pragma once

#include <gmpxx.h>

#include <string>

#include "ncproj/errors.hpp"

namespace ncproj {

enum class FieldKind { Rationals, PrimeField };

/// Runtime field tag: the rationals, or F_p for a prime p < 2^31.
class Field {
public:
    static Field rationals() { return Field(FieldKind::Rationals, 0); }
    static Field prime(unsigned long p);

    FieldKind kind() const { return kind_; }
    bool is_prime() const { return kind_ == FieldKind::PrimeField; }
    unsigned long characteristic() const { return p_; }

    bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    std::string to_string() const {
        return is_prime() ? "F " + std::to_string(p_) : std::string("Q");
    }

private:
    Field(FieldKind k, unsigned long p) : kind_(k), p_(p) {}
    FieldKind kind_;
    unsigned long p_;
};

inline void check_same_field(const Field& a, const Field& b, const char* what) {
    if (a != b) throw FieldMismatch(std::string(what) + ": " + a.to_string() + " vs " + b.to_string());
}

/// Exact field element. Rationals are kept canonical by GMP; prime field
/// values are integer residues in [0, p).
class Scalar {
public:
    Scalar(Field f, mpq_class v) : f_(f), v_(std::move(v)) { canonicalize(); }
    static Scalar zero(Field f) { return Scalar(f, 0); }
    static Scalar one(Field f) { return Scalar(f, 1); }
    static Scalar of_int(Field f, long n) { return Scalar(f, mpq_class(n)); }

    const Field& field() const { return f_; }
    const mpq_class& value() const { return v_; }
    bool is_zero() const { return sgn(v_) == 0; }

    Scalar operator-() const { return Scalar(f_, -v_); }
    Scalar operator+(const Scalar& o) const { chk(o); return Scalar(f_, v_ + o.v_); }
    Scalar operator-(const Scalar& o) const { chk(o); return Scalar(f_, v_ - o.v_); }
    Scalar operator*(const Scalar& o) const { chk(o); return Scalar(f_, v_ * o.v_); }
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inverse() const;

    bool operator==(const Scalar& o) const { chk(o); return v_ == o.v_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Exact decimal-free rendering: "n" or "n/d".
    std::string to_string() const { return v_.get_str(); }

private:
    void chk(const Scalar& o) const { check_same_field(f_, o.f_, "scalar arithmetic"); }
    void canonicalize();
    Field f_;
    mpq_class v_;
};

/// Reduce a rational to the canonical residue of a prime field.
mpq_class reduce_mod(const mpq_class& v, unsigned long p);

} // namespace ncproj
