#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qlift/errors.hpp"

namespace qlift {

using Rational = mpq_class;

// The cyclotomic field Q(zeta_E). Residues are stored reduced mod the E-th
// cyclotomic polynomial Phi_E, so every element has a unique coefficient
// vector of length phi(E) and equality is coordinatewise.
class CycloField {
  public:
    // Fields are interned: one immutable instance per E, shared by all scalars.
    static const CycloField* get(long E);

    long order() const { return E_; }
    long degree() const { return phi_; }

    // Coefficients of Phi_E (degree phi(E), monic, integer).
    const std::vector<Rational>& minimal_polynomial() const { return phi_poly_; }

    // x^k reduced mod Phi_E, for 0 <= k < 2*phi(E)-1 (enough for products).
    const std::vector<Rational>& power_residue(long k) const { return powers_[k]; }

  private:
    explicit CycloField(long E);
    long E_;
    long phi_;
    std::vector<Rational> phi_poly_;
    std::vector<std::vector<Rational>> powers_;
};

// An element of Q(zeta_E), exact.
class Scalar {
  public:
    Scalar() : field_(nullptr) {}  // zero of an unknown field; usable as additive identity
    explicit Scalar(const CycloField* f) : field_(f), c_(f->degree(), Rational(0)) {}
    Scalar(const CycloField* f, const Rational& rat) : Scalar(f) {
        if (f->degree() > 0) c_[0] = rat;
    }

    static Scalar zero(const CycloField* f) { return Scalar(f); }
    static Scalar one(const CycloField* f) { return Scalar(f, Rational(1)); }
    static Scalar integer(const CycloField* f, long n) { return Scalar(f, Rational(n)); }
    static Scalar rational(const CycloField* f, const Rational& r) { return Scalar(f, r); }

    // zeta_E^k for the session field (k may be any integer; period E).
    static Scalar root_of_unity(const CycloField* f, long k);

    // Residue with the given reduced coefficient vector (length = degree).
    static Scalar from_coeffs(const CycloField* f, std::vector<Rational> coeffs);

    const CycloField* field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;  // lies in the prime field
    Rational rational_part() const;  // requires is_rational()

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar inverse() const;  // throws MathError on zero
    Scalar pow(long n) const;

    // Multiplicative order; 0 if the element is not a root of unity
    // (search capped at 4*E, enough for any torsion element of Q(zeta_E)).
    long mult_order() const;

    const std::vector<Rational>& coeffs() const { return c_; }
    std::string str() const;

  private:
    void reduce_from(std::vector<Rational>& raw);
    const CycloField* field_;
    std::vector<Rational> c_;
};

Scalar operator*(const Rational& r, const Scalar& s);

// lcm helper used when fixing the session order E.
long lcm_long(long a, long b);
long euler_phi(long n);

}  // namespace qlift
