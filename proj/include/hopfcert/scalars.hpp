#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "hopfcert/errors.hpp"

namespace hopfcert {

// Sentinel returned by p_valuation(0, p). Distinct from every finite valuation.
inline constexpr long kValuationInfinity = std::numeric_limits<long>::max();

// v with q = p^v * (a/b), p dividing neither a nor b. q == 0 returns
// kValuationInfinity. Throws std::invalid_argument unless p is prime.
long p_valuation(const mpq_class& q, const mpz_class& p);

// Euler phi and the N-th cyclotomic polynomial (monic, integer coefficients,
// ascending). Results are cached per conductor.
unsigned euler_phi(unsigned n);
const std::vector<mpz_class>& cyclotomic_polynomial(unsigned n);

/// Exact element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^{phi(N)-1}
/// of Q[x]/(Phi_N). Conductor 1 is plain Q. Coordinates are canonical mpq
/// (lowest terms, positive denominator). Immutable in spirit: every operation
/// returns a fresh value, so concurrent reads are safe.
class Scalar {
  public:
    Scalar() : conductor_(1), coeffs_(1, mpq_class(0)) {}
    explicit Scalar(mpq_class q) : conductor_(1), coeffs_{std::move(q)} { coeffs_[0].canonicalize(); }
    Scalar(long num, long den) : Scalar(mpq_class(num, den)) {}
    Scalar(unsigned conductor, std::vector<mpq_class> coeffs);

    static Scalar zero(unsigned conductor = 1);
    static Scalar one(unsigned conductor = 1);
    static Scalar integer(long v) { return Scalar(mpq_class(v)); }
    // The generator zeta_N (for N=1 this is 1, for N=2 it is -1).
    static Scalar zeta(unsigned conductor);

    unsigned conductor() const { return conductor_; }
    const std::vector<mpq_class>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    // True iff the value lies in Q (all power-basis coordinates above the
    // constant one vanish).
    bool is_rational() const;
    // The constant coordinate; throws IncompatibleField if not rational.
    mpq_class rational_value() const;

    // Reexpress over conductor n (the current conductor must divide n).
    Scalar promoted(unsigned n) const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inverse() const;  // throws std::domain_error on zero

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Total order used for deterministic tie-breaking: compares conductors,
    // then coordinates lexicographically. Not a numeric order.
    static int cmp(const Scalar& a, const Scalar& b);

    // "a/b" for rationals, "[a0/b0, a1/b1, ...]@N" for cyclotomic values.
    std::string to_string() const;
    static Scalar parse(const std::string& text);

  private:
    unsigned conductor_;
    std::vector<mpq_class> coeffs_;  // length euler_phi(conductor_)
};

/// Decidable subring of the ambient field: Z, Z localized at a prime p, or
/// the ring of integers Z[zeta_N] of Q(zeta_N).
struct Subring {
    enum class Kind { Integers, LocalizedAt, CyclotomicIntegers };

    Kind kind = Kind::Integers;
    mpz_class prime = 0;      // LocalizedAt only
    unsigned conductor = 1;   // CyclotomicIntegers only

    static Subring integers() { return {Kind::Integers, 0, 1}; }
    static Subring localized_at(mpz_class p);
    static Subring cyclotomic_integers(unsigned n);
    // "Z", "Zp:<p>", "OK:<N>" (the CLI --ring syntax).
    static Subring parse(const std::string& text);

    std::string to_string() const;
};

// Membership of x in R. For Integers/LocalizedAt the value must lie in Q and
// for CyclotomicIntegers(N) in Q(zeta_N); otherwise IncompatibleField is
// thrown. Values whose structural conductor is larger are first reexpressed,
// so e.g. a rational-valued Scalar over Q(zeta_6) is accepted by Z.
bool in_subring(const Scalar& x, const Subring& ring);

// Membership with field mismatches reported as non-membership instead of an
// exception. Used by the form checker, where an out-of-field coefficient is a
// violation, not an input error.
bool in_subring_lenient(const Scalar& x, const Subring& ring);

}  // namespace hopfcert
