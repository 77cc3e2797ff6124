#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "vlab/errors.hpp"

namespace vlab {

using Rational = mpq_class;

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

// Element of F_p. Carries its modulus so arithmetic reads like ordinary
// scalar code; mixing moduli is a logic error.
struct Fp {
    std::uint64_t v = 0;
    std::uint64_t p = 0;

    friend bool operator==(const Fp& a, const Fp& b) { return a.v == b.v && a.p == b.p; }
};

Fp operator+(const Fp& a, const Fp& b);
Fp operator-(const Fp& a, const Fp& b);
Fp operator-(const Fp& a);
Fp operator*(const Fp& a, const Fp& b);
Fp operator/(const Fp& a, const Fp& b);
inline Fp& operator+=(Fp& a, const Fp& b) { return a = a + b; }
inline Fp& operator-=(Fp& a, const Fp& b) { return a = a - b; }
inline Fp& operator*=(Fp& a, const Fp& b) { return a = a * b; }
Fp inverse(const Fp& a);

inline bool is_zero(const Fp& a) { return a.v == 0; }
inline bool is_zero(const Rational& a) { return sgn(a) == 0; }
inline bool is_zero(const mpz_class& a) { return sgn(a) == 0; }

class RationalField {
public:
    using Element = Rational;

    std::uint64_t characteristic() const { return 0; }
    Element zero() const { return Element(0); }
    Element one() const { return Element(1); }
    Element from_int(long long k) const;
    // Accepts "a", "-a" or "a/b" with integer a, b (b != 0).
    Element parse(std::string_view text) const;
    std::string format(const Element& x) const { return x.get_str(); }
    std::string name() const { return "rational"; }

    friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

class PrimeField {
public:
    using Element = Fp;

    // Throws InputError unless p is a prime below 2^62.
    explicit PrimeField(std::uint64_t p);

    std::uint64_t modulus() const { return p_; }
    std::uint64_t characteristic() const { return p_; }
    Element zero() const { return Fp{0, p_}; }
    Element one() const { return Fp{1, p_}; }
    Element from_int(long long k) const;
    Element from_rational(const Rational& q) const;
    // Integers or "a/b" fractions reduced mod p; b must be invertible.
    Element parse(std::string_view text) const;
    std::string format(const Element& x) const { return std::to_string(x.v); }
    std::string name() const { return "fp:" + std::to_string(p_); }

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

private:
    std::uint64_t p_;
};

// Runtime description of the base field, as read from configuration files.
struct FieldSpec {
    enum class Kind { Rationals, PrimeField, Float };

    Kind kind = Kind::Rationals;
    std::uint64_t p = 0;

    static FieldSpec rationals() { return {}; }
    static FieldSpec prime(std::uint64_t p);
    static FieldSpec floating() { return {Kind::Float, 0}; }
    // "rational", "fp:<prime>" or "float".
    static FieldSpec parse(std::string_view text);

    std::uint64_t characteristic() const { return kind == Kind::PrimeField ? p : 0; }
    bool exact() const { return kind != Kind::Float; }
    std::string name() const;
};

inline constexpr std::uint64_t kDefaultTestPrime = 1000003;

} // namespace vlab
