#include "vlab/field.hpp"

#include <charconv>
#include <string>

namespace vlab {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 e, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return result;
}

constexpr u64 kMaxModulus = u64{1} << 62;

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

mpz_class parse_integer(std::string_view s) {
    if (!is_integer_literal(s)) throw InputError("not an integer literal: '" + std::string(s) + "'");
    if (s[0] == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

Rational parse_fraction(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    mpz_class num = parse_integer(text.substr(0, slash));
    mpz_class den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

} // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0) return n == small;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Fp operator+(const Fp& a, const Fp& b) {
    u64 s = a.v + b.v;
    if (s >= a.p) s -= a.p;
    return {s, a.p};
}

Fp operator-(const Fp& a, const Fp& b) { return {a.v >= b.v ? a.v - b.v : a.v + a.p - b.v, a.p}; }

Fp operator-(const Fp& a) { return {a.v == 0 ? 0 : a.p - a.v, a.p}; }

Fp operator*(const Fp& a, const Fp& b) { return {mulmod(a.v, b.v, a.p), a.p}; }

Fp inverse(const Fp& a) {
    if (a.v == 0) throw PreconditionError("division by zero in F_" + std::to_string(a.p));
    return {powmod(a.v, a.p - 2, a.p), a.p};
}

Fp operator/(const Fp& a, const Fp& b) { return a * inverse(b); }

RationalField::Element RationalField::from_int(long long k) const {
    return Element(mpz_class(std::to_string(k)));
}

RationalField::Element RationalField::parse(std::string_view text) const { return parse_fraction(text); }

PrimeField::PrimeField(u64 p) : p_(p) {
    if (p >= kMaxModulus) throw InputError("field modulus " + std::to_string(p) + " must be below 2^62");
    if (!is_prime_u64(p)) throw InputError("field modulus " + std::to_string(p) + " is not prime");
}

PrimeField::Element PrimeField::from_int(long long k) const {
    long long m = k % static_cast<long long>(p_);
    if (m < 0) m += static_cast<long long>(p_);
    return {static_cast<u64>(m), p_};
}

PrimeField::Element PrimeField::from_rational(const Rational& q) const {
    mpz_class mod(std::to_string(p_));
    mpz_class num = q.get_num() % mod;
    mpz_class den = q.get_den() % mod;
    if (num < 0) num += mod;
    if (den == 0) throw InputError("denominator of " + q.get_str() + " is divisible by " + std::to_string(p_));
    Fp n{std::stoull(num.get_str()), p_};
    Fp d{std::stoull(den.get_str()), p_};
    return n / d;
}

PrimeField::Element PrimeField::parse(std::string_view text) const { return from_rational(parse_fraction(text)); }

FieldSpec FieldSpec::prime(u64 p) {
    PrimeField check(p);
    return {Kind::PrimeField, p};
}

FieldSpec FieldSpec::parse(std::string_view text) {
    if (text == "rational" || text == "Q") return rationals();
    if (text == "float") return floating();
    if (text.substr(0, 3) == "fp:") {
        auto digits = text.substr(3);
        u64 p = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
            throw InputError("field: cannot parse modulus in '" + std::string(text) + "'");
        return prime(p);
    }
    throw InputError("field: expected \"rational\", \"fp:<prime>\" or \"float\", got '" + std::string(text) + "'");
}

std::string FieldSpec::name() const {
    switch (kind) {
    case Kind::Rationals: return "rational";
    case Kind::PrimeField: return "fp:" + std::to_string(p);
    case Kind::Float: return "float";
    }
    return "?";
}

} // namespace vlab
