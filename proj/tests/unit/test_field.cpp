#include <doctest.h>

#include "testkit.hpp"
#include "vlab/field.hpp"

using namespace vlab;

namespace {

bool trial_division_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t k = 2; k * k <= n; ++k)
        if (n % k == 0) return false;
    return true;
}

} // namespace

TEST_CASE("primality agrees with trial division") {
    for (std::uint64_t n = 0; n < 5000; ++n) CHECK(is_prime_u64(n) == trial_division_prime(n));
    CHECK(is_prime_u64(1000003));
    CHECK(is_prime_u64(2305843009213693951ULL));  // 2^61 - 1
    CHECK_FALSE(is_prime_u64(1000001));
    CHECK_FALSE(is_prime_u64(3215031751ULL));     // strong pseudoprime to bases 2, 3, 5, 7
}

TEST_CASE("prime field arithmetic matches 128-bit reference") {
    testkit::Rng rng(11);
    for (std::uint64_t p : {7ULL, 101ULL, 1000003ULL, 2305843009213693951ULL}) {
        const PrimeField f(p);
        for (int i = 0; i < 500; ++i) {
            const Fp a = testkit::rand_element(f, rng), b = testkit::rand_element(f, rng);
            const auto wide = [&](unsigned __int128 x) { return static_cast<std::uint64_t>(x % p); };
            CHECK((a + b).v == wide(static_cast<unsigned __int128>(a.v) + b.v));
            CHECK((a - b).v == wide(static_cast<unsigned __int128>(a.v) + p - b.v));
            CHECK((a * b).v == wide(static_cast<unsigned __int128>(a.v) * b.v));
            if (b.v != 0) {
                CHECK((a / b) * b == a);
                CHECK((inverse(b) * b).v == 1);
            }
            CHECK((a + (-a)).v == 0);
        }
    }
}

TEST_CASE("prime field rejects composite and oversized moduli") {
    CHECK_THROWS_AS(PrimeField(10), InputError);
    CHECK_THROWS_AS(PrimeField(1), InputError);
    CHECK_THROWS_AS(PrimeField(18446744073709551557ULL), InputError);  // prime, but above 2^62
}

TEST_CASE("parsing coordinates") {
    const RationalField q;
    CHECK(q.parse("3/6") == Rational(1, 2));
    CHECK(q.parse("-7") == Rational(-7));
    CHECK(q.parse("+4/-8") == Rational(-1, 2));
    CHECK(q.format(q.parse("10/4")) == "5/2");
    CHECK_THROWS_AS(q.parse("1/0"), InputError);
    CHECK_THROWS_AS(q.parse("1.5"), InputError);
    CHECK_THROWS_AS(q.parse(""), InputError);
    CHECK_THROWS_AS(q.parse("2/"), InputError);

    const PrimeField f(7);
    CHECK(f.parse("3").v == 3);
    CHECK(f.parse("-1").v == 6);
    CHECK(f.parse("1/2").v == 4);
    CHECK(f.parse("123456789012345678901234567890").v ==
          mpz_class(mpz_class("123456789012345678901234567890") % 7).get_ui());
    CHECK_THROWS_AS(f.parse("1/7"), InputError);
}

TEST_CASE("field specs") {
    CHECK(FieldSpec::parse("rational").kind == FieldSpec::Kind::Rationals);
    CHECK(FieldSpec::parse("float").kind == FieldSpec::Kind::Float);
    const auto fp = FieldSpec::parse("fp:1000003");
    CHECK(fp.kind == FieldSpec::Kind::PrimeField);
    CHECK(fp.characteristic() == 1000003);
    CHECK(fp.name() == "fp:1000003");
    CHECK_THROWS_AS(FieldSpec::parse("fp:15"), InputError);
    CHECK_THROWS_AS(FieldSpec::parse("fp:"), InputError);
    CHECK_THROWS_AS(FieldSpec::parse("real"), InputError);
}
