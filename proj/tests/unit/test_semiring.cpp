#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "xtop/errors.hpp"
#include "xtop/semiring.hpp"
#include "xtop/separation.hpp"

using namespace xtop;
using oracle::Mask;

namespace {

std::vector<Mask> masks(const std::vector<Ideal>& f) {
    std::vector<Mask> out;
    for (const auto& i : f) out.push_back(oracle::set_mask(i.members));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<FiniteSemiring> small_semirings() {
    std::vector<FiniteSemiring> out{s3(), boolean_semiring()};
    for (std::size_t n = 2; n <= 12; ++n) {
        for (std::size_t i = 0; i < n; ++i) out.push_back(bni(n, i));
    }
    return out;
}

}  // namespace

TEST_CASE("ideals and primes agree with a subset scan") {
    for (const auto& r : small_semirings()) {
        const auto rep = spectrum(r);
        CHECK(masks(rep.ideals) == oracle::brute_ideals(r));
        CHECK(masks(rep.spec) == oracle::brute_spec(r));
        CHECK(masks(rep.max) == oracle::brute_max(r));
        CHECK(oracle::set_mask(rep.jacobson.members) == oracle::brute_jacobson(r));
        CHECK(oracle::set_mask(rep.nilradical.members) == oracle::brute_nilradical(r));
    }
}

TEST_CASE("spectra carry the Zariski topology") {
    for (const auto& r : small_semirings()) {
        const auto s = spec_space(r);
        const auto ref = oracle::spec_topology(r);
        const auto lib = oracle::library_topology(s);
        REQUIRE(lib.labels.size() == ref.labels.size());
        std::set<std::set<std::string>> a, b;
        for (auto m : lib.closed) {
            std::set<std::string> names;
            for (std::size_t k = 0; k < lib.size(); ++k) {
                if (oracle::has(m, k)) names.insert(lib.labels[k]);
            }
            a.insert(names);
        }
        for (auto m : ref.closed) {
            std::set<std::string> names;
            for (std::size_t k = 0; k < ref.size(); ++k) {
                if (oracle::has(m, k)) names.insert(ref.labels[k]);
            }
            b.insert(names);
        }
        CHECK(a == b);
        CHECK(separation_report(s).kdim == oracle::kdim(ref));
    }
}

TEST_CASE("S3") {
    const auto r = s3();
    const auto rep = spectrum(r);
    const Index z = r.index_of("0"), a = r.index_of("a");
    CHECK(rep.ideals.size() == 3);
    REQUIRE(rep.spec.size() == 2);
    CHECK(rep.spec[0].members == ElementSet{z});
    CHECK(rep.spec[1].members == (ElementSet{z, a}));
    CHECK(rep.kdim == 1);
    CHECK(rep.is_local);
    CHECK(rep.is_idempotent);
    CHECK(rep.is_reduced);
}

TEST_CASE("axiom failures name the axiom") {
    // 1 + 1 = 0 but 1 * 1 = 0 as well: 1 is not a multiplicative identity.
    try {
        FiniteSemiring::from_tables({"0", "1"}, {0, 1, 1, 0}, {0, 0, 0, 0}, 0, 1);
        FAIL("expected AxiomError");
    } catch (const AxiomError& e) {
        CHECK(e.axiom() == "mul_identity");
    }
    try {
        // x * y = x on {a, b}.
        FiniteSemiring::from_tables({"0", "1", "a", "b"}, {0, 1, 2, 3, 1, 1, 2, 3, 2, 2, 2, 3, 3, 3, 3, 3},
                                    {0, 0, 0, 0, 0, 1, 2, 3, 0, 2, 2, 2, 0, 3, 3, 3}, 0, 1);
        FAIL("expected AxiomError");
    } catch (const AxiomError& e) {
        CHECK(e.axiom() == "mul_commutative");
    }
    CHECK_THROWS_AS(FiniteSemiring::from_tables({"0", "0"}, {0, 1, 1, 1}, {0, 0, 0, 1}, 0, 1), DuplicateLabelError);
}

TEST_CASE("B(n,i) arguments") {
    CHECK_THROWS_AS(bni(1, 0), RangeError);
    CHECK_THROWS_AS(bni(5, 5), RangeError);
    const auto r = bni(6, 2);
    // 5 + 3 = 8 folds back to 2 + (6 mod 4) = 4.
    CHECK(r.label(r.add(r.index_of("5"), r.index_of("3"))) == "4");
    CHECK(r.label(r.mul(r.index_of("5"), r.index_of("5"))) == "5");
}

TEST_CASE("prime divisors") {
    for (std::size_t k = 2; k <= 300; ++k) {
        CHECK(prime_divisors(k) == oracle::trial_prime_divisors(k));
        CHECK(omega(k) == oracle::trial_prime_divisors(k).size());
    }
    CHECK_THROWS_AS(omega(1), RangeError);
}

TEST_CASE("subtractive ideals") {
    const auto r = s3();
    CHECK(is_subtractive_semiring(r));
    CHECK(is_subtractive_semiring(zn(6)));
    for (const auto& q : small_semirings()) {
        bool expected = true;
        for (Mask i : oracle::brute_ideals(q)) {
            for (std::size_t x = 0; x < q.size(); ++x) {
                for (std::size_t a = 0; a < q.size(); ++a) {
                    if (oracle::has(i, a) && oracle::has(i, q.add(x, a)) && !oracle::has(i, x)) expected = false;
                }
            }
        }
        CHECK(is_subtractive_semiring(q) == expected);
    }
    CHECK(is_subtractive_semiring(zn(6)));
    CHECK_THROWS_AS(is_subtractive(r, Ideal{ElementSet{r.index_of("a")}}), NotAnIdealError);
}

TEST_CASE("B(n,i) predictions on a small grid") {
    for (std::size_t n = 2; n <= 12; ++n) {
        for (std::size_t i = 0; i < n; ++i) {
            const auto v = verify_bni(n, i);
            INFO("B(" << n << "," << i << ")");
            CHECK(v.match);
            std::vector<Mask> computed;
            for (const auto& s : v.computed_spec) computed.push_back(oracle::set_mask(s));
            std::sort(computed.begin(), computed.end());
            CHECK(computed == oracle::brute_spec(bni(n, i)));
        }
    }
}
