#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "xtop/element_set.hpp"
#include "xtop/lattice.hpp"
#include "xtop/space.hpp"

namespace xtop {

// Finite commutative semiring given by its operation tables.
class FiniteSemiring {
public:
    // Tables are row-major n*n over element indices. Throws AxiomError naming
    // the first violated axiom with a witness triple.
    static FiniteSemiring from_tables(std::vector<std::string> labels, std::vector<Index> add,
                                      std::vector<Index> mul, Index zero, Index one);

    std::size_t size() const noexcept { return labels_.size(); }
    const std::string& label(Index a) const;
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    Index index_of(std::string_view label) const;

    Index add(Index a, Index b) const noexcept { return add_[a * size() + b]; }
    Index mul(Index a, Index b) const noexcept { return mul_[a * size() + b]; }
    Index zero() const noexcept { return zero_; }
    Index one() const noexcept { return one_; }
    // a^k for k >= 1.
    Index pow(Index a, std::size_t k) const;

    const std::vector<Index>& add_table() const noexcept { return add_; }
    const std::vector<Index>& mul_table() const noexcept { return mul_; }

private:
    FiniteSemiring() = default;
    std::vector<std::string> labels_;
    std::vector<Index> add_;
    std::vector<Index> mul_;
    Index zero_ = 0;
    Index one_ = 0;
};

// B(n, i) on {0..n-1}: a sum or product v past n-1 is replaced by the unique
// u in [i, n-1] with u ≡ v (mod n-i). Requires n >= 2 and i <= n-1.
FiniteSemiring bni(std::size_t n, std::size_t i);
// Integers modulo n, i.e. B(n, 0).
FiniteSemiring zn(std::size_t n);
// Boolean semiring {0, 1} with 1 + 1 = 1.
FiniteSemiring boolean_semiring();
// Three elements {0, a, 1}; addition is max and multiplication min on 0 < a < 1.
FiniteSemiring s3();

struct Ideal {
    ElementSet members;
    friend bool operator==(const Ideal&, const Ideal&) = default;
};

bool is_ideal(const FiniteSemiring& r, const ElementSet& s);
bool is_prime(const FiniteSemiring& r, const Ideal& p);

// All ideals in canonical order, generated from principal ideals by ideal sums.
std::vector<Ideal> ideals(const FiniteSemiring& r);

// r + a ∈ I with a ∈ I forces r ∈ I. Throws NotAnIdealError.
bool is_subtractive(const FiniteSemiring& r, const Ideal& i);
bool is_subtractive_semiring(const FiniteSemiring& r);

struct SpectrumReport {
    std::vector<Ideal> ideals;
    std::vector<Ideal> spec;
    std::vector<Ideal> max;
    std::vector<Ideal> min_primes;
    Ideal jacobson;
    Ideal nilradical;
    Ideal prime_radical;
    std::size_t kdim = 0;
    bool is_local = false, is_reduced = false, is_vnr = false, is_pi_regular = false;
    bool is_add_idempotent = false, is_mul_idempotent = false, is_idempotent = false;
    bool is_subtractive_semiring = false, is_semidomain = false;
    bool is_fmax = false, is_fmin = false;
    bool is_bmax = false, is_amin = false, is_pamin = false, is_pbmax = false;
};

SpectrumReport spectrum(const FiniteSemiring& r);

// Ideals ordered by inclusion; lattice index k is ideals[k].
struct IdealLattice {
    std::shared_ptr<const FiniteLattice> lattice;
    std::vector<Ideal> ideals;
    Index index_of(const Ideal& i) const;
};

IdealLattice ideal_lattice(const FiniteSemiring& r);

enum class SpecSelector { All, Max, Min, DropZero };

// Spec(R) (or the selected part of it) inside Ideal(R).
XTopSpace spec_space(const FiniteSemiring& r, SpecSelector which = SpecSelector::All);

// Number of distinct prime divisors; k >= 2, else RangeError.
std::size_t omega(std::size_t k);
std::vector<std::size_t> prime_divisors(std::size_t k);

struct BniVerification {
    std::size_t n = 0, i = 0;
    int theorem_case = 0;  // 1..4
    std::vector<ElementSet> predicted_spec;
    std::vector<ElementSet> computed_spec;
    std::size_t predicted_kdim = 0;
    std::size_t computed_kdim = 0;
    std::string predicted_shape;
    std::string computed_shape;
    bool match = false;  // identical ideal sets and equal kdim
};

BniVerification verify_bni(std::size_t n, std::size_t i);

}  // namespace xtop
