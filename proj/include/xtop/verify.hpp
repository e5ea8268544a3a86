#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xtop/poset.hpp"

namespace xtop {

struct SuiteResult {
    std::string suite;
    std::size_t instances = 0;
    std::vector<std::string> failures;
    bool passed() const noexcept { return failures.empty(); }
};

// Union-closure and irreducibility tests agree on every lattice with at most
// max_size elements and every X ⊆ L \ {1}.
SuiteResult verify_xct(std::size_t max_size = 5);
// cross_check on from_poset spaces of every poset with at most max_size elements.
SuiteResult verify_quarter(std::size_t max_size = 6);
// Spec(Z_n) for composite n <= max_n is discrete with irredundant Jacobson
// meet; cross_check passes on antichains up to max_size.
SuiteResult verify_discrete(std::size_t max_n = 60, std::size_t max_size = 6);
// Tree/dual-tree/chain forests with at most max_size elements.
SuiteResult verify_forest(std::size_t max_size = 9);
// verify_bni over 2 <= n <= max_n, 0 <= i < n, plus the separation axioms of
// the resulting spectra.
SuiteResult verify_bni_grid(std::size_t max_n = 20);

struct VerifyOptions {
    std::optional<std::size_t> max_size;
    std::optional<std::size_t> max_n;
};

// suite is one of xct, quarter, discrete, forest, bni, all.
// Throws ParseError for an unknown suite name.
std::vector<SuiteResult> run_suite(const std::string& suite, const VerifyOptions& opts = {});

// "n=3 [a<b, a<c]" style rendering used in failure messages.
std::string describe_poset(const FinitePoset& p);

}  // namespace xtop
