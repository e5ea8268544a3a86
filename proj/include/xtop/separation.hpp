#pragma once

#include <string>
#include <vector>

#include "xtop/element_set.hpp"
#include "xtop/space.hpp"

namespace xtop {

// Exhaustive routines enumerate all 2^|X| subsets of X.
inline constexpr std::size_t kMaxBruteForcePoints = 16;

// All fields are sets of lattice indices.
struct SpecialSets {
    ElementSet min, max;
    ElementSet si;   // strongly X-irreducible, checked on pairs
    ElementSet csi;  // completely strongly X-irreducible, checked on all subsets
    ElementSet amin, bmax;
    ElementSet iso, ro, cl, k, excl;
};

struct PointFlags {
    Index point;
    bool is_closed = false;
    bool is_kerneled = false;
    bool is_isolated = false;
    bool is_regular_open = false;
    bool is_excluded = false;
    bool is_min = false;
    bool is_max = false;
    bool in_si = false;
    bool in_csi = false;
    bool is_abs_min = false;
    bool is_barely_max = false;
};

struct SeparationReport {
    std::size_t kdim = 0;
    bool t0 = false, t_quarter = false, t_half = false, t_threequarter = false;
    bool t1 = false, t2 = false, t1half_kc = false;
    bool r0 = false, r1 = false, tf = false, es = false;
    bool discrete = false, irreducible = false, anti_t2 = false, connected = false;
    bool sober = false, spectral = false, quasi_hausdorff = false;
    bool totally_separated = false, totally_disconnected = false;
    bool ind_zero_dim = false, stone = false;
    bool amin = false, bmax = false, pamin = false, pbmax = false;
    bool complete_max_property = false;
    std::vector<ElementSet> components;
    std::vector<ElementSet> quasicomponents;
};

struct Components {
    std::vector<ElementSet> connected;
    std::vector<ElementSet> quasi;
};

struct MeetInfo {
    Index jacobson;  // meet of Max(X)
    Index prime;     // meet of Min(X)
    bool j_irredundant;
    bool q_irredundant;
};

struct CheckResult {
    std::string id;
    bool holds;
    std::string witness;
};

// Each of these throws TooLargeError when |X| > kMaxBruteForcePoints.
SpecialSets special_sets(const XTopSpace& s);
std::vector<PointFlags> classify_points(const XTopSpace& s);
SeparationReport separation_report(const XTopSpace& s);
Components components(const XTopSpace& s);
MeetInfo jacobson_and_prime_meets(const XTopSpace& s);

// Longest chain length in X (edges, not elements); 0 for X empty.
std::size_t krull_dim(const XTopSpace& s);

// Evaluates every known equivalence on s, both sides independently.
std::vector<CheckResult> cross_check(const XTopSpace& s);
bool all_hold(const std::vector<CheckResult>& checks);

}  // namespace xtop
