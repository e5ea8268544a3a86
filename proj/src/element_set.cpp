#include "xtop/element_set.hpp"

#include <algorithm>
#include <sstream>

namespace xtop {

ElementSet::ElementSet(std::initializer_list<Index> items) {
    for (Index i : items) insert(i);
}

ElementSet ElementSet::full(std::size_t n) {
    ElementSet s;
    if (n == 0) return s;
    s.words_.assign((n + 63) / 64, ~std::uint64_t{0});
    const std::size_t rem = n % 64;
    if (rem != 0) s.words_.back() = (std::uint64_t{1} << rem) - 1;
    return s;
}

void ElementSet::insert(Index i) {
    const std::size_t w = i / 64;
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] |= std::uint64_t{1} << (i % 64);
}

void ElementSet::erase(Index i) {
    const std::size_t w = i / 64;
    if (w >= words_.size()) return;
    words_[w] &= ~(std::uint64_t{1} << (i % 64));
    trim();
}

std::size_t ElementSet::size() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

Index ElementSet::front() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w]) return w * 64 + static_cast<Index>(std::countr_zero(words_[w]));
    }
    return 0;
}

std::vector<Index> ElementSet::elements() const {
    std::vector<Index> out;
    out.reserve(size());
    for_each([&](Index i) { out.push_back(i); });
    return out;
}

bool ElementSet::is_subset_of(const ElementSet& other) const noexcept {
    if (words_.size() > other.words_.size()) return false;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] & ~other.words_[w]) return false;
    }
    return true;
}

bool ElementSet::intersects(const ElementSet& other) const noexcept {
    const std::size_t n = std::min(words_.size(), other.words_.size());
    for (std::size_t w = 0; w < n; ++w) {
        if (words_[w] & other.words_[w]) return true;
    }
    return false;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
    if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
    for (std::size_t w = 0; w < other.words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
    if (words_.size() > other.words_.size()) words_.resize(other.words_.size());
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    trim();
    return *this;
}

ElementSet& ElementSet::operator-=(const ElementSet& other) {
    const std::size_t n = std::min(words_.size(), other.words_.size());
    for (std::size_t w = 0; w < n; ++w) words_[w] &= ~other.words_[w];
    trim();
    return *this;
}

std::size_t ElementSet::hash() const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : words_) {
        h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

void ElementSet::trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

bool ElementSet::intersection_subset_of(const ElementSet& a, const ElementSet& b, const ElementSet& c) noexcept {
    const std::size_t n = std::min(a.words_.size(), b.words_.size());
    for (std::size_t w = 0; w < n; ++w) {
        const std::uint64_t cw = w < c.words_.size() ? c.words_[w] : 0;
        if ((a.words_[w] & b.words_[w] & ~cw) != 0) return false;
    }
    return true;
}

Index ElementSet::first_common(const ElementSet& a, const ElementSet& b) noexcept {
    const std::size_t n = std::min(a.words_.size(), b.words_.size());
    for (std::size_t w = 0; w < n; ++w) {
        const std::uint64_t m = a.words_[w] & b.words_[w];
        if (m) return w * 64 + static_cast<Index>(std::countr_zero(m));
    }
    return npos;
}

Index ElementSet::last_common(const ElementSet& a, const ElementSet& b) noexcept {
    for (std::size_t w = std::min(a.words_.size(), b.words_.size()); w-- > 0;) {
        const std::uint64_t m = a.words_[w] & b.words_[w];
        if (m) return w * 64 + 63 - static_cast<Index>(std::countl_zero(m));
    }
    return npos;
}

bool canonical_less(const ElementSet& a, const ElementSet& b) {
    const std::size_t na = a.size();
    const std::size_t nb = b.size();
    if (na != nb) return na < nb;
    const auto ea = a.elements();
    const auto eb = b.elements();
    return ea < eb;
}

void sort_canonical(std::vector<ElementSet>& family) {
    std::sort(family.begin(), family.end(), canonical_less);
}

std::string to_string(const ElementSet& s) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    s.for_each([&](Index i) {
        if (!first) os << ',';
        os << i;
        first = false;
    });
    os << '}';
    return os.str();
}

}  // namespace xtop
