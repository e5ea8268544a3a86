#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace xtop {

using Index = std::size_t;

// Finite set of dense element indices, stored as a bitset.
// Trailing zero words are never kept, so equal sets compare equal
// regardless of the universe they were built for.
class ElementSet {
public:
    ElementSet() = default;
    ElementSet(std::initializer_list<Index> items);

    static ElementSet full(std::size_t n);
    template <class Range>
    static ElementSet from_range(const Range& items) {
        ElementSet s;
        for (auto i : items) s.insert(static_cast<Index>(i));
        return s;
    }

    bool contains(Index i) const noexcept {
        const std::size_t w = i / 64;
        return w < words_.size() && ((words_[w] >> (i % 64)) & 1u);
    }
    void insert(Index i);
    void erase(Index i);

    std::size_t size() const noexcept;
    bool empty() const noexcept { return words_.empty(); }

    // Smallest member; undefined when empty.
    Index front() const noexcept;
    std::vector<Index> elements() const;

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                const int b = std::countr_zero(bits);
                f(static_cast<Index>(w * 64 + b));
                bits &= bits - 1;
            }
        }
    }

    bool is_subset_of(const ElementSet& other) const noexcept;
    bool intersects(const ElementSet& other) const noexcept;

    ElementSet& operator|=(const ElementSet& other);
    ElementSet& operator&=(const ElementSet& other);
    ElementSet& operator-=(const ElementSet& other);

    friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
    friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
    friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }
    friend bool operator==(const ElementSet&, const ElementSet&) = default;

    // Allocation-free queries on a ∩ b.
    static bool intersection_subset_of(const ElementSet& a, const ElementSet& b, const ElementSet& c) noexcept;
    // Smallest / largest member of a ∩ b, or npos.
    static Index first_common(const ElementSet& a, const ElementSet& b) noexcept;
    static Index last_common(const ElementSet& a, const ElementSet& b) noexcept;
    static constexpr Index npos = static_cast<Index>(-1);

    std::size_t hash() const noexcept;
    const std::vector<std::uint64_t>& words() const noexcept { return words_; }

private:
    void trim();
    std::vector<std::uint64_t> words_;
};

// Canonical set order: by cardinality, then lexicographically on the
// ascending member list.
bool canonical_less(const ElementSet& a, const ElementSet& b);

void sort_canonical(std::vector<ElementSet>& family);

std::string to_string(const ElementSet& s);

struct ElementSetHash {
    std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

}  // namespace xtop
