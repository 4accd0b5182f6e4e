#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace conceptminer {

struct ObjectTag {};
struct PropertyTag {};

/// Fixed-width membership set over the indices [0, universe()).
///
/// The tag keeps object sets and property sets from being mixed up; the two
/// sides of a context never share an index space.
template <class Tag>
class IndexSet {
public:
    using bits_type = boost::dynamic_bitset<std::uint64_t>;
    static constexpr std::size_t npos = bits_type::npos;

    IndexSet() = default;
    explicit IndexSet(std::size_t universe) : bits_(universe) {}
    IndexSet(std::size_t universe, std::initializer_list<std::size_t> members) : bits_(universe) {
        for (auto i : members) bits_.set(i);
    }
    IndexSet(std::size_t universe, const std::vector<std::size_t>& members) : bits_(universe) {
        for (auto i : members) bits_.set(i);
    }

    static IndexSet full(std::size_t universe) {
        IndexSet s(universe);
        s.bits_.set();
        return s;
    }

    std::size_t universe() const noexcept { return bits_.size(); }
    std::size_t count() const noexcept { return bits_.count(); }
    bool empty() const noexcept { return bits_.none(); }
    bool contains(std::size_t i) const { return i < bits_.size() && bits_.test(i); }

    IndexSet& insert(std::size_t i) {
        bits_.set(i);
        return *this;
    }
    IndexSet& erase(std::size_t i) {
        bits_.reset(i);
        return *this;
    }

    std::size_t first() const noexcept { return bits_.find_first(); }
    std::size_t next(std::size_t i) const noexcept { return bits_.find_next(i); }

    bool is_subset_of(const IndexSet& other) const { return bits_.is_subset_of(other.bits_); }
    bool intersects(const IndexSet& other) const { return bits_.intersects(other.bits_); }

    IndexSet& operator&=(const IndexSet& o) {
        bits_ &= o.bits_;
        return *this;
    }
    IndexSet& operator|=(const IndexSet& o) {
        bits_ |= o.bits_;
        return *this;
    }
    IndexSet& operator-=(const IndexSet& o) {
        bits_ -= o.bits_;
        return *this;
    }
    friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
    friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
    friend IndexSet operator-(IndexSet a, const IndexSet& b) { return a -= b; }
    friend bool operator==(const IndexSet& a, const IndexSet& b) { return a.bits_ == b.bits_; }

    /// Size of the intersection without materializing it.
    std::size_t intersection_count(const IndexSet& o) const {
        std::size_t n = 0;
        for (auto i = first(); i != npos; i = next(i))
            if (o.bits_.test(i)) ++n;
        return n;
    }

    template <class F>
    void for_each(F&& f) const {
        for (auto i = first(); i != npos; i = next(i)) f(i);
    }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    const bits_type& bits() const noexcept { return bits_; }

private:
    bits_type bits_;
};

/// Lexicographic order on the sorted index sequences; a proper prefix sorts first.
template <class Tag>
bool lex_less(const IndexSet<Tag>& a, const IndexSet<Tag>& b) {
    auto i = a.first();
    auto j = b.first();
    while (i != IndexSet<Tag>::npos && j != IndexSet<Tag>::npos) {
        if (i != j) return i < j;
        i = a.next(i);
        j = b.next(j);
    }
    return i == IndexSet<Tag>::npos && j != IndexSet<Tag>::npos;
}

struct LexLess {
    template <class Tag>
    bool operator()(const IndexSet<Tag>& a, const IndexSet<Tag>& b) const {
        return lex_less(a, b);
    }
};

using ObjectSet = IndexSet<ObjectTag>;
using PropertySet = IndexSet<PropertyTag>;

/// An incident (object, property) pair of a relation.
struct Couple {
    std::size_t object = 0;
    std::size_t property = 0;

    friend bool operator==(const Couple&, const Couple&) = default;
    friend auto operator<=>(const Couple&, const Couple&) = default;
};

}  // namespace conceptminer
