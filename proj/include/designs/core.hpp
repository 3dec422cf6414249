#pragma once

#include <compare>
#include <initializer_list>
#include <map>
#include <set>
#include <vector>

#include "designs/error.hpp"

namespace designs {

// Points are opaque non-negative identifiers. The total order is used for
// deterministic output and search only, never for semantics.
using Point = int;

// A finite set of points. Stored sorted and duplicate-free, so comparison is
// lexicographic on the sorted element list; that ordering is the canonical
// block order used throughout.
class Block {
public:
    Block() = default;
    Block(std::initializer_list<Point> pts) : elems_(pts) { normalize(); }
    explicit Block(std::vector<Point> pts) : elems_(std::move(pts)) { normalize(); }

    int size() const { return static_cast<int>(elems_.size()); }
    bool empty() const { return elems_.empty(); }
    bool contains(Point p) const;

    const std::vector<Point>& points() const { return elems_; }
    std::vector<Point>::const_iterator begin() const { return elems_.begin(); }
    std::vector<Point>::const_iterator end() const { return elems_.end(); }

    friend auto operator<=>(const Block&, const Block&) = default;

private:
    void normalize();
    std::vector<Point> elems_;
};

// |a ∩ b|
int intersection_number(const Block& a, const Block& b);

Block block_intersection(const Block& a, const Block& b);
Block block_difference(const Block& a, const Block& b);

// A multiset of blocks, kept as distinct block -> multiplicity (>= 1).
class BlockCollection {
public:
    BlockCollection() = default;
    BlockCollection(std::initializer_list<Block> blocks);
    explicit BlockCollection(const std::vector<Block>& blocks);

    void add(const Block& bl, int count = 1);

    // Total size b, multiplicities counted.
    int size() const { return total_; }
    bool empty() const { return total_ == 0; }

    int multiplicity(const Block& bl) const;
    bool contains(const Block& bl) const { return multiplicity(bl) > 0; }

    const std::map<Block, int>& entries() const { return entries_; }

    // Expanded occurrence list in canonical order.
    std::vector<Block> occurrences() const;

    // Multiset inclusion: every multiplicity of `sub` is <= ours.
    bool includes(const BlockCollection& sub) const;

    BlockCollection& operator+=(const BlockCollection& other);
    friend BlockCollection operator+(BlockCollection lhs, const BlockCollection& rhs) {
        lhs += rhs;
        return lhs;
    }

    // Every multiplicity scaled by n >= 0; n = 0 empties the collection.
    BlockCollection scaled(int n) const;

    friend bool operator==(const BlockCollection&, const BlockCollection&) = default;

private:
    std::map<Block, int> entries_;
    int total_ = 0;
};

// The pair (V, B): a finite point set together with a block multiset.
// Construction normalizes but does not require well-formedness; call
// well_formed() to test it.
class IncidenceSystem {
public:
    IncidenceSystem() = default;
    IncidenceSystem(std::vector<Point> points, BlockCollection blocks);

    const std::vector<Point>& points() const { return points_; }
    const BlockCollection& blocks() const { return blocks_; }

    bool has_point(Point p) const;

    // v
    int order() const { return static_cast<int>(points_.size()); }
    // b
    int size() const { return blocks_.size(); }

    int multiplicity(const Block& bl) const { return blocks_.multiplicity(bl); }

    friend bool operator==(const IncidenceSystem&, const IncidenceSystem&) = default;

private:
    std::vector<Point> points_;  // sorted, unique
    BlockCollection blocks_;
};

// True iff the union of all blocks is contained in the point set.
bool well_formed(const IncidenceSystem& sys);

// Distinct blocks, multiplicities discarded.
std::set<Block> support(const IncidenceSystem& sys);

// Number of block occurrences containing every point of ps (a set; duplicates
// in the argument are ignored). points_index(sys, {}) == b.
int points_index(const IncidenceSystem& sys, const std::vector<Point>& ps);

// Number of block occurrences containing x. Throws point_not_in_system if
// x is not a point of the system.
int replication_number(const IncidenceSystem& sys, Point x);

// The four fundamental property sets of a set system.
struct PropertySets {
    std::set<int> block_sizes;                 // K
    std::set<int> replication_numbers;         // R
    std::map<int, std::set<int>> t_indices;    // Λ_t for 0 <= t <= t_max
    std::set<int> intersection_numbers;        // I

    friend bool operator==(const PropertySets&, const PropertySets&) = default;
};

// Computes K, R, Λ_0..Λ_t_max and I. t_max is clamped to v. I ranges over
// unordered pairs of distinct block occurrences, so two occurrences of a
// repeated block contribute the full block size.
PropertySets property_sets(const IncidenceSystem& sys, int t_max);

// Calls fn(subset) for every t-element subset of pts, in lexicographic order.
// pts must be sorted and duplicate-free.
template <typename Fn>
void for_each_subset(const std::vector<Point>& pts, int t, Fn&& fn) {
    if (t < 0 || t > static_cast<int>(pts.size())) return;
    std::vector<Point> current;
    current.reserve(t);
    auto recurse = [&](auto&& self, int from) -> void {
        if (static_cast<int>(current.size()) == t) {
            fn(const_cast<const std::vector<Point>&>(current));
            return;
        }
        int needed = t - static_cast<int>(current.size());
        for (int i = from; i <= static_cast<int>(pts.size()) - needed; ++i) {
            current.push_back(pts[i]);
            self(self, i + 1);
            current.pop_back();
        }
    };
    recurse(recurse, 0);
}

}  // namespace designs
