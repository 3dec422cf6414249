#include "designs/core.hpp"

#include <algorithm>
#include <string>

namespace designs {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::point_not_in_system: return "point-not-in-system";
        case Errc::not_a_design: return "not-a-design";
        case Errc::not_proper: return "not-proper";
        case Errc::not_block_design: return "not-block-design";
        case Errc::invalid_size_set: return "invalid-size-set";
        case Errc::parameter_range: return "parameter-range";
        case Errc::non_divisible: return "non-divisible";
        case Errc::block_not_present: return "block-not-present";
        case Errc::negative_multiplier: return "negative-multiplier";
        case Errc::malformed_bijection: return "malformed-bijection";
        case Errc::not_a_subcollection: return "not-a-subcollection";
        case Errc::precondition_violation: return "precondition-violation";
        case Errc::inadmissible_parameters: return "inadmissible-parameters";
        case Errc::bound_exceeded: return "bound-exceeded";
        case Errc::malformed_file: return "malformed-file";
        case Errc::not_well_formed: return "not-well-formed";
    }
    return "unknown";
}

void Block::normalize() {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool Block::contains(Point p) const {
    return std::binary_search(elems_.begin(), elems_.end(), p);
}

int intersection_number(const Block& a, const Block& b) {
    int count = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            ++count;
            ++ia;
            ++ib;
        }
    }
    return count;
}

Block block_intersection(const Block& a, const Block& b) {
    std::vector<Point> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return Block(std::move(out));
}

Block block_difference(const Block& a, const Block& b) {
    std::vector<Point> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return Block(std::move(out));
}

BlockCollection::BlockCollection(std::initializer_list<Block> blocks) {
    for (const auto& bl : blocks) add(bl);
}

BlockCollection::BlockCollection(const std::vector<Block>& blocks) {
    for (const auto& bl : blocks) add(bl);
}

void BlockCollection::add(const Block& bl, int count) {
    if (count < 0) {
        throw DesignError(Errc::negative_multiplier, "block multiplicity must be non-negative");
    }
    if (count == 0) return;
    entries_[bl] += count;
    total_ += count;
}

int BlockCollection::multiplicity(const Block& bl) const {
    auto it = entries_.find(bl);
    return it == entries_.end() ? 0 : it->second;
}

std::vector<Block> BlockCollection::occurrences() const {
    std::vector<Block> out;
    out.reserve(total_);
    for (const auto& [bl, mult] : entries_) {
        for (int i = 0; i < mult; ++i) out.push_back(bl);
    }
    return out;
}

bool BlockCollection::includes(const BlockCollection& sub) const {
    for (const auto& [bl, mult] : sub.entries_) {
        if (multiplicity(bl) < mult) return false;
    }
    return true;
}

BlockCollection& BlockCollection::operator+=(const BlockCollection& other) {
    for (const auto& [bl, mult] : other.entries_) add(bl, mult);
    return *this;
}

BlockCollection BlockCollection::scaled(int n) const {
    if (n < 0) {
        throw DesignError(Errc::negative_multiplier, "multiple requires n >= 0");
    }
    BlockCollection out;
    if (n == 0) return out;
    for (const auto& [bl, mult] : entries_) out.add(bl, mult * n);
    return out;
}

IncidenceSystem::IncidenceSystem(std::vector<Point> points, BlockCollection blocks)
    : points_(std::move(points)), blocks_(std::move(blocks)) {
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool IncidenceSystem::has_point(Point p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
}

bool well_formed(const IncidenceSystem& sys) {
    for (const auto& [bl, mult] : sys.blocks().entries()) {
        for (Point p : bl) {
            if (!sys.has_point(p)) return false;
        }
    }
    return true;
}

std::set<Block> support(const IncidenceSystem& sys) {
    std::set<Block> out;
    for (const auto& [bl, mult] : sys.blocks().entries()) out.insert(bl);
    return out;
}

int points_index(const IncidenceSystem& sys, const std::vector<Point>& ps) {
    Block wanted(ps);
    int count = 0;
    for (const auto& [bl, mult] : sys.blocks().entries()) {
        if (std::includes(bl.begin(), bl.end(), wanted.begin(), wanted.end())) {
            count += mult;
        }
    }
    return count;
}

int replication_number(const IncidenceSystem& sys, Point x) {
    if (!sys.has_point(x)) {
        throw DesignError(Errc::point_not_in_system,
                          "point " + std::to_string(x) + " is not in the system");
    }
    int count = 0;
    for (const auto& [bl, mult] : sys.blocks().entries()) {
        if (bl.contains(x)) count += mult;
    }
    return count;
}

PropertySets property_sets(const IncidenceSystem& sys, int t_max) {
    if (t_max < 0) {
        throw DesignError(Errc::parameter_range, "t_max must be >= 0");
    }
    PropertySets out;
    for (const auto& [bl, mult] : sys.blocks().entries()) {
        out.block_sizes.insert(bl.size());
    }
    for (Point x : sys.points()) {
        out.replication_numbers.insert(replication_number(sys, x));
    }
    int t_top = std::min<int>(t_max, sys.order());
    for (int t = 0; t <= t_top; ++t) {
        std::set<int>& indices = out.t_indices[t];
        for_each_subset(sys.points(), t,
                        [&](const std::vector<Point>& ps) { indices.insert(points_index(sys, ps)); });
    }
    // Pairs of distinct occurrences: distinct blocks always pair up; a block
    // with multiplicity >= 2 also pairs with itself and meets itself fully.
    const auto& entries = sys.blocks().entries();
    for (auto it = entries.begin(); it != entries.end(); ++it) {
        if (it->second >= 2) out.intersection_numbers.insert(it->first.size());
        for (auto jt = std::next(it); jt != entries.end(); ++jt) {
            out.intersection_numbers.insert(intersection_number(it->first, jt->first));
        }
    }
    return out;
}

}  // namespace designs
