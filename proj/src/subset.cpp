#include "connspace/subset.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace connspace {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::missing_empty_set: return "MissingEmptySet";
        case Errc::not_union_closed: return "NotUnionClosed";
        case Errc::missing_singleton: return "MissingSingleton";
        case Errc::not_integral: return "NotIntegral";
        case Errc::size_limit_exceeded: return "SizeLimitExceeded";
        case Errc::family_size_limit_exceeded: return "FamilySizeLimitExceeded";
        case Errc::ground_mismatch: return "GroundMismatch";
        case Errc::not_connected: return "NotConnected";
        case Errc::not_realizable: return "NotRealizable";
        case Errc::no_index_for_empty_space: return "NoIndexForEmptySpace";
        case Errc::invalid_partition: return "InvalidPartition";
        case Errc::invalid_point: return "InvalidPoint";
        case Errc::invalid_edge: return "InvalidEdge";
        case Errc::not_irreducible: return "NotIrreducible";
        case Errc::not_morphism: return "NotMorphism";
        case Errc::hom_too_large: return "HomTooLarge";
        case Errc::search_too_large: return "SearchTooLarge";
        case Errc::parse_error: return "ParseError";
        case Errc::unknown_label: return "UnknownLabel";
        case Errc::bad_argument: return "BadArgument";
    }
    return "UnknownError";
}

GroundSet GroundSet::of(std::size_t n) {
    if (n > 64) raise(Errc::size_limit_exceeded, "carrier size exceeds the 64-point cap");
    GroundSet g;
    g.n = n;
    return g;
}

GroundSet GroundSet::of(std::size_t n, std::vector<std::string> labels) {
    GroundSet g = of(n);
    if (!labels.empty()) {
        if (labels.size() != n)
            raise(Errc::bad_argument, "label count does not match carrier size");
        std::unordered_set<std::string> seen;
        for (const auto& l : labels) {
            if (l.empty()) raise(Errc::bad_argument, "empty point label");
            if (!seen.insert(l).second)
                raise(Errc::bad_argument, "duplicate point label: " + l);
        }
        g.labels = std::move(labels);
    }
    return g;
}

std::string GroundSet::label(std::size_t i) const {
    if (i < labels.size()) return labels[i];
    return std::to_string(i);
}

std::string GroundSet::describe(Subset s) const {
    std::ostringstream out;
    out << '{';
    bool first = true;
    s.for_each_point([&](std::size_t i) {
        if (!first) out << ' ';
        first = false;
        out << label(i);
    });
    out << '}';
    return out.str();
}

SubsetFamily::SubsetFamily(std::vector<Subset> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end(), canonical_less);
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

SubsetFamily SubsetFamily::of(std::initializer_list<std::uint64_t> masks) {
    std::vector<Subset> v;
    v.reserve(masks.size());
    for (auto m : masks) v.push_back(Subset{m});
    return SubsetFamily(std::move(v));
}

bool SubsetFamily::contains(Subset s) const {
    return std::binary_search(members_.begin(), members_.end(), s, canonical_less);
}

SubsetFamily SubsetFamily::nontrivial() const {
    std::vector<Subset> out;
    for (Subset s : members_)
        if (s.card() >= 2) out.push_back(s);
    return SubsetFamily(std::move(out));
}

bool SubsetFamily::fits(const GroundSet& g) const {
    for (Subset s : members_)
        if (!g.admits(s)) return false;
    return true;
}

SubsetFamily SubsetFamily::united(const SubsetFamily& other) const {
    std::vector<Subset> out = members_;
    out.insert(out.end(), other.members_.begin(), other.members_.end());
    return SubsetFamily(std::move(out));
}

SubsetFamily SubsetFamily::intersected(const SubsetFamily& other) const {
    std::vector<Subset> out;
    for (Subset s : members_)
        if (other.contains(s)) out.push_back(s);
    return SubsetFamily(std::move(out));
}

bool SubsetFamily::family_less(const SubsetFamily& a, const SubsetFamily& b) {
    return std::lexicographical_compare(a.members_.begin(), a.members_.end(),
                                        b.members_.begin(), b.members_.end(),
                                        canonical_less);
}

void check_carrier(std::size_t n, const Limits& lim) {
    if (n > lim.carrier_cap())
        raise(Errc::size_limit_exceeded,
              "carrier size " + std::to_string(n) + " exceeds the limit of " +
                  std::to_string(lim.carrier_cap()));
}

std::uint64_t capped_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
    if (base == 0) return exp == 0 ? 1 : 0;
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (result > cap / (base == 0 ? 1 : base)) return cap + 1;
        result *= base;
        if (result > cap) return cap + 1;
    }
    return result;
}

} // namespace connspace
