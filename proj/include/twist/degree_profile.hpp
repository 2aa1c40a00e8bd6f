#pragma once

#include <cstdint>
#include <map>

namespace twist {

/// Number of twists of each exact degree d, together with the total count.
/// Entries are kept for every degree the producer enumerates, zeros included.
struct DegreeProfile {
    std::map<std::uint64_t, std::uint64_t> entries;
    std::uint64_t total = 0;

    std::uint64_t at(std::uint64_t degree) const {
        const auto it = entries.find(degree);
        return it == entries.end() ? 0 : it->second;
    }

    std::uint64_t entry_sum() const {
        std::uint64_t sum = 0;
        for (const auto& [d, count] : entries) sum += count;
        return sum;
    }

    friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;
};

}  // namespace twist
