#pragma once

#include <cstdint>
#include <string_view>

// Self-contained deterministic PRNG and hashing. std::uniform_int_distribution
// is implementation-defined, so seeded runs would not be byte-identical across
// standard libraries; these primitives are fully specified.

namespace agreekit::detail {

inline std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform draw in [0, bound) by rejection, bound >= 1.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t v = next();
        while (v >= limit) v = next();
        return v % bound;
    }
};

// Stream seed for a per-item draw: the item id is mixed in so draws are
// independent of processing order.
inline std::uint64_t mix_seed(std::uint64_t seed, std::string_view item_id) {
    SplitMix64 g(seed ^ fnv1a64(item_id));
    return g.next();
}

template <typename RandomAccess>
void shuffle(RandomAccess& items, SplitMix64& gen) {
    for (std::size_t i = items.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(gen.next_below(i));
        using std::swap;
        swap(items[i - 1], items[j]);
    }
}

}  // namespace agreekit::detail
