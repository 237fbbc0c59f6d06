#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace binchart {

// All Monte-Carlo code draws from per-run engines derived from a single root
// seed. Stream derivation is counter-based: the root seed, a salt identifying
// the experiment cell, and the run index are mixed through the splitmix64
// finalizer. Results therefore do not depend on thread count or scheduling:
// run i of cell c always sees the same stream.
using Rng = std::mt19937_64;

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

inline std::uint64_t mix64(std::uint64_t z) {
    z += kGolden;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// FNV-1a, used to turn a human-readable cell label into a salt.
inline std::uint64_t hash_label(std::string_view label) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : label) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::uint64_t stream_seed(std::uint64_t root_seed, std::uint64_t salt,
                                 std::uint64_t index) {
    return mix64(mix64(root_seed ^ mix64(salt)) + index);
}

inline Rng make_rng(std::uint64_t root_seed, std::uint64_t salt, std::uint64_t index) {
    return Rng(stream_seed(root_seed, salt, index));
}

inline Rng make_rng(std::uint64_t root_seed, std::string_view label, std::uint64_t index) {
    return make_rng(root_seed, hash_label(label), index);
}

}  // namespace binchart
