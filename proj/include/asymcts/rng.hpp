#ifndef ASYMCTS_RNG_HPP
#define ASYMCTS_RNG_HPP

#include <cstdint>
#include <random>

namespace asymcts {

using Rng = std::mt19937_64;

// SplitMix64 finalizer. Used for deriving independent substream seeds from a
// master seed, so parallel workers get identical streams regardless of
// scheduling order.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a) {
    return splitmix64(splitmix64(master) ^ splitmix64(a * 0x9e3779b97f4a7c15ULL + 1));
}

constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
    return derive_seed(derive_seed(master, a), b);
}

// Uniform index in [0, n). Consumes randomness only when there is an actual
// choice (n > 1); trajectory-equivalence tests rely on this convention, so
// every tie-break and uniform pick in the library goes through here.
template <class R>
std::size_t pick_index(R& rng, std::size_t n) {
    if (n <= 1) return 0;
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

}  // namespace asymcts

#endif  // ASYMCTS_RNG_HPP
