#pragma once

#include <cstdint>

namespace sidedisk {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Counter-based stream: value k of stream s under seed is a pure function of
// (seed, s, k), so trials can be evaluated in any order or thread.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream) : key_(splitmix64(seed ^ splitmix64(stream + 0x632be59bd9b4e019ULL))) {}

    std::uint64_t next() { return splitmix64(key_ + splitmix64(counter_++)); }
    // uniform in [0, 1)
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace sidedisk
