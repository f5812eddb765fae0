#pragma once

// Deterministic random streams. Everything randomized flows from one 64-bit
// seed through named sub-streams, so identical configurations reproduce
// byte-identical runs on any platform (std::uniform_int_distribution is not
// portable across standard libraries, hence the hand-rolled bounded draw).

#include <cstdint>
#include <string>

namespace unip {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        // splitmix64
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased draw from [0, n) by rejection.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % n;
    }

    // Independent sub-stream named by a label; used to give each
    // verification case its own reproducible stream.
    Rng derive(const std::string& label) const {
        std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
        for (unsigned char c : label) {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
        Rng sub(state_ ^ h);
        sub.next_u64();
        return sub;
    }

  private:
    std::uint64_t state_;
};

}  // namespace unip
