// Deterministic random source. std::mt19937_64 output is pinned by the
// standard, so seeded runs reproduce bit-identically across platforms;
// std::uniform_int_distribution is not, hence the modulo reduction here.
#pragma once

#include <cstdint>
#include <random>

namespace orecomp {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform enough for sampling; bias is irrelevant for the tiny ranges used.
    std::uint64_t below(std::uint64_t n) { return n ? gen_() % n : 0; }

private:
    std::mt19937_64 gen_;
};

}  // namespace orecomp
