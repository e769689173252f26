#pragma once

#include <cstdint>
#include <vector>

#include "fragchain/core.hpp"

namespace fragchain {

/// Deterministic 64-bit generator (splitmix64). Stable across platforms and
/// standard libraries, so a seed printed in a failure report replays the
/// exact instance.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    std::uint64_t below(std::uint64_t bound);  // uniform in [0, bound); 0 when bound == 0

private:
    std::uint64_t state_;
};

enum class Profile {
    Uniform,        // positions uniform, extents in [1, max_len]
    TwoSpikes,      // m and k derived from n; all first-axis borders in two dense columns
    CustomDensity,  // first-axis border count per column given explicitly
};

struct GenSpec {
    std::uint64_t seed = 1;
    Pos n = 0;
    Pos m = 0;
    std::int64_t k = 0;
    Pos max_len = 8;
    Score max_score = 10;
    Profile profile = Profile::Uniform;
    std::vector<std::int64_t> density;  // CustomDensity only; k is derived as sum/2
};

// Deterministic for a fixed spec. TwoSpikes(n) sets m = round(n^(4/5)) and
// k = 2*round(n^(3/2)), with round(n^(3/2)) unit-extent fragments at column 0
// and as many at column n-1, rows uniform. Throws std::invalid_argument on
// infeasible specs.
Instance generate(const GenSpec& spec);

}  // namespace fragchain
