#include "fragchain/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace fragchain {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    if (bound == 0) return 0;
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
}

namespace {

Score draw_score(SplitMix64& rng, Score max_score) {
    return 1 + static_cast<Score>(rng.below(static_cast<std::uint64_t>(max_score)));
}

Instance generate_uniform(const GenSpec& spec) {
    if (spec.k < 0) throw std::invalid_argument("negative fragment count");
    Instance inst{spec.n, spec.m, {}};
    if (spec.k == 0) return inst;
    if (spec.n < 1 || spec.m < 1) {
        throw std::invalid_argument("fragments need positive sequence lengths");
    }
    if (spec.max_len < 1) throw std::invalid_argument("max fragment extent must be at least 1");
    if (spec.max_score < 1) throw std::invalid_argument("max score must be at least 1");

    SplitMix64 rng(spec.seed);
    inst.fragments.reserve(static_cast<std::size_t>(spec.k));
    for (std::int64_t i = 0; i < spec.k; ++i) {
        const Pos left = static_cast<Pos>(rng.below(static_cast<std::uint64_t>(spec.n)));
        const Pos right =
            left + static_cast<Pos>(rng.below(static_cast<std::uint64_t>(std::min(spec.max_len, spec.n - left))));
        const Pos bottom = static_cast<Pos>(rng.below(static_cast<std::uint64_t>(spec.m)));
        const Pos top =
            bottom + static_cast<Pos>(rng.below(static_cast<std::uint64_t>(std::min(spec.max_len, spec.m - bottom))));
        inst.fragments.push_back({left, right, bottom, top, draw_score(rng, spec.max_score)});
    }
    return inst;
}

Instance generate_two_spikes(const GenSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("two-spikes needs a positive first-sequence length");
    if (spec.max_score < 1) throw std::invalid_argument("max score must be at least 1");

    const Pos m = std::max<Pos>(1, std::llround(std::pow(static_cast<double>(spec.n), 0.8)));
    const std::int64_t per_spike = std::llround(std::pow(static_cast<double>(spec.n), 1.5));

    Instance inst{spec.n, m, {}};
    inst.fragments.reserve(static_cast<std::size_t>(2 * per_spike));
    SplitMix64 rng(spec.seed);
    const auto spike = [&](Pos column, std::int64_t count) {
        for (std::int64_t i = 0; i < count; ++i) {
            const Pos row = static_cast<Pos>(rng.below(static_cast<std::uint64_t>(m)));
            inst.fragments.push_back({column, column, row, row, draw_score(rng, spec.max_score)});
        }
    };
    spike(0, per_spike);
    spike(spec.n - 1, per_spike);
    return inst;
}

Instance generate_custom_density(const GenSpec& spec) {
    if (static_cast<Pos>(spec.density.size()) > spec.n) {
        throw std::invalid_argument("density profile longer than the sequence");
    }
    std::int64_t total = 0;
    for (std::int64_t count : spec.density) {
        if (count < 0) throw std::invalid_argument("negative border count");
        total += count;
    }
    if (total % 2 != 0) throw std::invalid_argument("border counts must pair up into fragments");

    Instance inst{spec.n, spec.m, {}};
    if (total == 0) return inst;
    if (spec.m < 1) throw std::invalid_argument("fragments need a positive second-sequence length");
    if (spec.max_score < 1) throw std::invalid_argument("max score must be at least 1");

    // Border slots in column order; consecutive slots pair into one fragment,
    // so each column receives exactly the requested border count.
    std::vector<Pos> slots;
    slots.reserve(static_cast<std::size_t>(total));
    for (std::size_t column = 0; column < spec.density.size(); ++column) {
        for (std::int64_t c = 0; c < spec.density[column]; ++c) {
            slots.push_back(static_cast<Pos>(column));
        }
    }

    SplitMix64 rng(spec.seed);
    inst.fragments.reserve(static_cast<std::size_t>(total / 2));
    for (std::size_t i = 0; i + 1 < slots.size(); i += 2) {
        const Pos row = static_cast<Pos>(rng.below(static_cast<std::uint64_t>(spec.m)));
        inst.fragments.push_back({slots[i], slots[i + 1], row, row, draw_score(rng, spec.max_score)});
    }
    return inst;
}

}  // namespace

Instance generate(const GenSpec& spec) {
    if (spec.n < 0 || spec.m < 0) throw std::invalid_argument("negative sequence length");
    switch (spec.profile) {
        case Profile::Uniform:
            return generate_uniform(spec);
        case Profile::TwoSpikes:
            return generate_two_spikes(spec);
        case Profile::CustomDensity:
            return generate_custom_density(spec);
    }
    throw std::invalid_argument("unknown profile");
}

}  // namespace fragchain
