#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace qlevr {

// splitmix64 finalizer. Used both to seed generator state and to derive
// independent per-entity streams from (seed, id) pairs.
inline uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Stream-splitting rule: the stream for entity (a, b) under a master seed is
// mix64(mix64(mix64(seed) ^ a) ^ b). Every consumer of randomness in the
// pipeline owns a private stream derived this way, so scenes (and retries)
// are independent and reproducible regardless of evaluation order.
inline uint64_t stream_seed(uint64_t seed, uint64_t a, uint64_t b = 0) {
    return mix64(mix64(mix64(seed) ^ a) ^ b);
}

// xoshiro256** 1.0 (Blackman & Vigna). Chosen over std::mt19937_64 because
// the raw output *and* the derived uniform ints/doubles below are specified
// here bit-for-bit; std::uniform_*_distribution is not portable across
// standard libraries.
class Rng {
public:
    explicit Rng(uint64_t seed) {
        uint64_t sm = seed;
        for (auto& word : state_) {
            sm += 0x9e3779b97f4a7c15ULL;
            uint64_t z = sm;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            word = z ^ (z >> 31);
        }
    }

    uint64_t next_u64() {
        const uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [lo, hi], inclusive. Unbiased via rejection.
    int uniform_int(int lo, int hi) {
        if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
        const uint64_t span = static_cast<uint64_t>(hi) - static_cast<uint64_t>(lo) + 1;
        const uint64_t reject_below = (-span) % span;
        for (;;) {
            const uint64_t r = next_u64();
            if (r >= reject_below) return lo + static_cast<int>(r % span);
        }
    }

    bool coin(double p_true = 0.5) { return uniform() < p_true; }

    template <class T>
    const T& pick(std::span<const T> items) {
        if (items.empty()) throw std::invalid_argument("pick: empty span");
        return items[static_cast<size_t>(uniform_int(0, static_cast<int>(items.size()) - 1))];
    }

    template <class T>
    const T& pick(const std::vector<T>& items) {
        return pick(std::span<const T>(items));
    }

    // Fisher-Yates; deterministic across platforms (std::shuffle is not).
    template <class T>
    void shuffle(std::vector<T>& items) {
        for (int i = static_cast<int>(items.size()) - 1; i > 0; --i) {
            std::swap(items[static_cast<size_t>(i)], items[static_cast<size_t>(uniform_int(0, i))]);
        }
    }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    uint64_t state_[4];
};

}  // namespace qlevr
