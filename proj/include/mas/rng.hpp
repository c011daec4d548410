#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace mas {

// Seeded generator with platform-independent draws: mersenne twister
// raw output, explicit mappings instead of std distributions.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform01() { return (double)(next() >> 11) * 0x1.0p-53; }

    // Uniform in [0, bound); modulo bias is negligible for graph sizes.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    bool bernoulli(double p) { return uniform01() < p; }

    template <class T>
    void shuffle(std::vector<T>& items) {
        for (size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace mas
