#ifndef TRIDIST_RNG_HPP
#define TRIDIST_RNG_HPP

#include <cstdint>
#include <random>

#include "tridist/rational.hpp"

namespace tridist {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Deterministic random stream. Draws avoid std::uniform_*_distribution so
// that sequences are identical across standard library implementations.
// Substreams derived from (seed, index) keep parallel reductions
// reproducible regardless of thread count.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(splitmix64(seed)) {}
    Rng(std::uint64_t seed, std::uint64_t stream)
        : eng_(splitmix64(splitmix64(seed) ^ (stream + 0x632be59bd9b4e019ull))) {}

    std::uint64_t next_u64() { return eng_(); }

    // uniform in [0, n) by rejection
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) return 0;
        std::uint64_t limit = ~0ull - ~0ull % n;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % n;
    }

    // uniform integer in [lo, hi]
    long long int_in(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    // numerator in [-num_range, num_range], denominator in [1, den_max]
    Rational rational(long long num_range, long long den_max) {
        Rational q(static_cast<long>(int_in(-num_range, num_range)),
                   static_cast<long>(int_in(1, den_max)));
        q.canonicalize();
        return q;
    }

    Rational nonzero_rational(long long num_range, long long den_max) {
        for (;;) {
            Rational q = rational(num_range, den_max);
            if (sgn(q) != 0) return q;
        }
    }

    // uniform in [0, 1) with 53 random bits
    double unit_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  private:
    std::mt19937_64 eng_;
};

}  // namespace tridist

#endif
