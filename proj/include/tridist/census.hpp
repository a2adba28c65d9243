#ifndef TRIDIST_CENSUS_HPP
#define TRIDIST_CENSUS_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "tridist/exec.hpp"
#include "tridist/frame.hpp"

namespace tridist {

// Distinct-distance bookkeeping for one configuration: the set D of distinct
// squared anchor distances, kappa = |D|, and the p3-fibers P_Z.
struct DistanceCensus {
    std::vector<Rational> D;  // sorted distinct squared distances, all anchors
    std::size_t kappa = 0;
    std::map<Rational, std::vector<int>> fibers;  // Z -> indices of P at p3-distance Z
    std::array<std::size_t, 3> per_anchor_distinct{0, 0, 0};
    std::vector<DistanceTriple> triples;  // per point, same order as the configuration
    std::size_t n = 0;
};

// Squared distances of an ordered pair (q1, q2) to (p1, p2): X,Y from q1 and
// U,V from q2. Encodes the incidence (Y,U) in gamma_{X,V}.
struct Quadruple {
    Rational X, Y, U, V;
    bool operator==(const Quadruple& o) const {
        return X == o.X && Y == o.Y && U == o.U && V == o.V;
    }
    bool operator<(const Quadruple& o) const;
};

struct EqualPairEntry {
    int first = 0, second = 0;  // ordered point indices, same fiber
    Quadruple quad;
};

struct PairCount {
    std::int64_t Q = 0;
    std::optional<Rational> lower_bound;  // n^2/(2 kappa) - n/2; empty when kappa = 0
    bool bound_holds = true;
};

// Builds D, kappa, fibers and per-anchor counts. Also asserts the two-circle
// sanity bound n <= 2 kappa^2, which no valid configuration can violate.
DistanceCensus build_census(const Configuration& config, Exec exec = Exec::parallel);

// Q = sum over fibers of C(|P_Z|, 2) (unordered pairs), plus the exact
// Cauchy-Schwarz lower bound for comparison.
PairCount pair_count_Q(const DistanceCensus& census);

// One entry per ordered pair of distinct points within a fiber; the list has
// exactly 2Q entries, ordered deterministically.
std::vector<EqualPairEntry> enumerate_equal_pairs(const DistanceCensus& census,
                                                  const Configuration& config);

}  // namespace tridist

#endif
