#include "tridist/census.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tridist {

bool Quadruple::operator<(const Quadruple& o) const {
    if (X != o.X) return X < o.X;
    if (Y != o.Y) return Y < o.Y;
    if (U != o.U) return U < o.U;
    return V < o.V;
}

namespace {

std::vector<DistanceTriple> compute_triples_serial(const Configuration& config) {
    std::vector<DistanceTriple> out(config.points.size());
    for (std::size_t i = 0; i < config.points.size(); ++i)
        out[i] = distance_triple(config.frame, config.points[i]);
    return out;
}

std::vector<DistanceTriple> compute_triples_parallel(const Configuration& config) {
    std::vector<DistanceTriple> out(config.points.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(config.points.size()); ++i)
        out[static_cast<std::size_t>(i)] = distance_triple(config.frame, config.points[static_cast<std::size_t>(i)]);
    return out;
}

}  // namespace

DistanceCensus build_census(const Configuration& config, Exec exec) {
    config.validate();
    DistanceCensus c;
    c.n = config.points.size();
    c.triples = (exec == Exec::serial) ? compute_triples_serial(config)
                                       : compute_triples_parallel(config);
    std::set<Rational> all, per[3];
    for (std::size_t i = 0; i < c.triples.size(); ++i) {
        const auto& t = c.triples[i];
        per[0].insert(t.X);
        per[1].insert(t.Y);
        per[2].insert(t.Z);
        c.fibers[t.Z].push_back(static_cast<int>(i));
    }
    for (int k = 0; k < 3; ++k) {
        c.per_anchor_distinct[static_cast<std::size_t>(k)] = per[k].size();
        all.insert(per[k].begin(), per[k].end());
    }
    c.D.assign(all.begin(), all.end());
    c.kappa = c.D.size();
    // n <= 2 kappa^2: a point is pinned up to two choices by its (X, Z) pair
    if (c.n > 2 * c.kappa * c.kappa)
        throw std::logic_error("two-circle sanity bound n <= 2 kappa^2 violated");
    return c;
}

PairCount pair_count_Q(const DistanceCensus& census) {
    PairCount pc;
    for (const auto& [z, members] : census.fibers) {
        std::int64_t m = static_cast<std::int64_t>(members.size());
        pc.Q += m * (m - 1) / 2;
    }
    if (census.kappa > 0) {
        Rational n(static_cast<long>(census.n));
        Rational bound = n * n / (2 * Rational(static_cast<long>(census.kappa))) - n / 2;
        pc.lower_bound = bound;
        pc.bound_holds = Rational(static_cast<long>(pc.Q)) >= bound;
    }
    return pc;
}

std::vector<EqualPairEntry> enumerate_equal_pairs(const DistanceCensus& census,
                                                  const Configuration& config) {
    if (census.triples.size() != config.points.size())
        throw std::invalid_argument("census does not match configuration");
    std::vector<EqualPairEntry> out;
    for (const auto& [z, members] : census.fibers) {
        for (int i : members)
            for (int j : members) {
                if (i == j) continue;
                const auto& t1 = census.triples[static_cast<std::size_t>(i)];
                const auto& t2 = census.triples[static_cast<std::size_t>(j)];
                out.push_back({i, j, Quadruple{t1.X, t1.Y, t2.X, t2.Y}});
            }
    }
    return out;
}

}  // namespace tridist
