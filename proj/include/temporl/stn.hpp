#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "temporl/rational.hpp"

namespace temporl {

using TimePointId = std::uint32_t;

/// Simple Temporal Network over difference constraints t_i - t_j <= w with
/// exact rational weights. Time-point 0 is the reference origin z (time zero)
/// and every added point carries the implicit constraint t >= 0.
///
/// Consistency and bounds are maintained incrementally on insertion by
/// queue-based Bellman-Ford relaxation of the tightest bounds relative to z,
/// with per-node relaxation counting for negative-cycle detection. Constraints
/// are never removed; once inconsistent the network stays inconsistent.
class Stn {
public:
    Stn();

    TimePointId add_time_point();

    /// Record t_i - t_j <= w. Returns whether the network is still consistent.
    bool add_constraint(TimePointId i, TimePointId j, const Rational& w);

    bool consistent() const { return consistent_; }
    std::size_t size() const { return lb_.size(); }

    /// Tightest implied [lb, ub] for a point relative to the origin.
    /// ub is nullopt when unbounded above. Throws if inconsistent.
    std::pair<Rational, std::optional<Rational>> bounds(TimePointId i) const;

    /// Assign every point its lower bound; satisfies every constraint.
    std::vector<Rational> earliest_schedule() const;

    /// Independent copy for search branching. Full copy today; the copy is
    /// the hook where structural sharing would go if profiles demand it.
    Stn branch_copy() const { return *this; }

private:
    struct Edge { TimePointId to; Rational w; };

    void check_point(TimePointId i) const;
    bool propagate(TimePointId i, TimePointId j, const Rational& w);

    // Constraint t_i - t_j <= w is stored in both directions:
    //   ub_out_[j] holds (i, w): an upper bound for i improves from ub[j].
    //   lb_out_[i] holds (j, w): a lower bound for j improves from lb[i].
    std::vector<std::vector<Edge>> ub_out_;
    std::vector<std::vector<Edge>> lb_out_;
    std::vector<Rational> lb_;
    std::vector<std::optional<Rational>> ub_;
    bool consistent_ = true;
};

}  // namespace temporl
