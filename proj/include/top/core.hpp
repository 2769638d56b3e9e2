#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace top {

using NodeId = int;

// One parking violation interval at one node. The interval is half-open
// [start, end): an officer arriving exactly at `end` misses the car.
struct ParkingEvent {
    NodeId node = 0;
    double start = 0.0;  // seconds since epoch
    double end = 0.0;    // seconds since epoch
};

// Node positions plus a travel-distance model. Distances come either from an
// explicit route matrix (meters, zero diagonal, possibly asymmetric) or from
// Euclidean distance scaled by a detour factor.
class ProblemGraph {
public:
    static ProblemGraph euclidean(std::vector<std::array<double, 2>> positions,
                                  double officer_speed,
                                  double detour_factor = 1.3);
    static ProblemGraph with_matrix(std::vector<std::array<double, 2>> positions,
                                    std::vector<double> matrix_row_major,
                                    double officer_speed);

    int size() const { return n_; }
    double speed() const { return speed_; }
    bool has_matrix() const { return !matrix_.empty(); }
    double detour_factor() const { return detour_; }
    const std::array<double, 2>& position(NodeId u) const { return positions_[static_cast<std::size_t>(u)]; }

    // route distance in meters; throws std::invalid_argument on bad ids
    double distance(NodeId u, NodeId w) const;

    // largest pairwise distance; used as the feature normalization scale
    double max_distance() const;

    void check_node(NodeId u) const;

private:
    ProblemGraph() = default;

    int n_ = 0;
    std::vector<std::array<double, 2>> positions_;
    std::vector<double> matrix_;  // empty => euclidean model
    double detour_ = 1.3;
    double speed_ = 1.0;
};

// Validated event collection indexed by node. Events at one node must not
// overlap; construction rejects malformed input.
class EventTimeline {
public:
    EventTimeline() = default;
    EventTimeline(int node_count, std::vector<ParkingEvent> events);

    int node_count() const { return n_; }
    int event_count() const { return static_cast<int>(events_.size()); }
    const std::vector<ParkingEvent>& events() const { return events_; }
    const ParkingEvent& event(int id) const { return events_[static_cast<std::size_t>(id)]; }

    // id of the event at `node` active at time t (start <= t < end), or -1
    int active_event(NodeId node, double t) const;

    // earliest event start strictly greater than t, skipping events whose id
    // is marked true in `consumed` (empty means nothing consumed); nullopt if
    // no such start exists
    std::optional<double> next_start_after(double t,
                                           const std::vector<char>& consumed = {}) const;

    double min_start() const;
    double max_end() const;

private:
    int n_ = 0;
    std::vector<ParkingEvent> events_;               // sorted by (node, start)
    std::vector<std::pair<int, int>> node_span_;      // [begin, end) per node
    std::vector<double> starts_sorted_;
    std::vector<int> starts_order_;                   // event ids sorted by start
};

// Planned node sequence with derived arrival times.
struct PathSolution {
    std::vector<NodeId> nodes;
    double start_time = 0.0;
    std::vector<double> arrival_times;
    double reward = 0.0;
    double travel_time = 0.0;
};

struct PathEvaluation {
    double reward = 0.0;
    bool feasible = true;
    std::vector<std::pair<NodeId, double>> captures;  // (node, arrival time)
};

// C(u, w): seconds to travel from u to w at the officer's speed
double travel_cost(const ProblemGraph& graph, NodeId u, NodeId w);

// Overstay of the violation active at `node` at time t, or nullopt when the
// node has no active violation.
std::optional<double> violation_overstay(const EventTimeline& events, NodeId node, double t);

// Cumulative arrival times along `path` starting from `officer_start` at t_1.
std::vector<double> path_arrival_times(const ProblemGraph& graph,
                                       const std::vector<NodeId>& path,
                                       NodeId officer_start, double t_1);

// Walks `path`, capturing at most one still-active uncaptured event per visit.
// Visits whose cumulative travel exceeds the budget contribute nothing and
// mark the path infeasible.
PathEvaluation evaluate_path(const ProblemGraph& graph, const EventTimeline& events,
                             const std::vector<NodeId>& path, NodeId officer_start,
                             double t_1, double budget, double fine = 1.0);

}  // namespace top
