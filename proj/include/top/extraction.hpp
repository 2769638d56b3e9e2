#pragma once

#include <vector>

#include "top/core.hpp"

namespace top {

// chi[j]: overstay seconds of the violation active at node j, or -1 when idle
using StateVector = std::vector<double>;
// d[j]: route meters from the officer's node to node j
using DistanceVector = std::vector<double>;
// d then chi, length 2n; block order is fixed and recorded in dataset sidecars
using FeatureVector = std::vector<double>;

struct TimeSlicing {
    double t_start = 0.0;
    double t_end = 0.0;
    double delta_t = 10.0;
};

// Slice timestamps [t_start, t_start + dt, ...], m = floor((t_end - t_start) / dt).
std::vector<double> slice_timeline(double t_start, double t_end, double delta_t);

StateVector extract_state_vector(const EventTimeline& events, double t);

// Same as above but with events whose id is flagged in `consumed` treated as
// idle. Planners and rollouts use this so ticketed cars stop attracting.
StateVector extract_state_vector(const EventTimeline& events, double t,
                                 const std::vector<char>& consumed);

DistanceVector relative_distances(const ProblemGraph& graph, NodeId officer);

FeatureVector build_feature_vector(const ProblemGraph& graph, const EventTimeline& events,
                                   NodeId officer, double t);

}  // namespace top
