#include "top/extraction.hpp"

#include <cmath>

namespace top {

std::vector<double> slice_timeline(double t_start, double t_end, double delta_t) {
    if (delta_t <= 0.0) throw std::invalid_argument("delta_t must be positive");
    if (!(t_end > t_start)) throw std::invalid_argument("t_end must exceed t_start");
    const auto m = static_cast<std::size_t>(std::floor((t_end - t_start) / delta_t));
    std::vector<double> out;
    out.reserve(m);
    for (std::size_t i = 0; i < m; ++i) out.push_back(t_start + static_cast<double>(i) * delta_t);
    return out;
}

StateVector extract_state_vector(const EventTimeline& events, double t) {
    StateVector chi(static_cast<std::size_t>(events.node_count()), -1.0);
    for (NodeId j = 0; j < events.node_count(); ++j) {
        if (const auto overstay = violation_overstay(events, j, t))
            chi[static_cast<std::size_t>(j)] = *overstay;
    }
    return chi;
}

StateVector extract_state_vector(const EventTimeline& events, double t,
                                 const std::vector<char>& consumed) {
    StateVector chi(static_cast<std::size_t>(events.node_count()), -1.0);
    for (NodeId j = 0; j < events.node_count(); ++j) {
        const int id = events.active_event(j, t);
        if (id >= 0 && !consumed[static_cast<std::size_t>(id)])
            chi[static_cast<std::size_t>(j)] = t - events.event(id).start;
    }
    return chi;
}

DistanceVector relative_distances(const ProblemGraph& graph, NodeId officer) {
    graph.check_node(officer);
    DistanceVector d(static_cast<std::size_t>(graph.size()));
    for (NodeId j = 0; j < graph.size(); ++j)
        d[static_cast<std::size_t>(j)] = graph.distance(officer, j);
    return d;
}

FeatureVector build_feature_vector(const ProblemGraph& graph, const EventTimeline& events,
                                   NodeId officer, double t) {
    FeatureVector x = relative_distances(graph, officer);
    const StateVector chi = extract_state_vector(events, t);
    x.insert(x.end(), chi.begin(), chi.end());
    return x;
}

}  // namespace top
