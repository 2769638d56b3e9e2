#include "top/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace top {

ProblemGraph ProblemGraph::euclidean(std::vector<std::array<double, 2>> positions,
                                     double officer_speed, double detour_factor) {
    if (positions.empty()) throw std::invalid_argument("graph needs at least one node");
    if (officer_speed <= 0.0) throw std::invalid_argument("officer speed must be positive");
    if (detour_factor <= 0.0) throw std::invalid_argument("detour factor must be positive");
    ProblemGraph g;
    g.n_ = static_cast<int>(positions.size());
    g.positions_ = std::move(positions);
    g.detour_ = detour_factor;
    g.speed_ = officer_speed;
    return g;
}

ProblemGraph ProblemGraph::with_matrix(std::vector<std::array<double, 2>> positions,
                                       std::vector<double> matrix_row_major,
                                       double officer_speed) {
    if (positions.empty()) throw std::invalid_argument("graph needs at least one node");
    if (officer_speed <= 0.0) throw std::invalid_argument("officer speed must be positive");
    const std::size_t n = positions.size();
    if (matrix_row_major.size() != n * n)
        throw std::invalid_argument("distance matrix must be n x n");
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double d = matrix_row_major[i * n + j];
            if (d < 0.0 || !std::isfinite(d))
                throw std::invalid_argument("distance matrix entries must be finite and non-negative");
            if (i == j && d != 0.0)
                throw std::invalid_argument("distance matrix diagonal must be zero");
        }
    }
    ProblemGraph g;
    g.n_ = static_cast<int>(n);
    g.positions_ = std::move(positions);
    g.matrix_ = std::move(matrix_row_major);
    g.speed_ = officer_speed;
    return g;
}

void ProblemGraph::check_node(NodeId u) const {
    if (u < 0 || u >= n_)
        throw std::invalid_argument("node id " + std::to_string(u) + " out of range [0, " +
                                    std::to_string(n_) + ")");
}

double ProblemGraph::distance(NodeId u, NodeId w) const {
    check_node(u);
    check_node(w);
    if (!matrix_.empty())
        return matrix_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
                       static_cast<std::size_t>(w)];
    if (u == w) return 0.0;
    const auto& a = positions_[static_cast<std::size_t>(u)];
    const auto& b = positions_[static_cast<std::size_t>(w)];
    return std::hypot(a[0] - b[0], a[1] - b[1]) * detour_;
}

double ProblemGraph::max_distance() const {
    double best = 0.0;
    for (int u = 0; u < n_; ++u)
        for (int w = 0; w < n_; ++w) best = std::max(best, distance(u, w));
    return best;
}

EventTimeline::EventTimeline(int node_count, std::vector<ParkingEvent> events)
    : n_(node_count), events_(std::move(events)) {
    if (n_ < 1) throw std::invalid_argument("node count must be >= 1");
    for (const auto& e : events_) {
        if (e.node < 0 || e.node >= n_)
            throw std::invalid_argument("event node " + std::to_string(e.node) + " out of range");
        if (!(e.start < e.end))
            throw std::invalid_argument("event start must precede end");
    }
    std::sort(events_.begin(), events_.end(), [](const ParkingEvent& a, const ParkingEvent& b) {
        if (a.node != b.node) return a.node < b.node;
        return a.start < b.start;
    });
    node_span_.assign(static_cast<std::size_t>(n_), {0, 0});
    int i = 0;
    const int total = static_cast<int>(events_.size());
    for (int node = 0; node < n_; ++node) {
        const int begin = i;
        while (i < total && events_[static_cast<std::size_t>(i)].node == node) {
            if (i > begin && events_[static_cast<std::size_t>(i)].start <
                                 events_[static_cast<std::size_t>(i - 1)].end)
                throw std::invalid_argument("overlapping events at node " + std::to_string(node));
            ++i;
        }
        node_span_[static_cast<std::size_t>(node)] = {begin, i};
    }
    starts_order_.resize(events_.size());
    for (std::size_t k = 0; k < events_.size(); ++k) starts_order_[k] = static_cast<int>(k);
    std::sort(starts_order_.begin(), starts_order_.end(),
              [this](int a, int b) { return events_[static_cast<std::size_t>(a)].start <
                                            events_[static_cast<std::size_t>(b)].start; });
    starts_sorted_.reserve(events_.size());
    for (int id : starts_order_) starts_sorted_.push_back(events_[static_cast<std::size_t>(id)].start);
}

int EventTimeline::active_event(NodeId node, double t) const {
    if (node < 0 || node >= n_)
        throw std::invalid_argument("node id " + std::to_string(node) + " out of range");
    const auto [begin, end] = node_span_[static_cast<std::size_t>(node)];
    // last event with start <= t
    int lo = begin, hi = end;
    while (lo < hi) {
        const int mid = lo + (hi - lo) / 2;
        if (events_[static_cast<std::size_t>(mid)].start <= t)
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo == begin) return -1;
    const int id = lo - 1;
    return t < events_[static_cast<std::size_t>(id)].end ? id : -1;
}

std::optional<double> EventTimeline::next_start_after(double t,
                                                      const std::vector<char>& consumed) const {
    auto it = std::upper_bound(starts_sorted_.begin(), starts_sorted_.end(), t);
    for (; it != starts_sorted_.end(); ++it) {
        const auto idx = static_cast<std::size_t>(it - starts_sorted_.begin());
        const int id = starts_order_[idx];
        if (consumed.empty() || !consumed[static_cast<std::size_t>(id)]) return *it;
    }
    return std::nullopt;
}

double EventTimeline::min_start() const {
    if (events_.empty()) return 0.0;
    return starts_sorted_.front();
}

double EventTimeline::max_end() const {
    double best = 0.0;
    bool first = true;
    for (const auto& e : events_) {
        if (first || e.end > best) best = e.end;
        first = false;
    }
    return best;
}

double travel_cost(const ProblemGraph& graph, NodeId u, NodeId w) {
    return graph.distance(u, w) / graph.speed();
}

std::optional<double> violation_overstay(const EventTimeline& events, NodeId node, double t) {
    const int id = events.active_event(node, t);
    if (id < 0) return std::nullopt;
    return t - events.event(id).start;
}

std::vector<double> path_arrival_times(const ProblemGraph& graph,
                                       const std::vector<NodeId>& path,
                                       NodeId officer_start, double t_1) {
    if (path.empty()) throw std::invalid_argument("path must be non-empty");
    std::vector<double> arrivals;
    arrivals.reserve(path.size());
    double t = t_1 + travel_cost(graph, officer_start, path.front());
    arrivals.push_back(t);
    for (std::size_t k = 1; k < path.size(); ++k) {
        t += travel_cost(graph, path[k - 1], path[k]);
        arrivals.push_back(t);
    }
    return arrivals;
}

PathEvaluation evaluate_path(const ProblemGraph& graph, const EventTimeline& events,
                             const std::vector<NodeId>& path, NodeId officer_start,
                             double t_1, double budget, double fine) {
    graph.check_node(officer_start);
    PathEvaluation out;
    if (path.empty()) return out;
    const std::vector<double> arrivals = path_arrival_times(graph, path, officer_start, t_1);
    std::vector<char> consumed(static_cast<std::size_t>(events.event_count()), 0);
    int captures = 0;
    for (std::size_t k = 0; k < path.size(); ++k) {
        if (arrivals[k] - t_1 > budget) {
            out.feasible = false;
            continue;
        }
        const int id = events.active_event(path[k], arrivals[k]);
        if (id >= 0 && !consumed[static_cast<std::size_t>(id)]) {
            consumed[static_cast<std::size_t>(id)] = 1;
            ++captures;
            out.captures.emplace_back(path[k], arrivals[k]);
        }
    }
    out.reward = fine * captures;
    return out;
}

}  // namespace top
