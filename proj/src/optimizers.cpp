#include "top/optimizers.hpp"

#include <algorithm>
#include <cmath>

#include "top/rng.hpp"

namespace top {

namespace {

void validate_aco_params(const ACOParams& p) {
    if (p.alpha_aco < 0.0 || p.beta < 0.0)
        throw std::invalid_argument("ACO exponents must be non-negative");
    if (p.n_ants < 1 || p.n_iterations < 1)
        throw std::invalid_argument("ACO needs at least one ant and one iteration");
    if (!(p.evaporation_rate > 0.0 && p.evaporation_rate < 1.0))
        throw std::invalid_argument("evaporation rate must lie in (0, 1)");
    if (p.initial_pheromone <= 0.0)
        throw std::invalid_argument("initial pheromone must be positive");
    if (p.score_alpha <= 0.0) throw std::invalid_argument("score alpha must be positive");
}

struct AntWalk {
    std::vector<NodeId> nodes;
    std::vector<double> arrivals;
    double reward = 0.0;
    double travel = 0.0;
};

}  // namespace

PheromoneMatrix::PheromoneMatrix(int n, double initial) : n_(n) {
    if (n < 1) throw std::invalid_argument("pheromone matrix needs n >= 1");
    if (initial <= 0.0) throw std::invalid_argument("initial pheromone must be positive");
    values_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), initial);
}

void PheromoneMatrix::evaporate(double rate) {
    for (double& v : values_) v = std::max(v * (1.0 - rate), kFloor);
}

void PheromoneMatrix::deposit(NodeId u, NodeId w, double amount) {
    double& v = values_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
                        static_cast<std::size_t>(w)];
    v = std::max(v + amount, kFloor);
}

double greedy_score(double tau, double dist, double officer_speed, double alpha) {
    if (alpha <= 0.0) throw std::invalid_argument("alpha must be positive");
    if (officer_speed <= 0.0) throw std::invalid_argument("officer speed must be positive");
    return std::exp(-(tau + dist / officer_speed) / alpha);
}

std::optional<NodeId> greedy_next(const StateVector& chi, const DistanceVector& d,
                                  double officer_speed, const GreedyParams& params) {
    if (chi.size() != d.size())
        throw std::invalid_argument("state and distance vectors must have the same length");
    std::optional<NodeId> best;
    double best_score = 0.0;
    for (std::size_t j = 0; j < chi.size(); ++j) {
        if (chi[j] < 0.0) continue;
        const double s = greedy_score(chi[j], d[j], officer_speed, params.alpha);
        if (!best || s > best_score) {
            best = static_cast<NodeId>(j);
            best_score = s;
        }
    }
    return best;
}

std::optional<NodeId> fcfs_next(const StateVector& chi) {
    std::optional<NodeId> best;
    double best_overstay = -1.0;
    for (std::size_t j = 0; j < chi.size(); ++j) {
        if (chi[j] < 0.0) continue;
        if (!best || chi[j] > best_overstay) {
            best = static_cast<NodeId>(j);
            best_overstay = chi[j];
        }
    }
    return best;
}

PathSolution greedy_plan(const ProblemGraph& graph, const EventTimeline& events,
                         NodeId officer, double t, double budget,
                         const GreedyParams& params, double fine,
                         const std::vector<char>* already_captured) {
    graph.check_node(officer);
    if (budget < 0.0) throw std::invalid_argument("budget must be non-negative");

    PathSolution sol;
    sol.start_time = t;
    std::vector<char> consumed =
        already_captured ? *already_captured
                         : std::vector<char>(static_cast<std::size_t>(events.event_count()), 0);
    NodeId u = officer;
    double t_cur = t;
    double travel = 0.0;
    for (;;) {
        const StateVector chi = extract_state_vector(events, t_cur, consumed);
        const DistanceVector d = relative_distances(graph, u);
        const auto pick = greedy_next(chi, d, graph.speed(), params);
        if (!pick) break;
        const double cost = travel_cost(graph, u, *pick);
        if (travel + cost > budget) break;
        travel += cost;
        t_cur += cost;
        u = *pick;
        sol.nodes.push_back(u);
        sol.arrival_times.push_back(t_cur);
        const int id = events.active_event(u, t_cur);
        if (id >= 0 && !consumed[static_cast<std::size_t>(id)]) {
            consumed[static_cast<std::size_t>(id)] = 1;
            sol.reward += fine;
        }
    }
    sol.travel_time = travel;
    return sol;
}

std::vector<double> aco_transition_probs(const std::vector<double>& pheromone_row,
                                         const std::vector<double>& eta_row,
                                         double alpha_aco, double beta,
                                         const std::vector<char>& feasible_mask) {
    const std::size_t n = pheromone_row.size();
    if (eta_row.size() != n || feasible_mask.size() != n)
        throw std::invalid_argument("pheromone, heuristic and mask rows must have equal length");
    if (alpha_aco < 0.0 || beta < 0.0)
        throw std::invalid_argument("ACO exponents must be non-negative");

    std::vector<double> probs(n, 0.0);
    double total = 0.0;
    std::size_t feasible = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (!feasible_mask[j]) continue;
        ++feasible;
        if (pheromone_row[j] <= 0.0)
            throw std::invalid_argument("pheromone entries must be positive");
        if (eta_row[j] < 0.0) throw std::invalid_argument("heuristic entries must be non-negative");
        probs[j] = std::pow(pheromone_row[j], alpha_aco) * std::pow(eta_row[j], beta);
        total += probs[j];
    }
    if (feasible == 0) throw std::invalid_argument("no feasible candidate");
    if (total <= 0.0) {
        const double uniform = 1.0 / static_cast<double>(feasible);
        for (std::size_t j = 0; j < n; ++j) probs[j] = feasible_mask[j] ? uniform : 0.0;
        return probs;
    }
    for (double& p : probs) p /= total;
    return probs;
}

PathSolution aco_plan(const ProblemGraph& graph, const EventTimeline& events,
                      NodeId officer, double t, double budget,
                      const ACOParams& params, double fine,
                      const std::vector<char>* already_captured) {
    graph.check_node(officer);
    if (budget < 0.0) throw std::invalid_argument("budget must be non-negative");
    validate_aco_params(params);
    const std::vector<char> base_consumed =
        already_captured ? *already_captured
                         : std::vector<char>(static_cast<std::size_t>(events.event_count()), 0);

    const int n = graph.size();
    PheromoneMatrix pheromone(n, params.initial_pheromone);
    Rng rng(params.rng_seed);

    AntWalk best;  // empty walk: reward 0, travel 0
    std::vector<double> phi_row(static_cast<std::size_t>(n));
    std::vector<double> eta_row(static_cast<std::size_t>(n));
    std::vector<char> mask(static_cast<std::size_t>(n));

    auto better = [](const AntWalk& a, const AntWalk& b) {
        if (a.reward != b.reward) return a.reward > b.reward;
        return a.travel < b.travel;
    };

    for (int iter = 0; iter < params.n_iterations; ++iter) {
        AntWalk iter_best;
        bool have_iter_best = false;
        for (int ant = 0; ant < params.n_ants; ++ant) {
            AntWalk walk;
            std::vector<char> consumed = base_consumed;
            NodeId u = officer;
            double t_cur = t;
            for (;;) {
                const StateVector chi = extract_state_vector(events, t_cur, consumed);
                bool any = false;
                for (NodeId j = 0; j < n; ++j) {
                    const auto js = static_cast<std::size_t>(j);
                    const double dist = graph.distance(u, j);
                    const bool ok = chi[js] >= 0.0 &&
                                    walk.travel + dist / graph.speed() <= budget;
                    mask[js] = ok ? 1 : 0;
                    phi_row[js] = pheromone.get(u, j);
                    eta_row[js] =
                        ok ? greedy_score(chi[js], dist, graph.speed(), params.score_alpha) : 0.0;
                    any = any || ok;
                }
                if (!any) break;
                const std::vector<double> probs =
                    aco_transition_probs(phi_row, eta_row, params.alpha_aco, params.beta, mask);
                const double draw = rng.uniform();
                double acc = 0.0;
                NodeId next = -1;
                for (NodeId j = 0; j < n; ++j) {
                    if (!mask[static_cast<std::size_t>(j)]) continue;
                    acc += probs[static_cast<std::size_t>(j)];
                    next = j;
                    if (draw < acc) break;
                }
                const double cost = travel_cost(graph, u, next);
                walk.travel += cost;
                t_cur += cost;
                u = next;
                walk.nodes.push_back(u);
                walk.arrivals.push_back(t_cur);
                const int id = events.active_event(u, t_cur);
                if (id >= 0 && !consumed[static_cast<std::size_t>(id)]) {
                    consumed[static_cast<std::size_t>(id)] = 1;
                    walk.reward += fine;
                }
            }
            if (!have_iter_best || better(walk, iter_best)) {
                iter_best = std::move(walk);
                have_iter_best = true;
            }
        }
        pheromone.evaporate(params.evaporation_rate);
        if (have_iter_best && !iter_best.nodes.empty() && iter_best.reward > 0.0) {
            NodeId prev = officer;
            for (NodeId node : iter_best.nodes) {
                pheromone.deposit(prev, node, iter_best.reward);
                prev = node;
            }
        }
        if (have_iter_best && better(iter_best, best)) best = std::move(iter_best);
    }

    PathSolution sol;
    sol.start_time = t;
    sol.nodes = std::move(best.nodes);
    sol.arrival_times = std::move(best.arrivals);
    sol.reward = best.reward;
    sol.travel_time = best.travel;
    return sol;
}

}  // namespace top
