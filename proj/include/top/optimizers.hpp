#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "top/core.hpp"
#include "top/extraction.hpp"

namespace top {

struct GreedyParams {
    double alpha = 600.0;  // seconds, decay scale of the capture-chance model
};

struct ACOParams {
    double alpha_aco = 1.0;          // pheromone exponent
    double beta = 2.0;               // heuristic exponent
    int n_ants = 20;
    int n_iterations = 50;
    double evaporation_rate = 0.5;   // rho in (0, 1)
    double initial_pheromone = 1.0;
    double score_alpha = 600.0;      // decay scale of the arrival-score heuristic
    std::uint64_t rng_seed = 1;
};

// n x n pheromone levels, floored at a small epsilon so transition
// probabilities stay well-defined.
class PheromoneMatrix {
public:
    PheromoneMatrix(int n, double initial);

    double get(NodeId u, NodeId w) const {
        return values_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
                       static_cast<std::size_t>(w)];
    }
    void evaporate(double rate);
    void deposit(NodeId u, NodeId w, double amount);
    int size() const { return n_; }

    static constexpr double kFloor = 1e-9;

private:
    int n_;
    std::vector<double> values_;
};

// exp(-(tau + dist/V) / alpha): chance the car is still there on arrival
double greedy_score(double tau, double dist, double officer_speed, double alpha);

// Highest-scoring violating node, ties to the lowest index; nullopt when no
// node is in violation.
std::optional<NodeId> greedy_next(const StateVector& chi, const DistanceVector& d,
                                  double officer_speed, const GreedyParams& params);

// Node with the longest-standing violation (FCFS baseline), ties to the
// lowest index.
std::optional<NodeId> fcfs_next(const StateVector& chi);

// Repeatedly chases the greedy pick through a simulated future (overstays
// advance with travel, captured events are consumed) until the budget runs
// out or nothing is in violation. `already_captured`, when given, marks
// event ids the planner must treat as gone.
PathSolution greedy_plan(const ProblemGraph& graph, const EventTimeline& events,
                         NodeId officer, double t, double budget,
                         const GreedyParams& params, double fine = 1.0,
                         const std::vector<char>* already_captured = nullptr);

// phi^alpha * eta^beta over feasible candidates, normalized to sum 1.
// Falls back to uniform over the feasible set when every weight is zero.
std::vector<double> aco_transition_probs(const std::vector<double>& pheromone_row,
                                         const std::vector<double>& eta_row,
                                         double alpha_aco, double beta,
                                         const std::vector<char>& feasible_mask);

PathSolution aco_plan(const ProblemGraph& graph, const EventTimeline& events,
                      NodeId officer, double t, double budget,
                      const ACOParams& params, double fine = 1.0,
                      const std::vector<char>* already_captured = nullptr);

}  // namespace top
