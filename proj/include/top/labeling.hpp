#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "top/extraction.hpp"
#include "top/optimizers.hpp"

namespace top {

enum class OptimizerKind { greedy, aco, fcfs };

const char* optimizer_name(OptimizerKind kind);
OptimizerKind optimizer_from_name(const std::string& name);

struct LabelParams {
    TimeSlicing slicing;
    int positions_per_slice = 1;
    OptimizerKind optimizer = OptimizerKind::greedy;
    GreedyParams greedy;
    ACOParams aco;
    double budget = 1e9;            // planner budget per slice, seconds
    double overstay_scale = 3600.0; // recorded for training-time normalization
    std::uint64_t seed = 1;
};

struct LabelledSample {
    double t = 0.0;
    NodeId officer = 0;
    FeatureVector features;  // d then chi, length 2n
    NodeId label = 0;
};

struct LabelledDataset {
    int n = 0;
    std::string block_order = "d_then_chi";
    double dist_scale = 1.0;
    double overstay_scale = 3600.0;
    // provenance of the generating run
    double delta_t = 0.0;
    std::uint64_t seed = 0;
    OptimizerKind optimizer = OptimizerKind::greedy;
    GreedyParams greedy;
    ACOParams aco;
    double budget = 0.0;
    std::vector<LabelledSample> samples;
};

enum class SplitMode { by_slice, by_day };

// The optimizer's opening move from `officer` at time t; nullopt when nothing
// is in violation.
std::optional<NodeId> label_first_move(const ProblemGraph& graph, const EventTimeline& events,
                                       NodeId officer, double t, const LabelParams& params,
                                       std::uint64_t slice_index);

// Slices the timeline, draws officer positions per active slice, and records
// the optimizer's first move as the class label. Idle slices are skipped.
LabelledDataset generate_dataset(const ProblemGraph& graph, const EventTimeline& events,
                                 const LabelParams& params);

struct DatasetSplit {
    LabelledDataset train;
    LabelledDataset validation;
    LabelledDataset test;
};

// Disjoint, exhaustive partition by whole slices or whole days, shuffled
// under `seed`.
DatasetSplit split_dataset(const LabelledDataset& ds, double train_frac, double val_frac,
                           std::uint64_t seed, SplitMode mode);

}  // namespace top
