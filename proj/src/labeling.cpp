#include "top/labeling.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "top/rng.hpp"

namespace top {

const char* optimizer_name(OptimizerKind kind) {
    switch (kind) {
        case OptimizerKind::greedy: return "greedy";
        case OptimizerKind::aco: return "aco";
        case OptimizerKind::fcfs: return "fcfs";
    }
    return "unknown";
}

OptimizerKind optimizer_from_name(const std::string& name) {
    if (name == "greedy") return OptimizerKind::greedy;
    if (name == "aco") return OptimizerKind::aco;
    if (name == "fcfs") return OptimizerKind::fcfs;
    throw std::invalid_argument("unknown optimizer '" + name + "'");
}

std::optional<NodeId> label_first_move(const ProblemGraph& graph, const EventTimeline& events,
                                       NodeId officer, double t, const LabelParams& params,
                                       std::uint64_t slice_index) {
    switch (params.optimizer) {
        case OptimizerKind::greedy: {
            // the first node of a greedy plan is exactly the greedy pick on
            // the current state, so skip simulating the rest of the path
            const StateVector chi = extract_state_vector(events, t);
            const DistanceVector d = relative_distances(graph, officer);
            return greedy_next(chi, d, graph.speed(), params.greedy);
        }
        case OptimizerKind::fcfs:
            return fcfs_next(extract_state_vector(events, t));
        case OptimizerKind::aco: {
            ACOParams aco = params.aco;
            aco.rng_seed = mix_seed(params.seed, slice_index);
            const PathSolution plan = aco_plan(graph, events, officer, t, params.budget, aco);
            if (plan.nodes.empty()) return std::nullopt;
            return plan.nodes.front();
        }
    }
    return std::nullopt;
}

LabelledDataset generate_dataset(const ProblemGraph& graph, const EventTimeline& events,
                                 const LabelParams& params) {
    if (params.positions_per_slice < 1)
        throw std::invalid_argument("positions_per_slice must be >= 1");
    if (graph.size() != events.node_count())
        throw std::invalid_argument("graph and events disagree on node count");
    const std::vector<double> slices =
        slice_timeline(params.slicing.t_start, params.slicing.t_end, params.slicing.delta_t);

    LabelledDataset ds;
    ds.n = graph.size();
    ds.dist_scale = graph.max_distance();
    if (ds.dist_scale <= 0.0) ds.dist_scale = 1.0;
    ds.overstay_scale = params.overstay_scale;
    ds.delta_t = params.slicing.delta_t;
    ds.seed = params.seed;
    ds.optimizer = params.optimizer;
    ds.greedy = params.greedy;
    ds.aco = params.aco;
    ds.budget = params.budget;

    Rng position_rng(params.seed);
    for (std::size_t i = 0; i < slices.size(); ++i) {
        const double t = slices[i];
        const StateVector chi = extract_state_vector(events, t);
        const bool any_violation = std::any_of(chi.begin(), chi.end(),
                                               [](double v) { return v >= 0.0; });
        if (!any_violation) continue;
        for (int p = 0; p < params.positions_per_slice; ++p) {
            const auto officer =
                static_cast<NodeId>(position_rng.uniform_index(static_cast<std::uint64_t>(graph.size())));
            LabelledSample sample;
            sample.t = t;
            sample.officer = officer;
            sample.features = relative_distances(graph, officer);
            sample.features.insert(sample.features.end(), chi.begin(), chi.end());
            const auto label = label_first_move(graph, events, officer, t, params, i);
            if (!label)
                throw std::runtime_error("internal error: optimizer returned no move on a slice with violations");
            sample.label = *label;
            ds.samples.push_back(std::move(sample));
        }
    }
    return ds;
}

namespace {

LabelledDataset empty_like(const LabelledDataset& ds) {
    LabelledDataset out = ds;
    out.samples.clear();
    return out;
}

}  // namespace

DatasetSplit split_dataset(const LabelledDataset& ds, double train_frac, double val_frac,
                           std::uint64_t seed, SplitMode mode) {
    if (!(train_frac > 0.0 && train_frac < 1.0) || !(val_frac > 0.0 && val_frac < 1.0) ||
        train_frac + val_frac >= 1.0)
        throw std::invalid_argument("split fractions must lie in (0,1) and sum below 1");

    // group samples by slice time or by day, keeping units in time order
    std::map<std::int64_t, std::vector<std::size_t>> by_unit;
    for (std::size_t i = 0; i < ds.samples.size(); ++i) {
        const double t = ds.samples[i].t;
        const std::int64_t key = mode == SplitMode::by_day
                                     ? static_cast<std::int64_t>(std::floor(t / 86400.0))
                                     : static_cast<std::int64_t>(std::llround(t * 1000.0));
        by_unit[key].push_back(i);
    }
    const std::size_t units = by_unit.size();
    if (units < 3) throw std::invalid_argument("dataset too small to populate train/val/test");

    auto train_count = static_cast<std::size_t>(std::floor(train_frac * static_cast<double>(units)));
    auto val_count = static_cast<std::size_t>(std::floor(val_frac * static_cast<double>(units)));
    train_count = std::max<std::size_t>(train_count, 1);
    val_count = std::max<std::size_t>(val_count, 1);
    if (train_count + val_count >= units) train_count = units - val_count - 1;
    if (train_count < 1) throw std::invalid_argument("dataset too small to populate train/val/test");

    std::vector<std::int64_t> keys;
    keys.reserve(units);
    for (const auto& [key, _] : by_unit) keys.push_back(key);
    Rng rng(seed);
    rng.shuffle(keys);

    std::map<std::int64_t, int> part_of;  // 0 train, 1 val, 2 test
    for (std::size_t i = 0; i < keys.size(); ++i)
        part_of[keys[i]] = i < train_count ? 0 : (i < train_count + val_count ? 1 : 2);

    DatasetSplit split{empty_like(ds), empty_like(ds), empty_like(ds)};
    for (std::size_t i = 0; i < ds.samples.size(); ++i) {
        const double t = ds.samples[i].t;
        const std::int64_t key = mode == SplitMode::by_day
                                     ? static_cast<std::int64_t>(std::floor(t / 86400.0))
                                     : static_cast<std::int64_t>(std::llround(t * 1000.0));
        switch (part_of[key]) {
            case 0: split.train.samples.push_back(ds.samples[i]); break;
            case 1: split.validation.samples.push_back(ds.samples[i]); break;
            default: split.test.samples.push_back(ds.samples[i]); break;
        }
    }
    return split;
}

}  // namespace top
