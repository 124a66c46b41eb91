#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "chainwatch/tensor.hpp"
#include "chainwatch/transaction.hpp"

namespace chainwatch {

// Numeric feature matrix plus per-row metadata, rows sorted by timestamp
// (ties broken by hash so the order is total).
struct FeatureTable {
    Tensor matrix;  // N x F
    std::vector<std::string> columns;
    std::vector<int> labels;
    std::vector<std::int64_t> timestamps;
    std::vector<std::string> hashes;
    std::size_t imputed_values = 0;  // numeric cells filled with the column median

    std::size_t row_count() const { return labels.size(); }
    std::size_t column_index(const std::string& name) const;  // throws SchemaError
};

enum class FeatureSet { Proposed, Baseline };

const char* feature_set_name(FeatureSet set);
FeatureSet feature_set_from_name(const std::string& name);

// proposed: hour, day_of_week, value, usd_value
// baseline: year, month, day, day_of_week, hour, value, usd_value
FeatureTable engineer_features(const std::vector<TransactionRecord>& records, FeatureSet set);

// Per-column min/max, fitted on the training split only.
struct ScalerParams {
    std::vector<std::string> columns;
    std::vector<double> col_min;
    std::vector<double> col_max;
};

ScalerParams fit_scaler(const FeatureTable& table, const std::vector<std::string>& columns);

// x' = (x - min) / (max - min); a constant column maps to 0. Values from a
// held-out split may land outside [0, 1].
FeatureTable apply_scaler(const FeatureTable& table, const ScalerParams& params);

// train: timestamp < boundary; test: the rest. Table must already be sorted.
std::pair<FeatureTable, FeatureTable> chrono_split(const FeatureTable& table,
                                                   std::int64_t boundary);

// Boundary used when none is configured: 2023-01-01T00:00:00Z.
std::int64_t default_split_boundary();

// Timestamp at the given quantile of the table's time range, for
// quantile-style splits of synthetic data.
std::int64_t quantile_boundary(const FeatureTable& table, double quantile);

// Sliding windows over the chronologically ordered rows. Windows are index
// ranges into the source matrix, not copies, so models can route gradients
// back into the rows they cover.
struct WindowSet {
    std::vector<std::size_t> starts;  // window i covers rows [start, start + length)
    std::vector<int> labels;          // label of the window's final row
    std::size_t length = 0;           // T
    std::size_t stride = 1;
    bool too_short = false;           // N < T: empty set, caller should warn

    std::size_t count() const { return starts.size(); }
};

WindowSet make_windows(const Tensor& matrix, const std::vector<int>& labels, std::size_t length,
                       std::size_t stride);

// Copies rows [start, start+length) of source into a length x D tensor.
Tensor gather_window(const Tensor& source, std::size_t start, std::size_t length);

}  // namespace chainwatch
