#include "chainwatch/features.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "chainwatch/civil_time.hpp"
#include "chainwatch/error.hpp"

namespace chainwatch {

std::size_t FeatureTable::column_index(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (columns[i] == name) return i;
    }
    throw SchemaError("no column '" + name + "' in table");
}

const char* feature_set_name(FeatureSet set) {
    return set == FeatureSet::Proposed ? "proposed" : "baseline";
}

FeatureSet feature_set_from_name(const std::string& name) {
    if (name == "proposed") return FeatureSet::Proposed;
    if (name == "baseline") return FeatureSet::Baseline;
    throw ParamError("unknown feature set '" + name + "'");
}

namespace {

double median_of(std::vector<double> values) {
    // values non-empty
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1) return values[n / 2];
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace

FeatureTable engineer_features(const std::vector<TransactionRecord>& records, FeatureSet set) {
    std::vector<std::size_t> order(records.size());
    std::iota(order.begin(), order.end(), 0);
    for (const auto& rec : records) {
        if (!rec.timestamp) {
            throw ParamError("engineer_features: record without timestamp; run clean() first");
        }
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (*records[a].timestamp != *records[b].timestamp) {
            return *records[a].timestamp < *records[b].timestamp;
        }
        return records[a].hash < records[b].hash;
    });

    // Median imputation for missing numeric cells. The exported datasets and
    // the synthetic generator never produce them, so imputed_values stays 0
    // outside hand-damaged files; the counter surfaces it when it happens.
    std::vector<double> present_values, present_usd;
    for (const auto& rec : records) {
        if (rec.value) present_values.push_back(*rec.value);
        if (rec.usd_value) present_usd.push_back(*rec.usd_value);
    }
    const double value_median = present_values.empty() ? 0.0 : median_of(present_values);
    const double usd_median = present_usd.empty() ? 0.0 : median_of(present_usd);

    FeatureTable table;
    if (set == FeatureSet::Proposed) {
        table.columns = {"hour", "day_of_week", "value", "usd_value"};
    } else {
        table.columns = {"year", "month", "day", "day_of_week", "hour", "value", "usd_value"};
    }
    const std::size_t n = records.size();
    const std::size_t f = table.columns.size();
    table.matrix = Tensor({n, f});
    table.labels.resize(n);
    table.timestamps.resize(n);
    table.hashes.resize(n);

    for (std::size_t row = 0; row < n; ++row) {
        const TransactionRecord& rec = records[order[row]];
        const std::int64_t ts = *rec.timestamp;
        const CivilTime c = civil_from_unix(ts);
        const int dow = weekday_from_unix(ts);
        double value = rec.value ? *rec.value : value_median;
        double usd = rec.usd_value ? *rec.usd_value : usd_median;
        if (!rec.value) ++table.imputed_values;
        if (!rec.usd_value) ++table.imputed_values;

        double* out = table.matrix.row(row);
        if (set == FeatureSet::Proposed) {
            out[0] = c.hour;
            out[1] = dow;
            out[2] = value;
            out[3] = usd;
        } else {
            out[0] = c.year;
            out[1] = c.month;
            out[2] = c.day;
            out[3] = dow;
            out[4] = c.hour;
            out[5] = value;
            out[6] = usd;
        }
        table.labels[row] = rec.label;
        table.timestamps[row] = ts;
        table.hashes[row] = rec.hash;
    }
    return table;
}

ScalerParams fit_scaler(const FeatureTable& table, const std::vector<std::string>& columns) {
    if (table.row_count() == 0) throw ParamError("fit_scaler: empty table");
    ScalerParams params;
    params.columns = columns;
    for (const auto& name : columns) {
        const std::size_t col = table.column_index(name);
        double lo = table.matrix.at(0, col), hi = lo;
        for (std::size_t row = 1; row < table.row_count(); ++row) {
            const double v = table.matrix.at(row, col);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        params.col_min.push_back(lo);
        params.col_max.push_back(hi);
    }
    return params;
}

FeatureTable apply_scaler(const FeatureTable& table, const ScalerParams& params) {
    FeatureTable out = table;
    for (std::size_t i = 0; i < params.columns.size(); ++i) {
        const std::size_t col = out.column_index(params.columns[i]);  // SchemaError if absent
        const double lo = params.col_min[i];
        const double range = params.col_max[i] - lo;
        for (std::size_t row = 0; row < out.row_count(); ++row) {
            double& v = out.matrix.at(row, col);
            v = range == 0.0 ? 0.0 : (v - lo) / range;
        }
    }
    return out;
}

std::pair<FeatureTable, FeatureTable> chrono_split(const FeatureTable& table,
                                                   std::int64_t boundary) {
    std::size_t cut = 0;
    while (cut < table.row_count() && table.timestamps[cut] < boundary) ++cut;

    auto slice = [&](std::size_t from, std::size_t to) {
        FeatureTable part;
        part.columns = table.columns;
        part.imputed_values = 0;
        const std::size_t n = to - from;
        const std::size_t f = table.columns.size();
        part.matrix = Tensor({n, f});
        part.labels.assign(table.labels.begin() + from, table.labels.begin() + to);
        part.timestamps.assign(table.timestamps.begin() + from, table.timestamps.begin() + to);
        part.hashes.assign(table.hashes.begin() + from, table.hashes.begin() + to);
        for (std::size_t row = 0; row < n; ++row) {
            const double* src = table.matrix.row(from + row);
            std::copy(src, src + f, part.matrix.row(row));
        }
        return part;
    };
    return {slice(0, cut), slice(cut, table.row_count())};
}

std::int64_t default_split_boundary() { return *parse_utc("2023-01-01T00:00:00Z"); }

std::int64_t quantile_boundary(const FeatureTable& table, double quantile) {
    if (table.row_count() == 0) throw ParamError("quantile_boundary: empty table");
    if (quantile < 0.0 || quantile > 1.0) {
        throw ParamError("quantile_boundary: quantile outside [0, 1]");
    }
    const std::int64_t lo = table.timestamps.front();
    const std::int64_t hi = table.timestamps.back();
    return lo + static_cast<std::int64_t>(quantile * static_cast<double>(hi - lo));
}

WindowSet make_windows(const Tensor& matrix, const std::vector<int>& labels, std::size_t length,
                       std::size_t stride) {
    if (length == 0) throw ParamError("make_windows: window length must be positive");
    if (stride == 0) throw ParamError("make_windows: stride must be positive");
    const std::size_t n = matrix.rows();
    if (labels.size() != n) {
        throw ShapeError("make_windows: " + std::to_string(labels.size()) + " labels for " +
                         std::to_string(n) + " rows");
    }
    WindowSet set;
    set.length = length;
    set.stride = stride;
    if (n < length) {
        set.too_short = true;
        return set;
    }
    const std::size_t count = (n - length) / stride + 1;
    set.starts.reserve(count);
    set.labels.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t start = i * stride;
        set.starts.push_back(start);
        set.labels.push_back(labels[start + length - 1]);
    }
    return set;
}

Tensor gather_window(const Tensor& source, std::size_t start, std::size_t length) {
    const std::size_t d = source.cols();
    if (start + length > source.rows()) {
        throw ShapeError("gather_window: rows [" + std::to_string(start) + ", " +
                         std::to_string(start + length) + ") exceed " +
                         std::to_string(source.rows()));
    }
    Tensor out({length, d});
    std::copy(source.row(start), source.row(start) + length * d, out.data());
    return out;
}

}  // namespace chainwatch
