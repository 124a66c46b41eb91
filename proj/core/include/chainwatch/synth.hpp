#pragma once

#include <cstdint>
#include <vector>

#include "chainwatch/transaction.hpp"

namespace chainwatch {

// Synthetic mixing-style transaction stream. Normal traffic: timestamps
// spread over the date range with a diurnal hour profile, log-normal values
// with random direction, diverse counterparties. Anomalous traffic arrives
// in contiguous bursts (geometric length) of near-constant denomination
// amounts (+-1% jitter) sharing one counterparty address per burst, placed
// at off-peak hours. The result is deterministic given the seed.
struct SynthConfig {
    std::size_t n_normal = 20000;
    std::size_t n_anomalous = 4400;  // ~82/18 imbalance by default
    std::int64_t start_time = 1577836800;  // 2020-01-01T00:00:00Z
    std::int64_t end_time = 1713916800;    // 2024-04-24T00:00:00Z
    double burst_length = 8.0;    // mean anomalous run length
    double denomination = 0.1;    // coin amount of mixing-style outputs
    double value_lognormal_mu = -2.302585092994046;  // ln 0.1
    double value_lognormal_sigma = 0.45;
    double usd_rate = 43000.0;
    std::uint64_t seed = 7;
};

std::vector<TransactionRecord> synth_generate(const SynthConfig& config);

}  // namespace chainwatch
