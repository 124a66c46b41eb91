#include "chainwatch/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "chainwatch/error.hpp"
#include "chainwatch/rng.hpp"

namespace chainwatch {

namespace {

// Hour-of-day weights for normal traffic; daytime-heavy with a night floor
// so off-peak activity alone is weak evidence of mixing.
constexpr double kHourWeights[24] = {3, 3, 2, 2, 2, 3, 4, 5, 6, 7, 8, 8,
                                     8, 8, 8, 8, 8, 8, 7, 6, 5, 4, 4, 3};

int sample_hour(Rng& rng) {
    double total = 0.0;
    for (double w : kHourWeights) total += w;
    double u = rng.uniform() * total;
    for (int h = 0; h < 24; ++h) {
        u -= kHourWeights[h];
        if (u < 0.0) return h;
    }
    return 23;
}

std::string hex_string(Rng& rng, int n_words) {
    char buf[17];
    std::string out;
    out.reserve(static_cast<std::size_t>(n_words) * 16);
    for (int i = 0; i < n_words; ++i) {
        std::snprintf(buf, sizeof(buf), "%016llx",
                      static_cast<unsigned long long>(rng.next_u64()));
        out += buf;
    }
    return out;
}

const char* kExchangeNames[] = {"Binance", "Coinbase", "Kraken", "OKX", "Bitstamp"};

}  // namespace

std::vector<TransactionRecord> synth_generate(const SynthConfig& config) {
    if (config.end_time <= config.start_time) {
        throw ParamError("synth_generate: end_time must be after start_time");
    }
    if (config.burst_length < 1.0) {
        throw ParamError("synth_generate: burst_length must be >= 1");
    }
    if (config.value_lognormal_sigma <= 0.0) {
        throw ParamError("synth_generate: value_lognormal_sigma must be positive");
    }

    Rng pool_rng = Rng(config.seed).child(0);
    Rng normal_rng = Rng(config.seed).child(1);
    Rng anomaly_rng = Rng(config.seed).child(2);

    // Address pools: a few dozen receiving addresses owned by the monitored
    // cluster, a large diverse counterparty pool for normal traffic.
    std::vector<std::string> receiving_pool;
    for (int i = 0; i < 48; ++i) receiving_pool.push_back("bc1q" + hex_string(pool_rng, 2));
    std::vector<std::string> counterparty_pool;
    for (int i = 0; i < 4096; ++i) counterparty_pool.push_back("1" + hex_string(pool_rng, 2));

    const double span = static_cast<double>(config.end_time - config.start_time);
    std::vector<TransactionRecord> records;
    records.reserve(config.n_normal + config.n_anomalous);

    for (std::size_t i = 0; i < config.n_normal; ++i) {
        TransactionRecord rec;
        rec.hash = hex_string(normal_rng, 4);
        // Uniform day within the range, diurnal hour, uniform second.
        const std::int64_t day_start =
            config.start_time +
            86400 * static_cast<std::int64_t>(normal_rng.uniform() * span / 86400.0);
        const int hour = sample_hour(normal_rng);
        const std::int64_t second = static_cast<std::int64_t>(normal_rng.uniform() * 3600.0);
        std::int64_t ts = day_start + hour * 3600 + second;
        if (ts >= config.end_time) ts = config.end_time - 1;
        rec.timestamp = ts;
        rec.receiving_address =
            receiving_pool[normal_rng.uniform_index(receiving_pool.size())];
        rec.counterparty_address =
            counterparty_pool[normal_rng.uniform_index(counterparty_pool.size())];
        if (normal_rng.uniform() < 0.3) {
            const char* name = kExchangeNames[normal_rng.uniform_index(5)];
            rec.counterparty_cluster_name = name;
            rec.counterparty_category = "exchange";
        }
        const double magnitude = std::exp(
            normal_rng.normal(config.value_lognormal_mu, config.value_lognormal_sigma));
        const double sign = normal_rng.uniform() < 0.5 ? 1.0 : -1.0;
        rec.value = sign * magnitude;
        rec.usd_value = *rec.value * config.usd_rate;
        rec.label = 0;
        records.push_back(std::move(rec));
    }

    // Anomalous bursts: geometric length with mean burst_length, truncated at
    // the remaining budget; one shared fresh counterparty per burst; txns a
    // few tens of seconds apart so a burst stays contiguous in time order.
    std::size_t remaining = config.n_anomalous;
    const double p_stop = 1.0 / config.burst_length;
    while (remaining > 0) {
        std::size_t burst = 1;
        while (burst < remaining && anomaly_rng.uniform() > p_stop) ++burst;

        const std::int64_t day_start =
            config.start_time +
            86400 * static_cast<std::int64_t>(anomaly_rng.uniform() * span / 86400.0);
        const int hour = static_cast<int>(anomaly_rng.uniform_index(6));  // off-peak 00..05
        double t = static_cast<double>(day_start + hour * 3600) +
                   anomaly_rng.uniform() * 1800.0;
        const std::string shared_counterparty = "1" + hex_string(anomaly_rng, 2);
        const double burst_sign = anomaly_rng.uniform() < 0.5 ? 1.0 : -1.0;

        for (std::size_t j = 0; j < burst; ++j) {
            TransactionRecord rec;
            rec.hash = hex_string(anomaly_rng, 4);
            std::int64_t ts = static_cast<std::int64_t>(t);
            if (ts >= config.end_time) ts = config.end_time - 1;
            rec.timestamp = ts;
            rec.receiving_address =
                receiving_pool[anomaly_rng.uniform_index(receiving_pool.size())];
            rec.counterparty_address = shared_counterparty;
            rec.counterparty_category = "mixing_service";
            const double jitter = 1.0 + 0.01 * (2.0 * anomaly_rng.uniform() - 1.0);
            rec.value = burst_sign * config.denomination * jitter;
            rec.usd_value = *rec.value * config.usd_rate;
            rec.label = 1;
            records.push_back(std::move(rec));
            t += anomaly_rng.exponential(1.0 / 40.0);  // ~40 s between outputs
        }
        remaining -= burst;
    }

    std::sort(records.begin(), records.end(),
              [](const TransactionRecord& a, const TransactionRecord& b) {
                  if (*a.timestamp != *b.timestamp) return *a.timestamp < *b.timestamp;
                  return a.hash < b.hash;
              });
    return records;
}

}  // namespace chainwatch
