#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace chainwatch {

// One row of the transaction export schema. Optional fields hold nullopt (or
// an empty string for the free-text columns) when the source cell was empty.
struct TransactionRecord {
    std::string hash;
    std::optional<std::int64_t> timestamp;  // unix seconds, UTC
    std::string receiving_address;
    std::string counterparty_address;
    std::string counterparty_cluster_name;
    std::string counterparty_shared_name;
    std::string counterparty_category;
    std::optional<double> value;      // coin units; negative = outbound net
    std::optional<double> usd_value;  // USD at transaction time
    int label = 0;                    // 0 normal, 1 anomalous
};

// Header row of the CSV interchange format, in column order.
extern const char* const kTransactionCsvHeader;

// Parses the CSV interchange format. Empty cells become missing values;
// non-empty cells that fail to parse raise ParseError with the line number.
// A header missing any required column raises a file-level ParseError.
std::vector<TransactionRecord> parse_transactions(std::istream& in);
std::vector<TransactionRecord> parse_transactions_file(const std::string& path);

void serialize_transactions(const std::vector<TransactionRecord>& records, std::ostream& out);
void serialize_transactions_file(const std::vector<TransactionRecord>& records,
                                 const std::string& path);

struct CleanResult {
    std::vector<TransactionRecord> records;
    std::size_t dropped_missing_date = 0;
    std::size_t dropped_missing_receiving = 0;
    std::size_t dropped_missing_counterparty = 0;

    std::size_t dropped_total() const {
        return dropped_missing_date + dropped_missing_receiving + dropped_missing_counterparty;
    }
};

// Drops rows missing Date, Receiving Address, or Counterparty Address. Value
// outliers are kept. A row missing several of the fields counts once, under
// the first missing field in the order above.
CleanResult clean(std::vector<TransactionRecord> records);

}  // namespace chainwatch
