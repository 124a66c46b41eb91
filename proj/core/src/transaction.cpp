#include "chainwatch/transaction.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "chainwatch/civil_time.hpp"
#include "chainwatch/error.hpp"

namespace chainwatch {

const char* const kTransactionCsvHeader =
    "Hash,Date,ReceivingAddress,CounterpartyAddress,CounterpartyClusterName,"
    "CounterpartySharedName,CounterpartyCategory,Value,USDValue,Label";

namespace {

constexpr std::size_t kColumnCount = 10;

// Splits one CSV line. Fields containing comma, quote, or newline are
// expected double-quoted with "" escaping the quote character.
std::vector<std::string> split_csv_line(const std::string& line, long line_no) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                current += ch;
            }
        } else if (ch == '"') {
            if (!current.empty()) throw ParseError("quote inside unquoted field", line_no);
            quoted = true;
        } else if (ch == ',') {
            fields.push_back(std::move(current));
            current.clear();
        } else {
            current += ch;
        }
    }
    if (quoted) throw ParseError("unterminated quoted field", line_no);
    fields.push_back(std::move(current));
    return fields;
}

std::string quote_if_needed(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += '"';
    return out;
}

double parse_double_field(const std::string& text, const char* what, long line_no) {
    double v = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end) {
        throw ParseError(std::string("non-numeric ") + what + " value '" + text + "'", line_no);
    }
    return v;
}

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

}  // namespace

std::vector<TransactionRecord> parse_transactions(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty input, expected header row");
    if (!line.empty() && line.back() == '\r') line.pop_back();

    const std::vector<std::string> header = split_csv_line(line, 1);
    const std::vector<std::string> expected = split_csv_line(kTransactionCsvHeader, 0);
    for (const auto& name : expected) {
        bool found = false;
        for (const auto& got : header) {
            if (got == name) {
                found = true;
                break;
            }
        }
        if (!found) throw ParseError("missing required column '" + name + "' in header");
    }
    if (header != expected) {
        throw ParseError("header columns must appear in the documented order: " +
                         std::string(kTransactionCsvHeader));
    }

    std::vector<TransactionRecord> records;
    long line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::vector<std::string> fields = split_csv_line(line, line_no);
        if (fields.size() != kColumnCount) {
            throw ParseError("expected " + std::to_string(kColumnCount) + " fields, found " +
                                 std::to_string(fields.size()),
                             line_no);
        }
        TransactionRecord rec;
        rec.hash = fields[0];
        if (!fields[1].empty()) {
            const auto ts = parse_utc(fields[1]);
            if (!ts) throw ParseError("unparseable timestamp '" + fields[1] + "'", line_no);
            rec.timestamp = *ts;
        }
        rec.receiving_address = fields[2];
        rec.counterparty_address = fields[3];
        rec.counterparty_cluster_name = fields[4];
        rec.counterparty_shared_name = fields[5];
        rec.counterparty_category = fields[6];
        if (!fields[7].empty()) rec.value = parse_double_field(fields[7], "Value", line_no);
        if (!fields[8].empty()) rec.usd_value = parse_double_field(fields[8], "USDValue", line_no);
        if (fields[9] == "0") {
            rec.label = 0;
        } else if (fields[9] == "1") {
            rec.label = 1;
        } else {
            throw ParseError("label must be 0 or 1, found '" + fields[9] + "'", line_no);
        }
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<TransactionRecord> parse_transactions_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_transactions(in);
}

void serialize_transactions(const std::vector<TransactionRecord>& records, std::ostream& out) {
    out << kTransactionCsvHeader << '\n';
    for (const auto& rec : records) {
        out << quote_if_needed(rec.hash) << ',';
        out << (rec.timestamp ? format_utc(*rec.timestamp) : std::string()) << ',';
        out << quote_if_needed(rec.receiving_address) << ',';
        out << quote_if_needed(rec.counterparty_address) << ',';
        out << quote_if_needed(rec.counterparty_cluster_name) << ',';
        out << quote_if_needed(rec.counterparty_shared_name) << ',';
        out << quote_if_needed(rec.counterparty_category) << ',';
        out << (rec.value ? format_double(*rec.value) : std::string()) << ',';
        out << (rec.usd_value ? format_double(*rec.usd_value) : std::string()) << ',';
        out << rec.label << '\n';
    }
}

void serialize_transactions_file(const std::vector<TransactionRecord>& records,
                                 const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    serialize_transactions(records, out);
    if (!out) throw ParseError("failed writing '" + path + "'");
}

CleanResult clean(std::vector<TransactionRecord> records) {
    CleanResult result;
    result.records.reserve(records.size());
    for (auto& rec : records) {
        if (!rec.timestamp) {
            ++result.dropped_missing_date;
        } else if (rec.receiving_address.empty()) {
            ++result.dropped_missing_receiving;
        } else if (rec.counterparty_address.empty()) {
            ++result.dropped_missing_counterparty;
        } else {
            result.records.push_back(std::move(rec));
        }
    }
    return result;
}

}  // namespace chainwatch
