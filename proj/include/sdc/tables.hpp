#pragma once

// Rebuilds the published codes from the data files table1.txt .. table8.txt and
// checks their parameters.
//
// Each non-comment line is one record of key=value fields:
//   id=<name> op=<construct|extend|binary-extend|neighbour> [from=<id>] ... expected values
// construct:      p ring q a
// extend:         c X [offset]    over the ring of the source code
// binary-extend:  c X [offset]    over F2, applied to the binary image of the source
// neighbour:      x [offset]      applied to the binary image of the source
// expected:       n d family [beta] [gamma] [a12] [a14]

#include "sdc/novelty.hpp"
#include "sdc/report.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sdc {

struct TableRecord {
    int table = 0;
    std::size_t line = 0;
    std::map<std::string, std::string> fields;

    const std::string& id() const { return fields.at("id"); }
    std::optional<std::string> get(const std::string& key) const;
};

std::vector<TableRecord> load_table(const std::string& path, int table);

struct RowResult {
    int table = 0;
    std::string id;
    bool pass = false;
    std::vector<std::string> problems;
    std::optional<Analysis> analysis;
    std::optional<bool> is_new;
    double seconds = 0;
};

struct TablesReport {
    std::vector<RowResult> rows;
    bool all_pass() const;
    std::size_t failures() const;
};

struct TableOptions {
    std::string data_dir;
    int threads = 0;
    std::vector<int> tables;  // empty: 1..8
};

// Codes for every record, built on demand. Sources are resolved across tables.
class TableBook {
public:
    explicit TableBook(const std::string& data_dir);

    const std::vector<TableRecord>& records() const { return records_; }
    const TableRecord& record(const std::string& id) const;
    // Throws std::invalid_argument (wrapped with the record id) when a record cannot be built.
    const Code& code(const std::string& id);
    const KnownParameters* known() const { return known_ ? &*known_ : nullptr; }

private:
    std::vector<TableRecord> records_;
    std::map<std::string, std::size_t> index_;
    std::map<std::string, Code> built_;
    std::optional<KnownParameters> known_;
};

RowResult check_row(TableBook& book, const TableRecord& rec, int threads);

TablesReport reproduce_tables(const TableOptions& opt);

std::string tables_report_text(const TablesReport& r);
nlohmann::json tables_report_json(const TablesReport& r);

}  // namespace sdc
