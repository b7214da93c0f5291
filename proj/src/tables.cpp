#include "sdc/tables.hpp"

#include "sdc/io.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace sdc {

std::optional<std::string> TableRecord::get(const std::string& key) const {
    const auto it = fields.find(key);
    if (it == fields.end()) return std::nullopt;
    return it->second;
}

std::vector<TableRecord> load_table(const std::string& path, int table) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::vector<TableRecord> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto p = line.find_first_not_of(" \t\r");
        if (p == std::string::npos || line[p] == '#') continue;
        TableRecord rec{table, line_no, parse_fields(line, line_no)};
        if (!rec.get("id") || !rec.get("op")) throw parse_error(line_no, path + ": record needs id and op");
        out.push_back(std::move(rec));
    }
    return out;
}

bool TablesReport::all_pass() const { return failures() == 0 && !rows.empty(); }

std::size_t TablesReport::failures() const {
    std::size_t f = 0;
    for (const auto& r : rows) f += !r.pass;
    return f;
}

TableBook::TableBook(const std::string& data_dir) {
    namespace fs = std::filesystem;
    for (int t = 1; t <= 8; ++t) {
        const auto path = fs::path(data_dir) / ("table" + std::to_string(t) + ".txt");
        for (auto& rec : load_table(path.string(), t)) {
            if (index_.count(rec.id())) throw parse_error(rec.line, "duplicate record id " + rec.id());
            index_[rec.id()] = records_.size();
            records_.push_back(std::move(rec));
        }
    }
    const auto known = fs::path(data_dir) / "known_parameters.txt";
    if (fs::exists(known)) known_ = KnownParameters::load(known.string());
}

const TableRecord& TableBook::record(const std::string& id) const {
    const auto it = index_.find(id);
    if (it == index_.end()) throw std::invalid_argument("no table record '" + id + "'");
    return records_[it->second];
}

namespace {

// Failure while building a record; sources wrap nothing further.
class record_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::string require(const TableRecord& rec, const char* key) {
    auto v = rec.get(key);
    if (!v) throw std::invalid_argument(std::string("record lacks '") + key + "'");
    return *v;
}

Code build_record(TableBook& book, const TableRecord& rec) {
    const std::string op = require(rec, "op");
    if (op == "construct") {
        const std::string text = "p=" + require(rec, "p") + "\nring=" + require(rec, "ring") + "\nq=" + require(rec, "q") +
                                 "\na=" + require(rec, "a") + "\n";
        return build(parse_construction_spec(text));
    }
    const Code& src = book.code(require(rec, "from"));
    const std::string offset = rec.get("offset").value_or("0");
    if (op == "extend" || op == "binary-extend") {
        const Code base = op == "extend" ? src : binary_image(src);
        std::istringstream is("c=" + require(rec, "c") + " X=" + require(rec, "X") + " offset=" + offset);
        return extend(base, read_extension_spec(is, base.ring(), base.length()));
    }
    if (op == "neighbour") {
        const Code base = binary_image(src);
        std::istringstream is("offset=" + offset + "\n" + require(rec, "x"));
        auto xs = read_vector_list(is, base.length());
        auto step = neighbour(base, xs.at(0));
        if (step.degenerate) throw std::invalid_argument("neighbour vector lies in the source code");
        return std::move(step.code);
    }
    throw std::invalid_argument("unknown op '" + op + "'");
}

}  // namespace

const Code& TableBook::code(const std::string& id) {
    if (auto it = built_.find(id); it != built_.end()) return it->second;
    const TableRecord& rec = record(id);
    try {
        return built_.emplace(id, build_record(*this, rec)).first->second;
    } catch (const record_error&) {
        throw;
    } catch (const std::exception& e) {
        throw record_error("building " + id + ": " + e.what());
    }
}

RowResult check_row(TableBook& book, const TableRecord& rec, int threads) {
    const auto t0 = std::chrono::steady_clock::now();
    RowResult r;
    r.table = rec.table;
    r.id = rec.id();
    auto& problems = r.problems;
    try {
        const Code& code = book.code(r.id);
        r.analysis = analyze(code, 14, threads);
        const auto& a = *r.analysis;
        const auto& w = a.weights;
        auto expect_num = [&](const char* key, std::optional<std::int64_t> got) {
            const auto want = rec.get(key);
            if (!want) return;
            const std::string got_s = got ? std::to_string(*got) : "none";
            if (got_s != *want) problems.push_back(std::string(key) + "=" + got_s + " (expected " + *want + ")");
        };
        expect_num("n", static_cast<std::int64_t>(a.binary_length));
        expect_num("d", w.d ? std::optional<std::int64_t>(*w.d) : std::nullopt);
        expect_num("a12", static_cast<std::int64_t>(w.at(12)));
        expect_num("a14", static_cast<std::int64_t>(w.at(14)));
        if (a.type != CodeType::I) problems.push_back("type II code (expected type I)");
        if (const auto fam = rec.get("family")) {
            const auto beta = rec.get("beta"), gamma = rec.get("gamma");
            const EnumeratorMatch* hit = nullptr;
            for (const auto& m : w.families)
                if (m.family == *fam) hit = &m;
            if (!hit) {
                std::string got;
                for (const auto& m : w.families) got += (got.empty() ? "" : ",") + m.family;
                problems.push_back("family " + (got.empty() ? std::string("none") : got) + " (expected " + *fam + ")");
            } else {
                auto cmp = [&](const char* key, const std::optional<std::string>& want, std::optional<int> got) {
                    if (!want) return;
                    const std::string got_s = got ? std::to_string(*got) : "none";
                    if (got_s != *want) problems.push_back(std::string(key) + "=" + got_s + " (expected " + *want + ")");
                };
                cmp("beta", beta, hit->beta);
                cmp("gamma", gamma, hit->gamma);
                if (book.known()) r.is_new = book.known()->is_new(hit->family, hit->beta, hit->gamma);
            }
        }
    } catch (const std::exception& e) {
        problems.push_back(e.what());
    }
    r.pass = problems.empty();
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

TablesReport reproduce_tables(const TableOptions& opt) {
    TableBook book(opt.data_dir);
    auto wanted = [&](int t) {
        if (opt.tables.empty()) return true;
        for (int x : opt.tables)
            if (x == t) return true;
        return false;
    };
    TablesReport out;
    for (const auto& rec : book.records())
        if (wanted(rec.table)) out.rows.push_back(check_row(book, rec, opt.threads));
    return out;
}

std::string tables_report_text(const TablesReport& r) {
    std::ostringstream os;
    for (const auto& row : r.rows) {
        os << "table " << row.table << ' ' << row.id << ": " << (row.pass ? "PASS" : "FAIL");
        if (row.analysis) {
            const auto& w = row.analysis->weights;
            os << " n=" << row.analysis->binary_length << " d=";
            if (w.d) os << *w.d; else os << "none";
            os << " A12=" << w.at(12) << " A14=" << w.at(14);
            for (const auto& m : w.families) {
                os << ' ' << m.family;
                if (m.gamma) os << " gamma=" << *m.gamma;
                if (m.beta) os << " beta=" << *m.beta;
            }
        }
        if (row.is_new) os << (*row.is_new ? " new" : " known");
        for (const auto& p : row.problems) os << "\n    " << p;
        os << '\n';
    }
    os << r.rows.size() - r.failures() << '/' << r.rows.size() << " rows pass\n";
    return os.str();
}

nlohmann::json tables_report_json(const TablesReport& r) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : r.rows) {
        nlohmann::json j{{"table", row.table}, {"id", row.id}, {"pass", row.pass}, {"problems", row.problems}};
        j["analysis"] = row.analysis ? analysis_json(*row.analysis) : nlohmann::json(nullptr);
        j["new"] = row.is_new ? nlohmann::json(*row.is_new) : nlohmann::json(nullptr);
        rows.push_back(std::move(j));
    }
    return {{"rows", rows}, {"pass", r.all_pass()}, {"failures", r.failures()}};
}

}  // namespace sdc
