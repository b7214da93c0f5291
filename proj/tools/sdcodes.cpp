// sdcodes: construct, transform and analyze self-dual codes.
//
// Exit status: 0 success, 1 verification mismatch, 2 input error.

#include "sdc/io.hpp"
#include "sdc/report.hpp"
#include "sdc/search.hpp"
#include "sdc/tables.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#ifndef SDC_DATA_DIR
#define SDC_DATA_DIR "paper-data"
#endif

namespace {

enum class Format { Text, Json };

struct Options {
    int w_max = 14;
    int threads = 0;
    std::optional<std::uint64_t> seed;
    std::string out;
    Format format = Format::Text;
    std::string data_dir = SDC_DATA_DIR;
};

class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw input_error("cannot write '" + path + "'");
    out << text;
}

std::string render(const sdc::Analysis& a, Format f) {
    return f == Format::Json ? sdc::analysis_json(a).dump(2) + "\n" : sdc::analysis_text(a);
}

sdc::Code load(const std::string& path) {
    try {
        return sdc::load_code(path);
    } catch (const std::exception& e) {
        throw input_error(path + ": " + e.what());
    }
}

void write_result(const sdc::Code& code, const Options& o, Format f) {
    const auto a = sdc::analyze(code, o.w_max, o.threads);
    std::cout << render(a, f);
    if (!o.out.empty()) sdc::save_code(o.out, code);
}

int cmd_verify(const Options& o, const std::vector<int>& tables) {
    const auto report = sdc::reproduce_tables({o.data_dir, o.threads, tables});
    emit(o.format == Format::Json ? sdc::tables_report_json(report).dump(2) + "\n" : sdc::tables_report_text(report), o.out);
    return report.all_pass() ? 0 : 1;
}

int cmd_analyze(const Options& o, const std::string& file) {
    const auto a = sdc::analyze(load(file), o.w_max, o.threads);
    emit(render(a, o.format), o.out);
    return 0;
}

int cmd_construct(const Options& o, const std::string& file) {
    sdc::ConstructionSpec spec = [&] {
        try {
            return sdc::parse_construction_spec(sdc::read_file(file));
        } catch (const std::exception& e) {
            throw input_error(file + ": " + e.what());
        }
    }();
    const auto m = sdc::mmT(spec);
    if (!m.is_zero()) throw sdc::not_self_dual("M M^T is nonzero");
    write_result(sdc::build(spec), o, o.format);
    return 0;
}

int cmd_extend(const Options& o, const std::string& code_file, const std::string& x_file, bool binary) {
    sdc::Code code = load(code_file);
    if (binary) code = sdc::binary_image(code);
    std::ifstream in(x_file);
    if (!in) throw input_error("cannot open '" + x_file + "'");
    sdc::ExtensionSpec spec = [&] {
        try {
            return sdc::read_extension_spec(in, code.ring(), code.length());
        } catch (const std::exception& e) {
            throw input_error(x_file + ": " + e.what());
        }
    }();
    write_result(sdc::extend(code, spec), o, o.format);
    return 0;
}

std::vector<sdc::BitVec> load_vectors(const std::string& file, std::size_t n) {
    std::ifstream in(file);
    if (!in) throw input_error("cannot open '" + file + "'");
    try {
        return sdc::read_vector_list(in, n);
    } catch (const std::exception& e) {
        throw input_error(file + ": " + e.what());
    }
}

int cmd_neighbour(const Options& o, const std::string& code_file, const std::string& x_file) {
    const sdc::Code code = sdc::binary_image(load(code_file));
    const auto xs = load_vectors(x_file, code.length());
    if (xs.size() != 1) throw input_error(x_file + ": expected exactly one vector");
    auto step = sdc::neighbour(code, xs[0]);
    if (step.degenerate) std::cerr << "warning: vector lies in the code; code returned unchanged\n";
    write_result(step.code, o, o.format);
    return 0;
}

int cmd_chain(const Options& o, const std::string& code_file, const std::string& chain_file) {
    const sdc::Code code = sdc::binary_image(load(code_file));
    const auto chain = sdc::neighbour_chain(code, load_vectors(chain_file, code.length()));
    nlohmann::json all = nlohmann::json::array();
    std::string text;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        const auto a = sdc::analyze(chain[i], o.w_max, o.threads);
        if (o.format == Format::Json)
            all.push_back({{"step", i + 1}, {"analysis", sdc::analysis_json(a)}});
        else
            text += "step=" + std::to_string(i + 1) + "\n" + sdc::analysis_text(a);
    }
    std::cout << (o.format == Format::Json ? all.dump(2) + "\n" : text);
    if (!o.out.empty() && !chain.empty()) sdc::save_code(o.out, chain.back());
    return 0;
}

int cmd_search(const Options& o, const std::string& file) {
    sdc::SearchConfig cfg = [&] {
        try {
            return sdc::search_config_from_json(nlohmann::json::parse(sdc::read_file(file)));
        } catch (const std::exception& e) {
            throw input_error(file + ": " + e.what());
        }
    }();
    if (o.seed) cfg.seed = *o.seed;
    if (o.threads > 0) cfg.threads = o.threads;
    cfg.w_max = o.w_max;
    if (cfg.known_parameters.empty()) cfg.known_parameters = o.data_dir + "/known_parameters.txt";
    try {
        sdc::validate(cfg);
    } catch (const std::exception& e) {
        throw input_error(file + ": " + e.what());
    }
    std::string text;
    for (const auto& d : sdc::run_search(cfg))
        text += o.format == Format::Json ? sdc::discovery_json(d).dump() + "\n" : sdc::discovery_text(d);
    emit(text, o.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Self-dual codes from block quadratic-residue circulant constructions"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}};
    app.add_option("--w-max", o.w_max, "largest weight counted")->check(CLI::Range(1, 64));
    app.add_option("--threads", o.threads, "worker threads (0: OpenMP default)");
    app.add_option("--seed", o.seed, "search seed (overrides the config)");
    app.add_option("--out", o.out, "output path");
    app.add_option("--format", o.format, "text or json")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app.add_option("--data-dir", o.data_dir, "directory with the table data files");

    std::vector<int> tables;
    auto* verify = app.add_subcommand("verify-tables", "rebuild the tabulated codes and check their parameters");
    verify->add_option("--table", tables, "restrict to these tables (1-8)")->check(CLI::Range(1, 8));

    std::string a1, a2;
    bool binary = false;
    auto* analyze = app.add_subcommand("analyze", "weight distribution and enumerator family of a code file");
    analyze->add_option("codefile", a1)->required();
    auto* construct = app.add_subcommand("construct", "build a code from a construction spec");
    construct->add_option("specfile", a1)->required();
    auto* extend = app.add_subcommand("extend", "extend a self-dual code by two coordinates");
    extend->add_option("codefile", a1)->required();
    extend->add_option("Xfile", a2)->required();
    extend->add_flag("--binary", binary, "extend the binary image of the code");
    auto* nb = app.add_subcommand("neighbour", "neighbour of (the binary image of) a code");
    nb->add_option("codefile", a1)->required();
    nb->add_option("xfile", a2)->required();
    auto* chain = app.add_subcommand("chain", "sequence of neighbours");
    chain->add_option("codefile", a1)->required();
    chain->add_option("chainfile", a2)->required();
    auto* search = app.add_subcommand("search", "seeded random search");
    search->add_option("configfile", a1)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*verify) return cmd_verify(o, tables);
        if (*analyze) return cmd_analyze(o, a1);
        if (*construct) return cmd_construct(o, a1);
        if (*extend) return cmd_extend(o, a1, a2, binary);
        if (*nb) return cmd_neighbour(o, a1, a2);
        if (*chain) return cmd_chain(o, a1, a2);
        if (*search) return cmd_search(o, a1);
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
