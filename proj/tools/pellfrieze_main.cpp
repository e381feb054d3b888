#include "pellfrieze/analysis.hpp"
#include "pellfrieze/frieze.hpp"
#include "pellfrieze/geometry.hpp"
#include "pellfrieze/json_io.hpp"
#include "pellfrieze/quadint.hpp"
#include "pellfrieze/sequences.hpp"
#include "pellfrieze/svg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace pellfrieze;
using nlohmann::json;

constexpr int kExitParse = 2;
constexpr int kExitInvalid = 3;
constexpr int kExitHardInvariant = 4;

struct CliError {
    int code;
    std::string message;
};

Dissection load_dissection(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CliError{kExitParse, "cannot open " + path};
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw CliError{kExitParse, path + ": " + e.what()};
    }
    try {
        return dissection_from_json(j);
    } catch (const ParseError& e) {
        throw CliError{kExitParse, path + ": " + e.what()};
    } catch (const InvalidDissection& e) {
        throw CliError{kExitInvalid, path + ": " + e.what()};
    }
}

void write_output(const std::string& path, const std::string& data) {
    if (path.empty()) {
        std::cout << data;
        return;
    }
    std::ofstream out(path);
    if (!out) throw CliError{kExitParse, "cannot write " + path};
    out << data;
}

size_t display_width(const std::string& s) {
    size_t w = 0;
    for (unsigned char c : s) {
        if ((c & 0xC0) != 0x80) ++w;
    }
    return w;
}

std::string pad_left(const std::string& s, size_t width) {
    const size_t w = display_width(s);
    return std::string(w < width ? width - w : 0, ' ') + s;
}

// One period plus one repeated column, every other row shifted by half a
// column (column width W, odd rows indented by W/2).
std::string format_pattern(const std::vector<std::vector<QuadInt>>& rows) {
    size_t width = 0;
    for (const auto& row : rows) {
        for (const QuadInt& v : row) width = std::max(width, display_width(v.str()));
    }
    width += 2;
    if (width % 2 != 0) ++width;

    std::ostringstream os;
    const size_t period = rows.empty() ? 0 : rows.front().size();
    for (size_t r = 0; r < rows.size(); ++r) {
        if (r % 2 == 1) os << std::string(width / 2, ' ');
        for (size_t i = 0; i <= period; ++i) {
            os << pad_left(rows[r][i % period].str(), width);
        }
        os << '\n';
    }
    return os.str();
}

int cmd_frieze(const std::string& path, const std::string& format, bool verify,
               const std::string& out_path) {
    const Dissection d = load_dissection(path);
    FriezeTable t = [&] {
        try {
            return frieze_from_dissection(d);
        } catch (const NotTriQuad& e) {
            throw CliError{kExitInvalid, e.what()};
        }
    }();

    std::optional<FriezeViolation> violation;
    if (verify) violation = verify_frieze(t);

    if (format == "json") {
        json j = frieze_to_json(t);
        if (verify) j["ptolemy_closed"] = !violation.has_value();
        write_output(out_path, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        for (int i = 0; i < t.n(); ++i) {
            for (int j = i + 1; j < t.n(); ++j) {
                os << "f(" << i << "," << j << ") = " << t.at(i, j) << "\n";
            }
        }
        os << "\n" << format_pattern(to_frieze_pattern(t));
        if (verify) os << "\nptolemy-closure: " << (violation ? "VIOLATED" : "ok") << "\n";
        write_output(out_path, os.str());
    }
    return 0;
}

int cmd_check(const std::string& path, const std::string& out_path) {
    const Dissection d = load_dissection(path);
    try {
        const FriezeTable t = frieze_from_dissection(d);
        const auto witnesses = analysis::enumerate_unitary_triangulations(t);
        const auto decompositions = analysis::enumerate_tower_decompositions(d);
        const json verdict{{"n", d.n()},
                           {"unitary", !witnesses.empty()},
                           {"unitary_witnesses_count", witnesses.size()},
                           {"tower_decomposable", !decompositions.empty()},
                           {"decompositions", decompositions.size()},
                           {"type", type_of(d)},
                           {"separated", is_separated(d)}};
        write_output(out_path, verdict.dump(2) + "\n");
    } catch (const NotTriQuad& e) {
        throw CliError{kExitInvalid, e.what()};
    }
    return 0;
}

int cmd_render(const std::string& path, bool overlay_units, const std::string& out_path) {
    const Dissection d = load_dissection(path);
    std::optional<FriezeTable> t;
    if (overlay_units) {
        try {
            t = frieze_from_dissection(d);
        } catch (const NotTriQuad& e) {
            throw CliError{kExitInvalid, e.what()};
        }
    }
    write_output(out_path, render_svg(d, t ? &*t : nullptr));
    return 0;
}

std::pair<int, int> parse_range(const std::string& text) {
    const size_t dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int v = std::stoi(text);
            return {v, v};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw CliError{kExitParse, "bad range \"" + text + "\" (expected N or A..B)"};
    }
}

int cmd_scan(const std::string& range, std::optional<int> type_max, bool separated_only,
             bool four_angulations, bool lemma56, int workers, long from_index,
             const std::string& out_path) {
    const auto [lo, hi] = parse_range(range);
    if (lo < 3 || hi < lo) throw CliError{kExitParse, "scan range must satisfy 3 <= A <= B"};

    bool hard_failure = false;
    json reports = json::array();
    for (int n = lo; n <= hi; ++n) {
        if (lemma56) {
            const auto report = analysis::lemma56_scan(n, workers);
            std::cerr << "lemma56 n=" << n << ": " << report.dissections
                      << " type<=3 dissections, " << report.checked << " triangles checked, "
                      << report.violations.size() << " violations\n";
            reports.push_back(lemma56_report_to_json(report));
        } else {
            analysis::ScanFilters filters;
            filters.type_max = type_max;
            filters.separated_only = separated_only;
            filters.four_angulations_only = four_angulations;
            const auto report =
                analysis::conjecture_scan(n, filters, workers, n == lo ? from_index : 0);
            std::cerr << "scan n=" << n << ": examined " << report.examined << "/"
                      << report.family_total << ", unitary " << report.unitary << ", towers "
                      << report.tower_decomposable << ", counterexamples "
                      << report.counterexamples.size() << "\n";
            if (!report.hard_violations.empty()) hard_failure = true;
            reports.push_back(scan_report_to_json(report));
        }
    }
    const json out{{lemma56 ? "lemma56_reports" : "reports", reports}};
    write_output(out_path, out.dump(2) + "\n");
    if (hard_failure) {
        std::cerr << "hard invariant violated: a tower decomposition without a unitary fan\n";
        return kExitHardInvariant;
    }
    return 0;
}

int cmd_sequences(int max_n) {
    namespace seq = pellfrieze::sequences;
    std::vector<std::vector<std::string>> table;
    table.push_back({"n", "s_n", "d_n", "l_n", "a_n", "b_n", "Q_n"});
    for (int n = 0; n <= max_n; ++n) {
        const auto conv = seq::convergent(n);
        table.push_back({std::to_string(n), seq::s(n).str(), seq::d(n).str(), seq::ell(n).str(),
                         conv.a.str(), conv.b.str(), seq::pell(n).str()});
    }
    std::vector<size_t> widths(table.front().size(), 0);
    for (const auto& row : table) {
        for (size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], display_width(row[c]));
    }
    for (const auto& row : table) {
        std::string line;
        for (size_t c = 0; c < row.size(); ++c) {
            line += pad_left(row[c], widths[c] + (c == 0 ? 0 : 2));
        }
        std::cout << line << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact friezes over Z[sqrt(2)] from polygon dissections"};
    app.require_subcommand(1);

    std::string in_path, out_path, format = "text", range;
    bool verify = false, overlay = false, separated_only = false, four_ang = false,
         lemma56 = false;
    int workers = 1, max_n = 20;
    long from_index = 0;
    std::optional<int> type_max;

    auto* frieze_cmd = app.add_subcommand("frieze", "Compute the frieze of a dissection");
    frieze_cmd->add_option("file", in_path, "dissection JSON file")->required();
    frieze_cmd->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    frieze_cmd->add_flag("--verify", verify, "re-check the Ptolemy closure");
    frieze_cmd->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* check_cmd = app.add_subcommand("check", "Unitarity/tower verdict for a dissection");
    check_cmd->add_option("file", in_path, "dissection JSON file")->required();
    check_cmd->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* scan_cmd = app.add_subcommand("scan", "Exhaustive conjecture scan over dissections");
    scan_cmd->add_option("--n", range, "polygon size or range A..B")->required();
    int type_max_value = -1;
    scan_cmd->add_option("--type-max", type_max_value, "only dissections of type <= K");
    scan_cmd->add_flag("--separated-only", separated_only, "only separated dissections");
    scan_cmd->add_flag("--four-angulations", four_ang, "only 4-angulations");
    scan_cmd->add_flag("--lemma56", lemma56, "basic-triangle scan over type-3 dissections");
    scan_cmd->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
    scan_cmd->add_option("--from-index", from_index, "resume at this enumeration index");
    scan_cmd->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* render_cmd = app.add_subcommand("render", "Render a dissection as SVG");
    render_cmd->add_option("file", in_path, "dissection JSON file")->required();
    render_cmd->add_flag("--overlay-units", overlay, "overlay unit arcs with weights");
    render_cmd->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* seq_cmd = app.add_subcommand("sequences", "Print the sequence table");
    seq_cmd->add_option("--max", max_n, "largest index")->check(CLI::NonNegativeNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (frieze_cmd->parsed()) return cmd_frieze(in_path, format, verify, out_path);
        if (check_cmd->parsed()) return cmd_check(in_path, out_path);
        if (scan_cmd->parsed()) {
            if (type_max_value >= 0) type_max = type_max_value;
            return cmd_scan(range, type_max, separated_only, four_ang, lemma56, workers,
                            from_index, out_path);
        }
        if (render_cmd->parsed()) return cmd_render(in_path, overlay, out_path);
        if (seq_cmd->parsed()) return cmd_sequences(max_n);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const InvalidDissection& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const NotTriQuad& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
