#include "critsets/cli_runner.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "critsets/error.hpp"
#include "critsets/hardness.hpp"
#include "critsets/parallel.hpp"
#include "critsets/sudoku.hpp"

namespace critsets {

using nlohmann::json;

namespace {

std::size_t parse_count(std::string_view text, std::string_view what) {
    if (text.empty() || text.size() > 9) {
        fail(ErrorKind::invalid_parameter, "bad " + std::string(what) + ": '" + std::string(text) + "'");
    }
    std::size_t value = 0;
    for (char ch : text) {
        if (ch < '0' || ch > '9') {
            fail(ErrorKind::invalid_parameter, "bad " + std::string(what) + ": '" + std::string(text) + "'");
        }
        value = value * 10 + static_cast<std::size_t>(ch - '0');
    }
    return value;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail(ErrorKind::invalid_parameter, "cannot open " + path);
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<std::string> read_lines(const std::string& path) {
    std::istringstream in(read_file(path));
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
        lines.push_back(line);
    }
    return lines;
}

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

} // namespace

Graph graph_from_source(std::string_view source) {
    const auto colon = source.find(':');
    if (colon == std::string_view::npos) {
        return parse_graph6(source);
    }
    const auto head = source.substr(0, colon);
    const auto rest = source.substr(colon + 1);
    if (head == "cycle") {
        return make_cycle(parse_count(rest, "cycle order"));
    }
    if (head == "complete") {
        return make_complete(parse_count(rest, "order"));
    }
    if (head == "path") {
        return make_path(parse_count(rest, "order"));
    }
    if (head == "empty") {
        return make_empty(parse_count(rest, "order"));
    }
    if (head == "sudoku") {
        return sudoku_graph(parse_count(rest, "box order")).graph;
    }
    if (head == "latin") {
        const auto k = make_complete(parse_count(rest, "order"));
        return cartesian_product(k, k);
    }
    if (head == "pendant") {
        return add_pendant_to_each(graph_from_source(rest));
    }
    if (head == "complement") {
        return complement(graph_from_source(rest));
    }
    if (head == "file") {
        for (const auto& line : read_lines(std::string(rest))) {
            const auto t = trim(line);
            if (!t.empty()) {
                return parse_graph6(t);
            }
        }
        fail(ErrorKind::invalid_parameter, "no graph in " + std::string(rest));
    }
    if (head == "g6") {
        return parse_graph6(rest);
    }
    fail(ErrorKind::invalid_parameter, "unknown graph source '" + std::string(head) + "'");
}

ScanCheck parse_scan_check(std::string_view text) {
    if (text == "prop1") {
        return ScanCheck::prop1;
    }
    if (text == "converse") {
        return ScanCheck::converse;
    }
    if (text == "uniform") {
        return ScanCheck::uniform;
    }
    fail(ErrorKind::invalid_parameter, "unknown check '" + std::string(text) + "'");
}

const char* to_string(ScanCheck c) {
    switch (c) {
    case ScanCheck::prop1:
        return "prop1";
    case ScanCheck::converse:
        return "converse";
    case ScanCheck::uniform:
        return "uniform";
    }
    return "?";
}

ScanReport scan_graphs(const std::vector<std::string>& lines, ScanCheck check, const SearchLimits& limits,
                       std::size_t workers) {
    std::vector<std::pair<std::size_t, std::string>> jobs;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        auto t = trim(lines[i]);
        if (!t.empty()) {
            jobs.emplace_back(i + 1, std::move(t));
        }
    }
    ScanReport report;
    report.check = check;
    report.records = parallel_map<ScanRecord>(jobs.size(), workers, [&](std::size_t j) {
        ScanRecord r;
        r.line = jobs[j].first;
        r.graph6 = jobs[j].second;
        try {
            const auto g = parse_graph6(r.graph6);
            r.profile = profile(g, limits);
            switch (check) {
            case ScanCheck::prop1:
                r.holds = r.profile->prop1_holds();
                break;
            case ScanCheck::converse:
                r.holds = r.profile->converse_holds();
                break;
            case ScanCheck::uniform:
                r.holds = r.profile->quad.uniform();
                break;
            }
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::internal) {
                throw;
            }
            r.error = e.what();
        }
        return r;
    });
    for (const auto& r : report.records) {
        if (!r.error.empty()) {
            ++report.errors;
            continue;
        }
        ++report.checked;
        if (r.holds) {
            ++report.held;
        } else if (check != ScanCheck::uniform) {
            report.counterexamples.push_back(r.graph6);
        }
    }
    return report;
}

std::vector<TableRow> params_table(std::size_t n, bool nonbipartite_only, const SearchLimits& limits,
                                   std::size_t workers) {
    if (n > 7) {
        fail(ErrorKind::size_limit, "parameter tables run for n <= 7");
    }
    std::vector<Graph> classes;
    for (const auto& g : graph_atlas(n)) {
        if (!nonbipartite_only || !g.is_bipartite()) {
            classes.push_back(g);
        }
    }
    return parallel_map<TableRow>(classes.size(), workers, [&](std::size_t i) {
        return TableRow{classes[i], emit_graph6(classes[i]), profile(classes[i], limits)};
    });
}

// ---------------------------------------------------------------- command line

namespace {

enum class Format { text, json, csv };

struct Options {
    std::uint64_t seed = 1;
    std::size_t max_vertices = SearchLimits{}.exact_vertices;
    std::string format = "text";
    std::uint64_t cap_extensions = 2;
    std::size_t workers = 1;

    SearchLimits limits() const {
        SearchLimits l;
        l.exact_vertices = max_vertices;
        return l;
    }
    Format fmt() const {
        if (format == "json") {
            return Format::json;
        }
        if (format == "csv") {
            return Format::csv;
        }
        return Format::text;
    }
};

json set_json(const VertexSet& s) { return s.elements(); }

json witness_json(std::size_t value, const Witness& w) {
    return {{"value", value}, {"coloring", w.coloring.colors}, {"set", set_json(w.set)}};
}

json quad_json(const ParamQuad& q) {
    return {{"uscs", witness_json(q.uscs, q.uscs_witness)},
            {"oscs", witness_json(q.oscs, q.oscs_witness)},
            {"ulcs", witness_json(q.ulcs, q.ulcs_witness)},
            {"olcs", witness_json(q.olcs, q.olcs_witness)}};
}

std::string csv_set(const VertexSet& s) {
    std::string out;
    s.for_each([&](Vertex v) {
        out += out.empty() ? "" : " ";
        out += std::to_string(v);
    });
    return out;
}

std::string csv_colors(const Coloring& c) {
    std::string out;
    for (std::size_t i = 0; i < c.colors.size(); ++i) {
        out += (i ? " " : "") + std::to_string(c.colors[i]);
    }
    return out;
}

void emit_params(std::ostream& out, const Options& opt, const Graph& g, std::optional<int> k) {
    const auto limits = opt.limits();
    const auto chi = chromatic_number(g, limits);
    const auto q = k ? four_params_k(g, *k, limits) : four_params(g, limits);
    const auto palette = k ? static_cast<std::size_t>(*k) : chi;
    const std::pair<const char*, std::pair<std::size_t, const Witness*>> rows[] = {
        {"uscs", {q.uscs, &q.uscs_witness}},
        {"oscs", {q.oscs, &q.oscs_witness}},
        {"ulcs", {q.ulcs, &q.ulcs_witness}},
        {"olcs", {q.olcs, &q.olcs_witness}},
    };
    switch (opt.fmt()) {
    case Format::json:
        out << json{{"graph6", emit_graph6(g)},
                    {"n", g.order()},
                    {"edges", g.edge_count()},
                    {"chi", chi},
                    {"palette", palette},
                    {"params", quad_json(q)}}
                   .dump(2)
            << '\n';
        break;
    case Format::csv:
        out << "param,value,coloring,set\n";
        for (const auto& [name, row] : rows) {
            out << name << ',' << row.first << ',' << csv_colors(row.second->coloring) << ','
                << csv_set(row.second->set) << '\n';
        }
        break;
    case Format::text:
        out << "graph " << emit_graph6(g) << ": n=" << g.order() << " m=" << g.edge_count() << " chi=" << chi;
        if (k) {
            out << " palette=" << *k;
        }
        out << '\n';
        for (const auto& [name, row] : rows) {
            out << "  " << name << " = " << row.first << "  coloring " << to_string(row.second->coloring)
                << "  set " << to_string(row.second->set) << '\n';
        }
        break;
    }
}

void emit_table(std::ostream& out, const Options& opt, std::size_t n, bool nonbipartite) {
    const auto rows = params_table(n, nonbipartite, opt.limits(), opt.workers);
    switch (opt.fmt()) {
    case Format::json: {
        json arr = json::array();
        for (const auto& r : rows) {
            arr.push_back({{"graph6", r.graph6},
                           {"n", r.profile.order},
                           {"edges", r.graph.edge_count()},
                           {"chi", r.profile.chromatic},
                           {"uscs", r.profile.quad.uscs},
                           {"oscs", r.profile.quad.oscs},
                           {"ulcs", r.profile.quad.ulcs},
                           {"olcs", r.profile.quad.olcs},
                           {"uniquely_colorable", r.profile.uniquely_colorable},
                           {"uniform", r.profile.quad.uniform()}});
        }
        out << arr.dump(2) << '\n';
        break;
    }
    case Format::csv:
        out << "graph6,n,edges,chi,uscs,oscs,ulcs,olcs,uniquely_colorable,uniform\n";
        for (const auto& r : rows) {
            const auto& q = r.profile.quad;
            out << r.graph6 << ',' << r.profile.order << ',' << r.graph.edge_count() << ',' << r.profile.chromatic
                << ',' << q.uscs << ',' << q.oscs << ',' << q.ulcs << ',' << q.olcs << ','
                << (r.profile.uniquely_colorable ? 1 : 0) << ',' << (q.uniform() ? 1 : 0) << '\n';
        }
        break;
    case Format::text:
        out << std::left << std::setw(12) << "graph6" << std::setw(4) << "m" << std::setw(5) << "chi"
            << "uscs oscs ulcs olcs  uc\n";
        for (const auto& r : rows) {
            const auto& q = r.profile.quad;
            out << std::left << std::setw(12) << r.graph6 << std::setw(4) << r.graph.edge_count() << std::setw(5)
                << r.profile.chromatic << std::setw(5) << q.uscs << std::setw(5) << q.oscs << std::setw(5) << q.ulcs
                << std::setw(6) << q.olcs << (r.profile.uniquely_colorable ? "yes" : "no") << '\n';
        }
        out << rows.size() << " graphs\n";
        break;
    }
}

void emit_scan(std::ostream& out, const Options& opt, const ScanReport& rep) {
    switch (opt.fmt()) {
    case Format::json: {
        json recs = json::array();
        for (const auto& r : rep.records) {
            json j{{"line", r.line}, {"graph6", r.graph6}};
            if (r.profile) {
                const auto& q = r.profile->quad;
                j["chi"] = r.profile->chromatic;
                j["params"] = {q.uscs, q.oscs, q.ulcs, q.olcs};
                j["uniquely_colorable"] = r.profile->uniquely_colorable;
                j["holds"] = r.holds;
            } else {
                j["error"] = r.error;
            }
            recs.push_back(std::move(j));
        }
        out << json{{"check", to_string(rep.check)},
                    {"checked", rep.checked},
                    {"held", rep.held},
                    {"errors", rep.errors},
                    {"counterexamples", rep.counterexamples},
                    {"records", recs}}
                   .dump(2)
            << '\n';
        break;
    }
    case Format::csv:
        out << "line,graph6,chi,uscs,oscs,ulcs,olcs,uniquely_colorable,holds,error\n";
        for (const auto& r : rep.records) {
            out << r.line << ',' << r.graph6 << ',';
            if (r.profile) {
                const auto& q = r.profile->quad;
                out << r.profile->chromatic << ',' << q.uscs << ',' << q.oscs << ',' << q.ulcs << ',' << q.olcs << ','
                    << (r.profile->uniquely_colorable ? 1 : 0) << ',' << (r.holds ? 1 : 0) << ",\n";
            } else {
                out << ",,,,,,,\"" << r.error << "\"\n";
            }
        }
        break;
    case Format::text:
        for (const auto& r : rep.records) {
            if (!r.error.empty()) {
                out << "line " << r.line << ": error: " << r.error << '\n';
            } else if (!r.holds) {
                out << "line " << r.line << ": " << r.graph6 << " fails " << to_string(rep.check) << " ("
                    << to_string(r.profile->quad) << ", chi=" << r.profile->chromatic << ")\n";
            }
        }
        out << "check " << to_string(rep.check) << ": " << rep.held << " of " << rep.checked << " graphs hold";
        if (rep.errors) {
            out << ", " << rep.errors << " unreadable lines";
        }
        out << '\n';
        break;
    }
}

void emit_trials(std::ostream& out, const Options& opt, const TrialStats& st) {
    const double n = static_cast<double>(st.n);
    const double reference = std::pow(n, 4) - std::pow(n, 10.0 / 3.0);
    switch (opt.fmt()) {
    case Format::json: {
        json trials = json::array();
        for (const auto& r : st.trials) {
            trials.push_back({{"trial", r.trial}, {"seed", r.seed}, {"size", r.size}, {"determining", r.determining}});
        }
        out << json{{"n", st.n},       {"seed", st.seed}, {"count", st.trials.size()}, {"mean", st.mean},
                    {"min", st.min},   {"max", st.max},   {"reference", reference},    {"trials", trials}}
                   .dump(2)
            << '\n';
        break;
    }
    case Format::csv:
        out << "trial,seed,size,determining\n";
        for (const auto& r : st.trials) {
            out << r.trial << ',' << r.seed << ',' << r.size << ',' << (r.determining ? 1 : 0) << '\n';
        }
        break;
    case Format::text:
        out << "n=" << st.n << " trials=" << st.trials.size() << " seed=" << st.seed << '\n';
        out << "size mean " << std::fixed << std::setprecision(3) << st.mean << ", min " << st.min << ", max "
            << st.max << '\n';
        out << "reference n^4 - n^(10/3) = " << reference << " (descriptive only)\n";
        out << "all " << st.trials.size() << " sets certified determining\n";
        break;
    }
}

void emit_mnc(std::ostream& out, const Options& opt, std::size_t n, const MncResult& r) {
    const auto s = sudoku_graph(n);
    const auto puzzle = emit_puzzle(puzzle_from(s, r.board, r.clues));
    switch (opt.fmt()) {
    case Format::json:
        out << json{{"n", n},
                    {"min_clues", r.min_clues},
                    {"boards_searched", r.boards_searched},
                    {"smaller_sets_checked", r.smaller_sets_checked},
                    {"sets_checked_at_min", r.sets_checked_at_min},
                    {"board", r.board.colors},
                    {"clues", set_json(r.clues)},
                    {"puzzle", puzzle}}
                   .dump(2)
            << '\n';
        break;
    case Format::csv:
        out << "n,min_clues,boards_searched,smaller_sets_checked,sets_checked_at_min\n"
            << n << ',' << r.min_clues << ',' << r.boards_searched << ',' << r.smaller_sets_checked << ','
            << r.sets_checked_at_min << '\n';
        break;
    case Format::text:
        out << "minimum clues: " << r.min_clues << " (" << r.boards_searched << " boards, "
            << r.smaller_sets_checked << " smaller clue sets all unfair)\n"
            << puzzle;
        break;
    }
}

void emit_certify(std::ostream& out, const Options& opt, const Puzzle& p, std::uint64_t completions) {
    const bool fair = completions == 1;
    switch (opt.fmt()) {
    case Format::json:
        out << json{{"n", p.n},
                    {"clues", p.clues().size()},
                    {"completions", completions},
                    {"capped", completions >= opt.cap_extensions},
                    {"fair", fair}}
                   .dump(2)
            << '\n';
        break;
    case Format::csv:
        out << "n,clues,completions,fair\n"
            << p.n << ',' << p.clues().size() << ',' << completions << ',' << (fair ? 1 : 0) << '\n';
        break;
    case Format::text:
        out << p.clues().size() << " clues, ";
        if (completions == 0) {
            out << "no completion\n";
        } else if (fair) {
            out << "exactly one completion: fair\n";
        } else {
            out << (completions >= opt.cap_extensions ? "at least " : "") << completions
                << " completions: not fair\n";
        }
        break;
    }
}

json roles_json(const ReductionInstance& inst) {
    json vertices = json::array();
    for (std::size_t v = 0; v < inst.roles.size(); ++v) {
        const auto& r = inst.roles[v];
        json j{{"id", v}, {"role", to_string(r.role)}};
        if (r.source_vertex >= 0) {
            j["source_vertex"] = r.source_vertex;
        }
        if (r.edge >= 0) {
            j["edge"] = r.edge;
        }
        if (r.other_edge >= 0) {
            j["other_edge"] = r.other_edge;
        }
        if (r.replica >= 0) {
            j["replica"] = r.replica;
        }
        vertices.push_back(std::move(j));
    }
    json edges = json::array();
    for (const auto& [a, b] : inst.source.edges()) {
        edges.push_back({a, b});
    }
    return {{"variant", to_string(inst.variant)},
            {"k", inst.k},
            {"source_graph6", emit_graph6(inst.source)},
            {"source_edges", edges},
            {"graph6", emit_graph6(inst.graph)},
            {"vertices", vertices}};
}

int run_reduce(std::ostream& out, const Options& opt, const std::string& variant_text, const std::string& source,
               const std::string& prefix, bool verify, const std::string& mode_text, std::size_t samples) {
    const auto variant = parse_variant(variant_text);
    const auto h = graph_from_source(source);
    const auto inst = variant == ReductionVariant::ulcs ? reduce_ulcs(h) : reduce_olcs(h);
    if (!prefix.empty()) {
        std::ofstream g6(prefix + ".g6");
        std::ofstream roles(prefix + ".roles.json");
        if (!g6 || !roles) {
            fail(ErrorKind::invalid_parameter, "cannot write to " + prefix + ".*");
        }
        g6 << emit_graph6(inst.graph) << '\n';
        roles << roles_json(inst).dump(2) << '\n';
    }

    std::optional<ReductionReport> report;
    if (verify) {
        VerifyMode mode = VerifyMode::automatic;
        if (mode_text == "full") {
            mode = VerifyMode::full;
        } else if (mode_text == "certificate") {
            mode = VerifyMode::certificate;
        } else if (mode_text != "auto") {
            fail(ErrorKind::invalid_parameter, "unknown verify mode '" + mode_text + "'");
        }
        report = verify_reduction_small(h, variant, mode, samples, opt.seed, opt.limits());
    }

    switch (opt.fmt()) {
    case Format::json: {
        json j{{"variant", to_string(variant)},
               {"vertices", inst.graph.order()},
               {"edges", inst.graph.edge_count()},
               {"k", inst.k}};
        if (prefix.empty()) {
            j["roles"] = roles_json(inst);
        }
        if (report) {
            j["verify"] = {{"mode", report->full_mode ? "full" : "certificate"},
                           {"source_three_colorable", report->source_three_colorable},
                           {"samples", report->samples},
                           {"samples_passed", report->samples_passed},
                           {"consistent", report->consistent},
                           {"detail", report->detail}};
            if (report->exact_value) {
                j["verify"]["exact_value"] = *report->exact_value;
            }
        }
        out << j.dump(2) << '\n';
        break;
    }
    case Format::csv:
        out << "variant,vertices,edges,k,consistent\n"
            << to_string(variant) << ',' << inst.graph.order() << ',' << inst.graph.edge_count() << ',' << inst.k
            << ',' << (report ? (report->consistent ? "1" : "0") : "") << '\n';
        break;
    case Format::text:
        out << to_string(variant) << " instance: " << inst.graph.order() << " vertices, " << inst.graph.edge_count()
            << " edges, k=" << inst.k << '\n';
        if (prefix.empty()) {
            out << emit_graph6(inst.graph) << '\n';
        } else {
            out << "wrote " << prefix << ".g6 and " << prefix << ".roles.json\n";
        }
        if (report) {
            out << (report->full_mode ? "full" : "certificate") << " check: " << report->detail << '\n';
        }
        break;
    }
    if (report && !report->consistent) {
        fail(ErrorKind::internal, "reduction check failed: " + report->detail);
    }
    return exit_ok;
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::size_limit:
        return exit_size_limit;
    case ErrorKind::internal:
        return exit_invariant_breach;
    default:
        return exit_input_error;
    }
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Critical sets of graph colorings", "critsets"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_help_all_flag("--help-all", "Help for every subcommand");

    Options opt;
    app.add_option("--seed", opt.seed, "Seed for randomized steps")->capture_default_str();
    app.add_option("--max-vertices", opt.max_vertices, "Vertex cap for exact critical-set search")
        ->capture_default_str();
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--cap-extensions", opt.cap_extensions, "Stop counting completions at this many")
        ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 40))
        ->capture_default_str();
    app.add_option("--workers", opt.workers, "Worker threads")->check(CLI::Range(1, 256))->capture_default_str();

    std::function<int()> action;

    auto* params = app.add_subcommand("params", "Four critical-set parameters with witnesses");
    std::string params_source;
    std::optional<int> params_k;
    params->add_option("source", params_source, "Graph source (graph6, cycle:n, complete:n, ...)")->required();
    params->add_option("--palette,-k", params_k, "Palette size (default: chromatic number)");
    params->callback([&] { action = [&] { emit_params(out, opt, graph_from_source(params_source), params_k); return 0; }; });

    auto* table = app.add_subcommand("table", "Parameter table over all graphs on n vertices");
    std::size_t table_n = 0;
    bool table_nonbipartite = false;
    table->add_option("n", table_n, "Order (at most 7)")->required();
    table->add_flag("--nonbipartite", table_nonbipartite, "Only non-bipartite graphs");
    table->callback([&] { action = [&] { emit_table(out, opt, table_n, table_nonbipartite); return 0; }; });

    auto* atlas = app.add_subcommand("atlas", "graph6 list of all graphs on n vertices up to isomorphism");
    std::size_t atlas_n = 0;
    atlas->add_option("n", atlas_n, "Order (at most 8)")->required();
    atlas->callback([&] {
        action = [&] {
            for (const auto& g : graph_atlas(atlas_n)) {
                out << emit_graph6(g) << '\n';
            }
            return 0;
        };
    });

    auto* scan = app.add_subcommand("scan", "Check a property on every graph of a graph6 file");
    std::string scan_file;
    std::string scan_check = "converse";
    scan->add_option("file", scan_file, "graph6 file, one graph per line")->required();
    scan->add_option("--check", scan_check, "prop1, converse or uniform")
        ->check(CLI::IsMember({"prop1", "converse", "uniform"}))
        ->capture_default_str();
    scan->callback([&] {
        action = [&] {
            const auto rep = scan_graphs(read_lines(scan_file), parse_scan_check(scan_check), opt.limits(), opt.workers);
            emit_scan(out, opt, rep);
            return rep.counterexamples.empty() ? 0 : 1;
        };
    });

    auto* sudoku = app.add_subcommand("sudoku", "Sudoku graphs, random determining sets, minimum clues");
    sudoku->require_subcommand(1);
    sudoku->fallthrough();

    auto* gen = sudoku->add_subcommand("gen", "Emit the Sudoku graph of box order n");
    std::size_t gen_n = 0;
    gen->add_option("n", gen_n, "Box order")->required();
    gen->callback([&] {
        action = [&] {
            const auto s = sudoku_graph(gen_n);
            if (opt.fmt() == Format::json) {
                out << json{{"n", gen_n},
                            {"vertices", s.graph.order()},
                            {"edges", s.graph.edge_count()},
                            {"degree", s.graph.order() ? s.graph.degree(0) : 0},
                            {"graph6", emit_graph6(s.graph)}}
                           .dump(2)
                    << '\n';
            } else {
                out << emit_graph6(s.graph) << '\n';
            }
            return 0;
        };
    });

    auto* trials = sudoku->add_subcommand("trials", "Random determining-set campaign");
    std::size_t trials_n = 0;
    std::size_t trials_count = 100;
    trials->add_option("n", trials_n, "Box order (2 or 3)")->required();
    trials->add_option("--count", trials_count, "Number of trials")->capture_default_str();
    trials->callback([&] {
        action = [&] {
            emit_trials(out, opt, trial_campaign(trials_n, trials_count, opt.seed, opt.workers));
            return 0;
        };
    });

    auto* mnc = sudoku->add_subcommand("mnc", "Fewest clues of a fair puzzle, by exhaustion");
    std::size_t mnc_n = 0;
    bool no_symmetry = false;
    mnc->add_option("n", mnc_n, "Box order (2)")->required();
    mnc->add_flag("--no-symmetry", no_symmetry, "Search every board instead of one per digit relabeling");
    mnc->callback([&] {
        action = [&] {
            emit_mnc(out, opt, mnc_n, mnc_exhaustive(mnc_n, !no_symmetry));
            return 0;
        };
    });

    auto* certify = sudoku->add_subcommand("certify", "Count completions of a puzzle file");
    std::string certify_file;
    certify->add_option("file", certify_file, "Puzzle grid, '.' for empty cells")->required();
    certify->callback([&] {
        action = [&] {
            const auto p = parse_puzzle(read_file(certify_file));
            const auto s = sudoku_graph(p.n);
            PartialAssignment pa = PartialAssignment::empty(s.graph.order(), s.palette());
            for (Vertex v = 0; v < p.cells.size(); ++v) {
                if (p.cells[v] >= 0) {
                    pa.support.insert(v);
                    pa.colors[v] = p.cells[v];
                }
            }
            const auto completions = count_extensions(s.graph, pa, opt.cap_extensions);
            emit_certify(out, opt, p, completions);
            return completions == 1 ? 0 : 1;
        };
    });

    auto* reduce = app.add_subcommand("reduce", "Build a hardness instance from a source graph");
    std::string reduce_variant;
    std::string reduce_source;
    std::string reduce_out;
    bool reduce_verify = false;
    std::string reduce_mode = "auto";
    std::size_t reduce_samples = 20;
    reduce->add_option("variant", reduce_variant, "ulcs or olcs")->required()->check(CLI::IsMember({"ulcs", "olcs"}));
    reduce->add_option("source", reduce_source, "Source graph H")->required();
    reduce->add_option("--out", reduce_out, "Write PREFIX.g6 and PREFIX.roles.json");
    reduce->add_flag("--verify", reduce_verify, "Check the instance against 3-colorability of H");
    reduce->add_option("--mode", reduce_mode, "auto, full or certificate")
        ->check(CLI::IsMember({"auto", "full", "certificate"}))
        ->capture_default_str();
    reduce->add_option("--samples", reduce_samples, "Colorings examined in certificate mode")->capture_default_str();
    reduce->callback([&] {
        action = [&] {
            return run_reduce(out, opt, reduce_variant, reduce_source, reduce_out, reduce_verify, reduce_mode,
                              reduce_samples);
        };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? exit_ok : exit_input_error;
    }

    try {
        return action ? action() : exit_ok;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return exit_input_error;
    } catch (const Error& e) {
        err << to_string(e.kind()) << ": " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "internal: " << e.what() << '\n';
        return exit_invariant_breach;
    }
}

} // namespace critsets
