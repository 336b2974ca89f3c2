#include "tmdd/graph.hpp"
#include "tmdd/mdd.hpp"
#include "tmdd/oracle.hpp"
#include "tmdd/pipeline.hpp"
#include "tmdd/profiles.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace tmdd;

struct GuardTripped : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr int kWidthGuard = 7;    // frontier width limit for DD runs
constexpr int kOracleGuard = 28;  // edge limit for backtracking
const boost::multiprecision::cpp_int kDecimalLimit =
    boost::multiprecision::cpp_int(1000000000000000000LL);  // 10^18

struct Report {
    std::vector<std::pair<std::string, std::string>> lines;
    json obj = json::object();

    void add(const std::string& key, const std::string& value) {
        lines.emplace_back(key, value);
        obj[key] = value;
    }
    void add(const std::string& key, long long value) {
        lines.emplace_back(key, std::to_string(value));
        obj[key] = value;
    }
};

struct OutputOptions {
    bool as_json = false;
    long long enumerate = -1;  // member cap, -1 = count only
    bool stats = false;
};

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
    cmd->add_flag("--json", out.as_json, "machine-readable JSON report");
    cmd->add_option("--enumerate", out.enumerate, "print up to N members")
        ->check(CLI::NonNegativeNumber);
    cmd->add_flag("--stats", out.stats, "include per-level DD statistics");
}

std::string join_csv(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

void add_host_summary(Report& rep, const Graph& g) {
    rep.add("host_vertices", g.vertex_count());
    rep.add("host_edges", g.edge_count());
    rep.add("frontier_width", compute_frontiers(g).width);
}

void add_count(Report& rep, const FamilyCount& count) {
    if (count.value <= kDecimalLimit) rep.add("count", count.decimal());
    rep.obj["count_exact"] = count.decimal();
    rep.add("count_scientific", count.scientific());
}

std::vector<int> member_indices(const ColoredSubset& x) {
    std::set<int> all;
    for (const auto& cls : x)
        for (int e : cls) all.insert(e + 1);
    return {all.begin(), all.end()};
}

void emit(const Report& rep, const OutputOptions& out,
          const std::vector<ColoredSubset>* members = nullptr) {
    if (out.as_json) {
        json obj = rep.obj;
        if (members) {
            json arr = json::array();
            for (const ColoredSubset& x : *members) arr.push_back(member_indices(x));
            obj["members"] = arr;
        }
        std::cout << obj.dump(2) << "\n";
        return;
    }
    if (members) {
        for (const ColoredSubset& x : *members) {
            std::string line;
            for (int e : member_indices(x)) {
                if (!line.empty()) line += " ";
                line += std::to_string(e);
            }
            std::cout << line << "\n";
        }
    }
    for (const auto& [key, value] : rep.lines) std::cout << key << ": " << value << "\n";
}

Graph load_host(const std::string& path, const std::string& reorder) {
    Graph g = parse_edge_list_file(path);
    if (reorder == "bfs") g = reorder_edges(g, ReorderStrategy::Bfs);
    return g;
}

void check_width_guard(const Graph& g, bool force) {
    if (!force && compute_frontiers(g).width > kWidthGuard)
        throw GuardTripped("frontier width " +
                           std::to_string(compute_frontiers(g).width) + " exceeds " +
                           std::to_string(kWidthGuard) + "; rerun with --force");
}

struct QuerySpec {
    Graph graph;
    ExtendedProfile profile;
};

QuerySpec resolve_query(const std::string& query, const std::string& profile_name) {
    Graph h;
    bool named = true;
    try {
        h = named_query(query);
    } catch (const std::invalid_argument&) {
        named = false;
        h = parse_edge_list_file(query);
    }
    ProfileChoice choice = named ? ProfileChoice::Special : ProfileChoice::Vertex;
    if (profile_name == "vertex") choice = ProfileChoice::Vertex;
    if (profile_name == "edge") choice = ProfileChoice::Edge;
    if (profile_name == "special") choice = ProfileChoice::Special;
    return {h, profile_for(h, choice)};
}

void report_dd_run(const Graph& g, const Mdd& dd, const OutputOptions& out, Report& rep,
                   std::chrono::steady_clock::time_point start) {
    rep.add("dd_nodes", static_cast<long long>(dd.store->node_count()));
    rep.add("dd_width", width(dd));
    if (out.stats) rep.add("dd_level_nodes", join_csv(level_node_counts(dd)));
    add_count(rep, count_members(dd));
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    rep.add("wall_seconds", std::to_string(dt.count()));
    if (out.enumerate >= 0) {
        auto members = enumerate_members(dd, static_cast<std::uint64_t>(out.enumerate));
        emit(rep, out, &members);
    } else {
        emit(rep, out);
    }
}

int run(int argc, char** argv) {
    CLI::App app{"implicit enumeration of topological-minor-free subgraph families"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "write a generated host graph as an edge list");
    std::string gen_kind, gen_out;
    int gen_a = 0, gen_b = 0, gen_rows = 3, gen_cols = 0;
    gen->add_option("--kind", gen_kind, "complete | complete-bipartite | king")
        ->required()
        ->check(CLI::IsMember({"complete", "complete-bipartite", "king"}));
    gen->add_option("-a", gen_a, "order of K_a, or first part of K_{a,b}");
    gen->add_option("-b", gen_b, "second part of K_{a,b}");
    gen->add_option("--rows", gen_rows, "king graph rows");
    gen->add_option("--cols", gen_cols, "king graph columns");
    gen->add_option("-o,--out", gen_out, "output path")->required();

    // shared run options
    std::string host_path, reorder = "as-given";
    bool force = false;
    OutputOptions out;

    auto add_host_flags = [&](CLI::App* cmd) {
        cmd->add_option("--host", host_path, "host graph edge-list file")->required();
        cmd->add_option("--reorder", reorder, "edge order: as-given | bfs")
            ->check(CLI::IsMember({"as-given", "bfs"}));
        cmd->add_flag("--force", force, "bypass resource guards");
        add_output_flags(cmd, out);
    };

    // tm
    auto* tm = app.add_subcommand("tm", "enumerate subgraphs homeomorphic to a query");
    std::string tm_query, tm_profile;
    tm->add_option("--query", tm_query, "k3|k4|k4e|k23|k33|k5 or an edge-list file")
        ->required();
    tm->add_option("--profile", tm_profile, "vertex | edge | special")
        ->check(CLI::IsMember({"vertex", "edge", "special"}));
    add_host_flags(tm);

    // class
    auto* cls_cmd = app.add_subcommand("class", "enumerate all subgraphs in a graph class");
    std::string cls_name;
    cls_cmd->add_option("--class", cls_name, "planar | outerplanar | series-parallel | cactus")
        ->required()
        ->check(CLI::IsMember(graph_class_names()));
    add_host_flags(cls_cmd);

    // oracle
    auto* orc = app.add_subcommand("oracle", "independent backtracking count");
    std::string orc_class;
    orc->add_option("--class", orc_class, "planar | outerplanar | series-parallel | cactus")
        ->required()
        ->check(CLI::IsMember(graph_class_names()));
    add_host_flags(orc);

    // export-dd
    auto* exp = app.add_subcommand("export-dd", "write a family DD in text form");
    std::string exp_query, exp_profile, exp_class, exp_out;
    exp->add_option("--query", exp_query, "query shorthand or edge-list file");
    exp->add_option("--profile", exp_profile, "vertex | edge | special")
        ->check(CLI::IsMember({"vertex", "edge", "special"}));
    exp->add_option("--class", exp_class, "graph class instead of a query");
    exp->add_option("-o,--out", exp_out, "output path")->required();
    add_host_flags(exp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (gen->parsed()) {
        Graph g;
        if (gen_kind == "complete")
            g = complete_graph(gen_a);
        else if (gen_kind == "complete-bipartite")
            g = complete_bipartite_graph(gen_a, gen_b);
        else
            g = king_graph(gen_rows, gen_cols);
        std::ofstream file(gen_out);
        if (!file) throw std::runtime_error("cannot write " + gen_out);
        write_edge_list(file, g);
        return 0;
    }

    auto start = std::chrono::steady_clock::now();

    if (tm->parsed()) {
        Graph g = load_host(host_path, reorder);
        check_width_guard(g, force);
        QuerySpec q = resolve_query(tm_query, tm_profile);
        Report rep;
        add_host_summary(rep, g);
        rep.add("query", q.profile.query_name);
        rep.add("profile_colors", q.profile.constraint.c);
        long long s_size = 0;
        for (const auto& [d, mult] : q.profile.constraint.s) s_size += mult;
        rep.add("profile_s_size", s_size);
        rep.add("profile_t_size", static_cast<long long>(q.profile.constraint.t.size()));
        Mdd dd = tm_embeddings(g, q.profile);
        report_dd_run(g, dd, out, rep, start);
        return 0;
    }

    if (cls_cmd->parsed()) {
        Graph g = load_host(host_path, reorder);
        check_width_guard(g, force);
        Report rep;
        add_host_summary(rep, g);
        rep.add("class", cls_name);
        Mdd dd = ftm_subgraphs(g, graph_class(cls_name));
        report_dd_run(g, dd, out, rep, start);
        return 0;
    }

    if (orc->parsed()) {
        Graph g = load_host(host_path, reorder);
        if (!force && g.edge_count() > kOracleGuard)
            throw GuardTripped("host has more than " + std::to_string(kOracleGuard) +
                               " edges; rerun with --force");
        Report rep;
        add_host_summary(rep, g);
        rep.add("class", orc_class);
        std::function<bool(const Graph&)> predicate;
        if (orc_class == "planar") {
            predicate = [](const Graph& s) { return is_planar(s); };
        } else {
            if (!force && g.edge_count() > 20)
                throw GuardTripped("non-planar oracle classes need at most 20 edges");
            GraphClassSpec spec = graph_class(orc_class);
            std::vector<Graph> forbidden;
            for (const auto& [query, profile] : spec.forbidden) forbidden.push_back(query);
            predicate = [forbidden](const Graph& s) {
                for (const Graph& h : forbidden)
                    if (!brute_tm_embeddings(s, h).empty()) return false;
                return true;
            };
        }
        add_count(rep, backtrack_enumerate(g, predicate));
        std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
        rep.add("wall_seconds", std::to_string(dt.count()));
        emit(rep, out);
        return 0;
    }

    // export-dd
    Graph g = load_host(host_path, reorder);
    check_width_guard(g, force);
    if (exp_query.empty() == exp_class.empty())
        throw std::runtime_error("export-dd needs exactly one of --query and --class");
    Mdd dd = exp_class.empty()
                 ? tm_embeddings(g, resolve_query(exp_query, exp_profile).profile)
                 : ftm_subgraphs(g, graph_class(exp_class));
    std::ofstream file(exp_out);
    if (!file) throw std::runtime_error("cannot write " + exp_out);
    write_dd(file, dd);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const GuardTripped& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
