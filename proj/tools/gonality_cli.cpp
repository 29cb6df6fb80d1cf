// gonality: chip-firing, rank and divisorial gonality from the command line.

#include "gonality/corpus.hpp"
#include "gonality/error.hpp"
#include "gonality/formats.hpp"
#include "gonality/generators.hpp"
#include "gonality/json.hpp"
#include "gonality/scan.hpp"
#include "gonality/search.hpp"
#include "gonality/verify.hpp"
#include "gonality/version.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

using namespace gonality;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string subcommand;
    std::string input = "-";
    std::string format; ///< empty: auto-detect on input, sparse6 on output
    int r = 1;
    std::optional<int> q;
    int kmax = 1;
    int jobs = 1;
    std::string output;
    std::uint64_t seed = 0;
};

Json config_json(const RunConfig& c) {
    return {{"subcommand", c.subcommand},
            {"input", c.input},
            {"format", c.format.empty() ? Json(nullptr) : Json(c.format)},
            {"r", c.r},
            {"q", c.q ? Json(*c.q) : Json(nullptr)},
            {"kmax", c.kmax},
            {"jobs", c.jobs},
            {"output", c.output.empty() ? Json(nullptr) : Json(c.output)},
            {"seed", c.seed},
            {"schema", schema_version}};
}

Json envelope(const RunConfig& c) {
    return {{"tool", "gonality"}, {"version", tool_version}, {"schema", schema_version}, {"config", config_json(c)}};
}

std::string read_all(const std::string& path) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Multigraph read_graph(const RunConfig& c, const std::string& labels_path) {
    std::string text = read_all(c.input);
    if (text.find_first_not_of(" \t\r\n") == std::string::npos)
        throw UsageError("empty input: expected a graph in graph6, sparse6 or edgelist form");
    Format fmt = c.format.empty() ? detect_format(text) : parse_format_name(c.format);
    Multigraph g = parse(text, fmt);
    if (!labels_path.empty()) {
        auto side = Json::parse(read_all(labels_path));
        g = g.with_labels(side.at("labels").get<std::vector<std::string>>());
    }
    return g;
}

Divisor read_divisor(const std::string& spec, const Multigraph& g) {
    if (spec.empty())
        throw UsageError("a divisor is required (--divisor '[...]' or --divisor @FILE)");
    std::string text = spec.front() == '@' ? read_all(spec.substr(1)) : spec;
    Divisor d = Json::parse(text).get<Divisor>();
    require_size(g, d);
    return d;
}

void emit(const Json& doc, const RunConfig& c) {
    if (c.output.empty()) {
        std::cout << doc.dump(2) << '\n';
        return;
    }
    std::ofstream out(c.output);
    if (!out)
        throw UsageError("cannot write " + c.output);
    out << doc.dump(2) << '\n';
}

void emit_graph(const Multigraph& g, const RunConfig& c) {
    Format fmt = c.format.empty() ? Format::Sparse6 : parse_format_name(c.format);
    std::string text = encode(g, fmt);
    if (c.output.empty()) {
        std::cout << text << '\n';
        return;
    }
    std::ofstream out(c.output);
    if (!out)
        throw UsageError("cannot write " + c.output);
    out << text << '\n';
}

SearchOptions search_options(const RunConfig& c) {
    SearchOptions o;
    if (c.q)
        o.base = *c.q;
    o.jobs = c.jobs;
    return o;
}

// ----------------------------------------------------------------------- gen

Multigraph component_from_json(const Json& j, Vertex& base) {
    std::string name = j.is_string() ? j.get<std::string>() : j.at("graph").get<std::string>();
    Multigraph g = name == "tricycle"          ? minimal_tricycle()
                   : name == "tricycle-simple" ? minimal_simple_tricycle()
                                               : parse(name, detect_format(name));
    const Json* b = j.is_object() && j.contains("base") ? &j.at("base") : nullptr;
    if (!b) {
        auto hub = g.find_tag("v0");
        base = hub ? *hub : 0;
    } else if (b->is_string()) {
        auto v = g.find_tag(b->get<std::string>());
        if (!v)
            throw InvalidSpec("no vertex tagged " + b->get<std::string>());
        base = *v;
    } else {
        base = b->get<Vertex>();
    }
    return g;
}

SkewerSpec skewer_from_json(const Json& j) {
    SkewerSpec spec;
    auto h = j.at("skewer").get<std::string>();
    spec.skewer = h == "K1" ? Multigraph(1, {}) : parse(h, detect_format(h));
    spec.t = j.at("t").get<int>();
    for (const auto& c : j.at("components")) {
        Vertex base = 0;
        spec.components.push_back(component_from_json(c, base));
        spec.bases.push_back(base);
    }
    if (j.contains("parts"))
        spec.parts = j.at("parts").get<std::vector<int>>();
    return spec;
}

TricycleSpec tricycle_from_json(const Json& j) {
    TricycleSpec spec;
    if (j.contains("cycle_length"))
        spec.cycle_length = j.at("cycle_length").get<std::array<int, 3>>();
    if (j.contains("minus_position"))
        spec.minus_position = j.at("minus_position").get<std::array<int, 3>>();
    if (j.contains("plus_position"))
        spec.plus_position = j.at("plus_position").get<std::array<int, 3>>();
    if (j.contains("spoke_parts"))
        spec.spoke_parts = j.at("spoke_parts").get<std::array<int, 6>>();
    return spec;
}

Multigraph random_graph(int n, int extra_edges, std::uint64_t seed) {
    if (n < 1 || extra_edges < 0)
        throw UsageError("random graphs need --n >= 1 and --edges >= 0");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v)
        edges.push_back({static_cast<Vertex>(rng() % static_cast<std::uint64_t>(v)), v});
    for (int i = 0; i < extra_edges && n > 1; ++i) {
        auto u = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n));
        auto v = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n - 1));
        edges.push_back({u, v >= u ? v + 1 : v});
    }
    return Multigraph(n, std::move(edges));
}

int run_gen(const RunConfig& c, const std::string& family, int k, const std::string& spec_path,
            const std::string& sidecar_path, int random_n, int random_edges) {
    Multigraph g(1, {});
    Json divisors = Json::object();
    if (family == "tricycle" || family == "tricycle-simple") {
        if (!spec_path.empty())
            g = tricycle(tricycle_from_json(Json::parse(read_all(spec_path))));
        else
            g = family == "tricycle" ? minimal_tricycle() : minimal_simple_tricycle();
        divisors["transition"] = transition_divisor(g);
        divisors["special_sigma2"] = special_divisor_sigma2(g);
    } else if (family == "gap" || family == "skewered") {
        SkewerSpec spec = gap_family_spec(k);
        if (!spec_path.empty())
            spec = skewer_from_json(Json::parse(read_all(spec_path)));
        else if (family == "skewered")
            spec = gap_family_spec(2);
        g = skewered(spec);
        if (spec_path.empty()) {
            int parts = static_cast<int>(spec.components.size());
            divisors["transition"] = gap_family_divisor(g, parts);
            divisors["special_sigma2"] = gap_family_divisor_sigma2(g, parts);
        }
    } else if (family == "random") {
        g = random_graph(random_n, random_edges, c.seed);
    } else {
        throw UsageError("unknown family '" + family + "'");
    }
    emit_graph(g, c);
    if (!sidecar_path.empty()) {
        Json side = envelope(c);
        side["family"] = family;
        side["graph"] = encode(g, Format::Sparse6);
        side["labels"] = g.labels();
        side["divisors"] = divisors;
        std::ofstream out(sidecar_path);
        if (!out)
            throw UsageError("cannot write " + sidecar_path);
        out << side.dump(2) << '\n';
    }
    return exit_ok;
}

// ---------------------------------------------------------------- scan

int run_scan(const RunConfig& c, int upto, std::uint64_t offset, bool resume) {
    ScanOptions options;
    options.jobs = c.jobs;
    options.offset = offset;
    if (!c.format.empty())
        options.format = parse_format_name(c.format);

    std::unique_ptr<std::istream> source;
    if (upto > 0) {
        if (upto > 10)
            throw UsageError("--upto-vertices supports at most 10");
        std::string lines;
        for (const auto& line : corpus_lines(upto))
            lines += line + '\n';
        source = std::make_unique<std::istringstream>(lines);
    } else {
        std::string text = read_all(c.input);
        source = std::make_unique<std::istringstream>(text);
    }

    if (resume) {
        if (c.output.empty())
            throw UsageError("--resume needs --out");
        std::ifstream prev(c.output);
        std::string line;
        std::uint64_t done = 0;
        while (std::getline(prev, line)) {
            if (line.empty())
                continue;
            try {
                done = std::max(done, Json::parse(line).get<ScanRecord>().seq + 1);
            } catch (const std::exception&) {
                break; // a truncated last line is recomputed
            }
        }
        options.offset = std::max(options.offset, done);
    }

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!c.output.empty()) {
        file.open(c.output, resume ? std::ios::app : std::ios::trunc);
        if (!file)
            throw UsageError("cannot write " + c.output);
        out = &file;
    }
    auto summary = scan(*source, options, [&](const ScanRecord& rec) {
        *out << Json(rec).dump() << '\n';
        out->flush();
    });
    Json s = envelope(c);
    s["summary"] = {{"records", summary.records},
                    {"errors", summary.errors},
                    {"counterexamples", summary.counterexamples},
                    {"bn_failures", summary.bn_failures},
                    {"subdivision_violations", summary.subdivision_violations},
                    {"factor_two_violations", summary.factor_two_violations}};
    (c.output.empty() ? std::cerr : std::cout) << s.dump(2) << '\n';
    bool invariants = summary.bn_failures == 0 && summary.subdivision_violations == 0 &&
                      summary.factor_two_violations == 0;
    return invariants ? exit_ok : exit_failed;
}

int run_verify(const RunConfig& c) {
    auto results = verify_families({c.jobs});
    bool all = true;
    Json table = Json::array();
    std::size_t width = 0;
    for (const auto& r : results)
        width = std::max(width, r.name.size());
    for (const auto& r : results) {
        all = all && r.passed;
        std::cout << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width)) << r.name
                  << "  " << std::fixed << std::setprecision(3) << r.seconds << "s  " << r.detail << '\n';
        table.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
    }
    std::cout << (all ? "all checks passed" : "some checks FAILED") << '\n';
    if (!c.output.empty()) {
        Json doc = envelope(c);
        doc["checks"] = table;
        doc["passed"] = all;
        std::ofstream(c.output) << doc.dump(2) << '\n';
    }
    return all ? exit_ok : exit_failed;
}

int default_jobs() {
    if (const char* env = std::getenv("GONALITY_JOBS")) {
        try {
            int j = std::stoi(env);
            if (j >= 1)
                return j;
        } catch (const std::exception&) {
        }
        std::cerr << "gonality: ignoring invalid GONALITY_JOBS='" << env << "'\n";
    }
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    RunConfig c;
    c.jobs = default_jobs();

    CLI::App app{"Chip-firing, divisor rank and divisorial gonality on multigraphs"};
    app.set_version_flag("--version", std::string(tool_version));
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", c.input, "Graph file, or - for standard input")->capture_default_str();
        sub->add_option("--format", c.format, "Graph format: g6, s6 or edgelist (default: auto-detect)")
            ->check(CLI::IsMember({"g6", "graph6", "s6", "sparse6", "edgelist", "el"}));
    };
    auto add_output = [&](CLI::App* sub) { sub->add_option("-o,--out", c.output, "Write output here"); };
    auto add_jobs = [&](CLI::App* sub) {
        sub->add_option("--jobs", c.jobs, "Worker threads (default: GONALITY_JOBS or 1)")->check(CLI::PositiveNumber);
    };
    app.add_option("--seed", c.seed, "Seed for generated test data");

    std::string labels_path, divisor_spec, gen_family, spec_path, sidecar_path;
    int gen_k = 1, subdivide_k = 2, random_n = 8, random_edges = 4, upto = 0;
    std::uint64_t offset = 0;
    bool resume = false, no_certificate = false, no_separator = false;
    int q_value = -1;

    auto* gen = app.add_subcommand("gen", "Generate a tricycle, skewered, gap-family or random graph");
    gen->add_option("family", gen_family, "tricycle | tricycle-simple | skewered | gap | random")
        ->required()
        ->check(CLI::IsMember({"tricycle", "tricycle-simple", "skewered", "gap", "random"}));
    gen->add_option("--k", gen_k, "Number of tricycles in the gap family")->check(CLI::PositiveNumber);
    gen->add_option("--spec", spec_path, "JSON spec for tricycle or skewered");
    gen->add_option("--sidecar", sidecar_path, "Write labels and distinguished divisors as JSON here");
    gen->add_option("--n", random_n, "Vertices of a random graph");
    gen->add_option("--edges", random_edges, "Edges beyond a spanning tree in a random graph");
    gen->add_option("--format", c.format, "Output format: s6 (default), g6 or edgelist")
        ->check(CLI::IsMember({"g6", "graph6", "s6", "sparse6", "edgelist", "el"}));
    add_output(gen);

    auto* gon = app.add_subcommand("gonality", "Exact divisorial gonality dgon_r");
    add_input(gon);
    add_output(gon);
    add_jobs(gon);
    gon->add_option("--r", c.r, "Rank")->check(CLI::PositiveNumber);
    gon->add_option("--q", q_value, "Base vertex for the reduced-divisor enumeration");
    gon->add_option("--kmax", c.kmax, "Also sweep sigma_k for k = 1..kmax")->check(CLI::PositiveNumber);
    gon->add_option("--labels", labels_path, "JSON sidecar with vertex labels");
    gon->add_flag("--no-certificate", no_certificate, "Skip the per-vertex certificate");
    gon->add_flag("--no-separator", no_separator, "Ignore labelled strong separators");

    auto* rank_cmd = app.add_subcommand("rank", "Rank of a divisor with certificates");
    add_input(rank_cmd);
    add_output(rank_cmd);
    rank_cmd->add_option("--divisor", divisor_spec, "JSON array, or @FILE")->required();

    auto* reduce_cmd = app.add_subcommand("reduce", "q-reduced form of a divisor");
    add_input(reduce_cmd);
    add_output(reduce_cmd);
    reduce_cmd->add_option("--divisor", divisor_spec, "JSON array, or @FILE")->required();
    reduce_cmd->add_option("--q", q_value, "Base vertex")->required();

    auto* burn_cmd = app.add_subcommand("burn", "Dhar's burning algorithm from q");
    add_input(burn_cmd);
    add_output(burn_cmd);
    burn_cmd->add_option("--divisor", divisor_spec, "JSON array, or @FILE")->required();
    burn_cmd->add_option("--q", q_value, "Fire source")->required();

    auto* sub_cmd = app.add_subcommand("subdivide", "k-regular subdivision sigma_k");
    add_input(sub_cmd);
    add_output(sub_cmd);
    sub_cmd->add_option("--k", subdivide_k, "Parts per edge")->check(CLI::PositiveNumber);

    auto* bn_cmd = app.add_subcommand("check-bn", "Brill-Noether bound dgon <= floor((g+3)/2)");
    add_input(bn_cmd);
    add_output(bn_cmd);
    add_jobs(bn_cmd);

    auto* sweep_cmd = app.add_subcommand("sweep", "dgon_r of sigma_k for k = 1..kmax");
    add_input(sweep_cmd);
    add_output(sweep_cmd);
    add_jobs(sweep_cmd);
    sweep_cmd->add_option("--r", c.r, "Rank")->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--kmax", c.kmax, "Largest subdivision")->check(CLI::PositiveNumber)->required();

    auto* scan_cmd = app.add_subcommand("scan", "dgon versus dgon(sigma_2) over a graph stream, as JSON lines");
    add_input(scan_cmd);
    add_output(scan_cmd);
    add_jobs(scan_cmd);
    scan_cmd->add_option("--upto-vertices", upto, "Scan every connected simple graph on 1..N vertices")
        ->check(CLI::Range(1, 10));
    scan_cmd->add_option("--offset", offset, "Skip the first N records");
    scan_cmd->add_flag("--resume", resume, "Continue after the last record already in --out");

    auto* verify_cmd = app.add_subcommand("verify-paper", "Run the built-in family checks");
    add_output(verify_cmd);
    add_jobs(verify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    CLI::App* chosen = app.get_subcommands().front();
    c.subcommand = chosen->get_name();
    if (auto* q_opt = chosen->get_option_no_throw("--q"); q_opt && q_opt->count() > 0)
        c.q = q_value;

    try {
        if (chosen == gen)
            return run_gen(c, gen_family, gen_k, spec_path, sidecar_path, random_n, random_edges);
        if (chosen == scan_cmd)
            return run_scan(c, upto, offset, resume);
        if (chosen == verify_cmd)
            return run_verify(c);

        Multigraph g = read_graph(c, labels_path);
        if (c.q && (*c.q < 0 || *c.q >= g.num_vertices()))
            throw UsageError("--q is not a vertex of the graph");
        Json doc = envelope(c);

        if (chosen == gon) {
            SearchOptions o = search_options(c);
            o.certificate = !no_certificate;
            o.use_separator = !no_separator;
            doc["result"] = dgon_r(g, c.r, o);
            if (c.kmax > 1) {
                o.certificate = false;
                doc["sweep"] = subdivision_sweep(g, c.kmax, c.r, o);
            }
        } else if (chosen == rank_cmd) {
            Divisor d = read_divisor(divisor_spec, g);
            int r = rank(g, d);
            doc["divisor"] = d;
            doc["rank"] = r;
            doc["certificates"] = rank_certificate(g, d, r);
            // a degree-(r+1) target that cannot be covered shows the rank is exact
            if (r < d.degree())
                if (auto miss = rank_certificate(g, d, r + 1).uncovered)
                    doc["obstruction"] = *miss;
        } else if (chosen == reduce_cmd) {
            Divisor d = read_divisor(divisor_spec, g);
            auto red = q_reduce(g, d, *c.q);
            doc["divisor"] = d;
            doc["q"] = *c.q;
            doc["reduced"] = red.reduced;
            doc["script"] = red.script;
            doc["unburned"] = burn(g, red.reduced, *c.q).unburned;
        } else if (chosen == burn_cmd) {
            Divisor d = read_divisor(divisor_spec, g);
            auto b = burn(g, d, *c.q);
            doc["divisor"] = d;
            doc["q"] = *c.q;
            doc["unburned"] = b.unburned;
            doc["burn_order"] = Json(b)["burn_order"];
            doc["reduced"] = b.unburned.empty();
        } else if (chosen == sub_cmd) {
            emit_graph(subdivide_uniform(g, subdivide_k), c);
            return exit_ok;
        } else if (chosen == bn_cmd) {
            auto bn = check_bn(g, search_options(c));
            doc["result"] = bn;
            emit(doc, c);
            return bn.satisfied ? exit_ok : exit_failed;
        } else if (chosen == sweep_cmd) {
            doc["result"] = subdivision_sweep(g, c.kmax, c.r, search_options(c));
        }
        emit(doc, c);
        return exit_ok;
    } catch (const UsageError& e) {
        std::cerr << "gonality: " << e.what() << '\n';
        return exit_usage;
    } catch (const Json::exception& e) {
        std::cerr << "gonality: bad JSON: " << e.what() << '\n';
        return exit_usage;
    } catch (const gonality::InternalBound& e) {
        std::cerr << "gonality: " << e.what() << '\n';
        return exit_failed;
    } catch (const gonality::Error& e) {
        std::cerr << "gonality: " << e.what() << '\n';
        return exit_usage;
    }
}
