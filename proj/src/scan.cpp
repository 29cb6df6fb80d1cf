#include "gonality/scan.hpp"

#include "gonality/corpus.hpp"
#include "gonality/formats.hpp"

#include <atomic>
#include <chrono>
#include <istream>
#include <thread>

namespace gonality {

ScanRecord scan_graph(std::string_view line, std::uint64_t seq, const ScanOptions& options) {
    auto start = std::chrono::steady_clock::now();
    ScanRecord rec;
    rec.seq = seq;
    rec.graph = std::string(line);
    try {
        Multigraph g = parse(line, options.format.value_or(detect_format(line)));
        rec.n = g.num_vertices();
        rec.m = g.num_edges();
        SearchOptions search;
        search.certificate = false;
        search.use_separator = options.use_separator;
        rec.dgon = dgon(g, search).value;
        rec.dgon_sigma2 = dgon(subdivide_uniform(g, 2), search).value;
        rec.counterexample = rec.dgon_sigma2 < rec.dgon;
        rec.bn = check_bn(g, rec.dgon);
        rec.subdivision_bound_ok = rec.dgon_sigma2 <= rec.dgon;
        rec.factor_two_ok = rec.dgon <= 2 * rec.dgon_sigma2 - 1;
    } catch (const std::exception& e) {
        rec = ScanRecord{};
        rec.seq = seq;
        rec.graph = std::string(line);
        rec.error = e.what();
    }
    rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

ScanSummary scan(std::istream& in, const ScanOptions& options, const std::function<void(const ScanRecord&)>& sink) {
    ScanSummary summary;
    const int jobs = std::max(1, options.jobs);
    const std::size_t batch_size = static_cast<std::size_t>(jobs) * 16;
    std::uint64_t seq = 0;
    std::vector<std::pair<std::uint64_t, std::string>> batch;
    std::vector<ScanRecord> results;

    auto flush = [&] {
        results.assign(batch.size(), ScanRecord{});
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next++; i < batch.size(); i = next++)
                results[i] = scan_graph(batch[i].second, batch[i].first, options);
        };
        if (jobs == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (int j = 0; j < jobs; ++j)
                pool.emplace_back(worker);
            for (auto& t : pool)
                t.join();
        }
        for (const auto& rec : results) {
            ++summary.records;
            if (rec.error) {
                ++summary.errors;
            } else {
                summary.counterexamples += rec.counterexample;
                summary.bn_failures += !rec.bn.satisfied;
                summary.subdivision_violations += !rec.subdivision_bound_ok;
                summary.factor_two_violations += !rec.factor_two_ok;
            }
            sink(rec);
        }
        batch.clear();
    };

    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos)
            continue;
        if (seq >= options.offset)
            batch.emplace_back(seq, line);
        ++seq;
        if (batch.size() == batch_size)
            flush();
    }
    if (!batch.empty())
        flush();
    return summary;
}

std::vector<std::string> corpus_lines(int max_vertices) {
    std::vector<std::string> out;
    for (int n = 1; n <= max_vertices; ++n)
        for (const auto& g : connected_graphs(n))
            out.push_back(encode(g, Format::Graph6));
    return out;
}

} // namespace gonality
