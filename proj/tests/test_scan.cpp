#include "gonality/corpus.hpp"
#include "gonality/formats.hpp"
#include "gonality/generators.hpp"
#include "gonality/json.hpp"
#include "gonality/scan.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

using namespace gonality;

namespace {

bool connected_code(int n, std::uint64_t code) {
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v)
            v = parent[static_cast<std::size_t>(v)];
        return v;
    };
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (code >> pair_bit(n, i, j) & 1)
                parent[static_cast<std::size_t>(find(i))] = find(j);
    int roots = 0;
    for (int v = 0; v < n; ++v)
        roots += find(v) == v;
    return roots == 1;
}

// Canonical form by trying every permutation.
std::uint64_t canonical_by_permutations(int n, std::uint64_t code) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t c = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) {
                int a = std::min(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
                int b = std::max(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
                if (code >> pair_bit(n, a, b) & 1)
                    c |= std::uint64_t{1} << pair_bit(n, i, j);
            }
        best = std::min(best, c);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace

TEST_CASE("graph class counts") {
    // numbers of graphs and of connected graphs on n unlabelled vertices
    const std::vector<std::size_t> all{1, 2, 4, 11, 34, 156, 1044};
    const std::vector<std::size_t> connected{1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) {
        CAPTURE(n);
        CHECK(simple_graph_classes(n).size() == all[static_cast<std::size_t>(n - 1)]);
        CHECK(connected_graphs(n).size() == connected[static_cast<std::size_t>(n - 1)]);
    }
}

TEST_CASE("canonical form separates exactly the isomorphism classes") {
    for (int n = 1; n <= 6; ++n) {
        const int bits = n * (n - 1) / 2;
        // same class under both forms, and different classes stay apart
        std::map<std::uint64_t, std::uint64_t> forward, backward;
        std::set<std::uint64_t> brute;
        bool consistent = true;
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
            auto c = canonical_by_permutations(n, code);
            auto k = canonical_code(n, code);
            consistent = consistent && forward.emplace(c, k).first->second == k &&
                         backward.emplace(k, c).first->second == c;
            brute.insert(c);
        }
        CHECK(consistent);
        CHECK(brute.size() == simple_graph_classes(n).size());
        std::size_t conn = 0;
        for (auto c : brute)
            conn += connected_code(n, c);
        CHECK(conn == connected_graphs(n).size());
    }
}

TEST_CASE("canonical form is invariant under relabelling (n = 8)") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 8;
        std::uint64_t code = rng() & ((std::uint64_t{1} << 28) - 1);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::uint64_t relabelled = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if (code >> pair_bit(n, i, j) & 1) {
                    int a = std::min(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
                    int b = std::max(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
                    relabelled |= std::uint64_t{1} << pair_bit(n, a, b);
                }
        CHECK(canonical_code(n, code) == canonical_code(n, relabelled));
    }
}

TEST_CASE("scan records") {
    std::istringstream in("Bw\n\n:Ab\nnot a graph\nC?\n");
    std::vector<ScanRecord> out;
    auto summary = scan(in, {}, [&](const ScanRecord& r) { out.push_back(r); });
    REQUIRE(out.size() == 4);
    CHECK(summary.records == 4);
    CHECK(summary.errors == 2);
    CHECK(out[0].seq == 0);
    CHECK(out[0].dgon == 2);
    CHECK(out[0].dgon_sigma2 == 2);
    CHECK_FALSE(out[0].counterexample);
    CHECK(out[1].graph == ":Ab");
    CHECK(out[1].dgon == 2);
    CHECK(out[2].error);
    CHECK(out[3].error); // disconnected
    CHECK_FALSE(summary.clean());
}

TEST_CASE("scan of an empty stream") {
    std::istringstream in("");
    std::size_t count = 0;
    auto summary = scan(in, {}, [&](const ScanRecord&) { ++count; });
    CHECK(count == 0);
    CHECK(summary.records == 0);
    CHECK(summary.clean());
}

TEST_CASE("scan flags the minimal simple tricycle") {
    std::istringstream in(encode(path_graph(3), Format::Graph6) + "\n" +
                          encode(minimal_simple_tricycle(), Format::Graph6) + "\n");
    std::vector<ScanRecord> out;
    auto summary = scan(in, {}, [&](const ScanRecord& r) { out.push_back(r); });
    REQUIRE(out.size() == 2);
    CHECK_FALSE(out[0].counterexample);
    CHECK(out[1].counterexample);
    CHECK(out[1].dgon == 6);
    CHECK(out[1].dgon_sigma2 == 5);
    CHECK(out[1].factor_two_ok);
    CHECK(summary.counterexamples == 1);
    CHECK(summary.clean());
}

TEST_CASE("scan offset and parallel ordering") {
    std::string lines;
    for (const auto& line : corpus_lines(5))
        lines += line + "\n";
    std::istringstream serial_in(lines), parallel_in(lines), offset_in(lines);
    std::vector<std::string> serial, parallel, offset;
    scan(serial_in, {}, [&](const ScanRecord& r) { serial.push_back(Json(r).dump()); });
    ScanOptions p;
    p.jobs = 4;
    scan(parallel_in, p, [&](const ScanRecord& r) {
        auto j = Json(r);
        j.erase("seconds");
        parallel.push_back(j.dump());
    });
    ScanOptions o;
    o.offset = 10;
    scan(offset_in, o, [&](const ScanRecord& r) { offset.push_back(std::to_string(r.seq)); });
    REQUIRE(serial.size() == 31);
    REQUIRE(parallel.size() == 31);
    for (std::size_t i = 0; i < serial.size(); ++i) {
        auto j = Json::parse(serial[i]);
        j.erase("seconds");
        CHECK(j.dump() == parallel[i]);
    }
    REQUIRE(offset.size() == 21);
    CHECK(offset.front() == "10");
}

TEST_CASE("scan record JSON round trip") {
    auto rec = scan_graph(encode(cycle_graph(5), Format::Graph6), 7);
    Json j = rec;
    CHECK(j["schema"] == 1);
    auto back = j.get<ScanRecord>();
    CHECK(back.seq == 7);
    CHECK(back.dgon == rec.dgon);
    CHECK(back.bn.bound == rec.bn.bound);
    CHECK(back.counterexample == rec.counterexample);
    auto bad = scan_graph("%%", 3);
    Json jb = bad;
    CHECK(jb.contains("error"));
    CHECK(jb.get<ScanRecord>().error);
}
