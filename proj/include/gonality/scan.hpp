#pragma once

#include "gonality/formats.hpp"
#include "gonality/search.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gonality {

struct ScanRecord {
    std::uint64_t seq = 0;   ///< position among the non-blank input lines
    std::string graph;       ///< the input line as given
    int n = 0;
    int m = 0;
    Chips dgon = 0;
    Chips dgon_sigma2 = 0;
    bool counterexample = false;       ///< dgon_sigma2 < dgon
    BrillNoetherCheck bn;
    bool subdivision_bound_ok = true;  ///< dgon_sigma2 <= dgon
    bool factor_two_ok = true;         ///< dgon <= 2 * dgon_sigma2 - 1
    std::optional<std::string> error;  ///< parse or search failure; other fields unset
    double seconds = 0.0;
};

struct ScanOptions {
    int jobs = 1;
    /// Records with seq < offset are skipped (resume support).
    std::uint64_t offset = 0;
    std::optional<Format> format; ///< auto-detected per line when unset
    bool use_separator = true;
};

struct ScanSummary {
    std::uint64_t records = 0;
    std::uint64_t errors = 0;
    std::uint64_t counterexamples = 0;
    std::uint64_t bn_failures = 0;
    std::uint64_t subdivision_violations = 0;
    std::uint64_t factor_two_violations = 0;

    /// No errors and every per-record invariant held.
    bool clean() const {
        return errors == 0 && bn_failures == 0 && subdivision_violations == 0 && factor_two_violations == 0;
    }
};

ScanRecord scan_graph(std::string_view line, std::uint64_t seq, const ScanOptions& options = {});

/// Reads one encoded graph per line (blank lines ignored) and hands records
/// to `sink` in input order. Graphs are processed `jobs` at a time.
ScanSummary scan(std::istream& in, const ScanOptions& options, const std::function<void(const ScanRecord&)>& sink);

/// graph6 lines for every connected simple graph on 1..n vertices.
std::vector<std::string> corpus_lines(int max_vertices);

} // namespace gonality
