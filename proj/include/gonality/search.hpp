#pragma once

#include "gonality/divisor.hpp"
#include "gonality/graph.hpp"
#include "gonality/rank.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gonality {

struct SearchOptions {
    /// Base vertex for the reduced-divisor enumeration; defaults to a
    /// maximum-degree vertex (lowest index on ties).
    std::optional<Vertex> base;
    int jobs = 1;
    /// Build a per-vertex certificate for the witness.
    bool certificate = true;
    /// Use a strong separator from generator labels when one is present.
    bool use_separator = true;
};

struct DegreeStats {
    Chips degree = 0;
    std::uint64_t candidates = 0; ///< reduced divisors tested for rank
    std::uint64_t pruned = 0;     ///< partial assignments cut by the prefix burn
    /// Every reduced divisor of this degree was tested and failed.
    bool exhaustive = false;
};

struct GonalityReport {
    std::string graph_id;
    int r = 1;
    Chips value = 0;
    Vertex base = 0;
    Divisor witness;
    RankCertificate certificate;
    std::vector<DegreeStats> degrees;
    std::uint64_t candidates = 0;
    std::uint64_t pruned = 0;
    /// The witness degree was not enumerated to completion (early exit).
    bool truncated = false;
    bool used_separator = false;
    double seconds = 0.0;
};

Vertex default_base_vertex(const Multigraph& g);

/// Calls `visit` for every effective q-reduced divisor of degree d, in a
/// deterministic order, until it returns false.
void enumerate_q_reduced(const Multigraph& g, Vertex q, Chips d,
                         const std::function<bool(const Divisor&)>& visit);

std::vector<Divisor> q_reduced_divisors(const Multigraph& g, Vertex q, Chips d);

/// Minimum degree of a divisor of rank >= r, with a witness.
GonalityReport dgon_r(const Multigraph& g, int r, const SearchOptions& options = {});
GonalityReport dgon(const Multigraph& g, const SearchOptions& options = {});

struct BrillNoetherCheck {
    int genus = 0;
    int bound = 0;
    Chips dgon = 0;
    bool satisfied = false;
};

/// dgon(G) <= floor((g + 3) / 2) with g the cyclomatic number.
BrillNoetherCheck check_bn(const Multigraph& g, const SearchOptions& options = {});
BrillNoetherCheck check_bn(const Multigraph& g, Chips known_dgon);

struct SweepEntry {
    int k = 0;
    Chips value = 0;
};

/// dgon_r of σ_k(G) for k = 1..kmax. `minimum` bounds dgon_r of the unit
/// metric graph from above; it is exact only if the true minimum over all k
/// is attained within the range.
struct SweepResult {
    int r = 1;
    int kmax = 1;
    std::vector<SweepEntry> entries;
    Chips minimum = 0;
};

SweepResult subdivision_sweep(const Multigraph& g, int kmax, int r, const SearchOptions& options = {});

} // namespace gonality
