#pragma once

#include "gonality/dhar.hpp"
#include "gonality/divisor.hpp"
#include "gonality/graph.hpp"

#include <optional>
#include <vector>

namespace gonality {

/// One covered target: `witness` is effective, equivalent to the certified
/// divisor D via D - L * script == witness, and witness >= target.
struct CertificateEntry {
    Divisor target;
    Divisor witness;
    FiringScript script;
};

struct RankCertificate {
    std::vector<CertificateEntry> entries;
    /// A target E with D - E not equivalent to an effective divisor, if any
    /// was found.
    std::optional<Divisor> uncovered;

    /// Every entry replays exactly against `d`.
    bool replays(const Multigraph& g, const Divisor& d) const;
};

/// Some effective divisor equivalent to D has a chip on v.
bool reaches(const Multigraph& g, const Divisor& d, Vertex v);

/// rank(D) >= 1: D reaches every vertex.
bool has_positive_rank(const Multigraph& g, const Divisor& d);

/// As has_positive_rank, also producing one certificate entry per vertex.
/// On failure `uncovered` names the first vertex that is not reached.
RankCertificate positive_rank_certificate(const Multigraph& g, const Divisor& d);

/// D - E is equivalent to an effective divisor for every effective E of
/// degree r. Memoized on the reduced form of each intermediate divisor.
bool rank_at_least(const Multigraph& g, const Divisor& d, int r);

/// Largest r with rank_at_least(D, r); -1 when D is not equivalent to an
/// effective divisor.
int rank(const Multigraph& g, const Divisor& d);

/// An effective divisor equivalent to D dominating `target`, if one exists.
std::optional<CertificateEntry> find_dominating(const Multigraph& g, const Divisor& d,
                                                const Divisor& target);

/// Certificate entries for every effective E of degree r (up to `limit`
/// entries); `uncovered` is set if some E fails.
RankCertificate rank_certificate(const Multigraph& g, const Divisor& d, int r,
                                 std::size_t limit = 100000);

/// True if D reaches every s in S, which implies rank(D) >= 1 because S is a
/// strong separator. Throws NotStrongSeparator otherwise.
bool positive_rank_via_separator(const Multigraph& g, const Divisor& d, const VertexSet& s);

/// Labels identifying a strong separator: every vertex tagged with a
/// "transition" tag (possibly under a component prefix). Empty if the tagged
/// set is empty or not a strong separator.
std::optional<VertexSet> labelled_separator(const Multigraph& g);

/// Positive-rank test for effective divisors, reusing its buffers across
/// calls. Not thread-safe; use one per worker.
class PositiveRankChecker {
public:
    /// `targets` restricts which vertices must be reached (all if empty);
    /// pass a strong separator to shorten the check.
    explicit PositiveRankChecker(const Multigraph& g, std::vector<Vertex> targets = {});

    /// `chips` must be effective. Chips move towards each target by repeated
    /// Dhar firings; fails as soon as a target's reduced form has no chip.
    bool check(std::span<const Chips> chips);

private:
    const Multigraph* graph_;
    std::vector<Vertex> order_;
    Burner burner_;
    std::vector<Chips> work_;
};

} // namespace gonality
