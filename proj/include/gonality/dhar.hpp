#pragma once

#include "gonality/divisor.hpp"
#include "gonality/graph.hpp"

#include <span>
#include <vector>

namespace gonality {

struct BurnStep {
    Vertex vertex;
    int step; ///< wave in which the vertex caught fire; q burns in wave 0
};

struct BurnResult {
    /// The maximal valid subset of V \ {q}.
    VertexSet unburned;
    /// Diagnostic trace; not part of any canonical output.
    std::vector<BurnStep> burn_order;
};

/// Dhar's burning algorithm. Requires D(v) >= 0 for v != q (NegativeChips).
BurnResult burn(const Multigraph& g, const Divisor& d, Vertex q);

/// Whether D is q-reduced: effective off q with no nonempty valid set avoiding q.
bool is_reduced(const Multigraph& g, const Divisor& d, Vertex q);

struct Reduction {
    Divisor reduced;
    FiringScript script; ///< d - L * script == reduced
};

/// The unique q-reduced divisor equivalent to D, for any D.
///
/// Deficits off q are cleared layer by layer, farthest BFS layer first, by
/// firing the ball of vertices strictly closer to q. The Dhar loop then fires
/// the unburned set (as many times as it stays valid) until nothing is left.
Reduction q_reduce(const Multigraph& g, const Divisor& d, Vertex q);

/// Linear equivalence via reduction at vertex 0.
bool equivalent(const Multigraph& g, const Divisor& a, const Divisor& b);

/// Preallocated buffers for repeated burns on one graph. Not thread-safe;
/// use one per worker.
class Burner {
public:
    explicit Burner(const Multigraph& g);

    /// Runs the fire from q and returns the number of unburned vertices.
    int burn(std::span<const Chips> chips, Vertex q);
    /// Same, with the fire starting at every vertex flagged in `sources`.
    int burn_from(std::span<const Chips> chips, std::span<const char> sources);

    bool is_unburned(Vertex v) const { return !burned_[static_cast<std::size_t>(v)]; }
    /// Largest k such that firing the unburned set k times stays valid.
    Chips max_firings(std::span<const Chips> chips) const;
    /// Fires the unburned set `times` times in place and adds it to `script`
    /// when one is given.
    void fire_unburned(std::span<Chips> chips, Chips times = 1, std::vector<Chips>* script = nullptr) const;

private:
    int spread(std::span<const Chips> chips);

    const Multigraph* graph_;
    std::vector<Chips> burned_edges_;
    std::vector<char> burned_;
    std::vector<Vertex> stack_;
};

} // namespace gonality
