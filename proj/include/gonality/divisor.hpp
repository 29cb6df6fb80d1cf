#pragma once

#include "gonality/graph.hpp"

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace gonality {

using Chips = std::int64_t;

Chips checked_add(Chips a, Chips b);
Chips checked_sub(Chips a, Chips b);
Chips checked_mul(Chips a, Chips b);

/// Integer chip vector indexed by vertex. Arithmetic is overflow-checked and
/// throws ChipOverflow rather than wrapping.
class Divisor {
public:
    Divisor() = default;
    explicit Divisor(int n) : coeffs_(static_cast<std::size_t>(n), 0) {}
    explicit Divisor(std::vector<Chips> coeffs) : coeffs_(std::move(coeffs)) {}
    Divisor(std::initializer_list<Chips> coeffs) : coeffs_(coeffs) {}

    /// `chips` chips on vertex v, zero elsewhere.
    static Divisor unit(int n, Vertex v, Chips chips = 1);

    int size() const { return static_cast<int>(coeffs_.size()); }
    Chips operator[](Vertex v) const { return coeffs_[static_cast<std::size_t>(v)]; }
    Chips& operator[](Vertex v) { return coeffs_[static_cast<std::size_t>(v)]; }
    std::span<const Chips> coeffs() const { return coeffs_; }
    const std::vector<Chips>& vector() const { return coeffs_; }

    Chips degree() const;
    bool is_effective() const;
    /// Coefficient-wise D >= E.
    bool dominates(const Divisor& other) const;
    std::vector<Vertex> support() const;

    Divisor& operator+=(const Divisor& other);
    Divisor& operator-=(const Divisor& other);
    friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
    friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }

    bool operator==(const Divisor&) const = default;
    auto operator<=>(const Divisor&) const = default;

private:
    std::vector<Chips> coeffs_;
};

/// How often each vertex fires; normalized so the minimum entry is zero.
struct FiringScript {
    std::vector<Chips> times;

    static FiringScript zero(int n) { return {std::vector<Chips>(static_cast<std::size_t>(n), 0)}; }
    /// Shifts so that min(times) == 0.
    FiringScript& normalize();
    bool is_zero() const;
    bool operator==(const FiringScript&) const = default;
};

/// L_G x, where L_G is the graph Laplacian. Always of degree zero.
Divisor laplacian_apply(const Multigraph& g, std::span<const Chips> x);

/// D - L_G x: the divisor reached by firing every vertex v x[v] times.
Divisor apply_script(const Multigraph& g, const Divisor& d, const FiringScript& x);

/// Each v in A holds at least as many chips as it has edges leaving A.
/// Throws NotEffective when D has a negative coefficient.
bool is_valid_set(const Multigraph& g, const Divisor& d, const VertexSet& a);

/// D - L_G 1_A, requiring A to be valid (InvalidFiring otherwise).
Divisor fire_set(const Multigraph& g, const Divisor& d, const VertexSet& a);

/// D - L_G 1_A for arbitrary A; the result may be non-effective.
Divisor fire_set_unchecked(const Multigraph& g, const Divisor& d, const VertexSet& a);

/// Normalized integer x with D - L_G x = D'. Throws DegreeMismatch or
/// NotEquivalent (no integral solution).
FiringScript firing_script(const Multigraph& g, const Divisor& from, const Divisor& to);

/// Level sets U_1 ⊆ U_2 ⊆ ... ⊆ U_k of a normalized script, where
/// U_i = {v : x_v >= max(x) - i + 1}. Firing them in order applies x, the
/// most-fired vertices going first.
std::vector<VertexSet> level_sets(const FiringScript& x);

void require_size(const Multigraph& g, const Divisor& d);

} // namespace gonality
