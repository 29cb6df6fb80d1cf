#include "gonality/divisor.hpp"

#include "gonality/error.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>

namespace gonality {

Chips checked_add(Chips a, Chips b) {
    Chips out = 0;
    if (__builtin_add_overflow(a, b, &out))
        throw ChipOverflow("chip count overflow in addition");
    return out;
}

Chips checked_sub(Chips a, Chips b) {
    Chips out = 0;
    if (__builtin_sub_overflow(a, b, &out))
        throw ChipOverflow("chip count overflow in subtraction");
    return out;
}

Chips checked_mul(Chips a, Chips b) {
    Chips out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw ChipOverflow("chip count overflow in multiplication");
    return out;
}

void require_size(const Multigraph& g, const Divisor& d) {
    if (d.size() != g.num_vertices())
        throw LengthMismatch("divisor has " + std::to_string(d.size()) + " entries, graph has " +
                             std::to_string(g.num_vertices()) + " vertices");
}

// ------------------------------------------------------------------ Divisor

Divisor Divisor::unit(int n, Vertex v, Chips chips) {
    Divisor d(n);
    d[v] = chips;
    return d;
}

Chips Divisor::degree() const {
    Chips total = 0;
    for (auto c : coeffs_)
        total = checked_add(total, c);
    return total;
}

bool Divisor::is_effective() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](Chips c) { return c >= 0; });
}

bool Divisor::dominates(const Divisor& other) const {
    if (other.size() != size())
        throw LengthMismatch("comparing divisors of different sizes");
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] < other.coeffs_[i])
            return false;
    return true;
}

std::vector<Vertex> Divisor::support() const {
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            out.push_back(static_cast<Vertex>(i));
    return out;
}

Divisor& Divisor::operator+=(const Divisor& other) {
    if (other.size() != size())
        throw LengthMismatch("adding divisors of different sizes");
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] = checked_add(coeffs_[i], other.coeffs_[i]);
    return *this;
}

Divisor& Divisor::operator-=(const Divisor& other) {
    if (other.size() != size())
        throw LengthMismatch("subtracting divisors of different sizes");
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] = checked_sub(coeffs_[i], other.coeffs_[i]);
    return *this;
}

FiringScript& FiringScript::normalize() {
    if (times.empty())
        return *this;
    Chips low = *std::min_element(times.begin(), times.end());
    for (auto& t : times)
        t = checked_sub(t, low);
    return *this;
}

bool FiringScript::is_zero() const {
    return std::all_of(times.begin(), times.end(), [](Chips t) { return t == 0; });
}

// ------------------------------------------------------------------- firing

Divisor laplacian_apply(const Multigraph& g, std::span<const Chips> x) {
    if (static_cast<int>(x.size()) != g.num_vertices())
        throw LengthMismatch("script length differs from vertex count");
    Divisor out(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        Chips value = checked_mul(g.degree(v), x[static_cast<std::size_t>(v)]);
        for (auto nb : g.neighbors(v))
            value = checked_sub(value, checked_mul(nb.multiplicity, x[static_cast<std::size_t>(nb.vertex)]));
        out[v] = value;
    }
    return out;
}

Divisor apply_script(const Multigraph& g, const Divisor& d, const FiringScript& x) {
    require_size(g, d);
    return d - laplacian_apply(g, x.times);
}

bool is_valid_set(const Multigraph& g, const Divisor& d, const VertexSet& a) {
    require_size(g, d);
    if (!d.is_effective())
        throw NotEffective("validity is defined for effective divisors");
    for (Vertex v : a.members()) {
        Chips leaving = 0;
        for (auto nb : g.neighbors(v))
            if (!a.contains(nb.vertex))
                leaving += nb.multiplicity;
        if (d[v] < leaving)
            return false;
    }
    return true;
}

Divisor fire_set_unchecked(const Multigraph& g, const Divisor& d, const VertexSet& a) {
    require_size(g, d);
    Divisor out = d;
    for (auto e : g.edges()) {
        bool in_u = a.contains(e.u), in_v = a.contains(e.v);
        if (in_u == in_v)
            continue;
        Vertex from = in_u ? e.u : e.v;
        Vertex to = in_u ? e.v : e.u;
        out[from] = checked_sub(out[from], 1);
        out[to] = checked_add(out[to], 1);
    }
    return out;
}

Divisor fire_set(const Multigraph& g, const Divisor& d, const VertexSet& a) {
    if (!is_valid_set(g, d, a))
        throw InvalidFiring("set is not valid for this divisor");
    return fire_set_unchecked(g, d, a);
}

FiringScript firing_script(const Multigraph& g, const Divisor& from, const Divisor& to) {
    using boost::multiprecision::cpp_rational;
    require_size(g, from);
    require_size(g, to);
    if (from.degree() != to.degree())
        throw DegreeMismatch("divisors have degrees " + std::to_string(from.degree()) + " and " +
                             std::to_string(to.degree()));
    const int n = g.num_vertices();
    if (n == 1)
        return FiringScript::zero(1);

    // L x = from - to with x_0 pinned to zero: solve the reduced system on
    // vertices 1..n-1, which is nonsingular for a connected graph.
    const int m = n - 1;
    std::vector<std::vector<cpp_rational>> a(static_cast<std::size_t>(m),
                                             std::vector<cpp_rational>(static_cast<std::size_t>(m) + 1));
    for (int i = 0; i < m; ++i) {
        Vertex v = i + 1;
        auto& row = a[static_cast<std::size_t>(i)];
        row[static_cast<std::size_t>(i)] = g.degree(v);
        for (auto nb : g.neighbors(v))
            if (nb.vertex != 0)
                row[static_cast<std::size_t>(nb.vertex - 1)] -= nb.multiplicity;
        row[static_cast<std::size_t>(m)] = cpp_rational(from[v]) - cpp_rational(to[v]);
    }
    for (int col = 0; col < m; ++col) {
        int pivot = col;
        while (pivot < m && a[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(col)] == 0)
            ++pivot;
        if (pivot == m)
            throw Error("reduced Laplacian is singular; graph not connected?");
        std::swap(a[static_cast<std::size_t>(col)], a[static_cast<std::size_t>(pivot)]);
        auto& prow = a[static_cast<std::size_t>(col)];
        for (int r = 0; r < m; ++r) {
            if (r == col)
                continue;
            auto& row = a[static_cast<std::size_t>(r)];
            if (row[static_cast<std::size_t>(col)] == 0)
                continue;
            cpp_rational factor = row[static_cast<std::size_t>(col)] / prow[static_cast<std::size_t>(col)];
            for (int c = col; c <= m; ++c)
                row[static_cast<std::size_t>(c)] -= factor * prow[static_cast<std::size_t>(c)];
        }
    }

    FiringScript script = FiringScript::zero(n);
    for (int i = 0; i < m; ++i) {
        cpp_rational value = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)] /
                             a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
        if (denominator(value) != 1)
            throw NotEquivalent("difference is not a principal divisor");
        auto num = numerator(value);
        if (num > std::numeric_limits<Chips>::max() || num < std::numeric_limits<Chips>::min())
            throw ChipOverflow("firing script exceeds 64 bits");
        script.times[static_cast<std::size_t>(i) + 1] = static_cast<Chips>(num);
    }
    return script.normalize();
}

std::vector<VertexSet> level_sets(const FiringScript& script) {
    FiringScript x = script;
    x.normalize();
    std::vector<VertexSet> sets;
    if (x.times.empty())
        return sets;
    const int n = static_cast<int>(x.times.size());
    Chips top = *std::max_element(x.times.begin(), x.times.end());
    for (Chips i = 1; i <= top; ++i) {
        VertexSet u(n);
        for (Vertex v = 0; v < n; ++v)
            if (x.times[static_cast<std::size_t>(v)] >= top - i + 1)
                u.insert(v);
        sets.push_back(std::move(u));
    }
    return sets;
}

} // namespace gonality
