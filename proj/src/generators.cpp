#include "gonality/generators.hpp"

#include "gonality/error.hpp"

#include <algorithm>

namespace gonality {

namespace {

Vertex require_tag(const Multigraph& g, const std::string& tag) {
    auto v = g.find_tag(tag);
    if (!v)
        throw NotATricycle("no vertex tagged '" + tag + "'");
    return *v;
}

std::string add_tag(const std::string& label, const std::string& tag) {
    return label.empty() ? tag : label + "|" + tag;
}

} // namespace

Multigraph path_graph(int n) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v)
        edges.push_back({v, v + 1});
    return Multigraph(n, std::move(edges));
}

Multigraph cycle_graph(int n) {
    if (n < 2)
        throw InvalidArgument("a cycle needs at least two vertices");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v)
        edges.push_back({v, (v + 1) % n});
    return Multigraph(n, std::move(edges));
}

Multigraph complete_graph(int n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            edges.push_back({u, v});
    return Multigraph(n, std::move(edges));
}

// ----------------------------------------------------------------- tricycles

const std::array<std::string, 6>& transition_tags() {
    static const std::array<std::string, 6> tags{"transition:1-", "transition:1+", "transition:2-",
                                                 "transition:2+", "transition:3-", "transition:3+"};
    return tags;
}

Multigraph tricycle(const TricycleSpec& spec) {
    std::array<int, 3> offset{};
    int n = 0;
    for (int i = 0; i < 3; ++i) {
        int len = spec.cycle_length[static_cast<std::size_t>(i)];
        int lo = spec.minus_position[static_cast<std::size_t>(i)];
        int hi = spec.plus_position[static_cast<std::size_t>(i)];
        if (len < 2)
            throw InvalidSpec("cycle " + std::to_string(i + 1) + " is shorter than 2");
        if (lo < 0 || hi < 0 || lo >= len || hi >= len)
            throw InvalidSpec("transition position outside cycle " + std::to_string(i + 1));
        if (lo == hi)
            throw InvalidSpec("coincident transition vertices on cycle " + std::to_string(i + 1));
        offset[static_cast<std::size_t>(i)] = n;
        n += len;
    }
    for (int p : spec.spoke_parts)
        if (p < 2)
            throw InvalidSpec("every spoke must be subdivided");

    const Vertex hub = n++;
    std::array<Vertex, 6> transition{};
    for (std::size_t i = 0; i < 3; ++i) {
        transition[2 * i] = offset[i] + spec.minus_position[i];
        transition[2 * i + 1] = offset[i] + spec.plus_position[i];
    }

    std::vector<Edge> edges;
    for (std::size_t i = 0; i < 3; ++i)
        for (int j = 0; j < spec.cycle_length[i]; ++j)
            edges.push_back({offset[i] + j, offset[i] + (j + 1) % spec.cycle_length[i]});
    // v1+ v2-, v2+ v3-, v3+ v1-
    edges.push_back({transition[1], transition[2]});
    edges.push_back({transition[3], transition[4]});
    edges.push_back({transition[5], transition[0]});
    for (Vertex t : transition)
        edges.push_back({t, hub});

    std::vector<std::string> labels(static_cast<std::size_t>(n));
    labels[static_cast<std::size_t>(hub)] = "v0";
    for (std::size_t i = 0; i < 6; ++i)
        labels[static_cast<std::size_t>(transition[i])] = transition_tags()[i];
    Multigraph base(n, std::move(edges), std::move(labels));

    std::vector<int> parts(static_cast<std::size_t>(base.num_edges()), 1);
    // spokes are the only edges at the hub; each connects a distinct transition vertex
    for (std::size_t e = 0; e < base.edges().size(); ++e) {
        auto [u, v] = base.edges()[e];
        if (v == hub) {
            auto pos = std::find(transition.begin(), transition.end(), u) - transition.begin();
            parts[e] = spec.spoke_parts[static_cast<std::size_t>(pos)];
        }
    }
    return subdivide_edges(base, parts);
}

Multigraph minimal_tricycle() {
    return tricycle(TricycleSpec{});
}

Multigraph minimal_simple_tricycle() {
    TricycleSpec spec;
    spec.cycle_length = {3, 3, 3};
    return tricycle(spec);
}

VertexSet transition_vertices(const Multigraph& g, std::string_view prefix) {
    VertexSet s(g.num_vertices());
    for (const auto& tag : transition_tags())
        s.insert(require_tag(g, std::string(prefix) + tag));
    return s;
}

Divisor transition_divisor(const Multigraph& g, std::string_view prefix) {
    Divisor d(g.num_vertices());
    for (Vertex v : transition_vertices(g, prefix).members())
        d[v] = 1;
    return d;
}

Divisor special_divisor_sigma2(const Multigraph& g, std::string_view prefix) {
    const std::string p(prefix);
    const Vertex hub = require_tag(g, p + "v0");
    std::array<Vertex, 6> t{};
    for (std::size_t i = 0; i < 6; ++i)
        t[i] = require_tag(g, p + transition_tags()[i]);

    Divisor d(g.num_vertices() + g.num_edges());
    d[hub] = 2;
    const std::array<std::pair<Vertex, Vertex>, 3> transition_edges{
        {{t[1], t[2]}, {t[3], t[4]}, {t[5], t[0]}}};
    for (auto [a, b] : transition_edges) {
        Edge e{std::min(a, b), std::max(a, b)};
        auto it = std::lower_bound(g.edges().begin(), g.edges().end(), e);
        if (it == g.edges().end() || *it != e)
            throw NotATricycle("transition edge " + std::to_string(a) + "-" + std::to_string(b) + " missing");
        if (g.multiplicity(a, b) != 1)
            throw NotATricycle("transition edge " + std::to_string(a) + "-" + std::to_string(b) +
                               " is not a single edge");
        auto index = static_cast<int>(it - g.edges().begin());
        d[subdivision_vertex(g, 2, index, 1)] = 1;
    }
    return d;
}

// ------------------------------------------------------------------ skewers

std::string component_prefix(int i) {
    return "c" + std::to_string(i) + ":";
}

Vertex skewered_vertex(const SkewerSpec& spec, int component, Vertex v) {
    if (component < 0 || component >= static_cast<int>(spec.components.size()))
        throw InvalidArgument("no such component");
    Vertex offset = 0;
    for (int i = 0; i < component; ++i)
        offset += spec.components[static_cast<std::size_t>(i)].num_vertices();
    return offset + v;
}

Multigraph skewered(const SkewerSpec& spec) {
    const Multigraph& h = spec.skewer;
    const auto k = static_cast<std::size_t>(h.num_vertices());
    if (!h.is_simple())
        throw InvalidSpec("skewer graph must be simple");
    if (spec.components.size() != k || spec.bases.size() != k)
        throw InvalidSpec("need one component and one base vertex per skewer vertex");
    if (spec.t < 1)
        throw InvalidSpec("t must be at least 1");
    const std::size_t skewer_edges = static_cast<std::size_t>(h.num_edges()) * static_cast<std::size_t>(spec.t);
    std::vector<int> parts = spec.parts;
    if (parts.empty())
        parts.assign(skewer_edges, 1);
    else if (parts.size() == 1)
        parts.assign(skewer_edges, parts.front());
    if (parts.size() != skewer_edges)
        throw InvalidSpec("expected " + std::to_string(skewer_edges) + " skewer part counts");
    if (std::any_of(parts.begin(), parts.end(), [](int p) { return p < 1; }))
        throw InvalidSpec("skewer part counts must be positive");

    std::vector<Vertex> offset(k);
    std::vector<int> owner;
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    int n = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const auto& c = spec.components[i];
        Vertex w = spec.bases[i];
        if (w < 0 || w >= c.num_vertices())
            throw InvalidSpec("base vertex outside component " + std::to_string(i));
        offset[i] = n;
        for (auto e : c.edges())
            edges.push_back({e.u + n, e.v + n});
        const auto prefix = component_prefix(static_cast<int>(i));
        for (Vertex v = 0; v < c.num_vertices(); ++v) {
            std::string label;
            for (auto tag : split_tags(c.label(v)))
                label = add_tag(label, prefix + std::string(tag));
            if (v == w)
                label = add_tag(label, prefix + "base");
            labels.push_back(std::move(label));
            owner.push_back(static_cast<int>(i));
        }
        n += c.num_vertices();
    }
    for (auto e : h.edges())
        for (int copy = 0; copy < spec.t; ++copy)
            edges.push_back({offset[static_cast<std::size_t>(e.u)] + spec.bases[static_cast<std::size_t>(e.u)],
                             offset[static_cast<std::size_t>(e.v)] + spec.bases[static_cast<std::size_t>(e.v)]});
    Multigraph joined(n, std::move(edges), std::move(labels));

    // skewer edges are exactly those joining different components, and they
    // sort in H-edge order with their copies adjacent
    std::vector<int> edge_parts;
    std::size_t next = 0;
    for (auto e : joined.edges())
        edge_parts.push_back(owner[static_cast<std::size_t>(e.u)] == owner[static_cast<std::size_t>(e.v)]
                                 ? 1
                                 : parts[next++]);
    return subdivide_edges(joined, edge_parts);
}

SkewerSpec gap_family_spec(int k) {
    if (k < 1)
        throw InvalidArgument("k must be at least 1");
    SkewerSpec spec;
    spec.skewer = path_graph(k);
    spec.t = 6 * k;
    auto tri = minimal_simple_tricycle();
    Vertex hub = *tri.find_tag("v0");
    spec.components.assign(static_cast<std::size_t>(k), tri);
    spec.bases.assign(static_cast<std::size_t>(k), hub);
    spec.parts = {2};
    return spec;
}

Multigraph gap_family(int k) {
    return skewered(gap_family_spec(k));
}

Divisor gap_family_divisor(const Multigraph& g, int k) {
    Divisor d(g.num_vertices());
    for (int i = 0; i < k; ++i)
        d += transition_divisor(g, component_prefix(i));
    return d;
}

Divisor gap_family_divisor_sigma2(const Multigraph& g, int k) {
    Divisor d(g.num_vertices() + g.num_edges());
    for (int i = 0; i < k; ++i)
        d += special_divisor_sigma2(g, component_prefix(i));
    return d;
}

} // namespace gonality
