#include "polyprism/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include <json.hpp>

#include "polyprism/error.hpp"

namespace polyprism {

Graph::Graph(std::size_t order, std::vector<Edge> edges, std::vector<std::string> labels)
    : adjacency_(order), labels_(std::move(labels)) {
    if (!labels_.empty() && labels_.size() != order) {
        throw InvalidParameter("label count " + std::to_string(labels_.size()) +
                               " does not match order " + std::to_string(order));
    }
    for (auto& [a, b] : edges) {
        if (a >= order || b >= order) {
            throw InvalidParameter("edge endpoint out of range");
        }
        if (a == b) {
            throw InvalidParameter("self-loop at vertex " + std::to_string(a));
        }
        if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
        throw InvalidParameter("duplicate edge " + std::to_string(dup->first) + "-" +
                               std::to_string(dup->second));
    }
    for (const auto& [a, b] : edges) {
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
    edges_ = std::move(edges);
}

bool Graph::adjacent(Vertex a, Vertex b) const {
    const auto& nbrs = adjacency_.at(a);
    return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::string Graph::label(Vertex v) const {
    if (labels_.empty()) return {};
    return labels_.at(v);
}

bool Graph::is_connected() const {
    if (order() == 0) return true;
    std::vector<bool> seen(order(), false);
    std::deque<Vertex> queue{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w : adjacency_[v]) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                queue.push_back(w);
            }
        }
    }
    return reached == order();
}

GraphFamily parse_family(const std::string& name) {
    if (name == "path") return GraphFamily::path;
    if (name == "cycle") return GraphFamily::cycle;
    if (name == "complete") return GraphFamily::complete;
    if (name == "polyomino") return GraphFamily::polyomino;
    if (name == "prism-polyomino") return GraphFamily::prism_polyomino;
    throw InvalidParameter("unknown graph family '" + name + "'");
}

std::string family_name(GraphFamily family) {
    switch (family) {
        case GraphFamily::path: return "path";
        case GraphFamily::cycle: return "cycle";
        case GraphFamily::complete: return "complete";
        case GraphFamily::polyomino: return "polyomino";
        case GraphFamily::prism_polyomino: return "prism-polyomino";
    }
    return "unknown";
}

Graph linear_polyomino(std::size_t n) {
    if (n == 0) throw InvalidParameter("linear polyomino chain needs n >= 1 squares");
    const std::size_t rung = n + 1;
    std::vector<Edge> edges;
    edges.reserve(3 * n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        edges.emplace_back(i, i + 1);
        edges.emplace_back(rung + i, rung + i + 1);
    }
    for (std::size_t i = 0; i < rung; ++i) edges.emplace_back(i, rung + i);

    std::vector<std::string> labels;
    labels.reserve(2 * rung);
    for (std::size_t i = 1; i <= rung; ++i) labels.push_back("u" + std::to_string(i));
    for (std::size_t i = 1; i <= rung; ++i) labels.push_back("v" + std::to_string(i));
    return Graph(2 * rung, std::move(edges), std::move(labels));
}

Graph strong_product(const Graph& g, const Graph& h) {
    if (g.order() == 0 || h.order() == 0) {
        throw InvalidParameter("strong product of an empty graph");
    }
    const std::size_t block = g.order();
    auto id = [block](Vertex x, Vertex y) { return y * block + x; };

    std::vector<Edge> edges;
    // x1 == x2, y1 ~ y2
    for (const auto& [y1, y2] : h.edges())
        for (Vertex x = 0; x < block; ++x) edges.emplace_back(id(x, y1), id(x, y2));
    // x1 ~ x2, y1 == y2
    for (const auto& [x1, x2] : g.edges())
        for (Vertex y = 0; y < h.order(); ++y) edges.emplace_back(id(x1, y), id(x2, y));
    // x1 ~ x2, y1 ~ y2: both diagonals of each edge square
    for (const auto& [x1, x2] : g.edges()) {
        for (const auto& [y1, y2] : h.edges()) {
            edges.emplace_back(id(x1, y1), id(x2, y2));
            edges.emplace_back(id(x1, y2), id(x2, y1));
        }
    }

    std::vector<std::string> labels;
    if (g.has_labels() && h.has_labels()) {
        labels.reserve(block * h.order());
        for (Vertex y = 0; y < h.order(); ++y)
            for (Vertex x = 0; x < block; ++x)
                labels.push_back("(" + g.label(x) + "," + h.label(y) + ")");
    }
    return Graph(block * h.order(), std::move(edges), std::move(labels));
}

Graph strong_prism_polyomino(std::size_t n) {
    if (n == 0) throw InvalidParameter("strong prism needs n >= 1 squares");
    const Graph base = linear_polyomino(n);
    const std::size_t half = base.order();

    std::vector<Edge> edges;
    edges.reserve(14 * n + 6);
    for (Vertex x = 0; x < half; ++x) edges.emplace_back(x, x + half);
    for (const auto& [a, b] : base.edges()) {
        edges.emplace_back(a, b);
        edges.emplace_back(a + half, b + half);
        edges.emplace_back(a, b + half);
        edges.emplace_back(a + half, b);
    }

    std::vector<std::string> labels = base.labels();
    for (Vertex x = 0; x < half; ++x) {
        const std::string& plain = base.labels()[x];
        labels.push_back(plain.substr(0, 1) + "'" + plain.substr(1));
    }
    return Graph(2 * half, std::move(edges), std::move(labels));
}

Graph standard_graph(GraphFamily kind, std::size_t n) {
    if (n == 0) throw InvalidParameter("graph order must be >= 1");
    std::vector<Edge> edges;
    switch (kind) {
        case GraphFamily::path:
            for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            break;
        case GraphFamily::cycle:
            if (n < 3) {
                throw InvalidParameter("cycle requires n >= 3, got " + std::to_string(n));
            }
            for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
            break;
        case GraphFamily::complete:
            for (Vertex i = 0; i < n; ++i)
                for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
            break;
        default:
            throw InvalidParameter("standard_graph handles path, cycle and complete only");
    }
    return Graph(n, std::move(edges));
}

Graph make_family(GraphFamily kind, std::size_t n) {
    switch (kind) {
        case GraphFamily::polyomino: return linear_polyomino(n);
        case GraphFamily::prism_polyomino: return strong_prism_polyomino(n);
        default: return standard_graph(kind, n);
    }
}

std::vector<Vertex> prism_pairing(std::size_t n) {
    const std::size_t half = 2 * n + 2;
    std::vector<Vertex> pairing(2 * half);
    for (Vertex x = 0; x < half; ++x) {
        pairing[x] = x + half;
        pairing[x + half] = x;
    }
    return pairing;
}

std::string to_dot(const Graph& g, const std::string& name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (Vertex v = 0; v < g.order(); ++v) {
        out << "  " << v;
        if (g.has_labels()) out << " [label=\"" << g.label(v) << "\"]";
        out << ";\n";
    }
    for (const auto& [a, b] : g.edges()) out << "  " << a << " -- " << b << ";\n";
    out << "}\n";
    return out.str();
}

std::string to_json(const Graph& g) {
    nlohmann::ordered_json doc;
    doc["n_vertices"] = g.order();
    doc["n_edges"] = g.size();
    auto nodes = nlohmann::ordered_json::array();
    for (Vertex v = 0; v < g.order(); ++v) {
        nlohmann::ordered_json node;
        node["id"] = v;
        node["label"] = g.has_labels() ? g.label(v) : std::to_string(v);
        node["degree"] = g.degree(v);
        nodes.push_back(std::move(node));
    }
    auto edges = nlohmann::ordered_json::array();
    for (const auto& [a, b] : g.edges()) edges.push_back({{"source", a}, {"target", b}});
    doc["nodes"] = std::move(nodes);
    doc["edges"] = std::move(edges);
    return doc.dump(2) + "\n";
}

}  // namespace polyprism
