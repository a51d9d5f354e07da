#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace polyprism {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph on dense vertex ids 0..order()-1.
///
/// Immutable after construction. Edges are stored canonically (first < second,
/// sorted lexicographically) and each vertex keeps a sorted neighbor list.
/// Optional per-vertex labels carry the symbolic names used in drawings
/// ("u3", "v'2", ...).
class Graph {
public:
    Graph() = default;

    /// Throws InvalidParameter on self-loops, duplicate edges, out-of-range
    /// endpoints or a label vector of the wrong length.
    Graph(std::size_t order, std::vector<Edge> edges, std::vector<std::string> labels = {});

    std::size_t order() const noexcept { return adjacency_.size(); }
    std::size_t size() const noexcept { return edges_.size(); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
    bool adjacent(Vertex a, Vertex b) const;

    bool has_labels() const noexcept { return !labels_.empty(); }
    /// Empty string when the graph carries no labels.
    std::string label(Vertex v) const;
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    bool is_connected() const;

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<std::string> labels_;
};

enum class GraphFamily { path, cycle, complete, polyomino, prism_polyomino };

/// Parses "path", "cycle", "complete", "polyomino", "prism-polyomino".
GraphFamily parse_family(const std::string& name);
std::string family_name(GraphFamily family);

/// Linear polyomino chain B_n: n unit squares in a row.
/// Vertex order u_1..u_{n+1}, v_1..v_{n+1}; edges u_i-u_{i+1}, v_i-v_{i+1}, u_i-v_i.
Graph linear_polyomino(std::size_t n);

/// Strong product g ⊠ h.
///
/// Pair (x, y) with x in g and y in h gets id y * g.order() + x, so the
/// result is h.order() consecutive blocks, each a copy of g's vertex order.
Graph strong_product(const Graph& g, const Graph& h);

/// Strong prism B_n ⊠ K_2, built directly from its edge description.
///
/// Vertex order is u_1..u_{n+1}, v_1..v_{n+1}, u'_1..u'_{n+1}, v'_1..v'_{n+1}:
/// the unprimed copy occupies the first half and x' sits at id(x) + 2n + 2.
Graph strong_prism_polyomino(std::size_t n);

/// Path P_n, cycle C_n (n >= 3) or complete graph K_n.
Graph standard_graph(GraphFamily kind, std::size_t n);

/// Any family by name; polyomino families delegate to the builders above.
Graph make_family(GraphFamily kind, std::size_t n);

/// The involution x <-> x' of strong_prism_polyomino(n).
std::vector<Vertex> prism_pairing(std::size_t n);

std::string to_dot(const Graph& g, const std::string& name = "G");
std::string to_json(const Graph& g);

}  // namespace polyprism
