#ifndef RESLAB_GRAPH_HPP
#define RESLAB_GRAPH_HPP

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "reslab/rational.hpp"

namespace reslab {

/// Scalar kind of a graph's conductances, fixed at build time. The exact
/// oracle only accepts Exact graphs; mixing kinds in one graph is an error.
enum class ScalarKind { Exact, Float };

/// Weighted degree deg(v) = sum of incident conductances. Equals the
/// neighbor count on unit graphs. `exact` is only meaningful when
/// `has_exact` is set (Exact graphs).
struct WeightedDegree {
    double value = 0.0;
    Rational exact;
    bool has_exact = false;
};

/// Raised by the edge-list loader; `line` is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

/// Finite simple undirected graph with strictly positive per-edge
/// conductances. Immutable after Builder::build(); safe for concurrent
/// readers.
class Graph {
public:
    struct Neighbor {
        int vertex;
        int edge;
    };

    class Builder {
    public:
        Builder(int vertex_count, ScalarKind kind = ScalarKind::Exact);

        /// Unit conductance, valid for either scalar kind.
        Builder& add_edge(int u, int v);
        /// Float kind only.
        Builder& add_edge(int u, int v, double conductance);
        /// Exact kind only.
        Builder& add_edge(int u, int v, const Rational& conductance);
        Builder& set_label(int v, std::string label);

        Graph build();

    private:
        Builder& add_edge_impl(int u, int v, double c, const Rational& cq);
        int n_;
        ScalarKind kind_;
        std::vector<std::tuple<int, int, double, Rational>> edges_;
        std::vector<std::string> labels_;
    };

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edge_u_.size()); }
    ScalarKind scalar_kind() const { return kind_; }

    /// True when every conductance is exactly 1.
    bool is_unit() const { return unit_; }

    std::pair<int, int> edge_endpoints(int e) const { return {edge_u_[e], edge_v_[e]}; }
    double conductance(int e) const { return cond_[e]; }
    const Rational& conductance_exact(int e) const;

    /// Neighbors of v sorted by vertex id; each entry carries the edge id.
    std::span<const Neighbor> neighbors(int v) const {
        return {adj_.data() + adj_offset_[v], adj_.data() + adj_offset_[v + 1]};
    }

    /// Edge id between u and v, or -1.
    int edge_between(int u, int v) const;

    const std::string& label(int v) const { return labels_[v]; }

    WeightedDegree degree(int v) const;

private:
    friend class Builder;
    Graph() = default;

    int n_ = 0;
    ScalarKind kind_ = ScalarKind::Exact;
    bool unit_ = true;
    std::vector<int> edge_u_, edge_v_;
    std::vector<double> cond_;
    std::vector<Rational> cond_exact_;
    std::vector<Neighbor> adj_;
    std::vector<int> adj_offset_;
    std::vector<std::string> labels_;
};

/// Weighted degree of v. Throws on an invalid vertex id.
WeightedDegree degree(const Graph& g, int v);

/// Places a new vertex in the middle of every edge: n+m vertices, 2m unit
/// edges. Original ids are preserved and labeled "original"; the vertex
/// subdividing edge e gets id n+e and label "subdividing". Requires a unit
/// graph.
Graph subdivide(const Graph& g);

bool is_connected(const Graph& g);

/// Text format: one edge per line, `u v [conductance]`, with `#` comments
/// and blank lines ignored. Conductance is a decimal (Float graph) or `p/q`
/// rational / bare integer (Exact graph); one file must not mix the two
/// notations. Vertex count is max id + 1.
Graph load_edge_list(std::istream& in);
Graph load_edge_list_file(const std::string& path);
void save_edge_list(const Graph& g, std::ostream& out);
void save_edge_list_file(const Graph& g, const std::string& path);

} // namespace reslab

#endif
