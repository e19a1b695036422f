#include "reslab/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace reslab {

Graph::Builder::Builder(int vertex_count, ScalarKind kind) : n_(vertex_count), kind_(kind) {
    if (vertex_count < 1) throw std::invalid_argument("vertex count must be >= 1");
    labels_.resize(vertex_count);
}

Graph::Builder& Graph::Builder::add_edge_impl(int u, int v, double c, const Rational& cq) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    if (c <= 0.0) throw std::invalid_argument("conductance must be strictly positive");
    if (u > v) std::swap(u, v);
    edges_.emplace_back(u, v, c, cq);
    return *this;
}

Graph::Builder& Graph::Builder::add_edge(int u, int v) {
    return add_edge_impl(u, v, 1.0, Rational(1));
}

Graph::Builder& Graph::Builder::add_edge(int u, int v, double conductance) {
    if (kind_ != ScalarKind::Float)
        throw std::invalid_argument("float conductance on an exact-kind graph");
    return add_edge_impl(u, v, conductance, Rational(0));
}

Graph::Builder& Graph::Builder::add_edge(int u, int v, const Rational& conductance) {
    if (kind_ != ScalarKind::Exact)
        throw std::invalid_argument("rational conductance on a float-kind graph");
    if (sgn(conductance) <= 0)
        throw std::invalid_argument("conductance must be strictly positive");
    return add_edge_impl(u, v, conductance.get_d(), conductance);
}

Graph::Builder& Graph::Builder::set_label(int v, std::string label) {
    if (v < 0 || v >= n_) throw std::invalid_argument("label vertex out of range");
    labels_[v] = std::move(label);
    return *this;
}

Graph Graph::Builder::build() {
    Graph g;
    g.n_ = n_;
    g.kind_ = kind_;
    g.labels_ = std::move(labels_);

    std::unordered_set<long long> seen;
    seen.reserve(edges_.size() * 2);
    g.edge_u_.reserve(edges_.size());
    g.edge_v_.reserve(edges_.size());
    g.cond_.reserve(edges_.size());
    if (kind_ == ScalarKind::Exact) g.cond_exact_.reserve(edges_.size());

    for (const auto& [u, v, c, cq] : edges_) {
        long long key = static_cast<long long>(u) * n_ + v;
        if (!seen.insert(key).second)
            throw std::invalid_argument("parallel edge " + std::to_string(u) + "-" +
                                        std::to_string(v));
        g.edge_u_.push_back(u);
        g.edge_v_.push_back(v);
        g.cond_.push_back(c);
        if (kind_ == ScalarKind::Exact) {
            g.cond_exact_.push_back(cq);
            if (cq != 1) g.unit_ = false;
        } else if (c != 1.0) {
            g.unit_ = false;
        }
    }

    // CSR adjacency sorted by neighbor id.
    std::vector<int> deg(n_, 0);
    for (size_t e = 0; e < g.edge_u_.size(); ++e) {
        ++deg[g.edge_u_[e]];
        ++deg[g.edge_v_[e]];
    }
    g.adj_offset_.assign(n_ + 1, 0);
    for (int v = 0; v < n_; ++v) g.adj_offset_[v + 1] = g.adj_offset_[v] + deg[v];
    g.adj_.resize(g.adj_offset_.back());
    std::vector<int> fill(g.adj_offset_.begin(), g.adj_offset_.end() - 1);
    for (size_t e = 0; e < g.edge_u_.size(); ++e) {
        int u = g.edge_u_[e], v = g.edge_v_[e];
        g.adj_[fill[u]++] = {v, static_cast<int>(e)};
        g.adj_[fill[v]++] = {u, static_cast<int>(e)};
    }
    for (int v = 0; v < n_; ++v) {
        std::sort(g.adj_.begin() + g.adj_offset_[v], g.adj_.begin() + g.adj_offset_[v + 1],
                  [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
    }
    return g;
}

const Rational& Graph::conductance_exact(int e) const {
    if (kind_ != ScalarKind::Exact)
        throw std::invalid_argument("exact conductance requested from a float-kind graph");
    return cond_exact_[e];
}

int Graph::edge_between(int u, int v) const {
    for (const Neighbor& nb : neighbors(u))
        if (nb.vertex == v) return nb.edge;
    return -1;
}

WeightedDegree Graph::degree(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex id out of range");
    WeightedDegree d;
    if (kind_ == ScalarKind::Exact) {
        d.has_exact = true;
        for (const Neighbor& nb : neighbors(v)) d.exact += cond_exact_[nb.edge];
        d.value = d.exact.get_d();
    } else {
        for (const Neighbor& nb : neighbors(v)) d.value += cond_[nb.edge];
    }
    return d;
}

WeightedDegree degree(const Graph& g, int v) { return g.degree(v); }

Graph subdivide(const Graph& g) {
    if (!g.is_unit())
        throw std::invalid_argument("subdivide is defined for unit-conductance graphs");
    int n = g.vertex_count(), m = g.edge_count();
    Graph::Builder b(n + m, g.scalar_kind());
    for (int v = 0; v < n; ++v) b.set_label(v, "original");
    for (int e = 0; e < m; ++e) {
        auto [u, v] = g.edge_endpoints(e);
        b.add_edge(u, n + e);
        b.add_edge(n + e, v);
        b.set_label(n + e, "subdividing");
    }
    return b.build();
}

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const Graph::Neighbor& nb : g.neighbors(v)) {
            if (!seen[nb.vertex]) {
                seen[nb.vertex] = 1;
                ++count;
                stack.push_back(nb.vertex);
            }
        }
    }
    return count == n;
}

namespace {

bool looks_decimal(const std::string& tok) {
    return tok.find('.') != std::string::npos || tok.find('e') != std::string::npos ||
           tok.find('E') != std::string::npos;
}

int parse_vertex_id(const std::string& tok, int line) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0)
        throw ParseError(line, "bad vertex id '" + tok + "'");
    return value;
}

} // namespace

Graph load_edge_list(std::istream& in) {
    struct Row {
        int u, v, line;
        bool has_cond;
        std::string cond;
    };
    std::vector<Row> rows;
    bool any_decimal = false, any_rational = false;
    int max_id = -1;

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string tok;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        if (toks.size() < 2 || toks.size() > 3)
            throw ParseError(lineno, "expected 'u v [conductance]'");
        Row row{parse_vertex_id(toks[0], lineno), parse_vertex_id(toks[1], lineno), lineno,
                toks.size() == 3, toks.size() == 3 ? toks[2] : ""};
        if (row.has_cond) {
            if (looks_decimal(row.cond))
                any_decimal = true;
            else
                any_rational = true;
        }
        max_id = std::max({max_id, row.u, row.v});
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError(lineno, "no edges in input");
    if (any_decimal && any_rational)
        throw ParseError(rows.back().line,
                         "mixed decimal and rational conductances in one file");

    ScalarKind kind = any_decimal ? ScalarKind::Float : ScalarKind::Exact;
    Graph::Builder b(max_id + 1, kind);
    for (const Row& row : rows) {
        try {
            if (!row.has_cond) {
                b.add_edge(row.u, row.v);
            } else if (kind == ScalarKind::Float) {
                size_t pos = 0;
                double c = std::stod(row.cond, &pos);
                if (pos != row.cond.size()) throw std::invalid_argument("trailing junk");
                b.add_edge(row.u, row.v, c);
            } else {
                b.add_edge(row.u, row.v, parse_rational(row.cond));
            }
        } catch (const std::invalid_argument& err) {
            throw ParseError(row.line, err.what());
        }
    }
    try {
        return b.build();
    } catch (const std::invalid_argument& err) {
        throw ParseError(rows.back().line, err.what());
    }
}

Graph load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return load_edge_list(in);
}

void save_edge_list(const Graph& g, std::ostream& out) {
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge_endpoints(e);
        out << u << ' ' << v;
        if (g.scalar_kind() == ScalarKind::Exact) {
            const Rational& c = g.conductance_exact(e);
            if (c != 1) out << ' ' << to_string(c);
        } else {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", g.conductance(e));
            std::string s(buf);
            // keep the float-kind tag on round trip
            if (s.find('.') == std::string::npos && s.find('e') == std::string::npos) s += ".0";
            out << ' ' << s;
        }
        out << '\n';
    }
}

void save_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    save_edge_list(g, out);
    if (!out.flush()) throw std::runtime_error("write to '" + path + "' failed");
}

} // namespace reslab
