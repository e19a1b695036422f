#ifndef RESLAB_LATTICE_HPP
#define RESLAB_LATTICE_HPP

#include <string>
#include <unordered_map>
#include <vector>

#include "reslab/graph.hpp"

namespace reslab {

enum class LatticeFamily { Square, Triangular, Hexagonal, TruncatedSquare };

/// Interior (infinite-lattice) degree k: 4, 6, 3, 3.
int interior_degree(LatticeFamily family);
/// Sites per unit cell: 1, 1, 2, 4.
int sites_per_cell(LatticeFamily family);
std::string family_name(LatticeFamily family);
LatticeFamily family_from_name(const std::string& name);

/// Finite piece of the infinite lattice: either the graph-distance ball of
/// radius m around the origin, or an L x L torus of unit cells (L >= 3).
struct BoundaryMode {
    enum class Kind { Ball, Torus };
    Kind kind;
    int size;

    static BoundaryMode ball(int m);
    static BoundaryMode torus(int l);
};

/// Integer cell coordinates plus sublattice index. Single-site families use
/// sub = 0 throughout.
struct SiteCoord {
    int x = 0, y = 0, sub = 0;
    bool operator==(const SiteCoord&) const = default;
};

/// Displacement from the origin site (which always has sub = 0) to a target
/// site, the key under which lattice pairs are grouped and extrapolated.
struct Displacement {
    int dx = 0, dy = 0, sub = 0;
    bool operator==(const Displacement&) const = default;
    auto operator<=>(const Displacement&) const = default;
};

struct LatticeGraph {
    Graph graph;
    int origin = 0;
    std::vector<SiteCoord> coords;
    LatticeFamily family;
    BoundaryMode mode;

    /// Vertex at the given coordinate, or -1 when absent. Torus coordinates
    /// wrap modulo L.
    int vertex_at(SiteCoord c) const;
    int vertex_at_displacement(const Displacement& d) const;

    struct CoordHash {
        size_t operator()(const SiteCoord& c) const;
    };
    std::unordered_map<SiteCoord, int, CoordHash> index;
};

/// Pair of lattice vertices named by a family-specific descriptor:
///   square            "dx,dy"                      e.g. "1,0", "2,1", "3,0"
///   triangular        "d1" | "turn60" | "straight2" | "dx,dy"
///   hexagonal         "d1" | "d2" | "dx,dy,sub"
///   truncated-square  "square-octagon" | "octagon-octagon"
///   subdivided        "d1" | "d2a" | "d2b" | "d3"   (set subdivided = true)
struct PairClass {
    LatticeFamily family;
    std::string descriptor;
    bool subdivided = false;
};

/// Canonical displacement for a non-subdivided pair class.
Displacement pair_class_displacement(const PairClass& pc);

LatticeGraph build_lattice(LatticeFamily family, BoundaryMode mode);

/// Origin paired with the vertex at the class displacement. Throws when the
/// displacement is not contained in the graph.
std::pair<int, int> resolve_pair(const LatticeGraph& lg, const PairClass& pc);

/// Resolves a subdivided pair class on subdivide(base.graph). `base` must be
/// large enough that the origin's distance-2 neighborhood is interior.
std::pair<int, int> resolve_subdivided_pair(const LatticeGraph& base, const std::string& descriptor);

/// Fraction of vertices with a neighbor outside the ball, i.e. degree < k.
/// Ball mode only.
double boundary_fraction(const LatticeGraph& lg);

/// Nested balls at strictly increasing radii.
std::vector<LatticeGraph> swelling_sequence(LatticeFamily family, const std::vector<int>& radii);

/// Neighbor sites of c in the infinite lattice, in a fixed generation order.
std::vector<SiteCoord> lattice_neighbors(LatticeFamily family, const SiteCoord& c);

} // namespace reslab

#endif
