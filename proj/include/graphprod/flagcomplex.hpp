// Flag simplicial complexes determined by a graph on vertices 1..m.
//
// A simplex is any clique of the edge graph, including the empty set and all
// singletons. A full subcomplex K_I keeps the original vertex labels, so a
// FlagComplex carries an ambient vertex count plus the subset of live
// vertices. Simplices are enumerated lazily (clique extension), never stored.

#ifndef GRAPHPROD_FLAGCOMPLEX_HPP
#define GRAPHPROD_FLAGCOMPLEX_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "graphprod/errors.hpp"

namespace graphprod {

// Bit v-1 represents vertex v; supports up to 64 ambient vertices.
using VertexMask = uint64_t;

std::vector<int> mask_to_vertices(VertexMask s);
VertexMask vertices_to_mask(const std::vector<int>& verts, int m);
std::string simplex_str(VertexMask s);

// Lexicographic simplex order: the empty simplex is minimal; then smaller
// cardinality first; ties broken by the first differing vertex.
bool simplex_lex_less(VertexMask a, VertexMask b);

struct StarSplit;

class FlagComplex {
  public:
    // The flag complex on all of 1..m with the given edges.
    FlagComplex(int m, const std::vector<std::pair<int, int>>& edges);

    int ambient_vertex_count() const { return m_; }
    VertexMask vertex_mask() const { return verts_; }
    std::vector<int> vertices() const { return mask_to_vertices(verts_); }
    int vertex_count() const;

    bool has_vertex(int v) const;
    bool has_edge(int u, int v) const;
    // Neighbors of v among the live vertices (open neighborhood).
    VertexMask neighbors(int v) const;
    std::vector<std::pair<int, int>> edges() const;

    // True iff s is a clique contained in the live vertex set.
    bool is_simplex(VertexMask s) const;

    // Full subcomplex on I (intersected with the live vertices).
    FlagComplex full_subcomplex(VertexMask I) const;

    // Connected components of the 1-skeleton, each sorted ascending, ordered
    // by smallest vertex. The component minimum is front() of each.
    std::vector<std::vector<int>> components() const;

    // True iff every cycle of length >= 4 in the 1-skeleton has a chord.
    // Lexicographic BFS followed by a perfect-elimination-ordering check.
    bool is_chordal() const;

    // Calls f on every simplex (including the empty one), by increasing
    // cardinality, lexicographically within each cardinality.
    void for_each_simplex(const std::function<void(VertexMask)>& f) const;

    // All simplices in the lexicographic order above. Materializes the list;
    // intended for desk-scale complexes only.
    std::vector<VertexMask> all_simplices() const;

    // Dimension of the complex: size of the largest clique minus one
    // (-1 for a complex with no vertices).
    int dim() const;

    // (Star of v, complement of v, their intersection): the full subcomplexes
    // on N[v], V minus {v}, and N(v). Their simplex sets cover this complex.
    StarSplit split_star(int v) const;

  private:
    FlagComplex(int m, std::vector<VertexMask> adj, VertexMask verts);

    int m_;
    VertexMask verts_;
    std::vector<VertexMask> adj_; // indexed by vertex-1, restricted to verts_
};

struct StarSplit {
    FlagComplex star, complement, intersection;
};

} // namespace graphprod

#endif
