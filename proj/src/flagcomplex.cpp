#include "graphprod/flagcomplex.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace graphprod {

namespace {

int lowest_vertex(VertexMask s) { return std::countr_zero(s) + 1; }

} // namespace

std::vector<int> mask_to_vertices(VertexMask s) {
    std::vector<int> out;
    while (s != 0) {
        int v = lowest_vertex(s);
        out.push_back(v);
        s &= s - 1;
    }
    return out;
}

VertexMask vertices_to_mask(const std::vector<int>& verts, int m) {
    VertexMask s = 0;
    for (int v : verts) {
        if (v < 1 || v > m)
            throw ValidationError("vertex " + std::to_string(v) +
                                  " out of range 1.." + std::to_string(m));
        s |= VertexMask{1} << (v - 1);
    }
    return s;
}

std::string simplex_str(VertexMask s) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int v : mask_to_vertices(s)) {
        if (!first)
            os << ',';
        os << v;
        first = false;
    }
    os << '}';
    return os.str();
}

bool simplex_lex_less(VertexMask a, VertexMask b) {
    int ca = std::popcount(a), cb = std::popcount(b);
    if (ca != cb)
        return ca < cb;
    // Equal cardinality: compare the sorted vertex sequences; stripping common
    // low vertices leaves the first differing entry as the lowest set bit.
    // (Bitmask order would differ: {2,3} must sort after {1,4}.)
    while (a != 0 && b != 0) {
        VertexMask la = a & (~a + 1), lb = b & (~b + 1);
        if (la != lb)
            return la < lb;
        a &= a - 1;
        b &= b - 1;
    }
    return false;
}

FlagComplex::FlagComplex(int m, const std::vector<std::pair<int, int>>& edges) : m_(m) {
    if (m < 0 || m > 64)
        throw ValidationError("vertex count must be between 0 and 64, got " +
                              std::to_string(m));
    verts_ = (m == 64) ? ~VertexMask{0} : ((VertexMask{1} << m) - 1);
    adj_.assign(static_cast<size_t>(m), 0);
    for (auto [u, v] : edges) {
        if (u < 1 || u > m || v < 1 || v > m)
            throw ValidationError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                  "} out of range 1.." + std::to_string(m));
        if (u == v)
            throw ValidationError("self-loop at vertex " + std::to_string(u));
        adj_[static_cast<size_t>(u - 1)] |= VertexMask{1} << (v - 1);
        adj_[static_cast<size_t>(v - 1)] |= VertexMask{1} << (u - 1);
    }
}

FlagComplex::FlagComplex(int m, std::vector<VertexMask> adj, VertexMask verts)
    : m_(m), verts_(verts), adj_(std::move(adj)) {}

int FlagComplex::vertex_count() const { return std::popcount(verts_); }

bool FlagComplex::has_vertex(int v) const {
    return v >= 1 && v <= m_ && (verts_ >> (v - 1)) & 1;
}

bool FlagComplex::has_edge(int u, int v) const {
    return has_vertex(u) && has_vertex(v) && ((adj_[static_cast<size_t>(u - 1)] >> (v - 1)) & 1);
}

VertexMask FlagComplex::neighbors(int v) const {
    if (!has_vertex(v))
        throw ValidationError("vertex " + std::to_string(v) + " not in the complex");
    return adj_[static_cast<size_t>(v - 1)];
}

std::vector<std::pair<int, int>> FlagComplex::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u : mask_to_vertices(verts_)) {
        VertexMask higher = adj_[static_cast<size_t>(u - 1)] & ~((VertexMask{1} << u) - 1);
        for (int v : mask_to_vertices(higher))
            out.emplace_back(u, v);
    }
    return out;
}

bool FlagComplex::is_simplex(VertexMask s) const {
    if ((s & ~verts_) != 0)
        return false;
    for (VertexMask rest = s; rest != 0; rest &= rest - 1) {
        int v = lowest_vertex(rest);
        VertexMask others = s & ~(VertexMask{1} << (v - 1));
        if ((others & ~adj_[static_cast<size_t>(v - 1)]) != 0)
            return false;
    }
    return true;
}

FlagComplex FlagComplex::full_subcomplex(VertexMask I) const {
    VertexMask keep = I & verts_;
    std::vector<VertexMask> adj(adj_.size());
    for (size_t i = 0; i < adj_.size(); ++i)
        adj[i] = ((keep >> i) & 1) ? (adj_[i] & keep) : 0;
    return FlagComplex(m_, std::move(adj), keep);
}

std::vector<std::vector<int>> FlagComplex::components() const {
    std::vector<std::vector<int>> out;
    VertexMask unseen = verts_;
    while (unseen != 0) {
        // Start from the smallest unseen vertex, so components come out
        // ordered by their minimum.
        VertexMask comp = unseen & (~unseen + 1);
        for (;;) {
            VertexMask grown = comp;
            for (VertexMask rest = comp; rest != 0; rest &= rest - 1)
                grown |= adj_[static_cast<size_t>(std::countr_zero(rest))];
            grown &= verts_;
            if (grown == comp)
                break;
            comp = grown;
        }
        out.push_back(mask_to_vertices(comp));
        unseen &= ~comp;
    }
    return out;
}

bool FlagComplex::is_chordal() const {
    std::vector<int> verts = mask_to_vertices(verts_);
    size_t n = verts.size();
    if (n <= 2)
        return true;

    // Lexicographic BFS. label[i] is the list of visit times of already-visited
    // neighbors of verts[i], which stays sorted descending; pick the unvisited
    // vertex with the lexicographically largest label each round.
    std::vector<std::vector<int>> label(n);
    std::vector<bool> visited(n, false);
    std::vector<int> order; // visit order, as indices into verts
    order.reserve(n);
    std::vector<size_t> index_of(65, 0);
    for (size_t i = 0; i < n; ++i)
        index_of[static_cast<size_t>(verts[i])] = i;
    for (size_t round = 0; round < n; ++round) {
        size_t best = n;
        for (size_t i = 0; i < n; ++i)
            if (!visited[i] && (best == n || label[i] > label[best]))
                best = i;
        visited[best] = true;
        order.push_back(static_cast<int>(best));
        VertexMask nb = adj_[static_cast<size_t>(verts[best] - 1)];
        for (int w : mask_to_vertices(nb)) {
            size_t j = index_of[static_cast<size_t>(w)];
            if (!visited[j])
                label[j].push_back(static_cast<int>(n - round)); // descending keys
        }
    }

    // The reverse of a lex-BFS visit order is a perfect elimination ordering
    // iff the graph is chordal. Check: for each vertex, its neighbors later in
    // the elimination order, minus the earliest of them, are all adjacent to
    // that earliest one.
    std::vector<int> elim_pos(n);
    for (size_t i = 0; i < n; ++i)
        elim_pos[static_cast<size_t>(order[i])] = static_cast<int>(n - 1 - i);
    std::vector<VertexMask> later_mask(n + 1, 0); // vertices at elim position >= p
    {
        std::vector<VertexMask> at(n, 0);
        for (size_t i = 0; i < n; ++i)
            at[static_cast<size_t>(elim_pos[i])] = VertexMask{1} << (verts[i] - 1);
        for (size_t p = n; p-- > 0;)
            later_mask[p] = later_mask[p + 1] | at[p];
    }
    for (size_t i = 0; i < n; ++i) {
        int p = elim_pos[i];
        VertexMask later_nb = adj_[static_cast<size_t>(verts[i] - 1)] &
                              later_mask[static_cast<size_t>(p) + 1];
        if (later_nb == 0)
            continue;
        size_t parent = n;
        for (int w : mask_to_vertices(later_nb)) {
            size_t j = index_of[static_cast<size_t>(w)];
            if (parent == n || elim_pos[j] < elim_pos[parent])
                parent = j;
        }
        VertexMask rest = later_nb & ~(VertexMask{1} << (verts[parent] - 1));
        if ((rest & ~adj_[static_cast<size_t>(verts[parent] - 1)]) != 0)
            return false;
    }
    return true;
}

void FlagComplex::for_each_simplex(const std::function<void(VertexMask)>& f) const {
    // Clique extension by ascending vertex keeps each cardinality's output in
    // lexicographic order, but interleaves cardinalities, so gather per size.
    std::vector<std::vector<VertexMask>> by_size(1, {VertexMask{0}});
    struct Frame {
        VertexMask clique, cands;
    };
    std::vector<Frame> stack;
    stack.push_back({0, verts_});
    while (!stack.empty()) {
        Frame fr = stack.back();
        stack.pop_back();
        if (fr.cands == 0)
            continue;
        int v = lowest_vertex(fr.cands);
        VertexMask rest = fr.cands & (fr.cands - 1);
        stack.push_back({fr.clique, rest}); // skip v (explored after: stack order)
        VertexMask grown = fr.clique | (VertexMask{1} << (v - 1));
        size_t card = static_cast<size_t>(std::popcount(grown));
        if (by_size.size() <= card)
            by_size.resize(card + 1);
        by_size[card].push_back(grown);
        stack.push_back({grown, rest & adj_[static_cast<size_t>(v - 1)]});
    }
    for (auto& bucket : by_size) {
        std::sort(bucket.begin(), bucket.end(), simplex_lex_less);
        for (VertexMask s : bucket)
            f(s);
    }
}

std::vector<VertexMask> FlagComplex::all_simplices() const {
    std::vector<VertexMask> out;
    for_each_simplex([&](VertexMask s) { out.push_back(s); });
    return out;
}

int FlagComplex::dim() const {
    int best = 0;
    for_each_simplex([&](VertexMask s) { best = std::max(best, std::popcount(s)); });
    return best - 1;
}

StarSplit FlagComplex::split_star(int v) const {
    if (!has_vertex(v))
        throw ValidationError("vertex " + std::to_string(v) + " not in the complex");
    VertexMask open_nb = adj_[static_cast<size_t>(v - 1)];
    VertexMask closed_nb = open_nb | (VertexMask{1} << (v - 1));
    VertexMask without_v = verts_ & ~(VertexMask{1} << (v - 1));
    return StarSplit{full_subcomplex(closed_nb), full_subcomplex(without_v),
                     full_subcomplex(open_nb)};
}

} // namespace graphprod
