#include "graphprod/torform.hpp"

#include <bit>
#include <optional>
#include <sstream>

#include "graphprod/barcomplex.hpp"
#include "graphprod/errors.hpp"
#include "graphprod/homology.hpp"

namespace graphprod {

namespace {

void check_algebras(const FlagComplex& K, const std::vector<GradedAlgebraSpec>& algebras) {
    if (static_cast<int>(algebras.size()) != K.ambient_vertex_count())
        throw ValidationError("need exactly one algebra per ambient vertex");
}

void check_window(int s_max, int n_max) {
    if (s_max < 0 || n_max < 0)
        throw ValidationError("table window limits must be nonnegative");
}

// All vertex subsets of K in ascending mask order, the empty set first.
std::vector<VertexMask> vertex_subsets(const FlagComplex& K) {
    VertexMask full = K.vertex_mask();
    if (std::popcount(full) > 20)
        throw ValidationError("subset scan limited to 20 vertices");
    std::vector<VertexMask> out;
    VertexMask I = 0;
    while (true) {
        out.push_back(I);
        if (I == full)
            break;
        I = (I - full) & full;
    }
    return out;
}

// Reduced homology of the full subcomplex K_I, or nullopt when it is known to
// vanish without building any matrix: a simplex is a cone, hence acyclic, and
// a connected flag complex on at most 3 vertices is a tree or a filled
// triangle, hence contractible.  Connectivity is checked before homology.
std::optional<HomologyProfile> subset_profile(const FlagComplex& K, VertexMask I,
                                              const Field& field) {
    if (I == 0 || K.is_simplex(I))
        return std::nullopt;
    FlagComplex sub = K.full_subcomplex(I);
    if (sub.components().size() == 1 && std::popcount(I) <= 3)
        return std::nullopt;
    return reduced_homology(sub, field);
}

// prod_{i in I} P(J(A_i); t) truncated at degree N, where P(J(A); t) is the
// Hilbert series of the positive-degree part of A.
TruncatedSeries ideal_series(const std::vector<GradedAlgebraSpec>& algebras, VertexMask I,
                             int N) {
    TruncatedSeries prod = TruncatedSeries::unit(N);
    for (int v : mask_to_vertices(I))
        prod = prod * (hilbert_series(algebras[static_cast<size_t>(v) - 1], N) -
                       TruncatedSeries::unit(N));
    return prod;
}

// Series coefficients produced by dimension counting are integers; extract
// one as a count.
long long to_count(const Rational& q) {
    if (boost::multiprecision::denominator(q) != 1)
        throw InternalCheckError("series coefficient expected to be an integer");
    return boost::multiprecision::numerator(q).convert_to<long long>();
}

// Minimal positive generator degree over the vertex algebras; n_max + 1 when
// no vertex has a positive-degree element (so every table row above s = 0 is
// empty and the bound s * d_min <= n excludes all of them).
int min_positive_degree(const FlagComplex& K, const std::vector<GradedAlgebraSpec>& algebras,
                        int n_max) {
    int d = n_max + 1;
    for (int v : K.vertices()) {
        const GradedAlgebraSpec& a = algebras[static_cast<size_t>(v) - 1];
        if (a.basis_size() > 1)
            d = std::min(d, a.degree(1));
    }
    return d;
}

std::string letter_str(const std::vector<GradedAlgebraSpec>& algebras, int vertex, int elem) {
    return "(" + std::to_string(vertex) + ":" +
           algebras[static_cast<size_t>(vertex) - 1].elem_name(elem) + ")";
}

} // namespace

TorTable tor_Aprime_closed(const FlagComplex& K, const std::vector<GradedAlgebraSpec>& algebras,
                           int s_max, int n_max, const Field& field) {
    check_algebras(K, algebras);
    check_window(s_max, n_max);
    TorTable table;
    table.s_max = s_max;
    table.n_max = n_max;
    table.d_min = min_positive_degree(K, algebras, n_max);
    table.truncated = false;
    table.provenance = "closed-form";
    std::map<std::pair<int, int>, long long> acc;
    for (VertexMask I : vertex_subsets(K)) {
        std::optional<HomologyProfile> prof = subset_profile(K, I, field);
        if (!prof || prof->dims.empty())
            continue;
        TruncatedSeries c = ideal_series(algebras, I, n_max);
        for (const auto& [d, h] : prof->dims) {
            int s = d + 1;
            if (s < 1 || s > s_max)
                continue;
            for (int n = 1; n <= n_max; ++n) {
                long long cn = to_count(c.coeff(n));
                if (cn != 0)
                    acc[{s, n}] += static_cast<long long>(h) * cn;
            }
        }
    }
    for (const auto& [sn, v] : acc)
        table.set(sn.first, sn.second, static_cast<int>(v));
    return table;
}

TorTable tor_AK_closed(const FlagComplex& K, const std::vector<GradedAlgebraSpec>& algebras,
                       int s_max, int n_max, const Field& field) {
    check_algebras(K, algebras);
    check_window(s_max, n_max);
    // Single-vertex tables from the independent bar-complex route.  The
    // homological window floor(n_max / d) + 1 makes every entry with
    // n <= n_max certain: a nonzero entry needs n >= s * d, so s stays below
    // the window's top row, and the top row itself is beyond every such s.
    std::map<int, TorTable> comp;
    for (int v : K.vertices()) {
        const GradedAlgebraSpec& a = algebras[static_cast<size_t>(v) - 1];
        int d = a.basis_size() > 1 ? a.degree(1) : n_max + 1;
        comp.emplace(v, tor_dims_bar(a, n_max / std::max(d, 1) + 1, n_max, field));
    }
    std::map<std::pair<int, int>, long long> acc;
    K.for_each_simplex([&](VertexMask sigma) {
        if (sigma == 0)
            return; // contributes only the built-in (0, 0) = 1 row
        // Bivariate product over the vertices of sigma; every factor ranges
        // over the stored entries, which all have homological degree >= 1.
        std::map<std::pair<int, int>, long long> dp{{{0, 0}, 1}};
        for (int v : mask_to_vertices(sigma)) {
            std::map<std::pair<int, int>, long long> next;
            for (const auto& [sn, ways] : dp) {
                for (const auto& [sn_v, dim_v] : comp.at(v).entries) {
                    int s = sn.first + sn_v.first;
                    int n = sn.second + sn_v.second;
                    if (s > s_max || n > n_max)
                        continue;
                    next[{s, n}] += ways * dim_v;
                }
            }
            dp = std::move(next);
            if (dp.empty())
                break;
        }
        for (const auto& [sn, ways] : dp)
            acc[sn] += ways;
    });
    TorTable table;
    table.s_max = s_max;
    table.n_max = n_max;
    table.d_min = min_positive_degree(K, algebras, n_max);
    table.truncated = false;
    table.provenance = "closed-form";
    for (const auto& [sn, v] : acc)
        table.set(sn.first, sn.second, static_cast<int>(v));
    return table;
}

EpSeriesPair ep_series_Aprime(const FlagComplex& K, const std::vector<GradedAlgebraSpec>& algebras,
                              int N, const Field& field) {
    check_algebras(K, algebras);
    if (N < 0)
        throw ValidationError("series truncation degree must be nonnegative");
    TruncatedSeries inverse = TruncatedSeries::unit(N);
    for (VertexMask I : vertex_subsets(K)) {
        std::optional<HomologyProfile> prof = subset_profile(K, I, field);
        if (!prof || prof->dims.empty())
            continue;
        long long factor = 0; // sum_d (-1)^{d+1} dim H~_d(K_I)
        for (const auto& [d, h] : prof->dims)
            factor += (d % 2 == 0) ? -static_cast<long long>(h) : static_cast<long long>(h);
        if (factor == 0)
            continue;
        inverse = inverse +
                  TruncatedSeries(N, {Rational(factor)}) * ideal_series(algebras, I, N);
    }
    if (inverse.coeff(0) == 0)
        throw InternalCheckError("computed 1/P series has zero constant term");
    return {inverse, inverse.invert()};
}

TruncatedSeries ep_series_AK(const FlagComplex& K, const std::vector<GradedAlgebraSpec>& algebras,
                             int N, const Field& field) {
    TruncatedSeries p = ep_series_Aprime(K, algebras, N, field).series;
    for (int v : K.vertices())
        p = p * hilbert_series(algebras[static_cast<size_t>(v) - 1], N);
    return p;
}

TruncatedSeries tor_alternating_series(const TorTable& table, int N) {
    if (N < 0)
        throw ValidationError("series truncation degree must be nonnegative");
    TruncatedSeries out(N);
    int step = std::max(table.d_min, 1);
    for (int n = 0; n <= N; ++n) {
        Rational acc = 0;
        for (int s = 0; s == 0 || static_cast<long long>(s) * step <= n; ++s) {
            int d = table.dim(s, n); // throws TruncationError when unsettled
            if (d != 0)
                acc += (s % 2 == 0) ? Rational(d) : Rational(-d);
        }
        out.set_coeff(n, acc);
    }
    return out;
}

std::map<int, int> GeneratorList::count_by_degree() const {
    std::map<int, int> out;
    for (const BracketGenerator& e : entries)
        ++out[e.degree];
    return out;
}

std::string GeneratorList::str() const {
    if (entries.empty())
        return "(no generators)\n";
    std::ostringstream os;
    for (const BracketGenerator& e : entries)
        os << "deg=" << e.degree << " I="
           << simplex_str(vertices_to_mask(e.subset, e.subset.empty() ? 0 : e.subset.back()))
           << " t=" << e.pivot << " " << e.expr << "\n";
    return os.str();
}

GeneratorList min_generators_Aprime(const FlagComplex& K,
                                    const std::vector<GradedAlgebraSpec>& algebras, int n_max) {
    check_algebras(K, algebras);
    if (n_max < 0)
        throw ValidationError("generator degree bound must be nonnegative");
    GeneratorList out;
    for (VertexMask I : vertex_subsets(K)) {
        if (std::popcount(I) < 2)
            continue;
        FlagComplex sub = K.full_subcomplex(I);
        std::vector<std::vector<int>> comps = sub.components();
        if (comps.size() < 2)
            continue;
        std::vector<int> verts = mask_to_vertices(I);
        int last = verts.back();
        std::vector<int> pick(verts.size(), 0);
        for (const std::vector<int>& comp : comps) {
            if (std::find(comp.begin(), comp.end(), last) != comp.end())
                continue;
            int pivot = comp.front(); // smallest vertex of the component
            size_t t = 0;
            while (verts[t] != pivot)
                ++t;
            // Basis elements per position, lexicographic with the last
            // position fastest; each algebra's degrees are nondecreasing in
            // the element index, so a budget overflow ends that level.
            auto emit = [&](auto&& self, size_t pos, int deg) -> void {
                if (pos == verts.size()) {
                    BracketGenerator g;
                    g.subset = verts;
                    g.pivot = pivot;
                    g.elems = pick;
                    g.degree = deg;
                    std::string expr = letter_str(algebras, pivot, pick[t]);
                    for (size_t l = verts.size(); l-- > 0;) {
                        if (l == t)
                            continue;
                        expr = "L_" + letter_str(algebras, verts[l], pick[l]) + "(" + expr + ")";
                    }
                    g.expr = std::move(expr);
                    out.entries.push_back(std::move(g));
                    return;
                }
                const GradedAlgebraSpec& a = algebras[static_cast<size_t>(verts[pos]) - 1];
                for (int e = 1; e < a.basis_size(); ++e) {
                    if (deg + a.degree(e) > n_max)
                        break;
                    pick[pos] = e;
                    self(self, pos + 1, deg + a.degree(e));
                }
            };
            emit(emit, 0, 0);
        }
    }
    return out;
}

bool is_free_Aprime(const FlagComplex& K, const Field& field) {
    for (VertexMask I : vertex_subsets(K)) {
        // A 1-cycle needs at least 4 vertices: on 3 or fewer a flag complex
        // is a simplex, a forest, or a filled triangle plus isolated points.
        if (std::popcount(I) < 4 || K.is_simplex(I))
            continue;
        if (reduced_homology(K.full_subcomplex(I), field).dim(1) != 0)
            return false;
    }
    return true;
}

bool is_free_H_groups(const FlagComplex& K) {
    return K.is_chordal();
}

} // namespace graphprod
