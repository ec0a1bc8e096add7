// Closed-form homological invariants of graph products of connected graded
// algebras over a flag complex K, as directly computable formulas:
//
//   * tor_Aprime_closed — bigraded dimensions of the derived functor of the
//     kernel-side coefficients: contributions are reduced homology groups of
//     full subcomplexes K_I tensored with products of the augmentation ideals
//     J(A_i), i in I.  Concretely,
//         dims(s, n) = sum_I dim H~_{s-1}(K_I; k) * [t^n] prod_{i in I} P(J(A_i); t).
//   * tor_AK_closed — bigraded dimensions for trivial coefficients over the
//     whole product: a sum over simplices sigma of K of products of the
//     single-vertex tables, one factor per vertex of sigma with homological
//     degree >= 1.  The single-vertex tables are computed by the independent
//     bar-complex route (barcomplex.hpp), never assumed from known patterns.
//   * ep_series_Aprime / ep_series_AK — Euler-Poincare (Hilbert) series
//     identities:  1/P(A') as an explicit alternating sum over subsets, its
//     inversion P(A'), and P(A^K) = P(A') * prod_i P(A_i).
//   * min_generators_Aprime — the minimal generating set as iterated graded
//     Lie brackets L_x(y) = xy - (-1)^{|x||y|} yx indexed by subsets I with
//     disconnected full subcomplex, truncated at a degree bound.
//   * is_free_Aprime / is_free_H_groups — freeness criteria: vanishing of
//     H~_1(K_I) for every full subcomplex, and chordality of the 1-skeleton.
//     For flag complexes the two agree; the library computes them by
//     independent routes so the agreement can be tested, not assumed.
//
// Every function here is a closed form: exact on its whole query window, with
// no trusted-range caveat (tables are returned with truncated = false).  The
// independent bar-complex oracle produces the same tables the slow way; tests
// compare the two routes entry by entry.

#ifndef GRAPHPROD_TORFORM_HPP
#define GRAPHPROD_TORFORM_HPP

#include <map>
#include <string>
#include <vector>

#include "graphprod/field.hpp"
#include "graphprod/flagcomplex.hpp"
#include "graphprod/galg.hpp"
#include "graphprod/series.hpp"
#include "graphprod/tortable.hpp"

namespace graphprod {

// Closed-form table for the kernel-side coefficients on the window
// s <= s_max, n <= n_max.  One algebra per ambient vertex of K.  The field
// enters through the reduced homology of the full subcomplexes.  Throws
// TruncationError if n_max exceeds an algebra's known degree range.
TorTable tor_Aprime_closed(const FlagComplex& K,
                           const std::vector<GradedAlgebraSpec>& algebras,
                           int s_max, int n_max, const Field& field);

// Closed-form table for trivial coefficients over the graph product:
//   dims(s, n) = sum over simplices sigma of K of the number of ways to write
//   (s, n) = (sum s_i, sum n_i) with s_i >= 1 and Tor^{A_i}_{s_i, n_i} != 0,
//   weighted by the product of those single-vertex dimensions.
// Single-vertex tables come from the bar-complex oracle with a homological
// window wide enough that every queried entry is certain.  Throws
// TruncationError if n_max exceeds an algebra's known degree range.
TorTable tor_AK_closed(const FlagComplex& K,
                       const std::vector<GradedAlgebraSpec>& algebras,
                       int s_max, int n_max, const Field& field);

// Both forms of the Euler-Poincare series of the kernel-side algebra A':
// `inverse` is 1/P(A'; t) computed termwise as
//   1 + sum_{I != empty} [ sum_d (-1)^{d+1} dim H~_d(K_I; k) ] * prod_{i in I} P(J(A_i); t),
// and `series` is its multiplicative inversion P(A'; t).  Their product is 1
// to the truncation degree by construction of invert().
struct EpSeriesPair {
    TruncatedSeries inverse; // 1/P(A'; t)
    TruncatedSeries series;  // P(A'; t)
};
EpSeriesPair ep_series_Aprime(const FlagComplex& K,
                              const std::vector<GradedAlgebraSpec>& algebras,
                              int N, const Field& field);

// P(A^K; t) = P(A'; t) * prod_i P(A_i; t), truncated at degree N.  Must agree
// coefficientwise with the direct monomial census hilbert_series(AlgebraProduct);
// the two routes share no code and tests compare them.
TruncatedSeries ep_series_AK(const FlagComplex& K,
                             const std::vector<GradedAlgebraSpec>& algebras,
                             int N, const Field& field);

// The alternating sum sum_s (-1)^s P(Tor_s; t) truncated at degree N, read
// off a dimension table.  For a table of Tor^A(k, k) this equals 1/P(A; t);
// the identity is the standard Euler-characteristic consistency check and is
// asserted by tests for single algebras, for A^K, and for A'.  Throws
// TruncationError if the table's window cannot settle every needed entry
// (for a table from the bar oracle that means N or the homological range was
// too small; for closed-form tables, that s_max < N / d_min).
TruncatedSeries tor_alternating_series(const TorTable& table, int N);

// One iterated graded Lie bracket
//   L_{x_{i_1}} o ... o L_{x_{i_{t-1}}} o L_{x_{i_{t+1}}} o ... o L_{x_{i_n}} (x_{i_t}),
// where I = {i_1 < ... < i_n} is a vertex subset whose full subcomplex K_I is
// disconnected, t is the smallest vertex of a connected component of K_I not
// containing i_n, and x_{i_l} is a positive-degree basis element of A_{i_l}.
// The innermost application is L_{x_{i_n}}.
struct BracketGenerator {
    std::vector<int> subset; // I, ascending
    int pivot = 0;           // t, the bracket argument's vertex
    std::vector<int> elems;  // basis-element index per vertex, aligned with subset
    int degree = 0;          // total internal degree
    std::string expr;        // rendered bracket, e.g. "L_(3:x)((1:x))"
};

struct GeneratorList {
    std::vector<BracketGenerator> entries;

    // Number of entries of each total internal degree (zero counts omitted).
    std::map<int, int> count_by_degree() const;
    std::string str() const;
};

// Minimal generating set of the kernel-side algebra A', complete through
// internal degree n_max: every bracket of the shape above with total degree
// <= n_max, enumerated deterministically (subsets by ascending mask, then
// components by their smallest vertex, then basis elements lexicographically
// with the last subset position fastest).  The degreewise count equals the
// s = 1 row of tor_Aprime_closed.
GeneratorList min_generators_Aprime(const FlagComplex& K,
                                    const std::vector<GradedAlgebraSpec>& algebras,
                                    int n_max);

// True iff dim H~_1(K_I; field) = 0 for every vertex subset I.  When true,
// A' is a free algebra on min_generators_Aprime; when false it is not.
bool is_free_Aprime(const FlagComplex& K, const Field& field);

// True iff the kernel subgroup H of a graph product of groups over K is a
// free group, i.e. iff the 1-skeleton of K is chordal.  Independent of the
// homological criterion above; for flag complexes the two coincide.
bool is_free_H_groups(const FlagComplex& K);

} // namespace graphprod

#endif
