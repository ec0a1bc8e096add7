// Truncated normalized bar complexes over a flag complex and their homology
// by exact sparse elimination — the brute-force route to every Tor dimension
// this library reports, kept deliberately independent of the closed-form
// route so that the two can certify each other.
//
// A chain generator couples a coefficient monomial with one bar word per
// vertex,
//
//     coeff (x) [a_1|...|a_{s_1}]_1 (x) ... (x) [a_1|...|a_{s_m}]_m,
//
// where the entries of the bar word at vertex v are positive-degree basis
// elements of the vertex algebra A_v (the normalized complex has no unit
// entries) and the set of vertices with a nonempty bar word spans a simplex
// of K — for a flag complex, a clique. The bidegree is (s, n): homological
// degree s = total number of bar entries, internal degree n = degree of the
// coefficient plus the degrees of all entries. The coefficient takes one of
// three shapes:
//
//   - trivial (the unit monomial):
//       homology at (s, n) = Tor^{A^K}_{s,n}(k, k);
//   - at most one basis element per vertex, i.e. a monomial of the all-edges
//     product A^Delta on the same vertex set:
//       homology at (s, n) = Tor^{A^K}_{s,n}(A^Delta, k);
//   - an arbitrary canonical monomial of A^K itself: the complex is then the
//     twisted tensor product A^K (x) bar(A)^K, a free resolution of k, so its
//     homology must be k in bidegree (0, 0) and zero everywhere else —
//     check_acyclic_full verifies exactly that.
//
// The differential merges adjacent bar entries through the vertex algebra's
// structure constants and, when coefficients are present, absorbs the first
// entry of a bar word into the coefficient. Every term carries the Koszul
// sign for tensor products of complexes, where a bar word [a_1|...|a_s] has
// total degree s + |a_1| + ... + |a_s| and a coefficient contributes its
// internal degree. d o d = 0 is asserted on every constructed block pair
// (InternalCheckError otherwise, always on).
//
// Truncation discipline: only bidegrees with s <= s_max and n <= n_max are
// built, and a homology value at (s, n) is reported only when the chain group
// at (s+1, n) is also complete — either s + 1 <= s_max or impossible because
// (s + 1) * d_min > n. Queries outside that range throw TruncationError
// rather than returning a phantom value.

#ifndef GRAPHPROD_BARCOMPLEX_HPP
#define GRAPHPROD_BARCOMPLEX_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "graphprod/field.hpp"
#include "graphprod/flagcomplex.hpp"
#include "graphprod/galg.hpp"
#include "graphprod/linalg.hpp"
#include "graphprod/tortable.hpp"

namespace graphprod {

// One chain generator; `bars[v-1]` lists the basis-element indices of the bar
// word at vertex v (every index has positive degree in A_v). `coeff` is the
// coefficient monomial (empty = the unit). The default ordering is the
// canonical basis order used for every matrix.
struct BarGen {
    Monomial coeff;
    std::vector<std::vector<int>> bars;

    bool operator==(const BarGen&) const = default;
    auto operator<=>(const BarGen&) const = default;
};

// Homological degree: total number of bar entries.
int bar_entry_count(const BarGen& g);

// Internal degree: coefficient degree plus the degrees of all bar entries.
int bar_internal_degree(const AlgebraProduct& ap, const BarGen& g);

// Serialization: the coefficient monomial, then " (x) v:[a|b|...]" for every
// vertex with a nonempty bar word, e.g. "(3:x) (x) 1:[x|x^2]".
std::string bar_gen_str(const AlgebraProduct& ap, const BarGen& g);

// Which polyhedral chain complex to build. AK computes Tor over the trivial
// module (trivial coefficients); APrime computes Tor of the all-edges product
// A^Delta as a module over A^K (one coefficient basis element per vertex).
enum class BarVariant { AK, APrime };

class BigradedChainComplex {
  public:
    enum class Coefficients { None, VertexBasis, FullProduct };

    // Builds every block (s, n) with 0 <= s <= s_max, 0 <= n <= n_max, plus
    // all boundary matrices, and asserts d o d = 0 on each composable pair.
    // ValidationError for negative limits; TruncationError when n_max exceeds
    // the knowable degree range of an incomplete vertex algebra.
    BigradedChainComplex(AlgebraProduct ap, int s_max, int n_max, Field field,
                         Coefficients mode);

    const AlgebraProduct& product() const { return ap_; }
    const Field& field() const { return field_; }
    int s_limit() const { return s_max_; }
    int n_limit() const { return n_max_; }
    // Minimal positive generator degree over all vertices (n_max + 1 when no
    // vertex algebra has a positive-degree generator).
    int min_entry_degree() const { return d_min_; }
    Coefficients coefficients() const { return mode_; }

    // True when the homology at (s, n) is determined by the built window.
    bool trusted(int s, int n) const;

    // Generators at (s, n) in canonical order. ValidationError outside the
    // built window.
    const std::vector<BarGen>& basis(int s, int n) const;

    // Matrix of d : C_{s,n} -> C_{s-1,n}, rows/columns in basis order; the
    // s = 0 matrix has zero rows. ValidationError outside the built window.
    const SparseMatrix& boundary(int s, int n) const;

    // dim H_{s,n} = dim C_{s,n} - rank d_{s,n} - rank d_{s+1,n}.
    // TruncationError outside the trusted range.
    int homology_dim(int s, int n) const;

    // Every trusted dimension with s >= 1 as a table (provenance
    // "bar-oracle"; the s = 0 row is the table's built-in convention).
    TorTable homology_table() const;

  private:
    size_t block(int s, int n) const {
        return static_cast<size_t>(s) * static_cast<size_t>(n_max_ + 1) +
               static_cast<size_t>(n);
    }
    void check_window(int s, int n) const;
    void build_basis();
    void build_boundaries();
    std::map<BarGen, FieldElem> differential(const BarGen& g) const;
    int rank_of(int s, int n) const;

    AlgebraProduct ap_;
    Field field_;
    int s_max_;
    int n_max_;
    Coefficients mode_;
    int d_min_ = 1;
    std::vector<std::vector<BarGen>> basis_;
    std::vector<SparseMatrix> boundary_;
    mutable std::vector<int> rank_; // -1 = not yet computed
};

// The bar complex of a single algebra: homology at (s, n) = Tor^A_{s,n}(k,k).
// Precondition: n_max within A's knowable degree range (TruncationError).
BigradedChainComplex bar_complex(const GradedAlgebraSpec& A, int s_max, int n_max,
                                 const Field& field);

// Tor^A_{s,n}(k, k) dimensions of a single algebra by elimination on the bar
// complex; querying the result outside its trusted range throws.
TorTable tor_dims_bar(const GradedAlgebraSpec& A, int s_max, int n_max,
                      const Field& field);

// The polyhedral bar complex over K (one algebra per vertex, 1-based):
// variant AK has trivial coefficients, variant APrime one coefficient basis
// element per vertex. Homology as documented at the top of this header.
BigradedChainComplex polyhedral_bar(const FlagComplex& K,
                                    const std::vector<GradedAlgebraSpec>& algebras,
                                    int s_max, int n_max, const Field& field,
                                    BarVariant variant);

struct AcyclicityReport {
    bool passed = false;
    int blocks_checked = 0;
    // Homology dimensions found on the trusted range: always the (0,0) value,
    // plus every nonzero value elsewhere (each of which is a failure).
    std::map<std::pair<int, int>, int> homology;
    std::vector<std::string> deviations;

    std::string str() const;
};

// Builds the full-coefficient complex A^K (x) bar(A)^K and verifies that it
// is a resolution of k: homology k at (0, 0) and zero at every other trusted
// bidegree. d o d = 0 is asserted during construction as always.
AcyclicityReport check_acyclic_full(const FlagComplex& K,
                                    const std::vector<GradedAlgebraSpec>& algebras,
                                    int s_max, int n_max, const Field& field);

} // namespace graphprod

#endif
