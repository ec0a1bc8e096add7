// Connected graded algebras with chosen homogeneous bases, and their graph
// products over a flag complex.
//
// A monomial is a sequence of letters (vertex, non-unit basis element); two
// letters commute up to sign iff their vertices span an edge, and swapping
// such a pair multiplies the coefficient by (-1)^{|x||y|}. Merging two
// same-vertex letters made adjacent applies the local structure constants and
// may branch into several terms. Every element of the graph product is a
// unique signed combination of canonical monomials: monomials whose vertex
// sequence is reduced (no two same-vertex letters separated only by letters
// at commuting vertices) and lexicographically least among its rewrites.

#ifndef GRAPHPROD_GALG_HPP
#define GRAPHPROD_GALG_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphprod/field.hpp"
#include "graphprod/flagcomplex.hpp"
#include "graphprod/series.hpp"

namespace graphprod {

// One defining product rule: left * right = sum of coeff * result-name terms.
// Pairs of non-unit basis elements without a rule multiply to zero.
struct ProductRule {
    std::string left;
    std::string right;
    std::vector<std::pair<Rational, std::string>> result;
};

// A connected graded algebra with a chosen homogeneous basis, described
// degree by degree up to a truncation bound.
//
// `complete` declares that the listed basis is the whole algebra, so that
// products landing beyond the truncation degree are zero; otherwise such
// products are unknown and requesting them throws TruncationError.
//
// Validated on construction: degree 0 is exactly the unit "1", names are
// unique, every rule respects the grading, multiplication by the unit is the
// identity, and multiplication is associative on every checkable triple.
// A supplied Hilbert function must expand to the basis dimensions.
class GradedAlgebraSpec {
  public:
    GradedAlgebraSpec(std::string name, int trunc_degree, bool complete,
                      std::vector<std::vector<std::string>> basis_by_degree,
                      std::vector<ProductRule> rules,
                      std::optional<RationalFunction> hilbert = std::nullopt);

    const std::string& name() const { return name_; }
    int trunc_degree() const { return trunc_degree_; }
    bool is_complete() const { return complete_; }

    // Basis elements are indexed 0..basis_size()-1; index 0 is the unit.
    int basis_size() const { return static_cast<int>(degree_.size()); }
    int degree(int elem) const { return degree_.at(static_cast<size_t>(elem)); }
    const std::string& elem_name(int elem) const {
        return names_.at(static_cast<size_t>(elem));
    }
    // Index of the named element; ValidationError if absent.
    int find_elem(const std::string& name) const;

    // Number of basis elements of the given degree; TruncationError when the
    // algebra is not complete and d exceeds the truncation degree.
    int dim(int d) const;
    // Largest degree whose dimensions are known (INT_MAX when complete).
    int known_degree_limit() const;

    // Structure constants of left * right as (element, coefficient) pairs;
    // empty means zero. TruncationError when the product degree is beyond
    // the truncation bound of an incomplete algebra.
    const std::vector<std::pair<int, Rational>>& product(int left, int right) const;

    const std::optional<RationalFunction>& hilbert() const { return hilbert_; }

    // One-line summary: name, truncation, dimensions.
    std::string describe() const;

  private:
    std::string name_;
    int trunc_degree_;
    bool complete_;
    std::vector<std::string> names_;
    std::vector<int> degree_;
    std::vector<std::vector<int>> by_degree_;
    std::map<std::pair<int, int>, std::vector<std::pair<int, Rational>>> table_;
    std::optional<RationalFunction> hilbert_;
};

// The three builtin algebra families.
//   exterior_algebra(d, N):   basis 1, x with |x| = d and x^2 = 0.
//   trunc_poly_algebra(d, r, N): basis 1, x, ..., x^{r-1}, x^r = 0, |x| = d.
//   free_algebra(d, N):       basis 1, x, x^2, ... on one degree-d generator,
//                             materialized through degree N.
// Each carries its exact Hilbert function. Preconditions: d >= 1, r >= 2,
// N >= d.
GradedAlgebraSpec exterior_algebra(int d, int N);
GradedAlgebraSpec trunc_poly_algebra(int d, int r, int N);
GradedAlgebraSpec free_algebra(int d, int N);

// A flag complex together with one graded algebra per ambient vertex.
class AlgebraProduct {
  public:
    AlgebraProduct(FlagComplex complex, std::vector<GradedAlgebraSpec> algebras);

    int m() const { return complex_.ambient_vertex_count(); }
    const FlagComplex& complex() const { return complex_; }
    const GradedAlgebraSpec& algebra(int v) const {
        return algebras_.at(static_cast<size_t>(v - 1));
    }
    bool commute(int u, int v) const { return complex_.has_edge(u, v); }
    // Largest degree with knowable dimensions at every vertex.
    int known_degree_limit() const;

  private:
    FlagComplex complex_;
    std::vector<GradedAlgebraSpec> algebras_;
};

// One monomial letter: a non-unit basis element of the algebra at a vertex
// (the unit is allowed in inputs and is deleted by normalization).
struct GLetter {
    int vertex;
    int elem;
    bool operator==(const GLetter&) const = default;
    auto operator<=>(const GLetter&) const = default;
};

using Monomial = std::vector<GLetter>;

// Sum of the degrees of a monomial's letters.
int total_degree(const AlgebraProduct& ap, const Monomial& mono);

// "1" for the empty monomial, else letters as "(vertex:name)" left to right.
std::string monomial_str(const AlgebraProduct& ap, const Monomial& mono);

// A finite signed combination of canonical monomials over one field.
// No zero coefficients are stored.
struct SignedMonomialSum {
    Field field;
    std::map<Monomial, FieldElem> terms;

    bool is_zero() const { return terms.empty(); }
    // Adds coeff * mono, erasing the entry if the total cancels.
    void add_term(const Monomial& mono, const FieldElem& coeff);
    bool operator==(const SignedMonomialSum& o) const;
    std::string str(const AlgebraProduct& ap) const;
};

// Rewrites coeff * raw to its unique signed combination of canonical
// monomials: deletes unit letters, merges same-vertex letters that can be
// made adjacent (applying structure constants, possibly branching), and
// reorders each merged-out monomial to its lexicographically least form,
// tracking the Koszul sign (-1)^{|x||y|} for every swap. Idempotent on
// canonical input. `koszul_signs = false` drops the sign factor (every swap
// multiplies by +1); it exists for the characteristic-2 coherence rerun.
// Throws TruncationError when a merge needs structure constants beyond an
// incomplete algebra's truncation degree.
SignedMonomialSum gp_normalize(const AlgebraProduct& ap, const FieldElem& coeff,
                               const Monomial& raw, bool koszul_signs = true);

// Bilinear extension of concatenate-then-normalize. Associative; the empty
// monomial with coefficient 1 is the unit. Operand fields must match.
SignedMonomialSum gp_multiply(const AlgebraProduct& ap, const SignedMonomialSum& a,
                              const SignedMonomialSum& b);

// Number of canonical monomials of total degree n; if `listing` is non-null
// it receives the monomials themselves in lexicographic order. Throws
// TruncationError when n exceeds the knowable degree range.
long long gp_basis_count(const AlgebraProduct& ap, int n,
                         std::vector<Monomial>* listing = nullptr);

// Degreewise dimensions as a series: of one algebra's chosen basis, or of a
// graph product via gp_basis_count. TruncationError beyond knowable degrees.
TruncatedSeries hilbert_series(const GradedAlgebraSpec& spec, int N);
TruncatedSeries hilbert_series(const AlgebraProduct& ap, int N);

} // namespace graphprod

#endif
