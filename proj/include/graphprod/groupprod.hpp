// Graph products of discrete groups over a flag complex.
//
// A word is a sequence of letters (vertex, nonidentity local element); two
// letters commute iff their vertices span an edge. Every element has a unique
// canonical reduced word: reduced (no two same-vertex letters separated only
// by letters commuting with that vertex) and lexicographically least among
// the reduced words of the element under the vertex order; in particular it
// admits no adjacent commuting swap with the right vertex smaller. normalize
// computes it by inserting letters right-to-left past commuting letters
// (merging at the first same-vertex letter seen), then greedily emitting,
// among letters not preceded by a same-vertex or non-commuting letter, the
// one with the smallest vertex.
//
// equal_oracle is an independent brute-force check: breadth-first search over
// the bidirectional closure of the two elementary rewrites (exchange a
// commuting adjacent pair; merge a same-vertex adjacent pair, deleting
// identity products) plus their inverses (splitting one letter into two with
// the same product, and inserting a cancelling same-vertex pair), capped at
// the longer input's length. It never consults normalize.

#ifndef GRAPHPROD_GROUPPROD_HPP
#define GRAPHPROD_GROUPPROD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "graphprod/errors.hpp"
#include "graphprod/flagcomplex.hpp"

namespace graphprod {

// One vertex group. Element codes: index into the element list for finite
// tables, the residue 0..n-1 for Z/n, the exponent for Z. The identity is
// always code 0 for the cyclic kinds and the declared index for tables.
class LocalGroup {
  public:
    enum class Kind { Table, Cyclic, Integers };

    // Finite group from an explicit multiplication table; table[a][b] is the
    // code of a*b. Associativity, identity, and inverses are verified here.
    static LocalGroup finite_table(std::vector<std::string> names, int identity,
                                   std::vector<std::vector<int>> table);
    static LocalGroup cyclic(long long n); // Z/n, n >= 1
    static LocalGroup infinite_cyclic();   // Z

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ != Kind::Integers; }
    // Number of elements; 0 for the infinite cyclic group.
    long long order() const;

    long long identity() const { return id_; }
    bool is_identity(long long x) const { return x == id_; }
    bool valid(long long x) const;
    long long mul(long long a, long long b) const;
    long long inv(long long a) const;

    std::vector<long long> nonidentity_elements() const; // finite kinds only
    std::string elem_name(long long x) const;
    long long parse_elem(const std::string& s) const;
    std::string describe() const;

  private:
    LocalGroup() = default;
    void check(long long x) const;

    Kind kind_ = Kind::Cyclic;
    long long n_ = 1;  // modulus for Cyclic, element count for Table
    long long id_ = 0;
    std::vector<std::string> names_;          // Table kind
    std::vector<std::vector<int>> table_;     // Table kind
    std::vector<int> inverse_;                // Table kind
};

struct Letter {
    int vertex = 0;
    long long elem = 0;
    bool operator==(const Letter&) const = default;
};

using Word = std::vector<Letter>;

// Ambient data: the flag complex (edges = commuting vertex pairs) on all of
// 1..m plus one local group per vertex. Immutable after construction.
class GraphProduct {
  public:
    GraphProduct(FlagComplex complex, std::vector<LocalGroup> groups);

    int m() const { return complex_.ambient_vertex_count(); }
    const FlagComplex& complex() const { return complex_; }
    const LocalGroup& group(int v) const;
    bool commute(int u, int v) const { return complex_.has_edge(u, v); }
    // Validates vertex range and element membership; identity letters allowed.
    void validate_word(const Word& w) const;

  private:
    FlagComplex complex_;
    std::vector<LocalGroup> groups_;
};

// The unique canonical reduced word for the input's element. Identity
// letters in the input are deleted. Idempotent.
Word normalize(const GraphProduct& gp, const Word& input);

// normalize(a concatenated with b). The empty word is the identity.
Word multiply(const GraphProduct& gp, const Word& a, const Word& b);

// The group inverse: reversed word with each letter inverted, normalized.
Word invert(const GraphProduct& gp, const Word& a);

// Product of the vertex-i components of a's letters, in presentation order.
long long project(const GraphProduct& gp, const Word& a, int i);

// All m projections at once; the kernel of ab is the subgroup H.
std::vector<long long> ab(const GraphProduct& gp, const Word& a);

// g = h * gamma_m * ... * gamma_1 with gamma_i = project(g, i) and h in the
// kernel of ab; h is computed as g * gamma_1^{-1} * ... * gamma_m^{-1}.
struct SplitForm {
    Word h;
    std::vector<long long> gammas; // indexed by vertex-1
};
SplitForm split(const GraphProduct& gp, const Word& g);
Word unsplit(const GraphProduct& gp, const SplitForm& s);

// Iterated-commutator kernel generators. For every vertex subset I whose full
// subcomplex is disconnected, every component C of K_I not containing max(I),
// and every assignment of nonidentity elements to the vertices of I, emit
//   L_{g_{i_1}} o ... o L_{g_{i_n}} (g_{i_t}),   L_g(h) = g^{-1} h^{-1} g h,
// where i_1 < ... < i_n lists I, i_t = min(C) is skipped in the composition,
// and the innermost application is L_{g_{i_n}}. gen_subsets[v-1] lists the
// elements used at vertex v; an empty list means every nonidentity element
// for a finite group and is an error if the vertex is needed and infinite.
std::vector<Word> kernel_generators(const GraphProduct& gp,
                                    const std::vector<std::vector<long long>>& gen_subsets);

struct OracleConfig {
    size_t max_len = 8; // inputs longer than this are rejected
    // Elements used for splits/insertions, per vertex; empty means all
    // nonidentity elements (finite groups only).
    std::vector<std::vector<long long>> split_elems;
};

// True iff v is reachable from u in the bidirectional rewriting closure.
bool equal_oracle(const GraphProduct& gp, const Word& u, const Word& v,
                  const OracleConfig& config = {});

// Element counts of the ball of the length filtration, two independent ways:
// enumerated[n] walks actual normal forms via multiply; predicted[n] sums
// prod_k (|G_{i_k}| - 1) over canonical reduced vertex sequences.
struct LengthCensus {
    std::vector<unsigned long long> enumerated;
    std::vector<unsigned long long> predicted;
};
LengthCensus length_census(const GraphProduct& gp, int n_max);

// All normal forms of length <= n_max (finite groups), in breadth-first
// discovery order starting from the empty word.
std::vector<Word> enumerate_ball(const GraphProduct& gp, int n_max);

// Compact text form, e.g. "(1:1)(3:2)"; the empty word prints as "e".
std::string word_str(const GraphProduct& gp, const Word& w);

} // namespace graphprod

#endif
