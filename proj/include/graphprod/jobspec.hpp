// Parsed batch-job documents for the command-line front end.
//
// A job document is a single structured-text tree (maps, lists, strings,
// integers) describing one flag complex, one payload — a group or an algebra
// per vertex; both kinds together are allowed only for the verify-all
// command — a coefficient field, truncation bounds, and per-command
// arguments.  The exact schema is documented in the README.  Coefficients in
// algebra rules are integers or "p/q" strings; group and algebra elements
// may be referenced by code or by name.

#ifndef GRAPHPROD_JOBSPEC_HPP
#define GRAPHPROD_JOBSPEC_HPP

#include <optional>
#include <string>
#include <vector>

#include "graphprod/field.hpp"
#include "graphprod/flagcomplex.hpp"
#include "graphprod/galg.hpp"
#include "graphprod/groupprod.hpp"

namespace graphprod {

struct JobSpec {
    FlagComplex complex = FlagComplex(1, {});
    std::vector<LocalGroup> groups;                  // group payload (empty otherwise)
    std::vector<std::vector<long long>> gen_subsets; // per-vertex element subsets; empty list
                                                     // means every nonidentity element
    std::vector<GradedAlgebraSpec> algebras;         // algebra payload (empty otherwise)
    Field field = Field(0);
    int n_max = 6;              // internal-degree bound
    std::optional<int> s_max;   // homological bound; derived per command when absent
    std::string command;        // optional echo; must match the command line when present
    std::vector<Word> words;          // group-word arguments
    std::vector<Monomial> monomials;  // algebra-monomial arguments
    std::string variant;              // "aprime" | "ak" | "algebra" | "group"
    int vertex = 0;                   // projection target vertex
    bool list_basis = false;          // gp-basis: include the monomial listing

    bool has_groups() const { return !groups.empty(); }
    bool has_algebras() const { return !algebras.empty(); }
};

// Parses and validates a job document. Malformed trees, unknown keys, size
// mismatches, and invalid group/algebra data raise ValidationError (group
// axioms and algebra coherence are verified by the domain constructors).
JobSpec parse_jobspec(const std::string& text);

// "q" or "rational" selects the rationals; "gf<p>" selects GF(p) for a prime
// p. Used for the document's "field" key and the --field option alike.
Field parse_field_name(const std::string& name);

} // namespace graphprod

#endif
