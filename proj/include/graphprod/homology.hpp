// Reduced simplicial homology of a flag complex over an exact field.
//
// The chain complex is augmented: the empty simplex spans the degree -1 term,
// and each vertex maps to it with coefficient +1. Consequently a nonempty
// complex never has homology in degree -1, while the empty complex has a
// one-dimensional class there, reported via a separate flag rather than the
// degree map.

#ifndef GRAPHPROD_HOMOLOGY_HPP
#define GRAPHPROD_HOMOLOGY_HPP

#include <map>
#include <string>
#include <vector>

#include "graphprod/field.hpp"
#include "graphprod/flagcomplex.hpp"
#include "graphprod/linalg.hpp"

namespace graphprod {

struct AugmentedChainComplex {
    Field field;
    // basis[k] lists the simplices of dimension k-1 (so basis[0] = {empty}),
    // in lexicographic simplex order.
    std::vector<std::vector<VertexMask>> basis;
    // boundary[k]: from span(basis[k+1]) to span(basis[k]); the map out of
    // dimension k. boundary.size() == basis.size() - 1.
    std::vector<DenseMatrix> boundary;
};

// Builds the augmented complex and verifies that consecutive boundaries
// compose to zero (InternalCheckError otherwise). The boundary of a simplex
// drops each vertex in turn with sign (-1)^(position within the simplex).
AugmentedChainComplex build_chain_complex(const FlagComplex& K, const Field& f);

struct HomologyProfile {
    Field field;
    // Reduced homology dimensions for degrees >= 0; degrees with dimension
    // zero are omitted.
    std::map<int, int> dims;
    // True exactly for the complex with no vertices, whose single reduced
    // class lives in degree -1.
    bool empty_complex = false;

    int dim(int degree) const {
        auto it = dims.find(degree);
        return it == dims.end() ? 0 : it->second;
    }
    bool is_acyclic() const { return dims.empty() && !empty_complex; }
    std::string str() const;
};

// dim H~_d = nullity(boundary out of degree d) - rank(boundary out of d+1).
HomologyProfile reduced_homology(const FlagComplex& K, const Field& f);

} // namespace graphprod

#endif
