#include "graphprod/homology.hpp"

#include <bit>
#include <sstream>
#include <unordered_map>

#include "graphprod/errors.hpp"

namespace graphprod {

AugmentedChainComplex build_chain_complex(const FlagComplex& K, const Field& f) {
    AugmentedChainComplex cc{f, {}, {}};
    cc.basis.emplace_back(1, VertexMask{0});
    K.for_each_simplex([&](VertexMask s) {
        size_t card = static_cast<size_t>(std::popcount(s));
        if (card == 0)
            return; // the empty simplex is already in place
        if (cc.basis.size() <= card)
            cc.basis.resize(card + 1);
        cc.basis[card].push_back(s); // for_each_simplex is already lex-ordered
    });

    std::vector<std::unordered_map<VertexMask, int>> index(cc.basis.size());
    for (size_t k = 0; k < cc.basis.size(); ++k)
        for (size_t i = 0; i < cc.basis[k].size(); ++i)
            index[k].emplace(cc.basis[k][i], static_cast<int>(i));

    for (size_t k = 0; k + 1 < cc.basis.size(); ++k) {
        DenseMatrix d(f, static_cast<int>(cc.basis[k].size()),
                      static_cast<int>(cc.basis[k + 1].size()));
        for (size_t j = 0; j < cc.basis[k + 1].size(); ++j) {
            VertexMask s = cc.basis[k + 1][j];
            int pos = 0; // vertices are dropped in increasing order
            for (VertexMask rest = s; rest != 0; rest &= rest - 1, ++pos) {
                VertexMask face = s & ~(rest & (~rest + 1));
                FieldElem sign = (pos % 2 == 0) ? f.one() : -f.one();
                d.at(index[k].at(face), static_cast<int>(j)) = sign;
            }
        }
        cc.boundary.push_back(std::move(d));
    }

    for (size_t k = 0; k + 1 < cc.boundary.size(); ++k)
        if (!cc.boundary[k].multiply(cc.boundary[k + 1]).is_zero())
            throw InternalCheckError("boundary composition is nonzero in chain degree " +
                                     std::to_string(k + 1));
    return cc;
}

std::string HomologyProfile::str() const {
    std::ostringstream os;
    if (empty_complex)
        return "H~_{-1} = 1";
    if (dims.empty())
        return "acyclic";
    bool first = true;
    for (auto [d, n] : dims) {
        if (!first)
            os << ", ";
        os << "H~_" << d << " = " << n;
        first = false;
    }
    return os.str();
}

HomologyProfile reduced_homology(const FlagComplex& K, const Field& f) {
    AugmentedChainComplex cc = build_chain_complex(K, f);
    HomologyProfile out{f, {}, false};
    if (K.vertex_count() == 0) {
        out.empty_complex = true;
        return out;
    }
    std::vector<int> rank(cc.basis.size() + 1, 0); // rank[k] = rank of map out of degree k-1
    for (size_t k = 0; k < cc.boundary.size(); ++k)
        rank[k + 1] = cc.boundary[k].rank();
    // Degree d simplices sit in basis[d+1]; the map out of degree d is
    // boundary[d], whose rank is rank[d+1].
    for (size_t k = 1; k < cc.basis.size(); ++k) {
        int nullity = static_cast<int>(cc.basis[k].size()) - rank[k];
        int image = (k < cc.basis.size() - 1) ? rank[k + 1] : 0;
        int h = nullity - image;
        if (h < 0)
            throw InternalCheckError("negative homology dimension in degree " +
                                     std::to_string(static_cast<int>(k) - 1));
        if (h > 0)
            out.dims[static_cast<int>(k) - 1] = h;
    }
    return out;
}

} // namespace graphprod
