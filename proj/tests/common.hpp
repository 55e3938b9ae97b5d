#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "gti/group.hpp"

namespace gti::testing {

inline GroupPtr make_s3() { return group_from_permutations(3, {{1, 0, 2}, {0, 2, 1}}); }

// rotation (0123) and a reflection
inline GroupPtr make_d4() { return group_from_permutations(4, {{1, 2, 3, 0}, {3, 2, 1, 0}}); }

// quaternion units {1,i,-1,-i,j,k,-j,-k} under left multiplication by i and j
inline GroupPtr make_q8() {
    return group_from_permutations(8, {{1, 2, 3, 0, 5, 6, 7, 4}, {4, 7, 6, 5, 2, 1, 0, 3}});
}

// (012) and (01)(23)
inline GroupPtr make_a4() { return group_from_permutations(4, {{1, 2, 0, 3}, {1, 0, 3, 2}}); }

/// First element of the given order (throws if absent).
inline Elem element_of_order(const GroupPtr& g, int order) {
    for (Elem x = 0; x < g->order(); ++x)
        if (g->element_order(x) == order) return x;
    throw ContractError("no element of the requested order");
}

/// All elements of order dividing two; for D4 restricted to the normal Klein
/// subgroup use klein_in_d4 instead.
inline std::vector<Elem> involutions(const GroupPtr& g) {
    std::vector<Elem> out;
    for (Elem x = 0; x < g->order(); ++x)
        if (g->element_order(x) <= 2) out.push_back(x);
    return out;
}

/// The Klein subgroup {e, r^2, s, r^2 s} of D4 containing a fixed reflection.
inline Subgroup klein_in_d4(const GroupPtr& d4) {
    Elem r = element_of_order(d4, 4);
    Elem r2 = d4->mul(r, r);
    for (Elem s = 1; s < d4->order(); ++s) {
        if (d4->element_order(s) != 2 || s == r2) continue;
        Subgroup k = subgroup_closure(d4, {r2, s});
        if (k.size() == 4) return k;
    }
    throw ContractError("no Klein subgroup found");
}

/// The quotient map G -> G/N = Z/q for a normal subgroup with cyclic quotient.
inline GroupHom quotient_to_cyclic(const GroupPtr& g, const Subgroup& n) {
    int q = g->order() / n.size();
    GroupPtr zq = FiniteGroup::cyclic(q);
    std::vector<Elem> images(g->order(), -1);
    for (Elem x : n.elements()) images[x] = 0;
    // find a generator of the quotient
    for (Elem a = 0; a < g->order(); ++a) {
        if (images[a] == 0) continue;
        std::vector<Elem> im(g->order(), -1);
        for (Elem x : n.elements()) im[x] = 0;
        Elem p = g->identity();
        bool ok = true;
        for (int k = 1; k < q && ok; ++k) {
            p = g->mul(a, p);
            for (Elem x : n.elements()) {
                Elem y = g->mul(p, x);
                if (im[y] != -1) ok = false;
                im[y] = k;
            }
        }
        if (ok && std::count(im.begin(), im.end(), -1) == 0) return GroupHom(g, zq, std::move(im));
    }
    throw ContractError("quotient is not cyclic");
}

inline bool approx(std::complex<double> a, std::complex<double> b, double tol = 1e-9) {
    return std::abs(a - b) <= tol;
}

} // namespace gti::testing
