#ifndef TROPICAP_POLYHEDRA_HPP
#define TROPICAP_POLYHEDRA_HPP

#include <optional>
#include <utility>
#include <vector>

#include "tropicap/numbers.hpp"

namespace tropicap::polyhedra {

/**
 * Rational polytope in both representations with its full face lattice.
 * Lower-dimensional polytopes are allowed: the affine span is carried as a
 * list of equations and the facet inequalities cut the polytope inside it.
 */
struct Polytope {
    Index ambient_dim = 0;
    Index dim = 0;  // affine dimension

    std::vector<RVec> vertices;  // minimal V-rep, lexicographically sorted

    struct Facet {
        IVec normal;       // primitive integer outer normal
        Rational offset;   // <normal, x> <= offset, equality on the facet
        std::vector<int> vertex_set;  // sorted vertex indices on the facet
    };
    std::vector<Facet> facets;

    // equations <a, x> = b cutting out the affine span (empty if full-dim)
    std::vector<std::pair<IVec, Rational>> span_equations;

    // faces_by_dim[d] = vertex-index sets of the d-faces; faces_by_dim[dim]
    // is the polytope itself. Every face is the intersection of the facets
    // containing it.
    std::vector<std::vector<std::vector<int>>> faces_by_dim;

    bool full_dimensional() const { return dim == ambient_dim; }

    // facets containing all the given vertices
    std::vector<int> facets_containing(const std::vector<int>& vertex_set) const;
};

Polytope convex_hull(const std::vector<RVec>& points);

// Polar dual { y : <y, x> <= 1 for all x in p }; requires 0 in the interior.
Polytope polar(const Polytope& p);

/**
 * Complete fan of cones into a shared ray table, with the originating
 * polytope face recorded per cone (inclusion-reversing bijection).
 */
struct Fan {
    Index ambient_dim = 0;
    std::vector<IVec> rays;  // primitive

    struct Cone {
        std::vector<int> rays;  // sorted indices into the ray table
        Index dim = 0;
        Index dual_face_dim = -1;  // face of the source polytope, if any
        Index dual_face_index = -1;
    };
    std::vector<Cone> cones;  // all dims, origin cone omitted

    std::vector<const Cone*> cones_of_dim(Index d) const;
    std::vector<const Cone*> maximal_cones() const;
};

// Outer-normal fan; cone of a face F is spanned by the outer normals of the
// facets containing F. Throws Errc::not_full_dimensional.
Fan normal_fan(const Polytope& p);

// Simplicial refinement with the same rays: pulling triangulation pivoted at
// the lowest ray index (globally consistent tie-break). Returns only the
// maximal cones of the refinement.
Fan triangulate_fan(const Fan& fan);

/**
 * Oriented flag pair: L = { <l_normal, x> = 0 } with I^+ = { <i_normal, x> > 0 }
 * after applying the orientation signs. The half-hyperplane of the crossing
 * rule is L-tilde^+ = L ∩ I^+.
 */
struct FlagPair {
    IVec l_normal;
    IVec i_normal;
    int l_sign = 1;
    int i_sign = 1;
};

// Does relint(cone) meet { <L,x> = 0, <I,x> > 0 }? Exact sign test via a
// Gordan-style alternative; throws Errc::not_transversal when a ray lies in L.
bool cone_meets_halfplane(const std::vector<IVec>& cone_rays, const FlagPair& flags);

struct CayleyResult {
    Polytope polytope;
    bool faces_off_flag_simplicial = false;  // faces not meeting l-tilde are simplices
    bool flag_subdivision = false;           // restricted normal data subdivides l-tilde
    bool ok() const { return faces_off_flag_simplicial && flag_subdivision; }
};

/**
 * Cayley polytope conv{ P_i + e_i } of 2-d integer polygons along a circuit
 * in l-tilde = { x_1 = x_2 = 0 }, with the two positional conditions verified
 * on the computed face lattice. Failing conditions are a retry signal, not an
 * error. Throws Errc::not_a_circuit / Errc::polygon_not_planar on malformed
 * input.
 */
CayleyResult cayley_polytope(const std::vector<std::vector<IVec>>& polygons,
                             const std::vector<IVec>& circuit);

// 0 in conv(points) in the plane (closed condition), exact.
bool origin_in_convex_2d(const std::vector<RVec>& points);

}  // namespace tropicap::polyhedra

#endif
