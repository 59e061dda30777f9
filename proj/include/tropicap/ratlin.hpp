#ifndef TROPICAP_RATLIN_HPP
#define TROPICAP_RATLIN_HPP

#include <optional>
#include <vector>

#include "tropicap/numbers.hpp"

namespace tropicap::ratlin {

/**
 * Inertia of a symmetric rational form: counts of positive, zero and
 * negative eigenvalues, computed exactly by congruence (Sylvester's law),
 * never by eigenvalue extraction.
 */
struct InertiaTriple {
    Index n_plus = 0;
    Index n_zero = 0;
    Index n_minus = 0;

    bool operator==(const InertiaTriple&) const = default;
};

struct SmithResult {
    IMat s;  // diagonal, s(i,i) | s(i+1,i+1), nonnegative
    IMat u;  // unimodular, rows x rows
    IMat v;  // unimodular, cols x cols;  u * m * v == s
};

SmithResult smith_normal_form(const IMat& m);

// Row-style Hermite normal form of the row lattice: full-row-rank echelon
// basis with positive pivots and entries above each pivot reduced into
// [0, pivot). Rows span the same lattice as the input rows.
IMat hermite_row_basis(const IMat& rows);

// Canonical representative of v modulo the lattice spanned by the rows of
// hnf (which must be a hermite_row_basis output).
IVec reduce_mod_lattice(const IVec& v, const IMat& hnf);

// Basis (as rows) of (rational row span of `rows`) ∩ Z^n — the saturation.
IMat saturate_rows(const IMat& rows);

Index rank(const RMat& m);
Index rank(const IMat& m);

// Basis of the right kernel { x : m x = 0 }; empty iff m is injective.
std::vector<RVec> kernel_basis(const RMat& m);

// Unique solution of a x = b if the system is consistent; nullopt otherwise.
// When the kernel is nontrivial the returned solution is the one produced by
// back-substitution with free variables set to zero (deterministic).
std::optional<RVec> solve(const RMat& a, const RVec& b);

std::optional<RMat> inverse(const RMat& m);

Rational determinant(const RMat& m);

// Exact signature of a symmetric matrix via symmetric Gaussian pivoting with
// 2x2 block pivots when every remaining diagonal entry vanishes.
// Throws Errc::non_symmetric.
InertiaTriple inertia(const RMat& m);

/**
 * Unique outward generator of the rank-one quotient lattice
 * (H_sigma ∩ Z^n)/(H_tau ∩ Z^n), as a canonical integer representative.
 *
 * span_sigma / span_tau hold generating rows of the respective subspaces
 * (the lattices are their saturations). The representative is reduced
 * modulo the Hermite basis of H_tau ∩ Z^n, and its class is oriented to
 * agree with the witness, which must lie in H_sigma off H_tau.
 * Throws Errc::bad_corank.
 */
IVec primitive_quotient_generator(const IMat& span_sigma, const IMat& span_tau,
                                  const RVec& outward_witness);

/**
 * Lattice-normalized d-volume of conv(points): Euclidean volume times d!
 * divided by the covolume of the affine lattice of the affine span.
 * Accepts rational points (the volume is scaled back exactly).
 * Throws Errc::dimension_mismatch if the affine span has dimension != d.
 */
Rational normalized_volume(const std::vector<RVec>& points, Index d);

// Triangulation of conv(points) into d-simplices, returned as index tuples
// into `points`. Brute-force facet enumeration; deterministic.
std::vector<std::vector<int>> triangulate_points(const std::vector<RVec>& points, Index d);

}  // namespace tropicap::ratlin

#endif
