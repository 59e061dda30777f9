#include "tropicap/ratlin.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tropicap::ratlin {

namespace {

// Floor division for arbitrary-precision integers (GMP truncates).
Integer fdiv(const Integer& a, const Integer& b) {
    require(b != 0, "fdiv by zero");
    Integer q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) q -= 1;
    return q;
}

void swap_rows(IMat& m, Index i, Index j) { m.row(i).swap(m.row(j)); }
void swap_cols(IMat& m, Index i, Index j) { m.col(i).swap(m.col(j)); }

}  // namespace

SmithResult smith_normal_form(const IMat& m) {
    const Index rows = m.rows(), cols = m.cols();
    IMat a = m;
    IMat u = IMat::Identity(rows, rows);
    IMat v = IMat::Identity(cols, cols);

    const Index steps = std::min(rows, cols);
    for (Index t = 0; t < steps; ++t) {
        // locate a nonzero pivot of minimal absolute value in the block
        Index pi = -1, pj = -1;
        for (Index i = t; i < rows; ++i)
            for (Index j = t; j < cols; ++j)
                if (a(i, j) != 0 &&
                    (pi < 0 || abs(a(i, j)) < abs(a(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;  // block is zero
        if (pi != t) { swap_rows(a, pi, t); swap_rows(u, pi, t); }
        if (pj != t) { swap_cols(a, pj, t); swap_cols(v, pj, t); }

        bool clean = false;
        while (!clean) {
            clean = true;
            // clear column t below the pivot
            for (Index i = t + 1; i < rows; ++i) {
                if (a(i, t) == 0) continue;
                Integer q = fdiv(a(i, t), a(t, t));
                if (q != 0) {
                    a.row(i) -= (q * a.row(t).array()).matrix();
                    u.row(i) -= (q * u.row(t).array()).matrix();
                }
                if (a(i, t) != 0) {  // remainder smaller than pivot: promote it
                    swap_rows(a, i, t);
                    swap_rows(u, i, t);
                    clean = false;
                }
            }
            // clear row t right of the pivot
            for (Index j = t + 1; j < cols; ++j) {
                if (a(t, j) == 0) continue;
                Integer q = fdiv(a(t, j), a(t, t));
                if (q != 0) {
                    a.col(j) -= (q * a.col(t).array()).matrix();
                    v.col(j) -= (q * v.col(t).array()).matrix();
                }
                if (a(t, j) != 0) {
                    swap_cols(a, j, t);
                    swap_cols(v, j, t);
                    clean = false;
                }
            }
            if (!clean) continue;
            // enforce that the pivot divides the remaining block
            for (Index i = t + 1; i < rows && clean; ++i)
                for (Index j = t + 1; j < cols && clean; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        a.col(t) += a.col(j);
                        v.col(t) += v.col(j);
                        clean = false;
                    }
        }
        if (a(t, t) < 0) {
            a.row(t) = -a.row(t);
            u.row(t) = -u.row(t);
        }
    }
    return SmithResult{std::move(a), std::move(u), std::move(v)};
}

IMat hermite_row_basis(const IMat& rows_in) {
    std::vector<IVec> work;
    for (Index i = 0; i < rows_in.rows(); ++i) {
        IVec r = rows_in.row(i).transpose();
        if (is_zero(r)) continue;
        work.push_back(std::move(r));
    }
    const Index n = rows_in.cols();
    std::vector<IVec> basis;
    Index col = 0;
    while (col < n && !work.empty()) {
        // gcd-reduce all rows on this column into a single pivot row
        std::vector<IVec> with, without;
        for (auto& r : work) (r[col] != 0 ? with : without).push_back(std::move(r));
        work = std::move(without);
        if (!with.empty()) {
            while (with.size() > 1) {
                std::sort(with.begin(), with.end(), [&](const IVec& x, const IVec& y) {
                    return abs(x[col]) < abs(y[col]);
                });
                IVec& small = with.front();
                for (std::size_t k = 1; k < with.size(); ++k) {
                    Integer q = with[k][col] / small[col];  // truncated is fine here
                    with[k] -= q * small;
                }
                std::vector<IVec> next;
                next.push_back(std::move(with.front()));
                for (std::size_t k = 1; k < with.size(); ++k) {
                    if (with[k][col] != 0)
                        next.push_back(std::move(with[k]));
                    else if (!is_zero(with[k]))
                        work.push_back(std::move(with[k]));
                }
                with = std::move(next);
            }
            IVec pivot = std::move(with.front());
            if (pivot[col] < 0) pivot = -pivot;
            basis.push_back(std::move(pivot));
        }
        ++col;
    }
    // reduce entries above each pivot
    IMat h(static_cast<Index>(basis.size()), n);
    for (std::size_t i = 0; i < basis.size(); ++i) h.row(static_cast<Index>(i)) = basis[i].transpose();
    for (Index i = static_cast<Index>(basis.size()) - 1; i >= 0; --i) {
        Index pc = 0;
        while (h(i, pc) == 0) ++pc;
        for (Index k = 0; k < i; ++k) {
            Integer q = fdiv(h(k, pc), h(i, pc));
            if (q != 0) h.row(k) -= (q * h.row(i).array()).matrix();
        }
    }
    return h;
}

IVec reduce_mod_lattice(const IVec& v, const IMat& hnf) {
    IVec out = v;
    for (Index i = 0; i < hnf.rows(); ++i) {
        Index pc = 0;
        while (hnf(i, pc) == 0) ++pc;
        Integer q = fdiv(out[pc], hnf(i, pc));
        if (q != 0) out -= (q * hnf.row(i).transpose().array()).matrix();
    }
    return out;
}

IMat saturate_rows(const IMat& rows) {
    SmithResult snf = smith_normal_form(rows);
    Index r = 0;
    for (Index i = 0; i < std::min(snf.s.rows(), snf.s.cols()); ++i)
        if (snf.s(i, i) != 0) ++r;
    // row space of m equals the span of the first r rows of v^{-1}; since v is
    // unimodular those rows are a basis of the saturated lattice.
    RMat vinv_r = *inverse(to_rational(snf.v));
    IMat out(r, rows.cols());
    for (Index i = 0; i < r; ++i) {
        RVec row = vinv_r.row(i).transpose();
        out.row(i) = to_integer(row).transpose();
    }
    return hermite_row_basis(out);  // canonical basis
}

namespace {

// Row echelon with partial pivoting; returns pivot columns; operates in place.
std::vector<Index> echelonize(RMat& a) {
    std::vector<Index> pivots;
    Index row = 0;
    for (Index col = 0; col < a.cols() && row < a.rows(); ++col) {
        Index p = -1;
        for (Index i = row; i < a.rows(); ++i)
            if (a(i, col) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != row) a.row(p).swap(a.row(row));
        Rational inv = Rational(1) / a(row, col);
        a.row(row) *= inv;
        for (Index i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, col) == 0) continue;
            Rational f = a(i, col);  // copy: the row update would alias it
            a.row(i) -= (f * a.row(row).array()).matrix();
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

Index rank(const RMat& m) {
    RMat a = m;
    return static_cast<Index>(echelonize(a).size());
}

Index rank(const IMat& m) { return rank(to_rational(m)); }

std::vector<RVec> kernel_basis(const RMat& m) {
    RMat a = m;
    std::vector<Index> pivots = echelonize(a);
    std::vector<bool> is_pivot(m.cols(), false);
    for (Index c : pivots) is_pivot[c] = true;
    std::vector<RVec> basis;
    for (Index free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        RVec x = RVec::Zero(m.cols());
        x[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            x[pivots[r]] = -a(static_cast<Index>(r), free);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<RVec> solve(const RMat& a_in, const RVec& b) {
    require(a_in.rows() == b.size(), "solve: size mismatch");
    RMat aug(a_in.rows(), a_in.cols() + 1);
    aug.leftCols(a_in.cols()) = a_in;
    aug.col(a_in.cols()) = b;
    std::vector<Index> pivots = echelonize(aug);
    if (!pivots.empty() && pivots.back() == a_in.cols()) return std::nullopt;  // inconsistent
    RVec x = RVec::Zero(a_in.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = aug(static_cast<Index>(r), a_in.cols());
    return x;
}

std::optional<RMat> inverse(const RMat& m) {
    require(m.rows() == m.cols(), "inverse: not square");
    const Index n = m.rows();
    RMat aug(n, 2 * n);
    aug.leftCols(n) = m;
    aug.rightCols(n) = RMat::Identity(n, n);
    std::vector<Index> pivots = echelonize(aug);
    if (static_cast<Index>(pivots.size()) < n || pivots.back() >= n) return std::nullopt;
    for (Index i = 0; i < n; ++i)
        if (pivots[static_cast<std::size_t>(i)] != i) return std::nullopt;
    return RMat(aug.rightCols(n));
}

Rational determinant(const RMat& m) {
    require(m.rows() == m.cols(), "determinant: not square");
    RMat a = m;
    Rational det = 1;
    const Index n = a.rows();
    for (Index col = 0; col < n; ++col) {
        Index p = -1;
        for (Index i = col; i < n; ++i)
            if (a(i, col) != 0) { p = i; break; }
        if (p < 0) return Rational(0);
        if (p != col) {
            a.row(p).swap(a.row(col));
            det = -det;
        }
        det *= a(col, col);
        Rational inv = Rational(1) / a(col, col);
        for (Index i = col + 1; i < n; ++i) {
            if (a(i, col) == 0) continue;
            Rational f = a(i, col) * inv;
            a.row(i) -= (f * a.row(col).array()).matrix();
        }
    }
    return det;
}

InertiaTriple inertia(const RMat& m_in) {
    require(m_in.rows() == m_in.cols(), "inertia: not square");
    if (!is_symmetric(m_in)) fail(Errc::non_symmetric, "inertia requires a symmetric matrix");

    RMat a = m_in;
    InertiaTriple out;
    Index n = a.rows();
    while (n > 0) {
        // symmetric pivot: any nonzero diagonal entry
        Index p = -1;
        for (Index i = 0; i < n; ++i)
            if (a(i, i) != 0) { p = i; break; }
        if (p >= 0) {
            if (p != 0) {
                a.row(p).swap(a.row(0));
                a.col(p).swap(a.col(0));
            }
            Rational d = a(0, 0);
            if (d > 0) ++out.n_plus; else ++out.n_minus;
            RMat next(n - 1, n - 1);
            for (Index i = 1; i < n; ++i)
                for (Index j = 1; j < n; ++j)
                    next(i - 1, j - 1) = a(i, j) - a(i, 0) * a(0, j) / d;
            a = std::move(next);
            --n;
            continue;
        }
        // all diagonal entries vanish: look for an off-diagonal pivot
        Index bi = -1, bj = -1;
        for (Index i = 0; i < n && bi < 0; ++i)
            for (Index j = i + 1; j < n; ++j)
                if (a(i, j) != 0) { bi = i; bj = j; break; }
        if (bi < 0) {  // zero matrix
            out.n_zero += n;
            break;
        }
        if (bi != 0) { a.row(bi).swap(a.row(0)); a.col(bi).swap(a.col(0)); }
        if (bj != 1) { a.row(bj).swap(a.row(1)); a.col(bj).swap(a.col(1)); }
        // block pivot [[0,b],[b,0]] contributes one positive and one negative
        Rational b = a(0, 1);
        ++out.n_plus;
        ++out.n_minus;
        RMat next(n - 2, n - 2);
        for (Index i = 2; i < n; ++i)
            for (Index j = 2; j < n; ++j)
                next(i - 2, j - 2) = a(i, j) - (a(i, 0) * a(1, j) + a(i, 1) * a(0, j)) / b;
        a = std::move(next);
        n -= 2;
    }
    return out;
}

IVec primitive_quotient_generator(const IMat& span_sigma, const IMat& span_tau,
                                  const RVec& outward_witness) {
    const Index n = span_sigma.cols();
    require(span_tau.cols() == n && outward_witness.size() == n,
            "primitive_quotient_generator: dimension mismatch");
    IMat b_sigma = saturate_rows(span_sigma);
    IMat b_tau = saturate_rows(span_tau);
    const Index r = b_sigma.rows();
    if (b_tau.rows() + 1 != r) fail(Errc::bad_corank, "quotient lattice is not rank one");

    // coordinates of the tau-basis inside the sigma-basis
    RMat bs_t = to_rational(b_sigma).transpose();  // n x r
    IMat coords(r - 1, r);
    for (Index i = 0; i < r - 1; ++i) {
        auto sol = solve(bs_t, to_rational(IVec(b_tau.row(i).transpose())));
        if (!sol) fail(Errc::bad_corank, "tau lattice does not embed in sigma lattice");
        coords.row(i) = to_integer(*sol).transpose();
    }

    // primitive functional phi on Z^r vanishing on the tau coordinates
    std::vector<RVec> ker = kernel_basis(to_rational(coords));
    if (ker.size() != 1) fail(Errc::bad_corank, "tau has corank != 1 in sigma");
    IVec phi = primitive_direction(ker[0]);

    // integer vector with phi . g == 1 via iterated extended gcd
    IVec g = IVec::Zero(r);
    Integer acc = 0;
    for (Index i = 0; i < r; ++i) {
        if (phi[i] == 0) continue;
        if (acc == 0) {
            // initialize with a +-1-producing start when possible
            g = IVec::Zero(r);
            g[i] = (phi[i] > 0) ? 1 : -1;
            acc = abs(phi[i]);
            continue;
        }
        Integer x, y, gg;
        // extended gcd(acc, phi[i])
        Integer a0 = acc, b0 = phi[i];
        Integer x0 = 1, y0 = 0, x1 = 0, y1 = 1;
        while (b0 != 0) {
            Integer q = a0 / b0;
            Integer t = a0 - q * b0; a0 = b0; b0 = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
            t = y0 - q * y1; y0 = y1; y1 = t;
        }
        gg = a0; x = x0; y = y0;
        if (gg < 0) { gg = -gg; x = -x; y = -y; }
        IVec gnew = x * g;
        gnew[i] += y;
        g = std::move(gnew);
        acc = gg;
        if (acc == 1) break;
    }
    require(acc == 1 && dot(phi, g) == 1, "quotient generator: gcd normalization failed");

    // orient by the witness: its sigma-coordinates pair with phi
    auto lam = solve(bs_t, outward_witness);
    require(lam.has_value(), "witness does not lie in the sigma span");
    Rational pairing = dot(phi, *lam);
    if (pairing == 0) fail(Errc::bad_corank, "witness lies in the tau span");
    if (pairing < 0) g = -g;

    // lift to Z^n and reduce into the canonical fundamental domain of tau
    IVec lifted = IVec::Zero(n);
    for (Index i = 0; i < r; ++i) lifted += g[i] * b_sigma.row(i).transpose();
    if (b_tau.rows() > 0) lifted = reduce_mod_lattice(lifted, b_tau);
    return lifted;
}

namespace {

Index affine_dim(const std::vector<RVec>& pts) {
    if (pts.empty()) return -1;
    RMat diffs(static_cast<Index>(pts.size()) - 1, pts[0].size());
    for (std::size_t i = 1; i < pts.size(); ++i)
        diffs.row(static_cast<Index>(i - 1)) = (pts[i] - pts[0]).transpose();
    return diffs.rows() == 0 ? 0 : rank(diffs);
}

bool lex_less(const RVec& a, const RVec& b) {
    for (Index i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

// Facets of conv(points) restricted to an affine span of dimension d:
// brute-force over d-subsets, each spanning a candidate hyperplane (within
// the span) with all points weakly on one side.
struct BruteFacet {
    std::vector<int> on;  // indices of points on the facet
};

std::vector<BruteFacet> brute_facets(const std::vector<RVec>& pts, Index d) {
    const int m = static_cast<int>(pts.size());
    std::vector<BruteFacet> facets;
    std::set<std::vector<int>> seen;
    std::vector<int> subset(static_cast<std::size_t>(d));
    // iterate over all d-subsets
    std::vector<int> idx(static_cast<std::size_t>(d));
    for (Index i = 0; i < d; ++i) idx[static_cast<std::size_t>(i)] = static_cast<int>(i);
    if (d > m) return facets;
    while (true) {
        // candidate hyperplane through pts[idx...]
        RMat diffs(d - 1, pts[0].size());
        for (Index i = 1; i < d; ++i)
            diffs.row(i - 1) = (pts[idx[static_cast<std::size_t>(i)]] - pts[idx[0]]).transpose();
        if (d == 1 || rank(diffs) == d - 1) {
            // find functional vanishing on diffs and nonconstant on the span:
            // restrict to span coordinates via all points
            // normal candidates: kernel of diffs within span of all diffs
            RMat alldiffs(m - 1, pts[0].size());
            for (int i = 1; i < m; ++i)
                alldiffs.row(i - 1) = (pts[static_cast<std::size_t>(i)] - pts[0]).transpose();
            // solve for functional y: diffs y = 0, restricted to row space of alldiffs:
            // parameterize y = alldiffs^T c
            RMat a = diffs * alldiffs.transpose();  // (d-1) x (m-1)
            std::vector<RVec> ker = kernel_basis(a);
            for (const RVec& c : ker) {
                RVec y = alldiffs.transpose() * c;
                if (is_zero(y)) continue;
                // classify all points
                Rational b0 = dot(y, pts[idx[0]]);
                int pos = 0, neg = 0;
                std::vector<int> on;
                for (int i = 0; i < m; ++i) {
                    Rational s = dot(y, pts[static_cast<std::size_t>(i)]) - b0;
                    if (s > 0) ++pos;
                    else if (s < 0) ++neg;
                    else on.push_back(i);
                }
                if (pos != 0 && neg != 0) continue;
                if (static_cast<Index>(on.size()) < d) continue;
                if (affine_dim([&] {
                        std::vector<RVec> sub;
                        for (int i : on) sub.push_back(pts[static_cast<std::size_t>(i)]);
                        return sub;
                    }()) != d - 1)
                    continue;
                if (seen.insert(on).second) facets.push_back(BruteFacet{std::move(on)});
                break;  // one kernel direction suffices for this subset
            }
        }
        // next subset
        Index k = d - 1;
        while (k >= 0 && idx[static_cast<std::size_t>(k)] == m - static_cast<int>(d) + static_cast<int>(k)) --k;
        if (k < 0) break;
        ++idx[static_cast<std::size_t>(k)];
        for (Index j = k + 1; j < d; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return facets;
}

void triangulate_rec(const std::vector<RVec>& all, std::vector<int> live, Index d,
                     std::vector<std::vector<int>>& out, std::vector<int>& partial) {
    std::vector<RVec> pts;
    pts.reserve(live.size());
    for (int i : live) pts.push_back(all[static_cast<std::size_t>(i)]);
    if (d == 0) {
        require(!live.empty(), "triangulate: empty point set");
        partial.push_back(live[0]);
        out.push_back(partial);
        std::sort(out.back().begin(), out.back().end());
        partial.pop_back();
        return;
    }
    if (static_cast<Index>(live.size()) == d + 1) {
        std::vector<int> simplex = partial;
        simplex.insert(simplex.end(), live.begin(), live.end());
        std::sort(simplex.begin(), simplex.end());
        out.push_back(std::move(simplex));
        return;
    }
    // apex: lexicographically smallest live point
    int apex = live[0];
    for (int i : live)
        if (lex_less(all[static_cast<std::size_t>(i)], all[static_cast<std::size_t>(apex)])) apex = i;
    auto facets = brute_facets(pts, d);
    require(!facets.empty(), "triangulate: no facets found");
    partial.push_back(apex);
    for (const auto& f : facets) {
        bool has_apex = false;
        std::vector<int> sub;
        for (int local : f.on) {
            int global = live[static_cast<std::size_t>(local)];
            if (global == apex) has_apex = true;
            sub.push_back(global);
        }
        if (has_apex) continue;
        triangulate_rec(all, sub, d - 1, out, partial);
    }
    partial.pop_back();
}

}  // namespace

std::vector<std::vector<int>> triangulate_points(const std::vector<RVec>& points, Index d) {
    std::vector<int> live(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) live[i] = static_cast<int>(i);
    std::vector<std::vector<int>> out;
    std::vector<int> partial;
    triangulate_rec(points, live, d, out, partial);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Rational normalized_volume(const std::vector<RVec>& points_in, Index d) {
    require(!points_in.empty(), "normalized_volume: no points");
    // dedupe
    std::vector<RVec> pts;
    for (const RVec& p : points_in) {
        bool dup = false;
        for (const RVec& q : pts)
            if (vec_eq(p, q)) { dup = true; break; }
        if (!dup) pts.push_back(p);
    }
    const Index n = pts[0].size();
    if (affine_dim(pts) != d)
        fail(Errc::dimension_mismatch, "points do not affinely span dimension " + std::to_string(d));
    if (d == 0) return Rational(1);

    // scale to integer points: vol_norm(M p) = M^d vol_norm(p)
    Integer scale = 1;
    for (const RVec& p : pts) scale = lcm(scale, common_denominator(p));
    std::vector<IVec> ipts;
    for (const RVec& p : pts) ipts.push_back(to_integer(RVec(p * Rational(scale))));

    // basis of the translated affine lattice
    IMat diffs(static_cast<Index>(ipts.size()) - 1, n);
    for (std::size_t i = 1; i < ipts.size(); ++i)
        diffs.row(static_cast<Index>(i - 1)) = (ipts[i] - ipts[0]).transpose();
    IMat lat = saturate_rows(diffs);
    require(lat.rows() == d, "normalized_volume: lattice rank mismatch");

    // lattice coordinates of each point
    RMat lat_t = to_rational(lat).transpose();
    std::vector<RVec> coords;
    for (const IVec& p : ipts) {
        auto c = solve(lat_t, to_rational(IVec(p - ipts[0])));
        require(c.has_value(), "normalized_volume: point outside lattice span");
        coords.push_back(*c);
    }

    Rational vol = 0;
    for (const auto& simplex : triangulate_points(coords, d)) {
        RMat e(d, d);
        for (Index i = 0; i < d; ++i)
            e.row(i) = (coords[static_cast<std::size_t>(simplex[static_cast<std::size_t>(i + 1)])] -
                        coords[static_cast<std::size_t>(simplex[0])])
                           .transpose();
        vol += abs(determinant(e));
    }
    // undo the integer scaling
    Rational unscale = 1;
    for (Index i = 0; i < d; ++i) unscale *= Rational(scale);
    return vol / unscale;
}

}  // namespace tropicap::ratlin
