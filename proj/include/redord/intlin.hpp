#pragma once

// Exact integer linear algebra on dense Eigen matrices with
// arbitrary-precision entries: Hermite and Smith normal forms, left
// kernels, lattice saturation, and the torsion order of a lattice
// quotient. Matrices stay tiny here (tens of rows and columns at most),
// so the classical elimination algorithms suffice; entry growth is
// contained by always pivoting on the smallest nonzero entry.

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <vector>

// Boost probes candidate cpp_int constructor arguments with a
// byte-container trait that dereferences C::const_iterator, and Eigen
// defines const_iterator as void on two-dimensional types; tell Boost
// directly that dense matrices are not byte containers.
namespace boost::multiprecision::detail {
template <class S, int R, int C, int O, int MR, int MC>
struct is_byte_container<Eigen::Matrix<S, R, C, O, MR, MC>> : public boost::false_type {};
}  // namespace boost::multiprecision::detail

namespace redord {

using Int = boost::multiprecision::cpp_int;
using IMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IRow = Eigen::Matrix<Int, 1, Eigen::Dynamic>;

// Quotient of floored division: unique q with a = q*b + r, 0 <= r < |b|.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Construct-by-assign: the arbitrary-precision scalar's converting
// constructors reject direct Matrix construction from lazy expression
// types (products, nullary expressions), assignment is fine.
template <typename Derived>
IMat to_mat(const Eigen::MatrixBase<Derived>& e) {
    IMat m(e.rows(), e.cols());
    m = e;
    return m;
}

inline bool same_matrix(const IMat& a, const IMat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

// Row-style Hermite normal form of the row lattice of M. Zero rows are
// dropped; pivots are positive, pivot columns strictly increase, and
// entries above a pivot are reduced into [0, pivot). The result is a
// canonical basis, so two row lattices are equal iff their HNFs are
// equal entrywise.
template <typename Derived>
IMat hnf(const Eigen::MatrixBase<Derived>& M_in) {
    IMat A = M_in;
    const Eigen::Index m = A.rows(), n = A.cols();
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < n && r < m; ++c) {
        // Euclid on column c until at most one nonzero remains below r.
        for (;;) {
            Eigen::Index piv = -1;
            for (Eigen::Index i = r; i < m; ++i) {
                if (A(i, c) == 0) continue;
                if (piv < 0 || abs(A(i, c)) < abs(A(piv, c))) piv = i;
            }
            if (piv < 0) break;
            if (piv != r) A.row(piv).swap(A.row(r));
            bool residue = false;
            for (Eigen::Index i = r + 1; i < m; ++i) {
                if (A(i, c) == 0) continue;
                Int q = A(i, c) / A(r, c);  // truncated: |remainder| < |pivot|
                if (q != 0) A.row(i) -= q * A.row(r);
                if (A(i, c) != 0) residue = true;
            }
            if (!residue) break;
        }
        if (A(r, c) == 0) continue;
        if (A(r, c) < 0) A.row(r) = -A.row(r);
        for (Eigen::Index i = 0; i < r; ++i) {
            Int q = floor_div(A(i, c), A(r, c));
            if (q != 0) A.row(i) -= q * A.row(r);
        }
        ++r;
    }
    return A.topRows(r);
}

struct HnfTransform {
    IMat h;          // full m x n echelon matrix, zero rows at the bottom
    IMat u;          // unimodular, u * M = h
    Eigen::Index rank = 0;
};

// Same elimination as hnf() but with the unimodular row transform
// recorded; rows of u below `rank` span the left kernel of M.
template <typename Derived>
HnfTransform hnf_with_transform(const Eigen::MatrixBase<Derived>& M_in) {
    IMat A = M_in;
    const Eigen::Index m = A.rows(), n = A.cols();
    IMat U(m, m);
    U.setIdentity();
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < n && r < m; ++c) {
        for (;;) {
            Eigen::Index piv = -1;
            for (Eigen::Index i = r; i < m; ++i) {
                if (A(i, c) == 0) continue;
                if (piv < 0 || abs(A(i, c)) < abs(A(piv, c))) piv = i;
            }
            if (piv < 0) break;
            if (piv != r) {
                A.row(piv).swap(A.row(r));
                U.row(piv).swap(U.row(r));
            }
            bool residue = false;
            for (Eigen::Index i = r + 1; i < m; ++i) {
                if (A(i, c) == 0) continue;
                Int q = A(i, c) / A(r, c);
                if (q != 0) {
                    A.row(i) -= q * A.row(r);
                    U.row(i) -= q * U.row(r);
                }
                if (A(i, c) != 0) residue = true;
            }
            if (!residue) break;
        }
        if (A(r, c) == 0) continue;
        if (A(r, c) < 0) {
            A.row(r) = -A.row(r);
            U.row(r) = -U.row(r);
        }
        for (Eigen::Index i = 0; i < r; ++i) {
            Int q = floor_div(A(i, c), A(r, c));
            if (q != 0) {
                A.row(i) -= q * A.row(r);
                U.row(i) -= q * U.row(r);
            }
        }
        ++r;
    }
    return {std::move(A), std::move(U), r};
}

// Invariant factors d_1 | d_2 | ... | d_r of M (Smith normal form
// diagonal, zero factors dropped). Classical two-sided elimination with
// min-abs pivoting and a divisibility fix-up pass.
template <typename Derived>
std::vector<Int> snf_divisors(const Eigen::MatrixBase<Derived>& M_in) {
    IMat A = M_in;
    const Eigen::Index m = A.rows(), n = A.cols();
    std::vector<Int> d;
    for (Eigen::Index s = 0; s < std::min(m, n); ++s) {
        // move the smallest nonzero entry of A[s:, s:] to (s, s)
        Eigen::Index pi = -1, pj = -1;
        for (Eigen::Index i = s; i < m; ++i)
            for (Eigen::Index j = s; j < n; ++j) {
                if (A(i, j) == 0) continue;
                if (pi < 0 || abs(A(i, j)) < abs(A(pi, pj))) { pi = i; pj = j; }
            }
        if (pi < 0) break;  // submatrix is zero
        if (pi != s) A.row(pi).swap(A.row(s));
        if (pj != s) A.col(pj).swap(A.col(s));

        for (;;) {
            bool dirty = false;
            for (Eigen::Index i = s + 1; i < m; ++i) {
                if (A(i, s) == 0) continue;
                Int q = A(i, s) / A(s, s);
                if (q != 0) A.row(i) -= q * A.row(s);
                if (A(i, s) != 0) {
                    A.row(i).swap(A.row(s));
                    dirty = true;
                }
            }
            if (dirty) continue;
            for (Eigen::Index j = s + 1; j < n; ++j) {
                if (A(s, j) == 0) continue;
                Int q = A(s, j) / A(s, s);
                if (q != 0) A.col(j) -= q * A.col(s);
                if (A(s, j) != 0) {
                    A.col(j).swap(A.col(s));
                    dirty = true;
                }
            }
            if (dirty) continue;
            // pivot must divide the rest of the submatrix
            Eigen::Index bad = -1;
            for (Eigen::Index i = s + 1; i < m && bad < 0; ++i)
                for (Eigen::Index j = s + 1; j < n; ++j)
                    if (A(i, j) % A(s, s) != 0) { bad = i; break; }
            if (bad < 0) break;
            A.row(s) += A.row(bad);
        }
        if (A(s, s) < 0) A(s, s) = -A(s, s);
        d.push_back(A(s, s));
    }
    return d;
}

// A sublattice of Z^k given by a basis in canonical (HNF) form. The
// empty basis is the zero lattice; a full-rank saturated lattice may be
// all of Z^k.
struct IntLattice {
    Eigen::Index ambient_rank = 0;
    IMat basis;  // rank x ambient_rank, rows Z-independent, HNF

    static IntLattice zero(Eigen::Index k) { return {k, IMat(0, k)}; }

    static IntLattice full(Eigen::Index k) {
        IMat b(k, k);
        b.setIdentity();
        return {k, std::move(b)};
    }

    // Canonicalizes arbitrary spanning rows via HNF.
    static IntLattice from_rows(const IMat& rows) {
        return {rows.cols(), hnf(rows)};
    }

    Eigen::Index rank() const { return basis.rows(); }
    bool is_zero() const { return basis.rows() == 0; }

    bool operator==(const IntLattice& o) const {
        return ambient_rank == o.ambient_rank && same_matrix(basis, o.basis);
    }

    // Membership by reduction against the HNF basis.
    bool contains(const IRow& v) const {
        if (v.cols() != ambient_rank) return false;
        IRow w = v;
        for (Eigen::Index i = 0; i < basis.rows(); ++i) {
            Eigen::Index c = 0;
            while (c < ambient_rank && basis(i, c) == 0) ++c;
            if (w(c) % basis(i, c) != 0) return false;
            Int q = w(c) / basis(i, c);
            if (q != 0) w -= q * basis.row(i);
        }
        for (Eigen::Index c = 0; c < ambient_rank; ++c)
            if (w(c) != 0) return false;
        return true;
    }
};

// Basis of {v in Z^m : v * M = 0}. Kernels of Z-linear maps are
// saturated, so no further saturation is needed.
template <typename Derived>
IntLattice left_kernel(const Eigen::MatrixBase<Derived>& M_in) {
    HnfTransform t = hnf_with_transform(M_in);
    const Eigen::Index m = t.u.rows();
    IMat ker = t.u.bottomRows(m - t.rank);
    return IntLattice::from_rows(ker);
}

// Order of the torsion subgroup of Z^k / L: the product of the
// invariant factors of the basis matrix, i.e. the index [L_sat : L].
inline Int torsion_order_of_quotient(const IntLattice& L) {
    Int n = 1;
    for (const Int& di : snf_divisors(L.basis)) n *= di;
    return n;
}

// Smallest saturated lattice containing L: the rational row span
// intersected with Z^k, computed as the double orthogonal complement
// left_kernel(left_kernel(B^T)^T).
inline IntLattice saturate(const IntLattice& L) {
    if (L.is_zero()) return L;
    IMat bt = L.basis.transpose();
    IntLattice right = left_kernel(bt);      // rows span {x : B x = 0}
    IMat rt = right.basis.transpose();       // k x (k - rank)
    return left_kernel(rt);
}

}  // namespace redord
