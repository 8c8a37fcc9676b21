#include "redord/mulgrp.hpp"

#include <set>
#include <stdexcept>

namespace redord {

IMat exponent_matrix(const std::vector<FactoredRational>& tuple) {
    std::set<u64> primes;
    for (const auto& r : tuple)
        for (const auto& [p, e] : r.exponents) primes.insert(p);
    std::vector<u64> cols(primes.begin(), primes.end());

    IMat E(static_cast<Eigen::Index>(tuple.size()), static_cast<Eigen::Index>(cols.size()));
    E.setZero();
    for (Eigen::Index i = 0; i < E.rows(); ++i)
        for (Eigen::Index j = 0; j < E.cols(); ++j) {
            auto it = tuple[i].exponents.find(cols[j]);
            if (it != tuple[i].exponents.end()) E(i, j) = it->second;
        }
    return E;
}

IntLattice relation_lattice(const std::vector<FactoredRational>& tuple) {
    if (tuple.empty())
        throw std::invalid_argument("relation_lattice: empty tuple");
    const Eigen::Index k = static_cast<Eigen::Index>(tuple.size());

    IntLattice k0 = left_kernel(exponent_matrix(tuple));
    const Eigen::Index r = k0.rank();
    if (r == 0) return k0;

    // parity of each kernel basis vector against the sign characters
    bool any_odd = false;
    IMat aug(r + 1, k + 1);
    aug.setZero();
    for (Eigen::Index i = 0; i < r; ++i) {
        Int w = 0;
        for (Eigen::Index j = 0; j < k; ++j)
            if (tuple[j].sign) w += k0.basis(i, j);
        Int par = ((w % 2) + 2) % 2;
        if (par != 0) any_odd = true;
        aug(i, 0) = par;
        aug.row(i).tail(k) = k0.basis.row(i);
    }
    if (!any_odd) return k0;

    aug(r, 0) = 2;
    IMat h = hnf(aug);
    // rows with zero parity column span the even-parity sublattice
    Eigen::Index start = 0;
    while (start < h.rows() && h(start, 0) != 0) ++start;
    IMat basis = h.block(start, 1, h.rows() - start, k);
    return IntLattice::from_rows(basis);
}

TorusTupleReport torus_report(const std::vector<FactoredRational>& tuple) {
    TorusTupleReport rep;
    rep.relation_lattice = relation_lattice(tuple);
    const Eigen::Index k = static_cast<Eigen::Index>(tuple.size());
    rep.dimension = k - rep.relation_lattice.rank();
    rep.n_components = torsion_order_of_quotient(rep.relation_lattice);
    rep.independent = rep.relation_lattice.is_zero();
    rep.torsion = true;
    for (const auto& r : tuple)
        if (!r.is_torsion()) rep.torsion = false;
    return rep;
}

}  // namespace redord
