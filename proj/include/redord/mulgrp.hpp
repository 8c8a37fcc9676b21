#pragma once

// Relation lattices of tuples in Q^*: the integer relations
// Lambda = {v : prod r_i^{v_i} = 1}, including the sign condition, cut
// out the smallest torus subgroup containing the tuple. The torsion
// order of Z^k / Lambda is the component count of that subgroup.

#include "redord/intlin.hpp"
#include "redord/rational.hpp"

namespace redord {

struct TorusTupleReport {
    Eigen::Index dimension = 0;   // k - rank(relation lattice)
    Int n_components = 1;
    IntLattice relation_lattice;
    bool independent = false;     // relation lattice is zero
    bool torsion = false;         // every coordinate is +-1
};

// Exponent matrix of the tuple: row i holds the exponents of tuple[i]
// over the union of all supports (columns sorted by prime).
IMat exponent_matrix(const std::vector<FactoredRational>& tuple);

// Basis of {v in Z^k : prod r_i^{v_i} = 1}. Computed as the left kernel
// of the exponent matrix intersected with the sign-parity condition
// (an index-1-or-2 sublattice), via HNF of an augmented system.
IntLattice relation_lattice(const std::vector<FactoredRational>& tuple);

TorusTupleReport torus_report(const std::vector<FactoredRational>& tuple);

}  // namespace redord
