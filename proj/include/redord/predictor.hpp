#pragma once

// Theoretical component count n_R of the smallest algebraic subgroup
// containing R, for the supported configuration families:
//   (a) the torus block, via its relation lattice;
//   (b) a single elliptic factor with an infinite-order point;
//   (c) an elliptic block of translates P + X_i of one infinite-order
//       base point by torsion points.
// Block values combine by lcm (the component group is cyclic, generated
// by R, and projects onto each block's component group). Anything
// outside (a)-(c) is an explicit unsupported error, never a guess.

#include "redord/groupspec.hpp"
#include "redord/mulgrp.hpp"

#include <stdexcept>

namespace redord {

struct UnsupportedConfig : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Prediction {
    u64 n_components = 1;
    Eigen::Index dimension = 0;  // dim of the subgroup closure
    bool independent = false;
    bool torsion = false;        // R itself has finite order
    bool has_torus = false;
    IntLattice torus_lattice;    // ambient = number of torus coordinates
    std::vector<std::pair<std::string, u64>> block_components;  // per block
};

Prediction predict(const GroupPointSpec& spec);

u64 predicted_nr(const GroupPointSpec& spec);

// true iff the torus block has zero relation lattice, every elliptic
// block is a single untranslated infinite-order factor, and the
// structural assertions hold (under which the closure is all of G)
bool is_independent(const GroupPointSpec& spec);

}  // namespace redord
