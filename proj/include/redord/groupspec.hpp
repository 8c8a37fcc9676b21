#pragma once

// A product group G = G_m^k x (elliptic factors) together with a
// rational point R on it, factor by factor. Elliptic factors carry an
// optional torsion translate and a block label; factors sharing a block
// share the same curve and base point.

#include "redord/ecurve.hpp"
#include "redord/rational.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace redord {

struct TorusCoord {
    FactoredRational r;
};

struct EllipticFactor {
    CurveQ curve;
    PointQ base_point;
    std::optional<PointQ> translate;
    std::string block_id;  // empty: the factor forms its own block
};

using FactorSpec = std::variant<TorusCoord, EllipticFactor>;

// Structural hypotheses the artifact cannot verify: recorded, echoed in
// reports, never silently assumed away.
struct Assertions {
    bool non_isogenous_blocks = true;
    bool no_cm = true;
};

struct EllipticBlock {
    std::string id;
    CurveQ curve;
    PointQ base_point;
    std::vector<std::size_t> factor_indices;      // positions in spec.factors
    std::vector<PointQ> translates;               // infinity when absent
};

struct GroupPointSpec {
    std::vector<FactorSpec> factors;
    Assertions assertions;

    std::size_t size() const { return factors.size(); }
    bool has_elliptic() const;
    std::vector<FactoredRational> torus_coords() const;

    // Blocks in order of first appearance; factors with an empty
    // block_id become singleton blocks. Throws std::invalid_argument if
    // members of one block disagree on curve or base point.
    std::vector<EllipticBlock> elliptic_blocks() const;

    // true iff some factor carries infinite order (non-torsion torus
    // coordinate or infinite-order elliptic base point)
    bool has_infinite_order() const;

    std::string describe() const;  // one line, e.g. "gm(-4) gm(2)"
};

}  // namespace redord
