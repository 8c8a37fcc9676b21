#include "redord/predictor.hpp"

#include <numeric>

namespace redord {

namespace {

// exact order of X_i - X_first on the block's curve
u64 block_components(const EllipticBlock& blk) {
    const CurveQ& E = blk.curve;

    const PointClass base = classify_point(E, blk.base_point);
    if (base.is_torsion)
        throw UnsupportedConfig(
            "block '" + blk.id +
            "': base point has finite order " + std::to_string(base.order) +
            "; only infinite-order base points are supported");

    for (const PointQ& X : blk.translates) {
        const PointClass c = classify_point(E, X);
        if (!c.is_torsion)
            throw UnsupportedConfig("block '" + blk.id +
                                    "': translate has infinite order");
    }

    u64 n = 1;
    const PointQ& X1 = blk.translates.front();
    for (const PointQ& Xi : blk.translates) {
        const PointQ diff = add_q(E, Xi, neg_q(X1));
        const PointClass c = classify_point(E, diff);
        // differences of rational torsion points are rational torsion
        n = std::lcm(n, static_cast<u64>(c.order));
    }
    return n;
}

}  // namespace

Prediction predict(const GroupPointSpec& spec) {
    if (spec.factors.empty())
        throw std::invalid_argument("predict: empty spec");

    Prediction out;
    out.torsion = !spec.has_infinite_order();

    const std::vector<FactoredRational> torus = spec.torus_coords();
    if (!torus.empty()) {
        TorusTupleReport rep = torus_report(torus);
        out.has_torus = true;
        out.torus_lattice = rep.relation_lattice;
        out.dimension += rep.dimension;
        if (rep.n_components > (Int(1) << 62))
            throw UnsupportedConfig("torus component count out of range");
        const u64 nt = rep.n_components.convert_to<u64>();
        out.n_components = nt;
        out.block_components.emplace_back("torus", nt);
    }

    const std::vector<EllipticBlock> blocks = spec.elliptic_blocks();
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        for (std::size_t j = i + 1; j < blocks.size(); ++j) {
            if (blocks[i].curve == blocks[j].curve)
                throw UnsupportedConfig(
                    "blocks '" + blocks[i].id + "' and '" + blocks[j].id +
                    "' share a curve; cross-block relations are not supported");
        }
    }
    for (const EllipticBlock& blk : blocks) {
        const u64 nb = block_components(blk);
        out.n_components = std::lcm(out.n_components, nb);
        out.dimension += 1;
        out.block_components.emplace_back(blk.id, nb);
    }

    bool torus_independent = torus.empty() || out.torus_lattice.is_zero();
    bool elliptic_independent = true;
    for (const EllipticBlock& blk : blocks) {
        if (blk.factor_indices.size() != 1 || !blk.translates.front().infinity)
            elliptic_independent = false;
    }
    bool flags = blocks.empty() ||
                 (spec.assertions.non_isogenous_blocks && spec.assertions.no_cm);
    out.independent = !out.torsion && torus_independent && elliptic_independent && flags;

    return out;
}

u64 predicted_nr(const GroupPointSpec& spec) { return predict(spec).n_components; }

bool is_independent(const GroupPointSpec& spec) { return predict(spec).independent; }

}  // namespace redord
