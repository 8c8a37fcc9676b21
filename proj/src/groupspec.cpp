#include "redord/groupspec.hpp"

#include <map>
#include <stdexcept>

namespace redord {

namespace {

std::string rat_str(const Rat& v) {
    std::string s = numerator(v).str();
    if (denominator(v) != 1) s += "/" + denominator(v).str();
    return s;
}

std::string point_str(const PointQ& P) {
    if (P.infinity) return "O";
    return "(" + rat_str(P.x) + "," + rat_str(P.y) + ")";
}

}  // namespace

bool GroupPointSpec::has_elliptic() const {
    for (const auto& f : factors)
        if (std::holds_alternative<EllipticFactor>(f)) return true;
    return false;
}

std::vector<FactoredRational> GroupPointSpec::torus_coords() const {
    std::vector<FactoredRational> out;
    for (const auto& f : factors)
        if (const auto* t = std::get_if<TorusCoord>(&f)) out.push_back(t->r);
    return out;
}

std::vector<EllipticBlock> GroupPointSpec::elliptic_blocks() const {
    std::vector<EllipticBlock> blocks;
    std::map<std::string, std::size_t> by_id;
    int anon = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto* e = std::get_if<EllipticFactor>(&factors[i]);
        if (!e) continue;
        std::string id = e->block_id.empty()
                             ? "#" + std::to_string(anon++)
                             : e->block_id;
        auto it = by_id.find(id);
        if (it == by_id.end()) {
            by_id.emplace(id, blocks.size());
            blocks.push_back({id, e->curve, e->base_point, {}, {}});
            it = by_id.find(id);
        }
        EllipticBlock& blk = blocks[it->second];
        if (!(blk.curve == e->curve) || !(blk.base_point == e->base_point))
            throw std::invalid_argument(
                "block '" + id + "': factors must share the same curve and base point");
        blk.factor_indices.push_back(i);
        blk.translates.push_back(e->translate.value_or(PointQ::make_infinity()));
    }
    return blocks;
}

bool GroupPointSpec::has_infinite_order() const {
    for (const auto& f : factors) {
        if (const auto* t = std::get_if<TorusCoord>(&f)) {
            if (!t->r.is_torsion()) return true;
        } else {
            const auto& e = std::get<EllipticFactor>(f);
            if (!classify_point(e.curve, e.base_point).is_torsion) return true;
        }
    }
    return false;
}

std::string GroupPointSpec::describe() const {
    std::string s;
    for (const auto& f : factors) {
        if (!s.empty()) s += " ";
        if (const auto* t = std::get_if<TorusCoord>(&f)) {
            s += "gm(" + t->r.str() + ")";
        } else {
            const auto& e = std::get<EllipticFactor>(f);
            s += "ec[a=" + std::to_string(e.curve.a) + ",b=" + std::to_string(e.curve.b) +
                 "]" + point_str(e.base_point);
            if (e.translate) s += "+" + point_str(*e.translate);
            if (!e.block_id.empty()) s += "@" + e.block_id;
        }
    }
    return s;
}

}  // namespace redord
