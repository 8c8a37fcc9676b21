#include "redord/config.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>

namespace redord {

namespace {

struct Cursor {
    int line = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ConfigError("config line " + std::to_string(line) + ": " + msg);
    }
};

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string strip_comment(const std::string& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if ((s[i] == '#' || s[i] == ';') &&
            (i == 0 || s[i - 1] == ' ' || s[i - 1] == '\t'))
            return s.substr(0, i);
    }
    return s;
}

std::int64_t parse_i64(const std::string& s, const Cursor& c) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        c.fail("expected an integer, got '" + s + "'");
    return v;
}

u64 parse_u64(const std::string& s, const Cursor& c) {
    u64 v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        c.fail("expected a nonnegative integer, got '" + s + "'");
    return v;
}

Rat parse_rat(const std::string& s, const Cursor& c) {
    const std::size_t slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_i64(s, c));
    const std::int64_t num = parse_i64(s.substr(0, slash), c);
    const std::int64_t den = parse_i64(s.substr(slash + 1), c);
    if (den == 0) c.fail("zero denominator in '" + s + "'");
    return Rat(num, den);
}

std::vector<u64> parse_u64_list(const std::string& s, const Cursor& c) {
    std::vector<u64> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(parse_u64(item, c));
    }
    if (out.empty()) c.fail("expected a comma-separated list of integers");
    return out;
}

bool parse_bool(const std::string& s, const Cursor& c) {
    if (s == "true" || s == "yes" || s == "1") return true;
    if (s == "false" || s == "no" || s == "0") return false;
    c.fail("expected a boolean, got '" + s + "'");
}

// "key value", "key = value" and bare "key" all accepted
std::pair<std::string, std::string> split_key_value(const std::string& s) {
    std::size_t i = 0;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '=') ++i;
    std::string key = s.substr(0, i);
    std::string rest = trim(s.substr(i));
    if (!rest.empty() && rest.front() == '=') rest = trim(rest.substr(1));
    return {key, rest};
}

EllipticFactor parse_ec(const std::string& args, const Cursor& c) {
    std::optional<std::int64_t> a, b;
    std::optional<Rat> px, py, tx, ty;
    std::string block;
    std::stringstream ss(args);
    std::string tok;
    while (ss >> tok) {
        const std::size_t eq = tok.find('=');
        if (eq == std::string::npos) c.fail("expected key=value, got '" + tok + "'");
        const std::string k = tok.substr(0, eq), v = tok.substr(eq + 1);
        if (k == "a") a = parse_i64(v, c);
        else if (k == "b") b = parse_i64(v, c);
        else if (k == "px") px = parse_rat(v, c);
        else if (k == "py") py = parse_rat(v, c);
        else if (k == "tx") tx = parse_rat(v, c);
        else if (k == "ty") ty = parse_rat(v, c);
        else if (k == "block") block = v;
        else c.fail("unknown ec field '" + k + "'");
    }
    if (!a || !b || !px || !py) c.fail("ec factor needs a=, b=, px=, py=");
    if (tx.has_value() != ty.has_value()) c.fail("ec translate needs both tx= and ty=");

    EllipticFactor f;
    f.curve = CurveQ{*a, *b};
    if (f.curve.is_singular()) c.fail("singular curve (discriminant is zero)");
    f.base_point = PointQ::affine(*px, *py);
    if (!on_curve(f.curve, f.base_point)) c.fail("base point is not on the curve");
    if (tx) {
        PointQ t = PointQ::affine(*tx, *ty);
        if (!on_curve(f.curve, t)) c.fail("translate is not on the curve");
        if (!classify_point(f.curve, t).is_torsion)
            c.fail("translate has infinite order; translates must be torsion points");
        f.translate = std::move(t);
    }
    f.block_id = block;
    return f;
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
    ExperimentConfig cfg;
    enum class Section { None, Group, Scan, Density, Verify } section = Section::None;
    Cursor cur;

    std::stringstream ss(text);
    std::string raw;
    while (std::getline(ss, raw)) {
        ++cur.line;
        const std::string line = trim(strip_comment(raw));
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') cur.fail("unterminated section header");
            const std::string name = line.substr(1, line.size() - 2);
            if (name == "group") section = Section::Group;
            else if (name == "scan") section = Section::Scan;
            else if (name == "density") {
                section = Section::Density;
                cfg.densities.emplace_back();
            } else if (name == "verify") section = Section::Verify;
            else cur.fail("unknown section [" + name + "]");
            continue;
        }

        auto [key, value] = split_key_value(line);
        switch (section) {
            case Section::None:
                cur.fail("'" + key + "' appears before any section header");
            case Section::Group: {
                if (key == "gm") {
                    const std::size_t slash = value.find('/');
                    std::int64_t num, den = 1;
                    if (slash == std::string::npos) {
                        num = parse_i64(value, cur);
                    } else {
                        num = parse_i64(value.substr(0, slash), cur);
                        den = parse_i64(value.substr(slash + 1), cur);
                    }
                    if (num == 0 || den == 0)
                        cur.fail("gm factor must be a nonzero rational");
                    cfg.spec.factors.emplace_back(TorusCoord{factor_rational(num, den)});
                } else if (key == "ec") {
                    cfg.spec.factors.emplace_back(parse_ec(value, cur));
                } else if (key == "assert_non_isogenous") {
                    cfg.spec.assertions.non_isogenous_blocks = parse_bool(value, cur);
                } else if (key == "assert_no_cm") {
                    cfg.spec.assertions.no_cm = parse_bool(value, cur);
                } else {
                    cur.fail("unknown factor kind '" + key + "' (expected gm or ec)");
                }
                break;
            }
            case Section::Scan: {
                if (key == "range") {
                    const std::size_t dots = value.find("..");
                    if (dots == std::string::npos)
                        cur.fail("range must look like lo..hi");
                    cfg.lo = parse_u64(trim(value.substr(0, dots)), cur);
                    cfg.hi = parse_u64(trim(value.substr(dots + 2)), cur);
                    if (cfg.lo < 2 || cfg.lo > cfg.hi)
                        cur.fail("malformed range: need 2 <= lo <= hi");
                } else if (key == "burn_in") {
                    cfg.burn_in = parse_u64(value, cur);
                } else if (key == "ells") {
                    for (u64 e : parse_u64_list(value, cur)) cfg.ells.insert(e);
                } else if (key == "threads") {
                    cfg.threads = static_cast<unsigned>(parse_u64(value, cur));
                    if (cfg.threads == 0) cur.fail("threads must be >= 1");
                } else if (key == "out") {
                    cfg.out_path = value;
                } else {
                    cur.fail("unknown [scan] key '" + key + "'");
                }
                break;
            }
            case Section::Density: {
                DensityRequest& d = cfg.densities.back();
                if (key == "kind") {
                    if (value == "valuation") d.kind = DensityRequest::Kind::Valuation;
                    else if (value == "joint") d.kind = DensityRequest::Kind::Joint;
                    else if (value == "multiple") d.kind = DensityRequest::Kind::Multiple;
                    else if (value == "coprime") d.kind = DensityRequest::Kind::Coprime;
                    else cur.fail("unknown density kind '" + value + "'");
                } else if (key == "m") {
                    d.m = parse_u64(value, cur);
                } else if (key == "m_list") {
                    d.m_list = parse_u64_list(value, cur);
                } else if (key == "ells") {
                    for (u64 e : parse_u64_list(value, cur)) d.ells.insert(e);
                } else if (key == "threshold") {
                    try {
                        d.threshold = std::stod(value);
                    } catch (...) {
                        cur.fail("threshold must be a number");
                    }
                } else {
                    cur.fail("unknown [density] key '" + key + "'");
                }
                break;
            }
            case Section::Verify: {
                if (key == "expected_nr") {
                    cfg.expected_nr = parse_u64(value, cur);
                    if (*cfg.expected_nr == 0) cur.fail("expected_nr must be positive");
                } else {
                    cur.fail("unknown [verify] key '" + key + "'");
                }
                break;
            }
        }
    }

    if (cfg.spec.factors.empty())
        throw ConfigError("config: [group] must declare at least one factor");
    if (cfg.burn_in && (*cfg.burn_in < cfg.lo || *cfg.burn_in > cfg.hi))
        throw ConfigError("config: burn_in must lie inside the scan range");
    for (const DensityRequest& d : cfg.densities) {
        const bool joint = d.kind == DensityRequest::Kind::Joint;
        if (joint && d.m_list.empty())
            throw ConfigError("config: joint density needs m_list");
        if (!joint && d.m == 0)
            throw ConfigError("config: density needs m");
        if ((d.kind == DensityRequest::Kind::Valuation || joint) && d.ells.empty())
            throw ConfigError("config: valuation/joint density needs ells");
    }
    return cfg;
}

ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace redord
