#pragma once

// Line-oriented experiment configs, INI-style sections:
//
//   [group]
//   gm -4
//   gm 2
//   ec a=-25 b=0 px=-4 py=6 tx=0 ty=0 block=B1
//   assert_non_isogenous = true
//   assert_no_cm = true
//
//   [scan]
//   range = 3..100000
//   burn_in = 10
//   ells = 2,3
//   threads = 1
//   out = scan.csv
//
//   [density]            (section may repeat)
//   kind = valuation     (valuation | joint | multiple | coprime)
//   m = 4
//   m_list = 1,2         (joint only)
//   ells = 2
//   threshold = 0.01
//
//   [verify]
//   expected_nr = 2
//
// '=' after a key is optional; '#' and ';' start comments. Full grammar
// in the README.

#include "redord/groupspec.hpp"
#include "redord/numtheory.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace redord {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DensityRequest {
    enum class Kind { Valuation, Joint, Multiple, Coprime };
    Kind kind = Kind::Valuation;
    u64 m = 0;
    std::vector<u64> m_list;
    std::set<u64> ells;
    double threshold = 0.0;  // verify fails unless wilson_low > threshold
};

struct ExperimentConfig {
    GroupPointSpec spec;
    u64 lo = 3;
    u64 hi = 100000;
    std::optional<u64> burn_in;  // defaults to lo
    std::set<u64> ells;
    unsigned threads = 1;
    std::optional<std::string> out_path;
    std::vector<DensityRequest> densities;
    std::optional<u64> expected_nr;

    u64 effective_burn_in() const { return burn_in.value_or(lo); }
};

// Throws ConfigError with the offending line number in the message.
ExperimentConfig parse_config(const std::string& text);

ExperimentConfig load_config_file(const std::string& path);

}  // namespace redord
