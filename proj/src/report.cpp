#include "redord/report.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace redord {

namespace {

void print_assertions(const ExperimentConfig& cfg, std::ostream& out) {
    if (!cfg.spec.has_elliptic()) return;
    const auto& a = cfg.spec.assertions;
    out << "assertions (user-supplied, not verified): "
        << "non-isogenous blocks: " << (a.non_isogenous_blocks ? "yes" : "no")
        << ", no CM: " << (a.no_cm ? "yes" : "no") << "\n";
}

void print_prediction(const Prediction& pred, std::ostream& out) {
    out << "predicted n_R = " << pred.n_components << "\n";
    out << "closure dimension = " << pred.dimension << "\n";
    out << "independent: " << (pred.independent ? "yes" : "no") << "\n";
    if (pred.torsion) out << "note: the point has finite order\n";
    if (pred.has_torus) {
        out << "relation lattice basis:";
        if (pred.torus_lattice.is_zero()) {
            out << " (zero lattice)\n";
        } else {
            out << "\n";
            const IMat& b = pred.torus_lattice.basis;
            for (Eigen::Index i = 0; i < b.rows(); ++i) {
                out << "  [";
                for (Eigen::Index j = 0; j < b.cols(); ++j)
                    out << (j ? " " : "") << b(i, j);
                out << "]\n";
            }
        }
    }
    if (pred.block_components.size() > 1) {
        out << "per-block components:";
        for (const auto& [id, n] : pred.block_components)
            out << " " << id << "=" << n;
        out << "\n";
    }
}

void print_density(const DensityCounter& d, std::ostream& out) {
    out << "density " << d.name << ": " << d.hits << "/" << d.total << " = "
        << std::fixed << std::setprecision(6) << d.estimate() << "  wilson95 ["
        << d.wilson_low() << ", " << d.wilson_high() << "]\n";
    out.unsetf(std::ios::floatfield);
}

void print_scan_summary(const ScanSummary& s, std::ostream& out) {
    out << "scan range [" << s.lo << ", " << s.hi << "], burn-in " << s.burn_in << "\n";
    out << "good primes: " << s.good_count << ", skipped: " << s.skipped.size();
    if (!s.skipped.empty()) {
        out << " (";
        for (std::size_t i = 0; i < s.skipped.size() && i < 8; ++i)
            out << (i ? ", " : "") << s.skipped[i].first << ":" << s.skipped[i].second;
        if (s.skipped.size() > 8) out << ", ...";
        out << ")";
    }
    out << "\n";
    out << "empirical gcd of reduction orders = " << s.running_gcd
        << " (stabilized at p = " << s.gcd_stabilized_at << ")\n";
    for (const auto& [ell, hist] : s.histograms) {
        out << "v_" << ell << " histogram:";
        for (const auto& [v, count] : hist) out << " " << v << ":" << count;
        out << "\n";
    }
}

void write_csv_if_requested(const ExperimentConfig& cfg, const ScanResult& scan,
                            std::ostream& out) {
    if (!cfg.out_path) return;
    std::ofstream f(*cfg.out_path, std::ios::binary);
    if (!f) throw ConfigError("cannot open output file '" + *cfg.out_path + "'");
    f << records_csv(scan, cfg.spec.size(), cfg.ells);
    out << "csv written: " << *cfg.out_path << " (" << scan.records.size() << " rows)\n";
}

}  // namespace

std::string records_csv(const ScanResult& scan, std::size_t k, const std::set<u64>& ells) {
    std::string s = "p,status";
    for (std::size_t i = 1; i <= k; ++i) s += ",ord_" + std::to_string(i);
    s += ",ord";
    for (u64 ell : ells) s += ",v_" + std::to_string(ell);
    s += "\n";
    const std::size_t empty_cols = k + 1 + ells.size();
    for (const ReductionRecord& r : scan.records) {
        s += std::to_string(r.p);
        if (!r.good) {
            s += ",skipped:" + r.skip_reason;
            s.append(empty_cols, ',');
        } else {
            s += ",good";
            for (u64 t : r.factor_orders) s += "," + std::to_string(t);
            s += "," + std::to_string(r.combined_order);
            for (u64 ell : ells) s += "," + std::to_string(r.valuations.at(ell));
        }
        s += "\n";
    }
    return s;
}

DensityCounter density_for_request(const ScanResult& scan, const GroupPointSpec& spec,
                                   const DensityRequest& req) {
    switch (req.kind) {
        case DensityRequest::Kind::Valuation:
            return density_valuation_over(scan, spec, req.m, req.ells);
        case DensityRequest::Kind::Joint:
            return density_joint_over(scan, spec, req.m_list, req.ells);
        case DensityRequest::Kind::Multiple:
            return density_multiple_over(scan, req.m);
        case DensityRequest::Kind::Coprime:
            return density_coprime_over(scan, spec, req.m);
    }
    throw std::logic_error("unknown density kind");
}

VerifyOutcome run_verify(const ExperimentConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    VerifyOutcome out;
    out.report.prediction = predict(cfg.spec);
    out.report.expected_nr = cfg.expected_nr.value_or(out.report.prediction.n_components);

    // density ells must reach the scan so valuations are available
    std::set<u64> ells = cfg.ells;
    for (const DensityRequest& d : cfg.densities) ells.insert(d.ells.begin(), d.ells.end());

    out.scan = run_scan(cfg.spec, cfg.lo, cfg.hi, cfg.effective_burn_in(), ells, cfg.threads);
    out.report.empirical_gcd = out.scan.summary.running_gcd;
    out.report.match = out.report.empirical_gcd == out.report.expected_nr;

    for (const DensityRequest& d : cfg.densities) {
        out.report.densities.push_back(density_for_request(out.scan, cfg.spec, d));
        out.report.thresholds.push_back(d.threshold);
        out.scan.summary.density_counters.push_back(out.report.densities.back());
    }

    out.exit_code = exit_ok;
    if (!out.report.match) {
        out.exit_code = exit_mismatch;
    } else {
        for (std::size_t i = 0; i < out.report.densities.size(); ++i)
            if (out.report.densities[i].wilson_low() <= out.report.thresholds[i])
                out.exit_code = exit_density_below;
    }
    const auto t1 = std::chrono::steady_clock::now();
    out.report.runtime_seconds = std::chrono::duration<double>(t1 - t0).count();
    return out;
}

int run_command(Command cmd, const ExperimentConfig& cfg, std::ostream& out,
                std::ostream& err) {
    try {
        out << "spec: " << cfg.spec.describe() << "\n";
        print_assertions(cfg, out);
        switch (cmd) {
            case Command::Predict: {
                print_prediction(predict(cfg.spec), out);
                return exit_ok;
            }
            case Command::Scan: {
                const ScanResult scan = run_scan(cfg.spec, cfg.lo, cfg.hi,
                                                 cfg.effective_burn_in(), cfg.ells,
                                                 cfg.threads);
                print_scan_summary(scan.summary, out);
                write_csv_if_requested(cfg, scan, out);
                return exit_ok;
            }
            case Command::Density: {
                if (cfg.densities.empty())
                    throw ConfigError("density command needs at least one [density] section");
                std::set<u64> ells = cfg.ells;
                for (const DensityRequest& d : cfg.densities)
                    ells.insert(d.ells.begin(), d.ells.end());
                const ScanResult scan = run_scan(cfg.spec, cfg.lo, cfg.hi,
                                                 cfg.effective_burn_in(), ells, cfg.threads);
                int code = exit_ok;
                for (const DensityRequest& d : cfg.densities) {
                    const DensityCounter c = density_for_request(scan, cfg.spec, d);
                    print_density(c, out);
                    if (c.wilson_low() <= d.threshold) code = exit_density_below;
                }
                write_csv_if_requested(cfg, scan, out);
                return code;
            }
            case Command::Verify: {
                const VerifyOutcome v = run_verify(cfg);
                print_prediction(v.report.prediction, out);
                if (cfg.expected_nr)
                    out << "expected n_R (config override) = " << *cfg.expected_nr << "\n";
                print_scan_summary(v.scan.summary, out);
                out << "match: " << (v.report.match ? "yes" : "NO") << "\n";
                for (std::size_t i = 0; i < v.report.densities.size(); ++i) {
                    print_density(v.report.densities[i], out);
                    if (v.report.densities[i].wilson_low() <= v.report.thresholds[i])
                        out << "  below threshold " << v.report.thresholds[i] << "\n";
                }
                out << std::fixed << std::setprecision(2)
                    << "runtime: " << v.report.runtime_seconds << " s\n";
                out.unsetf(std::ios::floatfield);
                write_csv_if_requested(cfg, v.scan, out);
                out << "exit: " << v.exit_code << "\n";
                return v.exit_code;
            }
        }
        return exit_config_error;
    } catch (const UnsupportedConfig& e) {
        err << "unsupported configuration: " << e.what() << "\n";
        return exit_unsupported;
    } catch (const HypothesisViolation& e) {
        err << "hypothesis violation: " << e.what() << "\n";
        return exit_config_error;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return exit_config_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_config_error;
    }
}

}  // namespace redord
