// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irssec authors

#include "irssec/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include "irssec/errors.hpp"

namespace irssec {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view text)
{
    text = trim(text);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw ConfigError("invalid number '" + std::string(text) + "' for " + std::string(key));
    return v;
}

std::uint64_t parse_uint(std::string_view key, std::string_view text)
{
    text = trim(text);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw ConfigError("invalid non-negative integer '" + std::string(text) + "' for " + std::string(key));
    return v;
}

bool parse_bool(std::string_view key, std::string_view text)
{
    text = trim(text);
    if (text == "true" || text == "1" || text == "yes" || text == "on")
        return true;
    if (text == "false" || text == "0" || text == "no" || text == "off")
        return false;
    throw ConfigError("invalid boolean '" + std::string(text) + "' for " + std::string(key));
}

std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> out;
    while (true) {
        const auto pos = text.find(sep);
        out.push_back(trim(text.substr(0, pos)));
        if (pos == std::string_view::npos)
            break;
        text.remove_prefix(pos + 1);
    }
    return out;
}

using Setter = std::function<void(ExperimentConfig&, std::string_view, std::string_view)>;

Setter real(double ExperimentConfig::*field)
{
    return [field](ExperimentConfig& c, std::string_view k, std::string_view v) { c.*field = parse_double(k, v); };
}

Setter count(std::size_t ExperimentConfig::*field)
{
    return [field](ExperimentConfig& c, std::string_view k, std::string_view v) {
        c.*field = static_cast<std::size_t>(parse_uint(k, v));
    };
}

template <typename Sub>
Setter nested(Sub ExperimentConfig::*sub, double Sub::*field)
{
    return [sub, field](ExperimentConfig& c, std::string_view k, std::string_view v) {
        c.*sub.*field = parse_double(k, v);
    };
}

const std::map<std::string, Setter, std::less<>>& setters()
{
    static const std::map<std::string, Setter, std::less<>> table = {
        {"link.frequency_hz", nested(&ExperimentConfig::gains, &PathGainModel::carrier_frequency_hz)},
        {"link.absorption_per_m", nested(&ExperimentConfig::gains, &PathGainModel::absorption_per_m)},
        {"link.tx_gain_dbi", nested(&ExperimentConfig::gains, &PathGainModel::tx_gain_dbi)},
        {"link.rx_gain_dbi", nested(&ExperimentConfig::gains, &PathGainModel::rx_gain_dbi)},
        {"link.num_paths", count(&ExperimentConfig::num_paths)},
        {"geometry.d_sr", nested(&ExperimentConfig::scenario, &ScenarioGeometry::d_sr)},
        {"geometry.d_rd", nested(&ExperimentConfig::scenario, &ScenarioGeometry::d_rd)},
        {"geometry.d_re", nested(&ExperimentConfig::scenario, &ScenarioGeometry::d_re)},
        {"geometry.d_se", nested(&ExperimentConfig::scenario, &ScenarioGeometry::d_se)},
        {"geometry.bs_departure_rad", nested(&ExperimentConfig::scenario, &ScenarioGeometry::bs_departure)},
        {"geometry.irs_azimuth_rad", nested(&ExperimentConfig::scenario, &ScenarioGeometry::irs_arrival_azimuth)},
        {"geometry.irs_elevation_rad", nested(&ExperimentConfig::scenario, &ScenarioGeometry::irs_arrival_elevation)},
        {"tx.power_dbm", real(&ExperimentConfig::power_dbm)},
        {"tx.antennas", count(&ExperimentConfig::bs_antennas)},
        {"tx.rf_chains", count(&ExperimentConfig::rf_chains)},
        {"irs.elements", count(&ExperimentConfig::irs_elements)},
        {"irs.phase_levels", count(&ExperimentConfig::phase_levels)},
        {"noise.bob_dbm", real(&ExperimentConfig::noise_bob_dbm)},
        {"noise.eve_dbm", real(&ExperimentConfig::noise_eve_dbm)},
        {"eve.intercepts",
         [](ExperimentConfig& c, std::string_view k, std::string_view v) {
             v = trim(v);
             if (v == "irs")
                 c.interception = Interception::Irs;
             else if (v == "bs")
                 c.interception = Interception::Bs;
             else
                 throw ConfigError("invalid value '" + std::string(v) + "' for " + std::string(k) + " (irs|bs)");
         }},
        {"eve.blocking",
         [](ExperimentConfig& c, std::string_view k, std::string_view v) {
             v = trim(v);
             if (v == "none")
                 c.scenario.blocking_target = BlockingTarget::None;
             else if (v == "irs")
                 c.scenario.blocking_target = BlockingTarget::IrsBeam;
             else if (v == "bs")
                 c.scenario.blocking_target = BlockingTarget::BsBeam;
             else
                 throw ConfigError("invalid value '" + std::string(v) + "' for " + std::string(k) +
                                   " (none|irs|bs)");
         }},
        {"eve.rho", nested(&ExperimentConfig::scenario, &ScenarioGeometry::blocking_fraction)},
        {"solver.list",
         [](ExperimentConfig& c, std::string_view, std::string_view v) {
             c.solvers.clear();
             for (auto name : split(v, ','))
                 if (!name.empty())
                     c.solvers.push_back(parse_solver(name));
         }},
        {"solver.gaussian_samples", count(&ExperimentConfig::gaussian_samples)},
        {"solver.bcd_epsilon", real(&ExperimentConfig::bcd_epsilon)},
        {"solver.bcd_max_iters", count(&ExperimentConfig::bcd_max_iters)},
        {"solver.bcd_init",
         [](ExperimentConfig& c, std::string_view k, std::string_view v) {
             v = trim(v);
             if (v == "bob")
                 c.bcd_zero_init = false;
             else if (v == "zero")
                 c.bcd_zero_init = true;
             else
                 throw ConfigError("invalid value '" + std::string(v) + "' for " + std::string(k) + " (bob|zero)");
         }},
        {"solver.exhaustive_cap",
         [](ExperimentConfig& c, std::string_view k, std::string_view v) { c.exhaustive_cap = parse_uint(k, v); }},
        {"solver.sdp_tolerance", real(&ExperimentConfig::sdp_tolerance)},
        {"solver.alternation_cap", count(&ExperimentConfig::alternation_cap)},
        {"solver.alternation_tolerance", real(&ExperimentConfig::alternation_tolerance)},
        {"run.trials", count(&ExperimentConfig::num_trials)},
        {"run.seed",
         [](ExperimentConfig& c, std::string_view k, std::string_view v) { c.master_seed = parse_uint(k, v); }},
        {"run.threads", count(&ExperimentConfig::threads)},
        {"run.record_timing",
         [](ExperimentConfig& c, std::string_view k, std::string_view v) { c.record_timing = parse_bool(k, v); }},
        {"sweep.param",
         [](ExperimentConfig& c, std::string_view, std::string_view v) { c.sweep.param = parse_sweep_param(trim(v)); }},
        {"sweep.values",
         [](ExperimentConfig& c, std::string_view, std::string_view v) { c.sweep.values = parse_value_list(v); }},
    };
    return table;
}

std::string num(double v)
{
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

} // namespace

std::string_view to_string(SolverKind kind)
{
    switch (kind) {
    case SolverKind::BcdDiscrete: return "bcd-discrete";
    case SolverKind::BcdContinuous: return "bcd-continuous";
    case SolverKind::Sdp: return "sdp";
    case SolverKind::Exhaustive: return "exhaustive";
    case SolverKind::SecrecyOblivious: return "oblivious";
    case SolverKind::BcdHybrid: return "bcd-hybrid";
    }
    return "unknown";
}

std::string_view to_string(SweepParam param)
{
    switch (param) {
    case SweepParam::None: return "none";
    case SweepParam::PhaseLevels: return "lp";
    case SweepParam::Power: return "power";
    case SweepParam::Elements: return "elements";
    case SweepParam::Rho: return "rho";
    }
    return "unknown";
}

SolverKind parse_solver(std::string_view name)
{
    for (auto k : {SolverKind::BcdDiscrete, SolverKind::BcdContinuous, SolverKind::Sdp, SolverKind::Exhaustive,
                   SolverKind::SecrecyOblivious, SolverKind::BcdHybrid})
        if (to_string(k) == name)
            return k;
    throw ConfigError("unknown solver '" + std::string(name) +
                      "' (bcd-discrete|bcd-continuous|sdp|exhaustive|oblivious|bcd-hybrid)");
}

SweepParam parse_sweep_param(std::string_view name)
{
    for (auto p : {SweepParam::None, SweepParam::PhaseLevels, SweepParam::Power, SweepParam::Elements, SweepParam::Rho})
        if (to_string(p) == name)
            return p;
    throw ConfigError("unknown sweep parameter '" + std::string(name) + "' (lp|power|elements|rho)");
}

std::vector<double> parse_value_list(std::string_view text)
{
    std::vector<double> out;
    for (auto item : split(text, ','))
        if (!item.empty())
            out.push_back(parse_double("sweep.values", item));
    if (out.empty())
        throw ConfigError("sweep.values is empty");
    return out;
}

void ExperimentConfig::validate() const
{
    try {
        gains.validate();
        scenario.validate();
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
    if (bs_antennas < 1)
        throw ConfigError("tx.antennas must be >= 1");
    if (rf_chains < 1 || rf_chains > bs_antennas)
        throw ConfigError("tx.rf_chains must lie in [1, tx.antennas]");
    if (irs_elements < 1)
        throw ConfigError("irs.elements must be >= 1");
    if (num_paths < 1)
        throw ConfigError("link.num_paths must be >= 1");
    if (phase_levels < 2)
        throw ConfigError("irs.phase_levels must be >= 2");
    if (num_trials < 1)
        throw ConfigError("run.trials must be >= 1");
    if (gaussian_samples < 1)
        throw ConfigError("solver.gaussian_samples must be >= 1");
    if (!(bcd_epsilon > 0.0))
        throw ConfigError("solver.bcd_epsilon must be positive");
    if (!(sdp_tolerance > 0.0))
        throw ConfigError("solver.sdp_tolerance must be positive");
    if (solvers.empty())
        throw ConfigError("solver.list must name at least one solver");
    if (sweep.param != SweepParam::None && sweep.values.empty())
        throw ConfigError("sweep.values must be non-empty");
    if (sweep.param == SweepParam::Rho && scenario.blocking_target == BlockingTarget::None)
        throw ConfigError("a rho sweep needs eve.blocking = irs|bs");
    for (double v : sweep.values) {
        switch (sweep.param) {
        case SweepParam::PhaseLevels:
            if (v < 2 || v != std::floor(v))
                throw ConfigError("lp sweep values must be integers >= 2");
            break;
        case SweepParam::Elements:
            if (v < 1 || v != std::floor(v))
                throw ConfigError("elements sweep values must be integers >= 1");
            break;
        case SweepParam::Rho:
            if (v < 0.0 || v > 1.0)
                throw ConfigError("rho sweep values must lie in [0, 1]");
            break;
        default:
            break;
        }
    }
}

void apply_setting(ExperimentConfig& config, std::string_view key, std::string_view value)
{
    key = trim(key);
    const auto& table = setters();
    const auto it = table.find(key);
    if (it == table.end())
        throw ConfigError("unknown config key '" + std::string(key) + "'");
    it->second(config, key, value);
}

ExperimentConfig parse_config(std::string_view text, ExperimentConfig base)
{
    std::size_t line_no = 0;
    for (auto line : split(text, '\n')) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = trim(line.substr(0, hash));
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
        try {
            apply_setting(base, line.substr(0, eq), line.substr(eq + 1));
        } catch (const ConfigError& e) {
            throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return base;
}

ExperimentConfig load_config_file(const std::string& path, ExperimentConfig base)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), std::move(base));
}

std::string format_config(const ExperimentConfig& c)
{
    std::ostringstream os;
    auto kv = [&](std::string_view k, const std::string& v) { os << k << " = " << v << '\n'; };
    kv("link.frequency_hz", num(c.gains.carrier_frequency_hz));
    kv("link.absorption_per_m", num(c.gains.absorption_per_m));
    kv("link.tx_gain_dbi", num(c.gains.tx_gain_dbi));
    kv("link.rx_gain_dbi", num(c.gains.rx_gain_dbi));
    kv("link.num_paths", std::to_string(c.num_paths));
    kv("geometry.d_sr", num(c.scenario.d_sr));
    kv("geometry.d_rd", num(c.scenario.d_rd));
    kv("geometry.d_re", num(c.scenario.d_re));
    kv("geometry.d_se", num(c.scenario.d_se));
    kv("geometry.bs_departure_rad", num(c.scenario.bs_departure));
    kv("geometry.irs_azimuth_rad", num(c.scenario.irs_arrival_azimuth));
    kv("geometry.irs_elevation_rad", num(c.scenario.irs_arrival_elevation));
    kv("tx.power_dbm", num(c.power_dbm));
    kv("tx.antennas", std::to_string(c.bs_antennas));
    kv("tx.rf_chains", std::to_string(c.rf_chains));
    kv("irs.elements", std::to_string(c.irs_elements));
    kv("irs.phase_levels", std::to_string(c.phase_levels));
    kv("noise.bob_dbm", num(c.noise_bob_dbm));
    kv("noise.eve_dbm", num(c.noise_eve_dbm));
    kv("eve.intercepts", c.interception == Interception::Irs ? "irs" : "bs");
    const char* blocking = c.scenario.blocking_target == BlockingTarget::None      ? "none"
                           : c.scenario.blocking_target == BlockingTarget::IrsBeam ? "irs"
                                                                                   : "bs";
    kv("eve.blocking", blocking);
    kv("eve.rho", num(c.scenario.blocking_fraction));
    std::string list;
    for (std::size_t i = 0; i < c.solvers.size(); ++i)
        list += (i ? "," : "") + std::string(to_string(c.solvers[i]));
    kv("solver.list", list);
    kv("solver.gaussian_samples", std::to_string(c.gaussian_samples));
    kv("solver.bcd_epsilon", num(c.bcd_epsilon));
    kv("solver.bcd_max_iters", std::to_string(c.bcd_max_iters));
    kv("solver.bcd_init", c.bcd_zero_init ? "zero" : "bob");
    kv("solver.exhaustive_cap", std::to_string(c.exhaustive_cap));
    kv("solver.sdp_tolerance", num(c.sdp_tolerance));
    kv("solver.alternation_cap", std::to_string(c.alternation_cap));
    kv("solver.alternation_tolerance", num(c.alternation_tolerance));
    kv("run.trials", std::to_string(c.num_trials));
    kv("run.seed", std::to_string(c.master_seed));
    kv("run.threads", std::to_string(c.threads));
    kv("run.record_timing", c.record_timing ? "true" : "false");
    kv("sweep.param", std::string(to_string(c.sweep.param)));
    std::string values;
    for (std::size_t i = 0; i < c.sweep.values.size(); ++i)
        values += (i ? "," : "") + num(c.sweep.values[i]);
    kv("sweep.values", values);
    return os.str();
}

namespace {

std::size_t as_count(const char* what, double value)
{
    if (!(value >= 1.0) || value != std::floor(value))
        throw ConfigError(std::string("sweep value for ") + what + " must be a positive integer, got " +
                          std::to_string(value));
    return static_cast<std::size_t>(value);
}

} // namespace

ExperimentConfig with_sweep_value(const ExperimentConfig& config, SweepParam param, double value)
{
    ExperimentConfig c = config;
    switch (param) {
    case SweepParam::None: break;
    case SweepParam::PhaseLevels: c.phase_levels = as_count("L_P", value); break;
    case SweepParam::Power: c.power_dbm = value; break;
    case SweepParam::Elements: c.irs_elements = as_count("N", value); break;
    case SweepParam::Rho: c.scenario.blocking_fraction = value; break;
    }
    return c;
}

} // namespace irssec
