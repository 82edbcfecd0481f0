#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <set>

#include "core/error.hpp"
#include "core/experiment.hpp"
#include "core/text.hpp"

namespace ssm {

namespace {

double to_double(std::string_view key, std::string_view value) {
    double x = 0.0;
    if (!text::parse_double(text::trim(value), x))
        throw Error(ErrorCode::Parse, "setting " + std::string(key) + ": '" + std::string(value) + "' is not a number");
    return x;
}

template <typename Int>
Int to_int(std::string_view key, std::string_view value) {
    Int x{};
    if (!text::parse_int(text::trim(value), x))
        throw Error(ErrorCode::Parse, "setting " + std::string(key) + ": '" + std::string(value) +
                                          "' is not a non-negative integer");
    return x;
}

bool to_bool(std::string_view key, std::string_view value) {
    auto v = text::trim(value);
    if (text::iequals(v, "true") || v == "1" || text::iequals(v, "yes") || text::iequals(v, "on")) return true;
    if (text::iequals(v, "false") || v == "0" || text::iequals(v, "no") || text::iequals(v, "off")) return false;
    throw Error(ErrorCode::Parse, "setting " + std::string(key) + ": '" + std::string(value) + "' is not a boolean");
}

template <typename T, typename Parse>
std::vector<T> to_list(std::string_view value, Parse&& parse) {
    std::vector<T> out;
    for (const auto& item : text::split(value, ',')) out.push_back(parse(item));
    return out;
}

template <typename T, typename Name>
std::string join(const std::vector<T>& items, Name&& name) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ',';
        out += name(items[i]);
    }
    return out;
}

std::string bool_string(bool b) { return b ? "true" : "false"; }

} // namespace

void apply_setting(ExperimentConfig& cfg, std::string_view key, std::string_view value) {
    value = text::trim(value);
    if (key == "input.path") cfg.input_path = std::string(value);
    else if (key == "input.format") cfg.input_format = parse_input_format(value);
    else if (key == "input.default_weight") cfg.default_weight = to_double(key, value);
    else if (key == "experiment.fractions")
        cfg.fractions = to_list<double>(value, [&](const std::string& s) { return to_double(key, s); });
    else if (key == "experiment.horizons")
        cfg.horizons = to_list<unsigned>(value, [&](const std::string& s) { return to_int<unsigned>(key, s); });
    else if (key == "experiment.cross_horizons") cfg.cross_horizons = to_bool(key, value);
    else if (key == "experiment.k") cfg.k = to_int<std::size_t>(key, value);
    else if (key == "experiment.trials") cfg.trials = to_int<unsigned>(key, value);
    else if (key == "experiment.seed") cfg.seed = to_int<std::uint64_t>(key, value);
    else if (key == "experiment.metrics")
        cfg.metrics = text::iequals(value, "all") ? std::vector<MetricId>(kAllMetrics.begin(), kAllMetrics.end())
                                                  : to_list<MetricId>(value, [](const std::string& s) { return parse_metric(s); });
    else if (key == "experiment.centralities")
        cfg.centralities = text::iequals(value, "all")
                               ? std::vector<CentralityId>(kAllCentralities.begin(), kAllCentralities.end())
                               : to_list<CentralityId>(value, [](const std::string& s) { return parse_centrality(s); });
    else if (key == "experiment.algorithms")
        cfg.algorithms = text::iequals(value, "all")
                             ? default_algorithms()
                             : to_list<AlgorithmId>(value, [](const std::string& s) { return parse_algorithm(s); });
    else if (key == "experiment.contagions")
        cfg.contagions = to_list<ContagionModel>(value, [](const std::string& s) { return parse_contagion(s); });
    else if (key == "experiment.training_baseline") cfg.training_baseline = to_bool(key, value);
    else if (key == "experiment.threads") cfg.threads = to_int<unsigned>(key, value);
    else if (key == "experiment.output") cfg.output_dir = std::string(value);
    else if (key == "contagion.theta") cfg.contagion.theta = to_double(key, value);
    else if (key == "contagion.horizon") cfg.contagion.horizon = to_int<unsigned>(key, value);
    else if (key == "link_prediction.cap") cfg.normalization_cap = to_double(key, value);
    else if (key == "link_prediction.local_path_epsilon") cfg.link_prediction.local_path_epsilon = to_double(key, value);
    else if (key == "link_prediction.quasi_local_epsilon") cfg.link_prediction.quasi_local_epsilon = to_double(key, value);
    else if (key == "link_prediction.weighted") cfg.link_prediction.weighted = to_bool(key, value);
    else if (key == "centrality.damping") cfg.centrality.damping = to_double(key, value);
    else if (key == "centrality.tolerance") cfg.centrality.tolerance = to_double(key, value);
    else if (key == "centrality.max_iterations") cfg.centrality.max_iterations = to_int<unsigned>(key, value);
    else if (key == "centrality.balanced_lambda") cfg.centrality.balanced_lambda = to_double(key, value);
    else if (key == "centrality.complex_path_theta") cfg.centrality.complex_path.theta = to_double(key, value);
    else if (key == "centrality.complex_path_horizon")
        cfg.centrality.complex_path.horizon = to_int<unsigned>(key, value);
    else
        throw Error(ErrorCode::InvalidArgument, "unknown setting '" + std::string(key) + "'");
}

void load_config_file(ExperimentConfig& cfg, const std::string& path) {
    boost::property_tree::ptree tree;
    try {
        boost::property_tree::ini_parser::read_ini(path, tree);
    } catch (const boost::property_tree::ini_parser_error& e) {
        throw Error(ErrorCode::Parse, e.what());
    }
    for (const auto& [section, body] : tree) {
        if (body.empty())
            throw Error(ErrorCode::Parse, path + ": setting '" + section + "' must live inside a [section]");
        for (const auto& [name, leaf] : body) apply_setting(cfg, section + "." + name, leaf.data());
    }
}

std::map<std::string, std::string> describe(const ExperimentConfig& cfg) {
    auto num = [](double x) { return text::shortest(x); };
    return {
        {"input.path", cfg.input_path},
        {"input.format", std::string(to_string(cfg.input_format))},
        {"input.default_weight", num(cfg.default_weight)},
        {"experiment.fractions", join(cfg.fractions, num)},
        {"experiment.horizons", join(cfg.horizons, [](unsigned h) { return std::to_string(h); })},
        {"experiment.cross_horizons", bool_string(cfg.cross_horizons)},
        {"experiment.k", std::to_string(cfg.k)},
        {"experiment.trials", std::to_string(cfg.trials)},
        {"experiment.seed", std::to_string(cfg.seed)},
        {"experiment.metrics", join(cfg.metrics, [](MetricId m) { return std::string(to_string(m)); })},
        {"experiment.centralities", join(cfg.centralities, [](CentralityId c) { return std::string(to_string(c)); })},
        {"experiment.algorithms", join(cfg.algorithms, [](const AlgorithmId& a) { return to_string(a); })},
        {"experiment.contagions", join(cfg.contagions, [](ContagionModel m) { return std::string(to_string(m)); })},
        {"experiment.training_baseline", bool_string(cfg.training_baseline)},
        {"experiment.output", cfg.output_dir},
        {"contagion.theta", num(cfg.contagion.theta)},
        {"contagion.horizon", std::to_string(cfg.contagion.horizon)},
        {"link_prediction.cap", num(cfg.normalization_cap)},
        {"link_prediction.local_path_epsilon", num(cfg.link_prediction.local_path_epsilon)},
        {"link_prediction.quasi_local_epsilon", num(cfg.link_prediction.quasi_local_epsilon)},
        {"link_prediction.weighted", bool_string(cfg.link_prediction.weighted)},
        {"centrality.damping", num(cfg.centrality.damping)},
        {"centrality.tolerance", num(cfg.centrality.tolerance)},
        {"centrality.max_iterations", std::to_string(cfg.centrality.max_iterations)},
        {"centrality.balanced_lambda", num(cfg.centrality.balanced_lambda)},
        {"centrality.complex_path_theta", num(cfg.centrality.complex_path.theta)},
        {"centrality.complex_path_horizon", std::to_string(cfg.centrality.complex_path.horizon)},
    };
}

void validate(const ExperimentConfig& cfg) {
    auto fail = [](const std::string& msg) { throw Error(ErrorCode::InvalidArgument, msg); };
    if (cfg.fractions.empty()) fail("at least one sample fraction is required");
    for (double f : cfg.fractions)
        if (!(f > 0.0 && f <= 1.0)) fail("sample fraction " + text::shortest(f) + " outside (0,1]");
    if (cfg.horizons.empty()) fail("at least one prediction horizon is required");
    if (!cfg.cross_horizons && cfg.horizons.size() != 1 && cfg.horizons.size() != cfg.fractions.size())
        fail("horizons must pair with fractions (" + std::to_string(cfg.fractions.size()) + " expected, got " +
             std::to_string(cfg.horizons.size()) + ") unless cross_horizons is set");
    if (cfg.trials == 0) fail("trials must be at least 1");
    if (cfg.k == 0) fail("k must be at least 1");
    if (cfg.metrics.empty() || cfg.centralities.empty() || cfg.algorithms.empty() || cfg.contagions.empty())
        fail("metric, centrality, algorithm and contagion lists must be non-empty");
    if (!(cfg.contagion.theta >= 0.0 && cfg.contagion.theta <= 1.0)) fail("theta must lie in [0,1]");
    if (cfg.contagion.horizon == 0) fail("contagion horizon must be at least 1");
    if (!(cfg.normalization_cap > 0.0 && cfg.normalization_cap <= 1.0)) fail("normalization cap must lie in (0,1]");
    if (!(cfg.default_weight > 0.0 && cfg.default_weight <= 1.0)) fail("default weight must lie in (0,1]");
}

std::vector<Scenario> scenarios(const ExperimentConfig& cfg) {
    std::vector<std::pair<double, unsigned>> pairs;
    if (cfg.cross_horizons) {
        for (double f : cfg.fractions)
            for (unsigned h : cfg.horizons) pairs.emplace_back(f, h);
    } else {
        for (std::size_t i = 0; i < cfg.fractions.size(); ++i)
            pairs.emplace_back(cfg.fractions[i], cfg.horizons.size() == 1 ? cfg.horizons[0] : cfg.horizons[i]);
    }
    std::map<double, std::set<unsigned>> per_fraction;
    for (const auto& [f, h] : pairs) per_fraction[f].insert(h);
    bool with_horizon = false;
    for (const auto& [f, hs] : per_fraction) with_horizon = with_horizon || hs.size() > 1;

    std::vector<Scenario> out;
    for (const auto& [f, h] : pairs)
        out.push_back({f, h, scenario_label(f, h, with_horizon)});
    return out;
}

std::string scenario_label(double fraction, unsigned horizon, bool with_horizon) {
    auto label = text::shortest(fraction);
    return with_horizon ? label + "-t" + std::to_string(horizon) : label;
}

} // namespace ssm
