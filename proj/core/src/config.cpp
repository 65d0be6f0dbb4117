#include "fracdiff/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fracdiff {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    double out = 0.0;
    try {
        out = std::stod(value, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("config key '" + key + "': cannot parse number '" + value + "'");
    }
    if (used != value.size()) {
        throw std::invalid_argument("config key '" + key + "': trailing junk in '" + value + "'");
    }
    return out;
}

unsigned long parse_unsigned(const std::string& key, const std::string& value) {
    const double d = parse_double(key, value);
    if (d < 0.0 || d != std::floor(d)) {
        throw std::invalid_argument("config key '" + key + "': expected a non-negative integer");
    }
    return static_cast<unsigned long>(d);
}

std::vector<double> parse_list(const std::string& key, const std::string& value) {
    std::vector<double> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) {
            out.push_back(parse_double(key, item));
        }
    }
    return out;
}

}  // namespace

void RunConfig::validate() const {
    if (!(gamma > 0.0 && gamma < 1.0)) {
        throw std::invalid_argument("gamma must lie in (0, 1), got " + std::to_string(gamma));
    }
    if (!(k_coeff > 0.0)) {
        throw std::invalid_argument("k_coeff must be > 0");
    }
    if (!(x_left < x_right)) {
        throw std::invalid_argument("x_left must be < x_right");
    }
    if (n_intervals < 2) {
        throw std::invalid_argument("n_intervals must be >= 2");
    }
    if (!(t_end > 0.0)) {
        throw std::invalid_argument("t_end must be > 0");
    }
    if (policy.probe_node == 0 || policy.probe_node >= n_intervals) {
        throw std::invalid_argument("probe_node must be an interior node index");
    }
    policy.validate();
    problem().validate();
}

ProblemSpec RunConfig::problem() const {
    ProblemSpec p;
    p.gamma = gamma;
    p.k_coeff = k_coeff;
    p.x_left = x_left;
    p.x_right = x_right;
    for (double t : impulse_times) {
        p.impulses.push_back({t, 0.0, impulse_weight});
    }
    return p;
}

SpatialGrid RunConfig::grid() const { return make_grid(x_left, x_right, n_intervals); }

RunConfig parse_config_text(const std::string& text) {
    RunConfig cfg;
    bool probe_node_given = false;

    std::stringstream ss(text);
    std::string line;
    int line_no = 0;
    while (std::getline(ss, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        ": expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        ": empty key or value");
        }

        if (key == "gamma") {
            cfg.gamma = parse_double(key, value);
        } else if (key == "k_coeff") {
            cfg.k_coeff = parse_double(key, value);
        } else if (key == "x_left") {
            cfg.x_left = parse_double(key, value);
        } else if (key == "x_right") {
            cfg.x_right = parse_double(key, value);
        } else if (key == "n_intervals") {
            cfg.n_intervals = parse_unsigned(key, value);
        } else if (key == "scheme") {
            if (value == "implicit") {
                cfg.scheme = SchemeKind::Implicit;
            } else if (value == "explicit") {
                cfg.scheme = SchemeKind::Explicit;
            } else {
                throw std::invalid_argument("scheme must be 'implicit' or 'explicit'");
            }
        } else if (key == "policy") {
            if (value == "fixed") {
                cfg.policy.kind = TimestepPolicy::Kind::Fixed;
            } else if (value == "adaptive") {
                cfg.policy.kind = TimestepPolicy::Kind::CurvatureAdaptive;
            } else {
                throw std::invalid_argument("policy must be 'fixed' or 'adaptive'");
            }
        } else if (key == "dt_fixed") {
            cfg.policy.dt_fixed = parse_double(key, value);
        } else if (key == "dt_min") {
            cfg.policy.dt_min = parse_double(key, value);
        } else if (key == "dt_max") {
            cfg.policy.dt_max = parse_double(key, value);
        } else if (key == "curvature_scale") {
            cfg.policy.curvature_scale = parse_double(key, value);
        } else if (key == "probe_node") {
            cfg.policy.probe_node = parse_unsigned(key, value);
            probe_node_given = true;
        } else if (key == "t_end") {
            cfg.t_end = parse_double(key, value);
        } else if (key == "impulse_times") {
            cfg.impulse_times = parse_list(key, value);
        } else if (key == "impulse_weight") {
            cfg.impulse_weight = parse_double(key, value);
        } else if (key == "snapshot_times") {
            cfg.snapshot_times = parse_list(key, value);
        } else if (key == "seed") {
            cfg.seed = parse_unsigned(key, value);
        } else if (key == "out_dir") {
            cfg.out_dir = value;
        } else {
            throw std::invalid_argument("unknown config key '" + key + "'");
        }
    }

    if (!probe_node_given) {
        cfg.policy.probe_node = cfg.n_intervals / 2;
    }
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open config file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str());
}

}  // namespace fracdiff
