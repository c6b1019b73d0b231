#include "config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace edsense {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        size_t pos = 0;
        double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw std::invalid_argument("config key '" + key + "': not a number: '" + value + "'");
    }
}

}  // namespace

void ExperimentConfig::set(const std::string& key, const std::string& value) {
    if (key == "t_samp_ms") t_samp_ms = parse_double(key, value);
    else if (key == "t_sense_ms") t_sense_ms = parse_double(key, value);
    else if (key == "t_frame_ms") t_frame_ms = parse_double(key, value);
    else if (key == "alpha") alpha = parse_double(key, value);
    else if (key == "beta") beta = parse_double(key, value);
    else if (key == "lambda_h") lambda_h = parse_double(key, value);
    else if (key == "lambda_chi") lambda_chi = parse_double(key, value);
    else if (key == "lambda_g") lambda_g = parse_double(key, value);
    else if (key == "primary_snr_db") primary_snr_db = parse_double(key, value);
    else if (key == "secondary_snr_db") secondary_snr_db = parse_double(key, value);
    else if (key == "p_p") p_p = parse_double(key, value);
    else if (key == "p_s") p_s = parse_double(key, value);
    else if (key == "gamma_s_db") gamma_s_db = parse_double(key, value);
    else if (key == "target_pd") target_pd = parse_double(key, value);
    else if (key == "mc_frames") mc_frames = static_cast<long>(parse_double(key, value));
    else if (key == "seed") seed = static_cast<std::uint64_t>(std::stoull(value));
    else if (key == "sweep_param") sweep_param = value;
    else if (key == "sweep_from") sweep_from = parse_double(key, value);
    else if (key == "sweep_to") sweep_to = parse_double(key, value);
    else if (key == "sweep_steps") sweep_steps = static_cast<int>(parse_double(key, value));
    else throw std::invalid_argument("config: unknown key '" + key + "'");
}

ExperimentConfig ExperimentConfig::parse(std::istream& in) {
    ExperimentConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key=value");
        cfg.set(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
    return cfg;
}

ExperimentConfig ExperimentConfig::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
    return parse(in);
}

std::string ExperimentConfig::serialize() const {
    std::ostringstream out;
    out.precision(17);
    out << "t_samp_ms = " << t_samp_ms << "\n"
        << "t_sense_ms = " << t_sense_ms << "\n"
        << "t_frame_ms = " << t_frame_ms << "\n"
        << "alpha = " << alpha << "\n"
        << "beta = " << beta << "\n"
        << "lambda_h = " << lambda_h << "\n"
        << "lambda_chi = " << lambda_chi << "\n"
        << "lambda_g = " << lambda_g << "\n"
        << "primary_snr_db = " << primary_snr_db << "\n"
        << "secondary_snr_db = " << secondary_snr_db << "\n"
        << "p_p = " << p_p << "\n"
        << "p_s = " << p_s << "\n"
        << "gamma_s_db = " << gamma_s_db << "\n"
        << "target_pd = " << target_pd << "\n"
        << "mc_frames = " << mc_frames << "\n"
        << "seed = " << seed << "\n";
    if (!sweep_param.empty()) {
        out << "sweep_param = " << sweep_param << "\n"
            << "sweep_from = " << sweep_from << "\n"
            << "sweep_to = " << sweep_to << "\n"
            << "sweep_steps = " << sweep_steps << "\n";
    }
    return out.str();
}

void ExperimentConfig::validate() const {
    traffic();
    geometry();
    channel();
    constraint();
    if (!(target_pd > 0.0 && target_pd < 1.0))
        throw std::invalid_argument("config: target_pd must be in (0,1)");
    if (mc_frames < 1) throw std::invalid_argument("config: mc_frames must be >= 1");
    if (!sweep_param.empty()) {
        if (sweep_steps < 1) throw std::invalid_argument("config: sweep_steps must be >= 1");
        if (sweep_steps > 1 && !(sweep_to > sweep_from))
            throw std::invalid_argument("config: sweep_to must exceed sweep_from");
    }
}

TrafficModel ExperimentConfig::traffic() const {
    try {
        return TrafficModel(alpha, beta);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("config (alpha/beta): ") + e.what());
    }
}

SystemGeometry ExperimentConfig::geometry() const {
    try {
        return SystemGeometry::from_times(t_samp_ms * 1e-3, t_sense_ms * 1e-3, t_frame_ms * 1e-3);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("config (timing): ") + e.what());
    }
}

ChannelModel ExperimentConfig::channel() const {
    try {
        double sigma_st_sq = p_p / (lambda_h * std::pow(10.0, primary_snr_db / 10.0));
        double sigma_sr_sq = p_s / (lambda_g * std::pow(10.0, secondary_snr_db / 10.0));
        return ChannelModel(lambda_h, lambda_chi, lambda_g, sigma_st_sq, sigma_sr_sq, p_p, p_s);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("config (channel): ") + e.what());
    }
}

SnrConstraint ExperimentConfig::constraint() const {
    try {
        return SnrConstraint::from_db(gamma_s_db);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("config (gamma_s_db): ") + e.what());
    }
}

double ExperimentConfig::sweep_value(int step) const {
    if (sweep_steps <= 1) return sweep_from;
    return sweep_from + (sweep_to - sweep_from) * step / (sweep_steps - 1);
}

}  // namespace edsense
