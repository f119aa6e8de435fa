#include "femtosleep/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "femtosleep/errors.hpp"

namespace femtosleep {

std::string format_fixed(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw ConfigError(what); }

void expect_object(const json& j, const std::string& what) {
    if (!j.is_object()) fail(what + ": expected a JSON object");
}

void reject_unknown_keys(const json& j, std::initializer_list<const char*> known,
                         const std::string& what) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : known) {
            if (it.key() == k) {
                ok = true;
                break;
            }
        }
        if (!ok) fail(what + ": unknown key \"" + it.key() + "\"");
    }
}

double get_number(const json& j, const char* key, double fallback,
                  const std::string& what) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number()) fail(what + ": \"" + std::string(key) + "\" must be a number");
    return j[key].get<double>();
}

int get_int(const json& j, const char* key, int fallback, const std::string& what) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number_integer()) {
        fail(what + ": \"" + std::string(key) + "\" must be an integer");
    }
    return j[key].get<int>();
}

json parse_file(const std::filesystem::path& path, const std::string& what) {
    std::ifstream in(path);
    if (!in) fail(what + ": cannot open " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        fail(what + ": " + path.string() + " does not parse: " + e.what());
    }
    return j;
}

std::ofstream open_output(const std::filesystem::path& path) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write " + path.string());
    return out;
}

}  // namespace

NetworkLayout layout_from_json(const nlohmann::json& j) {
    const std::string what = "layout";
    expect_object(j, what);
    reject_unknown_keys(j, {"macro", "free_space_factor", "station"}, what);

    NetworkLayout layout;
    if (j.contains("macro")) {
        const json& m = j["macro"];
        expect_object(m, what + ".macro");
        reject_unknown_keys(
            m, {"radius_m", "bs_height_m", "bs_tx_w", "bs_op_w", "center_x_m", "center_y_m"},
            what + ".macro");
        layout.macro.radius_m = get_number(m, "radius_m", 500.0, what);
        layout.macro.bs_height_m = get_number(m, "bs_height_m", 100.0, what);
        layout.macro.bs_tx_w = get_number(m, "bs_tx_w", 1500.0, what);
        layout.macro.bs_op_w = get_number(m, "bs_op_w", 2000.0, what);
        layout.macro.center.x = get_number(m, "center_x_m", 0.0, what);
        layout.macro.center.y = get_number(m, "center_y_m", 0.0, what);
    }
    layout.free_space_factor = get_number(j, "free_space_factor", 0.01, what);

    if (j.contains("station")) {
        if (!j["station"].is_array()) fail(what + ": \"station\" must be an array");
        std::size_t idx = 0;
        for (const json& sj : j["station"]) {
            const std::string tag = what + ".station[" + std::to_string(idx) + "]";
            expect_object(sj, tag);
            reject_unknown_keys(
                sj, {"name", "ring", "angle_deg", "x_m", "y_m", "fap_count",
                     "fap_radius_m", "factor"},
                tag);
            Station s;
            s.name = sj.contains("name") ? sj["name"].get<std::string>()
                                         : "station-" + std::to_string(idx);
            const bool has_ring = sj.contains("ring");
            const bool has_xy = sj.contains("x_m") || sj.contains("y_m");
            if (has_ring == has_xy) {
                fail(tag + ": give either ring (+ angle_deg) or x_m/y_m");
            }
            if (has_ring) {
                s.position = ring_position(get_int(sj, "ring", 0, tag),
                                           get_number(sj, "angle_deg", 0.0, tag));
            } else {
                s.position = {get_number(sj, "x_m", 0.0, tag),
                              get_number(sj, "y_m", 0.0, tag)};
            }
            s.fap_count = get_int(sj, "fap_count", 0, tag);
            s.fap_radius_m = get_number(sj, "fap_radius_m", 15.0, tag);
            s.factor = get_number(sj, "factor", 1.0, tag);
            layout.stations.push_back(std::move(s));
            ++idx;
        }
    }
    return layout;
}

nlohmann::json layout_to_json(const NetworkLayout& layout) {
    json j;
    j["macro"] = {{"radius_m", layout.macro.radius_m},
                  {"bs_height_m", layout.macro.bs_height_m},
                  {"bs_tx_w", layout.macro.bs_tx_w},
                  {"bs_op_w", layout.macro.bs_op_w},
                  {"center_x_m", layout.macro.center.x},
                  {"center_y_m", layout.macro.center.y}};
    j["free_space_factor"] = layout.free_space_factor;
    j["station"] = json::array();
    for (const Station& s : layout.stations) {
        j["station"].push_back({{"name", s.name},
                                {"x_m", s.position.x},
                                {"y_m", s.position.y},
                                {"fap_count", s.fap_count},
                                {"fap_radius_m", s.fap_radius_m},
                                {"factor", s.factor}});
    }
    return j;
}

NetworkLayout load_layout_file(const std::filesystem::path& path) {
    return layout_from_json(parse_file(path, "layout"));
}

void save_layout_file(const std::filesystem::path& path, const NetworkLayout& layout) {
    auto out = open_output(path);
    out << layout_to_json(layout).dump(2) << '\n';
}

ScenarioConfig scenario_from_json(const nlohmann::json& j) {
    const std::string what = "scenario";
    expect_object(j, what);
    reject_unknown_keys(j, {"seed", "horizon_h", "step_min", "hourly_mean_users"}, what);
    ScenarioConfig cfg;
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer()) {
            fail(what + ": \"seed\" must be an integer");
        }
        cfg.seed = j["seed"].get<std::uint64_t>();
    }
    cfg.horizon_h = get_number(j, "horizon_h", cfg.horizon_h, what);
    cfg.step_min = get_number(j, "step_min", cfg.step_min, what);
    if (j.contains("hourly_mean_users")) {
        const json& arr = j["hourly_mean_users"];
        if (!arr.is_array() || arr.size() != cfg.hourly_mean_users.size()) {
            fail(what + ": \"hourly_mean_users\" must be an array of 24 numbers");
        }
        for (std::size_t i = 0; i < cfg.hourly_mean_users.size(); ++i) {
            if (!arr[i].is_number()) {
                fail(what + ": \"hourly_mean_users\" must contain numbers only");
            }
            cfg.hourly_mean_users[i] = arr[i].get<double>();
        }
    }
    return cfg;
}

ScenarioConfig load_scenario_file(const std::filesystem::path& path) {
    return scenario_from_json(parse_file(path, "scenario"));
}

RunConfig run_config_from_json(const nlohmann::json& j) {
    const std::string what = "config";
    expect_object(j, what);
    reject_unknown_keys(j,
                        {"layout", "scenario", "out", "seed", "propagation", "power",
                         "min_snir_db", "f_p"},
                        what);
    RunConfig cfg;
    if (j.contains("layout")) cfg.layout_path = j["layout"].get<std::string>();
    if (j.contains("scenario")) cfg.scenario_path = j["scenario"].get<std::string>();
    if (j.contains("out")) cfg.out_dir = j["out"].get<std::string>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    cfg.min_snir_db = get_number(j, "min_snir_db", cfg.min_snir_db, what);
    cfg.f_p = get_number(j, "f_p", cfg.f_p, what);

    if (j.contains("propagation")) {
        const json& p = j["propagation"];
        expect_object(p, what + ".propagation");
        reject_unknown_keys(p,
                            {"fc_mhz", "hb_m", "hm_m", "lsh_db", "hata_variant",
                             "decay_index", "walls", "lpen_db", "fap_tx_mw", "noise_mw"},
                            what + ".propagation");
        cfg.macro_p.fc_mhz = get_number(p, "fc_mhz", cfg.macro_p.fc_mhz, what);
        cfg.macro_p.hb_m = get_number(p, "hb_m", cfg.macro_p.hb_m, what);
        cfg.macro_p.hm_m = get_number(p, "hm_m", cfg.macro_p.hm_m, what);
        cfg.macro_p.lsh_db = get_number(p, "lsh_db", cfg.macro_p.lsh_db, what);
        if (p.contains("hata_variant")) {
            const std::string v = p["hata_variant"].get<std::string>();
            if (v == "paper") {
                cfg.macro_p.variant = HataVariant::Paper;
            } else if (v == "standard") {
                cfg.macro_p.variant = HataVariant::Standard;
            } else {
                fail(what + ": hata_variant must be \"paper\" or \"standard\"");
            }
        }
        cfg.femto_p.fc_mhz = cfg.macro_p.fc_mhz;
        cfg.femto_p.decay_index = get_number(p, "decay_index", cfg.femto_p.decay_index, what);
        cfg.femto_p.walls = get_int(p, "walls", cfg.femto_p.walls, what);
        cfg.femto_p.lpen_db = get_number(p, "lpen_db", cfg.femto_p.lpen_db, what);
        cfg.env.fap_tx_mw = get_number(p, "fap_tx_mw", cfg.env.fap_tx_mw, what);
        cfg.env.noise_mw = get_number(p, "noise_mw", cfg.env.noise_mw, what);
    }
    if (j.contains("power")) {
        const json& p = j["power"];
        expect_object(p, what + ".power");
        reject_unknown_keys(p, {"bs_op_w", "fap_op_w"}, what + ".power");
        if (p.contains("bs_op_w")) cfg.bs_op_w = p["bs_op_w"].get<double>();
        if (p.contains("fap_op_w")) cfg.fap_op_w = p["fap_op_w"].get<double>();
    }
    return cfg;
}

RunConfig load_run_config(const std::filesystem::path& path) {
    return run_config_from_json(parse_file(path, "config"));
}

void write_sweep_csv(const std::filesystem::path& path,
                     const std::vector<SweepRow>& rows) {
    auto out = open_output(path);
    out << "fap_count,n_users,p_off\n";
    for (const SweepRow& r : rows) {
        out << r.fap_count << ',' << r.n_users << ',' << format_fixed(r.p_off) << '\n';
    }
}

void write_simplified_csv(const std::filesystem::path& path,
                          const std::vector<SimplifiedRow>& rows) {
    auto out = open_output(path);
    out << "f_p,n_users,p_off\n";
    for (const SimplifiedRow& r : rows) {
        out << format_fixed(r.f_p) << ',' << r.n_users << ',' << format_fixed(r.p_off)
            << '\n';
    }
}

void write_snir_csv(const std::filesystem::path& path,
                    const std::vector<SnirSweepRow>& rows) {
    auto out = open_output(path);
    out << "distance_m,snir_db_traditional,snir_db_proposed\n";
    for (const SnirSweepRow& r : rows) {
        out << format_fixed(r.distance_m) << ',' << format_fixed(r.snir_db_traditional)
            << ',' << format_fixed(r.snir_db_proposed) << '\n';
    }
}

void write_energy_csv(const std::filesystem::path& path,
                      const std::vector<EnergySeriesRow>& rows) {
    auto out = open_output(path);
    out << "hours,energy_kwh_traditional,energy_kwh_proposed\n";
    for (const EnergySeriesRow& r : rows) {
        out << r.hours << ',' << format_fixed(r.energy_kwh_traditional) << ','
            << format_fixed(r.energy_kwh_proposed) << '\n';
    }
}

void write_timeline_csv(const std::filesystem::path& path,
                        const std::vector<TimelineEntry>& timeline) {
    auto out = open_output(path);
    out << "t_s,bs_on,faps_on,n_users\n";
    for (const TimelineEntry& e : timeline) {
        out << format_fixed(e.t_s) << ',' << (e.state.bs_on ? 1 : 0) << ','
            << (e.state.faps_on ? 1 : 0) << ',' << e.n_users << '\n';
    }
}

void write_summary_file(const std::filesystem::path& path, const SimulationResult& r) {
    auto out = open_output(path);
    out << "bs_off_fraction=" << format_fixed(r.bs_off_fraction) << '\n'
        << "traditional_kwh=" << format_fixed(r.energy.traditional_kwh) << '\n'
        << "proposed_kwh=" << format_fixed(r.energy.proposed_kwh) << '\n'
        << "saved_fraction=" << format_fixed(r.energy.saved_fraction) << '\n'
        << "snir_min_db=" << format_fixed(r.snir.min_db) << '\n'
        << "snir_mean_db=" << format_fixed(r.snir.mean_db) << '\n';
}

double read_summary_value(const std::filesystem::path& path, const std::string& key) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open summary file " + path.string());
    std::string line;
    while (std::getline(in, line)) {
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        if (line.substr(0, eq) == key) {
            try {
                return std::stod(line.substr(eq + 1));
            } catch (const std::exception&) {
                throw ConfigError("summary key " + key + " is not a number in " +
                                  path.string());
            }
        }
    }
    throw ConfigError("summary file " + path.string() + " has no key " + key);
}

}  // namespace femtosleep
