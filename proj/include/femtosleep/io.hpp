#ifndef FEMTOSLEEP_IO_HPP
#define FEMTOSLEEP_IO_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "femtosleep/coverage.hpp"
#include "femtosleep/simkit.hpp"

namespace femtosleep {

// Fixed 6-decimal formatting for every real number we emit, so output
// files are byte-identical across runs. Non-finite values normalize to
// "nan"/"inf"/"-inf".
std::string format_fixed(double v);

// ---- layout files -------------------------------------------------------
// JSON object with keys macro.{radius_m,bs_height_m,bs_tx_w,bs_op_w},
// free_space_factor, and a "station" array whose entries carry name,
// fap_count, fap_radius_m, factor, and either ring (1-4) + angle_deg or
// explicit x_m/y_m. Unknown keys are rejected.
NetworkLayout layout_from_json(const nlohmann::json& j);
nlohmann::json layout_to_json(const NetworkLayout& layout);
NetworkLayout load_layout_file(const std::filesystem::path& path);
void save_layout_file(const std::filesystem::path& path, const NetworkLayout& layout);

// ---- scenario files -----------------------------------------------------
// JSON object: seed, horizon_h, step_min, hourly_mean_users (24 entries).
ScenarioConfig scenario_from_json(const nlohmann::json& j);
ScenarioConfig load_scenario_file(const std::filesystem::path& path);

// ---- run configuration --------------------------------------------------
// Everything the CLI can take from a --config file; command-line flags
// override individual fields afterwards.
struct RunConfig {
    std::optional<std::string> layout_path;
    std::optional<std::string> scenario_path;
    std::string out_dir = ".";
    std::optional<std::uint64_t> seed;
    MacroLossParams macro_p;
    FemtoLossParams femto_p;
    LinkEnv env;
    std::optional<double> bs_op_w;   // power-model overrides
    std::optional<double> fap_op_w;
    double min_snir_db = 3.0;
    double f_p = 0.7;  // average importance factor for the simplified law
};
RunConfig run_config_from_json(const nlohmann::json& j);
RunConfig load_run_config(const std::filesystem::path& path);

// ---- CSV / summary emitters ----------------------------------------------
struct SimplifiedRow {
    double f_p = 0.0;
    int n_users = 0;
    double p_off = 0.0;
};

struct SnirSweepRow {
    double distance_m = 0.0;
    double snir_db_traditional = 0.0;
    double snir_db_proposed = 0.0;
};

struct EnergySeriesRow {
    int hours = 0;
    double energy_kwh_traditional = 0.0;
    double energy_kwh_proposed = 0.0;
};

void write_sweep_csv(const std::filesystem::path& path,
                     const std::vector<SweepRow>& rows);
void write_simplified_csv(const std::filesystem::path& path,
                          const std::vector<SimplifiedRow>& rows);
void write_snir_csv(const std::filesystem::path& path,
                    const std::vector<SnirSweepRow>& rows);
void write_energy_csv(const std::filesystem::path& path,
                      const std::vector<EnergySeriesRow>& rows);
void write_timeline_csv(const std::filesystem::path& path,
                        const std::vector<TimelineEntry>& timeline);

// Line-oriented key=value summary of a simulation run.
void write_summary_file(const std::filesystem::path& path, const SimulationResult& r);

// Read one key back out of a summary file (used to chain simulate ->
// energy). Throws ConfigError if the key is absent.
double read_summary_value(const std::filesystem::path& path, const std::string& key);

}  // namespace femtosleep

#endif
