// femtosleep command-line front end: probability sweeps, SNIR comparison,
// energy series, and the end-to-end day simulation, all as deterministic
// CSV/summary files.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "femtosleep/coverage.hpp"
#include "femtosleep/energy.hpp"
#include "femtosleep/errors.hpp"
#include "femtosleep/io.hpp"
#include "femtosleep/simkit.hpp"

namespace fs = std::filesystem;
using namespace femtosleep;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;
constexpr int kExitUsage = 4;

NetworkLayout load_layout_or_default(const RunConfig& cfg) {
    return cfg.layout_path ? load_layout_file(*cfg.layout_path) : default_layout();
}

NetworkLayout load_valid_layout(const RunConfig& cfg) {
    NetworkLayout layout = load_layout_or_default(cfg);
    const auto issues = validate(layout);
    if (!issues.empty()) {
        for (const auto& m : issues) std::cerr << "layout: " << m << '\n';
        throw InvalidLayoutError("layout failed validation (" +
                                 std::to_string(issues.size()) + " issue(s))");
    }
    return layout;
}

PowerModel power_model_for(const RunConfig& cfg, const NetworkLayout& layout) {
    PowerModel pm;
    pm.bs_op_w = cfg.bs_op_w.value_or(layout.macro.bs_op_w);
    pm.fap_op_w = cfg.fap_op_w.value_or(pm.fap_op_w);
    pm.fap_count = layout.total_fap_count();
    return pm;
}

// Single-FAP reference geometry for the SNIR comparison: one station at
// placement ring 1, so the proposed mode sees zero femto interference.
NetworkLayout reference_snir_layout() {
    NetworkLayout layout;
    Station s;
    s.name = "reference";
    s.position = ring_position(1, 0.0);
    s.fap_count = 1;
    s.fap_radius_m = 15.0;
    s.factor = 1.0;
    layout.stations.push_back(std::move(s));
    return layout;
}

void note_written(const fs::path& path) {
    std::cerr << "wrote " << path.string() << '\n';
}

int cmd_prob(const RunConfig& cfg, int max_faps, std::vector<int> users) {
    const NetworkLayout layout = load_valid_layout(cfg);
    const auto rows = sweep_fap_count(layout, max_faps, users);

    const fs::path sweep_path = fs::path(cfg.out_dir) / "bs_off_sweep.csv";
    write_sweep_csv(sweep_path, rows);
    note_written(sweep_path);

    std::sort(users.begin(), users.end());
    users.erase(std::unique(users.begin(), users.end()), users.end());
    std::vector<SimplifiedRow> simplified;
    simplified.reserve(users.size());
    for (int n : users) {
        simplified.push_back({cfg.f_p, n, bs_off_probability_simplified(cfg.f_p, n)});
    }
    const fs::path simp_path = fs::path(cfg.out_dir) / "bs_off_simplified.csv";
    write_simplified_csv(simp_path, simplified);
    note_written(simp_path);
    return kExitOk;
}

int cmd_snir(const RunConfig& cfg, double d_min, double d_max, double d_step) {
    const NetworkLayout layout =
        cfg.layout_path ? load_valid_layout(cfg) : reference_snir_layout();

    const Station* serving = nullptr;
    for (const Station& s : layout.stations) {
        if (s.has_fap()) {
            serving = &s;
            break;
        }
    }
    if (serving == nullptr) {
        throw InvalidLayoutError("snir: layout has no FAP-equipped station");
    }
    if (!(d_step > 0.0)) {
        throw InvalidParameterError("snir: distance step must be > 0");
    }
    if (!(d_min >= cfg.femto_p.min_distance_m)) {
        throw OutOfModelRangeError("snir: distance " + std::to_string(d_min) +
                                   " m is below the femto model minimum " +
                                   std::to_string(cfg.femto_p.min_distance_m) + " m");
    }
    if (!(d_max >= d_min)) {
        throw InvalidParameterError("snir: d_max must be >= d_min");
    }
    if (d_max > serving->fap_radius_m) {
        throw InvalidParameterError(
            "snir: d_max exceeds the serving FAP radius (" +
            std::to_string(serving->fap_radius_m) + " m); the user must stay in coverage");
    }

    // User placed radially outward from the macro BS through the FAP.
    double ux = serving->position.x - layout.macro.center.x;
    double uy = serving->position.y - layout.macro.center.y;
    const double norm = std::hypot(ux, uy);
    if (norm > 0.0) {
        ux /= norm;
        uy /= norm;
    } else {
        ux = 1.0;
        uy = 0.0;
    }

    const int n_rows = static_cast<int>(std::floor((d_max - d_min) / d_step + 1e-9)) + 1;
    std::vector<SnirSweepRow> rows;
    rows.reserve(static_cast<std::size_t>(n_rows));
    for (int i = 0; i < n_rows; ++i) {
        const double d = d_min + i * d_step;
        const Point user{serving->position.x + d * ux, serving->position.y + d * uy};
        rows.push_back({d,
                        snir_at_user_db(layout, user, true, cfg.macro_p, cfg.femto_p, cfg.env),
                        snir_at_user_db(layout, user, false, cfg.macro_p, cfg.femto_p, cfg.env)});
    }
    const fs::path path = fs::path(cfg.out_dir) / "snir_comparison.csv";
    write_snir_csv(path, rows);
    note_written(path);
    return kExitOk;
}

int cmd_energy(const RunConfig& cfg, int hours, std::optional<double> off_fraction,
               const std::optional<std::string>& from_summary) {
    if (!off_fraction && from_summary) {
        off_fraction = read_summary_value(*from_summary, "bs_off_fraction");
    }
    if (!off_fraction) {
        std::cerr << "energy: give --off-fraction or --from-summary <file>\n";
        return kExitUsage;
    }
    if (hours < 0) {
        throw InvalidParameterError("energy: hours must be >= 0");
    }
    const NetworkLayout layout = load_valid_layout(cfg);
    const PowerModel pm = power_model_for(cfg, layout);

    std::vector<EnergySeriesRow> rows;
    rows.reserve(static_cast<std::size_t>(hours) + 1);
    for (int h = 0; h <= hours; ++h) {
        rows.push_back({h, energy_traditional(h, pm),
                        energy_proposed(h, *off_fraction, pm)});
    }
    const fs::path path = fs::path(cfg.out_dir) / "energy_series.csv";
    write_energy_csv(path, rows);
    note_written(path);

    const EnergyReport rep = report(hours, *off_fraction, pm);
    if (rep.net_loss) {
        std::cerr << "energy: net loss, FAP overhead exceeds BS savings ("
                  << format_fixed(rep.saved_kwh) << " kWh)\n";
    }
    return kExitOk;
}

int cmd_simulate(const RunConfig& cfg) {
    const NetworkLayout layout = load_valid_layout(cfg);
    ScenarioConfig scenario =
        cfg.scenario_path ? load_scenario_file(*cfg.scenario_path) : ScenarioConfig{};
    if (cfg.seed) scenario.seed = *cfg.seed;
    const PowerModel pm = power_model_for(cfg, layout);

    const SimulationResult result = run_simulation(scenario, layout, cfg.macro_p,
                                                   cfg.femto_p, pm, cfg.min_snir_db,
                                                   cfg.env);

    // Cross-check the reported aggregates against the emitted timeline.
    int off_steps = 0;
    double proposed_w_steps = 0.0;
    for (const TimelineEntry& e : result.timeline) {
        if (!e.state.bs_on) ++off_steps;
        if (e.state.bs_on) proposed_w_steps += pm.bs_op_w;
        if (e.state.faps_on) proposed_w_steps += pm.fap_count * pm.fap_op_w;
    }
    const double frac =
        static_cast<double>(off_steps) / static_cast<double>(result.timeline.size());
    const double proposed_kwh = proposed_w_steps * result.step_h / 1000.0;
    if (std::abs(frac - result.bs_off_fraction) > 1e-12 ||
        std::abs(proposed_kwh - result.energy.proposed_kwh) > 1e-9) {
        throw InternalError("simulate: timeline does not reproduce reported aggregates");
    }

    const fs::path timeline_path = fs::path(cfg.out_dir) / "timeline.csv";
    write_timeline_csv(timeline_path, result.timeline);
    note_written(timeline_path);
    const fs::path summary_path = fs::path(cfg.out_dir) / "summary.txt";
    write_summary_file(summary_path, result);
    note_written(summary_path);

    std::cout << format_fixed(result.energy.saved_fraction) << '\n';
    return kExitOk;
}

int cmd_validate(const RunConfig& cfg) {
    const NetworkLayout layout = load_layout_or_default(cfg);
    const auto issues = validate(layout);
    if (issues.empty()) {
        std::cout << "layout ok: " << layout.stations.size() << " stations, "
                  << layout.total_fap_count() << " FAPs\n";
        return kExitOk;
    }
    for (const auto& m : issues) std::cerr << "layout: " << m << '\n';
    return kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"femtocell-assisted macrocell sleep: probability, SNIR and energy toolkit"};
    app.require_subcommand(1);

    std::string config_path;
    std::string layout_path;
    std::string scenario_path;
    std::string out_dir;
    std::uint64_t seed = 0;
    double fc_mhz = 0, hb_m = 0, hm_m = 0, lsh_db = 0;
    double decay_index = 0, lpen_db = 0, fap_tx_mw = 0, noise_mw = 0;
    int walls = 0;
    std::string hata_variant;
    double bs_op_w = 0, fap_op_w = 0, min_snir_db = 0, f_p = 0;

    auto* opt_config = app.add_option("--config", config_path, "run configuration file (JSON)");
    auto* opt_layout = app.add_option("--layout", layout_path, "layout file (JSON)");
    auto* opt_scenario = app.add_option("--scenario", scenario_path, "scenario file (JSON)");
    auto* opt_out = app.add_option("--out", out_dir, "output directory (default .)");
    auto* opt_seed = app.add_option("--seed", seed, "random seed");
    auto* opt_fc = app.add_option("--fc-mhz", fc_mhz, "carrier frequency [MHz]");
    auto* opt_hb = app.add_option("--hb-m", hb_m, "BS antenna height [m]");
    auto* opt_hm = app.add_option("--hm-m", hm_m, "mobile antenna height [m]");
    auto* opt_lsh = app.add_option("--lsh-db", lsh_db, "shadowing margin [dB]");
    auto* opt_hata = app.add_option("--hata-variant", hata_variant, "paper|standard");
    auto* opt_decay = app.add_option("--decay-index", decay_index, "femto decay index");
    auto* opt_walls = app.add_option("--walls", walls, "walls on femto links");
    auto* opt_lpen = app.add_option("--lpen-db", lpen_db, "penetration loss [dB]");
    auto* opt_fap_tx = app.add_option("--fap-tx-mw", fap_tx_mw, "FAP transmit power [mW]");
    auto* opt_noise = app.add_option("--noise-mw", noise_mw, "received noise [mW]");
    auto* opt_bs_op = app.add_option("--bs-op-w", bs_op_w, "BS operating power [W]");
    auto* opt_fap_op = app.add_option("--fap-op-w", fap_op_w, "FAP operating power [W]");
    auto* opt_thresh = app.add_option("--min-snir-db", min_snir_db, "sleep SNIR threshold [dB]");
    auto* opt_fp = app.add_option("--fp", f_p, "average importance factor f_p");

    int max_faps = 25;
    std::vector<int> users{1, 3, 5};
    auto* sub_prob = app.add_subcommand("prob", "BS turn-off probability sweeps");
    sub_prob->add_option("--max-faps", max_faps, "sweep upper bound on FAP count");
    sub_prob->add_option("--users", users, "user counts to evaluate");
    sub_prob->fallthrough();

    double d_min = 1.0, d_max = 15.0, d_step = 0.5;
    auto* sub_snir = app.add_subcommand("snir", "SNIR vs distance, BS on/off comparison");
    sub_snir->add_option("--d-min", d_min, "first distance from the serving FAP [m]");
    sub_snir->add_option("--d-max", d_max, "last distance [m]");
    sub_snir->add_option("--d-step", d_step, "distance step [m]");
    sub_snir->fallthrough();

    int hours = 24;
    double off_fraction = 0.0;
    std::string from_summary;
    auto* sub_energy = app.add_subcommand("energy", "cumulative energy series");
    sub_energy->add_option("--hours", hours, "horizon in hours");
    auto* opt_frac = sub_energy->add_option("--off-fraction", off_fraction,
                                            "BS-off duty fraction in [0,1]");
    auto* opt_from = sub_energy->add_option("--from-summary", from_summary,
                                            "read the fraction from a simulate summary");
    sub_energy->fallthrough();

    auto* sub_sim = app.add_subcommand("simulate", "end-to-end day simulation");
    sub_sim->fallthrough();

    auto* sub_validate = app.add_subcommand("validate", "check a layout file");
    sub_validate->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        RunConfig cfg;
        if (opt_config->count() > 0) cfg = load_run_config(config_path);
        if (opt_layout->count() > 0) cfg.layout_path = layout_path;
        if (opt_scenario->count() > 0) cfg.scenario_path = scenario_path;
        if (opt_out->count() > 0) cfg.out_dir = out_dir;
        if (opt_seed->count() > 0) cfg.seed = seed;
        if (opt_fc->count() > 0) {
            cfg.macro_p.fc_mhz = fc_mhz;
            cfg.femto_p.fc_mhz = fc_mhz;
        }
        if (opt_hb->count() > 0) cfg.macro_p.hb_m = hb_m;
        if (opt_hm->count() > 0) cfg.macro_p.hm_m = hm_m;
        if (opt_lsh->count() > 0) cfg.macro_p.lsh_db = lsh_db;
        if (opt_hata->count() > 0) {
            if (hata_variant == "paper") {
                cfg.macro_p.variant = HataVariant::Paper;
            } else if (hata_variant == "standard") {
                cfg.macro_p.variant = HataVariant::Standard;
            } else {
                std::cerr << "--hata-variant must be \"paper\" or \"standard\"\n";
                return kExitUsage;
            }
        }
        if (opt_decay->count() > 0) cfg.femto_p.decay_index = decay_index;
        if (opt_walls->count() > 0) cfg.femto_p.walls = walls;
        if (opt_lpen->count() > 0) cfg.femto_p.lpen_db = lpen_db;
        if (opt_fap_tx->count() > 0) cfg.env.fap_tx_mw = fap_tx_mw;
        if (opt_noise->count() > 0) cfg.env.noise_mw = noise_mw;
        if (opt_bs_op->count() > 0) cfg.bs_op_w = bs_op_w;
        if (opt_fap_op->count() > 0) cfg.fap_op_w = fap_op_w;
        if (opt_thresh->count() > 0) cfg.min_snir_db = min_snir_db;
        if (opt_fp->count() > 0) cfg.f_p = f_p;

        if (sub_prob->parsed()) return cmd_prob(cfg, max_faps, users);
        if (sub_snir->parsed()) return cmd_snir(cfg, d_min, d_max, d_step);
        if (sub_energy->parsed()) {
            return cmd_energy(cfg, hours,
                              opt_frac->count() > 0 ? std::optional<double>(off_fraction)
                                                    : std::nullopt,
                              opt_from->count() > 0 ? std::optional<std::string>(from_summary)
                                                    : std::nullopt);
        }
        if (sub_sim->parsed()) return cmd_simulate(cfg);
        if (sub_validate->parsed()) return cmd_validate(cfg);
        std::cerr << "no subcommand given\n";
        return kExitUsage;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << '\n';
        return kExitInternal;
    }
}
