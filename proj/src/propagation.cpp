#include "femtosleep/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "femtosleep/errors.hpp"

namespace femtosleep {

double mobile_antenna_correction(double fc_mhz, double hm_m, HataVariant variant) {
    if (!(fc_mhz > 0.0)) {
        throw InvalidParameterError("mobile_antenna_correction: fc must be > 0 MHz");
    }
    if (!(hm_m > 0.0)) {
        throw InvalidParameterError("mobile_antenna_correction: hm must be > 0 m");
    }
    const double lf = std::log10(fc_mhz);
    const double first = variant == HataVariant::Paper ? 1.1 * (lf - 0.7) * hm_m
                                                       : (1.1 * lf - 0.7) * hm_m;
    return first - (1.56 * lf - 0.8);
}

double macro_path_loss(const MacroLossParams& p, double d_km) {
    if (!(p.fc_mhz > 0.0) || !(p.hb_m > 0.0) || !(p.hm_m > 0.0)) {
        throw InvalidParameterError("macro_path_loss: fc, hb, hm must all be > 0");
    }
    if (!(d_km >= p.min_distance_km)) {
        throw OutOfModelRangeError("macro_path_loss: distance " + std::to_string(d_km) +
                                   " km below model minimum " +
                                   std::to_string(p.min_distance_km) + " km");
    }
    const double lf = std::log10(p.fc_mhz);
    const double lhb = std::log10(p.hb_m);
    const double a_hm = mobile_antenna_correction(p.fc_mhz, p.hm_m, p.variant);
    if (p.variant == HataVariant::Paper) {
        return 36.55 + 26.16 * lf - 3.82 * lhb - a_hm +
               (44.9 - 6.55 * std::log10(p.hm_m)) * std::log10(d_km) + p.lsh_db;
    }
    return 69.55 + 26.16 * lf - 13.82 * lhb - a_hm +
           (44.9 - 6.55 * lhb) * std::log10(d_km) + p.lsh_db;
}

double femto_path_loss(const FemtoLossParams& p, double d1_m) {
    if (!(p.fc_mhz > 0.0)) {
        throw InvalidParameterError("femto_path_loss: fc must be > 0 MHz");
    }
    if (!(p.decay_index > 0.0)) {
        throw InvalidParameterError("femto_path_loss: decay_index must be > 0");
    }
    if (p.walls < 0) {
        throw InvalidParameterError("femto_path_loss: walls must be >= 0");
    }
    if (!(d1_m >= p.min_distance_m)) {
        throw OutOfModelRangeError("femto_path_loss: distance " + std::to_string(d1_m) +
                                   " m below model minimum " +
                                   std::to_string(p.min_distance_m) + " m");
    }
    return 20.0 * std::log10(p.fc_mhz) + p.decay_index * std::log10(d1_m) +
           4.0 * static_cast<double>(p.walls) * static_cast<double>(p.walls) - 28.0;
}

double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }

double mw_to_dbm(double mw) {
    if (!(mw > 0.0)) {
        throw InvalidParameterError("mw_to_dbm: power must be > 0 mW");
    }
    return 10.0 * std::log10(mw);
}

double watts_to_dbm(double watts) { return mw_to_dbm(watts * 1000.0); }

SnirResult snir(const SnirInputs& in) {
    const double den = in.im_mw + in.if_mw + in.noise_mw;
    if (!(den > 0.0)) {
        throw DegenerateLayoutError("snir: interference-plus-noise denominator is zero");
    }
    SnirResult out;
    out.linear = in.s0_mw / den;
    out.db = 10.0 * std::log10(out.linear);
    return out;
}

namespace {

// Received FAP power in mW at geometric distance d1_m, floored to the
// femto model minimum.
double fap_rx_mw(const FemtoLossParams& femto_p, const LinkEnv& env, double d1_m) {
    const double d = std::max(d1_m, femto_p.min_distance_m);
    return dbm_to_mw(mw_to_dbm(env.fap_tx_mw) - femto_path_loss(femto_p, d));
}

// Received macro power in mW at the user; indoor users see lpen_db extra.
double macro_rx_mw(const NetworkLayout& layout, const MacroLossParams& macro_p,
                   double lpen_db, Point user, bool indoor) {
    const double d_km =
        std::max(distance(user, layout.macro.center) / 1000.0, macro_p.min_distance_km);
    double rx_dbm = watts_to_dbm(layout.macro.bs_tx_w) - macro_path_loss(macro_p, d_km);
    if (indoor) rx_dbm -= lpen_db;
    return dbm_to_mw(rx_dbm);
}

}  // namespace

double snir_at_user_db(const NetworkLayout& layout, Point user, bool bs_on,
                       const MacroLossParams& macro_p, const FemtoLossParams& femto_p,
                       const LinkEnv& env) {
    const Placement where = locate(layout, user);

    // Femto power arriving from every active FAP; the serving one (when
    // the user is inside FAP coverage) is taken back out of the sum.
    double fap_total_mw = 0.0;
    for (const Station& s : layout.stations) {
        if (!s.has_fap()) continue;
        fap_total_mw +=
            s.fap_count * fap_rx_mw(femto_p, env, distance(user, s.position));
    }

    SnirInputs in;
    in.noise_mw = env.noise_mw;
    if (where.in_fap()) {
        const Station& serving = layout.stations[where.station];
        const double serving_rx =
            fap_rx_mw(femto_p, env, distance(user, serving.position));
        in.s0_mw = serving_rx;
        in.if_mw = std::max(fap_total_mw - serving_rx, 0.0);
        in.im_mw = bs_on ? macro_rx_mw(layout, macro_p, femto_p.lpen_db, user, true) : 0.0;
    } else {
        if (!bs_on) {
            throw NoServiceError(
                "snir_at_user: BS is off and the user is outside FAP coverage");
        }
        const bool indoor = where.cls == CoverageClass::InsideStationNoFap;
        in.s0_mw = macro_rx_mw(layout, macro_p, femto_p.lpen_db, user, indoor);
        in.if_mw = fap_total_mw;
        in.im_mw = 0.0;  // the macro BS is serving, not interfering
    }
    return snir(in).db;
}

}  // namespace femtosleep
