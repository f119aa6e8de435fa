#ifndef FEMTOSLEEP_PROPAGATION_HPP
#define FEMTOSLEEP_PROPAGATION_HPP

#include "femtosleep/layout.hpp"

namespace femtosleep {

// Two macro path-loss variants. Paper is the nonstandard Okumura-Hata
// form all reference values in this toolkit assume (constant 36.55,
// coefficient 3.82 on log10(hb), the mobile height inside the distance
// bracket, additive shadowing margin); Standard selects the textbook
// coefficients (69.55, 13.82, BS height in the bracket).
enum class HataVariant { Paper, Standard };

struct MacroLossParams {
    double fc_mhz = 1800.0;  // carrier frequency
    double hb_m = 100.0;     // BS antenna height
    double hm_m = 1.5;       // mobile antenna height
    double lsh_db = 8.0;     // fixed shadowing margin
    HataVariant variant = HataVariant::Paper;
    double min_distance_km = 0.01;  // model validity floor
};

struct FemtoLossParams {
    double fc_mhz = 1800.0;
    double decay_index = 30.0;  // indoor distance-power decay index
    int walls = 1;              // walls between FAP and mobile
    double lpen_db = 20.0;      // building penetration loss on macro->indoor links
    double min_distance_m = 1.0;
};

// Reference link-budget constants.
inline constexpr double kNoiseMw = 7e-7;   // total received noise
inline constexpr double kFapTxMw = 15.0;   // FAP transmit power

// Transmit/noise environment for full link-budget evaluation. The macro
// transmit power comes from the layout's MacroCell.
struct LinkEnv {
    double fap_tx_mw = kFapTxMw;
    double noise_mw = kNoiseMw;
};

struct SnirInputs {
    double s0_mw = 0.0;           // desired signal
    double im_mw = 0.0;           // macrocell interference
    double if_mw = 0.0;           // femtocell interference
    double noise_mw = kNoiseMw;
};

struct SnirResult {
    double linear = 0.0;
    double db = 0.0;
};

// Mobile antenna correction a(hm) in dB.
//   Paper:    1.1*(log10 fc - 0.7)*hm - (1.56*log10 fc - 0.8)
//   Standard: (1.1*log10 fc - 0.7)*hm - (1.56*log10 fc - 0.8)
double mobile_antenna_correction(double fc_mhz, double hm_m,
                                 HataVariant variant = HataVariant::Paper);

// Macrocell path loss in dB at distance d_km (kilometers). Throws
// OutOfModelRangeError below p.min_distance_km.
double macro_path_loss(const MacroLossParams& p, double d_km);

// Femtocell path loss in dB at distance d1_m (meters):
// 20*log10 fc + decay_index*log10 d1 + 4*walls^2 - 28. Throws
// OutOfModelRangeError below p.min_distance_m.
double femto_path_loss(const FemtoLossParams& p, double d1_m);

double dbm_to_mw(double dbm);
double mw_to_dbm(double mw);     // throws InvalidParameterError for mw <= 0
double watts_to_dbm(double watts);

// SNIR = s0 / (im + if + noise), in linear ratio and dB. Throws
// DegenerateLayoutError when the denominator is zero.
SnirResult snir(const SnirInputs& in);

// Full link budget at a user position. The serving transmitter is the
// user's FAP when inside FAP coverage, otherwise the macro BS (only if
// bs_on; else NoServiceError). Macro signals reaching indoor users carry
// the additional lpen_db. Femto interference sums every active FAP that
// is not the serving one, co-located FAPs included. Each link is
// evaluated at its model's minimum distance when the geometric distance
// falls below it (near-field floor); the path-loss functions themselves
// keep rejecting such distances.
double snir_at_user_db(const NetworkLayout& layout, Point user, bool bs_on,
                       const MacroLossParams& macro_p, const FemtoLossParams& femto_p,
                       const LinkEnv& env = {});

}  // namespace femtosleep

#endif
