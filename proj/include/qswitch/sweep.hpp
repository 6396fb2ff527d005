// Copyright 2026 The qswitch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Parameter sweeps of the Holevo quantity, written as CSV tables.

#ifndef QSWITCH_SWEEP_HPP
#define QSWITCH_SWEEP_HPP

#include <cstdio>
#include <functional>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qswitch/channels.hpp"
#include "qswitch/errors.hpp"
#include "qswitch/information.hpp"
#include "qswitch/sgad_provider.hpp"
#include "qswitch/states.hpp"

namespace qswitch {

/// Evenly spaced closed interval; the last point is exactly `max`.
struct Axis {
    double min = 0.0;
    double max = 1.0;
    std::size_t steps = 50;

    void validate(const char *name) const {
        if (steps < 2) {
            throw ConfigError(std::string(name) + ": need at least 2 steps");
        }
        if (!(min < max)) {
            throw ConfigError(std::string(name) + ": need min < max");
        }
    }

    std::vector<double> grid() const {
        std::vector<double> g(steps);
        for (std::size_t i = 0; i < steps; ++i) {
            g[i] = i + 1 == steps ? max : min + (max - min) * static_cast<double>(i) / static_cast<double>(steps - 1);
        }
        return g;
    }
};

/// Bath held fixed during a sweep (r is swept or listed separately).
struct BathFixed {
    double T = 0.1;
    double t = 0.5;
    double gamma0 = 1.0;
};

struct SweepRow {
    std::vector<double> values;
    /// Empty when the row has no channel or the provider rejected it.
    std::optional<double> chi_noisy;
};

struct SweepTable {
    std::vector<std::string> columns;  // without chi_noisy
    bool noisy = false;
    std::vector<SweepRow> rows;

    void write_csv(std::ostream &os) const {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            os << (i ? "," : "") << columns[i];
        }
        if (noisy) {
            os << ",chi_noisy";
        }
        os << '\n';
        char buf[32];
        for (const auto &row : rows) {
            for (std::size_t i = 0; i < row.values.size(); ++i) {
                std::snprintf(buf, sizeof buf, "%.12g", row.values[i]);
                os << (i ? "," : "") << buf;
            }
            if (noisy) {
                os << ',';
                if (row.chi_noisy) {
                    std::snprintf(buf, sizeof buf, "%.12g", *row.chi_noisy);
                    os << buf;
                }
            }
            os << '\n';
        }
    }
};

using WarningSink = std::function<void(const std::string &)>;

namespace detail {

inline void check_psi_axis(const Axis &a) {
    a.validate("psi");
    if (a.min < 0.0 || a.max > std::numbers::pi / 2) {
        throw ConfigError("psi range must lie within [0, pi/2]");
    }
}

/// SGAD channel for one bath point, or nothing (with a warning) if the
/// provider rejects it.
inline std::optional<KrausSet> channel_for(const SgadParameterProvider &provider, const BathConfig &cfg,
                                           const WarningSink &warn) {
    try {
        return sgad_kraus(sgad_params_from_bath(cfg, provider));
    } catch (const DomainError &e) {
        if (warn) {
            char buf[160];
            std::snprintf(buf, sizeof buf, "r=%.12g T=%.12g t=%.12g gamma0=%.12g: ", cfg.r, cfg.T, cfg.t,
                          cfg.gamma0);
            warn(buf + std::string(e.what()));
        }
        return std::nullopt;
    }
}

inline std::optional<double> noisy_chi(const WernerParam &w, const std::optional<KrausSet> &ch) {
    if (!ch) {
        return std::nullopt;
    }
    return holevo(signal_ensemble(w, ch));
}

}  // namespace detail

/// chi against key information c. Adds an r column and noisy values when
/// `squeezing` is non-empty (one block of rows per r).
inline SweepTable sweep_key(const Axis &c_axis, const std::vector<double> &squeezing, const BathFixed &bath,
                            const SgadParameterProvider &provider, const WarningSink &warn = {}) {
    c_axis.validate("c");
    if (c_axis.min < 0.0 || c_axis.max > kMaxKeyInformation) {
        throw ConfigError("key information range must lie within [0, 2]");
    }
    SweepTable table;
    const auto grid = c_axis.grid();
    if (squeezing.empty()) {
        table.columns = {"c", "psi", "chi_noiseless"};
        for (const double c : grid) {
            const WernerParam w = werner_param_for_key(c);
            table.rows.push_back({{c, w.psi(), holevo(signal_ensemble(w, std::nullopt))}, std::nullopt});
        }
        return table;
    }
    table.columns = {"r", "c", "psi", "chi_noiseless"};
    table.noisy = true;
    for (const double r : squeezing) {
        const auto ch = detail::channel_for(provider, {r, bath.T, bath.t, bath.gamma0}, warn);
        for (const double c : grid) {
            const WernerParam w = werner_param_for_key(c);
            table.rows.push_back({{r, c, w.psi(), holevo(signal_ensemble(w, std::nullopt))}, detail::noisy_chi(w, ch)});
        }
    }
    return table;
}

/// chi against the Werner angle, one block of rows per squeezing value.
inline SweepTable sweep_psi(const Axis &psi_axis, const std::vector<double> &squeezing, const BathFixed &bath,
                            const SgadParameterProvider &provider, const WarningSink &warn = {}) {
    detail::check_psi_axis(psi_axis);
    if (squeezing.empty()) {
        throw ConfigError("sweep_psi needs at least one squeezing value");
    }
    SweepTable table;
    table.columns = {"r", "psi", "c", "chi_noiseless"};
    table.noisy = true;
    const auto grid = psi_axis.grid();
    for (const double r : squeezing) {
        const auto ch = detail::channel_for(provider, {r, bath.T, bath.t, bath.gamma0}, warn);
        for (const double psi : grid) {
            const WernerParam w(psi);
            table.rows.push_back({{r, psi, key_information(w).c, holevo(signal_ensemble(w, std::nullopt))},
                                  detail::noisy_chi(w, ch)});
        }
    }
    return table;
}

/// chi on an (r, c) grid at fixed T and t.
inline SweepTable sweep_squeezing(const Axis &r_axis, const Axis &c_axis, const BathFixed &bath,
                                  const SgadParameterProvider &provider, const WarningSink &warn = {}) {
    r_axis.validate("r");
    c_axis.validate("c");
    if (c_axis.min < 0.0 || c_axis.max > kMaxKeyInformation) {
        throw ConfigError("key information range must lie within [0, 2]");
    }
    SweepTable table;
    table.columns = {"r", "c", "chi_noiseless"};
    table.noisy = true;
    const auto c_grid = c_axis.grid();
    std::vector<WernerParam> params;
    std::vector<double> clean;
    for (const double c : c_grid) {
        params.push_back(werner_param_for_key(c));
        clean.push_back(holevo(signal_ensemble(params.back(), std::nullopt)));
    }
    for (const double r : r_axis.grid()) {
        const auto ch = detail::channel_for(provider, {r, bath.T, bath.t, bath.gamma0}, warn);
        for (std::size_t i = 0; i < c_grid.size(); ++i) {
            table.rows.push_back({{r, c_grid[i], clean[i]}, detail::noisy_chi(params[i], ch)});
        }
    }
    return table;
}

/// chi on an (r, t) grid at fixed key information c and temperature T.
inline SweepTable sweep_rt(const Axis &r_axis, const Axis &t_axis, double c, double T, double gamma0,
                           const SgadParameterProvider &provider, const WarningSink &warn = {}) {
    r_axis.validate("r");
    t_axis.validate("t");
    const WernerParam w = werner_param_for_key(c);
    const double clean = holevo(signal_ensemble(w, std::nullopt));
    SweepTable table;
    table.columns = {"r", "t", "c", "chi_noiseless"};
    table.noisy = true;
    for (const double r : r_axis.grid()) {
        for (const double t : t_axis.grid()) {
            const auto ch = detail::channel_for(provider, {r, T, t, gamma0}, warn);
            table.rows.push_back({{r, t, c, clean}, detail::noisy_chi(w, ch)});
        }
    }
    return table;
}

}  // namespace qswitch

#endif  // QSWITCH_SWEEP_HPP
