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

// qswitch: CSV sweeps of the Holevo quantity and seeded protocol sessions.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>

#include "CLI11.hpp"
#include "qswitch.hpp"

namespace {

using namespace qswitch;

struct BathFlags {
    double T = 0.1;
    double t = 0.5;
    double gamma0 = 1.0;
    double omega = 1.0;
    double squeeze_phase = 0.0;

    void add_to(CLI::App *cmd) {
        cmd->add_option("--T", T, "Bath temperature (units of the qubit frequency)")->capture_default_str();
        cmd->add_option("--t", t, "Evolution time")->capture_default_str();
        cmd->add_option("--gamma0", gamma0, "Spontaneous emission rate")->capture_default_str();
        cmd->add_option("--omega", omega, "Qubit transition frequency")->capture_default_str();
        cmd->add_option("--squeeze-phase", squeeze_phase, "Squeezing phase")->capture_default_str();
    }

    SqueezedBathProvider provider() const { return SqueezedBathProvider({omega, squeeze_phase}); }
    BathFixed fixed() const { return {T, t, gamma0}; }
};

void warn(const std::string &msg) { std::cerr << "warning: " << msg << '\n'; }

void emit(const SweepTable &table, const std::string &out) {
    if (out.empty() || out == "-") {
        table.write_csv(std::cout);
        return;
    }
    std::ofstream f(out);
    if (!f) {
        throw ConfigError("cannot open " + out + " for writing");
    }
    table.write_csv(f);
    if (!f.flush()) {
        throw ConfigError("failed writing " + out);
    }
}

struct ProtocolFlags {
    std::size_t n = 2;
    std::uint64_t seed = 0;
    std::string messages = "random";
    std::optional<double> psi;
    std::optional<double> r;
    bool scramble = false;
    bool reveal_perm = false;
    std::string attack = "none";
    std::size_t trials = 1;
    std::string out;
};

int run_protocol(const ProtocolFlags &f, const BathFlags &bath, bool n_given, bool noise) {
    SessionConfig cfg;
    cfg.n = f.n;
    cfg.seed = f.seed;
    cfg.psi = f.psi;
    cfg.scrambled = f.scramble;
    cfg.reveal_perm = f.reveal_perm;
    cfg.attack = f.attack == "collusion" ? Attack::collusion : Attack::none;
    if (f.messages != "random") {
        cfg.messages = parse_hex_messages(f.messages);
        if (!n_given) {
            cfg.n = cfg.messages->size();
        }
    }
    if (noise) {
        const BathConfig bc{f.r.value_or(0.0), bath.T, bath.t, bath.gamma0};
        cfg.channel = sgad_kraus(bath.provider().params(bc));
    }
    if (f.trials == 0) {
        throw ConfigError("--trials must be at least 1");
    }

    double sum = 0.0;
    for (std::size_t i = 0; i < f.trials; ++i) {
        SessionConfig trial = cfg;
        trial.seed = cfg.seed + i;
        const SessionResult res = run_session(trial);
        sum += res.accuracy;
        if (i == 0 && !f.out.empty()) {
            std::ofstream os(f.out);
            if (!os) {
                throw ConfigError("cannot open " + f.out + " for writing");
            }
            os << res.transcript.serialize();
            if (!os.flush()) {
                throw ConfigError("failed writing " + f.out);
            }
        }
    }
    std::printf("n=%zu scrambled=%d revealed=%d attack=%s trials=%zu accuracy=%.12g\n", cfg.n, cfg.scrambled,
                cfg.reveal_perm, f.attack.c_str(), f.trials, sum / static_cast<double>(f.trials));
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Holevo sweeps and protocol sessions for a Bell-pair cryptographic switch"};
    app.require_subcommand(1);
    constexpr double kHalfPi = std::numbers::pi / 2;

    // sweep-key
    BathFlags key_bath;
    Axis key_axis{0.0, kMaxKeyInformation, 50};
    std::vector<double> key_r;
    std::string key_out;
    auto *key = app.add_subcommand("sweep-key", "chi against key information c");
    key_bath.add_to(key);
    key->add_option("--min", key_axis.min, "Smallest c")->capture_default_str();
    key->add_option("--max", key_axis.max, "Largest c")->capture_default_str();
    key->add_option("--steps", key_axis.steps, "Grid points")->capture_default_str();
    key->add_option("--r", key_r, "Squeezing values for noisy columns (repeatable)");
    key->add_option("--out", key_out, "CSV path (stdout if omitted)");

    // sweep-psi
    BathFlags psi_bath;
    Axis psi_axis{0.0, kHalfPi, 50};
    std::vector<double> psi_r{0.0, -0.2, 0.3};
    std::string psi_out;
    auto *psi = app.add_subcommand("sweep-psi", "chi against the Werner angle psi");
    psi_bath.add_to(psi);
    psi->add_option("--min", psi_axis.min, "Smallest psi")->capture_default_str();
    psi->add_option("--max", psi_axis.max, "Largest psi")->capture_default_str();
    psi->add_option("--steps", psi_axis.steps, "Grid points")->capture_default_str();
    psi->add_option("--r", psi_r, "Squeezing values (repeatable)")->capture_default_str();
    psi->add_option("--out", psi_out, "CSV path (stdout if omitted)");

    // sweep-squeezing
    BathFlags sq_bath;
    Axis sq_r{-1.0, 1.0, 50};
    Axis sq_c{0.5, 2.0, 4};
    std::string sq_out;
    auto *sq = app.add_subcommand("sweep-squeezing", "chi against squeezing r for several c");
    sq_bath.add_to(sq);
    sq->add_option("--min", sq_r.min, "Smallest r")->capture_default_str();
    sq->add_option("--max", sq_r.max, "Largest r")->capture_default_str();
    sq->add_option("--steps", sq_r.steps, "Grid points in r")->capture_default_str();
    sq->add_option("--c-min", sq_c.min, "Smallest c")->capture_default_str();
    sq->add_option("--c-max", sq_c.max, "Largest c")->capture_default_str();
    sq->add_option("--c-steps", sq_c.steps, "Grid points in c")->capture_default_str();
    sq->add_option("--out", sq_out, "CSV path (stdout if omitted)");

    // sweep-rt
    BathFlags rt_bath;
    Axis rt_r{-1.0, 1.0, 50};
    Axis rt_t{0.0, 3.0, 50};
    double rt_c = 1.0;
    std::string rt_out;
    auto *rt = app.add_subcommand("sweep-rt", "chi on a squeezing by time grid");
    rt_bath.add_to(rt);
    rt->add_option("--r-min", rt_r.min, "Smallest r")->capture_default_str();
    rt->add_option("--r-max", rt_r.max, "Largest r")->capture_default_str();
    rt->add_option("--t-min", rt_t.min, "Smallest t")->capture_default_str();
    rt->add_option("--t-max", rt_t.max, "Largest t")->capture_default_str();
    std::size_t rt_steps = 50;
    rt->add_option("--steps", rt_steps, "Grid points per axis")->capture_default_str();
    rt->add_option("--c", rt_c, "Key information")->capture_default_str();
    rt->add_option("--out", rt_out, "CSV path (stdout if omitted)");

    // protocol
    BathFlags pr_bath;
    ProtocolFlags pf;
    auto *pr = app.add_subcommand("protocol", "Run seeded protocol sessions");
    auto *n_opt = pr->add_option("--n", pf.n, "Number of Bell pairs")->capture_default_str();
    pr->add_option("--seed", pf.seed, "RNG seed")->capture_default_str();
    pr->add_option("--messages", pf.messages, "'random' or a hex string (two codes per digit)")
        ->capture_default_str();
    pr->add_option("--psi", pf.psi, "Werner angle of the prepared pairs (pure if omitted)");
    auto *T_opt = pr->add_option("--T", pr_bath.T, "Bath temperature; enables noise");
    auto *t_opt = pr->add_option("--t", pr_bath.t, "Evolution time; enables noise");
    auto *r_opt = pr->add_option("--r", pf.r, "Squeezing; enables noise");
    auto *g_opt = pr->add_option("--gamma0", pr_bath.gamma0, "Spontaneous emission rate; enables noise");
    pr->add_option("--omega", pr_bath.omega, "Qubit transition frequency");
    pr->add_flag("--scramble", pf.scramble, "Charlie permutes Bob's qubits");
    pr->add_flag("--reveal-perm,!--no-reveal-perm", pf.reveal_perm, "Charlie reveals the permutation");
    pr->add_option("--attack", pf.attack, "Bob's strategy")
        ->check(CLI::IsMember({"none", "collusion"}))
        ->capture_default_str();
    pr->add_option("--trials", pf.trials, "Independent sessions (seeds seed, seed+1, ...)")->capture_default_str();
    pr->add_option("--out", pf.out, "Transcript path for the first session");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*key) {
            emit(sweep_key(key_axis, key_r, key_bath.fixed(), key_bath.provider(), warn), key_out);
        } else if (*psi) {
            emit(sweep_psi(psi_axis, psi_r, psi_bath.fixed(), psi_bath.provider(), warn), psi_out);
        } else if (*sq) {
            emit(sweep_squeezing(sq_r, sq_c, sq_bath.fixed(), sq_bath.provider(), warn), sq_out);
        } else if (*rt) {
            rt_r.steps = rt_t.steps = rt_steps;
            emit(sweep_rt(rt_r, rt_t, rt_c, rt_bath.T, rt_bath.gamma0, rt_bath.provider(), warn), rt_out);
        } else if (*pr) {
            const bool noise = T_opt->count() || t_opt->count() || r_opt->count() || g_opt->count();
            return run_protocol(pf, pr_bath, n_opt->count() > 0, noise);
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
