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

// Three-party switch protocol: Charlie prepares Bell pairs (and optionally
// scrambles Bob's halves), Alice dense-codes over her halves, Charlie reveals
// what he prepared, Bob measures and decodes.
//
// Quantum state only ever moves Charlie -> Alice/Bob and Alice -> Bob. There
// is deliberately no operation taking anything from Bob back to Alice.

#ifndef QSWITCH_PROTOCOL_HPP
#define QSWITCH_PROTOCOL_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qswitch/channels.hpp"
#include "qswitch/errors.hpp"
#include "qswitch/linalg.hpp"
#include "qswitch/rng.hpp"
#include "qswitch/states.hpp"
#include "qswitch/transcript.hpp"

namespace qswitch {

enum class Phase { prepared, encoded, revealed, decoded };

inline const char *to_string(Phase p) {
    switch (p) {
        case Phase::prepared:
            return "prepared";
        case Phase::encoded:
            return "encoded";
        case Phase::revealed:
            return "revealed";
        default:
            return "decoded";
    }
}

struct Pair {
    BellIndex index;
    TwoQubitState joint_state;
    std::size_t alice_slot = 0;
    std::size_t bob_slot = 0;
    std::optional<PauliCode> message;
};

/// perm[bob_slot] = index of the pair whose Bob half sits in that slot.
class PermutationKey {
   public:
    static PermutationKey identity(std::size_t n) {
        std::vector<std::size_t> p(n);
        std::iota(p.begin(), p.end(), std::size_t{0});
        return PermutationKey(std::move(p));
    }

    /// Throws ConfigError if `perm` is not a bijection on {0..n-1}.
    explicit PermutationKey(std::vector<std::size_t> perm) : perm_(std::move(perm)) {
        std::vector<bool> seen(perm_.size(), false);
        for (const std::size_t v : perm_) {
            if (v >= perm_.size() || seen[v]) {
                throw ConfigError("permutation is not a bijection");
            }
            seen[v] = true;
        }
    }

    std::size_t size() const { return perm_.size(); }
    std::size_t operator[](std::size_t bob_slot) const { return perm_[bob_slot]; }
    const std::vector<std::size_t> &values() const { return perm_; }

    /// inverse()[pair] = Bob slot holding that pair's half.
    std::vector<std::size_t> inverse() const {
        std::vector<std::size_t> inv(perm_.size());
        for (std::size_t s = 0; s < perm_.size(); ++s) {
            inv[perm_[s]] = s;
        }
        return inv;
    }

    bool is_identity() const {
        for (std::size_t s = 0; s < perm_.size(); ++s) {
            if (perm_[s] != s) {
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const PermutationKey &, const PermutationKey &) = default;

   private:
    std::vector<std::size_t> perm_;
};

/// What Charlie publishes after Alice has transmitted.
struct RevealRecord {
    std::vector<BellIndex> indices;
    std::optional<PermutationKey> perm;
};

struct DecodeResult {
    std::vector<PauliCode> codes;
    double accuracy = 0.0;
};

class PairRegister;

inline PairRegister charlie_prepare(std::size_t n, Rng &rng, std::optional<WernerParam> mixing = std::nullopt,
                                    Transcript *log = nullptr);
inline PermutationKey scramble(PairRegister &reg, Rng &rng, Transcript *log = nullptr);
inline void alice_encode(PairRegister &reg, const std::vector<PauliCode> &messages,
                         const std::optional<KrausSet> &channel = std::nullopt, Transcript *log = nullptr);
inline RevealRecord charlie_reveal(PairRegister &reg, bool include_perm, Transcript *log = nullptr);
inline DecodeResult bob_decode(PairRegister &reg, const RevealRecord &reveal, Rng &rng, Transcript *log = nullptr);
inline DecodeResult collusion_attack(PairRegister &reg, const RevealRecord &reveal, Rng &rng, Transcript *log = nullptr);
inline DecodeResult decode_with_pairing(PairRegister &reg, const RevealRecord &reveal,
                                        const std::vector<std::size_t> &bob_slot_for, Rng &rng,
                                        Transcript *log = nullptr);

/// The pairs of one session together with Charlie's private ordering. Only
/// the protocol operations can change it.
class PairRegister {
   public:
    /// A register over explicit indices (n >= 1). Joint states are the Bell
    /// projectors, or Werner states centred on them when `mixing` is given.
    static PairRegister from_indices(const std::vector<BellIndex> &indices,
                                     std::optional<WernerParam> mixing = std::nullopt) {
        if (indices.empty()) {
            throw ConfigError("a pair register needs at least one pair");
        }
        PairRegister reg;
        reg.pairs_.reserve(indices.size());
        for (std::size_t i = 0; i < indices.size(); ++i) {
            const BellIndex idx = indices[i];
            reg.pairs_.push_back(Pair{idx, mixing ? werner_state(*mixing, idx) : bell_projector(idx), i, i, {}});
        }
        reg.key_ = PermutationKey::identity(indices.size());
        return reg;
    }

    std::size_t size() const { return pairs_.size(); }
    const std::vector<Pair> &pairs() const { return pairs_; }
    const Pair &operator[](std::size_t i) const { return pairs_[i]; }
    Phase phase() const { return phase_; }
    bool scrambled() const { return scrambled_; }

   private:
    PairRegister() : key_(PermutationKey::identity(0)) {}

    void require_phase(Phase expected, const char *op) const {
        if (phase_ != expected) {
            throw PhaseViolation(std::string(op) + " requires phase '" + to_string(expected) + "', register is '" +
                                 to_string(phase_) + "'");
        }
    }

    std::vector<Pair> pairs_;
    PermutationKey key_;  // Charlie's secret
    Phase phase_ = Phase::prepared;
    bool scrambled_ = false;

    friend PermutationKey scramble(PairRegister &, Rng &, Transcript *);
    friend void alice_encode(PairRegister &, const std::vector<PauliCode> &, const std::optional<KrausSet> &,
                             Transcript *);
    friend RevealRecord charlie_reveal(PairRegister &, bool, Transcript *);
    friend DecodeResult decode_with_pairing(PairRegister &, const RevealRecord &, const std::vector<std::size_t> &,
                                            Rng &, Transcript *);
};

/// Charlie draws n >= 2 indices uniformly; the whole batch is redrawn while
/// every index is the same.
inline PairRegister charlie_prepare(std::size_t n, Rng &rng, std::optional<WernerParam> mixing, Transcript *log) {
    if (n < 2) {
        throw ConfigError("charlie_prepare needs n >= 2, got " + std::to_string(n));
    }
    std::vector<BellIndex> indices(n);
    bool all_same = true;
    while (all_same) {
        for (auto &idx : indices) {
            idx = BellIndex::from_ordinal(static_cast<unsigned>(uniform_index(rng, 4)));
        }
        all_same = true;
        for (const auto &idx : indices) {
            all_same = all_same && idx == indices[0];
        }
    }
    if (log) {
        log->record(event::Prepared{n});
    }
    return PairRegister::from_indices(indices, mixing);
}

/// Fisher-Yates shuffle of Bob's halves. Allowed only before encoding.
inline PermutationKey scramble(PairRegister &reg, Rng &rng, Transcript *log) {
    reg.require_phase(Phase::prepared, "scramble");
    std::vector<std::size_t> perm(reg.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (std::size_t i = perm.size(); i-- > 1;) {
        std::swap(perm[i], perm[uniform_index(rng, i + 1)]);
    }
    reg.key_ = PermutationKey(std::move(perm));
    for (std::size_t s = 0; s < reg.size(); ++s) {
        reg.pairs_[reg.key_[s]].bob_slot = s;
    }
    reg.scrambled_ = true;
    if (log) {
        log->record(event::Scrambled{true});
    }
    return reg.key_;
}

/// Dense-codes messages[i] on Alice's half of pair i, then sends it through
/// the channel. Throws ConfigError on a length mismatch.
inline void alice_encode(PairRegister &reg, const std::vector<PauliCode> &messages,
                         const std::optional<KrausSet> &channel, Transcript *log) {
    reg.require_phase(Phase::prepared, "alice_encode");
    if (messages.size() != reg.size()) {
        throw ConfigError("alice_encode got " + std::to_string(messages.size()) + " messages for " +
                          std::to_string(reg.size()) + " pairs");
    }
    std::string tag;
    if (channel) {
        require_complete(*channel);
        tag = digest(*channel);
    }
    if (log && !reg.scrambled_) {
        log->record(event::Scrambled{false});
    }
    for (std::size_t i = 0; i < reg.size(); ++i) {
        Pair &pair = reg.pairs_[i];
        pair.joint_state = dense_encode(pair.joint_state, messages[i]);
        if (channel) {
            pair.joint_state = apply_channel(pair.joint_state, *channel, Subsystem::first);
        }
        pair.message = messages[i];
        if (log) {
            log->record(event::Encoded{i, messages[i]});
            if (channel) {
                log->record(event::ChannelApplied{i, tag});
            }
        }
    }
    reg.phase_ = Phase::encoded;
}

/// Publishes the prepared indices and, on request, the permutation.
inline RevealRecord charlie_reveal(PairRegister &reg, bool include_perm, Transcript *log) {
    reg.require_phase(Phase::encoded, "charlie_reveal");
    if (include_perm && !reg.scrambled_) {
        throw ConfigError("cannot reveal a permutation for an unscrambled session");
    }
    RevealRecord r;
    r.indices.reserve(reg.size());
    for (const auto &p : reg.pairs_) {
        r.indices.push_back(p.index);
    }
    if (include_perm) {
        r.perm = reg.key_;
    }
    if (log) {
        log->record(event::Revealed{r.indices, r.perm ? std::optional(r.perm->values()) : std::nullopt});
    }
    reg.phase_ = Phase::revealed;
    return r;
}

/// Bob measures, for each Alice slot i, the Bell pair formed with his slot
/// bob_slot_for[i]. If that slot really holds pair i the joint state is used;
/// otherwise the two halves are unentangled and the state is the product of
/// the reduced states.
inline DecodeResult decode_with_pairing(PairRegister &reg, const RevealRecord &reveal,
                                        const std::vector<std::size_t> &bob_slot_for, Rng &rng, Transcript *log) {
    reg.require_phase(Phase::revealed, "decode");
    if (reveal.indices.size() != reg.size() || bob_slot_for.size() != reg.size()) {
        throw ConfigError("reveal record does not match the register size");
    }
    DecodeResult out;
    out.codes.reserve(reg.size());
    std::size_t correct = 0;
    for (std::size_t i = 0; i < reg.size(); ++i) {
        const std::size_t partner = reg.key_[bob_slot_for[i]];
        const TwoQubitState joint =
            partner == i ? reg.pairs_[i].joint_state
                         : tensor_product(partial_trace(reg.pairs_[i].joint_state, Subsystem::first),
                                          partial_trace(reg.pairs_[partner].joint_state, Subsystem::second));
        const BellIndex outcome = sample_bell_outcome(bell_measure(joint), rng);
        const PauliCode code = decode_message(outcome, reveal.indices[i]);
        out.codes.push_back(code);
        if (reg.pairs_[i].message && *reg.pairs_[i].message == code) {
            ++correct;
        }
        if (log) {
            log->record(event::Measured{i, outcome});
            log->record(event::Decoded{i, code});
        }
    }
    out.accuracy = static_cast<double>(correct) / static_cast<double>(reg.size());
    reg.phase_ = Phase::decoded;
    return out;
}

/// Honest decoding. A scrambled session needs the revealed permutation.
inline DecodeResult bob_decode(PairRegister &reg, const RevealRecord &reveal, Rng &rng, Transcript *log) {
    if (reg.scrambled() && !reveal.perm) {
        throw MissingPermutationError("scrambled session: Bob cannot pair his qubits without the permutation");
    }
    const std::vector<std::size_t> slots =
        reveal.perm ? reveal.perm->inverse() : PermutationKey::identity(reg.size()).values();
    return decode_with_pairing(reg, reveal, slots, rng, log);
}

/// Alice and Bob pool everything they hold and pair Alice slot i with Bob
/// slot i. Works on any register; on an unscrambled one it is just decoding.
inline DecodeResult collusion_attack(PairRegister &reg, const RevealRecord &reveal, Rng &rng, Transcript *log) {
    if (log) {
        log->record(event::Attack{"collusion"});
    }
    return decode_with_pairing(reg, reveal, PermutationKey::identity(reg.size()).values(), rng, log);
}

/// Two codes per hex digit, high bits first: "b4" -> 10 11 01 00.
inline std::vector<PauliCode> parse_hex_messages(std::string_view hex) {
    if (hex.empty()) {
        throw ConfigError("empty message string");
    }
    std::vector<PauliCode> out;
    out.reserve(2 * hex.size());
    for (const char ch : hex) {
        unsigned v = 0;
        if (ch >= '0' && ch <= '9') {
            v = unsigned(ch - '0');
        } else if (ch >= 'a' && ch <= 'f') {
            v = unsigned(ch - 'a' + 10);
        } else if (ch >= 'A' && ch <= 'F') {
            v = unsigned(ch - 'A' + 10);
        } else {
            throw ConfigError(std::string("invalid hex digit '") + ch + "' in messages");
        }
        out.push_back(PauliCode::from_ordinal(v >> 2));
        out.push_back(PauliCode::from_ordinal(v & 3U));
    }
    return out;
}

inline std::vector<PauliCode> random_messages(std::size_t n, Rng &rng) {
    std::vector<PauliCode> out(n);
    for (auto &m : out) {
        m = PauliCode::from_ordinal(static_cast<unsigned>(uniform_index(rng, 4)));
    }
    return out;
}

enum class Attack { none, collusion };

struct SessionConfig {
    std::size_t n = 2;
    /// Werner angle of Charlie's partially revealed ensemble; pure pairs if unset.
    std::optional<double> psi;
    std::optional<KrausSet> channel;
    bool scrambled = false;
    bool reveal_perm = false;
    Attack attack = Attack::none;
    /// Random messages drawn from the session RNG if unset.
    std::optional<std::vector<PauliCode>> messages;
    std::uint64_t seed = 0;
};

struct SessionResult {
    Transcript transcript;
    std::vector<PauliCode> messages;
    std::vector<PauliCode> decoded;
    double accuracy = 0.0;
};

/// Runs prepare, [scramble], encode, reveal and decode (or the collusion
/// attack) from a single seeded RNG.
inline SessionResult run_session(const SessionConfig &cfg) {
    if (cfg.reveal_perm && !cfg.scrambled) {
        throw ConfigError("reveal_perm requires a scrambled session");
    }
    if (cfg.attack == Attack::collusion && (!cfg.scrambled || cfg.reveal_perm)) {
        throw ConfigError("the collusion attack needs a scrambled session with the permutation withheld");
    }
    if (cfg.messages && cfg.messages->size() != cfg.n) {
        throw ConfigError("got " + std::to_string(cfg.messages->size()) + " messages for n = " +
                          std::to_string(cfg.n));
    }
    const std::optional<WernerParam> mixing = cfg.psi ? std::optional(WernerParam(*cfg.psi)) : std::nullopt;
    if (cfg.channel) {
        require_complete(*cfg.channel);
    }

    SessionResult res{Transcript(cfg.seed), {}, {}, 0.0};
    Rng rng(cfg.seed);
    res.messages = cfg.messages ? *cfg.messages : random_messages(cfg.n, rng);
    Transcript *log = &res.transcript;

    PairRegister reg = charlie_prepare(cfg.n, rng, mixing, log);
    if (cfg.scrambled) {
        scramble(reg, rng, log);
    }
    alice_encode(reg, res.messages, cfg.channel, log);
    const RevealRecord reveal = charlie_reveal(reg, cfg.reveal_perm, log);
    const DecodeResult d =
        cfg.attack == Attack::collusion ? collusion_attack(reg, reveal, rng, log) : bob_decode(reg, reveal, rng, log);
    res.decoded = d.codes;
    res.accuracy = d.accuracy;
    return res;
}

}  // namespace qswitch

#endif  // QSWITCH_PROTOCOL_HPP
