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

// Session transcript: an ordered event log with a line-oriented text form.
//
//   qswitch-transcript/1<TAB>seed<TAB><seed>
//   Prepared<TAB><n>
//   Scrambled<TAB><0|1>
//   Encoded<TAB><slot><TAB><ab>
//   ChannelApplied<TAB><slot><TAB><digest>
//   Revealed<TAB><jk,jk,...><TAB><p0,p1,...|->
//   Attack<TAB><strategy>
//   Measured<TAB><slot><TAB><jk>
//   Decoded<TAB><slot><TAB><ab>
//   Decoy<TAB><slot><TAB><payload>        (reserved, never emitted)
//
// Slots are Alice's zero-based positions; permutations map Bob's received
// slot to the true pair index. Lines end with '\n'.

#ifndef QSWITCH_TRANSCRIPT_HPP
#define QSWITCH_TRANSCRIPT_HPP

#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "qswitch/errors.hpp"
#include "qswitch/states.hpp"

namespace qswitch {

inline constexpr std::string_view kTranscriptSchema = "qswitch-transcript/1";

namespace event {

/// Indices stay hidden at preparation time.
struct Prepared {
    std::size_t n = 0;
    friend bool operator==(const Prepared &, const Prepared &) = default;
};
struct Scrambled {
    bool scrambled = false;
    friend bool operator==(const Scrambled &, const Scrambled &) = default;
};
struct Encoded {
    std::size_t slot = 0;
    PauliCode code;
    friend bool operator==(const Encoded &, const Encoded &) = default;
};
struct ChannelApplied {
    std::size_t slot = 0;
    std::string digest;
    friend bool operator==(const ChannelApplied &, const ChannelApplied &) = default;
};
struct Revealed {
    std::vector<BellIndex> indices;
    std::optional<std::vector<std::size_t>> perm;
    friend bool operator==(const Revealed &, const Revealed &) = default;
};
struct Attack {
    std::string strategy;
    friend bool operator==(const Attack &, const Attack &) = default;
};
struct Measured {
    std::size_t slot = 0;
    BellIndex outcome;
    friend bool operator==(const Measured &, const Measured &) = default;
};
struct Decoded {
    std::size_t slot = 0;
    PauliCode code;
    friend bool operator==(const Decoded &, const Decoded &) = default;
};
/// Reserved for decoy check qubits.
struct Decoy {
    std::size_t slot = 0;
    std::string payload;
    friend bool operator==(const Decoy &, const Decoy &) = default;
};

}  // namespace event

using Event = std::variant<event::Prepared, event::Scrambled, event::Encoded, event::ChannelApplied,
                           event::Revealed, event::Attack, event::Measured, event::Decoded, event::Decoy>;

class TranscriptParseError : public Error {
   public:
    TranscriptParseError(std::size_t line, const std::string &what)
        : Error("transcript line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

   private:
    std::size_t line_;
};

namespace detail {

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            return out;
        }
        start = pos + 1;
    }
}

template <typename T>
std::optional<T> parse_uint(std::string_view s) {
    T v{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        return std::nullopt;
    }
    return v;
}

inline std::optional<std::pair<unsigned, unsigned>> parse_bits(std::string_view s) {
    if (s.size() != 2 || (s[0] != '0' && s[0] != '1') || (s[1] != '0' && s[1] != '1')) {
        return std::nullopt;
    }
    return std::pair<unsigned, unsigned>{unsigned(s[0] - '0'), unsigned(s[1] - '0')};
}

}  // namespace detail

class Transcript {
   public:
    Transcript() = default;
    explicit Transcript(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t seed() const { return seed_; }
    const std::vector<Event> &events() const { return events_; }

    void record(Event e) { events_.push_back(std::move(e)); }

    std::string serialize() const {
        std::ostringstream os;
        os << kTranscriptSchema << "\tseed\t" << seed_ << '\n';
        for (const auto &e : events_) {
            std::visit([&os](const auto &ev) { write(os, ev); }, e);
            os << '\n';
        }
        return os.str();
    }

    static Transcript parse(std::string_view text) {
        const auto lines = detail::split(text, '\n');
        if (lines.empty()) {
            throw TranscriptParseError(1, "empty transcript");
        }
        const auto header = detail::split(lines[0], '\t');
        if (header.size() != 3 || header[0] != kTranscriptSchema || header[1] != "seed") {
            throw TranscriptParseError(1, "expected header '" + std::string(kTranscriptSchema) + "\\tseed\\t<seed>'");
        }
        const auto seed = detail::parse_uint<std::uint64_t>(header[2]);
        if (!seed) {
            throw TranscriptParseError(1, "bad seed");
        }
        Transcript t(*seed);
        for (std::size_t i = 1; i < lines.size(); ++i) {
            if (lines[i].empty() && i + 1 == lines.size()) {
                break;
            }
            t.record(parse_event(lines[i], i + 1));
        }
        return t;
    }

    /// Prepare < Encode < Reveal < Decode for every slot.
    bool phase_ordered() const {
        bool prepared = false;
        bool revealed = false;
        std::vector<bool> encoded;
        for (const auto &e : events_) {
            if (const auto *p = std::get_if<event::Prepared>(&e)) {
                if (prepared) {
                    return false;
                }
                prepared = true;
                encoded.assign(p->n, false);
            } else if (const auto *enc = std::get_if<event::Encoded>(&e)) {
                if (!prepared || revealed || enc->slot >= encoded.size()) {
                    return false;
                }
                encoded[enc->slot] = true;
            } else if (std::holds_alternative<event::Revealed>(e)) {
                if (!prepared) {
                    return false;
                }
                revealed = true;
            } else if (const auto *dec = std::get_if<event::Decoded>(&e)) {
                if (!revealed || dec->slot >= encoded.size() || !encoded[dec->slot]) {
                    return false;
                }
            }
        }
        return true;
    }

    friend bool operator==(const Transcript &, const Transcript &) = default;

   private:
    static void write(std::ostream &os, const event::Prepared &e) { os << "Prepared\t" << e.n; }
    static void write(std::ostream &os, const event::Scrambled &e) { os << "Scrambled\t" << (e.scrambled ? 1 : 0); }
    static void write(std::ostream &os, const event::Encoded &e) {
        os << "Encoded\t" << e.slot << '\t' << to_string(e.code);
    }
    static void write(std::ostream &os, const event::ChannelApplied &e) {
        os << "ChannelApplied\t" << e.slot << '\t' << e.digest;
    }
    static void write(std::ostream &os, const event::Revealed &e) {
        os << "Revealed\t";
        for (std::size_t i = 0; i < e.indices.size(); ++i) {
            os << (i ? "," : "") << to_string(e.indices[i]);
        }
        os << '\t';
        if (!e.perm) {
            os << '-';
        } else {
            for (std::size_t i = 0; i < e.perm->size(); ++i) {
                os << (i ? "," : "") << (*e.perm)[i];
            }
        }
    }
    static void write(std::ostream &os, const event::Attack &e) { os << "Attack\t" << e.strategy; }
    static void write(std::ostream &os, const event::Measured &e) {
        os << "Measured\t" << e.slot << '\t' << to_string(e.outcome);
    }
    static void write(std::ostream &os, const event::Decoded &e) {
        os << "Decoded\t" << e.slot << '\t' << to_string(e.code);
    }
    static void write(std::ostream &os, const event::Decoy &e) { os << "Decoy\t" << e.slot << '\t' << e.payload; }

    static Event parse_event(std::string_view line, std::size_t lineno) {
        const auto f = detail::split(line, '\t');
        auto fail = [&](const std::string &what) -> TranscriptParseError {
            return TranscriptParseError(lineno, what + ": '" + std::string(line) + "'");
        };
        auto need = [&](std::size_t count) {
            if (f.size() != count) {
                throw fail("expected " + std::to_string(count) + " fields");
            }
        };
        auto slot_at = [&](std::size_t i) {
            const auto v = detail::parse_uint<std::size_t>(f[i]);
            if (!v) {
                throw fail("bad slot");
            }
            return *v;
        };
        auto bits_at = [&](std::size_t i) {
            const auto v = detail::parse_bits(f[i]);
            if (!v) {
                throw fail("bad two-bit field");
            }
            return *v;
        };
        const std::string_view tag = f[0];
        if (tag == "Prepared") {
            need(2);
            return event::Prepared{slot_at(1)};
        }
        if (tag == "Scrambled") {
            need(2);
            if (f[1] != "0" && f[1] != "1") {
                throw fail("bad flag");
            }
            return event::Scrambled{f[1] == "1"};
        }
        if (tag == "Encoded" || tag == "Decoded") {
            need(3);
            const auto [a, b] = bits_at(2);
            if (tag == "Encoded") {
                return event::Encoded{slot_at(1), PauliCode{a, b}};
            }
            return event::Decoded{slot_at(1), PauliCode{a, b}};
        }
        if (tag == "Measured") {
            need(3);
            const auto [j, k] = bits_at(2);
            return event::Measured{slot_at(1), BellIndex{j, k}};
        }
        if (tag == "ChannelApplied") {
            need(3);
            return event::ChannelApplied{slot_at(1), std::string(f[2])};
        }
        if (tag == "Attack") {
            need(2);
            return event::Attack{std::string(f[1])};
        }
        if (tag == "Decoy") {
            need(3);
            return event::Decoy{slot_at(1), std::string(f[2])};
        }
        if (tag == "Revealed") {
            need(3);
            event::Revealed r;
            if (!f[1].empty()) {
                for (const auto part : detail::split(f[1], ',')) {
                    const auto bits = detail::parse_bits(part);
                    if (!bits) {
                        throw fail("bad Bell index");
                    }
                    r.indices.emplace_back(bits->first, bits->second);
                }
            }
            if (f[2] != "-") {
                std::vector<std::size_t> perm;
                for (const auto part : detail::split(f[2], ',')) {
                    const auto v = detail::parse_uint<std::size_t>(part);
                    if (!v) {
                        throw fail("bad permutation entry");
                    }
                    perm.push_back(*v);
                }
                r.perm = std::move(perm);
            }
            return r;
        }
        throw fail("unknown event tag");
    }

    std::uint64_t seed_ = 0;
    std::vector<Event> events_;
};

}  // namespace qswitch

#endif  // QSWITCH_TRANSCRIPT_HPP
