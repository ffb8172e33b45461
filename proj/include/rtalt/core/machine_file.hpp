#pragma once

#include "rtalt/alt/afa.hpp"
#include "rtalt/pafa/pafa.hpp"
#include "rtalt/qfa/aqfa.hpp"
#include "rtalt/qfa/qfa.hpp"
#include "rtalt/tmc/turing.hpp"

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rtalt::core {

enum class MachineKind { afa, a1ca, pafa, pa1ca, qfa, aqfa };

std::string_view kind_name(MachineKind k) noexcept;

/// Any of the six machine kinds; the unit of parsing and serialization.
struct MachineDescription {
    std::variant<alt::AfaDescription, alt::A1caDescription, pafa::PafaDescription, pafa::Pa1caDescription,
                 qfa::QfaDescription, qfa::AqfaDescription>
        payload;

    MachineKind kind() const noexcept { return static_cast<MachineKind>(payload.index()); }
    const Alphabet& alphabet() const;
    bool operator==(const MachineDescription&) const = default;
};

/// Parses and validates. Throws SyntaxError (malformed JSON or literal),
/// SchemaError (missing, unknown or mistyped field; AlgebraicAmplitudeError
/// for irrational amplitudes) or ValidationError (model invariants).
MachineDescription parse_machine(std::string_view text);

/// Like parse_machine but leaves model invariants unchecked.
MachineDescription parse_machine_unchecked(std::string_view text);

/// Canonical JSON: sorted keys, two-space indentation, canonical rationals,
/// empty transition sets omitted.
std::string serialize_machine(const MachineDescription& m);

std::vector<std::string> validate(const MachineDescription& m);

/// Turing machine files. parse_tm validates and throws like parse_machine.
tmc::TmDescription parse_tm(std::string_view text);
std::string serialize_tm(const tmc::TmDescription& m);

} // namespace rtalt::core
