#pragma once

// Subcommand payloads. Every report is {"command", "variety", "result"} with
// all numbers encoded as exact "p/q" strings.

#include <filesystem>
#include <optional>
#include <string>

#include "okzar/document.hpp"
#include "okzar/okounkov.hpp"

namespace okzar {

Json make_report(const std::string& command, const std::string& variety, Json result);

Json cmd_chambers(const VarietyData& v);
Json cmd_pairing(const VarietyData& v);
Json cmd_zariski(const VarietyData& v, const std::string& divisor);
/// At most one of divisor / restrict may be given.
Json cmd_nobody(const VarietyData& v, const std::optional<std::string>& divisor,
                const std::optional<std::string>& restrict_to);
Json cmd_hilbert(const Document& doc, const std::optional<std::string>& restrict_to);
Json cmd_ehrhart(const VarietyData& v, const std::string& divisor);
Json cmd_validate(const VarietyData& v);
/// Writes the SVG (and for dimension 4 a JSON scene next to it).
Json cmd_plot(const VarietyData& v, const std::string& hyperplane, const std::filesystem::path& out);

/// Named subcone of the variety; Input error if it does not exist.
ConeRep subcone(const VarietyData& v, const std::string& name);
/// "5/2t^3+11/2t^2+4t+1"
std::string format_polynomial(const EhrhartPoly& p, char var = 't');

}  // namespace okzar
