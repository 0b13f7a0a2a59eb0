#pragma once

#include "pendrng/harness.hpp"

#include "json.hpp"

#include <filesystem>
#include <string>

namespace pendrng::harness {

/// Versioned report document with top-level keys
/// format_version, config, results, resources, sweep.
nlohmann::json to_json(const Report& report);
nlohmann::json to_json(const SweepTable& table);

/// Aligned plain-text table: one row per battery test, then Overall and the
/// resource rows; one column per generator.
std::string format_table(const Report& report);
std::string format_sweep_table(const SweepTable& table);

void write_json(const std::filesystem::path& path, const nlohmann::json& doc);

} // namespace pendrng::harness
