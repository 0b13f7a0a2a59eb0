#include "pendrng/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pendrng::harness {

using nlohmann::json;

namespace {

json pendulum_json(const GeneratorConfig& c)
{
    return {{"mode", to_string(c.mode)},
            {"mass_range", {c.mass_range.lo, c.mass_range.hi}},
            {"loop_range", {c.loop_range.lo, c.loop_range.hi}},
            {"h", c.h},
            {"g", c.g},
            {"l1", c.l1},
            {"l2", c.l2},
            {"damping", c.damping},
            {"stir_steps", c.stir_steps}};
}

json test_params_json(const sts::TestParams& p)
{
    json universal = nullptr;
    if (p.universal)
        universal = {{"L", p.universal->block_length}, {"Q", p.universal->init_blocks}};
    return {{"alpha", p.alpha},
            {"block_frequency_m", p.block_frequency_m},
            {"serial_m", p.serial_m},
            {"apen_m", p.apen_m},
            {"universal", universal},
            {"enforce_min_length", p.enforce_min_length}};
}

json result_json(const sts::TestResult& r)
{
    json j = {{"test", sts::test_key(r.id)}, {"skipped", r.skipped}};
    if (r.skipped) {
        j["skip_reason"] = r.skip_reason;
        return j;
    }
    j["p_values"] = r.p_values;
    j["pass"] = r.pass;
    json stats = json::object();
    for (const auto& [k, v] : r.statistics)
        stats[k] = v;
    j["statistics"] = std::move(stats);
    return j;
}

std::string format_number(double v, const char* fmt)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

std::string tally_cell(const TestTally& t)
{
    if (t.applicable == 0)
        return "skipped";
    std::string cell = std::to_string(t.passed);
    if (t.skipped > 0)
        cell += " (" + std::to_string(t.skipped) + " skipped)";
    return cell;
}

std::string render(const std::vector<std::vector<std::string>>& rows)
{
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        width.resize(std::max(width.size(), row.size()), 0);
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    }
    std::ostringstream out;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (c > 0)
                out << "  ";
            const auto& cell = rows[r][c];
            if (c == 0)
                out << cell << std::string(width[c] - cell.size(), ' ');
            else
                out << std::string(width[c] - cell.size(), ' ') << cell;
        }
        out << '\n';
        if (r == 0) {
            std::size_t total = 0;
            for (auto w : width)
                total += w;
            out << std::string(total + 2 * (width.size() - 1), '-') << '\n';
        }
    }
    return out.str();
}

} // namespace

json to_json(const SweepTable& table)
{
    json rows = json::array();
    for (const auto& row : table.rows) {
        json j = {{"variable", row.variable},
                  {"value", row.value},
                  {"overall", row.overall},
                  {"applicable", row.applicable},
                  {"pendulum", pendulum_json(row.config)}};
        if (!row.error.empty())
            j["error"] = row.error;
        rows.push_back(std::move(j));
    }
    return rows;
}

json to_json(const Report& report)
{
    json generators = json::array();
    json results = json::array();
    json resources = json::array();
    for (const auto& g : report.generators) {
        json gj = {{"name", g.name}, {"kind", to_string(g.kind)}};
        if (g.pendulum)
            gj["pendulum"] = pendulum_json(*g.pendulum);
        generators.push_back(std::move(gj));

        json tests = json::array();
        for (std::size_t t = 0; t < sts::kBatteryOrder.size(); ++t) {
            const auto id = sts::kBatteryOrder[t];
            tests.push_back({{"test", sts::test_key(id)},
                             {"name", sts::test_name(id)},
                             {"passed", g.tallies[t].passed},
                             {"applicable", g.tallies[t].applicable},
                             {"skipped", g.tallies[t].skipped}});
        }
        json streams = json::array();
        for (const auto& s : g.streams) {
            json sj = {{"seed", s.seed}};
            if (!s.error.empty())
                sj["error"] = s.error;
            json rs = json::array();
            for (const auto& r : s.results)
                rs.push_back(result_json(r));
            sj["tests"] = std::move(rs);
            streams.push_back(std::move(sj));
        }
        results.push_back({{"generator", g.name},
                           {"tests", std::move(tests)},
                           {"overall", g.overall},
                           {"overall_applicable", g.overall_applicable},
                           {"streams", std::move(streams)}});

        if (g.resources) {
            const auto& m = *g.resources;
            resources.push_back({{"generator", g.name},
                                 {"n_bits", m.n_bits},
                                 {"seconds", m.seconds},
                                 {"bits_per_second", m.bits_per_second},
                                 {"ms_per_million_bits", 1e9 / m.bits_per_second},
                                 {"peak_extra_bytes", m.peak_extra_bytes},
                                 {"memory_best_effort", m.memory_best_effort}});
        }
    }

    json doc = {
        {"format_version", Report::kFormatVersion},
        {"config",
         {{"streams_per_generator", report.streams_per_generator},
          {"bits_per_stream", report.bits_per_stream},
          {"base_seed", report.base_seed},
          {"bit_unit", "binary digits"},
          {"test_params", test_params_json(report.test_params)},
          {"generators", std::move(generators)}}},
        {"results", std::move(results)},
        {"resources", std::move(resources)},
        {"sweep", report.sweep ? to_json(*report.sweep) : json::array()},
    };
    if (report.sweep) {
        json summary = {{"length_ratio_trend", to_string(report.sweep->length_ratio_trend)}};
        if (report.sweep->length_ratio_correlation)
            summary["length_ratio_correlation"] = *report.sweep->length_ratio_correlation;
        doc["sweep_summary"] = std::move(summary);
    }
    return doc;
}

std::string format_table(const Report& report)
{
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"Test Name"};
    for (const auto& g : report.generators)
        header.push_back(g.name);
    rows.push_back(std::move(header));

    for (std::size_t t = 0; t < sts::kBatteryOrder.size(); ++t) {
        std::vector<std::string> row{std::string(sts::test_name(sts::kBatteryOrder[t]))};
        for (const auto& g : report.generators)
            row.push_back(tally_cell(g.tallies[t]));
        rows.push_back(std::move(row));
    }

    std::vector<std::string> overall{"Overall"};
    for (const auto& g : report.generators)
        overall.push_back(std::to_string(g.overall) + " / " + std::to_string(g.overall_applicable));
    rows.push_back(std::move(overall));

    const bool have_resources = std::any_of(report.generators.begin(), report.generators.end(),
                                            [](const GeneratorReport& g) { return g.resources.has_value(); });
    if (have_resources) {
        std::vector<std::string> mem{"Peak extra memory (KB, best effort)"};
        std::vector<std::string> time{"Time per 1e6 bits (ms)"};
        for (const auto& g : report.generators) {
            if (!g.resources) {
                mem.emplace_back("n/a");
                time.emplace_back("n/a");
                continue;
            }
            mem.push_back(format_number(static_cast<double>(g.resources->peak_extra_bytes) / 1024.0, "%.0f"));
            time.push_back(format_number(1e9 / g.resources->bits_per_second, "%.3f"));
        }
        rows.push_back(std::move(mem));
        rows.push_back(std::move(time));
    }
    return render(rows);
}

std::string format_sweep_table(const SweepTable& table)
{
    std::vector<std::vector<std::string>> rows{{"Variable", "Value", "Overall", "Applicable", "Note"}};
    for (const auto& row : table.rows)
        rows.push_back({row.variable, format_number(row.value, "%g"), std::to_string(row.overall),
                        std::to_string(row.applicable), row.error});
    std::string out = render(rows);
    out += "L1/L2 negative trend: " + std::string(to_string(table.length_ratio_trend));
    if (table.length_ratio_correlation)
        out += " (r = " + format_number(*table.length_ratio_correlation, "%.3f") + ")";
    out += '\n';
    return out;
}

void write_json(const std::filesystem::path& path, const json& doc)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << doc.dump(2) << '\n';
    if (!out)
        throw std::runtime_error("write failed: " + path.string());
}

} // namespace pendrng::harness
