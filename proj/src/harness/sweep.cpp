#include "pendrng/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace pendrng::harness {

std::string_view to_string(TrendVerdict v) noexcept
{
    switch (v) {
    case TrendVerdict::observed: return "observed";
    case TrendVerdict::not_observed: return "not_observed";
    case TrendVerdict::not_applicable: return "not_applicable";
    }
    return "?";
}

namespace {

std::string_view trim(std::string_view s) noexcept
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::vector<double> parse_values(std::string_view key, std::string_view list)
{
    std::vector<double> out;
    while (true) {
        const auto comma = list.find(',');
        const auto item = trim(list.substr(0, comma));
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size() || !std::isfinite(v))
            throw std::invalid_argument("grid: bad value '" + std::string(item) + "' for " +
                                        std::string(key));
        out.push_back(v);
        if (comma == std::string_view::npos)
            break;
        list.remove_prefix(comma + 1);
    }
    return out;
}

double pearson(const std::vector<double>& x, const std::vector<double>& y)
{
    const double n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0.0 || syy == 0.0)
        return 0.0;
    return sxy / std::sqrt(sxx * syy);
}

} // namespace

SweepGrid parse_grid(std::string_view spec)
{
    SweepGrid grid;
    while (!spec.empty()) {
        const auto semi = spec.find(';');
        const auto clause = trim(spec.substr(0, semi));
        spec = semi == std::string_view::npos ? std::string_view{} : spec.substr(semi + 1);
        if (clause.empty())
            continue;
        const auto eq = clause.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument("grid: expected key=values in '" + std::string(clause) + "'");
        const auto key = trim(clause.substr(0, eq));
        auto values = parse_values(key, clause.substr(eq + 1));
        if (key == "g" || key == "gravity") {
            for (double v : values)
                if (v <= 0.0)
                    throw std::invalid_argument("grid: gravity values must be > 0");
            grid.gravity = std::move(values);
        } else if (key == "ratio" || key == "l1/l2") {
            for (double v : values)
                if (v <= 0.0)
                    throw std::invalid_argument("grid: length ratios must be > 0");
            grid.length_ratio = std::move(values);
        } else if (key == "d" || key == "damping") {
            for (double v : values)
                if (!(v > 0.0 && v <= 1.0))
                    throw std::invalid_argument("grid: damping values must lie in (0, 1]");
            grid.damping = std::move(values);
        } else {
            throw std::invalid_argument("grid: unknown variable '" + std::string(key) +
                                        "' (expected g, ratio or d)");
        }
    }
    if (grid.empty())
        throw std::invalid_argument("grid: no values given");
    return grid;
}

SweepTable sweep(const ExperimentConfig& base, const SweepGrid& grid)
{
    if (grid.empty())
        throw std::invalid_argument("sweep: empty grid");
    const auto it = std::find_if(base.generators.begin(), base.generators.end(),
                                 [](const GeneratorSpec& g) { return g.pendulum.has_value(); });
    if (it == base.generators.end())
        throw std::invalid_argument("sweep: base experiment has no pendulum generator");
    const GeneratorConfig base_pendulum = *it->pendulum;

    struct Point {
        const char* variable;
        double value;
    };
    std::vector<Point> points;
    for (double v : grid.gravity)
        points.push_back({"g", v});
    for (double v : grid.length_ratio)
        points.push_back({"ratio", v});
    for (double v : grid.damping)
        points.push_back({"d", v});

    SweepTable table;
    for (const auto& point : points) {
        SweepRow row;
        row.variable = point.variable;
        row.value = point.value;
        row.config = base_pendulum;
        const std::string_view var = point.variable;
        if (var == "g")
            row.config.g = point.value;
        else if (var == "ratio")
            row.config.l1 = point.value * base_pendulum.l2;
        else
            row.config.damping = point.value;

        try {
            ExperimentConfig cfg = base;
            char label[48];
            std::snprintf(label, sizeof label, "%s=%g", point.variable, point.value);
            cfg.generators = {pendulum_generator(label, row.config)};
            cfg.measure_resources = false;
            const Report r = run_experiment(cfg);
            row.overall = r.generators.front().overall;
            row.applicable = r.generators.front().overall_applicable;
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        table.rows.push_back(std::move(row));
    }

    std::vector<double> ratios, scores;
    for (const auto& row : table.rows)
        if (row.variable == "ratio" && row.error.empty()) {
            ratios.push_back(row.value);
            scores.push_back(static_cast<double>(row.overall));
        }
    if (ratios.size() >= 2) {
        const double r = pearson(ratios, scores);
        table.length_ratio_correlation = r;
        table.length_ratio_trend = r < 0.0 ? TrendVerdict::observed : TrendVerdict::not_observed;
    }

    std::stable_sort(table.rows.begin(), table.rows.end(),
                     [](const SweepRow& a, const SweepRow& b) { return a.overall > b.overall; });
    return table;
}

} // namespace pendrng::harness
