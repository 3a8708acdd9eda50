#include <charconv>
#include <cmath>
#include <ostream>

#include <json.hpp>

#include "kinkzeta/cli.hpp"

namespace kinkzeta::cli {

std::string format_number(double v)
{
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

void write_csv(std::ostream& os, const Table& t)
{
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            if (const double* d = std::get_if<double>(&row[i]))
                os << format_number(*d);
            else
                os << std::get<std::string>(row[i]);
        }
        os << '\n';
    }
}

void write_json(std::ostream& os, const Table& t)
{
    nlohmann::ordered_json j;
    j["columns"] = t.columns;
    nlohmann::ordered_json data = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
        auto col = nlohmann::ordered_json::array();
        for (const auto& row : t.rows) {
            const Cell& cell = row[c];
            if (const double* d = std::get_if<double>(&cell))
                col.push_back(std::isfinite(*d) ? nlohmann::ordered_json(*d) : nlohmann::ordered_json(format_number(*d)));
            else
                col.push_back(std::get<std::string>(cell));
        }
        data[t.columns[c]] = std::move(col);
    }
    j["data"] = std::move(data);
    if (!t.meta.empty()) j["meta"] = t.meta;
    os << j.dump(1) << '\n';
}

}  // namespace kinkzeta::cli
