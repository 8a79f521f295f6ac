#pragma once

#include <iomanip>
#include <sstream>
#include <string>

#include <json.hpp>

#include "equisum/core.hpp"
#include "equisum/meander.hpp"

// Canonical wire format and human-readable renderings. The JSON schema is
//   {"n": int, "k": int, "t": int, "containers": [[int,...],...]}
// with containers ordered by root index and elements ascending; writers
// emit exactly this shape and readers accept nothing else.

namespace equisum {

using json = nlohmann::ordered_json;

inline json to_json(const Partitioning& p)
{
    json doc;
    doc["n"] = p.instance.n;
    doc["k"] = p.instance.k;
    doc["t"] = p.instance.t;
    doc["containers"] = json::array();
    for (const Container& c : p.containers)
        doc["containers"].push_back(c);
    return doc;
}

inline std::string to_json_string(const Partitioning& p)
{
    return to_json(p).dump();
}

namespace detail {

inline u64 parse_u64_field(const json& doc, const char* key)
{
    if (!doc.contains(key))
        throw MalformedInputError(std::string("missing field \"") + key + "\"");
    const json& value = doc[key];
    if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<std::int64_t>() >= 0))
        throw MalformedInputError(std::string("field \"") + key + "\" must be a nonnegative integer");
    return value.get<u64>();
}

} // namespace detail

/// Parse the canonical schema. Structural problems (bad JSON, wrong types)
/// throw MalformedInputError; semantic defects (wrong sums, duplicates, a k
/// that disagrees with the container count) parse fine and are left for
/// verify() to report.
inline Partitioning partitioning_from_json(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw MalformedInputError(std::string("not valid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw MalformedInputError("top-level value must be an object");

    Partitioning p;
    p.instance.n = detail::parse_u64_field(doc, "n");
    p.instance.k = detail::parse_u64_field(doc, "k");
    p.instance.t = detail::parse_u64_field(doc, "t");

    if (!doc.contains("containers") || !doc["containers"].is_array())
        throw MalformedInputError("field \"containers\" must be an array of arrays");
    for (const json& row : doc["containers"]) {
        if (!row.is_array())
            throw MalformedInputError("each container must be an array of integers");
        Container c;
        c.reserve(row.size());
        for (const json& e : row) {
            if (!e.is_number_unsigned()
                && !(e.is_number_integer() && e.get<std::int64_t>() >= 0))
                throw MalformedInputError("container elements must be nonnegative integers");
            c.push_back(e.get<u64>());
        }
        std::sort(c.begin(), c.end());
        p.containers.push_back(std::move(c));
    }
    return p;
}

inline std::string render_text(const Partitioning& p)
{
    std::ostringstream out;
    out << "n=" << p.instance.n << " k=" << p.instance.k << " t=" << p.instance.t << "\n";
    for (std::size_t j = 0; j < p.containers.size(); ++j) {
        out << "T_" << j + 1 << " = {";
        for (std::size_t i = 0; i < p.containers[j].size(); ++i) {
            if (i)
                out << ",";
            out << p.containers[j][i];
        }
        out << "}\n";
    }
    return out.str();
}

inline std::string render_csv(const Partitioning& p)
{
    std::ostringstream out;
    out << "container,element\n";
    for (std::size_t j = 0; j < p.containers.size(); ++j)
        for (u64 e : p.containers[j])
            out << j + 1 << "," << e << "\n";
    return out.str();
}

/// Aligned text grid, one header column per container, rows top to bottom
/// alternating descending/ascending.
inline std::string render_matrix(const MeanderMatrix& grid)
{
    std::size_t width = 3; // at least "T_j"
    for (u64 cell : grid.cells)
        width = std::max(width, std::to_string(cell).size());
    for (u64 j = 1; j <= grid.cols; ++j)
        width = std::max(width, std::to_string(j).size() + 2);

    std::ostringstream out;
    for (u64 j = 1; j <= grid.cols; ++j)
        out << (j > 1 ? " " : "") << std::setw(static_cast<int>(width)) << ("T_" + std::to_string(j));
    out << "\n" << std::string(grid.cols * (width + 1) - 1, '-') << "\n";
    for (u64 r = 0; r < grid.rows; ++r) {
        for (u64 c = 0; c < grid.cols; ++c)
            out << (c > 0 ? " " : "") << std::setw(static_cast<int>(width)) << grid.at(r, c);
        out << "\n";
    }
    return out.str();
}

inline json report_to_json(const VerificationReport& report)
{
    json doc;
    doc["valid"] = report.valid;
    doc["sum_failures"] = json::array();
    for (auto [index, sum] : report.sum_failures)
        doc["sum_failures"].push_back({{"container", index}, {"actual_sum", sum}});
    doc["duplicate_elements"] = report.duplicate_elements;
    doc["missing_elements"] = report.missing_elements;
    doc["foreign_elements"] = report.foreign_elements;
    return doc;
}

inline std::string render_report(const VerificationReport& report)
{
    std::ostringstream out;
    out << (report.valid ? "valid" : "INVALID") << "\n";
    for (auto [index, sum] : report.sum_failures)
        out << "sum failure: container " << index << " sums to " << sum << "\n";
    auto list = [&out](const char* label, const std::vector<u64>& values) {
        if (values.empty())
            return;
        out << label << ":";
        for (u64 v : values)
            out << " " << v;
        out << "\n";
    };
    list("duplicate elements", report.duplicate_elements);
    list("missing elements", report.missing_elements);
    list("foreign elements", report.foreign_elements);
    return out.str();
}

} // namespace equisum
