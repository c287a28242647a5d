#pragma once

#include <optional>
#include <string>
#include <vector>

#include "obtsim/transcript.hpp"

namespace obtsim {

enum class OutputFormat { text, json, csv };

/// Maps "text" / "json" / "csv"; throws std::invalid_argument otherwise.
OutputFormat parse_format(const std::string& name);

/// Fixed 10-significant-digit rendering used for every reported number.
std::string format10(double value);

/// Nearest double to format10(value); reported values are snapped so the
/// emitted text parses back to exactly the stored number.
double snap10(double value);

struct Param {
    std::string key;
    std::string value;          // pre-rendered
    bool quote_in_json = false; // string-valued parameter
};

struct ResultRow {
    std::string label;
    double value = 0.0;
    bool exact = false;  // exact result, no interval
    double ci95_low = 0.0;
    double ci95_high = 0.0;
    std::optional<double> reference;
    std::optional<double> theta;  // sweep rows
    std::optional<bool> pass;     // verification rows
    std::string note;             // text output only
};

struct RunReport {
    std::string command;
    std::vector<Param> params;
    std::vector<ResultRow> results;
    std::optional<Transcript> transcript;
};

std::string render(const RunReport& report, OutputFormat format);

}  // namespace obtsim
