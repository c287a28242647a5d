#include "obtsim/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace obtsim {

OutputFormat parse_format(const std::string& name) {
    if (name == "text") return OutputFormat::text;
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    throw std::invalid_argument("unknown output format: " + name);
}

std::string format10(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", value);
    return buf;
}

double snap10(double value) { return std::strtod(format10(value).c_str(), nullptr); }

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (const char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out;
}

void render_transcript_json(std::ostringstream& out, const Transcript& t) {
    out << "{\"nlbox_uses\": " << t.nlbox_uses << ", \"ot_uses\": " << t.ot_uses
        << ", \"classical_bits\": " << t.classical_bits
        << ", \"qubits_sent\": " << t.qubits_sent << "}";
}

std::string render_json(const RunReport& report) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"command\": \"" << json_escape(report.command) << "\",\n";

    out << "  \"params\": {";
    for (std::size_t i = 0; i < report.params.size(); ++i) {
        const Param& p = report.params[i];
        out << (i == 0 ? "\n" : ",\n") << "    \"" << json_escape(p.key) << "\": ";
        if (p.quote_in_json) {
            out << "\"" << json_escape(p.value) << "\"";
        } else {
            out << p.value;
        }
    }
    out << "\n  },\n";

    out << "  \"results\": [";
    for (std::size_t i = 0; i < report.results.size(); ++i) {
        const ResultRow& row = report.results[i];
        out << (i == 0 ? "\n" : ",\n") << "    {\"label\": \"" << json_escape(row.label) << "\"";
        if (row.theta) out << ", \"theta\": " << format10(*row.theta);
        out << ", \"value\": " << format10(row.value);
        out << ", \"exact\": " << (row.exact ? "true" : "false");
        if (!row.exact) {
            out << ", \"ci95_low\": " << format10(row.ci95_low)
                << ", \"ci95_high\": " << format10(row.ci95_high);
        }
        if (row.pass) out << ", \"status\": \"" << (*row.pass ? "pass" : "fail") << "\"";
        out << "}";
    }
    out << "\n  ],\n";

    if (report.transcript) {
        out << "  \"transcript\": ";
        render_transcript_json(out, *report.transcript);
        out << ",\n";
    }

    out << "  \"references\": [";
    bool first = true;
    for (const ResultRow& row : report.results) {
        if (!row.reference) continue;
        out << (first ? "\n" : ",\n") << "    {\"label\": \"" << json_escape(row.label) << "\"";
        if (row.theta) out << ", \"theta\": " << format10(*row.theta);
        out << ", \"value\": " << format10(*row.reference) << "}";
        first = false;
    }
    out << "\n  ]\n";
    out << "}\n";
    return out.str();
}

std::string render_csv(const RunReport& report) {
    bool any_theta = false;
    bool any_status = false;
    for (const ResultRow& row : report.results) {
        if (row.theta) any_theta = true;
        if (row.pass) any_status = true;
    }

    std::ostringstream out;
    if (any_theta) {
        out << "theta,value,ci95_low,ci95_high,reference\n";
        for (const ResultRow& row : report.results) {
            out << (row.theta ? format10(*row.theta) : "") << "," << format10(row.value) << ",";
            if (!row.exact) out << format10(row.ci95_low);
            out << ",";
            if (!row.exact) out << format10(row.ci95_high);
            out << ",";
            if (row.reference) out << format10(*row.reference);
            out << "\n";
        }
    } else if (any_status) {
        out << "check,status,value,reference\n";
        for (const ResultRow& row : report.results) {
            out << row.label << "," << (row.pass && *row.pass ? "pass" : "fail") << ","
                << format10(row.value) << ",";
            if (row.reference) out << format10(*row.reference);
            out << "\n";
        }
    } else {
        out << "label,value,ci95_low,ci95_high,reference\n";
        for (const ResultRow& row : report.results) {
            out << row.label << "," << format10(row.value) << ",";
            if (!row.exact) out << format10(row.ci95_low);
            out << ",";
            if (!row.exact) out << format10(row.ci95_high);
            out << ",";
            if (row.reference) out << format10(*row.reference);
            out << "\n";
        }
    }
    return out.str();
}

std::string render_text(const RunReport& report) {
    std::ostringstream out;
    out << "obtsim " << report.command << "\n";
    for (const Param& p : report.params) {
        out << "  " << p.key << " = " << p.value << "\n";
    }
    out << "\n";
    for (const ResultRow& row : report.results) {
        out << "  ";
        if (row.pass) out << "[" << (*row.pass ? "PASS" : "FAIL") << "] ";
        out << row.label;
        if (row.theta) out << "  theta=" << format10(*row.theta);
        out << "  value=" << format10(row.value);
        if (row.exact) {
            out << " (exact)";
        } else {
            out << "  ci95=[" << format10(row.ci95_low) << ", " << format10(row.ci95_high)
                << "]";
        }
        if (row.reference) out << "  reference=" << format10(*row.reference);
        if (!row.note.empty()) out << "  (" << row.note << ")";
        out << "\n";
    }
    if (report.transcript) {
        const Transcript& t = *report.transcript;
        out << "\n  transcript per run: nlbox_uses=" << t.nlbox_uses << " ot_uses=" << t.ot_uses
            << " classical_bits=" << t.classical_bits << " qubits_sent=" << t.qubits_sent
            << "\n";
    }
    return out.str();
}

}  // namespace

std::string render(const RunReport& report, OutputFormat format) {
    switch (format) {
        case OutputFormat::json: return render_json(report);
        case OutputFormat::csv: return render_csv(report);
        case OutputFormat::text: break;
    }
    return render_text(report);
}

}  // namespace obtsim
