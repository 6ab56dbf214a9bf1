#pragma once

#include <string>
#include <utility>
#include <vector>

#include "edgewalk/types.hpp"

namespace edgewalk {

// Numeric table with a metadata block. Metadata lines are emitted first as
// "# key=value"; configuration entries use the "cfg:" key prefix so a CSV
// can be re-parsed into the config that produced it.
struct ResultTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::pair<std::string, std::string>> metadata;
};

// UTF-8 CSV: '#'-prefixed metadata, one header row, values with 17
// significant digits.
void emit_csv(const ResultTable& table, const std::string& path);

// Standalone SVG chart of (x, probability); bars for small tables, a
// polyline for large ones. Expects a "probability" column and uses the
// "label" column (falling back to "index") for x. Human inspection only.
void emit_svg_histogram(const ResultTable& table, const std::string& path);

// Complex scalars in configs: "mag@phase" (radians) or "a+bi" / "a-bi".
cplx parse_complex(const std::string& text);
std::string format_complex(cplx z);

std::string format_double(double x);  // %.17g

}  // namespace edgewalk
