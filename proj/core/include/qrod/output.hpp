#pragma once

#include <filesystem>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace qrod {

/// Formats a double with 17 significant digits (%.17g): enough to
/// round-trip exactly, and byte-stable across runs. NaN/inf print as
/// "nan"/"inf"/"-inf".
std::string format_full(double value);

/// Key/value pairs recorded at the top of every output file so a result
/// can always be traced back to the exact configuration that produced it.
using ConfigStamp = std::vector<std::pair<std::string, std::string>>;

/// CSV with '#'-prefixed config-stamp header lines, a column-name row and
/// %.17g numeric cells.
class CsvWriter {
public:
    CsvWriter(std::ostream& out, const ConfigStamp& stamp,
              const std::vector<std::string>& columns);

    void row(const std::vector<double>& values);
    void row_mixed(const std::vector<std::string>& cells);

private:
    std::ostream& out_;
    std::size_t columns_;
};

/// Minimal JSON emitter with insertion-ordered keys and %.17g numbers.
/// Deliberately hand-rolled: the output must be byte-identical for
/// identical configs, including the float formatting.
class JsonWriter {
public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array(const std::string& key);
    JsonWriter& begin_object(const std::string& key);
    JsonWriter& end_array();
    JsonWriter& field(const std::string& key, double value);
    JsonWriter& field(const std::string& key, const std::string& value);
    JsonWriter& field(const std::string& key, bool value);
    JsonWriter& field(const std::string& key, long long value);
    JsonWriter& element(double value);
    JsonWriter& element(const std::string& value);

    std::string str() const { return text_; }

private:
    void comma();
    void indent();
    std::string text_;
    std::vector<bool> first_in_scope_;
    std::vector<bool> scope_is_array_;
};

/// One polyline of an SVG chart.
struct SvgSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

struct SvgPlotOptions {
    std::string title;
    std::string x_label;
    std::string y_label;
    int width = 860;
    int height = 560;
    bool log_x = false;
    bool log_y = false;
};

/// Self-contained SVG line plot (axes, ticks, legend, one polyline per
/// series). No plotting dependency; documentation artifact, not an
/// acceptance surface.
void write_svg_line_plot(const std::filesystem::path& path, const SvgPlotOptions& options,
                         const std::vector<SvgSeries>& series, const ConfigStamp& stamp);

} // namespace qrod
