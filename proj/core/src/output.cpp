#include "qrod/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace qrod {

std::string format_full(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

namespace {

std::string format_coord(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.2f", value);
    return buffer;
}

std::string escape_json(const std::string& text) {
    std::string out;
    out.reserve(text.size() + 8);
    for (const char c : text) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default: out += c;
        }
    }
    return out;
}

std::string escape_xml(const std::string& text) {
    std::string out;
    out.reserve(text.size() + 8);
    for (const char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

} // namespace

CsvWriter::CsvWriter(std::ostream& out, const ConfigStamp& stamp,
                     const std::vector<std::string>& columns)
    : out_(out), columns_(columns.size()) {
    for (const auto& [key, value] : stamp) {
        out_ << "# " << key << " = " << value << "\n";
    }
    for (std::size_t i = 0; i < columns.size(); ++i) {
        out_ << columns[i] << (i + 1 < columns.size() ? "," : "\n");
    }
}

void CsvWriter::row(const std::vector<double>& values) {
    if (values.size() != columns_) throw std::invalid_argument("CsvWriter: column count mismatch");
    for (std::size_t i = 0; i < values.size(); ++i) {
        out_ << format_full(values[i]) << (i + 1 < values.size() ? "," : "\n");
    }
}

void CsvWriter::row_mixed(const std::vector<std::string>& cells) {
    if (cells.size() != columns_) throw std::invalid_argument("CsvWriter: column count mismatch");
    for (std::size_t i = 0; i < cells.size(); ++i) {
        out_ << cells[i] << (i + 1 < cells.size() ? "," : "\n");
    }
}

void JsonWriter::comma() {
    if (!first_in_scope_.empty()) {
        if (!first_in_scope_.back()) text_ += ",";
        first_in_scope_.back() = false;
    }
    if (!text_.empty()) {
        text_ += "\n";
        indent();
    }
}

void JsonWriter::indent() {
    text_.append(2 * first_in_scope_.size(), ' ');
}

JsonWriter& JsonWriter::begin_object() {
    comma();
    text_ += "{";
    first_in_scope_.push_back(true);
    scope_is_array_.push_back(false);
    return *this;
}

JsonWriter& JsonWriter::begin_object(const std::string& key) {
    comma();
    text_ += "\"" + escape_json(key) + "\": {";
    first_in_scope_.push_back(true);
    scope_is_array_.push_back(false);
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    const bool was_empty = first_in_scope_.back();
    first_in_scope_.pop_back();
    scope_is_array_.pop_back();
    if (!was_empty) {
        text_ += "\n";
        indent();
    }
    text_ += "}";
    return *this;
}

JsonWriter& JsonWriter::begin_array(const std::string& key) {
    comma();
    text_ += "\"" + escape_json(key) + "\": [";
    first_in_scope_.push_back(true);
    scope_is_array_.push_back(true);
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    const bool was_empty = first_in_scope_.back();
    first_in_scope_.pop_back();
    scope_is_array_.pop_back();
    if (!was_empty) {
        text_ += "\n";
        indent();
    }
    text_ += "]";
    return *this;
}

JsonWriter& JsonWriter::field(const std::string& key, double value) {
    comma();
    // JSON has no NaN/inf literals; emit them as strings
    const std::string number = format_full(value);
    if (number == "nan" || number == "inf" || number == "-inf") {
        text_ += "\"" + escape_json(key) + "\": \"" + number + "\"";
    } else {
        text_ += "\"" + escape_json(key) + "\": " + number;
    }
    return *this;
}

JsonWriter& JsonWriter::field(const std::string& key, const std::string& value) {
    comma();
    text_ += "\"" + escape_json(key) + "\": \"" + escape_json(value) + "\"";
    return *this;
}

JsonWriter& JsonWriter::field(const std::string& key, bool value) {
    comma();
    text_ += "\"" + escape_json(key) + "\": " + (value ? "true" : "false");
    return *this;
}

JsonWriter& JsonWriter::field(const std::string& key, long long value) {
    comma();
    text_ += "\"" + escape_json(key) + "\": " + std::to_string(value);
    return *this;
}

JsonWriter& JsonWriter::element(double value) {
    comma();
    text_ += format_full(value);
    return *this;
}

JsonWriter& JsonWriter::element(const std::string& value) {
    comma();
    text_ += "\"" + escape_json(value) + "\"";
    return *this;
}

void write_svg_line_plot(const std::filesystem::path& path, const SvgPlotOptions& options,
                         const std::vector<SvgSeries>& series, const ConfigStamp& stamp) {
    // data extent
    double x_min = 0.0, x_max = 1.0, y_min = 0.0, y_max = 1.0;
    bool found = false;
    for (const auto& s : series) {
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            double x = s.x[i];
            double y = s.y[i];
            if (options.log_x) {
                if (!(x > 0)) continue;
                x = std::log10(x);
            }
            if (options.log_y) {
                if (!(y > 0)) continue;
                y = std::log10(y);
            }
            if (!std::isfinite(x) || !std::isfinite(y)) continue;
            if (!found) {
                x_min = x_max = x;
                y_min = y_max = y;
                found = true;
            } else {
                x_min = std::min(x_min, x);
                x_max = std::max(x_max, x);
                y_min = std::min(y_min, y);
                y_max = std::max(y_max, y);
            }
        }
    }
    if (x_max == x_min) x_max = x_min + 1.0;
    if (y_max == y_min) y_max = y_min + 1.0;

    const double margin_left = 72, margin_right = 24, margin_top = 40, margin_bottom = 56;
    const double plot_w = options.width - margin_left - margin_right;
    const double plot_h = options.height - margin_top - margin_bottom;
    auto sx = [&](double x) {
        if (options.log_x) x = std::log10(x);
        return margin_left + (x - x_min) / (x_max - x_min) * plot_w;
    };
    auto sy = [&](double y) {
        if (options.log_y) y = std::log10(y);
        return margin_top + plot_h - (y - y_min) / (y_max - y_min) * plot_h;
    };

    static const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                     "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write SVG file '" + path.string() + "'");

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<!--\n";
    for (const auto& [key, value] : stamp) out << "  " << key << " = " << value << "\n";
    out << "-->\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width << "\" height=\""
        << options.height << "\" viewBox=\"0 0 " << options.width << " " << options.height
        << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << options.width / 2 << "\" y=\"24\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"16\">" << escape_xml(options.title)
        << "</text>\n";

    // axes
    out << "<rect x=\"" << format_coord(margin_left) << "\" y=\"" << format_coord(margin_top)
        << "\" width=\"" << format_coord(plot_w) << "\" height=\"" << format_coord(plot_h)
        << "\" fill=\"none\" stroke=\"#333\"/>\n";

    const int ticks = 6;
    for (int i = 0; i <= ticks; ++i) {
        const double fx = x_min + (x_max - x_min) * i / ticks;
        const double fy = y_min + (y_max - y_min) * i / ticks;
        const double px = margin_left + plot_w * i / ticks;
        const double py = margin_top + plot_h - plot_h * i / ticks;
        const double label_x = options.log_x ? std::pow(10.0, fx) : fx;
        const double label_y = options.log_y ? std::pow(10.0, fy) : fy;
        char lx[32], ly[32];
        std::snprintf(lx, sizeof(lx), "%.4g", label_x);
        std::snprintf(ly, sizeof(ly), "%.4g", label_y);
        out << "<line x1=\"" << format_coord(px) << "\" y1=\"" << format_coord(margin_top + plot_h)
            << "\" x2=\"" << format_coord(px) << "\" y2=\""
            << format_coord(margin_top + plot_h + 5) << "\" stroke=\"#333\"/>\n";
        out << "<text x=\"" << format_coord(px) << "\" y=\""
            << format_coord(margin_top + plot_h + 20)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << lx
            << "</text>\n";
        out << "<line x1=\"" << format_coord(margin_left - 5) << "\" y1=\"" << format_coord(py)
            << "\" x2=\"" << format_coord(margin_left) << "\" y2=\"" << format_coord(py)
            << "\" stroke=\"#333\"/>\n";
        out << "<text x=\"" << format_coord(margin_left - 8) << "\" y=\"" << format_coord(py + 4)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << ly
            << "</text>\n";
    }
    out << "<text x=\"" << options.width / 2 << "\" y=\"" << options.height - 12
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
        << escape_xml(options.x_label) << "</text>\n";
    out << "<text x=\"18\" y=\"" << options.height / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
        << "transform=\"rotate(-90 18 " << options.height / 2 << ")\">"
        << escape_xml(options.y_label) << "</text>\n";

    for (std::size_t k = 0; k < series.size(); ++k) {
        const auto& s = series[k];
        const char* color = kPalette[k % (sizeof(kPalette) / sizeof(kPalette[0]))];
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (options.log_x && !(s.x[i] > 0)) continue;
            if (options.log_y && !(s.y[i] > 0)) continue;
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            out << format_coord(sx(s.x[i])) << "," << format_coord(sy(s.y[i])) << " ";
        }
        out << "\"/>\n";
        // legend entry
        const double ly = margin_top + 16 + 18 * static_cast<double>(k);
        out << "<line x1=\"" << format_coord(margin_left + 10) << "\" y1=\"" << format_coord(ly)
            << "\" x2=\"" << format_coord(margin_left + 34) << "\" y2=\"" << format_coord(ly)
            << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << format_coord(margin_left + 40) << "\" y=\"" << format_coord(ly + 4)
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << escape_xml(s.label)
            << "</text>\n";
    }
    out << "</svg>\n";
}

} // namespace qrod
