// output.hpp - CSV trajectories, JSON reports and static SVG plots.
//
// All writers produce byte-identical output for identical input: numbers are
// rendered with "%.16e" (17 significant digits, lossless for binary64) under
// the C locale, and line endings are always LF.

#pragma once

#include "qcmap/errors.hpp"
#include "qcmap/runner.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace qcmap {

class IoError : public Error {
public:
    using Error::Error;
};

namespace detail {

inline std::string fmt_sci(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

inline std::string fmt_short(double v, int digits = 4) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

inline void write_file(const std::string& path, const std::string& content) {
    const std::filesystem::path p(path);
    if (p.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(p.parent_path(), ec);
        if (ec) throw IoError("cannot create directory for '" + path + "': " + ec.message());
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace detail

// ------------------------------------------------------------------- CSV

// t, P1_<s>, P2_<s>, ... for every scheme, then q1_<s>, p1_<s>, ... .
inline std::string csv_string(const std::vector<SchemeTrace>& traces) {
    if (traces.empty()) throw ValidationError("emit_csv: no trajectories");
    const std::size_t rows = traces.front().times.size();
    for (const auto& t : traces) {
        if (t.times.size() != rows) throw ValidationError("emit_csv: trajectories are on different grids");
    }
    std::string out = "t";
    for (const auto& t : traces) {
        for (Eigen::Index n = 0; n < t.populations.front().size(); ++n) {
            out += ",P" + std::to_string(n + 1) + "_" + t.name();
        }
    }
    for (const auto& t : traces) {
        for (Eigen::Index n = 0; n < t.q.front().size(); ++n) {
            const std::string k = std::to_string(n + 1);
            out += ",q" + k + "_" + t.name() + ",p" + k + "_" + t.name();
        }
    }
    out += '\n';
    for (std::size_t r = 0; r < rows; ++r) {
        out += detail::fmt_sci(traces.front().times[r]);
        for (const auto& t : traces) {
            for (Eigen::Index n = 0; n < t.populations[r].size(); ++n) out += "," + detail::fmt_sci(t.populations[r](n));
        }
        for (const auto& t : traces) {
            for (Eigen::Index n = 0; n < t.q[r].size(); ++n) {
                out += "," + detail::fmt_sci(t.q[r](n)) + "," + detail::fmt_sci(t.p[r](n));
            }
        }
        out += '\n';
    }
    return out;
}

// Gate runs: one row per basis state.
inline std::string csv_string(const GateOutcome& g) {
    std::string out = "state,re_matrix,im_matrix,re_gate,im_gate,P_matrix,P_gate\n";
    const int n_qubits = static_cast<int>(std::lround(std::log2(static_cast<double>(g.matrix_state.size()))));
    for (Eigen::Index k = 0; k < g.matrix_state.size(); ++k) {
        std::string label = "|";
        for (int b = n_qubits - 1; b >= 0; --b) label += ((k >> b) & 1) ? '1' : '0';
        label += '>';
        const Complex m = g.matrix_state(k), s = g.schedule_state(k);
        out += label + "," + detail::fmt_sci(m.real()) + "," + detail::fmt_sci(m.imag()) + "," +
               detail::fmt_sci(s.real()) + "," + detail::fmt_sci(s.imag()) + "," + detail::fmt_sci(std::norm(m)) +
               "," + detail::fmt_sci(std::norm(s)) + "\n";
    }
    return out;
}

inline void emit_csv(const std::vector<SchemeTrace>& traces, const std::string& path) {
    detail::write_file(path, csv_string(traces));
}

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

inline CsvTable parse_csv(const std::string& text) {
    CsvTable t;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (first) {
            t.header = std::move(cells);
            first = false;
            continue;
        }
        std::vector<double> row;
        for (const auto& c : cells) {
            const auto v = detail::to_double(c);
            if (!v) throw ValidationError("parse_csv: bad number '" + c + "'");
            row.push_back(*v);
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

// ------------------------------------------------------------------ JSON

namespace detail {

inline nlohmann::json to_json(const Vector& v) {
    nlohmann::json a = nlohmann::json::array();
    for (Eigen::Index k = 0; k < v.size(); ++k) a.push_back(v(k));
    return a;
}

inline nlohmann::json to_json(const ComplexVector& v) {
    nlohmann::json a = nlohmann::json::array();
    for (Eigen::Index k = 0; k < v.size(); ++k) a.push_back({v(k).real(), v(k).imag()});
    return a;
}

inline nlohmann::json finite_or_null(double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(); }

}  // namespace detail

inline nlohmann::json report_json(const ComparisonReport& r) {
    nlohmann::json j;
    j["scenario"] = r.scenario;
    j["kind"] = r.kind;
    j["schemes"] = r.schemes;
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& p : r.pairs) {
        pairs.push_back({{"a", p.a},
                         {"b", p.b},
                         {"max_diff", p.max_diff},
                         {"time_of_max", p.time_of_max},
                         {"tail_max_diff", p.tail_max_diff}});
    }
    j["pairs"] = pairs;
    nlohmann::json fin = nlohmann::json::object();
    for (const auto& [name, pops] : r.final_populations) fin[name] = detail::to_json(pops);
    j["final_populations"] = fin;
    if (r.zener) {
        j["zener"] = {{"prediction", r.zener->prediction},
                      {"quantum_final_P1", detail::finite_or_null(r.zener->quantum_final)},
                      {"abs_error", detail::finite_or_null(r.zener->abs_error)}};
    }
    if (r.drive_residual) j["drive_residual"] = detail::to_json(*r.drive_residual);
    if (r.gate) {
        nlohmann::json g;
        g["input"] = detail::to_json(r.gate->input);
        g["matrix_state"] = detail::to_json(r.gate->matrix_state);
        g["schedule_state"] = detail::to_json(r.gate->schedule_state);
        g["phase_aligned_distance"] = r.gate->distance;
        g["coupling_windows"] = r.gate->windows;
        g["total_coupling_time"] = r.gate->total_duration;
        if (r.gate->entanglement) {
            g["entropy"] = r.gate->entanglement->entropy;
            g["concurrence"] = r.gate->entanglement->concurrence;
        }
        j["gate"] = g;
    }
    return j;
}

inline void emit_report(const ComparisonReport& r, const std::string& path) {
    detail::write_file(path, report_json(r).dump(2) + "\n");
}

// ------------------------------------------------------------------- SVG

namespace detail {

struct Panel {
    double x, y, w, h;
};

inline const char* palette(std::size_t k) {
    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
    return colors[k % 8];
}

class Svg {
public:
    Svg(double w, double h) : w_(w), h_(h) {}

    void text(double x, double y, const std::string& s, const char* anchor = "middle", int size = 12) {
        body_ << "<text x=\"" << fmt_short(x, 6) << "\" y=\"" << fmt_short(y, 6) << "\" font-size=\"" << size
              << "\" text-anchor=\"" << anchor << "\">" << s << "</text>\n";
    }
    void rect(double x, double y, double w, double h, const char* fill, const char* stroke = "none") {
        body_ << "<rect x=\"" << fmt_short(x, 6) << "\" y=\"" << fmt_short(y, 6) << "\" width=\"" << fmt_short(w, 6)
              << "\" height=\"" << fmt_short(h, 6) << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\"/>\n";
    }
    void line(double x1, double y1, double x2, double y2, const char* stroke) {
        body_ << "<line x1=\"" << fmt_short(x1, 6) << "\" y1=\"" << fmt_short(y1, 6) << "\" x2=\"" << fmt_short(x2, 6)
              << "\" y2=\"" << fmt_short(y2, 6) << "\" stroke=\"" << stroke << "\" stroke-width=\"0.5\"/>\n";
    }
    void polyline(const std::vector<std::pair<double, double>>& pts, const char* stroke) {
        body_ << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1\" points=\"";
        for (const auto& [x, y] : pts) body_ << fmt_short(x, 6) << ',' << fmt_short(y, 6) << ' ';
        body_ << "\"/>\n";
    }

    // Frame with y-range [lo, hi] and x-range [t0, t1]; returns the mapper.
    auto frame(const Panel& p, double t0, double t1, double lo, double hi, const std::string& title) {
        rect(p.x, p.y, p.w, p.h, "white", "black");
        text(p.x + p.w / 2, p.y - 6, title);
        text(p.x - 4, p.y + 4, fmt_short(hi, 3), "end", 10);
        text(p.x - 4, p.y + p.h + 4, fmt_short(lo, 3), "end", 10);
        text(p.x, p.y + p.h + 14, fmt_short(t0, 4), "middle", 10);
        text(p.x + p.w, p.y + p.h + 14, fmt_short(t1, 4), "middle", 10);
        const double span_t = t1 > t0 ? t1 - t0 : 1.0;
        const double span_y = hi > lo ? hi - lo : 1.0;
        return [=](double t, double v) {
            return std::pair{p.x + (t - t0) / span_t * p.w, p.y + p.h - (v - lo) / span_y * p.h};
        };
    }

    std::string str() const {
        std::ostringstream os;
        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt_short(w_, 6) << "\" height=\""
           << fmt_short(h_, 6) << "\" font-family=\"sans-serif\">\n"
           << body_.str() << "</svg>\n";
        return os.str();
    }

private:
    double w_, h_;
    std::ostringstream body_;
};

// Thin long traces to at most `cap` points, keeping the first and last.
inline std::vector<std::size_t> plot_indices(std::size_t n, std::size_t cap = 2000) {
    std::vector<std::size_t> idx;
    const std::size_t stride = std::max<std::size_t>(1, (n + cap - 1) / cap);
    for (std::size_t k = 0; k < n; k += stride) idx.push_back(k);
    if (idx.back() != n - 1) idx.push_back(n - 1);
    return idx;
}

}  // namespace detail

// One population panel per scheme plus, when there are at least two schemes,
// a panel with |P_n(first) - P_n(other)| for every other scheme.
inline std::string plot_string(const std::vector<SchemeTrace>& traces, const ComparisonReport& report) {
    using detail::Panel;
    if (traces.empty()) throw ValidationError("emit_plot: no trajectories");
    const std::size_t panels = traces.size() + (traces.size() > 1 ? 1 : 0);
    const double pw = 300, ph = 220, margin = 50;
    detail::Svg svg(margin + panels * (pw + margin), ph + 2.5 * margin);
    svg.text(margin, 18, report.scenario, "start", 14);

    const auto& t = traces.front().times;
    const auto idx = detail::plot_indices(t.size());
    for (std::size_t s = 0; s < traces.size(); ++s) {
        const auto& tr = traces[s];
        double hi = 1.0;
        for (const auto& p : tr.populations) hi = std::max(hi, p.maxCoeff());
        const Panel panel{margin + s * (pw + margin), 1.5 * margin, pw, ph};
        auto map = svg.frame(panel, t.front(), t.back(), 0.0, hi, tr.name());
        for (Eigen::Index n = 0; n < tr.populations.front().size(); ++n) {
            std::vector<std::pair<double, double>> pts;
            for (auto k : idx) pts.push_back(map(t[k], tr.populations[k](n)));
            svg.polyline(pts, detail::palette(static_cast<std::size_t>(n)));
        }
    }
    if (traces.size() > 1) {
        const Panel panel{margin + traces.size() * (pw + margin), 1.5 * margin, pw, ph};
        double hi = 0.0;
        for (std::size_t s = 1; s < traces.size(); ++s) {
            for (auto k : idx) hi = std::max(hi, (traces[s].populations[k] - traces[0].populations[k]).cwiseAbs().maxCoeff());
        }
        if (!(hi > 0.0)) hi = 1e-16;
        auto map = svg.frame(panel, t.front(), t.back(), 0.0, hi, "difference vs " + traces[0].name());
        std::size_t color = 0;
        for (std::size_t s = 1; s < traces.size(); ++s) {
            for (Eigen::Index n = 0; n < traces[s].populations.front().size(); ++n) {
                std::vector<std::pair<double, double>> pts;
                for (auto k : idx) {
                    pts.push_back(map(t[k], std::abs(traces[s].populations[k](n) - traces[0].populations[k](n))));
                }
                svg.polyline(pts, detail::palette(color++));
            }
        }
    }
    return svg.str();
}

// Bar chart of final basis-state populations, matrix and schedule side by side.
inline std::string plot_string(const GateOutcome& g, const std::string& title) {
    const std::size_t dim = static_cast<std::size_t>(g.matrix_state.size());
    const double bar = 18, gap = 20, margin = 50, ph = 200;
    const double pw = dim * (2 * bar + gap) + gap;
    detail::Svg svg(pw + 2 * margin, ph + 2.5 * margin);
    svg.text(margin, 18, title, "start", 14);
    const detail::Panel p{margin, 1.5 * margin, pw, ph};
    svg.frame(p, 0.0, 0.0, 0.0, 1.0, "final populations (matrix, schedule)");
    const int n_qubits = static_cast<int>(std::lround(std::log2(static_cast<double>(dim))));
    for (std::size_t k = 0; k < dim; ++k) {
        const double x = p.x + gap + k * (2 * bar + gap);
        const double a = std::norm(g.matrix_state(k)), b = std::norm(g.schedule_state(k));
        svg.rect(x, p.y + p.h * (1 - a), bar, p.h * a, detail::palette(0));
        svg.rect(x + bar, p.y + p.h * (1 - b), bar, p.h * b, detail::palette(1));
        std::string label = "|";
        for (int bit = n_qubits - 1; bit >= 0; --bit) label += ((k >> bit) & 1) ? '1' : '0';
        svg.text(x + bar, p.y + p.h + 28, label + "&gt;", "middle", 11);
    }
    return svg.str();
}

inline void emit_plot(const std::vector<SchemeTrace>& traces, const ComparisonReport& report, const std::string& path) {
    detail::write_file(path, plot_string(traces, report));
}

// Writes <out_dir>/<name>.csv, .json and (optionally) .svg; returns the paths.
inline std::vector<std::string> write_outputs(const ScenarioResult& r, const std::string& out_dir, bool plot) {
    const std::filesystem::path dir(out_dir);
    const std::string base = (dir / r.config.name).string();
    std::vector<std::string> written;
    if (r.report.gate) {
        detail::write_file(base + ".csv", csv_string(*r.report.gate));
        written.push_back(base + ".csv");
        if (plot) {
            detail::write_file(base + ".svg", plot_string(*r.report.gate, r.config.name));
            written.push_back(base + ".svg");
        }
    } else {
        emit_csv(r.traces, base + ".csv");
        written.push_back(base + ".csv");
        if (plot) {
            emit_plot(r.traces, r.report, base + ".svg");
            written.push_back(base + ".svg");
        }
    }
    emit_report(r.report, base + ".json");
    written.push_back(base + ".json");
    return written;
}

}  // namespace qcmap
