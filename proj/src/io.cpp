#include "backlund/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace backlund::io {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::vector<std::string> frame_headers(std::size_t d, const std::string& prefix) {
    std::vector<std::string> h;
    const std::size_t nframes = d;  // e1..e3 for 3-space, e1..e4 for g4
    for (std::size_t f = 1; f <= nframes; ++f)
        for (std::size_t j = 1; j <= d; ++j)
            h.push_back(prefix + "e" + std::to_string(f) + "_" + std::to_string(j));
    return h;
}

std::vector<std::string> header_columns(SpaceCase space, bool pair) {
    const std::size_t d = dim(space);
    std::vector<std::string> h{"s"};
    for (std::size_t j = 1; j <= d; ++j) h.push_back("p" + std::to_string(j));
    for (auto& c : frame_headers(d, "")) h.push_back(c);
    h.push_back("kappa");
    h.push_back("tau");
    if (space == SpaceCase::G4) h.push_back("sigma");
    if (pair) {
        h.push_back("gamma");
        for (std::size_t j = 1; j <= d; ++j) h.push_back("img_p" + std::to_string(j));
        for (auto& c : frame_headers(d, "img_")) h.push_back(c);
    }
    return h;
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ',';
        out += parts[i];
    }
    return out;
}

void append_vec(std::vector<std::string>& row, const GVec& v) {
    for (std::size_t j = 0; j < v.n; ++j) row.push_back(format_double(v[j]));
}

std::string meta_line(const std::map<std::string, std::string>& meta) {
    std::string out = "#";
    for (const auto& [k, v] : meta) out += " " + k + "=" + v;
    return out;
}

std::map<std::string, std::string> parse_meta(const std::string& line) {
    std::map<std::string, std::string> meta;
    std::istringstream ss(line.substr(1));
    std::string tok;
    while (ss >> tok) {
        const auto eq = tok.find('=');
        if (eq != std::string::npos) meta[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    return meta;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

double parse_number(const std::string& tok, std::size_t row, const std::string& col) {
    try {
        std::size_t used = 0;
        const double v = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error("malformed CSV: row " + std::to_string(row) + ", column '" +
                                 col + "': not a number: '" + tok + "'");
    }
}

struct ParsedCsv {
    std::map<std::string, std::string> meta;
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

ParsedCsv parse_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    ParsedCsv out;
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (out.meta.empty()) out.meta = parse_meta(line);
            continue;
        }
        if (!have_header) {
            out.header = split_csv(line);
            have_header = true;
            continue;
        }
        const auto toks = split_csv(line);
        if (toks.size() != out.header.size())
            throw std::runtime_error("malformed CSV: row " + std::to_string(out.rows.size() + 1) +
                                     ": expected " + std::to_string(out.header.size()) +
                                     " columns, got " + std::to_string(toks.size()));
        std::vector<double> vals(toks.size());
        for (std::size_t j = 0; j < toks.size(); ++j)
            vals[j] = parse_number(toks[j], out.rows.size() + 1, out.header[j]);
        out.rows.push_back(std::move(vals));
    }
    if (!have_header) throw std::runtime_error("malformed CSV: missing header row in '" + path + "'");
    if (out.rows.size() < 2) throw std::runtime_error("malformed CSV: need at least 2 data rows");
    return out;
}

void check_uniform_grid(const std::vector<std::vector<double>>& rows) {
    const double h = (rows.back()[0] - rows.front()[0]) / static_cast<double>(rows.size() - 1);
    if (!(h > 0)) throw std::runtime_error("malformed CSV: row 2: s grid must be increasing");
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (std::fabs(rows[i][0] - rows[i - 1][0] - h) > 1e-9 * (1 + std::fabs(h)))
            throw std::runtime_error("malformed CSV: row " + std::to_string(i + 1) +
                                     ": non-uniform s grid");
}

SpaceCase space_from_meta(const std::map<std::string, std::string>& meta) {
    const auto it = meta.find("case");
    if (it == meta.end())
        throw std::runtime_error("malformed CSV: metadata line lacks 'case='");
    return parse_space_case(it->second);
}

void write_lines(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace

void write_curve_csv(const std::string& path, const CurveData& curve, const FrenetData& frames,
                     const std::map<std::string, std::string>& meta) {
    const std::size_t d = dim(curve.space);
    auto m = meta;
    m["case"] = to_string(curve.space);
    m["kind"] = "seed";
    if (is_pseudo(curve.space)) m["epsilon"] = format_double(frames.epsilon);
    if (curve.space == SpaceCase::G4) m["mu"] = format_double(frames.mu);

    std::string text = meta_line(m) + "\n" + join(header_columns(curve.space, false)) + "\n";
    for (std::size_t i = 0; i < curve.s.size(); ++i) {
        std::vector<std::string> row{format_double(curve.s[i])};
        append_vec(row, curve.positions[i]);
        append_vec(row, frames.frames.e1[i]);
        append_vec(row, frames.frames.e2[i]);
        append_vec(row, frames.frames.e3[i]);
        if (d == 4) append_vec(row, frames.frames.e4[i]);
        row.push_back(format_double(frames.kappa[i]));
        row.push_back(format_double(frames.tau[i]));
        if (curve.space == SpaceCase::G4)
            row.push_back(format_double(frames.sigma.empty() ? 0.0 : frames.sigma[i]));
        text += join(row) + "\n";
    }
    write_lines(path, text);
}

namespace {

// shared column unpacking for seed and pair files
struct Layout {
    SpaceCase space;
    std::size_t d;
    bool pair;
};

Layout check_header(const ParsedCsv& csv) {
    Layout lay;
    lay.space = space_from_meta(csv.meta);
    lay.d = dim(lay.space);
    const auto expect_seed = header_columns(lay.space, false);
    const auto expect_pair = header_columns(lay.space, true);
    if (csv.header == expect_seed) {
        lay.pair = false;
    } else if (csv.header == expect_pair) {
        lay.pair = true;
    } else {
        throw std::runtime_error("malformed CSV: header does not match the " +
                                 to_string(lay.space) + " schema");
    }
    return lay;
}

void unpack_curve(const ParsedCsv& csv, const Layout& lay, CurveData& curve, FrenetData& frames) {
    const std::size_t n = csv.rows.size();
    const std::size_t d = lay.d;
    curve.space = lay.space;
    curve.s.resize(n);
    curve.positions.assign(n, GVec::zero(d));
    frames.frames.e1.assign(n, GVec::zero(d));
    frames.frames.e2.assign(n, GVec::zero(d));
    frames.frames.e3.assign(n, GVec::zero(d));
    if (d == 4) frames.frames.e4.assign(n, GVec::zero(d));
    frames.kappa.resize(n);
    frames.tau.resize(n);
    if (lay.space == SpaceCase::G4) frames.sigma.resize(n);
    if (auto it = csv.meta.find("epsilon"); it != csv.meta.end())
        frames.epsilon = std::stod(it->second);
    if (auto it = csv.meta.find("mu"); it != csv.meta.end()) frames.mu = std::stod(it->second);

    for (std::size_t i = 0; i < n; ++i) {
        const auto& r = csv.rows[i];
        std::size_t c = 0;
        curve.s[i] = r[c++];
        for (std::size_t j = 0; j < d; ++j) curve.positions[i][j] = r[c++];
        for (std::size_t j = 0; j < d; ++j) frames.frames.e1[i][j] = r[c++];
        for (std::size_t j = 0; j < d; ++j) frames.frames.e2[i][j] = r[c++];
        for (std::size_t j = 0; j < d; ++j) frames.frames.e3[i][j] = r[c++];
        if (d == 4)
            for (std::size_t j = 0; j < d; ++j) frames.frames.e4[i][j] = r[c++];
        frames.kappa[i] = r[c++];
        frames.tau[i] = r[c++];
        if (lay.space == SpaceCase::G4) frames.sigma[i] = r[c++];
    }
}

}  // namespace

CurveFile read_curve_csv(const std::string& path) {
    const auto csv = parse_csv(path);
    check_uniform_grid(csv.rows);
    const auto lay = check_header(csv);
    if (lay.pair)
        throw std::runtime_error("expected a seed curve file but '" + path + "' holds a pair");
    CurveFile out;
    out.meta = csv.meta;
    unpack_curve(csv, lay, out.curve, out.frames);
    return out;
}

void write_pair_csv(const std::string& path, const TransformedPair& pair) {
    const SpaceCase space = pair.params.space;
    const std::size_t d = dim(space);
    std::map<std::string, std::string> m;
    m["case"] = to_string(space);
    m["kind"] = "pair";
    m["tau0"] = format_double(pair.params.tau0);
    m["phi"] = format_double(pair.params.phi);
    m["gamma0"] = format_double(pair.params.gamma0);
    if (is_pseudo(space)) m["epsilon"] = format_double(pair.seed_frames.epsilon);
    if (space == SpaceCase::G4) m["mu"] = format_double(pair.seed_frames.mu);

    std::string text = meta_line(m) + "\n" + join(header_columns(space, true)) + "\n";
    for (std::size_t i = 0; i < pair.seed_curve.s.size(); ++i) {
        std::vector<std::string> row{format_double(pair.seed_curve.s[i])};
        append_vec(row, pair.seed_curve.positions[i]);
        append_vec(row, pair.seed_frames.frames.e1[i]);
        append_vec(row, pair.seed_frames.frames.e2[i]);
        append_vec(row, pair.seed_frames.frames.e3[i]);
        if (d == 4) append_vec(row, pair.seed_frames.frames.e4[i]);
        row.push_back(format_double(pair.seed_frames.kappa[i]));
        row.push_back(format_double(pair.seed_frames.tau[i]));
        if (space == SpaceCase::G4)
            row.push_back(format_double(
                pair.seed_frames.sigma.empty() ? 0.0 : pair.seed_frames.sigma[i]));
        row.push_back(format_double(pair.gamma[i]));
        append_vec(row, pair.image_curve.positions[i]);
        append_vec(row, pair.image_frames.e1[i]);
        append_vec(row, pair.image_frames.e2[i]);
        append_vec(row, pair.image_frames.e3[i]);
        if (d == 4) append_vec(row, pair.image_frames.e4[i]);
        text += join(row) + "\n";
    }
    write_lines(path, text);
}

TransformedPair read_pair_csv(const std::string& path) {
    const auto csv = parse_csv(path);
    check_uniform_grid(csv.rows);
    const auto lay = check_header(csv);
    if (!lay.pair)
        throw std::runtime_error("expected a pair file but '" + path + "' holds a seed curve");
    const std::size_t n = csv.rows.size();
    const std::size_t d = lay.d;

    TransformedPair pair;
    unpack_curve(csv, lay, pair.seed_curve, pair.seed_frames);

    auto need = [&](const char* key) {
        const auto it = csv.meta.find(key);
        if (it == csv.meta.end())
            throw std::runtime_error("malformed CSV: pair metadata lacks '" + std::string(key) +
                                     "='");
        return std::stod(it->second);
    };
    Grid grid{pair.seed_curve.s.front(), pair.seed_curve.s.back(), n};
    pair.params =
        make_backlund_params(lay.space, need("tau0"), need("phi"), need("gamma0"), grid);

    pair.gamma.resize(n);
    pair.image_curve.space = lay.space;
    pair.image_curve.s = pair.seed_curve.s;
    pair.image_curve.positions.assign(n, GVec::zero(d));
    pair.image_frames.e1.assign(n, GVec::zero(d));
    pair.image_frames.e2.assign(n, GVec::zero(d));
    pair.image_frames.e3.assign(n, GVec::zero(d));
    if (d == 4) pair.image_frames.e4.assign(n, GVec::zero(d));

    const std::size_t base = 1 + d + d * d + 2 + (lay.space == SpaceCase::G4 ? 1 : 0);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& r = csv.rows[i];
        std::size_t c = base;
        pair.gamma[i] = r[c++];
        for (std::size_t j = 0; j < d; ++j) pair.image_curve.positions[i][j] = r[c++];
        for (std::size_t j = 0; j < d; ++j) pair.image_frames.e1[i][j] = r[c++];
        for (std::size_t j = 0; j < d; ++j) pair.image_frames.e2[i][j] = r[c++];
        for (std::size_t j = 0; j < d; ++j) pair.image_frames.e3[i][j] = r[c++];
        if (d == 4)
            for (std::size_t j = 0; j < d; ++j) pair.image_frames.e4[i][j] = r[c++];
    }
    return pair;
}

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string json_number(double v) {
    if (!std::isfinite(v)) return "null";
    return format_double(v);
}

}  // namespace

std::string report_to_json(const DiagnosticsReport& report) {
    std::string out = "{\n";
    out += "  \"case\": \"" + to_string(report.params.space) + "\",\n";
    out += "  \"params\": {";
    out += "\"tau\": " + json_number(report.params.tau0);
    out += ", \"phi\": " + json_number(report.params.phi);
    out += ", \"gamma0\": " + json_number(report.params.gamma0);
    out += ", \"C\": " + json_number(report.params.C);
    out += ", \"r\": " + json_number(report.params.r);
    out += "},\n";
    out += "  \"checks\": {\n";
    for (std::size_t i = 0; i < report.checks.size(); ++i) {
        const auto& e = report.checks[i];
        out += "    \"" + json_escape(e.name) + "\": {";
        out += "\"observed\": " + json_number(e.observed);
        out += ", \"expected\": " + json_number(e.expected);
        out += ", \"tolerance\": " + json_number(e.tolerance);
        out += std::string(", \"pass\": ") + (e.verdict == Verdict::Fail ? "false" : "true");
        out += ", \"verdict\": \"" + to_string(e.verdict) + "\"}";
        out += (i + 1 < report.checks.size()) ? ",\n" : "\n";
    }
    out += "  },\n";
    out += "  \"notes\": [\n";
    for (std::size_t i = 0; i < report.notes.size(); ++i) {
        out += "    \"" + json_escape(report.notes[i]) + "\"";
        out += (i + 1 < report.notes.size()) ? ",\n" : "\n";
    }
    out += "  ]\n}\n";
    return out;
}

void write_report_json(const std::string& path, const DiagnosticsReport& report) {
    write_lines(path, report_to_json(report));
}

}  // namespace backlund::io
