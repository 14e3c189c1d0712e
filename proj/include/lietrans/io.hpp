#pragma once

// CSV / JSON readers and writers, plus the binary transform-matrix cache.

#include <bit>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lietrans/transform.hpp"

namespace lietrans::io {

using json = nlohmann::json;

struct Sample {
    Vec3i s{};
    Complex value{};
};

namespace detail {

inline std::string trim(std::string_view t) {
    std::size_t b = 0, e = t.size();
    while (b < e && std::isspace(static_cast<unsigned char>(t[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(t[e - 1]))) --e;
    return std::string(t.substr(b, e - b));
}

inline std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = line.find(',', start);
        out.push_back(trim(std::string_view(line).substr(start, comma == std::string::npos ? std::string::npos
                                                                                           : comma - start)));
        if (comma == std::string::npos) return out;
        start = comma + 1;
    }
}

inline double to_number(const std::string& field, std::size_t line) {
    try {
        std::size_t used = 0;
        double v = std::stod(field, &used);
        if (used == field.size()) return v;
    } catch (const std::exception&) {
    }
    throw data_error("line " + std::to_string(line) + ": '" + field + "' is not a number");
}

inline std::int64_t to_integer(const std::string& field, std::size_t line) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(field, &used);
        if (used == field.size()) return v;
    } catch (const std::exception&) {
    }
    throw data_error("line " + std::to_string(line) + ": '" + field + "' is not an integer");
}

// Rows of a CSV whose header must equal `expected` (blank lines and '#' comments skipped).
inline std::vector<std::pair<std::size_t, std::vector<std::string>>> read_table(std::istream& in,
                                                                                const std::vector<std::string>& expected) {
    std::string line;
    std::size_t n = 0;
    bool header = false;
    std::vector<std::pair<std::size_t, std::vector<std::string>>> rows;
    while (std::getline(in, line)) {
        ++n;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty() || line[0] == '#') continue;
        auto fields = split(line);
        if (!header) {
            if (fields != expected) {
                std::string want;
                for (const auto& f : expected) want += (want.empty() ? "" : ",") + f;
                throw data_error("line " + std::to_string(n) + ": expected header '" + want + "'");
            }
            header = true;
            continue;
        }
        if (fields.size() != expected.size())
            throw data_error("line " + std::to_string(n) + ": expected " + std::to_string(expected.size()) +
                             " fields, got " + std::to_string(fields.size()));
        rows.emplace_back(n, std::move(fields));
    }
    if (!header) throw data_error("missing CSV header");
    return rows;
}

inline std::ostream& precise(std::ostream& out) { return out << std::setprecision(17); }

} // namespace detail

// ---- samples ---------------------------------------------------------------

inline void write_samples_csv(std::ostream& out, const std::vector<GridPoint>& grid, std::span<const Complex> values) {
    if (grid.size() != values.size()) throw data_error("sample count does not match the grid");
    detail::precise(out) << "s1,s2,s3,re,im\n";
    for (std::size_t i = 0; i < grid.size(); ++i)
        out << grid[i].s[0] << ',' << grid[i].s[1] << ',' << grid[i].s[2] << ',' << values[i].real() << ','
            << values[i].imag() << '\n';
}

inline std::vector<Sample> read_samples_csv(std::istream& in) {
    std::vector<Sample> out;
    for (const auto& [n, f] : detail::read_table(in, {"s1", "s2", "s3", "re", "im"}))
        out.push_back({{detail::to_integer(f[0], n), detail::to_integer(f[1], n), detail::to_integer(f[2], n)},
                       {detail::to_number(f[3], n), detail::to_number(f[4], n)}});
    return out;
}

inline json samples_json(AlgebraId id, const GridSpec& spec, Family family, const std::vector<GridPoint>& grid,
                         std::span<const Complex> values) {
    if (grid.size() != values.size()) throw data_error("sample count does not match the grid");
    json j{{"algebra", name(id)}, {"family", name(family)}, {"M", spec.densities}, {"samples", json::array()}};
    for (std::size_t i = 0; i < grid.size(); ++i)
        j["samples"].push_back({{"s", grid[i].s}, {"re", values[i].real()}, {"im", values[i].imag()}});
    return j;
}

inline std::vector<Sample> samples_from_json(const json& j) {
    if (!j.is_object() || !j.contains("samples") || !j["samples"].is_array())
        throw data_error("sample JSON needs a 'samples' array");
    std::vector<Sample> out;
    try {
        for (const auto& e : j["samples"])
            out.push_back({e.at("s").get<Vec3i>(), {e.at("re").get<double>(), e.value("im", 0.0)}});
    } catch (const json::exception& e) {
        throw data_error(std::string("malformed sample JSON: ") + e.what());
    }
    return out;
}

inline std::vector<Sample> read_samples(std::istream& in) {
    in >> std::ws;
    if (in.peek() == '{') {
        try {
            return samples_from_json(json::parse(in));
        } catch (const json::parse_error& e) {
            throw data_error(std::string("malformed JSON: ") + e.what());
        }
    }
    return read_samples_csv(in);
}

// Put samples into canonical grid order; every grid point must appear exactly once.
inline std::vector<Complex> align_samples(const std::vector<Sample>& samples, const std::vector<GridPoint>& grid) {
    if (samples.size() != grid.size())
        throw data_error("expected " + std::to_string(grid.size()) + " samples for this grid, got " +
                         std::to_string(samples.size()));
    std::map<Vec3i, Complex> by_index;
    for (const auto& s : samples)
        if (!by_index.emplace(s.s, s.value).second) throw data_error("duplicate sample at " + format_vec(s.s));
    std::vector<Complex> out;
    out.reserve(grid.size());
    for (const auto& p : grid) {
        auto it = by_index.find(p.s);
        if (it == by_index.end()) throw data_error("no sample for grid point " + format_vec(p.s));
        out.push_back(it->second);
    }
    return out;
}

// ---- spectra ---------------------------------------------------------------

inline void write_spectrum_csv(std::ostream& out, const Spectrum& s) {
    detail::precise(out) << "t1,t2,t3,re,im,norm\n";
    for (std::size_t i = 0; i < s.weights.size(); ++i)
        out << s.weights[i][0] << ',' << s.weights[i][1] << ',' << s.weights[i][2] << ',' << s.coeffs[i].real() << ','
            << s.coeffs[i].imag() << ',' << (i < s.norms.size() ? s.norms[i] : 0.0) << '\n';
}

// The CSV carries no algebra/family; the caller supplies them.
inline Spectrum read_spectrum_csv(std::istream& in, AlgebraId id, Family family, const GridSpec& spec = {}) {
    Spectrum s{id, family, spec, {}, {}, {}, {}};
    for (const auto& [n, f] : detail::read_table(in, {"t1", "t2", "t3", "re", "im", "norm"})) {
        s.weights.push_back({detail::to_integer(f[0], n), detail::to_integer(f[1], n), detail::to_integer(f[2], n)});
        s.coeffs.emplace_back(detail::to_number(f[3], n), detail::to_number(f[4], n));
        s.norms.push_back(detail::to_number(f[5], n));
    }
    return s;
}

inline json spectrum_json(const Spectrum& s) {
    json j{{"algebra", name(s.algebra)}, {"family", name(s.family)}, {"M", s.spec.densities}, {"terms", json::array()}};
    for (std::size_t i = 0; i < s.weights.size(); ++i) {
        json t{{"t", s.weights[i]}, {"re", s.coeffs[i].real()}, {"im", s.coeffs[i].imag()}};
        if (i < s.norms.size()) t["norm"] = s.norms[i];
        if (i < s.stderrs.size()) t["stderr"] = s.stderrs[i];
        j["terms"].push_back(t);
    }
    return j;
}

inline Spectrum spectrum_from_json(const json& j) {
    try {
        Spectrum s;
        s.algebra = parse_algebra(j.at("algebra").get<std::string>());
        s.family = parse_family(j.at("family").get<std::string>());
        s.spec.densities = j.value("M", std::vector<int>{});
        for (const auto& t : j.at("terms")) {
            s.weights.push_back(t.at("t").get<Vec3i>());
            s.coeffs.emplace_back(t.at("re").get<double>(), t.value("im", 0.0));
            s.norms.push_back(t.value("norm", 0.0));
        }
        return s;
    } catch (const json::exception& e) {
        throw data_error(std::string("malformed spectrum JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw data_error(std::string("malformed spectrum JSON: ") + e.what());
    }
}

// ---- evaluation points -----------------------------------------------------

// Points file: header x1,x2,x3 (omega-check coordinates) or s1,s2,s3 (grid
// indices, which need the per-coordinate densities).
inline std::vector<Vec3d> read_points_csv(std::istream& source, std::optional<Vec3<int>> M = std::nullopt) {
    std::stringstream in; // buffered so the header can be sniffed on pipes too
    in << source.rdbuf();
    std::string first;
    while (std::getline(in, first))
        if (!detail::trim(first).empty() && first[0] != '#') break;
    in.clear();
    in.seekg(0);
    const bool indexed = detail::trim(first).rfind("s1", 0) == 0;
    if (indexed && !M) throw data_error("index points (s1,s2,s3) need grid densities");
    std::vector<Vec3d> out;
    for (const auto& [n, f] : detail::read_table(in, indexed ? std::vector<std::string>{"s1", "s2", "s3"}
                                                             : std::vector<std::string>{"x1", "x2", "x3"})) {
        Vec3d x{};
        for (int i = 0; i < 3; ++i) x[i] = indexed ? detail::to_integer(f[i], n) / static_cast<double>((*M)[i])
                                                   : detail::to_number(f[i], n);
        out.push_back(x);
    }
    return out;
}

inline void write_values_csv(std::ostream& out, const std::vector<Vec3d>& xs, std::span<const Complex> values) {
    detail::precise(out) << "x1,x2,x3,re,im\n";
    for (std::size_t i = 0; i < xs.size(); ++i)
        out << xs[i][0] << ',' << xs[i][1] << ',' << xs[i][2] << ',' << values[i].real() << ',' << values[i].imag()
            << '\n';
}

// ---- grid and weight-set export ------------------------------------------

inline void write_grid_csv(std::ostream& out, const std::vector<GridPoint>& grid) {
    detail::precise(out) << "s1,s2,s3,x1,x2,x3,eps\n";
    for (const auto& p : grid) {
        const Vec3d x = p.point();
        out << p.s[0] << ',' << p.s[1] << ',' << p.s[2] << ',' << x[0] << ',' << x[1] << ',' << x[2] << ',' << p.eps
            << '\n';
    }
}

inline json grid_json(AlgebraId id, const GridSpec& spec, Family family, const std::vector<GridPoint>& grid) {
    json j{{"algebra", name(id)}, {"family", name(family)}, {"M", spec.densities}, {"points", json::array()}};
    for (const auto& p : grid) {
        const Vec3q q = p.coords();
        json coords = json::array();
        for (const auto& c : q) coords.push_back(std::to_string(c.numerator()) + "/" + std::to_string(c.denominator()));
        j["points"].push_back({{"s", p.s}, {"x", coords}, {"eps", p.eps}});
    }
    return j;
}

inline void write_lambda_csv(std::ostream& out, const std::vector<Weight>& weights, const std::vector<double>& norms) {
    detail::precise(out) << "t1,t2,t3,norm\n";
    for (std::size_t i = 0; i < weights.size(); ++i)
        out << weights[i][0] << ',' << weights[i][1] << ',' << weights[i][2] << ',' << norms.at(i) << '\n';
}

inline json lambda_json(AlgebraId id, const GridSpec& spec, Family family, const std::vector<Weight>& weights,
                        const std::vector<double>& norms) {
    json j{{"algebra", name(id)}, {"family", name(family)}, {"M", spec.densities}, {"weights", json::array()}};
    for (std::size_t i = 0; i < weights.size(); ++i) j["weights"].push_back({{"t", weights[i]}, {"norm", norms.at(i)}});
    return j;
}

// ---- transform-matrix cache ------------------------------------------------
//
// One JSON header line, then rows*cols complex doubles (re, im) row-major,
// little-endian.  The header keys the cache by algebra, densities and family
// and also carries the weights, grid indices and epsilon weights.

namespace detail {

inline void put_le(std::ostream& out, double v) {
    std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
    if constexpr (std::endian::native == std::endian::big) bits = __builtin_bswap64(bits);
    out.write(reinterpret_cast<const char*>(&bits), sizeof bits);
}

inline double get_le(std::istream& in) {
    std::uint64_t bits = 0;
    if (!in.read(reinterpret_cast<char*>(&bits), sizeof bits)) throw data_error("truncated matrix cache");
    if constexpr (std::endian::native == std::endian::big) bits = __builtin_bswap64(bits);
    return std::bit_cast<double>(bits);
}

} // namespace detail

inline void write_matrix_cache(std::ostream& out, const TransformMatrix& m) {
    json h{{"format", "lietrans-matrix/1"},
           {"algebra", name(m.algebra)},
           {"family", name(m.family)},
           {"M", m.spec.densities},
           {"rows", m.rows},
           {"cols", m.cols},
           {"weights", m.weights},
           {"grid", m.grid_indices},
           {"eps", m.eps},
           {"norms", m.norms}};
    out << h.dump() << '\n';
    for (const auto& z : m.B) {
        detail::put_le(out, z.real());
        detail::put_le(out, z.imag());
    }
}

inline TransformMatrix read_matrix_cache(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw data_error("empty matrix cache");
    TransformMatrix m;
    try {
        json h = json::parse(line);
        if (h.at("format") != "lietrans-matrix/1") throw data_error("unknown matrix cache format");
        m.algebra = parse_algebra(h.at("algebra").get<std::string>());
        m.family = parse_family(h.at("family").get<std::string>());
        m.spec.densities = h.at("M").get<std::vector<int>>();
        m.rows = h.at("rows").get<std::size_t>();
        m.cols = h.at("cols").get<std::size_t>();
        m.weights = h.at("weights").get<std::vector<Weight>>();
        m.grid_indices = h.at("grid").get<std::vector<Vec3i>>();
        m.eps = h.at("eps").get<std::vector<double>>();
        m.norms = h.at("norms").get<std::vector<double>>();
    } catch (const json::exception& e) {
        throw data_error(std::string("malformed matrix cache header: ") + e.what());
    }
    if (m.weights.size() != m.rows || m.grid_indices.size() != m.cols || m.eps.size() != m.cols)
        throw data_error("matrix cache header is inconsistent");
    m.B.resize(m.rows * m.cols);
    for (auto& z : m.B) {
        const double re = detail::get_le(in);
        z = {re, detail::get_le(in)};
    }
    return m;
}

// Load the cache at `path` when its key matches, else build, save and return.
inline TransformMatrix cached_matrix(const std::string& path, AlgebraId id, const GridSpec& spec, Family family) {
    {
        std::ifstream in(path, std::ios::binary);
        if (in) {
            TransformMatrix m = read_matrix_cache(in);
            if (m.algebra == id && m.family == family && m.spec == spec) return m;
        }
    }
    TransformMatrix m = DiscreteTransform(id, spec, family).matrix();
    std::ofstream out(path, std::ios::binary);
    if (!out) throw data_error("cannot write matrix cache " + path);
    write_matrix_cache(out, m);
    return m;
}

} // namespace lietrans::io
