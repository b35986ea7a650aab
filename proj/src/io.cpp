#include "fch/io.hpp"

#include "fch/version.hpp"

#include <json.hpp>

#include <bit>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstring>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace fch {

std::string format_double(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x,
                                   std::chars_format::general, 17);
    if (ec != std::errc{}) throw std::runtime_error("format_double failed");
    return std::string(buf, ptr);
}

namespace {

static_assert(std::endian::native == std::endian::little,
              "snapshot format assumes a little-endian host");

void put_u64(std::ostream& os, std::uint64_t v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

void put_f64(std::ostream& os, double v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

std::uint64_t get_u64(std::istream& is) {
    std::uint64_t v;
    is.read(reinterpret_cast<char*>(&v), sizeof v);
    return v;
}

double get_f64(std::istream& is) {
    double v;
    is.read(reinterpret_cast<char*>(&v), sizeof v);
    return v;
}

std::string now_iso8601() {
    auto now = std::chrono::system_clock::now();
    std::time_t tt = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&tt, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace

void write_snapshot(const std::filesystem::path& path, const SpectralField& field,
                    double time, double nu) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
    os.write("FCH1", 4);
    put_f64(os, field.grid().length());
    put_u64(os, field.grid().size());
    put_f64(os, time);
    put_f64(os, nu);
    for (double v : field.values()) put_f64(os, v);
    if (!os) throw std::runtime_error("short write to " + path.string());
}

Snapshot read_snapshot(const std::filesystem::path& path, double dealias_fraction) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open " + path.string());
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, "FCH1", 4) != 0)
        throw std::runtime_error(path.string() + ": not a field snapshot");
    double length = get_f64(is);
    std::uint64_t n = get_u64(is);
    double time = get_f64(is);
    double nu = get_f64(is);
    std::vector<double> values(n);
    is.read(reinterpret_cast<char*>(values.data()),
            static_cast<std::streamsize>(n * sizeof(double)));
    if (!is) throw std::runtime_error(path.string() + ": truncated snapshot");
    GridPtr grid = make_grid(length, n, dealias_fraction);
    return {SpectralField::from_values(grid, std::move(values)), time, nu};
}

void write_field_csv(const std::filesystem::path& path, const SpectralField& field) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
    os << "x,u\n";
    for (std::size_t j = 0; j < field.grid().size(); ++j)
        os << format_double(field.grid().node(j)) << ',' << format_double(field.values()[j])
           << '\n';
}

std::string file_digest(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot digest " + path.string());
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    char buf[4096];
    while (is.read(buf, sizeof buf) || is.gcount() > 0) {
        for (std::streamsize i = 0; i < is.gcount(); ++i) {
            hash ^= static_cast<unsigned char>(buf[i]);
            hash *= 0x100000001b3ULL;
        }
        if (!is) break;
    }
    std::ostringstream out;
    out << "fnv1a:" << std::hex << hash;
    return out.str();
}

NamedProfile parse_profile(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("profile '" + text + "': expected kind:params");
    std::string kind = text.substr(0, colon);
    std::string rest = text.substr(colon + 1);

    NamedProfile p{};
    if (kind == "snapshot") {
        if (rest.empty()) throw std::invalid_argument("profile snapshot: missing path");
        p.kind = NamedProfile::Kind::snapshot;
        p.path = rest;
        return p;
    }

    auto comma = rest.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("profile '" + text + "': expected two parameters");
    double amp, par;
    try {
        amp = std::stod(rest.substr(0, comma));
        par = std::stod(rest.substr(comma + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("profile '" + text + "': malformed number");
    }
    p.amplitude = amp;
    p.parameter = par;
    if (kind == "cosine") {
        p.kind = NamedProfile::Kind::cosine;
        if (!(par >= 0.0) || par != std::floor(par))
            throw std::invalid_argument("cosine profile: mode must be a nonnegative integer");
    } else if (kind == "gaussian") {
        p.kind = NamedProfile::Kind::gaussian;
        if (!(par > 0.0)) throw std::invalid_argument("gaussian profile: width must be > 0");
    } else if (kind == "sech") {
        p.kind = NamedProfile::Kind::sech;
        if (!(par > 0.0)) throw std::invalid_argument("sech profile: width must be > 0");
    } else {
        throw std::invalid_argument("unknown profile kind '" + kind + "'");
    }
    return p;
}

SpectralField realize_profile(const NamedProfile& profile, const GridPtr& grid) {
    switch (profile.kind) {
        case NamedProfile::Kind::snapshot: {
            Snapshot snap = read_snapshot(profile.path, grid ? grid->dealias_fraction() : 2.0 / 3.0);
            if (grid && !(*grid == snap.field.grid()))
                throw std::invalid_argument("snapshot grid does not match requested grid");
            return snap.field;
        }
        case NamedProfile::Kind::cosine: {
            double a = profile.amplitude;
            double k = 2.0 * std::numbers::pi * profile.parameter / grid->length();
            return dealias(SpectralField::sample(
                grid, [a, k](double x) { return a * std::cos(k * x); }));
        }
        case NamedProfile::Kind::gaussian: {
            double a = profile.amplitude, w = profile.parameter;
            double c = grid->length() / 2.0;
            return dealias(SpectralField::sample(grid, [a, w, c](double x) {
                double d = x - c;
                return a * std::exp(-d * d / (2.0 * w * w));
            }));
        }
        case NamedProfile::Kind::sech: {
            double a = profile.amplitude, w = profile.parameter;
            double c = grid->length() / 2.0;
            return dealias(SpectralField::sample(
                grid, [a, w, c](double x) { return a / std::cosh((x - c) / w); }));
        }
    }
    throw std::logic_error("realize_profile: unreachable");
}

std::vector<ConfigEntry> parse_config_file(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open config " + path.string());
    std::vector<ConfigEntry> entries;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return (b == std::string::npos) ? std::string{} : s.substr(b, e - b + 1);
        };
        std::string t = trim(line);
        if (t.empty()) continue;
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(path.string() + ":" + std::to_string(lineno) +
                                        ": expected key = value");
        entries.push_back({trim(t.substr(0, eq)), trim(t.substr(eq + 1))});
    }
    return entries;
}

ManifestWriter::ManifestWriter(std::filesystem::path run_dir, std::string command,
                               std::vector<std::string> args)
    : run_dir_(std::move(run_dir)), command_(std::move(command)), args_(std::move(args)),
      started_(now_iso8601()) {}

void ManifestWriter::set_grid(const Grid& grid) {
    has_grid_ = true;
    grid_length_ = grid.length();
    grid_size_ = grid.size();
    grid_fraction_ = grid.dealias_fraction();
}

void ManifestWriter::set_param(const std::string& key, const std::string& value) {
    params_[key] = value;
}

void ManifestWriter::set_seed(std::uint64_t seed) {
    has_seed_ = true;
    seed_ = seed;
}

void ManifestWriter::add_output(const std::filesystem::path& relative_path) {
    outputs_.push_back(relative_path);
}

void ManifestWriter::finalize() {
    nlohmann::json record;
    record["command"] = command_;
    record["args"] = args_;
    record["version"] = kVersion;
    record["started"] = started_;
    record["finished"] = now_iso8601();
    if (has_grid_) {
        record["grid"] = {{"length", grid_length_},
                          {"size", grid_size_},
                          {"dealias_fraction", grid_fraction_}};
    }
    if (!params_.empty()) record["params"] = params_;
    if (has_seed_) record["seed"] = seed_;
    auto outputs = nlohmann::json::array();
    for (const auto& rel : outputs_) {
        outputs.push_back({{"path", rel.generic_string()},
                           {"digest", file_digest(run_dir_ / rel)}});
    }
    record["outputs"] = outputs;

    // Append-only: earlier run records are preserved.
    std::filesystem::path manifest = run_dir_ / "run.json";
    nlohmann::json doc;
    if (std::filesystem::exists(manifest)) {
        std::ifstream is(manifest);
        is >> doc;
    }
    if (!doc.contains("runs") || !doc["runs"].is_array()) doc["runs"] = nlohmann::json::array();
    doc["runs"].push_back(record);
    std::ofstream os(manifest);
    os << doc.dump(2) << '\n';
}

} // namespace fch
