#ifndef FCH_IO_HPP
#define FCH_IO_HPP

#include "fch/spectral.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace fch {

/** Formats a double with 17 significant digits, '.' decimal separator,
 *  locale-independent (round-trip exact). */
std::string format_double(double x);

/** Field snapshot file: little-endian binary
 *  "FCH1" | L (f64) | N (u64) | t (f64) | nu (f64) | N grid samples (f64). */
struct Snapshot {
    SpectralField field;
    double time;
    double nu;
};

void write_snapshot(const std::filesystem::path& path, const SpectralField& field,
                    double time, double nu);
Snapshot read_snapshot(const std::filesystem::path& path,
                       double dealias_fraction = 2.0 / 3.0);

/** Two-column CSV export with an "x,u" header. */
void write_field_csv(const std::filesystem::path& path, const SpectralField& field);

/** FNV-1a 64-bit content digest, hex-encoded. */
std::string file_digest(const std::filesystem::path& path);

/** Concrete initial profiles:
 *    cosine:amp,mode    amp * cos(2 pi mode x / L)
 *    gaussian:amp,width amp * exp(-(x - L/2)^2 / (2 width^2))
 *    sech:amp,width     amp * sech((x - L/2) / width)
 *    snapshot:path      field loaded from a snapshot file
 *  Analytic kinds are evaluated on the nodes and then dealiased. */
struct NamedProfile {
    enum class Kind { cosine, gaussian, sech, snapshot } kind;
    double amplitude = 0.0;
    double parameter = 0.0; // mode number or width
    std::string path;
};

NamedProfile parse_profile(const std::string& text);
SpectralField realize_profile(const NamedProfile& profile, const GridPtr& grid);

/** Flat key = value run configuration; repeated keys form sweep axes. */
struct ConfigEntry {
    std::string key;
    std::string value;
};
std::vector<ConfigEntry> parse_config_file(const std::filesystem::path& path);

/** Append-only run manifest (run.json): command, flags, grid, seed, wall
 *  clock, and the digest of every file the run wrote. */
class ManifestWriter {
  public:
    ManifestWriter(std::filesystem::path run_dir, std::string command,
                   std::vector<std::string> args);

    void set_grid(const Grid& grid);
    void set_param(const std::string& key, const std::string& value);
    void set_seed(std::uint64_t seed);
    /** Registers a file (relative to the run directory) for digesting. */
    void add_output(const std::filesystem::path& relative_path);
    /** Digests outputs and appends the record to run.json. */
    void finalize();

  private:
    std::filesystem::path run_dir_;
    std::string command_;
    std::vector<std::string> args_;
    std::map<std::string, std::string> params_;
    std::vector<std::filesystem::path> outputs_;
    std::string started_;
    bool has_grid_ = false;
    double grid_length_ = 0.0;
    std::uint64_t grid_size_ = 0;
    double grid_fraction_ = 0.0;
    bool has_seed_ = false;
    std::uint64_t seed_ = 0;
};

} // namespace fch

#endif
