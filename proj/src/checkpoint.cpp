#include "lrh/checkpoint.hpp"

#include <cstdint>
#include <fstream>

#include <json.hpp>

namespace lrh {

namespace {

constexpr char magic[4] = {'L', 'R', 'H', 'T'};

template <typename T>
void put(std::ofstream& os, T v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::ifstream& is) {
    T v{};
    is.read(reinterpret_cast<char*>(&v), sizeof(T));
    return v;
}

void put_field(std::ofstream& os, const Field& f) {
    for (const auto& z : f.values()) {
        put(os, z.real());
        put(os, z.imag());
    }
}

Field get_field(std::ifstream& is, const GridSpec& g) {
    Field f(g, Space::spectral);
    for (auto& z : f.values()) {
        double re = get<double>(is);
        double im = get<double>(is);
        z = cplx{re, im};
    }
    return f;
}

} // namespace

void write_trajectory(const std::string& path, const Trajectory& traj,
                      const SolverConfig& config, const std::string& manifest_hash) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw ConfigError("write_trajectory: cannot open " + path);
    os.write(magic, 4);
    put<std::uint32_t>(os, 1);
    put<std::uint32_t>(os, static_cast<std::uint32_t>(traj.grid().dim));
    put<std::uint32_t>(os, static_cast<std::uint32_t>(traj.grid().points));
    put(os, traj.grid().box);
    put(os, config.params.gamma);
    put(os, config.params.kappa);
    put(os, config.params.rho);
    put(os, config.eta);
    put<std::uint64_t>(os, traj.times.size());
    for (double t : traj.times) put(os, t);
    put_field(os, to_fourier(traj.datum));
    for (const auto& s : traj.snaps) put_field(os, to_fourier(s));
    os.close();

    nlohmann::json meta{{"format", "LRHT"},
                        {"version", 1},
                        {"dim", traj.grid().dim},
                        {"points_per_axis", traj.grid().points},
                        {"box_length", traj.grid().box},
                        {"gamma", config.params.gamma},
                        {"kappa", config.params.kappa},
                        {"rho", config.params.rho},
                        {"eta", config.eta},
                        {"t_min", config.t_min},
                        {"T", config.T},
                        {"snapshots", traj.times.size()},
                        {"manifest_hash", manifest_hash}};
    std::ofstream js(path + ".json");
    js << meta.dump(2) << "\n";
}

Trajectory read_trajectory(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw ConfigError("read_trajectory: cannot open " + path);
    char m[4];
    is.read(m, 4);
    if (std::string(m, 4) != std::string(magic, 4))
        throw ConfigError("read_trajectory: bad magic");
    std::uint32_t version = get<std::uint32_t>(is);
    if (version != 1) throw ConfigError("read_trajectory: unsupported version");

    GridSpec g;
    g.dim = static_cast<int>(get<std::uint32_t>(is));
    g.points = static_cast<int>(get<std::uint32_t>(is));
    g.box = get<double>(is);
    g.validate();
    get<double>(is);   // gamma
    get<double>(is);   // kappa
    get<double>(is);   // rho
    get<double>(is);   // eta

    Trajectory traj;
    std::uint64_t count = get<std::uint64_t>(is);
    traj.times.resize(count);
    for (auto& t : traj.times) t = get<double>(is);
    traj.datum = get_field(is, g);
    traj.snaps.reserve(count);
    for (std::uint64_t k = 0; k < count; ++k) traj.snaps.push_back(get_field(is, g));
    if (!is) throw ConfigError("read_trajectory: truncated file");
    return traj;
}

} // namespace lrh
