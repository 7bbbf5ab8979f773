#include "ttk/trajectory_io.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "ttk/error.hpp"

namespace ttk {

namespace {

static_assert(std::endian::native == std::endian::little, "trajectory I/O assumes a little-endian host");

template <class T>
void put(std::ostream& out, T v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
T get(std::istream& in, const std::string& path) {
    T v{};
    if (!in.read(reinterpret_cast<char*>(&v), sizeof(T))) throw IoError("truncated trajectory file '" + path + "'");
    return v;
}

bool has_csv_extension(const std::string& path) {
    return path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

} // namespace

void write_trajectory_binary(const std::string& path, const Matrix& data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write trajectory '" + path + "'");
    out.write(kTrajectoryMagic, 4);
    put<std::uint32_t>(out, kTrajectoryVersion);
    put<std::uint64_t>(out, static_cast<std::uint64_t>(data.rows()));
    put<std::uint64_t>(out, static_cast<std::uint64_t>(data.cols()));
    // Column-major storage is already snapshot-contiguous.
    out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size() * sizeof(double)));
    if (!out) throw IoError("failed writing trajectory '" + path + "'");
}

Matrix read_trajectory_binary(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open trajectory '" + path + "'");
    char magic[4];
    if (!in.read(magic, 4) || std::memcmp(magic, kTrajectoryMagic, 4) != 0)
        throw IoError("'" + path + "' is not a TTKD trajectory file");
    const auto version = get<std::uint32_t>(in, path);
    if (version != kTrajectoryVersion)
        throw IoError("unsupported trajectory version " + std::to_string(version) + " in '" + path + "'");
    const auto d = get<std::uint64_t>(in, path);
    const auto m = get<std::uint64_t>(in, path);
    if (d == 0 || d > (1u << 20) || m > (std::uint64_t{1} << 40) / d)
        throw IoError("implausible trajectory shape in '" + path + "'");
    Matrix data(static_cast<Index>(d), static_cast<Index>(m));
    if (!in.read(reinterpret_cast<char*>(data.data()), static_cast<std::streamsize>(data.size() * sizeof(double))))
        throw IoError("truncated trajectory file '" + path + "'");
    return data;
}

void write_trajectory_csv(const std::string& path, const Matrix& data, const std::vector<std::string>& names) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw IoError("cannot write trajectory '" + path + "'");
    for (Index i = 0; i < data.rows(); ++i) {
        if (i > 0) out << ',';
        out << (static_cast<std::size_t>(i) < names.size() ? names[static_cast<std::size_t>(i)]
                                                            : "x" + std::to_string(i + 1));
    }
    out << '\n' << std::setprecision(17);
    for (Index t = 0; t < data.cols(); ++t) {
        for (Index i = 0; i < data.rows(); ++i) {
            if (i > 0) out << ',';
            out << data(i, t);
        }
        out << '\n';
    }
    if (!out) throw IoError("failed writing trajectory '" + path + "'");
}

Matrix read_trajectory_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open trajectory '" + path + "'");
    std::string line;
    if (!std::getline(in, line)) throw IoError("empty trajectory file '" + path + "'");
    const std::size_t d = split(line).size();
    if (d == 0) throw IoError("trajectory '" + path + "' has no columns");
    std::vector<double> values;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto cells = split(line);
        if (cells.size() != d)
            throw IoError("'" + path + "' line " + std::to_string(row) + ": expected " + std::to_string(d) + " values");
        for (const auto& c : cells) {
            char* end = nullptr;
            const double v = std::strtod(c.c_str(), &end);
            if (end == c.c_str()) throw IoError("'" + path + "' line " + std::to_string(row) + ": bad number '" + c + "'");
            values.push_back(v);
        }
    }
    const auto m = static_cast<Index>(values.size() / d);
    return Eigen::Map<const Matrix>(values.data(), static_cast<Index>(d), m);
}

void write_trajectory(const std::string& path, const Matrix& data) {
    if (has_csv_extension(path))
        write_trajectory_csv(path, data);
    else
        write_trajectory_binary(path, data);
}

Matrix read_trajectory(const std::string& path) {
    return has_csv_extension(path) ? read_trajectory_csv(path) : read_trajectory_binary(path);
}

void write_matrix_csv(const std::string& path, const Matrix& m) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << std::setprecision(17);
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) {
            if (j > 0) out << ',';
            out << m(i, j);
        }
        out << '\n';
    }
    if (!out) throw IoError("failed writing '" + path + "'");
}

} // namespace ttk
