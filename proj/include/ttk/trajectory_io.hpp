#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ttk/linalg.hpp"

namespace ttk {

// Binary trajectory layout (little endian):
//   "TTKD" | u32 version = 1 | u64 d | u64 m | m snapshots of d f64 each.
inline constexpr char kTrajectoryMagic[4] = {'T', 'T', 'K', 'D'};
inline constexpr std::uint32_t kTrajectoryVersion = 1;

void write_trajectory_binary(const std::string& path, const Matrix& data);
Matrix read_trajectory_binary(const std::string& path);

/// Header row of column names, one snapshot per row, 17 significant digits.
void write_trajectory_csv(const std::string& path, const Matrix& data, const std::vector<std::string>& names = {});
Matrix read_trajectory_csv(const std::string& path);

/// Dispatches on the extension: ".csv" is CSV, anything else binary.
void write_trajectory(const std::string& path, const Matrix& data);
Matrix read_trajectory(const std::string& path);

/// Rows of a matrix as CSV lines with 17 significant digits, no header.
void write_matrix_csv(const std::string& path, const Matrix& m);

} // namespace ttk
