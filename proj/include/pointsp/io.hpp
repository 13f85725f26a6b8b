// Copyright 2026 The pointsp Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef POINTSP_IO_HPP
#define POINTSP_IO_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "pointsp/cloud.hpp"
#include "pointsp/corruption.hpp"

namespace pointsp {

enum class CloudFormat { xyz, ply_ascii };

CloudFormat cloud_format_from_string(const std::string& name);

/// Reads a point cloud. xyz: whitespace-separated rows of 3 floats (points)
/// or 6 floats (points + normals), consistent across the file. ply_ascii:
/// ASCII PLY with x,y,z and optional nx,ny,nz vertex properties. Row order
/// becomes index order. Normals are re-normalized on load; a deviation from
/// unit length beyond 1e-3 prints a warning to stderr.
PointCloud load_cloud(const std::filesystem::path& path, CloudFormat format);

/// Inverse of load_cloud; coordinates written with 9 significant digits.
/// Saving an empty cloud is rejected.
void save_cloud(const PointCloud& cloud, const std::filesystem::path& path, CloudFormat format);

/// One value per line, same order as the cloud.
void save_column(const std::vector<double>& values, const std::filesystem::path& path);
void save_indices(const std::vector<int>& indices, const std::filesystem::path& path);
std::vector<int> load_indices(const std::filesystem::path& path);

/// Fixture manifest: one corruption spec per line, "family severity seed".
/// Blank lines and lines starting with '#' are skipped.
std::vector<CorruptionSpec> load_corruption_manifest(const std::filesystem::path& path);

} // namespace pointsp

#endif // POINTSP_IO_HPP
