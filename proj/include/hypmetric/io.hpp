#pragma once

// File formats:
//   point cloud CSV     header `x0,x1,...`, one point per row
//   distance matrix CSV n rows of n values, no header
//   region file         one point index per line
//   path CSV            rows `t,x,y` (an optional `t,x,y` header is skipped)

#include <filesystem>
#include <ostream>
#include <string>
#include <string_view>

#include "hypmetric/metric_space.hpp"
#include "hypmetric/quasigeodesic.hpp"

namespace hypmetric {

PointCloud parse_point_csv(std::string_view text, MetricMode mode = MetricMode::euclidean);
DistanceMatrix parse_distance_csv(std::string_view text);
Region parse_region(std::string_view text, std::size_t universe);
SampledPath parse_path_csv(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);

PointCloud read_point_csv(const std::filesystem::path& path,
                          MetricMode mode = MetricMode::euclidean);
DistanceMatrix read_distance_csv(const std::filesystem::path& path);
Region read_region_file(const std::filesystem::path& path, std::size_t universe);
SampledPath read_path_csv(const std::filesystem::path& path);

void write_distance_csv(std::ostream& out, const FiniteMetricSpace& space);

}  // namespace hypmetric
