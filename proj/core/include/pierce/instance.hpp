#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pierce/geometry.hpp"

namespace pierce {

inline constexpr int kInstanceVersion = 1;
inline constexpr std::size_t kMaxFamilies = 6;
inline constexpr int kDiskSides = 64;

struct ShapeRecord {
  enum class Kind { Polygon, Disk, Points };

  Kind kind = Kind::Polygon;
  std::vector<Point> points;  // polygon vertices or point cloud
  Point center;               // disk
  double radius = 0.0;        // disk

  friend bool operator==(const ShapeRecord&, const ShapeRecord&) = default;
};

struct FamilyRecord {
  std::string name;
  std::vector<ShapeRecord> shapes;

  friend bool operator==(const FamilyRecord&, const FamilyRecord&) = default;
};

/// Instance wire format (JSON):
///
///   {
///     "version": 1,
///     "families": [
///       {"name": "F1", "shapes": [
///         {"kind": "polygon", "vertices": [[x, y], ...]},
///         {"kind": "disk", "center": [x, y], "radius": r},
///         {"kind": "points", "points": [[x, y], ...]}
///       ]}
///     ],
///     "metadata": {"key": "value"}
///   }
struct InstanceFile {
  int version = kInstanceVersion;
  std::vector<FamilyRecord> families;
  std::map<std::string, std::string> metadata;

  friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

/// Throws ParseError with a distinct ErrorCode per failure class.
InstanceFile parse_instance(std::string_view text);
std::string serialize_instance(const InstanceFile& instance);

/// Polygons and point clouds become their hulls; disks become a regular
/// 64-gon at the mean of the inscribed and circumscribed radii.
ConvexBody to_body(const ShapeRecord& shape);
Families to_families(const InstanceFile& instance);

ShapeRecord polygon_record(const ConvexBody& body);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace pierce
