#include "pierce/instance.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "pierce/error.hpp"

namespace pierce {

using nlohmann::json;

namespace {

[[noreturn]] void fail(ErrorCode code, const std::string& path, const std::string& what) {
  throw ParseError(code, path, 0, path.empty() ? what : path + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(ErrorCode::MissingField, path + "." + key, "missing field");
  return *it;
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(ErrorCode::WrongType, path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(ErrorCode::NonFinite, path, "non-finite number");
  return v;
}

Point point(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) fail(ErrorCode::WrongType, path, "expected [x, y]");
  return {number(j[0], path + "[0]"), number(j[1], path + "[1]")};
}

std::vector<Point> point_list(const json& j, const std::string& path) {
  if (!j.is_array()) fail(ErrorCode::WrongType, path, "expected an array of points");
  if (j.empty()) fail(ErrorCode::EmptyShape, path, "shape needs at least one vertex");
  std::vector<Point> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(point(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

ShapeRecord shape(const json& j, const std::string& path) {
  if (!j.is_object()) fail(ErrorCode::WrongType, path, "expected a shape object");
  const json& kind = field(j, "kind", path);
  if (!kind.is_string()) fail(ErrorCode::WrongType, path + ".kind", "expected a string");
  const std::string k = kind.get<std::string>();
  ShapeRecord s;
  if (k == "polygon") {
    s.kind = ShapeRecord::Kind::Polygon;
    s.points = point_list(field(j, "vertices", path), path + ".vertices");
  } else if (k == "points") {
    s.kind = ShapeRecord::Kind::Points;
    s.points = point_list(field(j, "points", path), path + ".points");
  } else if (k == "disk") {
    s.kind = ShapeRecord::Kind::Disk;
    s.center = point(field(j, "center", path), path + ".center");
    s.radius = number(field(j, "radius", path), path + ".radius");
    if (!(s.radius > 0.0)) fail(ErrorCode::BadRadius, path + ".radius", "radius must be positive");
  } else {
    fail(ErrorCode::UnknownShapeKind, path + ".kind", "unknown shape kind '" + k + "'");
  }
  return s;
}

int line_of_offset(std::string_view text, std::size_t offset) {
  int line = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) line += text[i] == '\n';
  return line;
}

json point_json(Point p) { return json::array({p.x, p.y}); }

}  // namespace

InstanceFile parse_instance(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const int line = line_of_offset(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(ErrorCode::MalformedJson, "", line,
                     "malformed JSON at line " + std::to_string(line) + ": " + e.what());
  } catch (const json::out_of_range& e) {
    // number overflow while lexing, e.g. 1e400
    throw ParseError(ErrorCode::NonFinite, "", 0, std::string("non-finite number: ") + e.what());
  }
  if (!root.is_object()) fail(ErrorCode::WrongType, "", "instance must be a JSON object");

  InstanceFile inst;
  const json& version = field(root, "version", "");
  if (!version.is_number_integer()) fail(ErrorCode::WrongType, ".version", "expected an integer");
  inst.version = version.get<int>();
  if (inst.version != kInstanceVersion) {
    fail(ErrorCode::UnsupportedVersion, ".version", "unsupported version " + std::to_string(inst.version));
  }

  const json& fams = field(root, "families", "");
  if (!fams.is_array()) fail(ErrorCode::WrongType, ".families", "expected an array");
  if (fams.empty()) fail(ErrorCode::NoFamilies, ".families", "at least one family is required");
  if (fams.size() > kMaxFamilies) {
    fail(ErrorCode::TooManyFamilies, ".families",
         std::to_string(fams.size()) + " families given, at most 6 supported");
  }
  for (std::size_t f = 0; f < fams.size(); ++f) {
    const std::string path = ".families[" + std::to_string(f) + "]";
    const json& fj = fams[f];
    if (!fj.is_object()) fail(ErrorCode::WrongType, path, "expected a family object");
    FamilyRecord fam;
    fam.name = "F" + std::to_string(f + 1);
    if (auto it = fj.find("name"); it != fj.end()) {
      if (!it->is_string()) fail(ErrorCode::WrongType, path + ".name", "expected a string");
      fam.name = it->get<std::string>();
    }
    const json& shapes = field(fj, "shapes", path);
    if (!shapes.is_array()) fail(ErrorCode::WrongType, path + ".shapes", "expected an array");
    for (std::size_t s = 0; s < shapes.size(); ++s) {
      fam.shapes.push_back(shape(shapes[s], path + ".shapes[" + std::to_string(s) + "]"));
    }
    inst.families.push_back(std::move(fam));
  }

  if (auto it = root.find("metadata"); it != root.end()) {
    if (!it->is_object()) fail(ErrorCode::WrongType, ".metadata", "expected an object");
    for (const auto& [key, value] : it->items()) {
      if (!value.is_string()) fail(ErrorCode::WrongType, ".metadata." + key, "expected a string");
      inst.metadata[key] = value.get<std::string>();
    }
  }
  return inst;
}

std::string serialize_instance(const InstanceFile& instance) {
  json root;
  root["version"] = instance.version;
  json fams = json::array();
  for (const FamilyRecord& fam : instance.families) {
    json shapes = json::array();
    for (const ShapeRecord& s : fam.shapes) {
      json sj;
      switch (s.kind) {
        case ShapeRecord::Kind::Polygon:
          sj["kind"] = "polygon";
          sj["vertices"] = json::array();
          for (const Point& p : s.points) sj["vertices"].push_back(point_json(p));
          break;
        case ShapeRecord::Kind::Points:
          sj["kind"] = "points";
          sj["points"] = json::array();
          for (const Point& p : s.points) sj["points"].push_back(point_json(p));
          break;
        case ShapeRecord::Kind::Disk:
          sj["kind"] = "disk";
          sj["center"] = point_json(s.center);
          sj["radius"] = s.radius;
          break;
      }
      shapes.push_back(std::move(sj));
    }
    fams.push_back({{"name", fam.name}, {"shapes", std::move(shapes)}});
  }
  root["families"] = std::move(fams);
  root["metadata"] = json::object();
  for (const auto& [k, v] : instance.metadata) root["metadata"][k] = v;
  return root.dump(2) + "\n";
}

ConvexBody to_body(const ShapeRecord& shape) {
  if (shape.kind == ShapeRecord::Kind::Disk) {
    const double r = shape.radius * 0.5 * (1.0 + 1.0 / std::cos(std::numbers::pi / kDiskSides));
    const auto v = regular_polygon(shape.center, r, kDiskSides);
    return convex_hull(v);
  }
  return convex_hull(shape.points);
}

Families to_families(const InstanceFile& instance) {
  Families out;
  for (const FamilyRecord& fam : instance.families) {
    Family bodies;
    for (const ShapeRecord& s : fam.shapes) bodies.push_back(to_body(s));
    out.push_back(std::move(bodies));
  }
  return out;
}

ShapeRecord polygon_record(const ConvexBody& body) {
  ShapeRecord s;
  s.kind = ShapeRecord::Kind::Polygon;
  s.points.assign(body.vertices().begin(), body.vertices().end());
  return s;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  out << text;
}

}  // namespace pierce
