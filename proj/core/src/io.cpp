#include "centroflow/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace centroflow {

namespace {

using nlohmann::json;

}  // namespace

PolygonDocument parse_polygon_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    raise(ErrorCode::InvalidDocument, std::string("JSON parse failure: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dimension") || !doc.contains("vertices"))
    raise(ErrorCode::InvalidDocument, "expected {dimension, closed, vertices}");

  if (!doc["dimension"].is_number_integer())
    raise(ErrorCode::InvalidDocument, "dimension must be an integer");
  const int dim = doc["dimension"].get<int>();
  if (dim != 2 && dim != 3)
    raise(ErrorCode::InvalidDocument, "dimension must be 2 or 3");
  if (doc.contains("closed") && !doc["closed"].is_boolean())
    raise(ErrorCode::InvalidDocument, "closed must be a boolean");
  const bool closed = doc.value("closed", true);
  if (doc.contains("label") && !doc["label"].is_string())
    raise(ErrorCode::InvalidDocument, "label must be a string");

  const auto& verts = doc["vertices"];
  if (!verts.is_array())
    raise(ErrorCode::InvalidDocument, "vertices must be an array");

  std::vector<Vec3> pts;
  pts.reserve(verts.size());
  int index = 0;
  for (const auto& v : verts) {
    if (!v.is_array() || static_cast<int>(v.size()) != dim)
      raise(ErrorCode::InvalidDocument, "vertex arity must match dimension", index);
    Vec3 p = Vec3::Zero();
    for (int j = 0; j < dim; ++j) {
      if (!v[j].is_number())
        raise(ErrorCode::InvalidDocument, "vertex coordinate must be a number", index);
      p[j] = v[j].get<double>();
      if (!std::isfinite(p[j]))
        raise(ErrorCode::InvalidDocument, "vertex coordinate must be finite", index);
    }
    pts.push_back(p);
    ++index;
  }

  const int min_count = closed ? 3 : 4;
  if (static_cast<int>(pts.size()) < min_count)
    raise(ErrorCode::InvalidDocument,
          "too few vertices (need >= 3 closed, >= 4 open)");

  PolygonDocument out{Polygon(dim, std::move(pts), closed),
                      doc.value("label", std::string{})};
  return out;
}

PolygonDocument load_polygon(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::InvalidDocument, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_polygon_json(buffer.str());
}

std::string emit_polygon_json(const PolygonDocument& doc) {
  json out;
  out["dimension"] = doc.polygon.dimension();
  out["closed"] = doc.polygon.closed();
  json verts = json::array();
  for (int i = 0; i < doc.polygon.size(); ++i) {
    json v = json::array();
    for (int j = 0; j < doc.polygon.dimension(); ++j)
      v.push_back(doc.polygon.vertex(i)[j]);
    verts.push_back(std::move(v));
  }
  out["vertices"] = std::move(verts);
  if (!doc.label.empty()) out["label"] = doc.label;
  return out.dump(2) + "\n";
}

void save_polygon(const std::string& path, const PolygonDocument& doc) {
  std::ofstream out(path);
  if (!out) raise(ErrorCode::InvalidDocument, "cannot write " + path);
  out << emit_polygon_json(doc);
}

void write_signature_csv(std::ostream& out, const Signature& signature) {
  out << "vertex,kappa,kappa_bar,tau\n";
  char line[160];
  for (int i = 0; i < signature.size(); ++i) {
    const auto& v = signature.entries[i];
    std::snprintf(line, sizeof line, "%d,%.17g,%.17g,%.17g\n",
                  i + signature.offset, v.kappa, v.kappa_bar, v.tau);
    out << line;
  }
}

std::string format_signature_table(const Signature& signature) {
  std::string out = "vertex      kappa   kappa_bar         tau\n";
  char line[160];
  for (int i = 0; i < signature.size(); ++i) {
    const auto& v = signature.entries[i];
    std::snprintf(line, sizeof line, "%6d %10.4f %11.4f %11.4f\n",
                  i + signature.offset, v.kappa, v.kappa_bar, v.tau);
    out += line;
  }
  return out;
}

std::string render_polygon_svg(const Polygon& polygon, int size_px) {
  // 3D: drop the axis of least variance.
  int ax = 0, ay = 1;
  std::string note;
  if (polygon.dimension() == 3) {
    Vec3 mean = Vec3::Zero();
    for (int i = 0; i < polygon.size(); ++i) mean += polygon.vertex(i);
    mean /= polygon.size();
    Vec3 var = Vec3::Zero();
    for (int i = 0; i < polygon.size(); ++i)
      var += (polygon.vertex(i) - mean).cwiseAbs2();
    int drop = 0;
    var.minCoeff(&drop);
    ax = drop == 0 ? 1 : 0;
    ay = drop == 2 ? 1 : 2;
    note = "<!-- projection: dropped axis " + std::to_string(drop) +
           " (least variance) -->\n";
  }

  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (int i = 0; i < polygon.size(); ++i) {
    const Vec3& v = polygon.vertex(i);
    xmin = std::min(xmin, v[ax]);
    xmax = std::max(xmax, v[ax]);
    ymin = std::min(ymin, v[ay]);
    ymax = std::max(ymax, v[ay]);
  }
  const double span = std::max({xmax - xmin, ymax - ymin, 1e-12});
  const double pad = 0.05 * span;
  const double scale = size_px / (span + 2 * pad);

  std::string pts;
  char buf[96];
  const int count = polygon.size() + (polygon.closed() ? 1 : 0);
  for (int i = 0; i < count; ++i) {
    const Vec3& v = polygon.vertex(i % polygon.size());
    const double x = (v[ax] - xmin + pad) * scale;
    const double y = size_px - (v[ay] - ymin + pad) * scale;  // y-up
    std::snprintf(buf, sizeof buf, "%.3f,%.3f ", x, y);
    pts += buf;
  }
  if (!pts.empty()) pts.pop_back();

  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                    std::to_string(size_px) + "\" height=\"" +
                    std::to_string(size_px) + "\">\n" + note +
                    "<polyline fill=\"none\" stroke=\"#1f4e79\" stroke-width=\"1.5\" points=\"" +
                    pts + "\"/>\n</svg>\n";
  return svg;
}

}  // namespace centroflow
