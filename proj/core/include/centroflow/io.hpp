#pragma once

#include <iosfwd>
#include <string>

#include "centroflow/invariants.hpp"
#include "centroflow/polygon.hpp"

namespace centroflow {

/// JSON polygon document:
///   {"dimension": 2|3, "closed": bool, "vertices": [[x,y(,z)], ...],
///    "label": optional string}
/// Parsing rejects NaN/Inf coordinates, arity mismatches and vertex counts
/// below the minimum (3 closed, 4 open).
struct PolygonDocument {
  Polygon polygon;
  std::string label;
};

PolygonDocument parse_polygon_json(const std::string& text);
PolygonDocument load_polygon(const std::string& path);

/// Emits JSON that parses back bit-exactly for finite doubles.
std::string emit_polygon_json(const PolygonDocument& doc);
void save_polygon(const std::string& path, const PolygonDocument& doc);

/// CSV with header "vertex,kappa,kappa_bar,tau", full precision. The vertex
/// column carries the global vertex index (signature offset included).
void write_signature_csv(std::ostream& out, const Signature& signature);

/// Fixed 4-decimal table for terminal display.
std::string format_signature_table(const Signature& signature);

/// SVG polyline snapshot. 3D polygons are projected by dropping the axis of
/// least variance; the choice is recorded in an annotation comment.
std::string render_polygon_svg(const Polygon& polygon, int size_px = 480);

}  // namespace centroflow
