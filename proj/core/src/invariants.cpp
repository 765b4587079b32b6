#include "centroflow/invariants.hpp"

#include <algorithm>
#include <cmath>

namespace centroflow {

const VertexInvariants& Signature::at_vertex(int k) const {
  if (cyclic) return entries[wrap_index(k - offset, size())];
  const int i = k - offset;
  if (i < 0 || i >= size())
    raise(ErrorCode::InvalidArgument, "no invariant at vertex", k);
  return entries[i];
}

const VertexInvariants& Signature::entry(int i) const {
  if (cyclic) return entries[wrap_index(i, size())];
  if (i < 0 || i >= size())
    raise(ErrorCode::InvalidArgument, "signature entry out of range");
  return entries[i];
}

std::vector<double> Signature::kappas() const {
  std::vector<double> out(entries.size());
  std::transform(entries.begin(), entries.end(), out.begin(),
                 [](const VertexInvariants& v) { return v.kappa; });
  return out;
}

std::vector<double> Signature::kappa_bars() const {
  std::vector<double> out(entries.size());
  std::transform(entries.begin(), entries.end(), out.begin(),
                 [](const VertexInvariants& v) { return v.kappa_bar; });
  return out;
}

std::vector<double> Signature::taus() const {
  std::vector<double> out(entries.size());
  std::transform(entries.begin(), entries.end(), out.begin(),
                 [](const VertexInvariants& v) { return v.tau; });
  return out;
}

Signature compute_signature(const Polygon& polygon, const Tolerances& tol) {
  const int n = polygon.size();
  if (!polygon.closed() && n < 4)
    raise(ErrorCode::TooFewVertices, "open polygon needs >= 4 vertices");

  const double threshold = tol.degeneracy(polygon.coordinate_scale());

  Signature sig;
  sig.cyclic = polygon.closed();
  sig.offset = polygon.closed() ? 0 : 1;
  const int first = sig.offset;
  const int last = polygon.closed() ? n - 1 : n - 3;
  sig.entries.reserve(last - first + 1);

  for (int k = first; k <= last; ++k) {
    VertexInvariants inv;
    if (polygon.dimension() == 2) {
      const Vec2 tm1 = polygon.edge2(k - 1);
      const Vec2 t0 = polygon.edge2(k);
      const Vec2 t1 = polygon.edge2(k + 1);
      const double denom = det2(tm1, t0);
      if (std::abs(denom) < threshold)
        raise(ErrorCode::DegenerateDeterminant,
              "[t_{k-1}, t_k] below degeneracy tolerance", k);
      inv.kappa = det2(t0, t1) / denom;
      inv.kappa_bar = det2(tm1, t1) / denom;
      inv.tau = 0.0;
    } else {
      const Vec3& rm1 = polygon.vertex(k - 1);
      const Vec3& r0 = polygon.vertex(k);
      const Vec3& r1 = polygon.vertex(k + 1);
      const Vec3& r2 = polygon.vertex(k + 2);
      const double denom = det3(rm1, r0, r1);
      if (std::abs(denom) < threshold)
        raise(ErrorCode::DegenerateDeterminant,
              "[r_{k-1}, r_k, r_{k+1}] below degeneracy tolerance", k);
      inv.kappa = det3(r0, r1, r2) / denom;
      inv.kappa_bar = det3(r1, r0 - rm1, r2) / denom;
      inv.tau = det3(r0 - rm1, r1 - r0, r2 - r1) / denom;
    }
    sig.entries.push_back(inv);
  }
  return sig;
}

bool is_planar(const Signature& signature, const Tolerances& tol) {
  return std::all_of(signature.entries.begin(), signature.entries.end(),
                     [&](const VertexInvariants& v) {
                       return std::abs(v.tau) < tol.planarity;
                     });
}

double signature_max_difference(const Signature& a, const Signature& b) {
  return signature_max_difference_shifted(a, b, 0);
}

double signature_max_difference_shifted(const Signature& a, const Signature& b,
                                        int shift) {
  if (a.size() != b.size())
    raise(ErrorCode::SizeMismatch, "signature entry counts differ");
  const int n = a.size();
  double d = 0.0;
  for (int i = 0; i < n; ++i) {
    const VertexInvariants& x = a.entries[wrap_index(i + shift, n)];
    const VertexInvariants& y = b.entries[i];
    d = std::max(d, std::abs(x.kappa - y.kappa));
    d = std::max(d, std::abs(x.kappa_bar - y.kappa_bar));
    d = std::max(d, std::abs(x.tau - y.tau));
  }
  return d;
}

double max_abs_entry(const Signature& signature) {
  double m = 0.0;
  for (const auto& v : signature.entries) {
    m = std::max({m, std::abs(v.kappa), std::abs(v.kappa_bar), std::abs(v.tau)});
  }
  return m;
}

}  // namespace centroflow
