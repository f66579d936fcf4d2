#include "ncrs/dlm_paths.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace ncrs {

State DlmPath::eval(double t, const State& vl, const State& vr) const {
  return {phi1(t, vl, vr), phi2(t, vl, vr)};
}

namespace {

// Central difference that never straddles a breakpoint or the ends of [0,1].
double fd_derivative(const PathComponentFn& f, const std::vector<double>& brk, double t,
                     const State& vl, const State& vr) {
  double lo = 0.0, hi = 1.0;
  for (double b : brk) {
    if (b <= t && b > lo) lo = b;
    if (b >= t && b < hi) hi = b;
  }
  double h = 1e-7;
  h = std::min(h, 0.45 * (hi - lo));
  if (h <= 0.0) h = 1e-9;
  double a = t - h, b = t + h;
  if (a < lo) {
    a = t;
    b = t + h;
  } else if (b > hi) {
    a = t - h;
    b = t;
  }
  return (f(b, vl, vr) - f(a, vl, vr)) / (b - a);
}

}  // namespace

double DlmPath::d1(double t, const State& vl, const State& vr) const {
  if (dphi1) return dphi1(t, vl, vr);
  return fd_derivative(phi1, breakpoints, t, vl, vr);
}

double DlmPath::d2(double t, const State& vl, const State& vr) const {
  if (dphi2) return dphi2(t, vl, vr);
  return fd_derivative(phi2, breakpoints, t, vl, vr);
}

std::vector<double> DlmPath::knots() const {
  std::vector<double> k;
  k.reserve(breakpoints.size() + 2);
  k.push_back(0.0);
  for (double b : breakpoints) k.push_back(b);
  k.push_back(1.0);
  return k;
}

const char* to_string(PathKind k) {
  switch (k) {
    case PathKind::StraightLine: return "straight-line";
    case PathKind::PhiExample: return "phi";
    case PathKind::PhiTildeExample: return "phi-tilde";
  }
  return "?";
}

DlmPath builtin_path(PathKind kind) {
  DlmPath p;
  p.name = to_string(kind);
  switch (kind) {
    case PathKind::StraightLine:
      p.phi1 = [](double t, const State& l, const State& r) { return l.u + t * (r.u - l.u); };
      p.phi2 = [](double t, const State& l, const State& r) {
        return l.sigma + t * (r.sigma - l.sigma);
      };
      p.dphi1 = [](double, const State& l, const State& r) { return r.u - l.u; };
      p.dphi2 = [](double, const State& l, const State& r) { return r.sigma - l.sigma; };
      break;
    case PathKind::PhiExample:
      // u ramps to u_R on [0,1/2] then stays; sigma is the straight line.
      p.phi1 = [](double t, const State& l, const State& r) {
        return t <= 0.5 ? l.u + 2.0 * t * (r.u - l.u) : r.u;
      };
      p.phi2 = [](double t, const State& l, const State& r) {
        return l.sigma + t * (r.sigma - l.sigma);
      };
      p.dphi1 = [](double t, const State& l, const State& r) {
        return t <= 0.5 ? 2.0 * (r.u - l.u) : 0.0;
      };
      p.dphi2 = [](double, const State& l, const State& r) { return r.sigma - l.sigma; };
      p.breakpoints = {0.5};
      break;
    case PathKind::PhiTildeExample:
      // u as above; sigma waits on [0,1/2] and ramps on [1/2,1].
      p.phi1 = [](double t, const State& l, const State& r) {
        return t <= 0.5 ? l.u + 2.0 * t * (r.u - l.u) : r.u;
      };
      p.phi2 = [](double t, const State& l, const State& r) {
        return t <= 0.5 ? l.sigma : l.sigma + (2.0 * t - 1.0) * (r.sigma - l.sigma);
      };
      p.dphi1 = [](double t, const State& l, const State& r) {
        return t <= 0.5 ? 2.0 * (r.u - l.u) : 0.0;
      };
      p.dphi2 = [](double t, const State& l, const State& r) {
        return t <= 0.5 ? 0.0 : 2.0 * (r.sigma - l.sigma);
      };
      p.breakpoints = {0.5};
      break;
  }
  return p;
}

namespace {

struct Polyline {
  std::vector<double> t, v;
  double eval(double s) const {
    auto it = std::upper_bound(t.begin(), t.end(), s);
    size_t i = it == t.begin() ? 0 : static_cast<size_t>(it - t.begin()) - 1;
    if (i + 1 >= t.size()) i = t.size() - 2;
    const double w = (s - t[i]) / (t[i + 1] - t[i]);
    return v[i] + w * (v[i + 1] - v[i]);
  }
  double slope(double s) const {
    auto it = std::upper_bound(t.begin(), t.end(), s);
    size_t i = it == t.begin() ? 0 : static_cast<size_t>(it - t.begin()) - 1;
    if (i + 1 >= t.size()) i = t.size() - 2;
    return (v[i + 1] - v[i]) / (t[i + 1] - t[i]);
  }
};

}  // namespace

DlmPath polyline_path(std::vector<double> t, std::vector<double> p1, std::vector<double> p2) {
  if (t.size() < 2 || t.size() != p1.size() || t.size() != p2.size())
    throw InvalidArgument("polyline path needs >= 2 rows of equal length");
  if (t.front() != 0.0 || t.back() != 1.0)
    throw InvalidArgument("polyline parameter must start at 0 and end at 1");
  for (size_t i = 0; i + 1 < t.size(); ++i)
    if (!(t[i] < t[i + 1])) throw InvalidArgument("polyline parameter must strictly increase");
  for (size_t i = 0; i < t.size(); ++i)
    if (!std::isfinite(t[i]) || !std::isfinite(p1[i]) || !std::isfinite(p2[i]))
      throw NonFiniteValue("polyline contains non-finite entries");

  // The sampled values are interpreted as the path for the sampled state pair
  // (first row = v_L, last row = v_R) and translated affinely for other
  // endpoint pairs so the endpoint axiom holds for every (v_L, v_R).
  auto shape = [](const Polyline& pl, double a, double b) {
    const double va = pl.v.front(), vb = pl.v.back();
    return [pl, va, vb, a, b](double s) {
      if (vb == va) return a + s * (b - a);
      const double w = (pl.eval(s) - va) / (vb - va);
      return a + w * (b - a);
    };
  };
  auto shape_slope = [](const Polyline& pl, double a, double b) {
    const double va = pl.v.front(), vb = pl.v.back();
    return [pl, va, vb, a, b](double s) {
      if (vb == va) return b - a;
      return pl.slope(s) / (vb - va) * (b - a);
    };
  };

  Polyline l1{t, std::move(p1)}, l2{t, std::move(p2)};
  DlmPath p;
  p.name = "polyline";
  p.phi1 = [l1, shape](double s, const State& vl, const State& vr) {
    return shape(l1, vl.u, vr.u)(s);
  };
  p.phi2 = [l2, shape](double s, const State& vl, const State& vr) {
    return shape(l2, vl.sigma, vr.sigma)(s);
  };
  p.dphi1 = [l1, shape_slope](double s, const State& vl, const State& vr) {
    return shape_slope(l1, vl.u, vr.u)(s);
  };
  p.dphi2 = [l2, shape_slope](double s, const State& vl, const State& vr) {
    return shape_slope(l2, vl.sigma, vr.sigma)(s);
  };
  p.breakpoints.assign(t.begin() + 1, t.end() - 1);
  return p;
}

DlmPath load_polyline_csv(std::istream& in) {
  std::vector<double> t, p1, p2;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream row(line);
    double a, b, c;
    if (!(row >> a >> b >> c)) {
      if (lineno == 1) continue;  // header row
      throw InvalidArgument("polyline CSV: bad row at line " + std::to_string(lineno));
    }
    t.push_back(a);
    p1.push_back(b);
    p2.push_back(c);
  }
  return polyline_path(std::move(t), std::move(p1), std::move(p2));
}

DlmPath load_polyline_csv(const std::string& filename) {
  std::ifstream in(filename);
  if (!in) throw InvalidArgument("cannot open polyline CSV: " + filename);
  return load_polyline_csv(in);
}

PathAxiomReport validate_axioms(const DlmPath& path,
                                std::span<const std::pair<State, State>> probes, double tol) {
  if (probes.empty()) throw InvalidArgument("validate_axioms needs at least one probe pair");
  if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");

  auto checked_eval = [&](double t, const State& vl, const State& vr) {
    const State v = path.eval(t, vl, vr);
    if (!v.finite()) throw NonFiniteValue("path component returned a non-finite value");
    return v;
  };

  double worst_endpoint = 0.0;
  for (const auto& [vl, vr] : probes) {
    const State a = checked_eval(0.0, vl, vr);
    const State b = checked_eval(1.0, vl, vr);
    worst_endpoint = std::max({worst_endpoint, std::abs(a.u - vl.u), std::abs(a.sigma - vl.sigma),
                               std::abs(b.u - vr.u), std::abs(b.sigma - vr.sigma)});
  }

  const std::vector<double> knots = path.knots();
  std::vector<double> samples;
  for (size_t i = 0; i + 1 < knots.size(); ++i)
    for (int j = 0; j <= 16; ++j)
      samples.push_back(knots[i] + (knots[i + 1] - knots[i]) * j / 16.0);

  double worst_consistency = 0.0;
  for (const auto& pr : probes) {
    for (const State& v : {pr.first, pr.second}) {
      for (double t : samples) {
        const State w = checked_eval(t, v, v);
        worst_consistency =
            std::max({worst_consistency, std::abs(w.u - v.u), std::abs(w.sigma - v.sigma)});
      }
    }
  }

  // Axiom 3, sampled: compare phi_t between probe pairs at piece midpoints.
  std::vector<double> mids;
  for (size_t i = 0; i + 1 < knots.size(); ++i)
    for (int j = 0; j < 8; ++j)
      mids.push_back(knots[i] + (knots[i + 1] - knots[i]) * (j + 0.5) / 8.0);

  double lip = 0.0;
  bool unbounded = false;
  for (size_t i = 0; i < probes.size(); ++i) {
    for (size_t j = i + 1; j < probes.size(); ++j) {
      const auto& [vl, vr] = probes[i];
      const auto& [wl, wr] = probes[j];
      const double d_u = (vl.u - wl.u) - (vr.u - wr.u);
      const double d_s = (vl.sigma - wl.sigma) - (vr.sigma - wr.sigma);
      const double den = std::hypot(d_u, d_s);
      for (double t : mids) {
        const double n1 = path.d1(t, vl, vr) - path.d1(t, wl, wr);
        const double n2 = path.d2(t, vl, vr) - path.d2(t, wl, wr);
        const double num = std::hypot(n1, n2);
        if (den > 1e-12)
          lip = std::max(lip, num / den);
        else if (num > tol)
          unbounded = true;
      }
    }
  }

  PathAxiomReport rep;
  rep.endpoints_ok = worst_endpoint <= tol;
  rep.consistency_ok = worst_consistency <= tol;
  rep.max_violation = std::max(worst_endpoint, worst_consistency);
  rep.lipschitz_estimate = unbounded ? std::numeric_limits<double>::infinity() : lip;
  rep.note = "axiom 3 estimated from sampled probe pairs only";
  return rep;
}

namespace {

double path_integral(const DlmPath& path, const State& vl, const State& vr,
                     const QuadratureSpec& spec,
                     const std::function<double(double)>& integrand) {
  ensure_valid(vl, "left state");
  ensure_valid(vr, "right state");
  const std::vector<double> knots = path.knots();
  const auto& rule = quad::gauss_legendre(spec.order);
  return quad::segments(integrand, knots, rule, std::max(1, spec.panels_per_piece));
}

}  // namespace

double path_coupling_integral(const DlmPath& path, const State& vl, const State& vr,
                              const QuadratureSpec& spec) {
  return path_integral(path, vl, vr, spec, [&](double t) {
    return path.phi1(t, vl, vr) * path.d2(t, vl, vr);
  });
}

double path_component_integral(const DlmPath& path, const State& vl, const State& vr,
                               PathComponent which, const QuadratureSpec& spec) {
  return path_integral(path, vl, vr, spec, [&](double t) {
    return which == PathComponent::Phi1 ? path.phi1(t, vl, vr) : path.phi2(t, vl, vr);
  });
}

}  // namespace ncrs
