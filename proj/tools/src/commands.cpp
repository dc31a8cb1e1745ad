// SPDX-License-Identifier: Apache-2.0
#include "commands.hpp"

#include <algorithm>
#include <ostream>

#include "latwidth/corpus.hpp"
#include "latwidth/decomposition.hpp"
#include "latwidth/exact_linalg.hpp"
#include "latwidth/oracle.hpp"
#include "latwidth/simplex_opt.hpp"
#include "latwidth/width.hpp"
#include "latwidth_cli/cli.hpp"
#include "report.hpp"

namespace latwidth::cli {

namespace {

template <typename T>
const T& require(const InstanceFile& inst, const char* command, const char* expected) {
  if (const T* body = std::get_if<T>(&inst.body)) return *body;
  throw InputError(std::string(command) + " expects a " + expected + " instance, got " +
                   kind_name(inst.kind()));
}

HSimplex as_h(const InstanceFile& inst, const char* command) {
  if (auto h = std::get_if<HSimplex>(&inst.body)) return *h;
  if (auto v = std::get_if<VSimplex>(&inst.body)) return corpus::to_h_form(*v);
  throw InputError(std::string(command) + " expects an H or V instance, got " +
                   kind_name(inst.kind()));
}

VSimplex as_v(const InstanceFile& inst, const char* command) {
  if (auto v = std::get_if<VSimplex>(&inst.body)) return *v;
  if (auto h = std::get_if<HSimplex>(&inst.body)) {
    const auto& verts = h->vertices();
    IntMatrix m(h->dim(), verts.size());
    for (std::size_t j = 0; j < verts.size(); ++j) {
      for (std::size_t i = 0; i < h->dim(); ++i) {
        if (verts[j][i].get_den() != 1)
          throw InputError(std::string(command) + " needs integer vertices; vertex " +
                           std::to_string(j) + " is fractional");
        m(i, j) = verts[j][i].get_num();
      }
    }
    return VSimplex(m);
  }
  throw InputError(std::string(command) + " expects a V or H instance, got " +
                   kind_name(inst.kind()));
}

const IntVector& require_objective(const InstanceFile& inst, const char* command) {
  if (!inst.objective) throw InputError(std::string(command) + " needs an OBJ row");
  return *inst.objective;
}

Integer radius_or(const Flags& f, long fallback) {
  long r = f.oracle_radius.value_or(fallback);
  if (r < 0) throw InputError("--oracle-radius must be non-negative");
  return Integer(r);
}

void emit(const Flags& f, Output o, const Json& record, const std::string& plain) {
  if (f.json)
    o.out << record.dump(2) << '\n';
  else
    o.out << plain;
}

Rational max_coefficient(const UnimodularDecomposition& d) {
  Rational best = 0;
  for (const auto& piece : d.pieces)
    for (std::size_t i = 0; i < piece.coeffs.rows(); ++i)
      for (std::size_t j = 0; j < piece.coeffs.cols(); ++j)
        best = std::max<Rational>(best, abs(piece.coeffs(i, j)));
  return best;
}

Integer ipow(const Integer& base, std::size_t e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// ---- algorithm runs, shared by the plain commands and verify ----

struct WidthRun {
  WidthResult result;
  std::optional<Integer> delta;  // δ_n(A) in lattice-free mode
};

WidthRun run_width(const HSimplex& s, bool lattice_free) {
  if (!lattice_free) return {width(s), std::nullopt};
  Integer delta = minor_stats(s.a(), s.dim()).min_abs_nonzero;
  return {width_lattice_free(s), delta};
}

Json width_json(const WidthRun& w) {
  Json j;
  j["width"] = num(w.result.width);
  j["direction"] = vec(w.result.direction);
  j["v_index"] = num(w.result.v_index);
  j["u_index"] = num(w.result.u_index);
  j["v"] = vec(w.result.v);
  j["u"] = vec(w.result.u);
  if (w.delta) j["delta"] = num(*w.delta);
  return j;
}

std::string width_text(const WidthRun& w) {
  std::string s = "width = " + w.result.width.get_str() +
                  ", direction = " + text(w.result.direction) + "\n";
  s += "achieved between vertex " + std::to_string(w.result.v_index) + " " + text(w.result.v) +
       " and vertex " + std::to_string(w.result.u_index) + " " + text(w.result.u) + "\n";
  if (w.delta) s += "delta = " + w.delta->get_str() + "\n";
  return s;
}

Json optimum_json(const std::optional<IntVector>& point, const std::optional<Integer>& value) {
  Json j;
  j["status"] = point ? "feasible" : "infeasible";
  j["point"] = point ? vec(*point) : Json(nullptr);
  j["value"] = value ? num(*value) : Json(nullptr);
  return j;
}

std::string optimum_text(const std::optional<IntVector>& point,
                         const std::optional<Integer>& value, const char* none) {
  if (!point) return std::string("status: ") + none + "\n";
  std::string s = "status: feasible\npoint = " + text(*point) + "\n";
  if (value) s += "value = " + value->get_str() + "\n";
  return s;
}

}  // namespace

int cmd_decompose(const InstanceFile& inst, const Flags& f, Output o) {
  const Cone& cone = require<Cone>(inst, "decompose", "CONE");
  const IntMatrix& a = cone.generators();
  const std::size_t n = cone.dim();
  UnimodularDecomposition d = decompose(a);
  const Integer delta = abs(det(a));
  const Rational max_t = max_coefficient(d);

  // 2^depth <= Δ² gives depth <= 2·log2 Δ, and count <= n^depth then bounds the count.
  const bool depth_ok = ipow(2, d.steps) <= delta * delta;
  const bool count_ok = Integer(static_cast<unsigned long>(d.pieces.size())) <=
                        ipow(Integer(static_cast<unsigned long>(n)), d.steps);
  const bool coeff_ok = max_t <= Rational(delta * delta);
  bool unimodular = true;
  for (const auto& p : d.pieces) unimodular = unimodular && abs(det(p.gen)) == 1;

  Json j;
  j["command"] = "decompose";
  j["dimension"] = num(n);
  j["determinant"] = num(delta);
  j["depth"] = num(d.steps);
  j["piece_count"] = num(d.pieces.size());
  j["max_coefficient"] = num(max_t);
  j["bounds"] = {{"depth", depth_ok}, {"piece_count", count_ok}, {"coefficients", coeff_ok},
                 {"unimodular", unimodular}};
  j["pieces"] = Json::array();
  std::string plain = "cone of dimension " + std::to_string(n) + ", |det| = " +
                      delta.get_str() + "\n";
  plain += "pieces: " + std::to_string(d.pieces.size()) + ", depth " +
           std::to_string(d.steps) + ", max coefficient " + max_t.get_str() + "\n";
  plain += std::string("bounds: ") +
           (depth_ok && count_ok && coeff_ok && unimodular ? "ok" : "VIOLATED") + "\n";
  for (std::size_t i = 0; i < d.pieces.size(); ++i) {
    const auto& p = d.pieces[i];
    j["pieces"].push_back({{"generators", columns(p.gen)},
                           {"determinant", num(det(p.gen))},
                           {"depth", num(p.depth)},
                           {"coefficients", rows(p.coeffs)}});
    plain += "piece " + std::to_string(i) + ":";
    for (std::size_t c = 0; c < n; ++c) plain += " " + text(p.gen.column(c));
    plain += "\n";
  }
  emit(f, o, j, plain);
  return depth_ok && count_ok && coeff_ok && unimodular ? kOk : kInternalError;
}

int cmd_width(const InstanceFile& inst, const Flags& f, Output o) {
  HSimplex s = as_h(inst, "width");
  WidthRun w = run_width(s, f.lattice_free);
  Json j{{"command", "width"}, {"mode", f.lattice_free ? "lattice-free" : "exact"}};
  j.update(width_json(w));
  emit(f, o, j, width_text(w));
  return kOk;
}

int cmd_cone_ip(const InstanceFile& inst, const Flags& f, Output o) {
  const auto& ip = require<ConeIpInstance>(inst, "cone-ip", "CONEIP");
  ConeIpResult r = solve(ip);
  std::optional<IntVector> point;
  if (r.feasible) point = r.point;
  Json j{{"command", "cone-ip"}};
  j.update(optimum_json(point, r.value));
  emit(f, o, j, optimum_text(point, r.value, "infeasible"));
  return r.feasible ? kOk : kNone;
}

int cmd_opt_punctured(const InstanceFile& inst, const Flags& f, Output o) {
  VSimplex s = as_v(inst, "opt-punctured");
  const IntVector& c = require_objective(inst, "opt-punctured");
  auto r = optimize_punctured({s, c});
  Json j{{"command", "opt-punctured"}};
  if (r) {
    j.update(optimum_json(r->point, r->value));
    j["alpha"] = num(r->alpha);
  } else {
    j.update(optimum_json(std::nullopt, std::nullopt));
    j["status"] = "none";
  }
  std::string plain = optimum_text(r ? std::optional(r->point) : std::nullopt,
                                   r ? std::optional(r->value) : std::nullopt,
                                   "none (no integer point besides the vertices)");
  if (r) plain += "alpha = " + r->alpha.get_str() + "\n";
  emit(f, o, j, plain);
  return r ? kOk : kNone;
}

int cmd_oracle(const std::string& sub, const InstanceFile& inst, const Flags& f, Output o) {
  Json j{{"command", "oracle"}, {"oracle", sub}};
  if (sub == "points") {
    std::vector<IntVector> pts;
    if (auto v = std::get_if<VSimplex>(&inst.body)) {
      pts = oracle::enum_lattice_points(
          [&](const IntVector& x) { return oracle::in_simplex(*v, x); },
          oracle::simplex_box(*v), f.budget);
    } else {
      pts = oracle::lattice_points(as_h(inst, "oracle points"), f.budget);
    }
    j["count"] = num(pts.size());
    j["points"] = Json::array();
    std::string plain = "lattice points: " + std::to_string(pts.size()) + "\n";
    for (const auto& p : pts) {
      j["points"].push_back(vec(p));
      plain += text(p) + "\n";
    }
    emit(f, o, j, plain);
    return pts.empty() ? kNone : kOk;
  }
  if (sub == "width") {
    HSimplex s = as_h(inst, "oracle width");
    auto w = oracle::brute_width(s, radius_or(f, 10), f.budget);
    j["width"] = num(w.value);
    j["direction"] = vec(w.direction);
    j["radius"] = num(w.radius);
    emit(f, o, j,
         "width = " + w.value.get_str() + ", direction = " + text(w.direction) +
             " (directions up to radius " + w.radius.get_str() + ")\n");
    return kOk;
  }
  if (sub == "cone-ip") {
    const auto& ip = require<ConeIpInstance>(inst, "oracle cone-ip", "CONEIP");
    ip.validate();
    Integer radius = radius_or(f, 30);
    auto r = oracle::brute_cone_ip(ip, radius, f.budget);
    std::optional<IntVector> point;
    std::optional<Integer> value;
    if (r) {
      point = r->point;
      if (ip.objective) value = r->value;
    }
    j.update(optimum_json(point, value));
    j["radius"] = num(radius);
    emit(f, o, j, optimum_text(point, value, "infeasible (within the oracle box)"));
    return r ? kOk : kNone;
  }
  if (sub == "punctured") {
    VSimplex s = as_v(inst, "oracle punctured");
    auto r = oracle::brute_punctured(s, require_objective(inst, "oracle punctured"), f.budget);
    std::optional<IntVector> point;
    std::optional<Integer> value;
    if (r) {
      point = r->point;
      value = r->value;
    }
    j.update(optimum_json(point, value));
    if (!r) j["status"] = "none";
    emit(f, o, j, optimum_text(point, value, "none"));
    return r ? kOk : kNone;
  }
  throw InputError("unknown oracle '" + sub + "' (expected points, width, cone-ip, punctured)");
}

namespace {

int verdict(const Flags& f, Output o, Json j, bool agree, const std::string& plain) {
  j["agree"] = agree;
  emit(f, o, j, plain + (agree ? "agree\n" : "MISMATCH\n"));
  return agree ? kOk : kInternalError;
}

int verify_decompose(const InstanceFile& inst, const Flags& f, Output o) {
  const Cone& cone = require<Cone>(inst, "verify decompose", "CONE");
  const IntMatrix& a = cone.generators();
  const std::size_t n = cone.dim();
  Integer radius = radius_or(f, 10);
  UnimodularDecomposition d = decompose(a);
  std::size_t bad_pieces = 0;
  for (const auto& p : d.pieces)
    if (abs(det(p.gen)) != 1) ++bad_pieces;
  std::size_t in_root = 0, covered = 0, mismatches = 0;
  oracle::for_each_lattice_point(
      oracle::Box(IntVector(n, Integer(-radius)), IntVector(n, radius)), f.budget,
      [&](const IntVector& x) {
        bool inside = oracle::in_cone(a, x);
        bool in_union = std::any_of(d.pieces.begin(), d.pieces.end(), [&](const auto& p) {
          return oracle::in_cone(p.gen, x);
        });
        in_root += inside;
        covered += in_union;
        mismatches += inside != in_union;
      });
  bool agree = bad_pieces == 0 && mismatches == 0;
  Json j{{"command", "verify"}, {"target", "decompose"}, {"radius", num(radius)},
         {"pieces", num(d.pieces.size())}, {"non_unimodular_pieces", num(bad_pieces)},
         {"cone_points", num(in_root)}, {"union_points", num(covered)},
         {"mismatched_points", num(mismatches)}};
  std::string plain = "pieces: " + std::to_string(d.pieces.size()) + " (" +
                      std::to_string(bad_pieces) + " non-unimodular)\n" +
                      "box radius " + radius.get_str() + ": cone " + std::to_string(in_root) +
                      " points, union " + std::to_string(covered) + " points\n";
  return verdict(f, o, j, agree, plain);
}

int verify_width(const InstanceFile& inst, const Flags& f, Output o) {
  HSimplex s = as_h(inst, "verify width");
  Integer radius = radius_or(f, 10);
  WidthRun w = run_width(s, false);
  auto brute = oracle::brute_width(s, radius, f.budget);
  bool witness_ok = width_along(s, w.result.direction) == w.result.width;
  bool agree = witness_ok && brute.value == w.result.width;
  Json j{{"command", "verify"}, {"target", "width"}, {"algorithm", width_json(w)},
         {"oracle", {{"width", num(brute.value)}, {"direction", vec(brute.direction)},
                     {"radius", num(radius)}}},
         {"witness_ok", witness_ok}};
  std::string plain = "algorithm: " + width_text(w) + "oracle: width = " +
                      brute.value.get_str() + ", direction = " + text(brute.direction) + "\n";
  if (f.lattice_free) {
    WidthRun lf = run_width(s, true);
    bool lf_ok = lf.result.width == w.result.width && lf.result.width <= Rational(*lf.delta);
    agree = agree && lf_ok;
    j["lattice_free"] = width_json(lf);
    plain += "lattice-free: width = " + lf.result.width.get_str() + ", delta = " +
             lf.delta->get_str() + "\n";
  }
  return verdict(f, o, j, agree, plain);
}

int verify_cone_ip(const InstanceFile& inst, const Flags& f, Output o) {
  const auto& ip = require<ConeIpInstance>(inst, "verify cone-ip", "CONEIP");
  Integer radius = radius_or(f, 30);
  ConeIpResult r = solve(ip);
  if (r.feasible)
    for (const auto& x : r.point)
      if (abs(x) > radius)
        throw BudgetExceeded("algorithm point " + text(r.point) +
                             " lies outside the oracle box; raise --oracle-radius");
  auto brute = oracle::brute_cone_ip(ip, radius, f.budget);
  bool agree = r.feasible == brute.has_value();
  if (agree && r.feasible && ip.objective) agree = brute->value == *r.value;
  std::optional<IntVector> ap, bp;
  std::optional<Integer> av, bv;
  if (r.feasible) ap = r.point, av = r.value;
  if (brute) bp = brute->point, bv = ip.objective ? std::optional(brute->value) : std::nullopt;
  Json j{{"command", "verify"}, {"target", "cone-ip"}, {"radius", num(radius)},
         {"algorithm", optimum_json(ap, av)}, {"oracle", optimum_json(bp, bv)}};
  std::string plain = "algorithm:\n" + optimum_text(ap, av, "infeasible") + "oracle:\n" +
                      optimum_text(bp, bv, "infeasible");
  return verdict(f, o, j, agree, plain);
}

int verify_punctured(const InstanceFile& inst, const Flags& f, Output o) {
  VSimplex s = as_v(inst, "verify opt-punctured");
  const IntVector& c = require_objective(inst, "verify opt-punctured");
  auto r = optimize_punctured({s, c});
  auto brute = oracle::brute_punctured(s, c, f.budget);
  bool agree = r.has_value() == brute.has_value() && (!r || r->value == brute->value);
  std::optional<IntVector> ap, bp;
  std::optional<Integer> av, bv;
  if (r) ap = r->point, av = r->value;
  if (brute) bp = brute->point, bv = brute->value;
  Json j{{"command", "verify"}, {"target", "opt-punctured"},
         {"algorithm", optimum_json(ap, av)}, {"oracle", optimum_json(bp, bv)}};
  std::string plain = "algorithm:\n" + optimum_text(ap, av, "none") + "oracle:\n" +
                      optimum_text(bp, bv, "none");
  return verdict(f, o, j, agree, plain);
}

}  // namespace

int cmd_verify(const std::string& sub, const InstanceFile& inst, const Flags& f, Output o) {
  if (sub == "decompose") return verify_decompose(inst, f, o);
  if (sub == "width") return verify_width(inst, f, o);
  if (sub == "cone-ip") return verify_cone_ip(inst, f, o);
  if (sub == "opt-punctured") return verify_punctured(inst, f, o);
  throw InputError("unknown verify target '" + sub +
                   "' (expected decompose, width, cone-ip, opt-punctured)");
}

int cmd_gen(const std::string& kind, const GenParams& p, const Flags& f, Output o) {
  if (p.dim < 1) throw InputError("--dim must be positive");
  if (p.bound < 1) throw InputError("--bound must be positive");
  std::optional<InstanceFile> file;
  if (kind == "cone") {
    if (p.det < 1) throw InputError("--det must be positive");
    IntMatrix g = corpus::gen_cone(p.dim, p.det, f.seed);
    file = InstanceFile{Cone(g), std::nullopt};
  } else if (kind == "simplex") {
    file = InstanceFile{corpus::gen_simplex_h(p.dim, p.bound, f.seed), std::nullopt};
  } else if (kind == "vsimplex") {
    file = InstanceFile{corpus::gen_simplex_v(p.dim, p.bound, f.seed), std::nullopt};
  } else if (kind == "lattice-free") {
    file = InstanceFile{corpus::gen_lattice_free_simplex(p.dim, f.seed), std::nullopt};
  } else if (kind == "cone-ip") {
    ConeIpInstance ip = corpus::gen_cone_ip(p.dim, f.seed);
    auto obj = ip.objective;
    file = InstanceFile{std::move(ip), obj};
  } else {
    throw InputError("unknown generator '" + kind +
                     "' (expected cone, simplex, vsimplex, lattice-free, cone-ip)");
  }
  if (p.objective_bound > 0 && !std::holds_alternative<ConeIpInstance>(file->body)) {
    corpus::Rng rng(f.seed ^ 0x5DEECE66DULL);
    IntVector c(p.dim);
    do {
      for (auto& x : c) x = rng.uniform(-p.objective_bound, p.objective_bound);
    } while (std::all_of(c.begin(), c.end(), [](const Integer& x) { return x == 0; }));
    file->objective = c;
  }
  std::string body = format_instance(*file);
  Json j{{"command", "gen"}, {"kind", kind_name(file->kind())}, {"seed", num(Integer(static_cast<unsigned long>(f.seed)))},
         {"instance", body}};
  emit(f, o, j, body);
  return kOk;
}

}  // namespace latwidth::cli
