#ifndef PRIMSPEC_IO_HPP
#define PRIMSPEC_IO_HPP

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "primspec/gelfand.hpp"
#include "primspec/means.hpp"
#include "primspec/spectrum.hpp"

namespace primspec {

using nlohmann::json;

/// Either scalar mode of a loaded system.
using AnySemigroup = std::variant<MarkovSemigroup<double>, MarkovSemigroup<Rational>>;

/// Round to 12 significant digits so float-mode reports are stable up to
/// last-digit noise.
inline double round_sig(double x) {
  if (x == 0 || !std::isfinite(x)) return x;
  std::char_traits<char>::char_type buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

template <class T>
json scalar_to_json(const T& x) {
  if constexpr (is_exact_v<T>) {
    const Rational& r = x;
    return json(r.str());
  } else {
    return json(round_sig(x));
  }
}

template <class T>
T scalar_from_json(const json& j) {
  if constexpr (is_exact_v<T>) {
    if (j.is_string()) return Rational::parse(j.template get<std::string>());
    if (j.is_number_integer()) return Rational(j.template get<long long>());
    if (j.is_number()) return Rational::from_double(j.template get<double>());
    throw ParseError("expected a rational entry (\"p/q\" string or integer)");
  } else {
    if (j.is_number()) return j.template get<double>();
    if (j.is_string()) return Rational::parse(j.template get<std::string>()).to_double();
    throw ParseError("expected a numeric entry");
  }
}

template <class T>
json vec_to_json(const Vec<T>& v) {
  json arr = json::array();
  for (Index i = 0; i < v.size(); ++i) arr.push_back(scalar_to_json(v(i)));
  return arr;
}

template <class T>
json mat_to_json(const Mat<T>& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---- system file schema -------------------------------------------------
// {"n": int, "mode": "float"|"rational", "generators": [[row-major rows]],
//  "labels": [optional strings]}; rational entries are "p/q" strings.

template <class T>
MarkovSemigroup<T> system_from_json_typed(const json& j) {
  if (!j.contains("n") || !j.contains("generators"))
    throw ParseError("system file needs \"n\" and \"generators\"");
  const int n = j.at("n").get<int>();
  if (n < 1) throw ParseError("n must be at least 1");
  std::vector<Mat<T>> gens;
  for (const json& gj : j.at("generators")) {
    if (int(gj.size()) != n) throw ParseError("generator row count != n");
    Mat<T> m(n, n);
    for (int x = 0; x < n; ++x) {
      const json& row = gj.at(size_t(x));
      if (int(row.size()) != n) throw ParseError("generator column count != n");
      for (int y = 0; y < n; ++y) m(x, y) = scalar_from_json<T>(row.at(size_t(y)));
    }
    gens.push_back(std::move(m));
  }
  if (gens.empty()) throw ParseError("system file has no generators");
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return make_semigroup<T>(std::move(gens), Tolerances<T>{}, std::move(labels));
}

inline AnySemigroup load_system(const json& j) {
  const std::string mode = j.value("mode", "float");
  if (mode == "rational") return system_from_json_typed<Rational>(j);
  if (mode == "float") return system_from_json_typed<double>(j);
  throw ParseError("mode must be \"float\" or \"rational\"");
}

inline AnySemigroup load_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open system file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
  return load_system(j);
}

template <class T>
json system_to_json(const MarkovSemigroup<T>& s) {
  json j;
  j["n"] = int(s.n);
  j["mode"] = is_exact_v<T> ? "rational" : "float";
  json gens = json::array();
  for (const auto& g : s.generators) gens.push_back(mat_to_json(g));
  j["generators"] = std::move(gens);
  if (!s.labels.empty()) j["labels"] = s.labels;
  return j;
}

// ---- report (schema version 1) -----------------------------------------

template <class T>
json spectrum_to_json(const PrimSpectrum<T>& spec) {
  json points = json::array();
  for (const auto& p : spec.points)
    points.push_back({{"support", p.supp}, {"measure", vec_to_json(p.witness.weights)}});
  return points;
}

inline json verdict_to_json(const MeanErgodicVerdict& v, Index fix_dim, Index prim_count) {
  return {{"mean_ergodic", v.mean_ergodic},
          {"conditions",
           {{"spectrum_homeomorphic", v.condition_b_i},
            {"hausdorff", v.condition_c_i},
            {"uniquely_ergodic_supports", v.condition_c_ii},
            {"fixed_extension", v.condition_c_iii}}},
          {"fix_dim", int(fix_dim)},
          {"prim_count", int(prim_count)},
          {"witnesses", v.witnesses}};
}

template <class T>
json analyze_report(const MarkovSemigroup<T>& s, const NetConfig& cfg = {}) {
  json report;
  report["report_version"] = 1;
  report["system"] = system_to_json(s);

  PrimSpectrum<T> spec = prim_spectrum(s);
  report["prim"] = spectrum_to_json(spec);
  report["radical_free"] = is_radical_free(spec);
  report["center"] = minimal_center_support(spec);

  MeanProjection<T> proj = cesaro_projection(s, cfg);
  report["projection"] = mat_to_json(proj.matrix);
  report["converged_at"] = proj.n_final;

  MeanErgodicVerdict verdict = mean_ergodicity_verdict(s);
  Subset center = minimal_center_support(spec);
  MarkovSemigroup<T> on_center = restrict_semigroup(s, SIdeal{center});
  report["verdict"] = verdict_to_json(verdict, Index(fix_space_basis(on_center).size()),
                                      Index(spec.points.size()));
  return report;
}

// ---- DOT / CSV exports --------------------------------------------------

/// Support digraph with the minimal self-supporting sets as clusters.
template <class T>
std::string digraph_dot(const MarkovSemigroup<T>& s) {
  std::ostringstream out;
  out << "digraph support {\n";
  auto name = [&](int x) {
    return s.labels.empty() ? "s" + std::to_string(x) : "\"" + s.labels[size_t(x)] + "\"";
  };
  std::vector<Subset> minimal = minimal_self_supporting_sets(s.digraph);
  std::vector<bool> in_minimal(size_t(s.n), false);
  for (size_t c = 0; c < minimal.size(); ++c) {
    out << "  subgraph cluster_" << c << " {\n    label=\"minimal " << subset_str(minimal[c])
        << "\";\n";
    for (int x : minimal[c]) {
      out << "    " << name(x) << ";\n";
      in_minimal[size_t(x)] = true;
    }
    out << "  }\n";
  }
  for (int x = 0; x < int(s.n); ++x)
    if (!in_minimal[size_t(x)]) out << "  " << name(x) << ";\n";
  for (int x = 0; x < int(s.n); ++x)
    for (int y : s.digraph.succ[size_t(x)]) out << "  " << name(x) << " -> " << name(y) << ";\n";
  out << "}\n";
  return out.str();
}

/// Primitive points with the specialization order as edges; discrete orders
/// render as isolated nodes.
template <class T>
std::string spectrum_dot(const PrimSpectrum<T>& spec) {
  SpecializationOrder order = specialization_order(spec);
  std::ostringstream out;
  out << "digraph prim {\n";
  for (size_t i = 0; i < spec.points.size(); ++i)
    out << "  p" << i << " [label=\"" << subset_str(spec.points[i].supp) << "\"];\n";
  for (auto [p, q] : order.leads_to) out << "  p" << p << " -> p" << q << ";\n";
  out << "}\n";
  return out.str();
}

/// Decay trace CSV with header "N,decay".
template <class T>
std::string decay_csv(const MembershipResult<T>& result) {
  std::ostringstream out;
  out << "N,decay\n";
  for (const auto& [n, value] : result.trace) {
    std::char_traits<char>::char_type buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", scalar_ops<T>::to_double(value));
    out << n << "," << buf << "\n";
  }
  return out.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write file: " + path);
  out << content;
}

}  // namespace primspec

#endif  // PRIMSPEC_IO_HPP
