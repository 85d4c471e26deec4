// primspec command-line front end: build finite Markov semigroup systems,
// analyze their primitive spectrum / radical / mean-ergodic structure, and
// run the randomized verification suite.
//
// Exit codes: 0 success, 1 usage error, 2 input error, 3 numeric error.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "primspec/verify.hpp"

namespace ps = primspec;
using ps::json;

namespace {

ps::Subset parse_set(const std::string& text) {
  ps::Subset out;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    try {
      out.push_back(std::stoi(token));
    } catch (const std::exception&) {
      throw ps::ParseError("--set: cannot parse index \"" + token + "\"");
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.empty()) throw ps::ParseError("--set: empty set");
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text << "\n";
  else
    ps::write_file(out_path, text + "\n");
}

struct ToleranceFlags {
  double tol_conv = -1;  // negative = keep default
  double tol_supp = -1;

  ps::NetConfig net() const {
    ps::NetConfig cfg;
    if (tol_conv > 0) cfg.tol_conv = tol_conv;
    return cfg;
  }
  template <class T>
  void apply(ps::MarkovSemigroup<T>& s) const {
    if (tol_supp > 0) s.tol.supp = ps::scalar_ops<T>::from_double(tol_supp);
  }
};

template <class T>
int do_analyze(ps::MarkovSemigroup<T> s, const ToleranceFlags& tols, const std::string& out_path,
               const std::string& dot_path) {
  tols.apply(s);
  json report = ps::analyze_report(s, tols.net());
  emit(report.dump(2), out_path);
  if (!dot_path.empty()) {
    ps::PrimSpectrum<T> spec = ps::prim_spectrum(s);
    ps::write_file(dot_path, ps::digraph_dot(s) + ps::spectrum_dot(spec));
  }
  return 0;
}

template <class T>
int do_radical(ps::MarkovSemigroup<T> s, const ToleranceFlags& tols, const std::string& set_text,
               const std::string& out_path, const std::string& csv_path) {
  tols.apply(s);
  ps::Subset l = set_text.empty() ? ps::full_subset(int(s.n)) : parse_set(set_text);
  if (!ps::is_self_supporting(s.digraph, l)) {
    for (int x : l)
      for (int y : s.digraph.succ[size_t(x)])
        if (!ps::subset_contains(l, y))
          throw ps::NotSelfSupporting("set " + ps::subset_str(l) + " is not self-supporting: edge " +
                                      std::to_string(x) + " -> " + std::to_string(y) +
                                      " leaves it");
    throw ps::NotSelfSupporting("set " + ps::subset_str(l) + " is not self-supporting");
  }
  ps::PrimSpectrum<T> spec = ps::prim_spectrum(s);
  auto rad = ps::radical(spec, l);

  json out;
  out["set"] = l;
  if (rad) {
    out["radical_support"] = rad->support;
    out["witness_measure"] = ps::vec_to_json(ps::radical_witness_measure(spec, *rad));
  } else {
    out["radical_support"] = nullptr;  // full algebra: no ergodic support inside
  }
  // decay trace for the default probe: indicator of the non-radical part
  ps::Vec<T> probe = ps::Vec<T>::Zero(s.n);
  for (int x : l)
    if (!rad || !ps::subset_contains(rad->support, x)) probe(x) = T(1);
  auto membership = ps::radical_membership_via_means(s, l, probe, tols.net());
  out["probe_member"] = membership.member;
  if (!membership.trace.empty())
    out["probe_final_decay"] = ps::scalar_to_json(membership.trace.back().second);
  emit(out.dump(2), out_path);
  if (!csv_path.empty()) ps::write_file(csv_path, ps::decay_csv(membership));
  return 0;
}

template <class T>
int do_center(ps::MarkovSemigroup<T> s, const ToleranceFlags& tols, const std::string& out_path) {
  tols.apply(s);
  ps::PrimSpectrum<T> spec = ps::prim_spectrum(s);
  json out;
  out["center"] = ps::minimal_center_support(spec);
  out["radical_free"] = ps::is_radical_free(spec);
  out["prim"] = ps::spectrum_to_json(spec);
  emit(out.dump(2), out_path);
  return 0;
}

template <class T>
int do_meanergodic(ps::MarkovSemigroup<T> s, const ToleranceFlags& tols,
                   const std::string& out_path) {
  tols.apply(s);
  ps::PrimSpectrum<T> spec = ps::prim_spectrum(s);
  ps::MeanErgodicVerdict verdict = ps::mean_ergodicity_verdict(s);
  auto on_center = ps::restrict_semigroup(s, ps::SIdeal{ps::minimal_center_support(spec)});
  json out = ps::verdict_to_json(verdict, ps::Index(ps::fix_space_basis(on_center).size()),
                                 ps::Index(spec.points.size()));
  ps::MeanProjection<T> proj = ps::cesaro_projection(s, tols.net());
  out["projection"] = ps::mat_to_json(proj.matrix);
  out["converged_at"] = proj.n_final;
  emit(out.dump(2), out_path);
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"Invariant-ideal structure of commuting Markov operators on a finite space"};
  app.require_subcommand(1);

  std::string out_path, dot_path, csv_path, mode = "float", set_text, path, path2;
  ToleranceFlags tols;
  std::uint64_t seed = 42;

  auto add_common = [&](CLI::App* cmd, bool with_dot = false) {
    cmd->add_option("--out", out_path, "write the JSON result here instead of stdout");
    cmd->add_option("--tol-conv", tols.tol_conv, "convergence tolerance for mean nets");
    cmd->add_option("--tol-supp", tols.tol_supp, "support-detection tolerance");
    if (with_dot) cmd->add_option("--dot", dot_path, "write Graphviz DOT output here");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "full report for a system file");
  analyze->add_option("path", path, "SystemSpec JSON file")->required();
  add_common(analyze, true);

  CLI::App* radical = app.add_subcommand("radical", "radical of the ideal carried by --set");
  radical->add_option("path", path, "SystemSpec JSON file")->required();
  radical->add_option("--set", set_text, "comma-separated state indices (default: all states)");
  radical->add_option("--csv", csv_path, "write the decay trace CSV here");
  add_common(radical);

  CLI::App* center = app.add_subcommand("center", "minimal center of attraction");
  center->add_option("path", path, "SystemSpec JSON file")->required();
  add_common(center);

  CLI::App* meanergodic = app.add_subcommand("meanergodic", "mean-ergodicity verdict");
  meanergodic->add_option("path", path, "SystemSpec JSON file")->required();
  add_common(meanergodic);

  CLI::App* build = app.add_subcommand("build", "construct a system and emit SystemSpec JSON");
  build->require_subcommand(1);
  int n = 2, a = 1, cells = 8, m_gens = 2, n_max = 6;
  std::string map_text, ulam_kind = "doubling", alpha_text = "1/3";

  CLI::App* b_rot = build->add_subcommand("rotation", "cyclic rotation x -> x + a mod n");
  b_rot->add_option("--n", n, "number of states")->required();
  b_rot->add_option("--a", a, "step");
  b_rot->add_option("--mode", mode, "float|rational");
  b_rot->add_option("--out", out_path, "output path");

  CLI::App* b_koop = build->add_subcommand("koopman", "Koopman operator of a finite map");
  b_koop->add_option("--n", n, "number of states")->required();
  b_koop->add_option("--map", map_text, "comma-separated images phi(0),phi(1),...")->required();
  b_koop->add_option("--mode", mode, "float|rational");
  b_koop->add_option("--out", out_path, "output path");

  CLI::App* b_ulam = build->add_subcommand("ulam", "Ulam discretization of an interval map");
  b_ulam->add_option("--kind", ulam_kind, "doubling|rotation");
  b_ulam->add_option("--cells", cells, "number of cells");
  b_ulam->add_option("--alpha", alpha_text, "rotation angle p/q");
  b_ulam->add_option("--mode", mode, "float|rational");
  b_ulam->add_option("--out", out_path, "output path");

  CLI::App* b_prod = build->add_subcommand("product", "Kronecker product of two system files");
  b_prod->add_option("path1", path, "first SystemSpec file")->required();
  b_prod->add_option("path2", path2, "second SystemSpec file")->required();
  b_prod->add_option("--out", out_path, "output path");

  CLI::App* b_rand = build->add_subcommand("random", "seeded random commuting instance");
  b_rand->add_option("--seed", seed, "PRNG seed");
  b_rand->add_option("--n-max", n_max, "maximum state count (<= 12)");
  b_rand->add_option("--m", m_gens, "maximum generator count");
  b_rand->add_option("--mode", mode, "float|rational");
  b_rand->add_option("--out", out_path, "output path");

  CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
  int count = 25, max_n = 8;
  verify->add_option("--seed", seed, "PRNG seed");
  verify->add_option("--count", count, "number of random instances on top of the fixtures");
  verify->add_option("--max-n", max_n, "maximum state count for random instances");
  verify->add_option("--mode", mode, "float|rational");
  verify->add_option("--out", out_path, "write the suite report JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (mode != "float" && mode != "rational") throw ps::ParseError("--mode must be float|rational");

  auto dispatch = [&](auto&& fn) {
    ps::AnySemigroup any = ps::load_system_file(path);
    return std::visit(fn, std::move(any));
  };
  auto emit_system = [&](auto&& build_fn) {
    json j = mode == "rational" ? ps::system_to_json(build_fn(ps::Rational()))
                                : ps::system_to_json(build_fn(0.0));
    emit(j.dump(2), out_path);
    return 0;
  };

  if (analyze->parsed())
    return dispatch([&](auto s) { return do_analyze(std::move(s), tols, out_path, dot_path); });
  if (radical->parsed())
    return dispatch(
        [&](auto s) { return do_radical(std::move(s), tols, set_text, out_path, csv_path); });
  if (center->parsed())
    return dispatch([&](auto s) { return do_center(std::move(s), tols, out_path); });
  if (meanergodic->parsed())
    return dispatch([&](auto s) { return do_meanergodic(std::move(s), tols, out_path); });

  if (b_rot->parsed())
    return emit_system([&](auto tag) { return ps::build_rotation<decltype(tag)>(n, a); });
  if (b_koop->parsed()) {
    ps::MapSpec spec;
    spec.n = n;
    std::stringstream in(map_text);
    std::string token;
    while (std::getline(in, token, ',')) {
      try {
        spec.image.push_back(std::stoi(token));
      } catch (const std::exception&) {
        throw ps::ParseError("--map: cannot parse image \"" + token + "\"");
      }
    }
    return emit_system([&](auto tag) { return ps::build_koopman<decltype(tag)>(spec); });
  }
  if (b_ulam->parsed()) {
    ps::UlamSpec spec;
    spec.cells = cells;
    if (ulam_kind == "doubling")
      spec.kind = ps::UlamSpec::Kind::doubling;
    else if (ulam_kind == "rotation") {
      spec.kind = ps::UlamSpec::Kind::rotation;
      spec.alpha = ps::Rational::parse(alpha_text);
    } else
      throw ps::ParseError("--kind must be doubling|rotation");
    return emit_system([&](auto tag) { return ps::build_ulam<decltype(tag)>(spec); });
  }
  if (b_prod->parsed()) {
    ps::AnySemigroup a1 = ps::load_system_file(path);
    ps::AnySemigroup a2 = ps::load_system_file(path2);
    return std::visit(
        [&](auto s1, auto s2) -> int {
          if constexpr (std::is_same_v<decltype(s1), decltype(s2)>) {
            emit(ps::system_to_json(ps::build_product(s1, s2)).dump(2), out_path);
            return 0;
          } else {
            throw ps::ParseError("product factors must use the same mode");
          }
        },
        std::move(a1), std::move(a2));
  }
  if (b_rand->parsed())
    return emit_system(
        [&](auto tag) { return ps::random_instance<decltype(tag)>(seed, n_max, m_gens); });

  if (verify->parsed()) {
    auto render = [&](const std::vector<ps::OracleReport>& reports) {
      json out = json::array();
      bool all_pass = true;
      for (const auto& r : reports) {
        std::printf("%-36s %4d instances  %8.2fs  %s\n", r.id.c_str(), r.instances, r.seconds,
                    r.passed() ? "pass" : "FAIL");
        for (const auto& f : r.failures) std::fprintf(stderr, "  witness: %s\n", f.c_str());
        all_pass = all_pass && r.passed();
        out.push_back({{"id", r.id},
                       {"instances", r.instances},
                       {"failures", r.failures},
                       {"seconds", r.seconds}});
      }
      if (!out_path.empty()) ps::write_file(out_path, out.dump(2) + "\n");
      return all_pass ? 0 : 3;
    };
    if (mode == "rational") return render(ps::run_suite<ps::Rational>(seed, count, max_n));
    return render(ps::run_suite<double>(seed, count, max_n));
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ps::NumericError& e) {
    std::fprintf(stderr, "numeric error: %s\n", e.what());
    return 3;
  } catch (const ps::Error& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
