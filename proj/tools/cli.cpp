#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "srcartier/classifier.hpp"
#include "srcartier/enumeration.hpp"
#include "srcartier/errors.hpp"
#include "srcartier/homology.hpp"
#include "srcartier/report_json.hpp"
#include "srcartier/stanley_reisner.hpp"
#include "srcartier/text_format.hpp"

namespace srcartier::cli {
namespace {

using Json = nlohmann::ordered_json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::map<std::string, Command>& command_names() {
  static const std::map<std::string, Command> names{
      {"classify", Command::Classify},
      {"free-faces", Command::FreeFaces},
      {"collapse", Command::Collapse},
      {"core", Command::Core},
      {"nonfaces", Command::Nonfaces},
      {"colon", Command::Colon},
      {"homology", Command::Homology},
      {"cm", Command::CohenMacaulay},
      {"2cm", Command::DoublyCohenMacaulay},
      {"gorenstein-star", Command::GorensteinStar},
      {"bstar-refute", Command::BuchsbaumStarRefute},
      {"cross-validate", Command::CrossValidate},
  };
  return names;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

InputFormat resolve_format(const RunConfig& config) {
  if (config.format != InputFormat::Auto) return config.format;
  const std::string& path = *config.input_path;
  auto ends_with = [&path](std::string_view suffix) {
    return path.size() >= suffix.size() && path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (ends_with(".facets")) return InputFormat::Facets;
  if (ends_with(".ideal")) return InputFormat::Ideal;
  throw InputError("cannot tell the format of '" + path + "'; use --format facets|ideal");
}

SimplicialComplex load_complex(const RunConfig& config) {
  const std::string text = read_file(*config.input_path);
  if (resolve_format(config) == InputFormat::Facets) return parse_facet_text(text, config.n_override);
  return complex_of_ideal(parse_ideal_text(text, config.n_override));
}

std::string face_list(std::span<const Face> faces) {
  std::string s;
  for (Face f : faces) s += (s.empty() ? "" : " ") + to_string(f);
  return s.empty() ? "(none)" : s;
}

std::string pair_text(const FreeFacePair& p) {
  return to_string(p.free_face) + " < " + to_string(p.facet);
}

Json pair_json(const FreeFacePair& p) {
  return Json{{"free_face", p.free_face.vertices()}, {"facet", p.facet.vertices()}};
}

Json facets_json(const SimplicialComplex& c) {
  Json out = Json::array();
  for (Face g : c.facets()) out.push_back(g.vertices());
  return out;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int cmd_classify(const RunConfig& config, std::ostream& out) {
  const SimplicialComplex complex = load_complex(config);
  const ClassificationReport report = classify(complex, Method::Both, config.q);
  if (config.json) {
    out << to_json(report) << '\n';
  } else {
    out << "verdict: " << to_string(report.verdict) << '\n'
        << "n: " << report.n << '\n'
        << "V: " << to_string(report.support) << '\n'
        << "core facets: " << face_list(report.core.core.facets()) << '\n';
    if (report.regular_short_circuit) out << "full simplex: S/I is regular\n";
    if (report.free_face_witness) {
      out << "free face: " << pair_text(*report.free_face_witness) << '\n'
          << "witness monomial (core coordinates): " << to_string(*report.monomial_witness) << '\n';
    } else {
      out << "free face: none\n";
    }
    if (report.colon_lhs) {
      out << "colon lhs: " << to_string(*report.colon_lhs) << '\n'
          << "colon rhs: " << to_string(*report.colon_rhs) << '\n';
    }
  }
  return report.principally_generated() ? kExitPrincipal : kExitInfinite;
}

int cmd_free_faces(const RunConfig& config, std::ostream& out) {
  const auto pairs = free_faces(load_complex(config));
  if (config.json) {
    Json j = Json::array();
    for (const auto& p : pairs) j.push_back(pair_json(p));
    emit(out, j);
  } else {
    for (const auto& p : pairs) out << pair_text(p) << '\n';
    out << "free pairs: " << pairs.size() << '\n';
  }
  return kExitOk;
}

int cmd_collapse(const RunConfig& config, std::ostream& out) {
  const CollapseResult result = collapse_greedy(load_complex(config));
  if (config.json) {
    Json steps = Json::array();
    for (const auto& p : result.steps) steps.push_back(pair_json(p));
    emit(out, Json{{"steps", steps}, {"final_facets", facets_json(result.complex)}});
  } else {
    for (std::size_t i = 0; i < result.steps.size(); ++i) {
      out << "step " << i + 1 << ": " << pair_text(result.steps[i]) << '\n';
    }
    out << "final facets: " << face_list(result.complex.facets()) << '\n';
  }
  return kExitOk;
}

int cmd_core(const RunConfig& config, std::ostream& out) {
  const CoreDecomposition dec = core(load_complex(config));
  if (config.json) {
    emit(out, Json{{"cone_vertices", dec.cone.vertices()},
                   {"index_map", dec.vertex_map},
                   {"n", dec.core.ground_size()},
                   {"facets", facets_json(dec.core)}});
  } else {
    out << "cone vertices: " << to_string(dec.cone) << '\n' << "index map:";
    for (std::size_t k = 0; k < dec.vertex_map.size(); ++k) {
      out << ' ' << k + 1 << "->" << dec.vertex_map[k];
    }
    out << "\nn: " << dec.core.ground_size() << '\n'
        << "facets: " << face_list(dec.core.facets()) << '\n';
  }
  return kExitOk;
}

int cmd_nonfaces(const RunConfig& config, std::ostream& out) {
  const auto nonfaces = minimal_nonfaces(load_complex(config));
  if (config.json) {
    Json j = Json::array();
    for (Face f : nonfaces) j.push_back(f.vertices());
    emit(out, j);
  } else {
    for (Face f : nonfaces) out << to_string(f) << '\n';
  }
  return kExitOk;
}

int cmd_colon(const RunConfig& config, std::ostream& out) {
  const ClassificationReport report = classify_via_ideal(load_complex(config), config.q);
  std::vector<Monomial> offending;
  if (report.colon_lhs) offending = generators_outside(*report.colon_lhs, *report.colon_rhs);
  if (config.json) {
    Json off = Json::array();
    for (const auto& m : offending) off.push_back(to_string(m));
    Json lhs = Json::array();
    Json rhs = Json::array();
    if (report.colon_lhs) {
      for (const auto& g : report.colon_lhs->gens()) lhs.push_back(to_string(g));
      for (const auto& g : report.colon_rhs->gens()) rhs.push_back(to_string(g));
    }
    emit(out, Json{{"q", config.q},
                   {"regular", report.regular_short_circuit},
                   {"lhs", lhs},
                   {"rhs", rhs},
                   {"equal", report.principally_generated()},
                   {"offending", off},
                   {"verdict", to_string(report.verdict)}});
    return kExitOk;
  }
  if (report.regular_short_circuit) {
    out << "zero ideal: S/I is regular, no colon computed\n"
        << "verdict: " << to_string(report.verdict) << '\n';
    return kExitOk;
  }
  out << "q: " << config.q << '\n'
      << "lhs I^[q]:I = " << to_string(*report.colon_lhs) << '\n'
      << "rhs I^[q]+(x_V^(q-1)) = " << to_string(*report.colon_rhs) << '\n'
      << "equal: " << (report.principally_generated() ? "yes" : "no") << '\n';
  if (!offending.empty()) {
    out << "offending:";
    for (const auto& m : offending) out << ' ' << to_string(m);
    out << '\n';
  }
  out << "verdict: " << to_string(report.verdict) << '\n';
  return kExitOk;
}

int cmd_homology(const RunConfig& config, std::ostream& out) {
  const HomologyProfile h = reduced_betti(load_complex(config), PrimeField(config.field_p));
  if (config.json) {
    out << to_json(h) << '\n';
  } else {
    for (int d = h.min_degree; d <= h.max_degree(); ++d) {
      out << "H~_" << d << ": " << h.dim(d) << '\n';
    }
  }
  return kExitOk;
}

int cmd_property(const RunConfig& config, std::ostream& out, std::string_view name,
                 bool (*test)(const SimplicialComplex&, const PrimeField&)) {
  const bool value = test(load_complex(config), PrimeField(config.field_p));
  if (config.json) {
    emit(out, Json{{"property", name}, {"field", config.field_p}, {"value", value}});
  } else {
    out << name << " over GF(" << config.field_p << "): " << (value ? "true" : "false") << '\n';
  }
  return kExitOk;
}

int cmd_bstar_refute(const RunConfig& config, std::ostream& out) {
  const auto refutation =
      buchsbaum_star_refutation(load_complex(config), PrimeField(config.field_p));
  if (config.json) {
    Json j;
    if (!refutation) {
      j["certificate"] = nullptr;
    } else {
      j["cone_vertex"] = refutation->cone_vertex ? Json(*refutation->cone_vertex) : Json();
      j["free_face"] = refutation->pair ? Json(refutation->pair->free_face.vertices()) : Json();
      j["facet"] = refutation->pair ? Json(refutation->pair->facet.vertices()) : Json();
      j["rank"] = refutation->certificate.rank;
      j["target_dim"] = refutation->certificate.target_dim;
    }
    emit(out, j);
  } else if (!refutation) {
    out << "no certificate (this does not prove Buchsbaum*)\n";
  } else {
    if (refutation->cone_vertex) {
      out << "certificate: cone over vertex " << *refutation->cone_vertex << '\n';
    }
    if (refutation->pair) {
      out << "certificate: free pair " << pair_text(*refutation->pair) << ", rank "
          << refutation->certificate.rank << ", target_dim "
          << refutation->certificate.target_dim << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

CrossValidationConfig cross_validation_config(const RunConfig& config) {
  CrossValidationConfig cv;
  cv.seed = config.seed;
  cv.trials_per_n = config.trials;
  cv.q_sweep = config.q_sweep;
  if (config.n_override) {
    const int n = *config.n_override;
    if (config.exhaustive || n <= 5) {
      cv.exhaustive_min_n = cv.exhaustive_max_n = n;
      cv.random_ns.clear();
    } else {
      cv.exhaustive_min_n = 1;
      cv.exhaustive_max_n = 0;
      cv.random_ns = {n};
    }
  } else if (config.exhaustive) {
    cv.random_ns.clear();
  }
  return cv;
}

int report_cross_validation(const CrossValidationReport& report, bool json, std::ostream& out) {
  if (json) {
    out << to_json(report) << '\n';
  } else {
    out << "complexes: " << report.complexes << '\n';
    for (const auto& [n, count] : report.exhaustive_counts) {
      out << "exhaustive n=" << n << ": " << count << '\n';
    }
    out << "principally generated: " << report.principally_generated << '\n'
        << "infinitely generated: " << report.infinitely_generated << '\n'
        << "witnesses checked: " << report.witnesses_checked << '\n'
        << "witness violations: " << report.witness_violations << '\n'
        << "q-sweep mismatches: " << report.q_sweep_mismatches << '\n'
        << "mismatches: " << report.verdict_mismatches << '\n';
    for (const auto& c : report.counterexamples) {
      out << "counterexample [" << c.kind << "] " << c.detail << " : "
          << face_list(c.complex.facets()) << " on " << c.complex.ground_size() << '\n';
    }
  }
  return report.ok() ? kExitOk : kExitInconsistent;
}

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::Classify: return cmd_classify(config, out);
      case Command::FreeFaces: return cmd_free_faces(config, out);
      case Command::Collapse: return cmd_collapse(config, out);
      case Command::Core: return cmd_core(config, out);
      case Command::Nonfaces: return cmd_nonfaces(config, out);
      case Command::Colon: return cmd_colon(config, out);
      case Command::Homology: return cmd_homology(config, out);
      case Command::CohenMacaulay: return cmd_property(config, out, "cohen-macaulay", is_cohen_macaulay);
      case Command::DoublyCohenMacaulay:
        return cmd_property(config, out, "doubly-cohen-macaulay", is_doubly_cohen_macaulay);
      case Command::GorensteinStar:
        return cmd_property(config, out, "gorenstein-star", is_gorenstein_star);
      case Command::BuchsbaumStarRefute: return cmd_bstar_refute(config, out);
      case Command::CrossValidate: {
        const CrossValidationReport report = cross_validate(cross_validation_config(config));
        err << "runtime: " << std::fixed << std::setprecision(2) << report.seconds << " s\n";
        return report_cross_validation(report, config.json, out);
      }
    }
  } catch (const InconsistencyError& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    return kExitInconsistent;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cartier algebras of Stanley-Reisner rings: classification and homology", "srcartier"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::string format = "auto";
  std::string input;
  app.add_option("--n", config.n_override,
                 "Ground set size for input files; the vertex count for cross-validate");
  app.add_option("--field", config.field_p, "Prime p of the coefficient field GF(p)");
  app.add_option("--q", config.q, "Frobenius power q for the colon-ideal test");
  app.add_option("--q-sweep", config.q_sweep, "Extra q values checked by cross-validate")
      ->delimiter(',');
  app.add_option("--seed", config.seed, "Seed for random complexes");
  app.add_option("--trials", config.trials, "Random complexes per n");
  app.add_flag("--exhaustive", config.exhaustive, "cross-validate: exhaustive enumeration only");
  app.add_flag("--json", config.json, "Emit JSON");
  app.add_option("--format", format, "Input format (default: by extension)")
      ->check(CLI::IsMember({"auto", "facets", "ideal"}));

  for (const auto& [name, command] : command_names()) {
    auto* sub = app.add_subcommand(name);
    if (command != Command::CrossValidate) {
      sub->add_option("input", input, "A .facets or .ideal file")->required();
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  config.command = command_names().at(app.get_subcommands().front()->get_name());
  if (!input.empty()) config.input_path = input;
  config.format = format == "facets" ? InputFormat::Facets
                  : format == "ideal" ? InputFormat::Ideal
                                      : InputFormat::Auto;
  if (!is_prime(config.field_p) || config.field_p >= (1U << 31)) {
    err << "error: --field " << config.field_p << " is not a prime below 2^31\n";
    return kExitInputError;
  }
  if (config.q < 2) {
    err << "error: --q must be >= 2\n";
    return kExitInputError;
  }
  for (auto q : config.q_sweep) {
    if (q < 2) {
      err << "error: --q-sweep values must be >= 2\n";
      return kExitInputError;
    }
  }
  if (config.command == Command::CrossValidate && config.n_override &&
      (*config.n_override < 1 || (config.exhaustive && *config.n_override > kMaxExhaustiveVertices))) {
    err << "error: cross-validate --n must be >= 1 (<= 6 with --exhaustive)\n";
    return kExitInputError;
  }
  return execute(config, out, err);
}

}  // namespace srcartier::cli
