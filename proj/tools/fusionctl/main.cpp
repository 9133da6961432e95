#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fusion/fusion.hpp"
#include "fusion/io.hpp"

namespace {

using fusion::io::json;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kIoError = 2;
constexpr int kRankBound = 3;

struct Common {
  bool json = false;
  double tolerance = fusion::kDefaultTolerance;
  std::size_t max_rank = fusion::kDefaultMaxRank;
  std::optional<std::string> group;
};

std::string num(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

std::string indices_text(const fusion::FusionRing& r, const std::vector<fusion::Index>& idx) {
  std::string out = "{";
  for (std::size_t n = 0; n < idx.size(); ++n) {
    if (n) out += ", ";
    out += r.label(idx[n]);
  }
  return out + "}";
}

std::string vector_text(const fusion::ObjectVector& v) {
  std::string out;
  for (fusion::Index i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (v[i] != 1) out += std::to_string(v[i]);
    out += v.ring().label(i);
  }
  return out.empty() ? "0" : out;
}

fusion::DimensionOptions dim_options(const Common& c) {
  fusion::DimensionOptions o;
  o.tolerance = c.tolerance;
  return o;
}

fusion::AnalysisOptions analysis_options(const Common& c) {
  fusion::AnalysisOptions o;
  o.dims = dim_options(c);
  o.max_rank = c.max_rank;
  return o;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

int io_failure(const std::exception& e) {
  std::cerr << "error: " << e.what() << '\n';
  return kIoError;
}

// ---------------------------------------------------------------------------

int cmd_validate(const Common& c, const std::string& ref) {
  try {
    const auto ring = fusion::io::resolve_ring(ref, c.group);
    if (c.json) {
      emit({{"schema_version", fusion::io::kReportSchemaVersion},
            {"kind", "validation"},
            {"ring", ring.name()},
            {"rank", ring.rank()},
            {"valid", true},
            {"tolerance", c.tolerance}});
    } else {
      std::cout << "valid: " << ring.name() << " (rank " << ring.rank() << ")\n";
    }
    return kOk;
  } catch (const fusion::RingValidationError& e) {
    if (c.json) {
      emit({{"schema_version", fusion::io::kReportSchemaVersion},
            {"kind", "validation"},
            {"ref", ref},
            {"valid", false},
            {"axiom", std::string(fusion::to_string(e.axiom()))},
            {"where", e.where()},
            {"message", e.what()},
            {"tolerance", c.tolerance}});
    } else {
      std::cout << "invalid: " << e.what() << '\n';
    }
    return kCheckFailed;
  } catch (const std::exception& e) {
    return io_failure(e);
  }
}

// ---------------------------------------------------------------------------

int cmd_dims(const Common& c, const std::string& ref) {
  std::optional<fusion::FusionRing> ring;
  try {
    ring = fusion::io::resolve_ring(ref, c.group);
  } catch (const fusion::RingValidationError& e) {
    std::cerr << "invalid: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const std::exception& e) {
    return io_failure(e);
  }

  fusion::DimensionData d;
  try {
    d = fusion::fp_dimensions(*ring, dim_options(c));
  } catch (const fusion::NonConvergence& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCheckFailed;
  }

  if (c.json) {
    emit(fusion::io::json_report(*ring, d));
    return kOk;
  }

  std::cout << ring->name() << " (rank " << ring->rank() << ")\n";
  std::size_t width = 6;
  for (const auto& l : ring->labels()) width = std::max(width, l.size());
  for (fusion::Index i = 0; i < ring->rank(); ++i) {
    std::string marker;
    if (d.integer_dims)
      marker = "exact integer";
    else if (d.squared_dims)
      marker = "exact: d^2 = " + std::to_string((*d.squared_dims)[i]);
    std::cout << "  " << ring->label(i) << std::string(width - ring->label(i).size() + 2, ' ') << num(d[i]);
    if (!marker.empty()) std::cout << "  [" << marker << "]";
    std::cout << '\n';
  }
  std::cout << "global FPdim: " << num(d.global);
  if (d.exact_global) std::cout << "  [exact " << *d.exact_global << "]";
  std::cout << '\n'
            << "integral=" << (d.integral ? "true" : "false")
            << " weakly_integral=" << (d.weak_integrality == fusion::WeakIntegrality::Exact ? "true" : "false")
            << " (" << fusion::to_string(d.weak_integrality) << ")\n";
  return kOk;
}

// ---------------------------------------------------------------------------

struct MorphismChecks {
  bool dominant = false;
  bool normal = false;
  bool index = false;
  bool algebra = false;
  bool exact = false;
  bool classify = false;
  bool any() const { return dominant || normal || index || algebra || exact || classify; }
};

std::string normal_line(const fusion::NormalityResult& n) {
  if (n.normal) return "normal: true";
  std::string out = "normal: false";
  if (n.first_failure) {
    const auto& e = n.evidence.at(*n.first_failure);
    out += " (" + e.label + ": m=" + std::to_string(e.multiplicity) + " ∉ {0," + num(e.dimension) + "})";
  } else if (!n.support_in_kernel) {
    out += " (support of A leaves the kernel)";
  }
  return out;
}

std::string index_text(const fusion::RingMorphism& f, double index) {
  const auto a = fusion::induced_algebra(f);
  if (a.exact_fpdim) return std::to_string(*a.exact_fpdim);
  return num(index);
}

int cmd_morphism(const Common& c, const std::string& ref, const MorphismChecks& checks) {
  fusion::MorphismOptions options;
  options.dims = dim_options(c);

  std::optional<fusion::RingMorphism> f;
  try {
    f = fusion::io::resolve_morphism(ref, options);
  } catch (const fusion::MorphismValidationError& e) {
    if (c.json) {
      emit({{"schema_version", fusion::io::kReportSchemaVersion},
            {"kind", "morphism_report"},
            {"ref", ref},
            {"valid", false},
            {"axiom", std::string(fusion::to_string(e.axiom()))},
            {"message", e.what()},
            {"tolerance", c.tolerance}});
    } else {
      std::cout << "invalid morphism: " << e.what() << '\n';
    }
    return kCheckFailed;
  } catch (const fusion::RingValidationError& e) {
    std::cout << "invalid ring: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const std::exception& e) {
    return io_failure(e);
  }

  bool ok = true;
  std::vector<std::string> lines;
  json report{{"schema_version", fusion::io::kReportSchemaVersion},
              {"kind", "morphism_report"},
              {"morphism", fusion::io::morphism_to_json(*f)},
              {"valid", true},
              {"tolerance", c.tolerance},
              {"qualifier", std::string(fusion::kRingLevelQualifier)}};
  json results = json::object();

  auto run = [&](bool requested, const char* key, auto&& body) {
    if (!requested) return;
    try {
      body();
    } catch (const fusion::Error& e) {
      ok = false;
      lines.push_back(std::string(key) + ": error: " + e.what());
      results[key] = {{"error", e.what()}};
    }
  };

  run(checks.dominant, "dominant", [&] {
    const bool d = fusion::is_dominant(*f);
    ok = ok && d;
    lines.push_back(std::string("dominant: ") + (d ? "true" : "false"));
    results["dominant"] = d;
  });
  run(checks.index, "index", [&] {
    const double q = fusion::fp_index(*f);
    lines.push_back("index: " + index_text(*f, q));
    results["index"] = q;
  });
  run(checks.algebra, "algebra", [&] {
    const auto a = fusion::induced_algebra(*f);
    lines.push_back("algebra: A = " + vector_text(a.vector) + " (FPdim " + num(a.fpdim) + ")");
    results["algebra"] = fusion::io::json_report(a);
  });
  run(checks.normal, "normal", [&] {
    const auto n = fusion::is_normal(*f);
    ok = ok && n.normal;
    lines.push_back(normal_line(n));
    results["normal"] = fusion::io::json_report(n);
  });
  run(checks.exact, "exact", [&] {
    const auto cert = fusion::exact_sequence_certificate(*f);
    ok = ok && cert.certified;
    std::string line = std::string("exact: ") + (cert.certified ? "certified, " : "not certified, ") +
                       cert.multiplicativity_summary();
    if (!cert.certified && !cert.notes.empty()) line += " (" + cert.notes.front() + ")";
    lines.push_back(line);
    results["exact"] = fusion::io::json_report(cert);
  });
  run(checks.classify, "classify", [&] {
    const auto r = fusion::small_index_classification(*f);
    const std::string idx = r.integer_index ? std::to_string(*r.integer_index) : num(r.index);
    lines.push_back("classify: index " + idx + "; " + r.label);
    results["classify"] = fusion::io::json_report(r);
  });

  if (c.json) {
    report["checks"] = std::move(results);
    report["ok"] = ok;
    emit(report);
  } else {
    std::cout << f->name() << ": " << f->source().name() << " -> " << f->target().name() << '\n';
    if (!checks.any()) std::cout << "valid morphism\n";
    for (const auto& l : lines) std::cout << l << '\n';
    if (checks.any()) std::cout << "(" << fusion::kRingLevelQualifier << ")\n";
  }
  return ok ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------------------

void print_obstructions(const std::vector<fusion::Obstruction>& obs) {
  for (const auto& o : obs) std::cout << "      " << fusion::to_string(o.rule) << ": " << o.explanation << '\n';
}

std::string quotient_text(const fusion::SubringIndex& q) {
  return q.exact ? q.exact->to_string() : num(q.value) + " (numeric)";
}

void print_verdict(const fusion::FusionRing& ring, const fusion::SimplicityVerdict& v) {
  std::cout << "verdict: " << fusion::to_string(v.status) << '\n';
  if (v.candidates.empty()) std::cout << "  no proper nontrivial subrings\n";
  for (const auto& t : v.candidates) {
    std::cout << "  candidate " << indices_text(ring, t.subring.indices()) << ": quotient dim "
              << quotient_text(t.quotient);
    if (t.obstructions.empty()) {
      std::cout << ", unobstructed\n";
    } else {
      std::cout << ", obstructed by";
      for (const auto& o : t.obstructions) std::cout << ' ' << fusion::to_string(o.rule);
      std::cout << '\n';
      print_obstructions(t.obstructions);
    }
  }
  for (const auto& w : v.witnesses)
    std::cout << "  witness " << w.name << ": " << (w.accepted ? "accepted" : "rejected") << " (" << w.reason
              << ")\n";
}

int cmd_analyze(const Common& c, const std::string& ref, const std::string& mode,
                const std::vector<std::string>& witness_refs) {
  try {
    const auto ring = fusion::io::resolve_ring(ref, c.group);
    const auto options = analysis_options(c);

    if (mode == "subrings") {
      const auto subs = fusion::enumerate_subrings(ring, c.max_rank);
      const auto dims = fusion::fp_dimensions(ring, options.dims);
      if (c.json) {
        json list = json::array();
        for (const auto& s : subs) {
          json entry = fusion::io::json_report(s);
          entry["index"] = fusion::io::json_report(fusion::subcategory_index(s, dims));
          list.push_back(std::move(entry));
        }
        emit({{"schema_version", fusion::io::kReportSchemaVersion},
              {"kind", "subring_lattice"},
              {"ring", ring.name()},
              {"count", subs.size()},
              {"subrings", std::move(list)},
              {"tolerance", c.tolerance}});
      } else {
        std::cout << ring.name() << ": " << subs.size() << " subrings\n";
        for (const auto& s : subs)
          std::cout << "  " << indices_text(ring, s.indices()) << "  rank " << s.size() << "  index "
                    << quotient_text(fusion::subcategory_index(s, dims)) << '\n';
      }
      return kOk;
    }

    if (mode == "simplicity") {
      fusion::MorphismOptions mopts;
      mopts.dims = options.dims;
      std::vector<fusion::RingMorphism> witnesses;
      for (const auto& w : witness_refs) witnesses.push_back(fusion::io::resolve_morphism(w, mopts));
      const auto v = fusion::simplicity_check(ring, witnesses, options);
      if (c.json) {
        json out = fusion::io::json_report(v);
        out["ring"] = ring.name();
        emit(out);
      } else {
        std::cout << ring.name() << '\n';
        print_verdict(ring, v);
      }
      return kOk;
    }

    const auto r = fusion::ty_report(ring, options);
    if (c.json) {
      json out = fusion::io::json_report(r);
      out["ring"] = ring.name();
      emit(out);
    } else {
      std::cout << ring.name() << '\n'
                << "  Gamma: " << r.gamma_structure << " (order " << r.gamma_order << ")\n"
                << "  FPdim " << ring.label(r.x) << " = " << num(r.x_dim)
                << (r.x_dim_exact ? "  [exact: squared = |Gamma|]" : "") << '\n'
                << "  pointed part index: " << quotient_text(r.pointed_index) << '\n'
                << "  |Gamma| square: " << (r.gamma_is_square ? "yes" : "no")
                << ", prime: " << (r.gamma_is_prime ? "yes" : "no") << '\n'
                << "  pointed part not normal: " << (r.pointed_not_normal ? "yes" : "undecided") << '\n';
      print_obstructions(r.pointed_obstructions);
      print_verdict(ring, r.simplicity);
    }
    return kOk;
  } catch (const fusion::RankBoundExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRankBound;
  } catch (const fusion::RingValidationError& e) {
    std::cerr << "invalid: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const fusion::MorphismValidationError& e) {
    std::cerr << "invalid witness: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const fusion::NotTambaraYamagami& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const std::exception& e) {
    return io_failure(e);
  }
}

// ---------------------------------------------------------------------------

int cmd_list(const Common& c) {
  const auto rings = fusion::builtin_ring_names();
  const auto morphisms = fusion::builtin_morphism_names();
  const auto groups = fusion::catalog_group_names();
  if (c.json) {
    emit({{"schema_version", fusion::io::kReportSchemaVersion},
          {"kind", "catalog"},
          {"rings", rings},
          {"families", {"ty", "group"}},
          {"morphisms", morphisms},
          {"groups", groups}});
    return kOk;
  }
  std::cout << "rings:\n";
  for (const auto& r : rings) std::cout << "  catalog:" << r << '\n';
  std::cout << "  catalog:ty[:<group>]     (or --group <group>)\n"
            << "  catalog:group[:<group>]  (or --group <group>)\n"
            << "morphisms:\n";
  for (const auto& m : morphisms) std::cout << "  catalog:" << m << '\n';
  std::cout << "groups:\n ";
  for (const auto& g : groups) std::cout << ' ' << g;
  std::cout << "\n  (also Zn, Dn, Sn, An, products AxB and powers A^k up to order 64)\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fusion ring toolkit"};
  app.require_subcommand(0, 1);
  app.fallthrough();

  Common common;
  bool list = false;
  app.add_flag("--list", list, "List catalog rings, morphisms and groups");
  app.add_flag("--json", common.json, "Emit a JSON report");
  app.add_option("--tolerance", common.tolerance, "Numeric tolerance")->check(CLI::PositiveNumber);
  app.add_option("--max-rank", common.max_rank, "Rank bound for subring enumeration")->check(CLI::Range(1, 1 << 20));
  app.add_option("--group,--name", common.group, "Group for catalog:ty / catalog:group");

  std::string ref;

  auto* validate = app.add_subcommand("validate", "Check the fusion-ring axioms");
  validate->add_option("ring", ref, "Ring file or catalog:<name>")->required();

  auto* dims = app.add_subcommand("dims", "Frobenius-Perron dimensions");
  dims->add_option("ring", ref, "Ring file or catalog:<name>")->required();

  MorphismChecks checks;
  bool all = false;
  auto* morphism = app.add_subcommand("morphism", "Check a ring morphism");
  morphism->add_option("morphism", ref, "Morphism file or catalog:<name>")->required();
  morphism->add_flag("--dominant", checks.dominant, "Surjectivity on simples");
  morphism->add_flag("--normal", checks.normal, "Normality of the induced algebra");
  morphism->add_flag("--index", checks.index, "Frobenius-Perron index");
  morphism->add_flag("--algebra", checks.algebra, "Induced algebra");
  morphism->add_flag("--exact", checks.exact, "Exact-sequence certificate");
  morphism->add_flag("--classify", checks.classify, "Small-index classification");
  morphism->add_flag("--all", all, "Every check");

  std::string mode = "simplicity";
  std::vector<std::string> witnesses;
  auto* analyze = app.add_subcommand("analyze", "Subring lattice, simplicity or Tambara-Yamagami analysis");
  analyze->add_option("ring", ref, "Ring file or catalog:<name>")->required();
  analyze->add_option("--mode", mode, "subrings | simplicity | ty")
      ->check(CLI::IsMember({"subrings", "simplicity", "ty"}));
  analyze->add_option("--witness", witnesses, "Morphism proposed as an exact-sequence witness");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kIoError;
  }

  if (list) return cmd_list(common);
  if (*validate) return cmd_validate(common, ref);
  if (*dims) return cmd_dims(common, ref);
  if (*morphism) {
    if (all) checks = {true, true, true, true, true, true};
    return cmd_morphism(common, ref, checks);
  }
  if (*analyze) return cmd_analyze(common, ref, mode, witnesses);

  std::cerr << app.help();
  return kIoError;
}
