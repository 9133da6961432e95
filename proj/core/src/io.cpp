#include "fusion/io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include "fusion/catalog.hpp"
#include "fusion/error.hpp"

namespace fusion::io {

namespace {

constexpr std::string_view kCatalogScheme = "catalog:";

template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return it->get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("field '") + key + "' has the wrong type: " + e.what());
  }
}

std::size_t nonnegative_index(const json& v, const char* what) {
  if (!v.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  const auto x = v.get<std::int64_t>();
  if (x < 0) throw ParseError(std::string(what) + " must be nonnegative");
  return static_cast<std::size_t>(x);
}

json optional_int(const std::optional<std::int64_t>& v) { return v ? json(*v) : json(nullptr); }

json rational_json(const std::optional<exact::Rational>& r) {
  if (!r) return nullptr;
  return json{{"num", r->num}, {"den", r->den}};
}

json indices_json(const std::vector<Index>& v) {
  json a = json::array();
  for (Index i : v) a.push_back(i);
  return a;
}

}  // namespace

// ---------------------------------------------------------------------------
// Rings

RawRing raw_ring_from_json(const json& j) {
  RawRing raw;
  raw.name = j.contains("name") ? field<std::string>(j, "name") : std::string("unnamed");
  raw.rank = nonnegative_index(j.contains("rank") ? j.at("rank") : json(), "rank");
  raw.labels = field<std::vector<std::string>>(j, "labels");
  raw.unit = j.contains("unit") ? nonnegative_index(j.at("unit"), "unit") : 0;
  const auto dual = field<json>(j, "dual");
  if (!dual.is_array()) throw ParseError("'dual' must be an array");
  for (const auto& d : dual) raw.dual.push_back(nonnegative_index(d, "dual entry"));

  const auto n = field<json>(j, "N");
  if (!n.is_array()) throw ParseError("'N' must be an array of [i, j, k, value] entries");
  std::set<std::tuple<Index, Index, Index>> seen;
  for (const auto& e : n) {
    if (!e.is_array() || e.size() != 4) throw ParseError("each 'N' entry must be [i, j, k, value]");
    RawRing::Entry entry{nonnegative_index(e[0], "i"), nonnegative_index(e[1], "j"), nonnegative_index(e[2], "k"),
                         0};
    if (!e[3].is_number_integer()) throw ParseError("structure constant values must be integers");
    entry.value = e[3].get<std::int64_t>();
    if (!seen.emplace(entry.i, entry.j, entry.k).second)
      throw ParseError("duplicate structure constant triple (" + std::to_string(entry.i) + ", " +
                       std::to_string(entry.j) + ", " + std::to_string(entry.k) + ")");
    raw.constants.push_back(entry);
  }
  return raw;
}

FusionRing ring_from_json(const json& j) { return validate_ring(raw_ring_from_json(j)); }

json ring_to_json(const FusionRing& ring) {
  json n = json::array();
  for (Index i = 0; i < ring.rank(); ++i)
    for (Index j = 0; j < ring.rank(); ++j)
      for (const auto& t : ring.product(i, j)) n.push_back({i, j, t.simple, t.multiplicity});
  return json{{"name", ring.name()}, {"rank", ring.rank()},  {"labels", ring.labels()},
              {"unit", ring.unit()}, {"dual", ring.duals()}, {"N", std::move(n)}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

FusionRing load_ring_file(const std::filesystem::path& path) {
  const json j = read_json_file(path);
  RawRing raw = raw_ring_from_json(j);
  if (!j.contains("name")) raw.name = path.stem().string();
  return validate_ring(raw);
}

// ---------------------------------------------------------------------------
// Groups

GroupTable group_table_from_json(const json& j) {
  const auto order = nonnegative_index(j.contains("order") ? j.at("order") : json(), "order");
  const auto mult_json = field<json>(j, "mult");
  if (!mult_json.is_array() || mult_json.size() != order)
    throw ParseError("'mult' must be an order x order array");
  std::vector<std::vector<Index>> mult;
  for (const auto& row : mult_json) {
    if (!row.is_array() || row.size() != order) throw ParseError("'mult' must be an order x order array");
    std::vector<Index> r;
    for (const auto& v : row) r.push_back(nonnegative_index(v, "mult entry"));
    mult.push_back(std::move(r));
  }
  const Index identity = j.contains("identity") ? nonnegative_index(j.at("identity"), "identity") : 0;
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = field<std::vector<std::string>>(j, "labels");
  return GroupTable(std::move(mult), identity, std::move(labels));
}

json group_table_to_json(const GroupTable& g) {
  return json{{"order", g.order()}, {"mult", g.table()}, {"identity", g.identity()}, {"labels", g.labels()}};
}

GroupTable resolve_group(std::string_view name_or_path) {
  const std::filesystem::path p{std::string(name_or_path)};
  if (name_or_path.find('/') != std::string_view::npos || p.extension() == ".json")
    return group_table_from_json(read_json_file(p));
  return named_group(name_or_path);
}

// ---------------------------------------------------------------------------
// References

FusionRing resolve_ring(std::string_view ref, std::optional<std::string> group,
                        const std::filesystem::path& base_dir) {
  if (ref.substr(0, kCatalogScheme.size()) != kCatalogScheme) {
    std::filesystem::path p{std::string(ref)};
    if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
    return load_ring_file(p);
  }
  std::string_view name = ref.substr(kCatalogScheme.size());
  if (const auto colon = name.find(':'); colon != std::string_view::npos) {
    group = std::string(name.substr(colon + 1));
    name = name.substr(0, colon);
  }
  if (name == "ty" || name == "group") {
    if (!group) throw ParseError("catalog:" + std::string(name) + " needs a group (e.g. --group Z3)");
    const GroupTable g = resolve_group(*group);
    return name == "ty" ? tambara_yamagami(g) : group_ring(g);
  }
  return builtin_ring(name);
}

RingMorphism morphism_from_json(const json& j, const MorphismOptions& options,
                                const std::filesystem::path& base_dir) {
  auto ring_of = [&](const char* key) {
    const auto v = field<json>(j, key);
    if (v.is_string()) return resolve_ring(v.get<std::string>(), std::nullopt, base_dir);
    if (v.is_object()) return ring_from_json(v);
    throw ParseError(std::string("'") + key + "' must be a ring reference or an inline ring");
  };
  FusionRing source = ring_of("source");
  FusionRing target = ring_of("target");
  const auto images_json = field<json>(j, "images");
  if (!images_json.is_array()) throw ParseError("'images' must be an array of rows");
  std::vector<std::vector<Multiplicity>> images;
  for (const auto& row : images_json) {
    if (!row.is_array()) throw ParseError("each image must be an array of coefficients");
    std::vector<Multiplicity> r;
    for (const auto& c : row) {
      if (!c.is_number_integer()) throw ParseError("image coefficients must be integers");
      r.push_back(c.get<Multiplicity>());
    }
    images.push_back(std::move(r));
  }
  std::string name = j.contains("name") ? field<std::string>(j, "name") : std::string();
  return validate_morphism(std::move(source), std::move(target), std::move(images), options, std::move(name));
}

json morphism_to_json(const RingMorphism& f) {
  return json{{"name", f.name()},
              {"source", ring_to_json(f.source())},
              {"target", ring_to_json(f.target())},
              {"images", f.image_rows()}};
}

RingMorphism load_morphism_file(const std::filesystem::path& path, const MorphismOptions& options) {
  json j = read_json_file(path);
  if (j.is_object() && !j.contains("name")) j["name"] = path.stem().string();
  return morphism_from_json(j, options, path.parent_path());
}

RingMorphism resolve_morphism(std::string_view ref, const MorphismOptions& options) {
  if (ref.substr(0, kCatalogScheme.size()) == kCatalogScheme)
    return builtin_morphism(ref.substr(kCatalogScheme.size()), options);
  return load_morphism_file(std::filesystem::path{std::string(ref)}, options);
}

// ---------------------------------------------------------------------------
// Reports

json json_report(const FusionRing& ring, const DimensionData& dims) {
  json per = json::array();
  for (Index i = 0; i < ring.rank(); ++i) per.push_back({{"label", ring.label(i)}, {"fpdim", dims[i]}});
  json out{{"schema_version", kReportSchemaVersion},
           {"kind", "dimensions"},
           {"ring", ring.name()},
           {"rank", ring.rank()},
           {"per_simple", std::move(per)},
           {"global", dims.global},
           {"tolerance", dims.tolerance},
           {"integral", dims.integral},
           {"weakly_integral", dims.weakly_integral},
           {"weak_integrality", std::string(to_string(dims.weak_integrality))},
           {"exact_global", optional_int(dims.exact_global)},
           {"iterations", dims.iterations},
           {"residual", dims.residual}};
  out["integer_dims"] = dims.integer_dims ? json(*dims.integer_dims) : json(nullptr);
  out["squared_dims"] = dims.squared_dims ? json(*dims.squared_dims) : json(nullptr);
  return out;
}

json json_report(const Subring& s) {
  json labels = json::array();
  for (Index i : s.indices()) labels.push_back(s.ring().label(i));
  return json{{"indices", indices_json(s.indices())}, {"labels", std::move(labels)}, {"rank", s.size()}};
}

json json_report(const NormalityResult& n) {
  json ev = json::array();
  for (const auto& e : n.evidence)
    ev.push_back({{"simple", e.simple},
                  {"label", e.label},
                  {"multiplicity", e.multiplicity},
                  {"fpdim", e.dimension},
                  {"fpdim_integral", e.dimension_integral},
                  {"ok", e.ok}});
  return json{{"normal", n.normal},
              {"support_in_kernel", n.support_in_kernel},
              {"criteria_agree", n.criteria_agree()},
              {"evidence", std::move(ev)}};
}

json json_report(const InducedAlgebra& a) {
  json coeffs = json::array();
  for (auto c : a.vector.coeffs()) coeffs.push_back(c);
  return json{{"coefficients", std::move(coeffs)},
              {"support", indices_json(a.vector.support())},
              {"fpdim", a.fpdim},
              {"exact_fpdim", optional_int(a.exact_fpdim)}};
}

json json_report(const ExactSequenceCertificate& c) {
  return json{{"schema_version", kReportSchemaVersion},
              {"kind", "exact_sequence_certificate"},
              {"morphism", c.morphism},
              {"certified", c.certified},
              {"dominant", c.dominant},
              {"normal", c.normal},
              {"kernel", json_report(c.kernel)},
              {"index", c.index ? json(*c.index) : json(nullptr)},
              {"kernel_fpdim", c.kernel_fpdim},
              {"quotient_fpdim", c.quotient_fpdim},
              {"total_fpdim", c.total_fpdim},
              {"exact_kernel_fpdim", optional_int(c.exact_kernel_fpdim)},
              {"exact_quotient_fpdim", optional_int(c.exact_quotient_fpdim)},
              {"exact_total_fpdim", optional_int(c.exact_total_fpdim)},
              {"multiplicativity_ok", c.multiplicativity_ok},
              {"multiplicativity_exact", c.multiplicativity_exact},
              {"multiplicativity", c.multiplicativity_summary()},
              {"source_weakly_integral", c.source_weakly_integral},
              {"target_weakly_integral", c.target_weakly_integral},
              {"weak_integrality_transfer_ok", c.weak_integrality_transfer_ok},
              {"tolerance", c.tolerance},
              {"notes", c.notes},
              {"qualifier", c.qualifier}};
}

json json_report(const SumOfInvertiblesReport& r) {
  return json{{"applicable", r.applicable},
              {"first_non_invertible", r.first_non_invertible ? json(*r.first_non_invertible) : json(nullptr)},
              {"gamma", indices_json(r.gamma)},
              {"gamma_structure", r.gamma_structure},
              {"gamma_table", r.gamma_table ? group_table_to_json(*r.gamma_table) : json(nullptr)},
              {"multiplicities_one", r.multiplicities_one},
              {"is_group", r.is_group},
              {"normal", r.normal},
              {"kernel_equals_generated", r.kernel_equals_generated},
              {"kernel_pointed", r.kernel_pointed},
              {"holds", r.holds()},
              {"notes", r.notes}};
}

json json_report(const SmallIndexReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"check", c.name}, {"passed", c.passed}});
  return json{{"index", r.index},
              {"integer_index", optional_int(r.integer_index)},
              {"index_exact", r.index_exact},
              {"classification", std::string(to_string(r.kind))},
              {"label", r.label},
              {"prime", optional_int(r.prime)},
              {"checks", std::move(checks)},
              {"observed_normal", r.observed_normal},
              {"notes", r.notes},
              {"qualifier", r.qualifier}};
}

json json_report(const SubringIndex& q) {
  return json{{"value", q.value}, {"exact", rational_json(q.exact)}, {"note", q.note}};
}

json json_report(const Obstruction& o) {
  return json{{"rule", std::string(to_string(o.rule))}, {"explanation", o.explanation}};
}

json json_report(const SimplicityVerdict& v) {
  json candidates = json::array();
  for (const auto& c : v.candidates) {
    json obs = json::array();
    for (const auto& o : c.obstructions) obs.push_back(json_report(o));
    candidates.push_back({{"subring", indices_json(c.subring.indices())},
                          {"quotient_dim", c.quotient.value},
                          {"quotient_dim_exact", rational_json(c.quotient.exact)},
                          {"obstructions", std::move(obs)}});
  }
  json witnesses = json::array();
  for (const auto& w : v.witnesses)
    witnesses.push_back({{"name", w.name},
                         {"source_matches", w.source_matches},
                         {"certified", w.certified},
                         {"kernel", indices_json(w.kernel)},
                         {"accepted", w.accepted},
                         {"reason", w.reason}});
  return json{{"schema_version", kReportSchemaVersion},
              {"kind", "simplicity_verdict"},
              {"status", std::string(to_string(v.status))},
              {"candidates", std::move(candidates)},
              {"witnesses", std::move(witnesses)},
              {"witness", v.witness ? json(*v.witness) : json(nullptr)},
              {"tolerance", v.tolerance}};
}

json json_report(const TambaraYamagamiReport& r) {
  json obs = json::array();
  for (const auto& o : r.pointed_obstructions) obs.push_back(json_report(o));
  return json{{"schema_version", kReportSchemaVersion},
              {"kind", "tambara_yamagami_report"},
              {"gamma_order", r.gamma_order},
              {"gamma_structure", r.gamma_structure},
              {"x", r.x},
              {"x_fpdim", r.x_dim},
              {"x_fpdim_squared_exact", r.x_dim_exact},
              {"pointed_index", json_report(r.pointed_index)},
              {"gamma_is_square", r.gamma_is_square},
              {"gamma_is_prime", r.gamma_is_prime},
              {"pointed_obstructions", std::move(obs)},
              {"pointed_not_normal", r.pointed_not_normal},
              {"simplicity", json_report(r.simplicity)},
              {"tolerance", r.simplicity.tolerance}};
}

}  // namespace fusion::io
