#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "fusion/analysis.hpp"
#include "fusion/dimensions.hpp"
#include "fusion/group.hpp"
#include "fusion/morphism.hpp"
#include "fusion/ring.hpp"

namespace fusion::io {

using json = nlohmann::json;

/// Schema version stamped into every report.
inline constexpr int kReportSchemaVersion = 1;

// ---------------------------------------------------------------------------
// Ring files: {"name", "rank", "labels", "unit", "dual", "N": [[i,j,k,v], ...]}

/// Structural parse only (ParseError); axioms are checked by validate_ring.
RawRing raw_ring_from_json(const json& j);
FusionRing ring_from_json(const json& j);
json ring_to_json(const FusionRing& ring);

json read_json_file(const std::filesystem::path& path);
FusionRing load_ring_file(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Group tables: {"order", "mult": [[...]], "identity", optional "labels"}

GroupTable group_table_from_json(const json& j);
json group_table_to_json(const GroupTable& g);

/// A group name ("Z3", "V4", ...) or a path to a group-table JSON file.
GroupTable resolve_group(std::string_view name_or_path);

// ---------------------------------------------------------------------------
// Ring references
//
//   catalog:<builtin>               fibonacci, ising, rep_S3, trivial
//   catalog:ty[:<group>]            Tambara-Yamagami ring of a named group
//   catalog:group[:<group>]         group ring of a named group
//   <path>                          ring JSON file
//
// `group` supplies the group for catalog:ty / catalog:group when it is not
// given inline. Relative paths resolve against `base_dir`.

FusionRing resolve_ring(std::string_view ref, std::optional<std::string> group = std::nullopt,
                        const std::filesystem::path& base_dir = {});

// ---------------------------------------------------------------------------
// Morphism files: {"source": ref, "target": ref, "images": [[...], ...]}
// with optional "name". Refs resolve as above, relative to the file.

RingMorphism morphism_from_json(const json& j, const MorphismOptions& options = {},
                                const std::filesystem::path& base_dir = {});
json morphism_to_json(const RingMorphism& f);
RingMorphism load_morphism_file(const std::filesystem::path& path, const MorphismOptions& options = {});

/// catalog:<builtin morphism> or a morphism file path.
RingMorphism resolve_morphism(std::string_view ref, const MorphismOptions& options = {});

// ---------------------------------------------------------------------------
// Reports (schemas in docs/schemas.md)

json json_report(const FusionRing& ring, const DimensionData& dims);
json json_report(const Subring& s);
json json_report(const NormalityResult& n);
json json_report(const InducedAlgebra& a);
json json_report(const ExactSequenceCertificate& c);
json json_report(const SumOfInvertiblesReport& r);
json json_report(const SmallIndexReport& r);
json json_report(const SubringIndex& q);
json json_report(const Obstruction& o);
json json_report(const SimplicityVerdict& v);
json json_report(const TambaraYamagamiReport& r);

}  // namespace fusion::io
