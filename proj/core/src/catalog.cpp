#include "fusion/catalog.hpp"

#include "fusion/error.hpp"

namespace fusion {

FusionRing group_ring(const GroupTable& g, std::string name) {
  RawRing raw;
  raw.name = name.empty() ? "Z[" + g.structure() + "]" : std::move(name);
  raw.rank = g.order();
  raw.labels = g.labels();
  raw.unit = g.identity();
  for (Index a = 0; a < g.order(); ++a) {
    raw.dual.push_back(g.inverse(a));
    for (Index b = 0; b < g.order(); ++b) raw.constants.push_back({a, b, g.multiply(a, b), 1});
  }
  return validate_ring(raw);
}

FusionRing tambara_yamagami(const GroupTable& g, std::string name) {
  if (!g.is_abelian())
    throw NonAbelianGroup("Tambara-Yamagami rings need an abelian group, got " + g.structure());
  const std::size_t n = g.order();
  const Index x = n;
  RawRing raw;
  raw.name = name.empty() ? "TY(" + g.structure() + ")" : std::move(name);
  raw.rank = n + 1;
  raw.labels = g.labels();
  raw.labels.push_back("X");
  raw.unit = g.identity();
  for (Index a = 0; a < n; ++a) {
    raw.dual.push_back(g.inverse(a));
    for (Index b = 0; b < n; ++b) raw.constants.push_back({a, b, g.multiply(a, b), 1});
    raw.constants.push_back({a, x, x, 1});
    raw.constants.push_back({x, a, x, 1});
    raw.constants.push_back({x, x, a, 1});
  }
  raw.dual.push_back(x);
  return validate_ring(raw);
}

namespace {

FusionRing fibonacci() {
  RawRing raw;
  raw.name = "fibonacci";
  raw.rank = 2;
  raw.labels = {"1", "tau"};
  raw.unit = 0;
  raw.dual = {0, 1};
  raw.constants = {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 1}};
  return validate_ring(raw);
}

// Characters of S3 on classes (e, transpositions, 3-cycles):
// 1 = (1,1,1), sgn = (1,-1,1), V = (2,0,-1); V V = 1 + sgn + V.
FusionRing rep_s3() {
  RawRing raw;
  raw.name = "rep_S3";
  raw.rank = 3;
  raw.labels = {"1", "sgn", "V"};
  raw.unit = 0;
  raw.dual = {0, 1, 2};
  raw.constants = {
      {0, 0, 0, 1}, {0, 1, 1, 1}, {0, 2, 2, 1},                //
      {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 2, 2, 1},                //
      {2, 0, 2, 1}, {2, 1, 2, 1}, {2, 2, 0, 1}, {2, 2, 1, 1}, {2, 2, 2, 1},
  };
  return validate_ring(raw);
}

FusionRing trivial_ring() {
  RawRing raw;
  raw.name = "trivial";
  raw.rank = 1;
  raw.labels = {"1"};
  raw.unit = 0;
  raw.dual = {0};
  raw.constants = {{0, 0, 0, 1}};
  return validate_ring(raw);
}

}  // namespace

FusionRing builtin_ring(std::string_view name) {
  if (name == "fibonacci") return fibonacci();
  if (name == "rep_S3") return rep_s3();
  if (name == "trivial") return trivial_ring();
  if (name == "ising") {
    return tambara_yamagami(cyclic_group(2).relabeled({"1", "psi"}), "ising")
        .relabeled("ising", {"1", "psi", "sigma"});
  }
  throw UnknownName("unknown catalog ring '" + std::string(name) + "'");
}

std::vector<std::string> builtin_ring_names() { return {"fibonacci", "ising", "rep_S3", "trivial"}; }

RingMorphism quotient_morphism(const GroupTable& g, std::span<const Index> normal_subgroup,
                               const MorphismOptions& options) {
  std::vector<Index> coset_of;
  const GroupTable q = g.quotient(normal_subgroup, &coset_of);
  const FusionRing source = group_ring(g);
  const FusionRing target = group_ring(q);
  std::vector<std::vector<Multiplicity>> images(g.order(), std::vector<Multiplicity>(q.order(), 0));
  for (Index a = 0; a < g.order(); ++a) images[a][coset_of[a]] = 1;
  return validate_morphism(source, target, std::move(images), options,
                           source.name() + " -> " + target.name());
}

RingMorphism builtin_morphism(std::string_view name, const MorphismOptions& options) {
  if (name == "z4_to_z2") {
    const Index n[] = {0, 2};
    const RingMorphism q = quotient_morphism(cyclic_group(4), n, options);
    return validate_morphism(q.source(), q.target(), q.image_rows(), options, "z4_to_z2");
  }
  if (name == "repS3_res_Z3") {
    // Restriction to A3: sgn is trivial on 3-cycles, V = ω + ω².
    const FusionRing z3 = group_ring(cyclic_group(3).relabeled({"1", "w", "w2"}), "Rep(Z3)");
    return validate_morphism(builtin_ring("rep_S3"), z3, {{1, 0, 0}, {1, 0, 0}, {0, 1, 1}}, options,
                             "repS3_res_Z3");
  }
  if (name == "repS3_res_Z2") {
    // Restriction to a transposition subgroup: sgn = ε, V = 1 + ε.
    const FusionRing z2 = group_ring(cyclic_group(2).relabeled({"1", "eps"}), "Rep(Z2)");
    return validate_morphism(builtin_ring("rep_S3"), z2, {{1, 0}, {0, 1}, {1, 1}}, options, "repS3_res_Z2");
  }
  if (name == "ty4_to_z2") {
    const FusionRing ty = tambara_yamagami(named_group("Z2xZ2"));
    const FusionRing z2 = group_ring(cyclic_group(2).relabeled({"1", "eps"}), "Z[Z2]");
    return validate_morphism(ty, z2, {{1, 0}, {1, 0}, {1, 0}, {1, 0}, {0, 2}}, options, "ty4_to_z2");
  }
  throw UnknownName("unknown catalog morphism '" + std::string(name) + "'");
}

std::vector<std::string> builtin_morphism_names() {
  return {"repS3_res_Z2", "repS3_res_Z3", "ty4_to_z2", "z4_to_z2"};
}

}  // namespace fusion
