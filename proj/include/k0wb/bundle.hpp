#pragma once

#include <map>
#include <string>
#include <vector>

#include "k0wb/fincat.hpp"

// A category together with its named structures, subcategories and
// flags: the unit of file I/O and the input to every checker.

namespace k0wb {

struct WeqSpec {
  enum class Kind { IsoOnly, Generated, Predicate };
  Kind kind = Kind::IsoOnly;
  std::vector<fincat::Mor> generators;  // Generated kind
  int depth = 3;                        // composition-closure bound
  bool include_isos = true;             // dropped only by engineered mutations
  std::string predicate;                // Predicate kind, e.g. "SN"
  std::string predicate_subcat;         // subcategory name the predicate refers to

  auto operator<=>(const WeqSpec&) const = default;
};

struct StructureData {
  std::vector<fincat::SequenceTriple> seq_generators;
  WeqSpec weq;
  bool include_splits = true;                    // split closure of the sequence class
  std::vector<fincat::SequenceTriple> seq_probes;  // declared members, checked under WC1

  auto operator<=>(const StructureData&) const = default;
};

struct BundleFlags {
  bool triangulated = false;
  bool bi_directional = false;
  std::vector<int> injectives;  // declared E-injective indecomposables

  auto operator<=>(const BundleFlags&) const = default;
};

struct Bundle {
  std::string name;
  fincat::FinCategory cat;
  std::map<std::string, StructureData> structures;
  std::map<std::string, std::vector<int>> subcategories;
  BundleFlags flags;
  std::string provenance;

  const StructureData& structure(const std::string& key) const;
  const std::vector<int>& subcategory(const std::string& key) const;

  // Semantic validation: the category invariants plus the stored-
  // conflation gate (weak cokernel, and the dual for bi-directional
  // bundles). Throws fincat::ValidationError on failure.
  void validate() const;
};

}  // namespace k0wb
