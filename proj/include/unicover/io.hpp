#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "unicover/axioms.hpp"
#include "unicover/disc/laurent.hpp"
#include "unicover/entourages.hpp"
#include "unicover/finite.hpp"

namespace unicover::io {

using json = nlohmann::json;

// Raised on malformed or inconsistent input files.
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * A parsed set-system file: the carrier is a list of integer labels,
 * covers are lists of label lists.  Shrinks (aligned with the covers),
 * entourages (pair lists), and a region base with a declared topology are
 * optional sections.
 */
struct SetSystem {
  std::vector<long> labels;
  FiniteSetAlgebra alg;
  std::vector<FiniteCover> covers;
  std::vector<FiniteCover> shrinks;        // empty or one per cover
  std::vector<Entourage> entourages;       // may be empty
  std::vector<FiniteRegion> region_base;   // may be empty
  std::vector<FiniteRegion> topology;      // with region_base
  bool has_shrinks = false;
  bool has_entourages = false;
  bool has_topology = false;
};

SetSystem parse_set_system(const json& j);
json set_system_to_json(const SetSystem& s);

struct DiscCover {
  long prime = 2;
  std::vector<disc::LaurentDomain> domains;
};

DiscCover parse_disc_cover(const json& j);
json disc_cover_to_json(const DiscCover& dc);

struct NestInput {
  long prime = 2;
  std::vector<disc::Disk> disks;
  std::optional<disc::NestDeclaration> declaration;
};

NestInput parse_nest(const json& j);

json check_item_to_json(const CheckItem& item);

std::string describe_point(const disc::BerkPoint& x);

}  // namespace unicover::io
