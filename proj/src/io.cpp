#include "unicover/io.hpp"

#include <algorithm>
#include <sstream>

namespace unicover::io {

namespace {

long index_of(const std::vector<long>& labels, long label) {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) {
    std::ostringstream os;
    os << "label " << label << " is not in the carrier";
    throw input_error(os.str());
  }
  return static_cast<long>(it - labels.begin());
}

FiniteRegion parse_region(const json& j, const std::vector<long>& labels, const FiniteSetAlgebra& alg) {
  if (!j.is_array()) throw input_error("a region must be a list of carrier labels");
  FiniteRegion r(alg.size());
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw input_error("carrier labels must be integers");
    r.set(static_cast<std::size_t>(index_of(labels, e.get<long>())));
  }
  return r;
}

json region_to_json(const FiniteRegion& r, const std::vector<long>& labels) {
  json out = json::array();
  for (auto i = r.find_first(); i != FiniteRegion::npos; i = r.find_next(i)) out.push_back(labels[i]);
  return out;
}

FiniteCover parse_cover(const json& j, const std::vector<long>& labels, const FiniteSetAlgebra& alg) {
  if (!j.is_array() || j.empty()) throw input_error("a cover must be a nonempty list of regions");
  std::vector<FiniteRegion> regions;
  for (const auto& e : j) regions.push_back(parse_region(e, labels, alg));
  try {
    return FiniteCover(alg, std::move(regions));
  } catch (const std::invalid_argument& e) {
    throw input_error(e.what());
  }
}

json cover_to_json(const FiniteCover& c, const std::vector<long>& labels) {
  json out = json::array();
  for (const auto& r : c.regions()) out.push_back(region_to_json(r, labels));
  return out;
}

}  // namespace

SetSystem parse_set_system(const json& j) {
  if (!j.is_object()) throw input_error("set-system file must be a JSON object");
  if (!j.contains("carrier") || !j["carrier"].is_array() || j["carrier"].empty())
    throw input_error("missing carrier (a nonempty list of integers)");
  std::vector<long> labels;
  for (const auto& e : j["carrier"]) {
    if (!e.is_number_integer()) throw input_error("carrier labels must be integers");
    long label = e.get<long>();
    if (std::find(labels.begin(), labels.end(), label) != labels.end())
      throw input_error("duplicate carrier label");
    labels.push_back(label);
  }

  SetSystem s{labels, FiniteSetAlgebra(labels.size()), {}, {}, {}, {}, {}};

  if (!j.contains("covers") || !j["covers"].is_array() || j["covers"].empty())
    throw input_error("missing covers (a nonempty list of covers)");
  for (const auto& e : j["covers"]) s.covers.push_back(parse_cover(e, labels, s.alg));

  if (j.contains("shrinks")) {
    s.has_shrinks = true;
    if (!j["shrinks"].is_array() || j["shrinks"].size() != s.covers.size())
      throw input_error("shrinks must be a list aligned with the covers");
    for (const auto& e : j["shrinks"]) s.shrinks.push_back(parse_cover(e, labels, s.alg));
  }

  if (j.contains("entourages")) {
    s.has_entourages = true;
    if (!j["entourages"].is_array() || j["entourages"].empty())
      throw input_error("entourages must be a nonempty list of pair lists");
    for (const auto& e : j["entourages"]) {
      if (!e.is_array()) throw input_error("an entourage is a list of label pairs");
      Entourage ent(labels.size());
      for (const auto& pair : e) {
        if (!pair.is_array() || pair.size() != 2) throw input_error("entourage pairs are 2-lists");
        ent.set(static_cast<std::size_t>(index_of(labels, pair[0].get<long>())),
                static_cast<std::size_t>(index_of(labels, pair[1].get<long>())));
      }
      s.entourages.push_back(std::move(ent));
    }
  }

  if (j.contains("region_base") != j.contains("topology"))
    throw input_error("region_base and topology must be supplied together");
  if (j.contains("region_base")) {
    s.has_topology = true;
    for (const auto& e : j["region_base"]) s.region_base.push_back(parse_region(e, labels, s.alg));
    for (const auto& e : j["topology"]) s.topology.push_back(parse_region(e, labels, s.alg));
  }
  return s;
}

json set_system_to_json(const SetSystem& s) {
  json out;
  out["carrier"] = s.labels;
  out["covers"] = json::array();
  for (const auto& c : s.covers) out["covers"].push_back(cover_to_json(c, s.labels));
  if (s.has_shrinks) {
    out["shrinks"] = json::array();
    for (const auto& c : s.shrinks) out["shrinks"].push_back(cover_to_json(c, s.labels));
  }
  if (s.has_entourages) {
    out["entourages"] = json::array();
    for (const auto& e : s.entourages) {
      json pairs = json::array();
      for (auto [x, y] : e.pairs()) pairs.push_back({s.labels[x], s.labels[y]});
      out["entourages"].push_back(std::move(pairs));
    }
  }
  if (s.has_topology) {
    out["region_base"] = json::array();
    for (const auto& r : s.region_base) out["region_base"].push_back(region_to_json(r, s.labels));
    out["topology"] = json::array();
    for (const auto& r : s.topology) out["topology"].push_back(region_to_json(r, s.labels));
  }
  return out;
}

namespace {

disc::ConstraintOp parse_op(const std::string& op) {
  if (op == "<") return disc::ConstraintOp::LT;
  if (op == "<=" || op == "≤") return disc::ConstraintOp::LE;
  if (op == ">") return disc::ConstraintOp::GT;
  if (op == ">=" || op == "≥") return disc::ConstraintOp::GE;
  throw input_error("unknown constraint op '" + op + "'");
}

std::string op_to_string(disc::ConstraintOp op) {
  switch (op) {
    case disc::ConstraintOp::LT: return "<";
    case disc::ConstraintOp::LE: return "≤";
    case disc::ConstraintOp::GT: return ">";
    case disc::ConstraintOp::GE: return "≥";
  }
  return "?";
}

Rat parse_rat_string(const json& j, const char* what) {
  if (!j.is_string()) throw input_error(std::string(what) + " must be a rational string");
  try {
    return rat_from_string(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw input_error(e.what());
  }
}

disc::Constraint parse_constraint(const json& j, long prime) {
  if (!j.is_object() || !j.contains("poly") || !j.contains("bound_exponent") || !j.contains("op"))
    throw input_error("a constraint needs poly, bound_exponent and op");
  const json& jp = j["poly"];
  if (!jp.is_object() || !jp.contains("lead") || !jp.contains("roots"))
    throw input_error("a poly needs lead and roots");
  Rat lead = parse_rat_string(jp["lead"], "lead");
  disc::FactoredPoly::RootList roots;
  for (const auto& e : jp["roots"]) {
    if (!e.is_array() || e.size() != 2 || !e[1].is_number_integer())
      throw input_error("a root is a [rational-string, multiplicity] pair");
    roots.emplace_back(parse_rat_string(e[0], "root"), e[1].get<long>());
  }
  try {
    disc::FactoredPoly poly(std::move(lead), std::move(roots));
    AbsValue bound(prime, parse_rat_string(j["bound_exponent"], "bound_exponent"));
    return disc::Constraint(std::move(poly), std::move(bound), parse_op(j["op"].get<std::string>()));
  } catch (const std::invalid_argument& e) {
    throw input_error(e.what());
  }
}

json constraint_to_json(const disc::Constraint& c) {
  json jp;
  jp["lead"] = rat_to_string(c.poly.lead());
  jp["roots"] = json::array();
  for (const auto& [root, mult] : c.poly.roots()) jp["roots"].push_back({rat_to_string(root), mult});
  json out;
  out["poly"] = std::move(jp);
  out["bound_exponent"] = c.bound.exponent_string();
  out["op"] = op_to_string(c.op);
  return out;
}

}  // namespace

DiscCover parse_disc_cover(const json& j) {
  if (!j.is_object() || !j.contains("prime") || !j.contains("domains"))
    throw input_error("disc-cover file needs prime and domains");
  if (!j["prime"].is_number_integer()) throw input_error("prime must be an integer");
  DiscCover dc;
  dc.prime = j["prime"].get<long>();
  if (!is_prime(dc.prime)) throw input_error("prime must be a prime number");
  if (!j["domains"].is_array() || j["domains"].empty())
    throw input_error("domains must be a nonempty list of constraint lists");
  for (const auto& e : j["domains"]) {
    if (!e.is_array()) throw input_error("a domain is a list of constraints");
    std::vector<disc::Constraint> cs;
    for (const auto& c : e) cs.push_back(parse_constraint(c, dc.prime));
    dc.domains.emplace_back(dc.prime, std::move(cs));
  }
  return dc;
}

json disc_cover_to_json(const DiscCover& dc) {
  json out;
  out["prime"] = dc.prime;
  out["domains"] = json::array();
  for (const auto& d : dc.domains) {
    json constraints = json::array();
    for (const auto& c : d.constraints()) constraints.push_back(constraint_to_json(c));
    out["domains"].push_back(std::move(constraints));
  }
  return out;
}

NestInput parse_nest(const json& j) {
  if (!j.is_object() || !j.contains("prime") || !j.contains("disks"))
    throw input_error("nest file needs prime and disks");
  NestInput n;
  n.prime = j["prime"].get<long>();
  if (!is_prime(n.prime)) throw input_error("prime must be a prime number");
  if (!j["disks"].is_array() || j["disks"].empty()) throw input_error("disks must be a nonempty list");
  for (const auto& e : j["disks"]) {
    if (!e.is_object() || !e.contains("center") || !e.contains("radius_exponent"))
      throw input_error("a disk needs center and radius_exponent");
    Rat center = parse_rat_string(e["center"], "center");
    if (!e["radius_exponent"].is_string()) throw input_error("radius_exponent must be a string");
    AbsValue radius = AbsValue::from_exponent_string(n.prime, e["radius_exponent"].get<std::string>());
    n.disks.emplace_back(std::move(center), std::move(radius));
  }
  if (j.contains("declaration") && !j["declaration"].is_null()) {
    std::string d = j["declaration"].get<std::string>();
    if (d == "empty-intersection")
      n.declaration = disc::NestDeclaration::EmptyIntersection;
    else if (d == "irrational-cut")
      n.declaration = disc::NestDeclaration::IrrationalCut;
    else
      throw input_error("unknown declaration '" + d + "'");
  }
  return n;
}

json check_item_to_json(const CheckItem& item) {
  json out;
  out["axiom"] = item.axiom;
  out["status"] = item.holds ? "pass" : "fail";
  out["witness"] = item.detail;
  return out;
}

std::string describe_point(const disc::BerkPoint& x) {
  std::ostringstream os;
  switch (x.kind()) {
    case disc::BerkPoint::Kind::I:
      os << "type I point " << rat_to_string(x.disk().center());
      break;
    case disc::BerkPoint::Kind::II:
      os << "type II point D(" << rat_to_string(x.disk().center()) << ", p^-("
         << x.disk().radius().exponent_string() << "))";
      break;
    case disc::BerkPoint::Kind::IV:
      os << "type IV point with a prefix of " << x.prefix().size() << " disks ending at D("
         << rat_to_string(x.deepest().center()) << ", p^-(" << x.deepest().radius().exponent_string()
         << "))";
      break;
  }
  return os.str();
}

}  // namespace unicover::io
