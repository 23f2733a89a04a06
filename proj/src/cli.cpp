#include "unicover/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "unicover/filters.hpp"
#include "unicover/io.hpp"
#include "unicover/selfcheck.hpp"

namespace unicover::cli {

namespace {

using io::json;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io::input_error("cannot open input file '" + path + "'");
  return json::parse(in);  // json::parse reports the byte position on failure
}

// Exhaustive normalized covers of a small carrier, for round-trip A.
std::vector<FiniteCover> all_covers_of(const FiniteSetAlgebra& alg) {
  const std::size_t n = alg.size();
  std::vector<FiniteRegion> regions;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    FiniteRegion r(n);
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) r.set(i);
    regions.push_back(r);
  }
  std::vector<FiniteCover> covers;
  for (std::size_t pick = 1; pick < (std::size_t{1} << regions.size()); ++pick) {
    FiniteRegion covered(n);
    std::vector<FiniteRegion> members;
    for (std::size_t i = 0; i < regions.size(); ++i)
      if (pick & (std::size_t{1} << i)) {
        covered |= regions[i];
        members.push_back(regions[i]);
      }
    if (covered == alg.carrier_region()) covers.emplace_back(alg, std::move(members));
  }
  return covers;
}

void print_items(const std::vector<CheckItem>& items, const std::string& format, std::ostream& out) {
  if (format == "json") {
    json report = json::array();
    for (const auto& item : items) report.push_back(io::check_item_to_json(item));
    out << report.dump(2) << "\n";
    return;
  }
  for (const auto& item : items)
    out << (item.holds ? "[pass] " : "[FAIL] ") << std::left << std::setw(18) << item.axiom << " "
        << item.detail << "\n";
}

}  // namespace

int run_check(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<CheckItem> items;
  std::vector<std::string> notes;
  try {
    io::SetSystem s = io::parse_set_system(load_json(config.input_path));
    CoverBase base(s.alg, s.covers);

    items.push_back({"C1", true,
                     "holds by the generated-structure reading: a cover is uniform exactly when some "
                     "base cover refines it"});
    BaseReport br = check_base(base);
    items.push_back(br.c2);
    items.push_back(br.c2a);
    items.push_back(br.c2b);
    items.push_back(br.c2_prime);
    items.push_back(br.c2b_prime);
    items.push_back(check_hausdorff_report(base));

    if (s.has_shrinks) {
      ShrinkingReport sr = check_shrinking_hypotheses(base, s.shrinks);
      items.push_back(sr.s1);
      for (auto& item : sr.s2) items.push_back(item);
      items.push_back({"Lemma-certificate", sr.certified,
                       sr.certified ? "S1 and S2 hold: the family is a base for a uniform structure"
                                    : "S1/S2 failed; no certificate"});
    }

    if (s.has_entourages) {
      EntourageReport er = check_entourage_axioms(s.entourages);
      items.push_back(er.e1);
      items.push_back(er.e2);
      items.push_back(er.e3);
      items.push_back(er.filter);

      auto derived = covers_to_entourages(base);
      auto derived_report = check_entourage_axioms(derived);
      items.push_back({"round-trip-B", derived_report.all_hold(),
                       derived_report.all_hold()
                           ? "entourages derived from the covers satisfy E1-E3"
                           : "entourages derived from the covers violate the axioms"});
      if (s.alg.size() <= 4 && br.c2.holds) {
        bool match = true;
        auto pred = entourages_to_covers(derived);
        for (const auto& cover : all_covers_of(s.alg))
          if (pred(cover) != is_uniform_cover(cover, base)) {
            match = false;
            break;
          }
        items.push_back({"round-trip-A", match,
                         match ? "entourage uniformity equals refinement into the base on all covers"
                               : "entourage uniformity disagrees with the base"});
      } else {
        notes.push_back("round-trip-A skipped: needs a C2-passing base on a carrier of at most 4 points");
      }
    }

    if (s.has_topology) {
      Cor32Report cr = check_cor32(s.alg, s.region_base, s.topology);
      items.push_back(cr.intersection_closed);
      items.push_back(cr.topology_base);
      items.push_back(cr.covers_nonempty);
      items.push_back(cr.precise_refinements);
      items.push_back(cr.topology_match);
    }
  } catch (const json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const io::input_error& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  }

  print_items(items, config.format, out);
  for (const auto& n : notes) out << "note: " << n << "\n";
  for (const auto& item : items)
    if (!item.holds) return kExitFail;
  return kExitPass;
}

int run_shrink(const RunConfig& config, std::ostream& out, std::ostream& err) {
  io::DiscCover input;
  try {
    input = io::parse_disc_cover(load_json(config.input_path));
    for (const auto& d : input.domains)
      if (!d.is_open()) throw io::input_error("shrink needs open-form domains (strict ops only)");
  } catch (const json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const io::input_error& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  }

  disc::ShrinkResult result;
  try {
    result = disc::shrink_cover_traced(input.domains);
  } catch (const disc::not_a_cover_error& e) {
    err << "not a cover: uncovered " << io::describe_point(e.witness()) << "\n";
    return kExitFail;
  }

  // re-verify the postconditions for the report
  bool covers = disc::covers_disc(result.closed);
  bool precise = true;
  for (std::size_t i = 0; i < input.domains.size(); ++i)
    precise = precise && region_subset(to_region(result.closed[i]), to_region(input.domains[i]));

  io::DiscCover closed{input.prime, result.closed};
  json output_json = io::disc_cover_to_json(closed);

  if (config.format == "json") {
    json report;
    report["steps"] = json::array();
    for (const auto& step : result.steps) {
      json js;
      js["index"] = step.index;
      js["beta_exponent"] = rat_to_string(step.beta_exponent);
      js["z_beta_empty"] = step.z_beta_empty;
      if (step.margin_exponent) js["margin_exponent"] = rat_to_string(*step.margin_exponent);
      js["gamma_exponent"] = rat_to_string(step.gamma_exponent);
      report["steps"].push_back(std::move(js));
    }
    report["verified"] = {{"covers", covers}, {"precise_refinement", precise}};
    report["output"] = output_json;
    out << report.dump(2) << "\n";
  } else {
    for (const auto& step : result.steps) {
      out << "domain " << step.index << ": trial exponent " << rat_to_string(step.beta_exponent);
      if (step.z_beta_empty)
        out << ", uncovered trial region empty";
      else
        out << ", margin exponent " << rat_to_string(*step.margin_exponent);
      out << ", tightened by p^-(" << rat_to_string(step.gamma_exponent) << ")\n";
    }
    out << "verified: closed output covers = " << (covers ? "yes" : "no")
        << ", precise refinement = " << (precise ? "yes" : "no") << "\n";
  }

  if (!config.output_path.empty()) {
    std::ofstream file(config.output_path);
    if (!file) {
      err << "cannot write output file '" << config.output_path << "'\n";
      return kExitInputError;
    }
    file << output_json.dump(2) << "\n";
  } else if (config.format != "json") {
    out << output_json.dump(2) << "\n";
  }
  return covers && precise ? kExitPass : kExitFail;
}

int run_complete(const RunConfig& config, std::ostream& out, std::ostream& err) {
  constexpr long kBudget = 4096;
  if (!is_prime(config.prime)) {
    err << "input error: --prime must be a prime\n";
    return kExitInputError;
  }
  if (config.depth < 0) {
    err << "input error: --depth must be nonnegative\n";
    return kExitInputError;
  }
  long size = 1;
  for (long k = 0; k < config.depth; ++k) {
    size *= config.prime;
    if (size > kBudget) {
      err << "p^N exceeds the size budget " << kBudget << "\n";
      return kExitFail;
    }
  }

  CoverBase base = residue_tower_base(config.prime, config.depth);
  auto points = completion_points(base);

  if (config.format == "json") {
    json report;
    report["prime"] = config.prime;
    report["depth"] = config.depth;
    report["points"] = points.size();
    report["law_holds"] = (points.size() == static_cast<std::size_t>(size));
    json table = json::array();
    for (const auto& f : points) {
      auto members = base.alg().points_of(f.minimal());
      table.push_back({{"residue", members.front()}, {"class", members}});
    }
    report["residues"] = std::move(table);
    out << report.dump(2) << "\n";
  } else {
    out << "carrier Z in [0, " << size << "), coset covers mod " << config.prime << "^k for k <= "
        << config.depth << "\n";
    out << "completion points: " << points.size() << " (expected " << size << ")\n";
    for (const auto& f : points) {
      auto members = base.alg().points_of(f.minimal());
      out << "  residue " << members.front() << " mod " << size << ": {";
      for (std::size_t i = 0; i < members.size(); ++i) out << (i ? "," : "") << members[i];
      out << "}\n";
    }
  }
  return points.size() == static_cast<std::size_t>(size) ? kExitPass : kExitFail;
}

int run_classify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    io::NestInput nest = io::parse_nest(load_json(config.input_path));
    disc::ClassifyResult result = disc::classify(nest.disks, nest.declaration);
    std::string kind;
    switch (result.kind) {
      case disc::PointClass::TypeI: kind = "type I"; break;
      case disc::PointClass::TypeII: kind = "type II"; break;
      case disc::PointClass::TypeIV: kind = "type IV"; break;
      case disc::PointClass::WouldBeTypeIII: kind = "would-be type III (formal marker)"; break;
      case disc::PointClass::Undetermined: kind = "undetermined at this prefix"; break;
    }
    if (config.format == "json") {
      json report;
      report["kind"] = kind;
      if (result.point) report["point"] = io::describe_point(*result.point);
      out << report.dump(2) << "\n";
    } else {
      out << kind;
      if (result.point) out << ": " << io::describe_point(*result.point);
      out << "\n";
    }
    return kExitPass;
  } catch (const json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const io::input_error& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  }
}

int run_selftest(const RunConfig& config, std::ostream& out, std::ostream&) {
  out << "selftest seed " << config.seed << " scale " << config.scale << "\n";
  bool all_pass = true;
  for (const auto& r : run_acceptance(config.seed, config.scale)) {
    all_pass = all_pass && r.pass;
    std::ostringstream line;
    line << (r.pass ? "[pass] " : "[FAIL] ") << r.id << " " << r.name << ": " << r.detail;
    out << line.str() << "\n";
  }
  return all_pass ? kExitPass : kExitFail;
}

}  // namespace unicover::cli
