// boxlat: constructions, verifications, and renderings for the lattice
// L(m,n) of partitions in an m x n box.
//
// Output is deterministic: identical arguments produce byte-identical
// output.  Exit status 0 on success, 1 on validation failure, 2 on usage
// errors.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "boxlat.hpp"

namespace {

using namespace boxlat;

// Comma-separated parts, e.g. "8,4,0"; usage error on malformed input.
Partition parse_partition(const std::string& csv, const BoxShape& box) {
  std::vector<int> parts;
  std::string field;
  std::istringstream in(csv);
  while (std::getline(in, field, ',')) {
    try {
      size_t used = 0;
      int v = std::stoi(field, &used);
      if (used != field.size()) throw std::invalid_argument(field);
      parts.push_back(v);
    } catch (const std::exception&) {
      throw CLI::ValidationError("partition", "'" + field + "' is not an integer");
    }
  }
  try {
    return make_partition(std::move(parts), box);
  } catch (const lattice_error& e) {
    throw CLI::ValidationError("partition", e.what());
  }
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + out_path);
  f << text;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

void sort_by_start(ChainDecomposition& cd) {
  std::sort(cd.chains.begin(), cd.chains.end(),
            [](const Chain& a, const Chain& b) { return a.start() < b.start(); });
}

// Decomposition for the chains/tableau subcommands.  phi and closed are
// the three-row constructions; greedy threads the greedy matching; recud
// kneads the recursively built half-lattice decomposition.
ChainDecomposition build_decomposition(const std::string& method, int m, int n) {
  BoxShape box{m, n};
  if ((method == "phi" || method == "closed") && m != 3)
    throw CLI::ValidationError("--method", method + " requires m = 3");
  ChainDecomposition cd;
  if (method == "phi") {
    cd = chains_from_phi(n);
  } else if (method == "closed") {
    cd = ChainDecomposition{box, DecompKind::sperner, {}};
    for (const Partition& mu : boundary_sets(n).starts)
      cd.chains.push_back(closed_form_chain_l3(mu, n));
    ValidationReport rep = validate_decomposition(cd, enumerate_box(box));
    if (!rep.ok) throw lattice_error(errc::decomposition_invalid, rep.detail);
  } else if (method == "greedy") {
    cd = chains_from_matching(ga_full(box));
    ValidationReport rep = validate_decomposition(cd, enumerate_box(box));
    if (!rep.ok) throw lattice_error(errc::decomposition_invalid, rep.detail);
  } else {
    cd = knead(u_decomposition(m, n));
  }
  sort_by_start(cd);
  return cd;
}

int run_phi(int n, const std::string& trace) {
  BoxShape box{3, n};
  if (!trace.empty()) {
    Partition p = parse_partition(trace, box);
    ordered_json arr = ordered_json::array();
    arr.push_back(partition_json(p));
    while (!in_E3(p, n)) {
      p = phi(p, n);
      arr.push_back(partition_json(p));
    }
    emit(dump(arr), "");
    return 0;
  }
  ordered_json j;
  j["n"] = n;
  ordered_json pairs = ordered_json::array();
  ordered_json excluded = ordered_json::array();
  for (const Partition& p : enumerate_box(box)) {
    if (in_E3(p, n))
      excluded.push_back(partition_json(p));
    else
      pairs.push_back(ordered_json::array(
          {partition_json(p), partition_json(phi(p, n))}));
  }
  j["pairs"] = std::move(pairs);
  j["not_in_domain"] = std::move(excluded);
  emit(dump(j), "");
  return 0;
}

int run_verify(int m, int n, bool oracle) {
  BoxShape box{m, n};
  ordered_json j;
  j["box"] = box_json(box);
  bool ok = true;

  ProfileCertificate prof = certify_profile(box);
  j["profile"] = profile_certificate_json(prof);
  ok = ok && prof.symmetric && prof.unimodal;
  if (prof.decomposition_checked) ok = ok && prof.sperner_verified;

  OrderMatching om = ga_full(box);
  ordered_json incomplete = ordered_json::array();
  for (const LevelMatching& lm : om.levels)
    if (!lm.complete()) incomplete.push_back(lm.from_rank);
  ordered_json greedy;
  greedy["complete"] = incomplete.empty();
  greedy["incomplete_levels"] = std::move(incomplete);
  j["greedy"] = std::move(greedy);

  if (oracle) {
    ordered_json levels = ordered_json::array();
    bool full_below = true;
    for (int r = 0; r < box.middle_rank(); ++r) {
      LevelCertificate cert = max_level_matching(box, r);
      full_below = full_below && cert.full;
      levels.push_back(level_certificate_json(box, cert));
    }
    j["oracle"] = std::move(levels);
    j["oracle_full_below_middle"] = full_below;
    ok = ok && full_below;
  }
  j["ok"] = ok;
  emit(dump(j), "");
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"constructions and certifications for the box-partition "
               "lattice L(m,n)"};
  app.require_subcommand(1);

  int m = 0, n = 0, level_rank = -1;
  std::string trace, method = "phi", format = "ascii", out_path;
  bool oracle = false;

  auto add_box = [&](CLI::App* cmd) {
    cmd->add_option("m", m, "rows")->required()->check(CLI::PositiveNumber);
    cmd->add_option("n", n, "columns")->required()->check(CLI::NonNegativeNumber);
  };

  CLI::App* c_ranks = app.add_subcommand("ranks", "rank profile of L(m,n)");
  add_box(c_ranks);

  CLI::App* c_phi = app.add_subcommand(
      "phi", "explicit order matching on the three-row lattice L(3,n)");
  c_phi->add_option("n", n, "columns")->required()->check(CLI::NonNegativeNumber);
  c_phi->add_option("--trace", trace,
                    "follow the matching upward from this partition");

  CLI::App* c_greedy =
      app.add_subcommand("greedy", "greedy level matchings on L(m,n)");
  add_box(c_greedy);
  c_greedy->add_option("--rank", level_rank,
                       "single upward matching from this rank");

  CLI::App* c_chains =
      app.add_subcommand("chains", "chain decomposition of L(m,n)");
  add_box(c_chains);
  c_chains->add_option("--method", method, "phi|closed|greedy|recud")
      ->check(CLI::IsMember({"phi", "closed", "greedy", "recud"}));

  CLI::App* c_tableau =
      app.add_subcommand("tableau", "render the decomposition's tableaux");
  add_box(c_tableau);
  c_tableau->add_option("--method", method, "phi|closed|greedy|recud")
      ->check(CLI::IsMember({"phi", "closed", "greedy", "recud"}));
  c_tableau->add_option("--format", format, "ascii|svg|json")
      ->check(CLI::IsMember({"ascii", "svg", "json"}));
  c_tableau->add_option("--out", out_path, "write to file instead of stdout");

  CLI::App* c_verify =
      app.add_subcommand("verify", "certify profile, greedy, and matchings");
  add_box(c_verify);
  c_verify->add_flag("--oracle", oracle,
                     "certify maximum matchings below the middle rank");

  CLI::App* c_smn =
      app.add_subcommand("smn", "starting set S_{m,n} by recursion from one row");
  add_box(c_smn);

  CLI::App* c_udec =
      app.add_subcommand("udec", "half-lattice chain decomposition by recursion");
  add_box(c_udec);

  try {
    app.parse(argc, argv);

    if (app.got_subcommand(c_ranks)) {
      emit(dump(profile_json(rank_profile(BoxShape{m, n}))), "");
      return 0;
    }
    if (app.got_subcommand(c_phi)) return run_phi(n, trace);
    if (app.got_subcommand(c_greedy)) {
      BoxShape box{m, n};
      OrderMatching om;
      if (level_rank >= 0) {
        if (level_rank >= box.cell_count())
          throw CLI::ValidationError("--rank", "no covers above rank " +
                                                   std::to_string(level_rank));
        om.box = box;
        om.levels.push_back(ga_level(box, level_rank));
      } else {
        om = ga_full(box);
      }
      emit(dump(matching_json(om)), "");
      return 0;
    }
    if (app.got_subcommand(c_chains)) {
      emit(dump(decomposition_json(build_decomposition(method, m, n))), "");
      return 0;
    }
    if (app.got_subcommand(c_tableau)) {
      ChainDecomposition cd = build_decomposition(method, m, n);
      std::vector<ChainTableau> tableaux;
      for (const Chain& c : cd.chains)
        tableaux.push_back(tableau_of_chain(c, cd.box));
      if (format == "ascii") {
        std::string text;
        for (size_t i = 0; i < tableaux.size(); ++i) {
          if (i) text += '\n';
          text += render_ascii(tableaux[i]);
        }
        emit(text, out_path);
      } else if (format == "svg") {
        emit(render_svg(tableaux), out_path);
      } else {
        ordered_json arr = ordered_json::array();
        for (const ChainTableau& t : tableaux) arr.push_back(tableau_json(t));
        emit(dump(arr), out_path);
      }
      return 0;
    }
    if (app.got_subcommand(c_verify)) return run_verify(m, n, oracle);
    if (app.got_subcommand(c_smn)) {
      RecSmnResult res = smn_set(m, n);
      if (!res.ok) {
        std::cerr << "recursion failed: " << to_string(res.offending)
                  << " has no absorbing start\n";
        return 1;
      }
      ordered_json j;
      j["box"] = box_json(BoxShape{m, n});
      ordered_json starts = ordered_json::array();
      for (const Partition& p : res.value) starts.push_back(partition_json(p));
      j["starts"] = std::move(starts);
      emit(dump(j), "");
      return 0;
    }
    if (app.got_subcommand(c_udec)) {
      ChainDecomposition cd = u_decomposition(m, n);
      sort_by_start(cd);
      emit(dump(decomposition_json(cd)), "");
      return 0;
    }
    return 2;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const lattice_error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}
