#include "scrollar/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <future>
#include <sstream>

#include "scrollar/deletion.hpp"
#include "scrollar/engine.hpp"
#include "scrollar/errors.hpp"
#include "scrollar/oracle.hpp"
#include "scrollar/report.hpp"
#include "scrollar/trigonal.hpp"

namespace scrollar {

namespace {

struct Options {
  int genus = 0;
  std::string col0_del;
  std::string col1_del;
  int a = 0;
  int b = 0;
  std::string profile;
  std::string format = "text";
  bool show_tableaux = false;
  int max_genus = 9;
  int degree = 0;
  bool genus_given = false;
};

bool json_output(const Options& opt) { return opt.format == "json"; }

void print_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

int cmd_scrollar(const Options& opt, std::ostream& out, std::ostream& err) {
  DeletionSpec spec{opt.genus, 2, parse_int_list(opt.col1_del, 1), parse_int_list(opt.col0_del, 1)};
  if (spec.col1_deleted.size() != spec.col0_deleted.size()) {
    throw InputError("both columns must lose the same number of symbols");
  }
  spec.degree = static_cast<int>(spec.col1_deleted.size()) + 2;
  const ScrollarRun run = run_scrollar(spec);
  for (const auto& w : run.trace.warnings) err << "warning: " << w << '\n';
  if (json_output(opt)) {
    print_json(out, scrollar_json(run));
  } else {
    out << scrollar_text(run, opt.show_tableaux);
  }
  return kExitOk;
}

int cmd_trigonal(const Options& opt, std::ostream& out, std::ostream&) {
  if (opt.a < 2 || opt.b > opt.genus - 1) {
    throw InputError("trigonal divisors need 2 <= a < b <= g - 1");
  }
  const TrigonalParams p = TrigonalParams::make(opt.genus, opt.a, opt.b);
  const RankSequence seq = rank_sequence(derive_model(p.spec()));
  const ScrollarReport engine = scrollar_invariants(seq);

  std::vector<int> closed;
  for (int c = 0; c <= std::max(p.n, seq.c_stop); ++c) closed.push_back(trigonal_rank(p, c));
  std::vector<int> engine_ranks = seq.ranks;
  for (int c = seq.c_stop + 1; c <= std::max(p.n, seq.c_stop); ++c) {
    engine_ranks.push_back(3 * c - p.genus);
  }
  const bool agree = closed == engine_ranks && seq.c_stop == p.n &&
                     engine.first_jump == std::optional<int>(p.ell) &&
                     engine.sigma[1] == trigonal_sigma1(p);

  if (json_output(opt)) {
    nlohmann::json j;
    j["genus"] = p.genus;
    j["a"] = p.a;
    j["b"] = p.b;
    j["ell"] = p.ell;
    j["n"] = p.n;
    j["closed_form_ranks"] = closed;
    j["sigma1"] = trigonal_sigma1(p);
    j["engine_ranks"] = engine_ranks;
    j["engine_ell"] = engine.first_jump ? nlohmann::json(*engine.first_jump) : nlohmann::json();
    j["engine_n"] = seq.c_stop;
    j["engine_sigma1"] = engine.sigma[1];
    j["cross_check"] = agree;
    print_json(out, j);
  } else {
    out << "g = " << p.genus << ", a = " << p.a << ", b = " << p.b << '\n';
    out << "ell = " << p.ell << '\n';
    out << "n = " << p.n << '\n';
    out << "closed-form ranks: " << format_list(closed) << '\n';
    out << "sigma_1 = " << trigonal_sigma1(p) << '\n';
    out << "engine ranks:      " << format_list(engine_ranks) << '\n';
    out << "engine ell = "
        << (engine.first_jump ? std::to_string(*engine.first_jump) : std::string("none"))
        << ", engine n = " << seq.c_stop << ", engine sigma_1 = " << engine.sigma[1] << '\n';
    out << "cross-check: " << (agree ? "ok" : "MISMATCH") << '\n';
  }
  return agree ? kExitOk : kExitConsistency;
}

TorsionProfile profile_from(const Options& opt) {
  if (opt.profile.empty()) throw InputError("--profile is required");
  return TorsionProfile(parse_int_list(opt.profile, 0));
}

int cmd_gonality(const Options& opt, std::ostream& out, std::ostream&) {
  const TorsionProfile profile = profile_from(opt);
  const int k = gonality(profile);
  if (json_output(opt)) {
    print_json(out, {{"profile", profile.orders()}, {"gonality", k}});
  } else {
    out << k << '\n';
  }
  return kExitOk;
}

int cmd_classify(const Options& opt, std::ostream& out, std::ostream&) {
  const TorsionProfile profile = profile_from(opt);
  if (profile.genus() < 2) throw InputError("classification needs genus >= 2");
  nlohmann::json j{{"profile", profile.orders()}};
  std::string text;
  if (is_hyperelliptic(profile)) {
    j["classification"] = "hyperelliptic";
    text = "hyperelliptic";
  } else if (auto ab = classify_trigonal(profile)) {
    j["classification"] = "trigonal";
    j["a"] = ab->first;
    j["b"] = ab->second;
    text = "trigonal (a, b) = (" + std::to_string(ab->first) + ", " +
           std::to_string(ab->second) + ")";
  } else {
    const int k = gonality(profile);
    j["classification"] = "other";
    j["gonality"] = k;
    text = "other (gonality " + std::to_string(k) + ")";
  }
  if (json_output(opt)) {
    print_json(out, j);
  } else {
    out << text << '\n';
  }
  return kExitOk;
}

int cmd_types(const Options& opt, std::ostream& out, std::ostream&) {
  if (opt.degree < 2) throw InputError("--k must be at least 2");
  const auto words = enumerate_types(opt.degree);
  nlohmann::json list = nlohmann::json::array();
  std::ostringstream text;
  text << words.size() << " combinatorial types for k = " << opt.degree << '\n';
  for (const DyckWord& w : words) {
    const auto spec = representative_spec(w, opt.genus_given ? std::optional(opt.genus) : std::nullopt);
    nlohmann::json entry{{"word", w.str()}};
    text << (w.str().empty() ? "(empty)" : w.str());
    if (spec) {
      const DivisorModel model = derive_model(*spec);
      entry["genus"] = spec->genus;
      entry["col1_deleted"] = spec->col1_deleted;
      entry["col0_deleted"] = spec->col0_deleted;
      entry["profile"] = model.profile().orders();
      text << "  g=" << spec->genus << " col1-del=" << format_list(spec->col1_deleted)
           << " col0-del=" << format_list(spec->col0_deleted)
           << " m=" << model.profile().to_string();
    } else {
      entry["genus"] = nullptr;
      text << "  not realizable at g=" << opt.genus;
    }
    text << '\n';
    list.push_back(std::move(entry));
  }
  if (json_output(opt)) {
    print_json(out, {{"degree", opt.degree}, {"count", words.size()}, {"types", list}});
  } else {
    out << text.str();
  }
  return kExitOk;
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream&) {
  if (opt.max_genus < 2) throw InputError("--max-genus must be at least 2");
  struct GenusTally {
    int specs = 0;
    Certification cert;
  };
  // One task per genus; results are collected in genus order.
  std::vector<std::future<GenusTally>> tasks;
  for (int g = 2; g <= opt.max_genus; ++g) {
    tasks.push_back(std::async(std::launch::async, [g] {
      GenusTally tally;
      for (int k = 2; k <= g; ++k) {
        for (const DeletionSpec& spec : all_specs(g, k)) {
          ++tally.specs;
          tally.cert += certify(derive_model(spec));
        }
      }
      return tally;
    }));
  }
  GenusTally total;
  nlohmann::json per_genus = nlohmann::json::array();
  std::ostringstream text;
  for (int g = 2; g <= opt.max_genus; ++g) {
    const GenusTally t = tasks[static_cast<std::size_t>(g - 2)].get();
    total.specs += t.specs;
    total.cert += t.cert;
    text << "g=" << g << " specs=" << t.specs << " checks=" << t.cert.checks
         << " tableaux=" << t.cert.tableaux_seen << (t.cert.ok() ? " pass" : " FAIL") << '\n';
    per_genus.push_back({{"genus", g}, {"specs", t.specs}, {"checks", t.cert.checks},
                         {"ok", t.cert.ok()}});
  }
  const Certification& c = total.cert;
  if (json_output(opt)) {
    print_json(out, {{"max_genus", opt.max_genus},
                     {"specs", total.specs},
                     {"checks", c.checks},
                     {"rank_mismatches", c.rank_mismatches},
                     {"emptiness_mismatches", c.emptiness_mismatches},
                     {"dominance_violations", c.dominance_violations},
                     {"per_genus", per_genus},
                     {"ok", c.ok()}});
  } else {
    out << text.str();
    out << "total specs=" << total.specs << " checks=" << c.checks
        << " rank mismatches=" << c.rank_mismatches
        << " emptiness mismatches=" << c.emptiness_mismatches
        << " dominance violations=" << c.dominance_violations << '\n';
    out << (c.ok() ? "all instances pass" : "DISAGREEMENT FOUND") << '\n';
  }
  return c.ok() ? kExitOk : kExitConsistency;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text, int minimum) {
  std::vector<int> values;
  std::stringstream ss(text);
  std::string item;
  const bool blank = text.find_first_not_of(" \t") == std::string::npos;
  if (blank) return values;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw InputError("empty entry in list '" + text + "'");
    item = item.substr(first, last - first + 1);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.empty()) {
      throw InputError("not an integer: '" + item + "'");
    }
    if (value < minimum) {
      throw InputError("list entries must be >= " + std::to_string(minimum) + ": '" + item + "'");
    }
    values.push_back(value);
  }
  if (!text.empty() && text.back() == ',') throw InputError("trailing comma in '" + text + "'");
  return values;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank sequences and composite scrollar invariants of rank-1 divisors "
               "on chains of loops",
               "scrollar"};
  app.require_subcommand(1);
  Options opt;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  auto* scrollar = app.add_subcommand(
      "scrollar",
      "Rank sequence, scrollar invariants and tableaux lambda_D^c of a divisor given by the "
      "symbols deleted from each column of Lambda. The torsion profile is printed in full, "
      "m_1 through m_g.");
  scrollar->add_option("--genus", opt.genus, "Genus g")->required();
  scrollar->add_option("--col1-del", opt.col1_del, "Symbols a_1,...,a_{k-2} removed from column 1");
  scrollar->add_option("--col0-del", opt.col0_del, "Symbols b_1,...,b_{k-2} removed from column 0");
  scrollar->add_flag("--show-tableaux", opt.show_tableaux, "Print each tableau lambda_D^c");
  add_format(scrollar);

  auto* trigonal = app.add_subcommand(
      "trigonal", "Closed-form trigonal invariants of D_{a,b}, cross-checked against the engine");
  trigonal->add_option("--genus", opt.genus, "Genus g")->required();
  trigonal->add_option("--a", opt.a, "Symbol removed from column 1")->required();
  trigonal->add_option("--b", opt.b, "Symbol removed from column 0")->required();
  add_format(trigonal);

  auto* gon = app.add_subcommand("gonality", "Gonality of a chain of loops");
  gon->add_option("--profile", opt.profile, "Torsion orders m_1,...,m_g")->required();
  add_format(gon);

  auto* classify = app.add_subcommand("classify", "Hyperelliptic / trigonal classification");
  classify->add_option("--profile", opt.profile, "Torsion orders m_1,...,m_g")->required();
  add_format(classify);

  auto* types = app.add_subcommand("types", "Combinatorial types (Dyck words) of degree k");
  types->add_option("--k", opt.degree, "Degree k")->required();
  types->add_option("--genus", opt.genus, "Realize each type at this genus");
  add_format(types);

  auto* verify = app.add_subcommand("verify", "Engine versus exhaustive oracle on every spec");
  verify->add_option("--max-genus", opt.max_genus, "Largest genus swept")->capture_default_str();
  add_format(verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  opt.genus_given = types->count("--genus") > 0;

  try {
    if (*scrollar) return cmd_scrollar(opt, out, err);
    if (*trigonal) return cmd_trigonal(opt, out, err);
    if (*gon) return cmd_gonality(opt, out, err);
    if (*classify) return cmd_classify(opt, out, err);
    if (*types) return cmd_types(opt, out, err);
    if (*verify) return cmd_verify(opt, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ConsistencyError& e) {
    err << "consistency failure: " << e.what() << '\n';
    return kExitConsistency;
  } catch (const BudgetExhausted& e) {
    err << "consistency failure: " << e.what() << '\n';
    return kExitConsistency;
  }
  return kExitInput;
}

}  // namespace scrollar
