#include "scrollar/report.hpp"

#include <sstream>

#include "scrollar/errors.hpp"

namespace scrollar {

nlohmann::json tableau_to_json(const Tableau& t) {
  return {{"rows", t.rows()}, {"cols", t.cols()}, {"entries", t.entries()}};
}

Tableau tableau_from_json(const nlohmann::json& j) {
  try {
    return Tableau(RectShape{j.at("rows").get<int>(), j.at("cols").get<int>()},
                   j.at("entries").get<std::vector<int>>());
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed tableau JSON: ") + e.what());
  }
}

ScrollarRun run_scrollar(const DeletionSpec& spec) {
  DivisorModel model = derive_model(spec);
  RankTrace trace = trace_rank_sequence(model);
  ScrollarReport report = scrollar_invariants(trace.sequence);
  return {std::move(model), std::move(trace), std::move(report)};
}

nlohmann::json scrollar_json(const ScrollarRun& run) {
  nlohmann::json tableaux = nlohmann::json::array();
  for (std::size_t c = 1; c < run.trace.tableaux.size(); ++c) {
    tableaux.push_back(tableau_to_json(run.trace.tableaux[c]));
  }
  nlohmann::json out;
  out["genus"] = run.model.genus();
  out["degree"] = run.model.degree();
  out["profile"] = run.model.profile().orders();
  out["rank_sequence"] = run.trace.sequence.ranks;
  out["sigma"] = run.report.sigma;
  out["scrollar"] = run.report.scrollar;
  out["ell"] = run.report.first_jump ? nlohmann::json(*run.report.first_jump) : nlohmann::json();
  out["n"] = run.report.nonspecial;
  out["tableaux"] = std::move(tableaux);
  return out;
}

std::string format_list(const std::vector<int>& values) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? ", " : "") << values[i];
  os << ']';
  return os.str();
}

std::string multiple_label(int c) { return c == 1 ? "D" : std::to_string(c) + " D"; }

std::string scrollar_text(const ScrollarRun& run, bool show_tableaux) {
  const RankSequence& seq = run.trace.sequence;
  std::ostringstream os;
  os << "The genus is:" << run.model.genus() << '\n';
  os << "_m_= " << run.model.profile().to_string() << '\n';
  os << "k= " << run.model.degree() << '\n';
  if (show_tableaux) {
    for (std::size_t c = 1; c < run.trace.tableaux.size(); ++c) {
      os << multiple_label(static_cast<int>(c)) << '\n' << render_text(run.trace.tableaux[c]);
    }
  }
  os << "The rank sequence is: " << format_list(seq.special_ranks()) << '\n';
  os << "The scrollar invariants are: {";
  for (std::size_t j = 0; j < run.report.sigma.size(); ++j) {
    os << (j ? ", " : "") << j << ": " << run.report.sigma[j];
  }
  os << "}\n";
  os << "Scrollar increments a_j: " << format_list(run.report.scrollar) << '\n';
  os << "First jump ell: ";
  if (run.report.first_jump) {
    os << *run.report.first_jump << '\n';
  } else {
    os << "none\n";
  }
  os << "Nonspecial threshold n: " << seq.c_stop << " (rk(" << seq.c_stop
     << "D) = " << seq.at(seq.c_stop) << ")\n";
  return os.str();
}

}  // namespace scrollar
