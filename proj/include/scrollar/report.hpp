#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "scrollar/engine.hpp"
#include "scrollar/model.hpp"
#include "scrollar/tableau.hpp"

namespace scrollar {

/// { "rows": R, "cols": C, "entries": [row-major] }
nlohmann::json tableau_to_json(const Tableau& t);
Tableau tableau_from_json(const nlohmann::json& j);

/// Everything the scrollar command reports for one divisor model.
struct ScrollarRun {
  DivisorModel model;
  RankTrace trace;
  ScrollarReport report;
};

ScrollarRun run_scrollar(const DeletionSpec& spec);

/// Schema: genus, degree, profile, rank_sequence (through the nonspecial
/// threshold), sigma, scrollar, ell (null if no jump), n, tableaux.
nlohmann::json scrollar_json(const ScrollarRun& run);

/// Human-readable report laid out like the interactive session transcript.
std::string scrollar_text(const ScrollarRun& run, bool show_tableaux);

/// "[1, 2, 3]"
std::string format_list(const std::vector<int>& values);

/// Label of the c-th tableau: "D", "2 D", "3 D", ...
std::string multiple_label(int c);

}  // namespace scrollar
