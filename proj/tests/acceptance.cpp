// Acceptance criteria: one PASS/FAIL line per criterion.
// Usage: acceptance [criterion ...]   (default: all)

#include <chrono>
#include <cstdlib>
#include <functional>
#include <future>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "scrollar/cli.hpp"
#include "scrollar/deletion.hpp"
#include "scrollar/engine.hpp"
#include "scrollar/model.hpp"
#include "scrollar/oracle.hpp"
#include "scrollar/profile.hpp"
#include "scrollar/trigonal.hpp"
#include "structural.hpp"

using namespace scrollar;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double time_limit_s;  // 0 = none
  std::function<Outcome()> run;
};

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

template <typename F>
void for_each_profile(int g, int max_entry, F&& visit) {
  std::vector<int> orders(static_cast<std::size_t>(g), 0);
  while (true) {
    visit(TorsionProfile(orders));
    std::size_t i = 0;
    while (i < orders.size() && orders[i] == max_entry) orders[i++] = 0;
    if (i == orders.size()) return;
    ++orders[i];
  }
}

Outcome worked_example() {
  std::ostringstream out, err;
  const int code = run_cli({"scrollar", "--genus", "15", "--col1-del", "4,6,8", "--col0-del",
                            "5,7,9", "--show-tableaux"},
                           out, err);
  const std::string text = out.str();
  const std::vector<std::pair<std::string, std::string>> expected{
      {"rank sequence", "The rank sequence is: [0, 1, 2, 4, 7]\n"},
      {"sigma", "The scrollar invariants are: {0: 0, 1: 3, 2: 7, 3: 13, 4: 19}\n"},
      {"D",
       "D\n  1  2\n  2  3\n  3  5\n  4  7\n  6  9\n  8 10\n 10 11\n 11 12\n 12 13\n 13 14\n 14 15\n"},
      {"2 D",
       "2 D\n  1  2  3\n  2  3 10\n  3 10 11\n  4 11 12\n 11 12 13\n 12 13 14\n 13 14 15\n"},
      {"3 D",
       "3 D\n  1  2  3 11 12\n  2  3 11 12 13\n  3  8 12 13 14\n  4 10 13 14 15\n"},
      {"4 D",
       "4 D\n  1  2  3 10 11 12 13 14\n  2  3  8 11 12 13 14 15\n"},
  };
  std::string missing;
  for (const auto& [name, block] : expected)
    if (!contains(text, block)) missing += (missing.empty() ? "" : ", ") + name;
  if (code != kExitOk) return {false, "exit code " + std::to_string(code) + ": " + err.str()};
  if (!missing.empty()) return {false, "mismatched: " + missing};
  return {true, "rank sequence, sigma and all four tableaux match"};
}

struct TrigonalSweep {
  int points = 0;
  int ranks_ok = 0;
  int jump_ok = 0;
  int stop_ok = 0;
  int sigma_ok = 0;
  int all_ok = 0;
  int pattern_points = 0;
  int pattern_ok = 0;
  std::string first_mismatch;
};

TrigonalSweep trigonal_sweep() {
  TrigonalSweep s;
  for (int g = 4; g <= 30; ++g) {
    for (int a = 2; a < g; ++a) {
      for (int b = a + 1; b <= g - 1; ++b) {
        const auto p = TrigonalParams::make(g, a, b);
        const RankSequence seq = rank_sequence(derive_model(p.spec()));
        const ScrollarReport rep = scrollar_invariants(seq);
        ++s.points;
        bool ranks = true;
        for (int c = 0; c <= std::max(seq.c_stop, p.n); ++c) {
          const int engine = c <= seq.c_stop ? seq.at(c) : 3 * c - g;
          ranks = ranks && engine == trigonal_rank(p, c);
        }
        const bool jump = first_jump(seq) == p.ell;
        const bool stop = seq.c_stop == p.n;
        const bool sigma = rep.sigma.at(1) == trigonal_sigma1(p);
        s.ranks_ok += ranks;
        s.jump_ok += jump;
        s.stop_ok += stop;
        s.sigma_ok += sigma;
        if (ranks && jump && stop && sigma) {
          ++s.all_ok;
        } else if (s.first_mismatch.empty()) {
          std::vector<int> closed;
          for (int c = 0; c <= p.n; ++c) closed.push_back(trigonal_rank(p, c));
          std::ostringstream os;
          os << "g=" << g << " a=" << a << " b=" << b << " (";
          if (!ranks) os << "ranks ";
          if (!jump) os << "first-jump ";
          if (!stop) os << "c_stop ";
          if (!sigma) os << "sigma_1 ";
          os << "differ) engine ranks [";
          for (std::size_t c = 0; c < seq.ranks.size(); ++c) os << (c ? "," : "") << seq.ranks[c];
          os << "] closed form [";
          for (std::size_t c = 0; c < closed.size(); ++c) os << (c ? "," : "") << closed[c];
          os << "]";
          s.first_mismatch = os.str();
        }
        // Increments of the engine's ranks at c = ell + i, i = 0..n - ell.
        ++s.pattern_points;
        bool pattern = true;
        for (int i = 0; i <= p.n - p.ell; ++i) {
          const int c = p.ell + i;
          auto rank_at = [&](int cc) { return cc <= seq.c_stop ? seq.at(cc) : 3 * cc - g; };
          pattern = pattern && rank_at(c) - rank_at(c - 1) == (i % 2 == 0 ? 2 : 1);
        }
        s.pattern_ok += pattern;
      }
    }
  }
  return s;
}

Outcome trigonal_closed_form() {
  const TrigonalSweep s = trigonal_sweep();
  std::ostringstream os;
  os << s.all_ok << "/" << s.points << " points agree (ranks " << s.ranks_ok << ", first jump "
     << s.jump_ok << ", c_stop " << s.stop_ok << ", sigma_1 " << s.sigma_ok << ")";
  if (!s.first_mismatch.empty()) os << "; first mismatch " << s.first_mismatch;
  return {s.all_ok == s.points, os.str()};
}

Outcome nonconvexity() {
  const TrigonalSweep s = trigonal_sweep();
  std::ostringstream os;
  os << s.pattern_ok << "/" << s.pattern_points
     << " points show increments 2,1,2,... at c = ell..n";
  return {s.pattern_ok == s.pattern_points, os.str()};
}

Outcome oracle_equivalence() {
  std::vector<std::future<std::pair<Certification, bool>>> jobs;
  for (int g = 2; g <= 9; ++g) {
    jobs.push_back(std::async(std::launch::async, [g] {
      Certification total;
      bool exhausted = false;
      for (int k = 2; k <= g; ++k) {
        for (const auto& spec : all_specs(g, k)) {
          try {
            total += certify(derive_model(spec));
          } catch (const BudgetExhausted&) {
            exhausted = true;
          }
        }
      }
      return std::make_pair(total, exhausted);
    }));
  }
  Certification total;
  bool exhausted = false;
  for (auto& job : jobs) {
    auto [cert, ex] = job.get();
    total += cert;
    exhausted = exhausted || ex;
  }
  std::ostringstream os;
  os << total.checks << " checks, " << total.tableaux_seen << " tableaux enumerated; rank "
     << total.rank_mismatches << ", emptiness " << total.emptiness_mismatches << ", dominance "
     << total.dominance_violations << " mismatches" << (exhausted ? "; BUDGET EXHAUSTED" : "");
  return {total.ok() && !exhausted, os.str()};
}

Outcome catalan_counts() {
  const std::vector<std::size_t> expected{1, 2, 5, 14, 42, 132};
  std::ostringstream os;
  bool ok = true;
  for (int k = 3; k <= 8; ++k) {
    const std::size_t n = enumerate_types(k).size();
    ok = ok && n == expected[static_cast<std::size_t>(k - 3)];
    os << (k > 3 ? ", " : "") << "k=" << k << ": " << n;
  }
  return {ok, os.str()};
}

Outcome generic_profile() {
  int cases = 0, skipped = 0, rank_ok = 0, ceil_ok = 0, floor_ok = 0;
  std::string first_sigma_mismatch;
  for (int k = 3; k <= 6; ++k) {
    for (int g = k; g <= 24; ++g) {
      const DeletionSpec spec = generic_spec(g, k);
      if (spec_violation(spec)) {
        ++skipped;  // the generic deletions collide for g < 2k - 2
        continue;
      }
      ++cases;
      const RankSequence seq = rank_sequence(derive_model(spec));
      bool ranks = true;
      for (int c = 1; c <= seq.c_stop && g > c * (k - 1); ++c) ranks = ranks && seq.at(c) == c;
      rank_ok += ranks;
      const ScrollarReport rep = scrollar_invariants(seq);
      bool ceil_match = true, floor_match = true;
      for (int j = 0; j < k; ++j) {
        ceil_match = ceil_match && rep.sigma[static_cast<std::size_t>(j)] == generic_sigma(g, k, j);
        floor_match = floor_match && rep.sigma[static_cast<std::size_t>(j)] ==
                                         static_cast<int>(floor_div(j * (g + k - 1), k - 1));
      }
      ceil_ok += ceil_match;
      floor_ok += floor_match;
      if (!ceil_match && first_sigma_mismatch.empty()) {
        std::ostringstream os;
        os << "g=" << g << " k=" << k << " sigma [";
        for (int j = 0; j < k; ++j) os << (j ? "," : "") << rep.sigma[static_cast<std::size_t>(j)];
        os << "] vs ceiling [";
        for (int j = 0; j < k; ++j) os << (j ? "," : "") << generic_sigma(g, k, j);
        os << "]";
        first_sigma_mismatch = os.str();
      }
    }
  }
  std::ostringstream os;
  os << cases << " cases (" << skipped << " not applicable): rk(cD) = c in " << rank_ok
     << ", sigma = ceiling formula in " << ceil_ok << ", sigma = floor(j(g+k-1)/(k-1)) in "
     << floor_ok;
  if (!first_sigma_mismatch.empty()) os << "; first mismatch " << first_sigma_mismatch;
  return {rank_ok == cases && ceil_ok == cases, os.str()};
}

DeletionSpec random_spec(std::mt19937& rng) {
  while (true) {
    const int g = std::uniform_int_distribution<int>(2, 40)(rng);
    const int k = std::uniform_int_distribution<int>(2, std::min(9, (g + 2) / 2))(rng);
    std::vector<int> interior;
    for (int s = 2; s <= g - 1; ++s) interior.push_back(s);
    for (int attempt = 0; attempt < 1000; ++attempt) {
      DeletionSpec spec{g, k, {}, {}};
      std::shuffle(interior.begin(), interior.end(), rng);
      spec.col1_deleted.assign(interior.begin(), interior.begin() + (k - 2));
      std::shuffle(interior.begin(), interior.end(), rng);
      spec.col0_deleted.assign(interior.begin(), interior.begin() + (k - 2));
      std::sort(spec.col1_deleted.begin(), spec.col1_deleted.end());
      std::sort(spec.col0_deleted.begin(), spec.col0_deleted.end());
      if (!spec_violation(spec)) return spec;
    }
  }
}

Outcome structural_invariants() {
  std::mt19937 rng(20240611);
  constexpr int kRuns = 10'000;
  int report_bad = 0, xi_bad = 0, icount_bad = 0, lambda_bad = 0, literal_bad = 0;
  long tableaux = 0;
  for (int run = 0; run < kRuns; ++run) {
    const DeletionSpec spec = random_spec(rng);
    const DivisorModel m = derive_model(spec);
    const RankTrace trace = trace_rank_sequence(m);
    report_bad += !testing::report_invariants_hold(scrollar_invariants(trace.sequence), spec.genus,
                                                   spec.degree);
    xi_bad += !testing::xi_recurrence_holds(m, trace.sequence.c_stop + 1);
    lambda_bad += !validate(m.lambda_D(), m.profile());
    std::vector<const Tableau*> produced{&m.lambda_D()};
    for (std::size_t c = 1; c < trace.tableaux.size(); ++c) produced.push_back(&trace.tableaux[c]);
    bool icount = true, literal = true;
    for (const Tableau* t : produced) {
      ++tableaux;
      icount = icount && testing::i_count_violations(m.profile(), *t).empty();
      literal = literal &&
                testing::i_count_violations(m.profile(), *t, testing::ICountReading::Literal).empty();
    }
    icount_bad += !icount;
    literal_bad += !literal;
  }
  std::ostringstream os;
  os << kRuns << " random specs, " << tableaux << " tableaux; violations: sigma/a_j " << report_bad
     << ", xi recurrence " << xi_bad << ", i-count " << icount_bad << ", lambda_D validity "
     << lambda_bad << " (i-count as literally worded: " << literal_bad << " runs)";
  return {report_bad == 0 && xi_bad == 0 && icount_bad == 0 && lambda_bad == 0, os.str()};
}

Outcome classification() {
  long profiles = 0, hyper_bad = 0, trig_bad = 0, trigonal = 0;
  for (int g = 2; g <= 8; ++g) {
    for_each_profile(g, 3, [&](const TorsionProfile& p) {
      ++profiles;
      const int k = oracle_gonality(p);
      hyper_bad += is_hyperelliptic(p) != (k == 2);
      if (g >= 3) {
        const bool trig = classify_trigonal(p).has_value();
        trigonal += trig;
        trig_bad += trig != (k == 3);
      }
    });
  }
  std::ostringstream os;
  os << profiles << " profiles (" << trigonal << " trigonal): hyperelliptic mismatches " << hyper_bad
     << ", trigonal mismatches " << trig_bad;
  return {hyper_bad == 0 && trig_bad == 0, os.str()};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "worked example reproduction", 1, worked_example},
      {2, "trigonal closed-form sweep (g <= 30)", 30, trigonal_closed_form},
      {3, "trigonal non-convexity pattern", 0, nonconvexity},
      {4, "oracle equivalence (g <= 9)", 120, oracle_equivalence},
      {5, "Catalan counts of combinatorial types", 0, catalan_counts},
      {6, "generic-profile formula", 30, generic_profile},
      {7, "structural invariants on random specs", 0, structural_invariants},
      {8, "hyperelliptic/trigonal classification (g <= 8)", 60, classification},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  bool all_pass = true;
  for (const Criterion& c : criteria) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end())
      continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && secs > c.time_limit_s) {
      o.pass = false;
      o.detail += "; exceeded time limit";
    }
    all_pass = all_pass && o.pass;
    std::ostringstream time;
    time.precision(2);
    time << std::fixed << secs;
    std::cout << "CRITERION " << c.id << " " << (o.pass ? "PASS" : "FAIL") << " - " << c.title
              << ": " << o.detail << " [" << time.str() << " s]" << std::endl;
  }
  return all_pass ? 0 : 1;
}
