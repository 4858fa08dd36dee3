// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Time budgets are part of the pass condition.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mpoly/construct.hpp"
#include "mpoly/core.hpp"
#include "mpoly/labeling_io.hpp"
#include "mpoly/proofcheck.hpp"
#include "mpoly/search.hpp"
#include "mpoly/symmetry.hpp"
#include "oracle.hpp"

using namespace mpoly;
using mpoly_tests::BruteForceOutcome;
using mpoly_tests::brute_force_enumerate;

namespace {

struct Criterion {
  int id;
  std::string label;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

bool expect(bool condition, std::string& detail, const std::string& message) {
  if (!condition && detail.empty()) detail = message;
  return condition;
}

Labeling random_complete_labeling(int n, std::uint32_t seed) {
  std::vector<std::int64_t> values(static_cast<std::size_t>(2 * n + 1));
  std::iota(values.begin(), values.end(), 1);
  std::mt19937 rng(seed);
  std::shuffle(values.begin(), values.end(), rng);
  Labeling labeling(n);
  labeling.slots() = values;
  return labeling;
}

// Shared between criteria 3/4 and 5 so the brute-force sweeps run once.
BruteForceOutcome oracle3, oracle4, oracle5;

SearchConfig mode_config(SearchMode mode, bool emit = false,
                         int workers = 1) {
  SearchConfig config;
  config.mode = mode;
  config.emit_solutions = emit;
  config.worker_count = workers;
  return config;
}

bool criterion_construction(std::string& detail) {
  for (int n = 6; n <= 1000; n += 2) {
    const Labeling labeling = construct(n);
    const auto report = verify(labeling);
    if (!expect(report.is_magic && report.common_sum &&
                    *report.common_sum == 3 * n + 3 &&
                    labeling.center() == n + 1,
                detail, "construct(" + std::to_string(n) + ") not magic")) {
      return false;
    }
  }
  return true;
}

bool criterion_fixtures(std::string& detail) {
  const Labeling square_reference(4, 5, {2, 6, 8, 4}, {7, 1, 3, 9});
  if (!expect(construct(4) == square_reference, detail,
              "construct(4) differs from the reference square")) {
    return false;
  }
  // The reference hexagon, read clockwise from the top-left vertex and
  // counterclockwise from the same vertex; the two readings and the
  // constructed labeling share a canonical form.
  const Labeling hexagon_clockwise(6, 7, {5, 13, 2, 9, 1, 12},
                                   {3, 6, 10, 11, 8, 4});
  const Labeling hexagon_mirrored(6, 7, {5, 12, 1, 9, 2, 13},
                                  {4, 8, 11, 10, 6, 3});
  const Labeling canon = canonical_form(construct(6));
  return expect(canonical_form(hexagon_clockwise) == canon &&
                    canonical_form(hexagon_mirrored) == canon,
                detail, "hexagon readings disagree in canonical form");
}

bool criterion_odd_nonexistence(std::string& detail) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto at3 = enumerate(3, mode_config(SearchMode::Exhaustive));
  const double s3 = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  if (!expect(at3.total_count == 0, detail, "n=3 search found labelings") ||
      !expect(s3 < 1.0, detail, "n=3 search over its 1 s budget")) {
    return false;
  }

  const auto t1 = std::chrono::steady_clock::now();
  const auto at5 = enumerate(5, mode_config(SearchMode::Exhaustive));
  oracle3 = brute_force_enumerate(3);
  oracle5 = brute_force_enumerate(5);
  const double s5 = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - t1)
                        .count();
  if (!expect(at5.total_count == 0 && oracle5.count == 0 &&
                  oracle3.count == 0,
              detail, "n=5 searches disagree about nonexistence") ||
      !expect(s5 < 60.0, detail, "n=5 search over its 60 s budget")) {
    return false;
  }

  // Long-running optional part: the first odd order beyond brute force.
  const auto at7 = verify_nonexistence(7);
  return expect(at7.confirmed, detail, "n=7 pruned search found labelings");
}

bool criterion_square_count(std::string& detail) {
  oracle4 = brute_force_enumerate(4);
  if (!expect(oracle4.count == 8, detail,
              "brute-force count for n=4 is not 8")) {
    return false;
  }
  const auto result = enumerate(4, mode_config(SearchMode::Exhaustive, true));
  return expect(result.total_count == 8 && result.class_count == 1, detail,
                "engine disagrees with the brute-force square count");
}

bool criterion_forced_values(std::string& detail) {
  // Raw solutions from the assumption-free sweeps: center and sum are
  // never imposed, yet every solution carries them.
  const std::vector<const BruteForceOutcome*> outcomes{&oracle3, &oracle4,
                                                       &oracle5};
  const std::vector<int> orders{3, 4, 5};
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const int n = orders[i];
    for (const Labeling& solution : outcomes[i]->solutions) {
      const auto report = verify(solution);
      if (!expect(solution.center() == n + 1 && report.is_magic &&
                      *report.common_sum == 3 * n + 3,
                  detail,
                  "a raw n=" + std::to_string(n) +
                      " solution violates the forced center or sum")) {
        return false;
      }
    }
  }
  return true;
}

bool criterion_mode_agreement(std::string& detail) {
  for (int n : {3, 4, 5}) {
    const auto exhaustive =
        enumerate(n, mode_config(SearchMode::Exhaustive, true));
    const auto pruned = enumerate(n, mode_config(SearchMode::Pruned, true));
    if (!expect(exhaustive.total_count == pruned.total_count &&
                    exhaustive.solutions == pruned.solutions,
                detail, "modes disagree at n = " + std::to_string(n))) {
      return false;
    }
  }
  return true;
}

bool criterion_proof_checker(std::string& detail) {
  const ProofReport report = check_odd_contradiction(10000);
  if (!expect(report.ok && report.distinctness_contradicted, detail,
              "contradiction check failed")) {
    return false;
  }
  if (!expect(report.sweep.checked == 10000 &&
                  report.sweep.disagreements.empty(),
              detail, "numeric sweep disagreed with the symbolic result")) {
    return false;
  }
  // The reduced min-case matrix, row for row.
  auto rf = [](std::int64_t c0, std::int64_t c1) {
    return RationalFunction(Polynomial::linear(c0, c1));
  };
  const RationalFunction zero(0), one(1), minus_one(-1);
  const RfMatrix expected{
      {one, zero, zero, zero, zero, minus_one, rf(-1, -2)},
      {zero, one, zero, zero, zero, one, rf(4, 4)},
      {zero, zero, one, zero, zero, one, rf(5, 6)},
      {zero, zero, zero, one, zero, minus_one, zero},
      {zero, zero, zero, zero, one, one, rf(5, 6)},
  };
  const RfMatrix reduced =
      rref(build_system(SystemCase::VertexHoldsMin).rows).matrix;
  return expect(reduced == expected, detail,
                "min-case reduction differs from the reference matrix");
}

bool criterion_range_partition(std::string& detail) {
  for (int n = 8; n <= 2000; n += 2) {
    const auto report = range_partition_check(n);
    if (!expect(report.ok, detail,
                "range partition failed at n = " + std::to_string(n) +
                    (report.failures.empty() ? "" : ": " +
                     report.failures.front()))) {
      return false;
    }
  }
  return true;
}

bool criterion_injectivity_at_scale(std::string& detail) {
  for (int n : {10000, 100000, 1000000}) {
    const auto t0 = std::chrono::steady_clock::now();
    const Labeling labeling = construct(n);
    std::vector<char> seen(static_cast<std::size_t>(2 * n + 2), 0);
    for (std::int64_t value : labeling.slots()) {
      if (!expect(value >= 1 && value <= 2 * n + 1 &&
                      !seen[static_cast<std::size_t>(value)],
                  detail,
                  "construct(" + std::to_string(n) +
                      ") repeats or escapes the label range")) {
        return false;
      }
      seen[static_cast<std::size_t>(value)] = 1;
    }
    const double elapsed = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - t0)
                               .count();
    if (!expect(elapsed < 10.0, detail,
                "n = " + std::to_string(n) + " over its 10 s budget")) {
      return false;
    }
  }
  return true;
}

bool criterion_determinism(std::string& detail) {
  std::string reference;
  for (int workers : {1, 4, 8}) {
    const auto result =
        enumerate(6, mode_config(SearchMode::Pruned, true, workers));
    const std::string bytes = to_output_bytes(to_json(result));
    if (reference.empty()) {
      reference = bytes;
    } else if (!expect(bytes == reference, detail,
                       "result JSON changed with " +
                           std::to_string(workers) + " workers")) {
      return false;
    }
  }
  return true;
}

bool criterion_symmetry_suite(std::string& detail) {
  for (int n : {4, 6, 8}) {
    const auto elements = group_elements(n);
    std::vector<Labeling> samples;
    samples.push_back(construct(n));
    for (std::uint32_t seed = 0; seed < 25; ++seed) {
      samples.push_back(random_complete_labeling(n, 5000 + seed * 13));
    }
    for (const Labeling& sample : samples) {
      const auto members = orbit(sample);
      if (!expect(2 * static_cast<std::size_t>(n) % members.size() == 0,
                  detail, "orbit size does not divide the group order")) {
        return false;
      }
      const bool magic = verify(sample).is_magic;
      const Labeling canonical = canonical_form(sample);
      if (!expect(canonical_form(canonical) == canonical, detail,
                  "canonical form is not idempotent")) {
        return false;
      }
      for (SymmetryElement g : elements) {
        const Labeling image = apply(g, sample);
        if (!expect(verify(image).is_magic == magic, detail,
                    "a symmetry changed the magic property") ||
            !expect(canonical_form(image) == canonical, detail,
                    "canonical form varies inside an orbit")) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "construction magic for every even n in [6, 1000]", 5.0,
       criterion_construction},
      {2, "reference square and hexagon fixtures", 1.0, criterion_fixtures},
      {3, "odd nonexistence at n = 3, 5 (and pruned n = 7)", 120.0,
       criterion_odd_nonexistence},
      {4, "n = 4 has 8 labelings in one class, by independent oracle", 10.0,
       criterion_square_count},
      {5, "every assumption-free solution carries center n+1, sum 3n+3",
       30.0, criterion_forced_values},
      {6, "pruned and exhaustive modes agree for n = 3, 4, 5", 60.0,
       criterion_mode_agreement},
      {7, "row-reduction argument forces e = g, sweep k = 1..10000", 30.0,
       criterion_proof_checker},
      {8, "range partition for every even n in [8, 2000]", 10.0,
       criterion_range_partition},
      {9, "injectivity at n = 10^4, 10^5, 10^6", 30.0,
       criterion_injectivity_at_scale},
      {10, "byte-identical results across 1, 4, 8 workers", 600.0,
       criterion_determinism},
      {11, "orbit, apply and canonical-form properties at n = 4, 6, 8",
       120.0, criterion_symmetry_suite},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool passed = false;
    try {
      passed = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double elapsed = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    if (elapsed > criterion.budget_seconds) {
      passed = false;
      if (detail.empty()) detail = "over time budget";
    }
    std::printf("[%s] criterion %2d: %s (%.2f s, budget %.0f s)%s%s\n",
                passed ? "PASS" : "FAIL", criterion.id,
                criterion.label.c_str(), elapsed, criterion.budget_seconds,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!passed) ++failures;
  }
  if (failures == 0) {
    std::printf("all %zu acceptance criteria passed\n", criteria.size());
  } else {
    std::printf("%d acceptance criteria FAILED\n", failures);
  }
  return failures;
}
