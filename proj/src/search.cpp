#include "mpoly/search.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <thread>

#include "mpoly/symmetry.hpp"

namespace mpoly {

namespace {

// One node assignment in the fixed search order. A step either carries a
// value known a priori (the pruned center), is forced by a line whose other
// two nodes precede it (legal only once the target sum is known), or is a
// free choice over the unused labels. check_lines lists every line whose
// third node this step assigns; the engine verifies them on the spot.
struct Step {
  int slot = 0;
  std::int64_t fixed_value = 0;
  int forcing_line = -1;
  std::vector<int> check_lines;
};

struct Plan {
  int n = 0;
  int num_labels = 0;
  std::int64_t known_sum = 0;  // 0: pinned by the first completed line
  std::vector<std::array<int, 3>> line_slots;
  std::vector<Step> steps;
  std::size_t first_free = 0;
};

std::vector<NodeId> assignment_order(int n, SearchMode mode) {
  std::vector<NodeId> order;
  order.reserve(2 * static_cast<std::size_t>(n) + 1);
  if (mode == SearchMode::Pruned) {
    order.push_back(NodeId::center());
    if (n % 2 == 0) {
      // Diagonal pairs: the partner of each free vertex is forced.
      for (int i = 1; i <= n / 2; ++i) {
        order.push_back(NodeId::vertex(i));
        order.push_back(NodeId::vertex(n / 2 + i));
      }
      for (int i = 1; i <= n / 2; ++i) {
        order.push_back(NodeId::midpoint(i));
        order.push_back(NodeId::midpoint(n / 2 + i));
      }
    } else {
      for (int i = 1; i <= n; ++i) {
        order.push_back(NodeId::vertex(i));
        order.push_back(NodeId::midpoint(wrap_index(i + (n - 1) / 2, n)));
      }
    }
  } else {
    if (n % 2 == 0) {
      // The first diagonal pins the common sum three steps in.
      order.push_back(NodeId::vertex(1));
      order.push_back(NodeId::center());
      order.push_back(NodeId::vertex(n / 2 + 1));
      for (int i = 2; i <= n / 2; ++i) {
        order.push_back(NodeId::vertex(i));
        order.push_back(NodeId::vertex(n / 2 + i));
      }
      for (int i = 1; i <= n; ++i) order.push_back(NodeId::midpoint(i));
    } else {
      // Side 1 pins the common sum four steps in.
      order.push_back(NodeId::center());
      order.push_back(NodeId::vertex(1));
      order.push_back(NodeId::vertex(2));
      order.push_back(NodeId::midpoint(1));
      for (int i = 3; i <= n; ++i) {
        order.push_back(NodeId::vertex(i));
        order.push_back(NodeId::midpoint(i - 1));
      }
      order.push_back(NodeId::midpoint(n));
    }
  }
  return order;
}

Plan build_plan(int n, SearchMode mode) {
  Plan plan;
  plan.n = n;
  plan.num_labels = 2 * n + 1;
  plan.known_sum = mode == SearchMode::Pruned ? magic_sum(n) : 0;

  const std::vector<Line> all_lines = lines(n);
  plan.line_slots.reserve(all_lines.size());
  for (const Line& line : all_lines) {
    plan.line_slots.push_back({line.nodes[0].slot(n), line.nodes[1].slot(n),
                               line.nodes[2].slot(n)});
  }

  const std::vector<NodeId> order = assignment_order(n, mode);
  std::vector<int> position(static_cast<std::size_t>(2 * n + 1), 0);
  for (std::size_t p = 0; p < order.size(); ++p) {
    position[static_cast<std::size_t>(order[p].slot(n))] =
        static_cast<int>(p);
  }

  plan.steps.resize(order.size());
  for (std::size_t p = 0; p < order.size(); ++p) {
    plan.steps[p].slot = order[p].slot(n);
  }
  if (mode == SearchMode::Pruned) {
    plan.steps[0].fixed_value = center_value(n);
  }

  for (std::size_t li = 0; li < plan.line_slots.size(); ++li) {
    const auto& ls = plan.line_slots[li];
    int last = std::max({position[static_cast<std::size_t>(ls[0])],
                         position[static_cast<std::size_t>(ls[1])],
                         position[static_cast<std::size_t>(ls[2])]});
    plan.steps[static_cast<std::size_t>(last)].check_lines.push_back(
        static_cast<int>(li));
  }

  bool sum_known = plan.known_sum > 0;
  for (std::size_t p = 0; p < plan.steps.size(); ++p) {
    Step& step = plan.steps[p];
    if (step.fixed_value == 0 && sum_known) {
      for (int li : step.check_lines) {
        const auto& ls = plan.line_slots[static_cast<std::size_t>(li)];
        bool others_before = true;
        for (int slot : ls) {
          if (slot != step.slot &&
              position[static_cast<std::size_t>(slot)] >=
                  static_cast<int>(p)) {
            others_before = false;
          }
        }
        if (others_before) {
          step.forcing_line = li;
          break;
        }
      }
    }
    if (!step.check_lines.empty()) sum_known = true;
  }

  plan.first_free = plan.steps.size();
  for (std::size_t p = 0; p < plan.steps.size(); ++p) {
    if (plan.steps[p].fixed_value == 0 && plan.steps[p].forcing_line < 0) {
      plan.first_free = p;
      break;
    }
  }
  return plan;
}

struct WorkerResult {
  std::int64_t found = 0;
  std::int64_t explored = 0;
  std::set<Labeling> canonical;
};

class Engine {
 public:
  Engine(const Plan& plan)
      : plan_(plan),
        value_(static_cast<std::size_t>(plan.num_labels), 0),
        used_(static_cast<std::size_t>(plan.num_labels) + 1, 0),
        sum_target_(plan.known_sum) {}

  // Applies fixed/forced steps before the branch point. False means the
  // whole search space is empty.
  bool run_prefix(std::int64_t& explored) {
    for (std::size_t p = 0; p < plan_.first_free; ++p) {
      const Step& step = plan_.steps[p];
      std::int64_t v = step.fixed_value > 0 ? step.fixed_value
                                            : forced_value(step);
      ++explored;
      if (!place(step, v)) return false;
    }
    return true;
  }

  // Explores the subtree under one candidate value of the branch step.
  void run_branch(std::int64_t branch_value, WorkerResult& out) {
    out_ = &out;
    const Step& step = plan_.steps[plan_.first_free];
    ++out.explored;
    if (place(step, branch_value)) {
      descend(plan_.first_free + 1);
      unplace(step, branch_value);
    }
    out_ = nullptr;
  }

  bool value_available(std::int64_t v) const {
    return v >= 1 && v <= plan_.num_labels &&
           used_[static_cast<std::size_t>(v)] == 0;
  }

 private:
  std::int64_t forced_value(const Step& step) const {
    const auto& ls =
        plan_.line_slots[static_cast<std::size_t>(step.forcing_line)];
    std::int64_t others = 0;
    for (int slot : ls) {
      if (slot != step.slot) others += value_[static_cast<std::size_t>(slot)];
    }
    return sum_target_ - others;
  }

  // Assigns v to the step's slot and validates every line completed here,
  // pinning the target sum if this is the first completed line. Leaves the
  // board untouched on failure.
  bool place(const Step& step, std::int64_t v) {
    if (!value_available(v)) return false;
    value_[static_cast<std::size_t>(step.slot)] = v;
    used_[static_cast<std::size_t>(v)] = 1;
    bool pinned_here = false;
    for (int li : step.check_lines) {
      const auto& ls = plan_.line_slots[static_cast<std::size_t>(li)];
      const std::int64_t sum = value_[static_cast<std::size_t>(ls[0])] +
                               value_[static_cast<std::size_t>(ls[1])] +
                               value_[static_cast<std::size_t>(ls[2])];
      if (sum_target_ == 0) {
        sum_target_ = sum;
        pinned_here = true;
      } else if (sum != sum_target_) {
        if (pinned_here) sum_target_ = 0;
        value_[static_cast<std::size_t>(step.slot)] = 0;
        used_[static_cast<std::size_t>(v)] = 0;
        return false;
      }
    }
    if (pinned_here) pinned_steps_.push_back(step.slot);
    return true;
  }

  void unplace(const Step& step, std::int64_t v) {
    if (!pinned_steps_.empty() && pinned_steps_.back() == step.slot) {
      pinned_steps_.pop_back();
      sum_target_ = 0;
    }
    value_[static_cast<std::size_t>(step.slot)] = 0;
    used_[static_cast<std::size_t>(v)] = 0;
  }

  void descend(std::size_t depth) {
    if (depth == plan_.steps.size()) {
      record_solution();
      return;
    }
    const Step& step = plan_.steps[depth];
    if (step.fixed_value > 0 || step.forcing_line >= 0) {
      std::int64_t v =
          step.fixed_value > 0 ? step.fixed_value : forced_value(step);
      ++out_->explored;
      if (place(step, v)) {
        descend(depth + 1);
        unplace(step, v);
      }
      return;
    }
    for (std::int64_t v = 1; v <= plan_.num_labels; ++v) {
      if (used_[static_cast<std::size_t>(v)]) continue;
      ++out_->explored;
      if (place(step, v)) {
        descend(depth + 1);
        unplace(step, v);
      }
    }
  }

  void record_solution() {
    ++out_->found;
    Labeling labeling(plan_.n);
    labeling.slots() = value_;
    out_->canonical.insert(canonical_form(labeling));
  }

  const Plan& plan_;
  std::vector<std::int64_t> value_;
  std::vector<char> used_;
  std::int64_t sum_target_;
  std::vector<int> pinned_steps_;
  WorkerResult* out_ = nullptr;
};

void validate_request(int n, const SearchConfig& config) {
  if (n < 3) {
    throw std::invalid_argument("polygon order must be at least 3, got " +
                                std::to_string(n));
  }
  if (config.worker_count < 1) {
    throw std::invalid_argument("worker_count must be positive");
  }
  if (config.mode == SearchMode::Exhaustive && n > config.exhaustive_cap) {
    throw std::invalid_argument(
        "exhaustive search is capped at n = " +
        std::to_string(config.exhaustive_cap) +
        "; use pruned mode for larger n");
  }
  if (config.mode == SearchMode::Pruned) {
    const int cap =
        n % 2 == 0 ? config.pruned_even_cap : config.pruned_odd_cap;
    if (n > cap) {
      throw std::invalid_argument("pruned search is capped at n = " +
                                  std::to_string(cap) + " for this parity");
    }
  }
}

}  // namespace

const char* to_string(SearchMode mode) {
  return mode == SearchMode::Exhaustive ? "exhaustive" : "pruned";
}

EnumerationResult enumerate(int n, const SearchConfig& config) {
  validate_request(n, config);
  const auto start = std::chrono::steady_clock::now();

  const Plan plan = build_plan(n, config.mode);

  EnumerationResult result;
  result.n = n;
  result.mode = config.mode;
  result.up_to_symmetry = config.up_to_symmetry;

  Engine prefix_engine(plan);
  std::int64_t prefix_explored = 0;
  const bool feasible = prefix_engine.run_prefix(prefix_explored);
  result.nodes_explored = prefix_explored;

  std::set<Labeling> canonical;
  if (feasible) {
    std::vector<std::int64_t> branches;
    for (std::int64_t v = 1; v <= plan.num_labels; ++v) {
      if (prefix_engine.value_available(v)) branches.push_back(v);
    }

    const int workers = static_cast<int>(
        std::min(static_cast<std::size_t>(config.worker_count),
                 std::max<std::size_t>(branches.size(), 1)));
    std::vector<WorkerResult> partials(static_cast<std::size_t>(workers));

    auto run_worker = [&](int worker_id) {
      Engine engine(plan);
      std::int64_t scratch = 0;
      engine.run_prefix(scratch);  // deterministic, counted once above
      WorkerResult& out = partials[static_cast<std::size_t>(worker_id)];
      for (std::size_t b = static_cast<std::size_t>(worker_id);
           b < branches.size(); b += static_cast<std::size_t>(workers)) {
        engine.run_branch(branches[b], out);
      }
    };

    if (workers == 1) {
      run_worker(0);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(static_cast<std::size_t>(workers));
      for (int w = 0; w < workers; ++w) pool.emplace_back(run_worker, w);
      for (std::thread& t : pool) t.join();
    }

    for (WorkerResult& part : partials) {
      result.total_count += part.found;
      result.nodes_explored += part.explored;
      canonical.merge(part.canonical);
    }
  }

  result.class_count = static_cast<std::int64_t>(canonical.size());
  if (config.emit_solutions) {
    result.solutions.assign(canonical.begin(), canonical.end());
    if (config.solution_limit &&
        static_cast<std::int64_t>(result.solutions.size()) >
            *config.solution_limit) {
      result.solutions.erase(
          result.solutions.begin() +
              static_cast<std::ptrdiff_t>(*config.solution_limit),
          result.solutions.end());
    }
  }

  result.wall_time = std::chrono::steady_clock::now() - start;
  return result;
}

NonexistenceReport verify_nonexistence(int n, const SearchConfig& config) {
  if (n % 2 == 0) {
    throw std::invalid_argument("nonexistence checks apply to odd n only");
  }
  SearchConfig run = config;
  run.emit_solutions = false;
  const EnumerationResult outcome = enumerate(n, run);

  NonexistenceReport report;
  report.n = n;
  report.mode = run.mode;
  report.total_count = outcome.total_count;
  report.nodes_explored = outcome.nodes_explored;
  report.confirmed = outcome.total_count == 0;
  return report;
}

}  // namespace mpoly
