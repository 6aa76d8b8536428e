#include "satcore/cola.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <stdexcept>

namespace satcore {

namespace {

class ColaEngine {
 public:
  ColaEngine(const LambdaCell& cell, Rng& rng) : cell_(cell), rng_(rng) {
    const auto total = cell.clones.size();
    const std::size_t literals = 2 * static_cast<std::size_t>(cell.n);
    position_.resize(total);
    matched_.assign(total, 0);
    count_.assign(literals, 0);
    stacked_.assign(cell.n, 0);
    for (std::size_t i = 0; i < total; ++i) {
      const auto& clone = cell.clones[i];
      if (clone.literal.var() > cell.n) throw std::invalid_argument("clone literal outside 1..n");
      if (!(clone.position >= 0.0 && clone.position <= cell.lambda)) {
        throw std::invalid_argument("clone position outside [0, lambda]");
      }
      position_[i] = clone.position;
      ++count_[clone.literal.code()];
    }
    // Clone lists per literal, in cell order.
    first_.assign(literals + 1, 0);
    for (std::size_t y = 0; y < literals; ++y) first_[y + 1] = first_[y] + count_[y];
    by_literal_.resize(total);
    std::vector<std::uint32_t> fill(first_.begin(), first_.end() - 1);
    for (std::uint32_t i = 0; i < total; ++i) by_literal_[fill[cell.clones[i].literal.code()]++] = i;

    heap_.resize(total);
    for (std::uint32_t i = 0; i < total; ++i) heap_[i] = i;
    std::make_heap(heap_.begin(), heap_.end(), below_);

    unmatched_ = total;
    for (std::uint32_t v = 0; v < cell.n; ++v) light_ += contribution(v);
  }

  ColaOutcome run() {
    ColaOutcome out;
    out.formula = MultiFormula(cell_.n, 2);
    out.core_formula = MultiFormula(cell_.n, 2);
    auto& trace = out.trace;
    trace.lambda = cell_.lambda;
    trace.n = cell_.n;
    trace.total_clones = cell_.clones.size();
    trace.samples.reserve(cell_.clones.size() / 2 + 2);
    cutoff_ = cell_.lambda;
    record(trace);

    for (std::uint32_t v = 0; v < cell_.n; ++v) stack_if_pure(v);
    out.no_pure_at_start = stack_.empty();

    // Stack phase: every popped clone belongs to a pure literal.
    while (!stack_.empty()) {
      std::uint32_t c = stack_.back();
      stack_.pop_back();
      if (matched_[c]) continue;
      take(c);
      if (unmatched_ == 0) {
        out.formula.add_clause({literal(c)});
      } else {
        std::uint32_t partner = pop_largest();
        take(partner);
        cutoff_ = position_[partner];
        out.formula.add_clause({literal(c), literal(partner)});
        stack_if_pure(literal(partner).var_index());
      }
      record(trace);
    }
    if (light_ != 0) throw std::logic_error("stack emptied while light clones remain");
    trace.lambda_C = cutoff_;
    trace.core_start = trace.samples.size() - 1;

    // Free steps: uniform choice, matched to the largest other clone.
    std::vector<std::uint32_t> alive;
    alive.reserve(unmatched_);
    for (std::uint32_t i = 0; i < matched_.size(); ++i) {
      if (!matched_[i]) alive.push_back(i);
    }
    out.core_support = alive;
    std::vector<std::uint32_t> slot(matched_.size(), 0);
    for (std::uint32_t s = 0; s < alive.size(); ++s) slot[alive[s]] = s;
    auto remove_alive = [&](std::uint32_t clone) {
      std::uint32_t s = slot[clone];
      alive[s] = alive.back();
      slot[alive[s]] = s;
      alive.pop_back();
    };

    while (alive.size() >= 2) {
      std::uint32_t c = alive[rng_.below(alive.size())];
      remove_alive(c);
      take(c);
      std::uint32_t partner = pop_largest();
      remove_alive(partner);
      take(partner);
      cutoff_ = position_[partner];
      out.formula.add_clause({literal(c), literal(partner)});
      out.core_formula.add_clause({literal(c), literal(partner)});
      record(trace);
    }
    if (alive.size() == 1) {
      std::uint32_t c = alive.back();
      alive.pop_back();
      take(c);
      out.formula.add_clause({literal(c)});
      out.core_formula.add_clause({literal(c)});
      record(trace);
    }
    return out;
  }

 private:
  Literal literal(std::uint32_t clone) const { return cell_.clones[clone].literal; }

  // Unmatched clones of the pure side of variable v, or 0 if v is not pure.
  std::uint64_t contribution(std::uint32_t v) const {
    auto pos = count_[2 * v];
    auto neg = count_[2 * v + 1];
    return pos == 0 ? neg : (neg == 0 ? pos : 0);
  }

  void take(std::uint32_t clone) {
    matched_[clone] = 1;
    std::uint32_t code = literal(clone).code();
    std::uint32_t v = code / 2;
    light_ -= contribution(v);
    --count_[code];
    light_ += contribution(v);
    --unmatched_;
    ++matched_count_;
  }

  void stack_if_pure(std::uint32_t v) {
    if (stacked_[v] || contribution(v) == 0) return;
    stacked_[v] = 1;
    std::uint32_t code = count_[2 * v] == 0 ? 2 * v + 1 : 2 * v;
    // Push so that clones pop in cell order; that order does not depend on
    // positions, which keeps the choice oblivious.
    for (auto i = first_[code + 1]; i > first_[code]; --i) {
      std::uint32_t clone = by_literal_[i - 1];
      if (!matched_[clone]) stack_.push_back(clone);
    }
  }

  std::uint32_t pop_largest() {
    while (!heap_.empty()) {
      std::pop_heap(heap_.begin(), heap_.end(), below_);
      std::uint32_t top = heap_.back();
      heap_.pop_back();
      if (!matched_[top]) return top;
    }
    throw std::logic_error("no unmatched clone left to pair");
  }

  void record(ColaTrace& trace) const {
    trace.samples.push_back({matched_count_, cutoff_, light_, unmatched_ - light_});
  }

  struct PositionOrder {
    const std::vector<double>* position;
    bool operator()(std::uint32_t a, std::uint32_t b) const {
      double pa = (*position)[a];
      double pb = (*position)[b];
      return pa < pb || (pa == pb && a < b);
    }
  };

  const LambdaCell& cell_;
  Rng& rng_;
  std::vector<double> position_;
  std::vector<std::uint8_t> matched_;
  std::vector<std::uint32_t> count_;
  std::vector<std::uint8_t> stacked_;
  std::vector<std::uint32_t> first_;
  std::vector<std::uint32_t> by_literal_;
  std::vector<std::uint32_t> heap_;
  std::vector<std::uint32_t> stack_;
  PositionOrder below_{&position_};
  std::uint64_t light_ = 0;
  std::uint64_t unmatched_ = 0;
  std::uint64_t matched_count_ = 0;
  double cutoff_ = 0.0;
};

}  // namespace

ColaOutcome run_cola_core(const LambdaCell& cell, Rng& rng) { return ColaEngine(cell, rng).run(); }

std::vector<TrajectoryPoint> trajectory(const ColaTrace& trace, std::span<const double> thetas) {
  if (trace.samples.empty()) throw std::invalid_argument("trace has no samples");
  std::vector<TrajectoryPoint> out;
  out.reserve(thetas.size());
  const auto& s = trace.samples;
  for (double theta : thetas) {
    if (!(theta > 0.0 && theta <= 1.0)) throw std::domain_error("theta must lie in (0, 1]");
    double line = theta * trace.lambda;
    auto reach = std::partition_point(s.begin(), s.end(), [line](const CutoffSample& x) { return x.cutoff > line; });
    std::uint64_t n_theta = reach == s.end() ? s.back().matched : reach->matched;

    double target = 2.0 * (1.0 - theta * theta) * trace.lambda * trace.n;
    auto hit = std::partition_point(s.begin(), s.end(),
                                    [target](const CutoffSample& x) { return static_cast<double>(x.matched) < target; });
    double cut = hit == s.end() ? s.back().cutoff : hit->cutoff;
    out.push_back({theta, n_theta, cut});
  }
  return out;
}

void write_trace_csv(const ColaTrace& trace, std::ostream& out) {
  out << "step,matched,cutoff,light,heavy\n";
  auto old_precision = out.precision(12);
  for (std::size_t i = 0; i < trace.samples.size(); ++i) {
    const auto& x = trace.samples[i];
    out << i << ',' << x.matched << ',' << x.cutoff << ',' << x.light << ',' << x.heavy << '\n';
  }
  out.precision(old_precision);
}

ColaCore core_via_cola(std::uint32_t n, double lambda, Rng& rng) {
  auto cell = build_lambda_cell(n, lambda, rng);
  auto outcome = run_cola_core(cell, rng);
  return {std::move(outcome.formula), std::move(outcome.core_formula), outcome.trace.lambda_C,
          std::move(outcome.trace)};
}

}  // namespace satcore
