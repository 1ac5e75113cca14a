#include "stpsw/attractors.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

#include "stpsw/errors.hpp"

namespace stpsw {

namespace {

/// Successor list per state: (next state, smallest input reaching it).
std::vector<std::vector<std::pair<std::size_t, std::size_t>>> successors(const LogicalNetwork& net) {
  std::size_t n = net.states();
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> out(n + 1);
  for (std::size_t theta = 1; theta <= n; ++theta)
    for (std::size_t g = 1; g <= net.inputs(); ++g) {
      std::size_t next = net.next_state(g, theta);
      auto& list = out[theta];
      if (std::none_of(list.begin(), list.end(), [&](const auto& e) { return e.first == next; }))
        list.emplace_back(next, g);
    }
  for (auto& list : out) std::sort(list.begin(), list.end());
  return out;
}

class CycleFinder {
 public:
  CycleFinder(const LogicalNetwork& net, std::size_t cap) : succ_(successors(net)), cap_(cap) {}

  std::vector<ControlAttractor> run(bool& truncated) {
    std::size_t n = succ_.size() - 1;
    on_path_.assign(n + 1, false);
    for (start_ = 1; start_ <= n; ++start_) {
      per_start_limit_ = found_.size() >= cap_ ? 1 : static_cast<std::size_t>(-1);
      found_here_ = 0;
      if (found_.size() >= cap_) truncated = true;
      path_ = {start_};
      on_path_[start_] = true;
      dfs(start_);
      on_path_[start_] = false;
    }
    return std::move(found_);
  }

 private:
  void dfs(std::size_t u) {
    for (auto [v, g] : succ_[u]) {
      if (found_here_ >= per_start_limit_) return;
      if (v == start_ && path_.size() >= 2) {
        inputs_.push_back(g);
        ControlAttractor c;
        c.kind = AttractorKind::Cycle;
        c.states = path_;
        c.inputs = inputs_;
        found_.push_back(std::move(c));
        ++found_here_;
        inputs_.pop_back();
        continue;
      }
      if (v <= start_ || on_path_[v]) continue;
      on_path_[v] = true;
      path_.push_back(v);
      inputs_.push_back(g);
      dfs(v);
      inputs_.pop_back();
      path_.pop_back();
      on_path_[v] = false;
    }
  }

  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> succ_;
  std::size_t cap_;
  std::size_t start_ = 0;
  std::size_t per_start_limit_ = 0;
  std::size_t found_here_ = 0;
  std::vector<bool> on_path_;
  std::vector<std::size_t> path_;
  std::vector<std::size_t> inputs_;
  std::vector<ControlAttractor> found_;
};

void fill_basin(const LogicalNetwork& net, const std::vector<std::vector<std::size_t>>& preds, ControlAttractor& a) {
  std::size_t n = net.states();
  std::vector<std::size_t> dist(n + 1, static_cast<std::size_t>(-1));
  std::deque<std::size_t> queue;
  for (std::size_t s : a.states) {
    dist[s] = 0;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t u : preds[v])
      if (dist[u] == static_cast<std::size_t>(-1)) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
  }
  a.basin.clear();
  a.steering_depth = 0;
  for (std::size_t s = 1; s <= n; ++s)
    if (dist[s] != static_cast<std::size_t>(-1)) {
      a.basin.push_back(s);
      a.steering_depth += dist[s];
    }
}

auto selection_key(const ControlAttractor& a) {
  return std::make_tuple(-static_cast<long long>(a.basin.size()), a.kind == AttractorKind::Cycle ? 1 : 0,
                         a.steering_depth, a.states.size(), a.representative());
}

}  // namespace

std::vector<std::size_t> ControlAttractorReport::checked_states() const {
  std::vector<std::size_t> out;
  for (const auto& a : selected) out.push_back(a.representative());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const ControlAttractor& ControlAttractorReport::covering(std::size_t theta) const {
  for (const auto& a : selected)
    if (std::binary_search(a.basin.begin(), a.basin.end(), theta)) return a;
  throw IndexError("state not covered by any selected attractor");
}

ControlAttractorReport control_attractors(const LogicalNetwork& net, std::size_t max_cycles) {
  std::size_t n = net.states();
  ControlAttractorReport report;

  std::vector<std::vector<std::size_t>> preds(n + 1);
  for (std::size_t theta = 1; theta <= n; ++theta)
    for (std::size_t g = 1; g <= net.inputs(); ++g) {
      std::size_t next = net.next_state(g, theta);
      if (std::find(preds[next].begin(), preds[next].end(), theta) == preds[next].end())
        preds[next].push_back(theta);
    }

  for (std::size_t theta = 1; theta <= n; ++theta)
    for (std::size_t g = 1; g <= net.inputs(); ++g)
      if (net.next_state(g, theta) == theta) {
        ControlAttractor fp;
        fp.kind = AttractorKind::FixedPoint;
        fp.states = {theta};
        fp.inputs = {g};
        fill_basin(net, preds, fp);
        report.fixed_points.push_back(std::move(fp));
        break;
      }

  CycleFinder finder(net, max_cycles);
  report.cycles = finder.run(report.cycles_truncated);
  for (auto& c : report.cycles) fill_basin(net, preds, c);

  std::vector<const ControlAttractor*> order;
  for (const auto& a : report.fixed_points) order.push_back(&a);
  for (const auto& a : report.cycles) order.push_back(&a);
  std::stable_sort(order.begin(), order.end(),
                   [](const auto* a, const auto* b) { return selection_key(*a) < selection_key(*b); });

  std::vector<bool> covered(n + 1, false);
  auto overlaps = [&](const ControlAttractor& a) {
    return std::any_of(a.basin.begin(), a.basin.end(), [&](std::size_t s) { return covered[s]; });
  };
  auto take = [&](const ControlAttractor& a) {
    for (std::size_t s : a.basin) covered[s] = true;
    report.selected.push_back(a);
  };
  for (const auto* a : order)
    if (!overlaps(*a)) take(*a);

  for (;;) {
    const ControlAttractor* best = nullptr;
    std::size_t best_gain = 0;
    for (const auto* a : order) {
      std::size_t gain = static_cast<std::size_t>(
          std::count_if(a->basin.begin(), a->basin.end(), [&](std::size_t s) { return !covered[s]; }));
      if (gain > best_gain) {
        best_gain = gain;
        best = a;
      }
    }
    if (!best) break;
    take(*best);
  }
  return report;
}

std::optional<std::vector<std::size_t>> steering_inputs(const LogicalNetwork& net, std::size_t from,
                                                        const std::vector<std::size_t>& targets) {
  std::size_t n = net.states();
  if (from < 1 || from > n) throw IndexError("logical state out of range");
  std::vector<bool> is_target(n + 1, false);
  for (std::size_t t : targets) {
    if (t < 1 || t > n) throw IndexError("logical state out of range");
    is_target[t] = true;
  }
  if (is_target[from]) return std::vector<std::size_t>{};
  std::vector<std::size_t> parent(n + 1, 0), via(n + 1, 0);
  std::vector<bool> seen(n + 1, false);
  std::deque<std::size_t> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t g = 1; g <= net.inputs(); ++g) {
      std::size_t v = net.next_state(g, u);
      if (seen[v]) continue;
      seen[v] = true;
      parent[v] = u;
      via[v] = g;
      if (is_target[v]) {
        std::vector<std::size_t> seq;
        for (std::size_t w = v; w != from; w = parent[w]) seq.push_back(via[w]);
        std::reverse(seq.begin(), seq.end());
        return seq;
      }
      queue.push_back(v);
    }
  }
  return std::nullopt;
}

std::optional<std::vector<std::size_t>> steering_inputs(const LogicalNetwork& net, std::size_t from,
                                                        std::size_t target) {
  return steering_inputs(net, from, std::vector<std::size_t>{target});
}

}  // namespace stpsw
