#include <seqopt/enumeration.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <thread>

#include <seqopt/rng.hpp>

namespace seqopt {

namespace {

/// All permutations of {1..n} in lexicographic order.
std::vector<Perm> all_perms(unsigned n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Bitmask of record positions (bit i-1 = position i).
std::uint32_t record_mask(const Perm& p) {
  std::uint32_t mask = 0;
  int best = static_cast<int>(p.size()) + 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < best) {
      best = p[i];
      mask |= 1u << i;
    }
  }
  return mask;
}

BigCount tuple_space(unsigned k, unsigned n) { return ipow(factorial(n), k); }

void check_budget(const char* who, const BigCount& ways, std::uint64_t budget) {
  if (ways > budget)
    throw BudgetExceeded(std::string(who) + ": " + ways.str() +
                         " tuples exceed budget " + std::to_string(budget));
}

/// Round-robin partition of the first column across jobs; merging partial
/// histograms by exact addition makes the result schedule-independent.
CountHistogram run_partitioned(unsigned k, unsigned n, unsigned jobs,
                               const std::function<void(std::size_t, CountHistogram&)>& per_first) {
  const std::size_t first_count = factorial(n).convert_to<std::size_t>();
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    CountHistogram h(k, n);
    for (std::size_t f = 0; f < first_count; ++f) per_first(f, h);
    return h;
  }
  std::vector<CountHistogram> parts(jobs, CountHistogram(k, n));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < jobs; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t f = w; f < first_count; f += jobs) per_first(f, parts[w]);
    });
  }
  for (std::thread& t : pool) t.join();
  CountHistogram h(k, n);
  for (const CountHistogram& p : parts) h.add(p);
  return h;
}

}  // namespace

std::vector<int> record_positions(const Perm& perm) {
  std::vector<int> out;
  int best = static_cast<int>(perm.size()) + 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] < best) {
      best = perm[i];
      out.push_back(static_cast<int>(i) + 1);
    }
  }
  return out;
}

int seq_opt_weight(const PermTuple& t) {
  std::vector<bool> in_union(static_cast<std::size_t>(t.n) + 1, false);
  int count = 0;
  for (const Perm& col : t.columns)
    for (int pos : record_positions(col))
      if (!in_union[static_cast<std::size_t>(pos)]) {
        in_union[static_cast<std::size_t>(pos)] = true;
        ++count;
      }
  return count;
}

CountHistogram::CountHistogram(unsigned k, unsigned n)
    : k_(k), n_(n), counts_(n + 1, BigCount(0)) {}

BigCount CountHistogram::total() const {
  BigCount t = 0;
  for (const BigCount& c : counts_) t += c;
  return t;
}

void CountHistogram::add(const CountHistogram& o) {
  if (o.k_ != k_ || o.n_ != n_) throw std::invalid_argument("CountHistogram::add: shape mismatch");
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += o.counts_[i];
}

std::string CountHistogram::to_row() const {
  std::string s;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i > 0) s += '\t';
    s += counts_[i].str();
  }
  return s;
}

CountHistogram brute_force_seq_opt(unsigned k, unsigned n, std::uint64_t budget, unsigned jobs) {
  if (k < 1) throw std::invalid_argument("brute_force_seq_opt: k must be >= 1");
  check_budget("brute_force_seq_opt", tuple_space(k, n), budget);
  if (n == 0) {
    CountHistogram h(k, 0);
    h.bump(0);
    return h;
  }

  const std::vector<Perm> perms = all_perms(n);
  std::vector<std::uint32_t> masks(perms.size());
  for (std::size_t i = 0; i < perms.size(); ++i) masks[i] = record_mask(perms[i]);

  auto per_first = [&](std::size_t first, CountHistogram& h) {
    // Odometer over the remaining k-1 columns, lexicographic by index.
    std::vector<std::size_t> idx(k - 1, 0);
    for (;;) {
      std::uint32_t u = masks[first];
      for (std::size_t j : idx) u |= masks[j];
      h.bump(static_cast<unsigned>(__builtin_popcount(u)));
      std::size_t c = idx.size();
      while (c > 0) {
        --c;
        if (++idx[c] < masks.size()) break;
        idx[c] = 0;
        if (c == 0) return;
      }
      if (idx.empty()) return;
    }
  };
  return run_partitioned(k, n, jobs, per_first);
}

CountHistogram color_boards_count(unsigned k, unsigned n, std::uint64_t budget, unsigned jobs) {
  if (k < 1) throw std::invalid_argument("color_boards_count: k must be >= 1");
  check_budget("color_boards_count", tuple_space(k, n), budget);
  if (n == 0) {
    CountHistogram h(k, 0);
    h.bump(0);
    return h;
  }

  const std::vector<Perm> perms = all_perms(n);

  // heights[j][c] = height of color c's board in group j; color c is seen
  // iff some group shows it above everything in front (strict prefix max).
  auto visible_colors = [&](const std::vector<std::size_t>& cols, std::size_t first) {
    std::vector<bool> seen(n, false);
    int count = 0;
    for (unsigned j = 0; j < k; ++j) {
      const Perm& h = perms[j == 0 ? first : cols[j - 1]];
      int tallest = 0;
      for (unsigned c = 0; c < n; ++c) {
        if (h[c] > tallest) {
          tallest = h[c];
          if (!seen[c]) {
            seen[c] = true;
            ++count;
          }
        }
      }
    }
    return count;
  };

  auto per_first = [&](std::size_t first, CountHistogram& h) {
    std::vector<std::size_t> idx(k - 1, 0);
    for (;;) {
      h.bump(static_cast<unsigned>(visible_colors(idx, first)));
      std::size_t c = idx.size();
      while (c > 0) {
        --c;
        if (++idx[c] < perms.size()) break;
        idx[c] = 0;
        if (c == 0) return;
      }
      if (idx.empty()) return;
    }
  };
  return run_partitioned(k, n, jobs, per_first);
}

int pareto_minima_count(const std::vector<std::vector<int>>& points) {
  int count = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < points.size() && minimal; ++j) {
      if (j == i) continue;
      bool strictly_below = true;
      for (std::size_t c = 0; c < points[i].size(); ++c)
        if (points[j][c] >= points[i][c]) {
          strictly_below = false;
          break;
        }
      if (strictly_below) minimal = false;
    }
    if (minimal) ++count;
  }
  return count;
}

CountHistogram brute_force_opt_numbers(unsigned k, unsigned n, std::uint64_t budget,
                                       unsigned jobs) {
  if (k < 1) throw std::invalid_argument("brute_force_opt_numbers: k must be >= 1");
  check_budget("brute_force_opt_numbers", ipow(factorial(n), k - 1), budget);
  if (n == 0) {
    CountHistogram h(k, 0);
    h.bump(0);
    return h;
  }

  const std::vector<Perm> perms = all_perms(n);

  // Point i has coordinates (i, cols...); the first column is the identity,
  // so free columns number k-1. The first free column doubles as the
  // partition axis; for k = 1 there is a single point set.
  auto histogram_for = [&](const std::vector<std::size_t>& free_cols, CountHistogram& h) {
    std::vector<std::vector<int>> pts(n, std::vector<int>(k));
    for (unsigned i = 0; i < n; ++i) {
      pts[i][0] = static_cast<int>(i) + 1;
      for (std::size_t j = 0; j < free_cols.size(); ++j) pts[i][j + 1] = perms[free_cols[j]][i];
    }
    h.bump(static_cast<unsigned>(pareto_minima_count(pts)));
  };

  if (k == 1) {
    CountHistogram h(1, n);
    histogram_for({}, h);
    return h;
  }

  auto per_first = [&](std::size_t first, CountHistogram& h) {
    std::vector<std::size_t> idx(k - 2, 0);
    std::vector<std::size_t> cols(k - 1);
    cols[0] = first;
    for (;;) {
      for (std::size_t j = 0; j < idx.size(); ++j) cols[j + 1] = idx[j];
      histogram_for(cols, h);
      std::size_t c = idx.size();
      while (c > 0) {
        --c;
        if (++idx[c] < perms.size()) break;
        idx[c] = 0;
        if (c == 0) return;
      }
      if (idx.empty()) return;
    }
  };
  return run_partitioned(k, n, jobs, per_first);
}

TailDominanceResult tail_dominance_check(unsigned k, unsigned n, std::uint64_t budget) {
  TailDominanceResult res;
  res.k = k;
  res.n = n;
  const CountHistogram little = brute_force_opt_numbers(k + 1, n, budget);
  const SeqOptTable big = build_table(k, n);
  const BigCount little_total = little.total();
  const BigCount big_total = big.row_sum(n);

  res.all_hold_raw = true;
  res.all_hold_normalized = true;
  for (unsigned gamma = 0; gamma <= n; ++gamma) {
    TailDominanceResult::GammaRow row;
    row.gamma = gamma;
    for (unsigned m = gamma; m <= n; ++m) {
      row.lhs_raw += little.count(m);
      row.rhs_raw += big.at(n, m);
    }
    row.lhs_normalized = Rational(row.lhs_raw, little_total);
    row.rhs_normalized = Rational(row.rhs_raw, big_total);
    row.holds_raw = row.lhs_raw >= row.rhs_raw;
    row.holds_normalized = row.lhs_normalized >= row.rhs_normalized;
    res.all_hold_raw = res.all_hold_raw && row.holds_raw;
    res.all_hold_normalized = res.all_hold_normalized && row.holds_normalized;
    res.rows.push_back(std::move(row));
  }
  return res;
}

Report TailDominanceResult::report() const {
  Report r;
  r.add("check", "tail_dominance");
  r.add("k_small", k + 1);
  r.add("k_big", k);
  r.add("n", n);
  for (const GammaRow& row : rows) {
    const std::string p = "gamma_" + std::to_string(row.gamma);
    r.add(p + "_lhs_raw", row.lhs_raw);
    r.add(p + "_rhs_raw", row.rhs_raw);
    r.add(p + "_holds_raw", row.holds_raw);
    r.add(p + "_holds_normalized", row.holds_normalized);
  }
  r.add("all_hold_raw", all_hold_raw);
  r.add("all_hold_normalized", all_hold_normalized);
  return r;
}

TiesMonotonicityResult ties_monotonicity_check(const std::vector<std::vector<int>>& points_with_ties,
                                               std::uint64_t tiebreak_seed, unsigned trials) {
  for (const auto& p : points_with_ties)
    if (p.size() != 2) throw ArityMismatch("ties_monotonicity_check: points must be 2-d");
  TiesMonotonicityResult res;
  res.point_count = points_with_ties.size();
  res.trials = trials;

  std::vector<Label> weak_labels;
  weak_labels.reserve(points_with_ties.size());
  for (const auto& p : points_with_ties)
    weak_labels.push_back(Label({p[0], p[1]}));
  res.weight_weak = static_cast<int>(
      ParetoFront::from_set(weak_labels, RelationVector::all_less_eq(2)).size());

  res.all_hold = true;
  const std::size_t n = points_with_ties.size();
  for (unsigned t = 0; t < trials; ++t) {
    std::mt19937_64 rng(derive_seed(tiebreak_seed, t));
    // Per dimension: order point indices by (value, random key); ranks give a
    // strict total order consistent with the weak one.
    std::vector<Label> strict(n, Label::zeros(2));
    std::vector<std::vector<std::int64_t>> coords(n, std::vector<std::int64_t>(2));
    for (unsigned d = 0; d < 2; ++d) {
      std::vector<std::pair<std::pair<int, std::uint64_t>, std::size_t>> order(n);
      for (std::size_t i = 0; i < n; ++i)
        order[i] = {{points_with_ties[i][d], rng()}, i};
      std::sort(order.begin(), order.end());
      for (std::size_t r = 0; r < n; ++r) coords[order[r].second][d] = static_cast<std::int64_t>(r) + 1;
    }
    for (std::size_t i = 0; i < n; ++i) strict[i] = Label({coords[i][0], coords[i][1]});
    const int w = static_cast<int>(
        ParetoFront::from_set(strict, RelationVector::all_less(2)).size());
    if (t == 0) {
      res.strict_weight_min = w;
      res.strict_weight_max = w;
    } else {
      res.strict_weight_min = std::min(res.strict_weight_min, w);
      res.strict_weight_max = std::max(res.strict_weight_max, w);
    }
    if (res.weight_weak > w) res.all_hold = false;
  }
  return res;
}

Report TiesMonotonicityResult::report() const {
  Report r;
  r.add("check", "ties_monotonicity");
  r.add("points", std::uint64_t(point_count));
  r.add("weight_weak", weight_weak);
  r.add("trials", trials);
  r.add("strict_weight_min", strict_weight_min);
  r.add("strict_weight_max", strict_weight_max);
  r.add("all_hold", all_hold);
  return r;
}

}  // namespace seqopt
