#include "klq/search.hpp"

#include <atomic>
#include <mutex>
#include <set>
#include <thread>

#include "json.hpp"

#include "klq/bruhat.hpp"

namespace klq {

namespace {

// rwd-order comparison by box: (r,c) precedes (r',c') in the row word iff it
// lies in a higher row, or in the same row further left.  Stable while the
// tableau grows, which is what makes condition 4 checkable incrementally.
bool rwd_before(const std::pair<int, int>& a, const std::pair<int, int>& b) {
  return a.first > b.first || (a.first == b.first && a.second < b.second);
}

}  // namespace

bool cond_descents(const Tableau& p_x, const Tableau& p_w) {
  const std::uint64_t dx = p_x.descent_mask(), dw = p_w.descent_mask();
  return (dw & ~dx) == 0;
}

bool cond_top_letter(const Tableau& p_x, const Tableau& p_w) {
  const int n = p_x.size();
  return p_w.position_of(n - 1).first > p_x.position_of(n - 1).first;
}

bool cond_pattern(const Tableau& p_x, const Tableau& p_w) {
  const int n = p_x.size();
  for (int k = 0; k + 2 < n; ++k) {
    if (!rwd_before(p_w.position_of(k + 2), p_w.position_of(k))) continue;
    if (!rwd_before(p_x.position_of(k + 2), p_x.position_of(k + 1))) return false;
    if (!rwd_before(p_x.position_of(k + 1), p_x.position_of(k))) return false;
  }
  return true;
}

bool cond_irreducible(const Tableau& p_x, const Tableau& p_w, bool row_words) {
  const Permutation x = row_words ? p_x.row_word() : p_x.column_word();
  const Permutation w = row_words ? p_w.row_word() : p_w.column_word();
  // An initial value range 0..i-1 sits at identical positions in both words
  // exactly when the value 0 does; those positions all drop out of the
  // reduction, so the rejection test only depends on the reduced pair.
  if (x.position_of(0) != w.position_of(0)) return true;
  const ReducedPair red = reduce_pair(x, w);
  const auto tw = row_words ? tableau_from_row_word(red.w) : tableau_from_column_word(red.w);
  if (!tw) return true;
  const auto tx = row_words ? tableau_from_row_word(red.x) : tableau_from_column_word(red.x);
  if (!tx) return true;
  return tx->shape() != tw->shape();
}

bool cond_parity(const Tableau& p_x, const Tableau& p_w) {
  const int diff = p_w.column_word().length() - p_x.column_word().length();
  return diff % 2 != 0;
}

bool cond_knuth_min(const Tableau& p_x, const Tableau& p_w, bool restricted) {
  const Permutation u0 = p_x.column_word(), v0 = p_w.column_word();
  const int n = u0.degree();
  const int base_diff = v0.length() - u0.length();
  using State = std::pair<std::vector<int>, std::vector<int>>;
  std::set<State> seen;
  std::vector<std::pair<Permutation, Permutation>> queue;
  seen.insert({u0.images(), v0.images()});
  queue.emplace_back(u0, v0);
  while (!queue.empty()) {
    auto [u, v] = queue.back();
    queue.pop_back();
    for (int k = 0; k + 2 < n; ++k) {
      if (!star_applicable(k, u) || !star_applicable(k, v)) continue;
      Permutation u2 = star_apply(k, u), v2 = star_apply(k, v);
      const int diff = v2.length() - u2.length();
      if (diff < base_diff) return false;
      if (restricted && diff != base_diff) continue;
      State s{u2.images(), v2.images()};
      if (seen.insert(std::move(s)).second) queue.emplace_back(std::move(u2), std::move(v2));
    }
  }
  return true;
}

bool cond_all_q_comparable(const Tableau& p_x, const Tableau& p_w, bool knuth_walk) {
  if (!knuth_walk) {
    bool ok = true;
    for_each_standard_tableau(p_x.shape(), [&](const Tableau& q) {
      if (!ok) return;
      const Permutation x = inverse_rsk(p_x, q), w = inverse_rsk(p_w, q);
      if (x == w || !bruhat_leq(x, w)) ok = false;
    });
    return ok;
  }
  // Walk the recording tableaux by simultaneous right star moves instead of
  // enumerating them; the walk is connected over all fillings of the shape.
  const int n = p_x.size();
  const Permutation x0 = p_x.column_word(), w0 = p_w.column_word();
  using State = std::pair<std::vector<int>, std::vector<int>>;
  std::set<State> seen;
  std::vector<std::pair<Permutation, Permutation>> queue;
  seen.insert({x0.images(), w0.images()});
  queue.emplace_back(x0, w0);
  while (!queue.empty()) {
    auto [x, w] = queue.back();
    queue.pop_back();
    if (x == w || !bruhat_leq(x, w)) return false;
    for (int k = 0; k + 2 < n; ++k) {
      if (!right_star_applicable(k, x) || !right_star_applicable(k, w)) continue;
      Permutation x2 = right_star_apply(k, x), w2 = right_star_apply(k, w);
      State s{x2.images(), w2.images()};
      if (seen.insert(std::move(s)).second) queue.emplace_back(std::move(x2), std::move(w2));
    }
  }
  return true;
}

RecordingChoice choose_recording(const Tableau& p_x, const Tableau& p_w) {
  RecordingChoice best;
  bool have = false;
  for_each_standard_tableau(p_x.shape(), [&](const Tableau& q) {
    const Permutation x = inverse_rsk(p_x, q), w = inverse_rsk(p_w, q);
    const int diff = w.length() - x.length();
    if (!have || diff < best.length_diff) {
      best = {q, x, w, diff};
      have = true;
    }
  });
  if (!have) throw std::logic_error("empty shape in choose_recording");
  return best;
}

namespace {

// Growth state of one tableau: partial rows plus box lookup per letter.
struct Partial {
  std::vector<std::vector<int>> rows;
  std::vector<std::pair<int, int>> box;  // by letter

  explicit Partial(int n) { box.reserve(static_cast<std::size_t>(n)); }

  bool addable(int r) const {
    if (r > static_cast<int>(rows.size())) return false;
    if (r == static_cast<int>(rows.size())) return true;
    if (r == 0) return true;
    return rows[static_cast<std::size_t>(r)].size() < rows[static_cast<std::size_t>(r) - 1].size();
  }

  void place(int letter, int r) {
    if (r == static_cast<int>(rows.size())) rows.emplace_back();
    rows[static_cast<std::size_t>(r)].push_back(letter);
    box.emplace_back(r, static_cast<int>(rows[static_cast<std::size_t>(r)].size()) - 1);
  }

  void unplace(int r) {
    rows[static_cast<std::size_t>(r)].pop_back();
    if (rows[static_cast<std::size_t>(r)].empty()) rows.pop_back();
    box.pop_back();
  }

  bool descent(int i) const {  // i and i+1 placed
    return box[static_cast<std::size_t>(i) + 1].first > box[static_cast<std::size_t>(i)].first &&
           box[static_cast<std::size_t>(i) + 1].second <= box[static_cast<std::size_t>(i)].second;
  }

  Tableau tableau() const { return Tableau::from_rows(rows); }
};

struct Generator {
  int n;
  bool cond8_row_words;
  const std::function<void(const Tableau&, const Tableau&)>* yield;
  Partial x, w;

  Generator(int n_, bool row_words, const std::function<void(const Tableau&, const Tableau&)>& y)
      : n(n_), cond8_row_words(row_words), yield(&y), x(n_), w(n_) {}

  // Smallest shape containing both partial shapes must still fit in n boxes.
  bool shapes_compatible() const {
    const auto& rx = x.rows;
    const auto& rw = w.rows;
    std::size_t total = 0;
    const std::size_t rows = std::max(rx.size(), rw.size());
    for (std::size_t r = 0; r < rows; ++r) {
      const std::size_t a = r < rx.size() ? rx[r].size() : 0;
      const std::size_t b = r < rw.size() ? rw[r].size() : 0;
      total += std::max(a, b);
    }
    return total <= static_cast<std::size_t>(n);
  }

  bool prefix_ok(int m) const {  // letter m was just placed in both
    if (m >= 1 && w.descent(m - 1) && !x.descent(m - 1)) return false;  // condition 1
    if (m >= 2) {  // condition 4 for k = m-2
      const int k = m - 2;
      if (rwd_before(w.box[static_cast<std::size_t>(k) + 2], w.box[static_cast<std::size_t>(k)])) {
        if (!rwd_before(x.box[static_cast<std::size_t>(k) + 2],
                        x.box[static_cast<std::size_t>(k) + 1]))
          return false;
        if (!rwd_before(x.box[static_cast<std::size_t>(k) + 1], x.box[static_cast<std::size_t>(k)]))
          return false;
      }
    }
    return shapes_compatible();
  }

  void grow(int m) {
    if (m == n) {
      if (x.rows.size() != w.rows.size()) return;
      for (std::size_t r = 0; r < x.rows.size(); ++r)
        if (x.rows[r].size() != w.rows[r].size()) return;
      const Tableau tx = x.tableau(), tw = w.tableau();
      if (!cond_top_letter(tx, tw)) return;                     // condition 3
      if (!cond_irreducible(tx, tw, cond8_row_words)) return;   // condition 8
      (*yield)(tx, tw);
      return;
    }
    for (int rx = 0; rx <= static_cast<int>(x.rows.size()); ++rx) {
      if (!x.addable(rx)) continue;
      x.place(m, rx);
      for (int rw = 0; rw <= static_cast<int>(w.rows.size()); ++rw) {
        if (!w.addable(rw)) continue;
        w.place(m, rw);
        if (prefix_ok(m)) grow(m + 1);
        w.unplace(rw);
      }
      x.unplace(rx);
    }
  }
};

}  // namespace

void generate_pairs(int n, const std::function<void(const Tableau&, const Tableau&)>& yield,
                    bool cond8_row_words) {
  Generator g(n, cond8_row_words, yield);
  g.grow(0);
}

std::uint64_t count_same_shape_pairs(int n) {
  std::uint64_t total = 0;
  for (const Shape& s : partitions_of(n)) {
    const std::uint64_t f = count_standard_tableaux(s);
    total += f * f;
  }
  return total;
}

SearchReport run_search(const SearchConfig& config) {
  KLCache cache;
  if (!config.cache_path.empty()) cache.load_if_present(config.cache_path);
  SearchReport report = run_search(config, cache);
  if (!config.cache_path.empty()) cache.save(config.cache_path);
  return report;
}

SearchReport run_search(const SearchConfig& config, KLCache& cache) {
  if (config.n < 2) throw std::invalid_argument("search needs n >= 2");
  SearchReport report;
  report.n = config.n;
  report.generated = count_same_shape_pairs(config.n);

  std::atomic<std::uint64_t> after_parity{0}, after_6{0}, after_5{0}, after_2{0},
      evaluated{0};
  std::mutex survivor_mutex;
  std::vector<std::pair<std::uint64_t, Survivor>> survivors;
  const int workers = std::max(1, config.threads);

  std::vector<std::pair<Tableau, Tableau>> batch;
  std::uint64_t step1_count = 0;

  const auto process = [&](const Tableau& tx, const Tableau& tw, std::uint64_t index) {
    if (!cond_parity(tx, tw)) return;                       // condition 7
    after_parity.fetch_add(1, std::memory_order_relaxed);
    if (!cond_knuth_min(tx, tw, /*restricted=*/true)) return;   // condition 6
    after_6.fetch_add(1, std::memory_order_relaxed);
    if (!cond_knuth_min(tx, tw, /*restricted=*/false)) return;  // condition 5
    after_5.fetch_add(1, std::memory_order_relaxed);
    if (!cond_all_q_comparable(tx, tw, config.cond2_knuth_walk)) return;  // condition 2
    after_2.fetch_add(1, std::memory_order_relaxed);

    const RecordingChoice rc = choose_recording(tx, tw);    // Step 3
    evaluated.fetch_add(1, std::memory_order_relaxed);
    const std::int64_t m = mu(rc.x, rc.w, cache);           // Step 4
    if (m <= 1) return;
    Survivor s{tx, tw, rc.q, rc.x, rc.w, rc.length_diff, m};
    std::lock_guard lock(survivor_mutex);
    survivors.emplace_back(index, std::move(s));
  };

  // Step-2..4 filtering runs over bounded batches so the step-1 stream never
  // has to be materialized in full.
  const auto flush = [&] {
    if (batch.empty()) return;
    const std::uint64_t base = step1_count - batch.size();
    if (workers == 1) {
      for (std::size_t i = 0; i < batch.size(); ++i)
        process(batch[i].first, batch[i].second, base + i);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      for (int t = 0; t < workers; ++t)
        pool.emplace_back([&] {
          for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= batch.size()) return;
            process(batch[i].first, batch[i].second, base + i);
          }
        });
      for (auto& th : pool) th.join();
    }
    batch.clear();
  };

  generate_pairs(config.n,
                 [&](const Tableau& tx, const Tableau& tw) {
                   batch.emplace_back(tx, tw);
                   ++step1_count;
                   if (batch.size() >= 65536) flush();
                 },
                 config.cond8_row_words);
  flush();

  report.after_step1 = step1_count;
  report.after_parity = after_parity.load();
  report.after_knuth_restricted = after_6.load();
  report.after_knuth_full = after_5.load();
  report.after_all_q = after_2.load();
  report.evaluated_mu = evaluated.load();
  std::sort(survivors.begin(), survivors.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [idx, s] : survivors) report.survivors.push_back(std::move(s));
  return report;
}

std::string SearchReport::str() const {
  std::string out;
  out += "search n=" + std::to_string(n) + "\n";
  out += "pairs (same shape)        " + std::to_string(generated) + "\n";
  out += "after step 1 (1,3,4,8)    " + std::to_string(after_step1) + "\n";
  out += "after condition 7         " + std::to_string(after_parity) + "\n";
  out += "after condition 6         " + std::to_string(after_knuth_restricted) + "\n";
  out += "after condition 5         " + std::to_string(after_knuth_full) + "\n";
  out += "after condition 2         " + std::to_string(after_all_q) + "\n";
  out += "mu evaluated              " + std::to_string(evaluated_mu) + "\n";
  out += "survivors (mu >= 2)       " + std::to_string(survivors.size()) + "\n";
  for (const auto& s : survivors)
    out += "  P_x=" + s.p_x.str() + " P_w=" + s.p_w.str() + " Q=" + s.q.str() +
           " x=" + s.x.str() + " w=" + s.w.str() +
           " ldiff=" + std::to_string(s.length_diff) + " mu=" + std::to_string(s.mu_value) +
           "\n";
  return out;
}

std::string SearchReport::json() const {
  nlohmann::json j;
  j["n"] = n;
  j["counts"] = {{"pairs", generated},
                 {"after_step1", after_step1},
                 {"after_cond7", after_parity},
                 {"after_cond6", after_knuth_restricted},
                 {"after_cond5", after_knuth_full},
                 {"after_cond2", after_all_q},
                 {"mu_evaluated", evaluated_mu}};
  j["survivors"] = nlohmann::json::array();
  for (const auto& s : survivors)
    j["survivors"].push_back({{"P_x", s.p_x.str()},
                              {"P_w", s.p_w.str()},
                              {"Q", s.q.str()},
                              {"x", s.x.str()},
                              {"w", s.w.str()},
                              {"length_diff", s.length_diff},
                              {"mu", s.mu_value}});
  return j.dump(2);
}

}  // namespace klq
