#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "klq/kl.hpp"
#include "klq/rsk.hpp"

namespace klq {

/*
  Minimal-counterexample search over same-shape tableau pairs (P_x, P_w).

  Step 1 grows the pair one letter at a time, rejecting early on the descent
  containment, top-letter, row-word pattern and irreducibility conditions.
  Step 2 filters the survivors by parity, the two Knuth-walk length
  conditions and comparability under every recording tableau.  Step 3 picks
  the recording tableau minimizing the length difference, and Step 4 keeps
  the pairs whose mu exceeds 1.
*/

struct SearchConfig {
  int n = 4;
  int threads = 1;
  std::string cache_path;           // optional persistent memo
  bool cond2_knuth_walk = false;    // walk recording tableaux instead of enumerating
  bool cond8_row_words = false;     // irreducibility via row words instead of column words
};

struct Survivor {
  Tableau p_x, p_w, q;
  Permutation x, w;
  int length_diff = 0;
  std::int64_t mu_value = 0;
};

struct SearchReport {
  int n = 0;
  std::uint64_t generated = 0;       // all ordered same-shape pairs
  std::uint64_t after_step1 = 0;     // conditions 1, 3, 4, 8
  std::uint64_t after_parity = 0;    // condition 7
  std::uint64_t after_knuth_restricted = 0;  // condition 6
  std::uint64_t after_knuth_full = 0;        // condition 5
  std::uint64_t after_all_q = 0;     // condition 2 (end of Step 2)
  std::uint64_t evaluated_mu = 0;    // Step 3+4 ran
  std::vector<Survivor> survivors;   // mu >= 2

  std::string str() const;
  std::string json() const;
};

// The filter conditions as standalone predicates (true = the pair survives).
bool cond_descents(const Tableau& p_x, const Tableau& p_w);
bool cond_top_letter(const Tableau& p_x, const Tableau& p_w);
bool cond_pattern(const Tableau& p_x, const Tableau& p_w);
bool cond_irreducible(const Tableau& p_x, const Tableau& p_w, bool row_words = false);
bool cond_parity(const Tableau& p_x, const Tableau& p_w);
/// restricted = only difference-preserving walks may precede the drop.
bool cond_knuth_min(const Tableau& p_x, const Tableau& p_w, bool restricted);
bool cond_all_q_comparable(const Tableau& p_x, const Tableau& p_w,
                           bool knuth_walk = false);

/// Step-1 generation: all ordered same-shape pairs surviving conditions
/// 1, 3, 4 and 8, built one letter at a time with early rejection.
void generate_pairs(int n, const std::function<void(const Tableau&, const Tableau&)>& yield,
                    bool cond8_row_words = false);

/// Sum of squares of the standard tableau counts: the unfiltered pair count.
std::uint64_t count_same_shape_pairs(int n);

/// Step 3: the recording tableau minimizing l(w') - l(x'), ties broken by
/// the lexicographically smallest filling sequence (enumeration order).
struct RecordingChoice {
  Tableau q;
  Permutation x, w;
  int length_diff = 0;
};
RecordingChoice choose_recording(const Tableau& p_x, const Tableau& p_w);

SearchReport run_search(const SearchConfig& config);
SearchReport run_search(const SearchConfig& config, KLCache& cache);

}  // namespace klq
