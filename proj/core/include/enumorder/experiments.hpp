#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "enumorder/coorder.hpp"
#include "enumorder/set_order.hpp"
#include "enumorder/set_spec.hpp"

namespace enumorder {

/// |M| and |L| of E_{m,n} along a schedule of prefix lengths.
struct GrowthSeries {
  ShiftPair shift;
  std::vector<std::size_t> schedule;
  std::vector<std::size_t> m_sizes;
  std::vector<std::size_t> l_sizes;

  bool strictly_increasing() const;
};

struct PairResult {
  std::string left;
  std::string right;
  std::string role;  // empty unless the experiment distinguishes pair kinds
  Refutation descriptor;
  WitnessReport search;
  std::vector<GrowthSeries> growth;
};

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ReproReport {
  std::string experiment;
  std::map<std::string, std::int64_t> params;
  std::vector<PairResult> pairs;
  std::vector<Check> checks;
  bool passed = false;
  double elapsed_ms = 0.0;
};

struct SearchBounds {
  std::size_t m_max = 10;
  std::size_t n_max = 10;
  std::size_t prefix = 500;
};

/// Every pair A_i, A_j (i < j <= i_max): signature refutation plus a shift
/// search on the natural listings. Passes iff every pair is refuted and
/// every shift cell holds a witness. Pairs run concurrently.
ReproReport repro_theorem9(std::size_t i_max, const SearchBounds& bounds = {});

/// For i = 1 .. i_max-1: interleave(A_i, T_{i+1}) vs A_1 (role "chain")
/// and A_i vs T_{i+1} (role "base"). Passes iff every cell is witnessed.
ReproReport repro_theorem5_chain(std::size_t i_max, const SearchBounds& bounds = {});

/// Fixture suite for the small worked examples.
ReproReport repro_examples();

/// Requires the pair to be refuted by descriptors; throws
/// std::invalid_argument otherwise. Passes iff every series is strictly
/// increasing.
ReproReport lemma5_growth(const SetSpec& h, const SetSpec& g, const std::vector<ShiftPair>& shifts,
                          const std::vector<std::size_t>& schedule);

/// harmonic vs thirds and A_1 vs A_2 at shifts (0,0), (3,1), (7,7) along
/// N = 50, 100, 200, 400.
ReproReport repro_lemma5();

}  // namespace enumorder
