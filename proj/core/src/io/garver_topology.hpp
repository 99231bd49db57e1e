#pragma once

#include <array>

// Transcription of the Garver six-node diagram used by the generator. The
// published text fixes: lines 1-6 existing, lines 7-8 new with zero existing
// capacity, k_fix = 100 for every line, k_var = 3 for lines 7 and 8. The
// remaining per-line numbers (reactances, existing capacities, k_var of the
// existing lines) are only printed inside the figure; the values below are a
// transcription scaled to the bid volumes produced by the generator and are
// not verifiable against the text. Review this table as data.
namespace tep::io::garver {

struct LineRecord {
  int from;  // 0-based node
  int to;
  double reactance;
  double f0;     // MW
  double k_fix;  // money/period
  double k_var;  // money per MW-period
};

inline constexpr std::array<LineRecord, 8> kLines = {{
    {0, 1, 0.40, 1.0, 100.0, 2.0},   // line 1: 1-2
    {0, 3, 0.60, 0.8, 100.0, 2.0},   // line 2: 1-4
    {0, 4, 0.20, 1.0, 100.0, 2.0},   // line 3: 1-5
    {1, 2, 0.20, 1.0, 100.0, 2.0},   // line 4: 2-3
    {1, 3, 0.40, 1.0, 100.0, 2.0},   // line 5: 2-4
    {2, 4, 0.20, 1.0, 100.0, 2.0},   // line 6: 3-5
    {1, 5, 0.30, 0.0, 100.0, 3.0},   // line 7: 2-6 (new)
    {3, 5, 0.30, 0.0, 100.0, 3.0},   // line 8: 4-6 (new)
}};

inline constexpr int kNodeCount = 6;
inline constexpr int kLumpyMax = 200;  // capacity menu {1, 2, ..., 200} MW

}  // namespace tep::io::garver
