#pragma once

#include <cstdint>

namespace surreal {

/// Counters of primitive operations. All counters are monotone between resets.
///
///   geCalls     every invocation of the >= relation, recursive ones included
///   plusEvals   evaluations of the definitional sum (table fills under Memo)
///   timesEvals  evaluations of the definitional product
///   selectSteps one per tree edge walked by a table lookup
///   tableHits   lookups answered from an already-filled table cell
///   nodesBuilt  genealogy nodes constructed since the last reset
struct Stats {
  std::uint64_t geCalls = 0;
  std::uint64_t plusEvals = 0;
  std::uint64_t timesEvals = 0;
  std::uint64_t selectSteps = 0;
  std::uint64_t tableHits = 0;
  std::uint64_t nodesBuilt = 0;

  friend bool operator==(const Stats&, const Stats&) = default;
};

inline Stats operator-(const Stats& a, const Stats& b) {
  return Stats{a.geCalls - b.geCalls,         a.plusEvals - b.plusEvals,
               a.timesEvals - b.timesEvals,   a.selectSteps - b.selectSteps,
               a.tableHits - b.tableHits,     a.nodesBuilt - b.nodesBuilt};
}

}  // namespace surreal
