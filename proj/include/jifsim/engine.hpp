#pragma once

#include <cstdint>
#include <vector>

#include "jifsim/config.hpp"

namespace jifsim {

// One published article. Records are created in a single deterministic pass
// and addressed by their 1-based creation id.
struct ArticleRecord {
  int32_t id = 0;          // 1-based creation index
  int32_t journal_id = 0;  // 1-based journal index
  int32_t pub_month = 0;   // 1-based; month 1 is the first month of year 1
  int32_t quality = 0;     // integer quality level
  int32_t ref_target = 0;  // outgoing-reference budget drawn at creation
  int64_t times_cited = 0; // citations received so far (live during the run)
  std::vector<int32_t> out_refs;  // cited ids in acceptance order; an id may
                                  // repeat (references are not deduplicated)
};

// One citation: `citing_id` references `cited_id`.
struct Edge {
  int32_t citing_id = 0;
  int32_t cited_id = 0;
};

// Publication year of a 1-based month index. The month counter advances once
// per issue round, so a year spans months_per_year = issues_per_year months:
// with the default twelve, months 1..12 -> year 1, 13..24 -> year 2, etc.
constexpr int year_of_month(int month, int months_per_year) {
  return (month + months_per_year - 1) / months_per_year;
}

// Citation bookkeeping aggregated during a run: the raw edge list plus the
// per-journal count of citations broken down by the citing article's year
// and the cited article's year, and the per-journal publication counts.
// Every aggregate is exactly recomputable from the edge list and article
// metadata (tested as an oracle property).
class CitationLedger {
 public:
  CitationLedger() = default;
  CitationLedger(int num_journals, int years);

  void record_publication(int journal, int year);
  void record_edge(int32_t citing_id, int32_t cited_id, int cited_journal,
                   int citing_year, int cited_year);

  const std::vector<Edge>& edges() const { return edges_; }
  // Citations received by `journal`'s articles published in `cited_year`,
  // made by articles published in `citing_year`.
  int64_t cites(int journal, int citing_year, int cited_year) const;
  int64_t publications(int journal, int year) const;

  int num_journals() const { return num_journals_; }
  int years() const { return years_; }

 private:
  size_t cite_index(int journal, int citing_year, int cited_year) const;

  int num_journals_ = 0;
  int years_ = 0;
  std::vector<Edge> edges_;
  std::vector<int64_t> cites_;  // [journal][citing_year][cited_year], 1-based
  std::vector<int64_t> pubs_;   // [journal][year], 1-based
};

// Everything a completed run produces.
struct SimResult {
  SimConfig config;
  std::vector<ArticleRecord> articles;  // index 0 unused; articles[id] is id's record
  CitationLedger ledger;
  int64_t total_slots = 0;      // reference slots of post-warm-up articles
  int64_t abandoned_slots = 0;  // slots left unfilled (attempt cap or no
                                // candidate old enough to pass the gate)
  int64_t duplicate_refs = 0;   // out_refs entries repeating an id already
                                // cited by the same article
  bool no_citation_possible = false;  // warning: the review-cycle gate can
                                      // never pass, so the run has no edges
  double runtime_seconds = 0.0;
};

// Draw an article's outgoing-reference budget: a uniform integer in
// [0, 2 * avg_refs - 1] (so the discipline average is about avg_refs),
// clamped below at 10. Consumes one engine step.
int draw_reference_count(Rng& rng, int avg_refs);

// Run one complete simulation.
//
// Articles are created in nested order year -> issue -> journal -> slot, the
// month advancing once per issue round. Each article draws its quality, then
// its reference budget. Once the month exceeds the warm-up, every reference
// slot is filled by rejection sampling: draw a uniform candidate among all
// earlier articles, require the candidate to predate the citing article's
// implied submission (age strictly greater than the review cycle), then
// accept with cite_probability. An accepted citation increments the
// candidate's citation count immediately, so later draws see it (the
// rich-get-richer feedback). A slot is abandoned after max_attempts draws;
// slots whose gate no candidate can pass are abandoned without consuming
// any draws.
//
// Random stream order per article: one quality draw (variable steps), one
// reference-budget step, then for each slot the candidate/acceptance steps
// in attempt order. Identical configs (seed included) produce bit-identical
// results.
SimResult run_simulation(const SimConfig& config);

}  // namespace jifsim
