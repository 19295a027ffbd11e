#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "jifsim/engine.hpp"

namespace jifsim {

// Per-journal, per-year impact factors. The first convention_years years
// carry the fixed reporting value 1.0 (the simulation starts cold, so real
// values there would be meaningless); later years hold computed values.
struct ImpactFactorMatrix {
  int num_journals = 0;
  int years = 0;
  int convention_years = 2;
  std::vector<double> values;  // row-major [journal-1][year-1]
  int undefined_count = 0;     // computed cells whose window had no
                               // publications (stored as quiet NaN)

  double at(int journal, int year) const {
    return values[static_cast<size_t>(journal - 1) * years + (year - 1)];
  }
};

// Exact integer numerator/denominator of one impact-factor cell, exposed so
// tests can compare against independent recounts without rounding.
struct ImpactFactorComponents {
  int64_t cites = 0;         // citations received during years y-1 and y-2 by
                             // the journal's articles published in those years
  int64_t publications = 0;  // the journal's publications in years y-1 and y-2
};

ImpactFactorComponents impact_factor_components(const CitationLedger& ledger,
                                                int journal, int year);

// Two-year impact factor of `journal` in `year` (year must leave two full
// prior years, i.e. year >= 3): citations received during years y-1 and y-2
// by the journal's articles published in those same two years, divided by
// the journal's publication count over the two years. Returns nullopt when
// the window contains no publications (never divides by zero).
std::optional<double> impact_factor(const CitationLedger& ledger, int journal,
                                    int year);

// Assemble the full matrix: convention years fixed at 1.0, later years
// computed; empty-window cells become NaN and are tallied.
ImpactFactorMatrix build_if_matrix(const CitationLedger& ledger);

// Arithmetic mean of computed impact factors over the inclusive year window.
// Windows touching the convention years are a contract violation
// (std::invalid_argument): those cells are reporting conventions, not data.
double average_if(const ImpactFactorMatrix& matrix, int journal, int year_from,
                  int year_to);

// One age band of the reference-age histogram, in whole years relative to
// the citing article's year. max_years < 0 marks an open-ended final band.
struct AgeBand {
  int min_years = 0;
  int max_years = -1;
};

struct ReferenceAgeHistogram {
  std::vector<AgeBand> bands;
  std::vector<double> percentages;  // sums to 100 when any references exist
  int64_t total_refs = 0;
  bool empty = false;      // the journal made no outgoing references
  bool truncated = false;  // the run is too short for the oldest band to be
                           // reachable, so its share is structurally zero
};

// The shipped default bands: 0-5 years, 6-15 years, 16 years and older.
std::vector<AgeBand> default_age_bands();

// Distribution of the ages of `journal`'s outgoing references: for each
// band, the percentage of its references whose cited article was published
// that many whole years before the citing article.
ReferenceAgeHistogram reference_age_distribution(
    const std::vector<ArticleRecord>& articles, const std::vector<Edge>& edges,
    int journal, const std::vector<AgeBand>& bands, int years,
    int issues_per_year);

// Convenience overload reading everything from a completed run.
ReferenceAgeHistogram reference_age_distribution(const SimResult& result,
                                                 int journal,
                                                 const std::vector<AgeBand>& bands);

}  // namespace jifsim
