#include "jifsim/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace jifsim {

ImpactFactorComponents impact_factor_components(const CitationLedger& ledger,
                                                int journal, int year) {
  if (year < 3 || year > ledger.years()) {
    throw std::invalid_argument(
        "impact_factor: year must leave two full prior years");
  }
  if (journal < 1 || journal > ledger.num_journals()) {
    throw std::invalid_argument("impact_factor: unknown journal");
  }
  ImpactFactorComponents parts;
  // Citations received during the two window years by articles published in
  // those years. Causality (a citation never precedes the cited article)
  // leaves three populated (citing year, cited year) pairs.
  parts.cites = ledger.cites(journal, year - 1, year - 1) +
                ledger.cites(journal, year - 1, year - 2) +
                ledger.cites(journal, year - 2, year - 2);
  parts.publications = ledger.publications(journal, year - 1) +
                       ledger.publications(journal, year - 2);
  return parts;
}

std::optional<double> impact_factor(const CitationLedger& ledger, int journal,
                                    int year) {
  const ImpactFactorComponents parts =
      impact_factor_components(ledger, journal, year);
  if (parts.publications == 0) return std::nullopt;
  return static_cast<double>(parts.cites) /
         static_cast<double>(parts.publications);
}

ImpactFactorMatrix build_if_matrix(const CitationLedger& ledger) {
  ImpactFactorMatrix matrix;
  matrix.num_journals = ledger.num_journals();
  matrix.years = ledger.years();
  matrix.values.assign(
      static_cast<size_t>(matrix.num_journals) * matrix.years, 0.0);
  for (int journal = 1; journal <= matrix.num_journals; ++journal) {
    for (int year = 1; year <= matrix.years; ++year) {
      double value;
      if (year <= matrix.convention_years) {
        value = 1.0;
      } else if (auto computed = impact_factor(ledger, journal, year)) {
        value = *computed;
      } else {
        value = std::numeric_limits<double>::quiet_NaN();
        matrix.undefined_count += 1;
      }
      matrix.values[static_cast<size_t>(journal - 1) * matrix.years +
                    (year - 1)] = value;
    }
  }
  return matrix;
}

double average_if(const ImpactFactorMatrix& matrix, int journal, int year_from,
                  int year_to) {
  if (year_from <= matrix.convention_years) {
    throw std::invalid_argument(
        "average_if: window touches the convention years");
  }
  if (year_from > year_to || year_to > matrix.years) {
    throw std::invalid_argument("average_if: invalid year window");
  }
  if (journal < 1 || journal > matrix.num_journals) {
    throw std::invalid_argument("average_if: unknown journal");
  }
  double sum = 0.0;
  for (int year = year_from; year <= year_to; ++year) {
    sum += matrix.at(journal, year);
  }
  return sum / (year_to - year_from + 1);
}

std::vector<AgeBand> default_age_bands() {
  return {{0, 5}, {6, 15}, {16, -1}};
}

ReferenceAgeHistogram reference_age_distribution(
    const std::vector<ArticleRecord>& articles, const std::vector<Edge>& edges,
    int journal, const std::vector<AgeBand>& bands, int years,
    int issues_per_year) {
  if (bands.empty() || bands.front().min_years != 0 ||
      bands.back().max_years >= 0) {
    throw std::invalid_argument(
        "reference_age_distribution: bands must start at age 0 and end with "
        "an open-ended band");
  }
  for (size_t i = 0; i + 1 < bands.size(); ++i) {
    if (bands[i].max_years < 0 || bands[i + 1].min_years != bands[i].max_years + 1) {
      throw std::invalid_argument(
          "reference_age_distribution: bands must partition ages without "
          "gaps or overlap");
    }
  }

  ReferenceAgeHistogram hist;
  hist.bands = bands;
  hist.percentages.assign(bands.size(), 0.0);
  // A run of `years` years caps reference ages at years - 1 whole years; a
  // band starting beyond that can never receive a reference.
  hist.truncated = bands.back().min_years > years - 1;

  std::vector<int64_t> counts(bands.size(), 0);
  for (const Edge& edge : edges) {
    const ArticleRecord& citing = articles[edge.citing_id];
    if (citing.journal_id != journal) continue;
    const ArticleRecord& cited = articles[edge.cited_id];
    const int age_years = year_of_month(citing.pub_month, issues_per_year) -
                          year_of_month(cited.pub_month, issues_per_year);
    for (size_t b = 0; b < bands.size(); ++b) {
      if (age_years >= bands[b].min_years &&
          (bands[b].max_years < 0 || age_years <= bands[b].max_years)) {
        counts[b] += 1;
        break;
      }
    }
    hist.total_refs += 1;
  }

  if (hist.total_refs == 0) {
    hist.empty = true;
    return hist;
  }
  for (size_t b = 0; b < bands.size(); ++b) {
    hist.percentages[b] =
        100.0 * static_cast<double>(counts[b]) / hist.total_refs;
  }
  return hist;
}

ReferenceAgeHistogram reference_age_distribution(
    const SimResult& result, int journal, const std::vector<AgeBand>& bands) {
  return reference_age_distribution(result.articles, result.ledger.edges(),
                                    journal, bands, result.config.years,
                                    result.config.issues_per_year);
}

}  // namespace jifsim
