#include "jifsim/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <vector>

#include "jifsim/errors.hpp"

namespace jifsim {

CitationLedger::CitationLedger(int num_journals, int years)
    : num_journals_(num_journals),
      years_(years),
      cites_(static_cast<size_t>(num_journals + 1) * (years + 1) * (years + 1),
             0),
      pubs_(static_cast<size_t>(num_journals + 1) * (years + 1), 0) {}

size_t CitationLedger::cite_index(int journal, int citing_year,
                                  int cited_year) const {
  const size_t stride = static_cast<size_t>(years_ + 1);
  return (static_cast<size_t>(journal) * stride + citing_year) * stride +
         cited_year;
}

void CitationLedger::record_publication(int journal, int year) {
  pubs_[static_cast<size_t>(journal) * (years_ + 1) + year] += 1;
}

void CitationLedger::record_edge(int32_t citing_id, int32_t cited_id,
                                 int cited_journal, int citing_year,
                                 int cited_year) {
  edges_.push_back(Edge{citing_id, cited_id});
  cites_[cite_index(cited_journal, citing_year, cited_year)] += 1;
}

int64_t CitationLedger::cites(int journal, int citing_year,
                              int cited_year) const {
  return cites_[cite_index(journal, citing_year, cited_year)];
}

int64_t CitationLedger::publications(int journal, int year) const {
  return pubs_[static_cast<size_t>(journal) * (years_ + 1) + year];
}

int draw_reference_count(Rng& rng, int avg_refs) {
  int count = static_cast<int>(rng.uniform01() * (2.0 * avg_refs));
  return count < 10 ? 10 : count;
}

namespace {

// Precomputed kernel values. Entries are produced by the public kernel
// functions themselves, so a table lookup is bit-identical to evaluating the
// kernel directly; the tables only exist to keep tanh out of the hot loop.
struct KernelTables {
  std::vector<double> age;    // age[a] = age_factor(-a) for a in [0, max_age]
  std::vector<double> count;  // count[n] = citation_count_factor(n) below the
                              // saturation point; 1.0 exactly beyond it
  KernelParams params;

  KernelTables(const KernelParams& p, int max_age_months) : params(p) {
    age.resize(static_cast<size_t>(max_age_months) + 1);
    for (int a = 0; a <= max_age_months; ++a) {
      age[a] = age_factor(-a, p);
    }
    // Beyond (n + delta) / gamma >= 22, tanh rounds to exactly 1.0 in double
    // precision, so the table can stop there and report 1.0 for larger n.
    double cap = std::ceil(22.0 * p.gamma - p.delta) + 8.0;
    cap = std::min(std::max(cap, 2.0), 4194304.0);
    count.resize(static_cast<size_t>(cap));
    for (size_t n = 0; n < count.size(); ++n) {
      count[n] = citation_count_factor(static_cast<int64_t>(n), p);
    }
  }

  double count_factor(int64_t n) const {
    return n < static_cast<int64_t>(count.size())
               ? count[static_cast<size_t>(n)]
               : citation_count_factor(n, params);
  }
};

// Count out_refs entries that repeat an id already cited by the same article.
int64_t count_duplicates(const std::vector<int32_t>& refs,
                         std::vector<int32_t>& scratch) {
  if (refs.size() < 2) return 0;
  scratch.assign(refs.begin(), refs.end());
  std::sort(scratch.begin(), scratch.end());
  int64_t duplicates = 0;
  for (size_t i = 1; i < scratch.size(); ++i) {
    if (scratch[i] == scratch[i - 1]) ++duplicates;
  }
  return duplicates;
}

}  // namespace

SimResult run_simulation(const SimConfig& config) {
  validate(config);
  const auto started = std::chrono::steady_clock::now();

  SimResult result;
  result.config = config;

  const int64_t total = total_articles(config);
  const int months = total_months(config);
  result.articles.resize(static_cast<size_t>(total) + 1);
  result.ledger = CitationLedger(config.num_journals, config.years);

  // The oldest candidate available at the final month was published in month
  // 1, giving age months - 1; if even that cannot pass the gate (or no month
  // lies beyond the warm-up) the run cannot contain a single edge.
  result.no_citation_possible = config.review_cycle_months >= months - 1 ||
                                config.warmup_months >= months;

  Rng rng(config.seed);
  const KernelTables tables(config.kernel, months);
  std::vector<int32_t> dup_scratch;

  int32_t current_id = 0;
  int month = 0;
  for (int year = 1; year <= config.years; ++year) {
    for (int issue = 0; issue < config.issues_per_year; ++issue) {
      ++month;
      for (int journal = 1; journal <= config.num_journals; ++journal) {
        for (int slot = 0; slot < config.articles_per_issue; ++slot) {
          ++current_id;
          ArticleRecord& article = result.articles[current_id];
          article.id = current_id;
          article.journal_id = journal;
          article.pub_month = month;
          article.quality = sample_quality(rng, config.quality);
          article.ref_target = draw_reference_count(rng, config.avg_refs);
          result.ledger.record_publication(journal, year);

          if (month <= config.warmup_months) continue;  // not citing yet
          result.total_slots += article.ref_target;

          if (month - 1 <= config.review_cycle_months) {
            // Even the oldest existing article is too recent to pass the
            // gate; every slot would exhaust its attempts, so abandon them
            // without spending random draws.
            result.abandoned_slots += article.ref_target;
            continue;
          }

          article.out_refs.reserve(article.ref_target);
          for (int ref_slot = 0; ref_slot < article.ref_target; ++ref_slot) {
            bool accepted = false;
            for (int attempt = 0; attempt < config.max_attempts; ++attempt) {
              const int32_t candidate_id =
                  1 + static_cast<int32_t>(rng.uniform_index(current_id - 1));
              ArticleRecord& candidate = result.articles[candidate_id];
              const int age = month - candidate.pub_month;
              if (age <= config.review_cycle_months) continue;
              const double p = compose_cite_probability(
                  candidate.quality, tables.count_factor(candidate.times_cited),
                  tables.age[age]);
              if (rng.uniform01() < p) {
                article.out_refs.push_back(candidate_id);
                candidate.times_cited += 1;
                result.ledger.record_edge(
                    current_id, candidate_id, candidate.journal_id, year,
                    year_of_month(candidate.pub_month, config.issues_per_year));
                accepted = true;
                break;
              }
            }
            if (!accepted) result.abandoned_slots += 1;
          }
          result.duplicate_refs +=
              count_duplicates(article.out_refs, dup_scratch);
        }
      }
    }
  }

  result.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();
  return result;
}

}  // namespace jifsim
