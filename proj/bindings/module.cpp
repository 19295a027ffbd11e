// Python bindings for the core operations: kernel evaluation, single
// simulations, and the derived metrics, enough to drive quick analyses and
// notebook plots without the CLI round-trip through CSV.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jifsim/config.hpp"
#include "jifsim/engine.hpp"
#include "jifsim/kernel.hpp"
#include "jifsim/metrics.hpp"
#include "jifsim/rng.hpp"

namespace py = pybind11;
using namespace jifsim;

namespace {

// Matrix rows as plain lists of floats (NaN for undefined cells), journal 1
// first; the shape mirrors if_matrix.csv.
std::vector<std::vector<double>> matrix_rows(const ImpactFactorMatrix& matrix) {
  std::vector<std::vector<double>> rows;
  rows.reserve(matrix.num_journals);
  for (int journal = 1; journal <= matrix.num_journals; ++journal) {
    std::vector<double> row;
    row.reserve(matrix.years);
    for (int year = 1; year <= matrix.years; ++year) {
      row.push_back(matrix.at(journal, year));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "journal publication and citation dynamics simulator";

  py::class_<KernelParams>(m, "KernelParams")
      .def(py::init<>())
      .def_readwrite("alpha", &KernelParams::alpha)
      .def_readwrite("beta", &KernelParams::beta)
      .def_readwrite("gamma", &KernelParams::gamma)
      .def_readwrite("delta", &KernelParams::delta);

  py::class_<QualityDistribution>(m, "QualityDistribution")
      .def(py::init<>())
      .def_readwrite("shape", &QualityDistribution::shape)
      .def_readwrite("scale", &QualityDistribution::scale)
      .def_readwrite("min_level", &QualityDistribution::min_level)
      .def_readwrite("max_level", &QualityDistribution::max_level);

  py::class_<SimConfig>(m, "SimConfig")
      .def(py::init<>())
      .def_readwrite("num_journals", &SimConfig::num_journals)
      .def_readwrite("issues_per_year", &SimConfig::issues_per_year)
      .def_readwrite("articles_per_issue", &SimConfig::articles_per_issue)
      .def_readwrite("years", &SimConfig::years)
      .def_readwrite("review_cycle_months", &SimConfig::review_cycle_months)
      .def_readwrite("avg_refs", &SimConfig::avg_refs)
      .def_readwrite("warmup_months", &SimConfig::warmup_months)
      .def_readwrite("max_attempts", &SimConfig::max_attempts)
      .def_readwrite("kernel", &SimConfig::kernel)
      .def_readwrite("quality", &SimConfig::quality)
      .def_readwrite("seed", &SimConfig::seed);

  py::class_<Rng>(m, "Rng")
      .def(py::init<uint64_t>(), py::arg("seed"))
      .def("uniform01", &Rng::uniform01)
      .def("normal", &Rng::normal)
      .def("gamma_variate", &Rng::gamma_variate, py::arg("shape"),
           py::arg("scale"));

  m.def("citation_count_factor", &citation_count_factor, py::arg("n"),
        py::arg("params"));
  m.def("age_factor", &age_factor, py::arg("t"), py::arg("params"));
  m.def("cite_probability", &cite_probability, py::arg("quality"),
        py::arg("citation_count"), py::arg("age_months"), py::arg("params"));
  m.def("quality_from_continuous", &quality_from_continuous, py::arg("value"),
        py::arg("dist"));
  m.def(
      "sample_quality",
      [](Rng& rng, const QualityDistribution& dist) {
        return sample_quality(rng, dist);
      },
      py::arg("rng"), py::arg("dist"));
  m.def(
      "draw_reference_count",
      [](Rng& rng, int avg_refs) { return draw_reference_count(rng, avg_refs); },
      py::arg("rng"), py::arg("avg_refs"));

  py::class_<SimResult>(m, "SimResult")
      .def_property_readonly(
          "article_count",
          [](const SimResult& r) { return r.articles.size() - 1; })
      .def_property_readonly(
          "edge_count", [](const SimResult& r) { return r.ledger.edges().size(); })
      .def_readonly("total_slots", &SimResult::total_slots)
      .def_readonly("abandoned_slots", &SimResult::abandoned_slots)
      .def_readonly("duplicate_refs", &SimResult::duplicate_refs)
      .def_readonly("no_citation_possible", &SimResult::no_citation_possible)
      .def_readonly("runtime_seconds", &SimResult::runtime_seconds)
      .def(
          "edges",
          [](const SimResult& r) {
            std::vector<std::pair<int64_t, int64_t>> out;
            out.reserve(r.ledger.edges().size());
            for (const Edge& edge : r.ledger.edges()) {
              out.emplace_back(edge.citing_id, edge.cited_id);
            }
            return out;
          },
          "list of (citing_id, cited_id) pairs in creation order")
      .def(
          "if_matrix",
          [](const SimResult& r) {
            return matrix_rows(build_if_matrix(r.ledger));
          },
          "per-journal impact factors by year; rows are journals")
      .def(
          "average_if",
          [](const SimResult& r, int journal, int year_from, int year_to) {
            const ImpactFactorMatrix matrix = build_if_matrix(r.ledger);
            return average_if(matrix, journal, year_from, year_to);
          },
          py::arg("journal"), py::arg("year_from"), py::arg("year_to"))
      .def(
          "reference_age_percentages",
          [](const SimResult& r, int journal) {
            return reference_age_distribution(r, journal, default_age_bands())
                .percentages;
          },
          py::arg("journal"),
          "percentages over the default age bands 0-5, 6-15, 16+");

  m.def("run_simulation", &run_simulation, py::arg("config"),
        py::call_guard<py::gil_scoped_release>());

  m.attr("__version__") = "1.0.0";
}
