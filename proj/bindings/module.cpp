// Python bindings for the core operations: domains, streams, corrections,
// the evolution engine, the probability model, and the sweep runner.
// Rendering and the full CLI stay on the command-line binary.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "debox/analysis.hpp"
#include "debox/boundary.hpp"
#include "debox/de.hpp"
#include "debox/domain.hpp"
#include "debox/errors.hpp"
#include "debox/objective.hpp"
#include "debox/rng.hpp"
#include "debox/runner.hpp"

namespace py = pybind11;
using namespace debox;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Differential-evolution infeasibility experimentation core";

    py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
    py::register_exception<DataError>(m, "DataError", PyExc_RuntimeError);
    py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);

    py::enum_<Mutation>(m, "Mutation")
        .value("RAND1", Mutation::Rand1)
        .value("RAND2", Mutation::Rand2)
        .value("BEST1", Mutation::Best1)
        .value("CURRENT_TO_BEST1", Mutation::CurrentToBest1);
    py::enum_<Crossover>(m, "Crossover")
        .value("BIN", Crossover::Bin)
        .value("EXP", Crossover::Exp);
    py::enum_<Strategy>(m, "Strategy")
        .value("SATURATION", Strategy::Saturation)
        .value("TOROIDAL", Strategy::Toroidal)
        .value("MIRROR", Strategy::Mirror)
        .value("COTN", Strategy::Cotn)
        .value("PENALTY", Strategy::Penalty);
    py::enum_<ObjectiveKind>(m, "ObjectiveKind")
        .value("F0", ObjectiveKind::F0)
        .value("SPHERE", ObjectiveKind::Sphere);
    py::enum_<ColorClass>(m, "ColorClass")
        .value("TEAL", ColorClass::Teal)
        .value("ORANGE", ColorClass::Orange)
        .value("VIOLET", ColorClass::Violet);

    m.def("mutation_from_name", &mutation_from_name, py::arg("name"));
    m.def("mutation_name", &mutation_name, py::arg("mutation"));
    m.def("crossover_from_name", &crossover_from_name, py::arg("name"));
    m.def("crossover_name", &crossover_name, py::arg("crossover"));
    m.def("strategy_from_name", &strategy_from_name, py::arg("name"));
    m.def("strategy_name", &strategy_name, py::arg("strategy"));
    m.def("color_from_name", &color_from_name, py::arg("name"));
    m.def("color_name", &color_name, py::arg("color"));
    m.def("objective_from_name", &objective_from_name, py::arg("name"));
    m.def("objective_name", &objective_name, py::arg("kind"));

    py::class_<Domain>(m, "Domain")
        .def(py::init<std::vector<double>, std::vector<double>>(),
             py::arg("lower"), py::arg("upper"))
        .def_static("unit", &Domain::unit, py::arg("n"))
        .def_property_readonly("dimensionality", &Domain::dimensionality)
        .def_property_readonly(
            "lower", [](const Domain& d) { return d.lower(); })
        .def_property_readonly(
            "upper", [](const Domain& d) { return d.upper(); })
        .def("width", [](const Domain& d, std::size_t i) { return d.width(i); },
             py::arg("i"))
        .def("contains", &Domain::contains, py::arg("point"));

    py::class_<RngStream>(m, "RngStream")
        .def(py::init<std::uint64_t>(), py::arg("seed"))
        .def_property_readonly("seed", &RngStream::seed)
        .def("next_u64", &RngStream::next_u64)
        .def("uniform01", &RngStream::uniform01)
        .def("uniform_real", &RngStream::uniform_real, py::arg("a"),
             py::arg("b"))
        .def("uniform_index", &RngStream::uniform_index, py::arg("n"))
        .def("normal", &RngStream::normal, py::arg("mean"), py::arg("stddev"));

    m.def("splitmix64", &splitmix64, py::arg("x"));
    m.def("derive_substream", &derive_substream, py::arg("master_seed"),
          py::arg("config_index"), py::arg("run_index"));

    m.def("saturate", &saturate, py::arg("point"), py::arg("domain"));
    m.def("toroidal", &toroidal, py::arg("point"), py::arg("domain"));
    m.def("mirror", &mirror, py::arg("point"), py::arg("domain"));
    m.def("cotn", &cotn, py::arg("point"), py::arg("domain"), py::arg("rng"));
    py::class_<CorrectionOutcome>(m, "CorrectionOutcome")
        .def_readonly("corrected", &CorrectionOutcome::corrected)
        .def_readonly("was_infeasible", &CorrectionOutcome::was_infeasible)
        .def_readonly("penalty_applied", &CorrectionOutcome::penalty_applied);
    m.def("correct", &correct, py::arg("strategy"), py::arg("point"),
          py::arg("domain"), py::arg("rng"));

    py::class_<Objective>(m, "Objective")
        .def(py::init<ObjectiveKind, Domain>(), py::arg("kind"),
             py::arg("domain"))
        .def_readonly("kind", &Objective::kind)
        .def("evaluate", &Objective::evaluate, py::arg("point"),
             py::arg("rng"));

    py::class_<DeConfig>(m, "DeConfig")
        .def(py::init<>())
        .def_readwrite("pop_size", &DeConfig::pop_size)
        .def_readwrite("scale_factor", &DeConfig::scale_factor)
        .def_readwrite("crossover_rate", &DeConfig::crossover_rate)
        .def_readwrite("mutation", &DeConfig::mutation)
        .def_readwrite("crossover", &DeConfig::crossover)
        .def_readwrite("strategy", &DeConfig::strategy)
        .def_readwrite("budget", &DeConfig::budget)
        .def("validate", &DeConfig::validate);

    py::class_<RunRecord>(m, "RunRecord")
        .def_readonly("seed", &RunRecord::seed)
        .def_readonly("infeasible_count", &RunRecord::infeasible_count)
        .def_readonly("evaluations_used", &RunRecord::evaluations_used)
        .def_readonly("pois", &RunRecord::pois)
        .def_readonly("best_fitness", &RunRecord::best_fitness)
        .def_readonly("generations", &RunRecord::generations);

    m.def(
        "run_de",
        [](const DeConfig& config, const Domain& domain,
           const Objective& objective, RngStream& rng) {
            return run_de(config, domain, objective, rng);
        },
        py::arg("config"), py::arg("domain"), py::arg("objective"),
        py::arg("rng"),
        py::call_guard<py::gil_scoped_release>());

    m.def(
        "classify",
        [](const std::vector<double>& values) {
            return classify(PoisSeries{values});
        },
        py::arg("values"));
    m.def("prob_infeasible", &prob_infeasible, py::arg("p"), py::arg("n"));
    m.def("p_max", &p_max, py::arg("t"), py::arg("n"));
    py::class_<PmaxTable>(m, "PmaxTable")
        .def_readonly("t_grid", &PmaxTable::t_grid)
        .def_readonly("n_grid", &PmaxTable::n_grid)
        .def_readonly("rows", &PmaxTable::rows);
    m.def("tabulate_pmax", &tabulate_pmax, py::arg("t_grid"),
          py::arg("n_grid"));
    m.def("monte_carlo_infeasibility", &monte_carlo_infeasibility,
          py::arg("p"), py::arg("n"), py::arg("trials"), py::arg("rng"));
    py::class_<SeriesSummary>(m, "SeriesSummary")
        .def_readonly("min", &SeriesSummary::min)
        .def_readonly("max", &SeriesSummary::max)
        .def_readonly("mean", &SeriesSummary::mean)
        .def_readonly("median", &SeriesSummary::median)
        .def_readonly("stddev", &SeriesSummary::stddev);
    m.def(
        "summarize",
        [](const std::vector<double>& values) {
            return summarize(PoisSeries{values});
        },
        py::arg("values"));

    py::class_<GridSpec>(m, "GridSpec")
        .def(py::init<>())
        .def_readwrite("pop_sizes", &GridSpec::pop_sizes)
        .def_readwrite("cr_values", &GridSpec::cr_values)
        .def_readwrite("f_values", &GridSpec::f_values)
        .def_readwrite("mutations", &GridSpec::mutations)
        .def_readwrite("crossovers", &GridSpec::crossovers)
        .def_readwrite("strategies", &GridSpec::strategies)
        .def_readwrite("dimensionality", &GridSpec::dimensionality)
        .def_readwrite("budget_per_dimension", &GridSpec::budget_per_dimension)
        .def_readwrite("runs_per_config", &GridSpec::runs_per_config)
        .def_readwrite("master_seed", &GridSpec::master_seed)
        .def_readwrite("objective", &GridSpec::objective)
        .def("budget", &GridSpec::budget)
        .def("product_size", &GridSpec::product_size)
        .def("validate", &GridSpec::validate);
    m.def("default_grid", &default_grid);

    py::class_<GridConfig>(m, "GridConfig")
        .def_readonly("config_id", &GridConfig::config_id)
        .def_readonly("de", &GridConfig::de);
    py::class_<GridRejection>(m, "GridRejection")
        .def_readonly("config_id", &GridRejection::config_id)
        .def_readonly("reason", &GridRejection::reason);
    py::class_<Expansion>(m, "Expansion")
        .def_readonly("accepted", &Expansion::accepted)
        .def_readonly("rejected", &Expansion::rejected);
    m.def("expand", &expand, py::arg("grid"));

    py::class_<ResultRow>(m, "ResultRow")
        .def(py::init<>())
        .def_readwrite("config_id", &ResultRow::config_id)
        .def_readwrite("mutation", &ResultRow::mutation)
        .def_readwrite("crossover", &ResultRow::crossover)
        .def_readwrite("strategy", &ResultRow::strategy)
        .def_readwrite("pop_size", &ResultRow::pop_size)
        .def_readwrite("scale_factor", &ResultRow::scale_factor)
        .def_readwrite("crossover_rate", &ResultRow::crossover_rate)
        .def_readwrite("run_index", &ResultRow::run_index)
        .def_readwrite("seed", &ResultRow::seed)
        .def_readwrite("pois", &ResultRow::pois)
        .def_readwrite("best_fitness", &ResultRow::best_fitness)
        .def_readwrite("evaluations_used", &ResultRow::evaluations_used)
        .def("failed", &ResultRow::failed);
    py::class_<ResultsTable>(m, "ResultsTable")
        .def(py::init<>())
        .def_readwrite("rows", &ResultsTable::rows)
        .def("sort", &ResultsTable::sort);
    m.def("format_result_row", &format_result_row, py::arg("row"));
    m.def("persist", &persist, py::arg("table"), py::arg("path"));
    m.def("load", &load, py::arg("path"));
    m.def(
        "execute",
        [](const GridSpec& grid, int parallelism,
           const std::optional<std::string>& csv_path, bool resume) {
            return execute(grid, parallelism, csv_path, resume);
        },
        py::arg("grid"), py::arg("parallelism") = 1,
        py::arg("csv_path") = std::nullopt, py::arg("resume") = false,
        py::call_guard<py::gil_scoped_release>());
    m.def("load_grid", &load_grid, py::arg("path"));
    m.def("grid_to_json", &grid_to_json, py::arg("grid"));
}
