#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coopnoma/channel.hpp"
#include "coopnoma/config.hpp"
#include "coopnoma/experiment.hpp"
#include "coopnoma/montecarlo.hpp"
#include "coopnoma/outage.hpp"
#include "coopnoma/pairing.hpp"
#include "coopnoma/protocol.hpp"
#include "coopnoma/rng.hpp"
#include "coopnoma/stats.hpp"

namespace py = pybind11;
using namespace coopnoma;

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Cooperative NOMA downlink simulator: decode evaluation, analytical "
      "outage bounds, Monte Carlo sweeps, and user-pairing analysis";

  py::register_exception<OutageFloorError>(m, "OutageFloorError",
                                           PyExc_ArithmeticError);
  py::register_exception<BracketError>(m, "BracketError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::enum_<CooperationMode>(m, "CooperationMode")
      .value("ShortRange", CooperationMode::ShortRange)
      .value("InBand", CooperationMode::InBand);
  py::enum_<RelayBehavior>(m, "RelayBehavior")
      .value("DecodeAndForward", RelayBehavior::DecodeAndForward)
      .value("GenieAided", RelayBehavior::GenieAided);
  py::enum_<Scheme>(m, "Scheme")
      .value("OrthogonalMA", Scheme::OrthogonalMA)
      .value("NonCooperativeNoma", Scheme::NonCooperativeNoma)
      .value("CooperativeNoma", Scheme::CooperativeNoma);

  m.def("scheme_name", &scheme_name, py::arg("scheme"));
  m.def("db_to_linear", &db_to_linear, py::arg("db"));
  m.def("linear_to_db", &linear_to_db, py::arg("linear"));

  py::class_<SystemConfig>(m, "SystemConfig")
      .def(py::init<>())
      .def_static("defaults", &SystemConfig::defaults,
                  py::arg("num_users") = 2)
      .def_readwrite("num_users", &SystemConfig::num_users)
      .def_readwrite("transmit_snr", &SystemConfig::transmit_snr)
      .def_readwrite("target_rates", &SystemConfig::target_rates)
      .def_readwrite("power_alloc", &SystemConfig::power_alloc)
      .def_readwrite("relay_alloc", &SystemConfig::relay_alloc)
      .def_readwrite("inter_user_gain_mean",
                     &SystemConfig::inter_user_gain_mean)
      .def_readwrite("cooperation_mode", &SystemConfig::cooperation_mode)
      .def_readwrite("relay_behavior", &SystemConfig::relay_behavior)
      .def("validate", &SystemConfig::validate)
      .def("snr_threshold", &SystemConfig::snr_threshold, py::arg("k"))
      .def("snr_thresholds", &SystemConfig::snr_thresholds)
      .def("relay_coeff", &SystemConfig::relay_coeff, py::arg("relaying_user"),
           py::arg("message"));

  py::class_<ChannelRealization>(m, "ChannelRealization")
      .def(py::init<>())
      .def_readwrite("direct_gains", &ChannelRealization::direct_gains)
      .def_readwrite("inter_user_gains", &ChannelRealization::inter_user_gains)
      .def("inter_user", &ChannelRealization::inter_user, py::arg("j"),
           py::arg("k"));

  m.def(
      "sample_realization",
      [](const SystemConfig& config, std::uint64_t seed, std::uint64_t trial) {
        Rng rng = Rng::for_trial(seed, trial);
        return sample_realization(config, rng);
      },
      py::arg("config"), py::arg("seed"), py::arg("trial") = 0,
      "Draw the channel realization used by trial `trial` under `seed`");
  m.def("ordered_gain_cdf_exact", &ordered_gain_cdf_exact, py::arg("k"),
        py::arg("n"), py::arg("z"));
  m.def("gamma_order_cdf", &gamma_order_cdf, py::arg("order"),
        py::arg("upper"));

  m.def("snr_direct", &snr_direct, py::arg("realization"), py::arg("config"),
        py::arg("observer"), py::arg("message"));
  m.def("snr_cooperative", &snr_cooperative, py::arg("realization"),
        py::arg("config"), py::arg("observer"), py::arg("message"),
        py::arg("active_relays"));

  py::class_<DecodeOutcome>(m, "DecodeOutcome")
      .def_readonly("num_users", &DecodeOutcome::num_users)
      .def_readonly("user_ok", &DecodeOutcome::user_ok)
      .def("ok", &DecodeOutcome::ok, py::arg("observer"), py::arg("message"))
      .def("snr_at", &DecodeOutcome::snr_at, py::arg("observer"),
           py::arg("message"));
  m.def("evaluate_decode", &evaluate_decode, py::arg("realization"),
        py::arg("config"), py::arg("scheme"));

  py::class_<ZSpec>(m, "ZSpec")
      .def(py::init<>())
      .def_readwrite("a", &ZSpec::a)
      .def_readwrite("b", &ZSpec::b)
      .def_readwrite("rho", &ZSpec::rho)
      .def_readwrite("order", &ZSpec::order);
  m.def("z_cdf", &z_cdf, py::arg("spec"), py::arg("z"));
  m.def("z_cdf_high_snr", &z_cdf_high_snr, py::arg("spec"), py::arg("eps"));

  py::enum_<BoundMode>(m, "BoundMode")
      .value("ExactFactors", BoundMode::ExactFactors)
      .value("HighSnr", BoundMode::HighSnr);
  m.def("outage_union_bound", &outage_union_bound, py::arg("config"),
        py::arg("user"), py::arg("mode") = BoundMode::ExactFactors);
  m.def("overall_outage", &overall_outage, py::arg("per_user"));
  m.def("diversity_slope", &diversity_slope, py::arg("snr_db_grid"),
        py::arg("outage_values"));

  py::class_<WilsonInterval>(m, "WilsonInterval")
      .def_readonly("center", &WilsonInterval::center)
      .def_readonly("halfwidth", &WilsonInterval::halfwidth)
      .def("lower", &WilsonInterval::lower)
      .def("upper", &WilsonInterval::upper);
  m.def("wilson_interval", &wilson_interval, py::arg("successes"),
        py::arg("trials"), py::arg("z") = kZ95);

  py::class_<SweepSpec>(m, "SweepSpec")
      .def(py::init<>())
      .def_readwrite("config", &SweepSpec::config)
      .def_readwrite("snr_db", &SweepSpec::snr_db)
      .def_readwrite("trials", &SweepSpec::trials)
      .def_readwrite("seed", &SweepSpec::seed)
      .def_readwrite("schemes", &SweepSpec::schemes)
      .def_readwrite("threads", &SweepSpec::threads)
      .def("validate", &SweepSpec::validate);

  py::class_<CellEstimate>(m, "CellEstimate")
      .def_readonly("trials", &CellEstimate::trials)
      .def_readonly("failures", &CellEstimate::failures)
      .def_readonly("outage", &CellEstimate::outage)
      .def_readonly("ci_halfwidth", &CellEstimate::ci_halfwidth)
      .def_readonly("below_resolution", &CellEstimate::below_resolution);
  py::class_<SchemePointEstimate>(m, "SchemePointEstimate")
      .def_readonly("per_user", &SchemePointEstimate::per_user)
      .def_readonly("overall", &SchemePointEstimate::overall)
      .def_readonly("overall_composed", &SchemePointEstimate::overall_composed);
  py::class_<OutageEstimate>(m, "OutageEstimate")
      .def_readonly("num_users", &OutageEstimate::num_users)
      .def_readonly("trials", &OutageEstimate::trials)
      .def_readonly("seed", &OutageEstimate::seed)
      .def_readonly("snr_db", &OutageEstimate::snr_db)
      .def_readonly("schemes", &OutageEstimate::schemes)
      .def_readonly("points", &OutageEstimate::points)
      .def("at", &OutageEstimate::at, py::arg("scheme_index"),
           py::arg("point_index"), py::return_value_policy::reference_internal);
  m.def("run_outage_sweep", &run_outage_sweep, py::arg("spec"),
        py::call_guard<py::gil_scoped_release>());

  py::class_<CapacityEstimate>(m, "CapacityEstimate")
      .def_readonly("scheme", &CapacityEstimate::scheme)
      .def_readonly("snr_db", &CapacityEstimate::snr_db)
      .def_readonly("rate_bpcu", &CapacityEstimate::rate_bpcu)
      .def_readonly("outage_at_rate", &CapacityEstimate::outage_at_rate)
      .def_readonly("target_outage", &CapacityEstimate::target_outage)
      .def_readonly("tolerance", &CapacityEstimate::tolerance)
      .def_readonly("trials", &CapacityEstimate::trials)
      .def_readonly("seed", &CapacityEstimate::seed);
  m.def("run_capacity_search", &run_capacity_search, py::arg("config"),
        py::arg("scheme"), py::arg("snr_db"), py::arg("target_outage"),
        py::arg("rate_min"), py::arg("rate_max"), py::arg("tolerance"),
        py::arg("trials"), py::arg("seed"), py::arg("threads") = 0,
        py::call_guard<py::gil_scoped_release>());

  py::class_<OutageBoundReport>(m, "OutageBoundReport")
      .def_readonly("snr_db", &OutageBoundReport::snr_db)
      .def_readonly("num_users", &OutageBoundReport::num_users)
      .def_readonly("bound_exact", &OutageBoundReport::bound_exact)
      .def_readonly("bound_high_snr", &OutageBoundReport::bound_high_snr)
      .def_readonly("simulated", &OutageBoundReport::simulated)
      .def_readonly("simulated_halfwidth",
                    &OutageBoundReport::simulated_halfwidth)
      .def_readonly("violation", &OutageBoundReport::violation)
      .def_readonly("overall_from_bounds",
                    &OutageBoundReport::overall_from_bounds)
      .def_readonly("trials", &OutageBoundReport::trials);
  m.def("run_bound_validation", &run_bound_validation, py::arg("spec"),
        py::call_guard<py::gil_scoped_release>());

  m.def("pair_rates_tdma", &pair_rates_tdma, py::arg("gain_m"),
        py::arg("gain_n"), py::arg("rho"));
  m.def("pair_rates_noma", &pair_rates_noma, py::arg("gain_m"),
        py::arg("gain_n"), py::arg("rho"), py::arg("p_m_sq"),
        py::arg("p_n_sq"));
  m.def("sum_rate_gap_exact", &sum_rate_gap_exact, py::arg("gain_m"),
        py::arg("gain_n"), py::arg("rho"), py::arg("p_m_sq"),
        py::arg("p_n_sq"));
  m.def("gap_high_snr", &gap_high_snr, py::arg("gain_m"), py::arg("gain_n"));

  py::class_<PairingCandidate>(m, "PairingCandidate")
      .def_readonly("partner_index", &PairingCandidate::partner_index)
      .def_readonly("mean_tdma_sum_rate", &PairingCandidate::mean_tdma_sum_rate)
      .def_readonly("mean_noma_sum_rate", &PairingCandidate::mean_noma_sum_rate)
      .def_readonly("mean_gap_exact", &PairingCandidate::mean_gap_exact)
      .def_readonly("mean_gap_predicted",
                    &PairingCandidate::mean_gap_predicted);
  py::class_<PairingReport>(m, "PairingReport")
      .def_readonly("num_users", &PairingReport::num_users)
      .def_readonly("rho", &PairingReport::rho)
      .def_readonly("p_m_sq", &PairingReport::p_m_sq)
      .def_readonly("trials", &PairingReport::trials)
      .def_readonly("seed", &PairingReport::seed)
      .def_readonly("candidates", &PairingReport::candidates);
  m.def("pairing_study", &pairing_study, py::arg("num_users"), py::arg("rho"),
        py::arg("p_m_sq"), py::arg("trials"), py::arg("seed"),
        py::arg("threads") = 0, py::call_guard<py::gil_scoped_release>());

  py::class_<GridSpec>(m, "GridSpec")
      .def(py::init<>())
      .def_readwrite("start_db", &GridSpec::start_db)
      .def_readwrite("stop_db", &GridSpec::stop_db)
      .def_readwrite("step_db", &GridSpec::step_db)
      .def("points", &GridSpec::points);
  py::class_<CapacityParams>(m, "CapacityParams")
      .def(py::init<>())
      .def_readwrite("target_outage", &CapacityParams::target_outage)
      .def_readwrite("rate_min", &CapacityParams::rate_min)
      .def_readwrite("rate_max", &CapacityParams::rate_max)
      .def_readwrite("tolerance", &CapacityParams::tolerance);
  py::class_<PairingParams>(m, "PairingParams")
      .def(py::init<>())
      .def_readwrite("partner_power", &PairingParams::partner_power)
      .def_readwrite("rho_db", &PairingParams::rho_db);
  py::class_<ExperimentFile>(m, "ExperimentFile")
      .def(py::init<>())
      .def_static("defaults", &ExperimentFile::defaults,
                  py::arg("num_users") = 2)
      .def_readwrite("config", &ExperimentFile::config)
      .def_readwrite("grid", &ExperimentFile::grid)
      .def_readwrite("trials", &ExperimentFile::trials)
      .def_readwrite("seed", &ExperimentFile::seed)
      .def_readwrite("threads", &ExperimentFile::threads)
      .def_readwrite("schemes", &ExperimentFile::schemes)
      .def_readwrite("capacity", &ExperimentFile::capacity)
      .def_readwrite("pairing", &ExperimentFile::pairing)
      .def("sweep_spec", &ExperimentFile::sweep_spec);
  m.def("parse_experiment_text", &parse_experiment_text, py::arg("text"));
  m.def("render_experiment_file", &render_experiment_file, py::arg("file"));
  m.def("outage_csv", &outage_csv, py::arg("estimate"));
  m.def("capacity_csv", &capacity_csv, py::arg("rows"));
  m.def("pairing_csv", &pairing_csv, py::arg("report"), py::arg("rho_db"));
}
