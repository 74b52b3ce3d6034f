#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "twrelay/analytics.hpp"
#include "twrelay/block_code.hpp"
#include "twrelay/phy.hpp"
#include "twrelay/simkit.hpp"
#include "twrelay/sources.hpp"

namespace py = pybind11;
using namespace twrelay;

namespace {

std::string bits_to_string(const gf2::BitBlock& b) { return b.to_string(); }

simkit::SweepConfig make_config(const std::string& scheme, std::size_t n, std::size_t k,
                                const std::vector<double>& snr_db, std::uint64_t min_trials,
                                std::uint64_t max_trials, double target_ci, std::uint64_t seed) {
  const auto kind = parse_scheme(scheme);
  if (!kind) throw py::value_error("unknown scheme '" + scheme + "'");
  simkit::SweepConfig c;
  c.scheme = *kind;
  c.n = n;
  c.k = k;
  c.snr_db_grid = snr_db;
  c.min_trials = min_trials;
  c.max_trials = max_trials;
  c.target_relative_ci = target_ci;
  c.master_seed = seed;
  c.validate();
  return c;
}

std::string to_csv(const std::vector<simkit::SweepPoint>& pts) {
  std::ostringstream out;
  simkit::write_csv(out, pts);
  return out.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Correlated two-way relay link simulation (SCPNC, RCPNC, conventional PNC)";

  py::enum_<SchemeKind>(m, "Scheme")
      .value("SCPNC", SchemeKind::SCPNC)
      .value("RCPNC", SchemeKind::RCPNC)
      .value("CONVENTIONAL", SchemeKind::Conventional);

  py::class_<phy::ChannelParams>(m, "ChannelParams")
      .def(py::init<double, double>(), py::arg("gamma"), py::arg("energy") = 1.0)
      .def_static("from_snr_db", &phy::ChannelParams::from_snr_db, py::arg("snr_db"), py::arg("energy") = 1.0)
      .def_property_readonly("gamma", &phy::ChannelParams::gamma)
      .def_property_readonly("energy", &phy::ChannelParams::energy)
      .def_property_readonly("n0", &phy::ChannelParams::n0);

  m.def("pnc_threshold", &phy::pnc_threshold, py::arg("params"));
  m.def("q_function", &analytics::q_function, py::arg("x"));
  m.def("p_pnc_exact", &analytics::p_pnc_exact, py::arg("params"));
  m.def("p_bpsk", &analytics::p_bpsk, py::arg("params"));
  m.def(
      "bler_exact",
      [](SchemeKind kind, const phy::ChannelParams& p, std::size_t n, std::size_t k) {
        return analytics::bler_exact(kind, p, n, k);
      },
      py::arg("scheme"), py::arg("params"), py::arg("n"), py::arg("k"));
  m.def(
      "bler_asymptotic",
      [](SchemeKind kind, const phy::ChannelParams& p, std::size_t n, std::size_t k) {
        return analytics::bler_asymptotic(kind, p, n, k);
      },
      py::arg("scheme"), py::arg("params"), py::arg("n"), py::arg("k"));
  // Evaluated in the log domain, so it stays finite where both BLERs underflow.
  m.def("exact_bler_ratio", &analytics::exact_bler_ratio, py::arg("numerator"), py::arg("denominator"),
        py::arg("params"), py::arg("n"), py::arg("k"));
  m.def("gain_scpnc", &analytics::gain_scpnc, py::arg("n"), py::arg("k"));
  m.def("gain_rcpnc", &analytics::gain_rcpnc, py::arg("n"), py::arg("k"));

  py::class_<LinearBlockCode>(m, "BlockCode")
      .def_property_readonly("n", &LinearBlockCode::n)
      .def_property_readonly("k", &LinearBlockCode::k)
      .def_property_readonly("t", &LinearBlockCode::t)
      .def("syndrome",
           [](const LinearBlockCode& c, const std::string& w) {
             return bits_to_string(c.syndrome(gf2::BitBlock::from_string(w)));
           })
      .def("decode_error_pattern", [](const LinearBlockCode& c, const std::string& s) {
        return bits_to_string(c.decode_error_pattern(gf2::BitBlock::from_string(s)));
      });
  m.def("make_bch", &make_bch, py::arg("n"), py::arg("k"));

  py::class_<CorrelationModel>(m, "CorrelationModel")
      .def(py::init<std::size_t, std::size_t>(), py::arg("n"), py::arg("t"))
      .def_property_readonly("ball_size", &CorrelationModel::ball_size)
      .def("correlation_factor", &CorrelationModel::correlation_factor);

  py::class_<simkit::SweepPoint>(m, "SweepPoint")
      .def_readonly("snr_db", &simkit::SweepPoint::snr_db)
      .def_readonly("scheme", &simkit::SweepPoint::scheme)
      .def_readonly("n", &simkit::SweepPoint::n)
      .def_readonly("k", &simkit::SweepPoint::k)
      .def_readonly("trials", &simkit::SweepPoint::trials)
      .def_readonly("bler_sim", &simkit::SweepPoint::bler_sim)
      .def_readonly("bler_ci_low", &simkit::SweepPoint::bler_ci_low)
      .def_readonly("bler_ci_high", &simkit::SweepPoint::bler_ci_high)
      .def_readonly("bler_exact", &simkit::SweepPoint::bler_exact)
      .def_readonly("bler_asym", &simkit::SweepPoint::bler_asym)
      .def_readonly("throughput", &simkit::SweepPoint::throughput)
      .def_readonly("throughput_ci_low", &simkit::SweepPoint::throughput_ci_low)
      .def_readonly("throughput_ci_high", &simkit::SweepPoint::throughput_ci_high);

  m.def(
      "run_sweep",
      [](const std::string& scheme, std::size_t n, std::size_t k, const std::vector<double>& snr_db,
         std::uint64_t min_trials, std::uint64_t max_trials, double target_ci, std::uint64_t seed,
         std::size_t workers) {
        const auto c = make_config(scheme, n, k, snr_db, min_trials, max_trials, target_ci, seed);
        py::gil_scoped_release release;
        return simkit::run_sweep(c, {.workers = workers});
      },
      py::arg("scheme"), py::arg("n") = 15, py::arg("k") = 5, py::arg("snr_db"), py::arg("min_trials") = 10'000,
      py::arg("max_trials") = 1'000'000, py::arg("target_ci") = 0.05, py::arg("seed") = 1, py::arg("workers") = 1);
  m.def(
      "analytic_sweep",
      [](const std::string& scheme, std::size_t n, std::size_t k, const std::vector<double>& snr_db) {
        return simkit::analytic_sweep(make_config(scheme, n, k, snr_db, 1, 1, 0.05, 1));
      },
      py::arg("scheme"), py::arg("n") = 15, py::arg("k") = 5, py::arg("snr_db"));
  m.def("to_csv", &to_csv, py::arg("points"));
  m.attr("CSV_HEADER") = std::string(simkit::kCsvHeader);
  m.def("selftest", [] {
    std::ostringstream log;
    const bool ok = simkit::run_selftest(log);
    return py::make_tuple(ok, log.str());
  });
}
