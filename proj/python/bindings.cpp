#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstring>

#include "utmed/bench.hpp"

namespace py = pybind11;
using namespace utmed;

namespace {

using U8Array = py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>;

Image to_image(const U8Array& a) {
  if (a.ndim() != 2) throw std::invalid_argument("expected a 2-D uint8 array");
  const auto h = static_cast<int>(a.shape(0));
  const auto w = static_cast<int>(a.shape(1));
  std::vector<std::uint8_t> px(a.data(), a.data() + a.size());
  return Image(w, h, std::move(px));
}

U8Array to_array(const Image& img) {
  U8Array a({img.height(), img.width()});
  std::memcpy(a.mutable_data(), img.pixels().data(), img.size());
  return a;
}

std::array<std::uint8_t, 9> to_window(const std::vector<int>& v) {
  if (v.size() != 9) throw std::invalid_argument("expected 9 values");
  std::array<std::uint8_t, 9> out{};
  for (std::size_t i = 0; i < 9; ++i) {
    if (v[i] < 0 || v[i] > 255) throw std::invalid_argument("intensity out of range");
    out[i] = static_cast<std::uint8_t>(v[i]);
  }
  return out;
}

std::vector<int> to_list(const SortedWindow& s) { return {s.values.begin(), s.values.end()}; }

SortedWindow sorted_from(const std::vector<int>& v) {
  SortedWindow s;
  s.values = to_window(v);
  return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Switched trimmed-median impulse noise filter";

  py::class_<FilterParams>(m, "FilterParams")
      .def(py::init([](int t, int t1) { return FilterParams{t, t1}; }), py::arg("t") = 40,
           py::arg("t1") = 20)
      .def_readwrite("t", &FilterParams::threshold)
      .def_readwrite("t1", &FilterParams::median_threshold);

  py::class_<TrimBounds>(m, "TrimBounds")
      .def_readonly("first", &TrimBounds::first)
      .def_readonly("last", &TrimBounds::last)
      .def("__repr__", [](const TrimBounds& tb) {
        return "TrimBounds(first=" + std::to_string(tb.first) + ", last=" + std::to_string(tb.last) + ")";
      });

  py::enum_<Decision>(m, "Decision")
      .value("Unaltered", Decision::Unaltered)
      .value("MedianReplace", Decision::MedianReplace)
      .value("UtmedReplace", Decision::UtmedReplace);

  py::class_<CycleCosts>(m, "CycleCosts")
      .def(py::init<>())
      .def_static("overlapped", &CycleCosts::overlapped)
      .def_readwrite("idle", &CycleCosts::idle)
      .def_readwrite("dat1_per_element", &CycleCosts::dat1_per_element)
      .def_readwrite("index", &CycleCosts::index)
      .def_readwrite("decision", &CycleCosts::decision)
      .def_readwrite("out", &CycleCosts::out)
      .def_readwrite("final_process", &CycleCosts::final_process)
      .def_readwrite("out_final", &CycleCosts::out_final)
      .def("per_window", &CycleCosts::per_window);

  py::register_exception<PgmError>(m, "PgmError", PyExc_ValueError);

  m.def("read_pgm", [](py::bytes data) {
    const std::string s = data;
    std::vector<std::uint8_t> bytes(s.begin(), s.end());
    return to_array(read_pgm(bytes));
  });
  m.def(
      "write_pgm",
      [](const U8Array& a, bool ascii) {
        const auto bytes = write_pgm(to_image(a), ascii);
        return py::bytes(reinterpret_cast<const char*>(bytes.data()), bytes.size());
      },
      py::arg("image"), py::arg("ascii") = false);
  m.def("pad_replicate", [](const U8Array& a, int margin) {
    return to_array(pad_replicate(to_image(a), margin));
  });

  m.def("add_salt_pepper", [](const U8Array& a, double p, double q, std::uint64_t seed) {
    return to_array(add_salt_pepper(to_image(a), p, q, seed));
  });
  m.def("add_random_impulse", [](const U8Array& a, double d, std::uint64_t seed) {
    return to_array(add_random_impulse(to_image(a), d, seed));
  });
  m.def("add_gaussian", [](const U8Array& a, double var, std::uint64_t seed) {
    return to_array(add_gaussian(to_image(a), var, seed));
  });
  m.def("add_mixed", [](const U8Array& a, double d, double var, std::uint64_t seed) {
    return to_array(add_mixed(to_image(a), d, var, seed));
  });
  m.def("measure_density", [](const U8Array& clean, const U8Array& noisy) {
    return measure_density(to_image(clean), to_image(noisy));
  });

  m.def("sort3", [](int a, int b, int c) {
    const auto w = to_window({a, b, c, 0, 0, 0, 0, 0, 0});
    const auto r = sort3(w[0], w[1], w[2]);
    return py::make_tuple(r.min, r.mid, r.max);
  });
  m.def("snake_sort", [](const std::vector<int>& v) {
    const auto w = to_window(v);
    return to_list(snake_sort_network(w));
  });
  m.def("reference_sort", [](const std::vector<int>& v) {
    const auto w = to_window(v);
    return to_list(reference_sort(w));
  });
  m.def(
      "verify_network",
      [](const std::string& wiring) {
        const auto& net = wiring == "shear" ? shear_network() : shipped_network();
        const auto r = verify_network(net);
        py::dict d;
        d["network"] = r.network;
        d["comparator_count"] = r.comparator_count;
        d["stage_count"] = r.stage_count;
        d["binary_failures"] = r.binary_failures;
        d["permutation_failures"] = r.permutation_failures;
        d["verified"] = r.verified();
        return d;
      },
      py::arg("wiring") = "shipped");

  m.def("trim_bounds", [](const std::vector<int>& sorted) { return trim_bounds(sorted_from(sorted)); });
  m.def("impulse_lut", py::overload_cast<int>(&impulse_lut), py::arg("zero_count"));
  m.def("utmed", [](const std::vector<int>& sorted) {
    const auto s = sorted_from(sorted);
    return utmed::utmed(s, trim_bounds(s));
  });
  m.def(
      "classify_and_correct",
      [](int center, int median, int ut, const FilterParams& params) {
        const auto w = to_window({center, median, ut, 0, 0, 0, 0, 0, 0});
        const auto c = classify_and_correct(w[0], w[1], w[2], params);
        return py::make_tuple(c.value, c.decision);
      },
      py::arg("center"), py::arg("median"), py::arg("ut"), py::arg("params") = FilterParams{});

  m.def(
      "denoise_pa",
      [](const U8Array& a, const FilterParams& params) {
        return to_array(denoise_pa(to_image(a), params));
      },
      py::arg("image"), py::arg("params") = FilterParams{});
  m.def("smf", [](const U8Array& a, int size) { return to_array(smf(to_image(a), size)); },
        py::arg("image"), py::arg("size") = 3);
  m.def("mean_filter", [](const U8Array& a, int size) { return to_array(mean_filter(to_image(a), size)); },
        py::arg("image"), py::arg("size") = 3);

  m.def(
      "fsmd_run_window",
      [](const std::vector<int>& values, const FilterParams& params, const CycleCosts& costs) {
        const auto w = to_window(values);
        Window win{3, {w.begin(), w.end()}, w[4]};
        const auto r = fsmd_run_window(win, params, costs);
        return py::make_tuple(r.value, r.cycles);
      },
      py::arg("values"), py::arg("params") = FilterParams{}, py::arg("costs") = CycleCosts{});
  m.def(
      "fsmd_run_image",
      [](const U8Array& a, const FilterParams& params, const CycleCosts& costs) {
        const auto r = fsmd_run_image(to_image(a), params, costs);
        py::dict report;
        report["cycles_first_output"] = r.report.cycles_first_output;
        report["cycles_per_window"] = r.report.cycles_per_window;
        report["windows"] = r.report.windows;
        report["delta_from_published"] = r.report.delta_from_published();
        return py::make_tuple(to_array(r.image), report);
      },
      py::arg("image"), py::arg("params") = FilterParams{}, py::arg("costs") = CycleCosts{});

  m.def("mse", [](const U8Array& r, const U8Array& x) { return mse(to_image(r), to_image(x)); });
  m.def("psnr", [](const U8Array& r, const U8Array& x) { return psnr(to_image(r), to_image(x)); });
  m.def("ief", [](const U8Array& r, const U8Array& n, const U8Array& x) {
    return ief(to_image(r), to_image(n), to_image(x));
  });
}
