#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ras/classify.hpp"
#include "ras/cli.hpp"
#include "ras/coxeter.hpp"
#include "ras/enumerate.hpp"
#include "ras/error.hpp"
#include "ras/json_io.hpp"

namespace py = pybind11;
namespace rj = ras::json;
using rj::json;

namespace {

// Classes and surfaces cross the boundary as JSON text, which keeps big
// integers exact; the Python package does the conversion.
ras::SurfaceData surface(const std::string& text) { return rj::surface_from_json(json::parse(text)); }

ras::DivisorClass class_on(const ras::SurfaceData& X, const std::string& text) {
  return rj::class_from_json(json::parse(text), X.context());
}

template <class F>
std::string query(const std::string& surface_text, const std::string& class_text, F&& f) {
  ras::SurfaceData X = surface(surface_text);
  ras::DivisorClass D = class_on(X, class_text);
  py::gil_scoped_release release;
  return f(X, D).dump();
}

}  // namespace

PYBIND11_MODULE(_ras, m) {
  m.doc() = "Picard lattice algorithms for anticanonical rational surfaces";

  py::register_exception<ras::Error>(m, "RasError", PyExc_ValueError);

  m.def("cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code;
    {
      py::gil_scoped_release release;
      code = ras::cli::run(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  });

  m.def("intersect", [](const std::string& a, const std::string& b, const std::string& parity) {
    json ja = json::parse(a), jb = json::parse(b);
    if (ja.size() < 2) throw ras::ValidationError("a class needs at least two coefficients");
    ras::LatticeContext ctx{ja.size() - 2, ras::parity_from_string(parity)};
    return rj::to_json(ras::intersect(rj::class_from_json(ja, ctx), rj::class_from_json(jb, ctx))).dump();
  });

  m.def("root_orbit", [](std::size_t mm, const std::string& parity) {
    json out = json::array();
    for (const auto& a : ras::root_orbit(mm, ras::parity_from_string(parity))) out.push_back(rj::to_json(a));
    return out.dump();
  });

  m.def("minus_one", [](const std::string& s, const std::string& c) {
    return query(s, c, [](const auto& X, const auto& D) { return rj::to_json(ras::is_minus_one_class(X, D)); });
  });
  m.def("minus_two", [](const std::string& s, const std::string& c) {
    return query(s, c, [](const auto& X, const auto& D) { return rj::to_json(ras::is_minus_two_class(X, D)); });
  });
  m.def("nef", [](const std::string& s, const std::string& c) {
    return query(s, c, [](const auto& X, const auto& D) { return rj::to_json(ras::is_nef(X, D)); });
  });
  m.def("effective", [](const std::string& s, const std::string& c) {
    return query(s, c, [](const auto& X, const auto& D) { return rj::to_json(ras::is_effective(X, D)); });
  });
  m.def("h0", [](const std::string& s, const std::string& c) {
    return query(s, c, [](const auto& X, const auto& D) { return rj::to_json(ras::h0(X, D)); });
  });

  m.def("enumerate_rigid", []() {
    ras::CensusResult r;
    {
      py::gil_scoped_release release;
      r = ras::enumerate_rigid_second_order();
    }
    return rj::census_summary(r).dump();
  });
}
