#include <pybind11/pybind11.h>

#include "legfront/front.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_legfront, m) {
  m.doc() = "Legendrian front calculus";
  m.def("invariants_text", [](const std::string& text) {
    legfront::ClassicalInvariants inv =
        legfront::classical_invariants(legfront::parse_front(text));
    return py::make_tuple(inv.tb, inv.rot);
  });
}
