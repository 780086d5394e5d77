#include <pybind11/pybind11.h>

PYBIND11_MODULE(_boyforge, m) { m.doc() = "boyforge bindings (in progress)"; }
