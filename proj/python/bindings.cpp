#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mfx/dispatch.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_mfx, m) {
    m.doc() = "Exact matrix-factorization and extension-category toolkit";

    // Same surface as the CLI: op name + JSON text in, (exit_code, JSON
    // text) out. 0 = verified-true/success, 1 = verified-false,
    // 2 = malformed input.
    m.def(
        "run",
        [](const std::string& op, const std::string& input) -> py::tuple {
            mfx::Json in;
            try {
                in = mfx::Json::parse(input);
            } catch (const mfx::Json::parse_error& e) {
                mfx::Json err{{"op", op}, {"ok", false}, {"error", e.what()}};
                return py::make_tuple(2, err.dump(2));
            }
            auto res = mfx::dispatch(op, in);
            int code = res.exit_code;
            return py::make_tuple(code, res.output.dump(2));
        },
        py::arg("op"), py::arg("input"),
        "Run an operation on a JSON input string; returns (exit_code, "
        "output_json).");

    m.def("ops", [] { return mfx::dispatch_ops(); },
          "Names of the available operations.");
}
