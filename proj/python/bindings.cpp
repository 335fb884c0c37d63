#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "commat/dispatch.hpp"
#include "commat/verify.hpp"

namespace py = pybind11;
using namespace commat;

namespace {

Integer to_integer(const py::handle& v) {
    if (!py::isinstance<py::int_>(v) || py::isinstance<py::bool_>(v)) {
        throw py::type_error("matrix entries must be int");
    }
    return Integer::from_string(py::str(v).cast<std::string>());
}

py::int_ to_py(const Integer& x) { return py::int_(py::str(x.to_string())); }

Matrix<Integer> to_matrix(const py::sequence& rows, const char* name) {
    const std::size_t r = py::len(rows);
    if (r == 0) throw ShapeError(std::string(name) + " has no rows");
    std::vector<Integer> data;
    std::size_t c = 0;
    for (std::size_t i = 0; i < r; ++i) {
        const auto row = py::reinterpret_borrow<py::sequence>(rows[i]);
        if (i == 0) c = py::len(row);
        if (py::len(row) != c) throw ShapeError(std::string(name) + " is ragged");
        for (const auto& v : row) data.push_back(to_integer(v));
    }
    return Matrix<Integer>(r, c, std::move(data));
}

py::list to_rows(const Matrix<Integer>& m) {
    py::list rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < m.cols(); ++j) row.append(to_py(m(i, j)));
        rows.append(row);
    }
    return rows;
}

py::dict report_dict(const CostReport& r) {
    py::dict d;
    d["strategy"] = std::string(strategy_name(r.strategy));
    d["l"] = r.l;
    d["n"] = r.n;
    d["m"] = r.m;
    d["predicted"] = r.predicted;
    d["observed"] = r.observed;
    return d;
}

py::tuple py_multiply(const py::sequence& a, const py::sequence& b, const std::string& strategy,
                      std::optional<std::uint64_t> modulus) {
    const Strategy s = parse_strategy(strategy);
    const Matrix<Integer> ma = to_matrix(a, "a");
    const Matrix<Integer> mb = to_matrix(b, "b");
    if (modulus) {
        const std::uint64_t p = *modulus;
        if (p < 2 || p > ModInt::max_modulus) throw std::invalid_argument("modulus must lie in [2, 2^62]");
        auto lift = [p](const Integer& x) { return ModInt::from_integer(x, p); };
        auto [c, r] = multiply(ma.map(lift), mb.map(lift), s);
        return py::make_tuple(to_rows(c.map([](const ModInt& x) { return Integer(static_cast<std::int64_t>(x.residue())); })),
                              report_dict(r));
    }
    auto [c, r] = multiply(ma, mb, s);
    return py::make_tuple(to_rows(c), report_dict(r));
}

py::dict py_symbolic_verify(const std::string& strategy, std::size_t l, std::size_t n, std::size_t m) {
    const SymbolicResult r = symbolic_verify(parse_strategy(strategy), l, n, m);
    py::dict d;
    d["pass"] = r.pass;
    d["strategy"] = r.label;
    if (r.mismatch) {
        d["entry"] = py::make_tuple(r.mismatch->row + 1, r.mismatch->col + 1);
        d["monomial"] = r.mismatch->monomial;
        d["coefficient"] = r.mismatch->coefficient;
    }
    return d;
}

py::dict py_randomized_check(const std::string& strategy, std::size_t l, std::size_t n, std::size_t m,
                             std::size_t trials, std::uint64_t seed, std::optional<std::uint64_t> modulus) {
    const Strategy s = parse_strategy(strategy);
    const RandomCheckReport r = modulus ? randomized_check(s, l, n, m, ModularRing(*modulus), trials, seed)
                                        : randomized_check(s, l, n, m, IntegerRing(), trials, seed);
    py::dict d;
    d["pass"] = r.pass();
    d["trials"] = r.trials;
    d["equal"] = r.equal;
    d["first_mismatch"] = r.first_mismatch ? py::cast(*r.first_mismatch) : py::none();
    return d;
}

py::list py_count_table(std::uint64_t lmax, std::uint64_t nmax, std::uint64_t mmax) {
    py::list out;
    for (const CountRow& r : count_table(lmax, nmax, mmax)) {
        py::dict d;
        d["l"] = r.l;
        d["n"] = r.n;
        d["m"] = r.m;
        d["paper"] = r.paper;
        d["waksman_odd"] = r.waksman_odd;
        d["naive"] = r.naive;
        d["delta"] = r.delta;
        out.append(d);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "Exact commutative matrix multiplication with multiplication counting";

    auto& base = py::register_exception<Error>(mod, "CommatError", PyExc_RuntimeError);
    py::register_exception<ShapeError>(mod, "ShapeError", base.ptr());
    py::register_exception<UnsupportedShape>(mod, "UnsupportedShape", base.ptr());
    py::register_exception<ExactHalveUnavailable>(mod, "ExactHalveUnavailable", base.ptr());
    py::register_exception<RingMismatch>(mod, "RingMismatch", base.ptr());
    py::register_exception<CountMismatch>(mod, "CountMismatch", base.ptr());
    py::register_exception<ResourceLimit>(mod, "ResourceLimit", base.ptr());

    mod.def("multiply", &py_multiply, py::arg("a"), py::arg("b"), py::arg("strategy") = "auto",
            py::arg("modulus") = py::none(),
            "Multiply two integer matrices (lists of rows). Returns (product, report).");
    mod.def(
        "predict_count",
        [](const std::string& s, std::uint64_t l, std::uint64_t n, std::uint64_t m) {
            return predict_count(parse_strategy(s), l, n, m);
        },
        py::arg("strategy"), py::arg("l"), py::arg("n"), py::arg("m"));
    mod.def(
        "choose_strategy",
        [](std::uint64_t l, std::uint64_t n, std::uint64_t m, bool halving) {
            return std::string(strategy_name(choose_strategy(l, n, m, RingCaps{halving})));
        },
        py::arg("l"), py::arg("n"), py::arg("m"), py::arg("halving") = true);
    mod.def("symbolic_verify", &py_symbolic_verify, py::arg("strategy"), py::arg("l"), py::arg("n"), py::arg("m"));
    mod.def(
        "count_audit",
        [](const std::string& s, std::size_t l, std::size_t n, std::size_t m, std::uint64_t seed) {
            return report_dict(count_audit(parse_strategy(s), l, n, m, seed));
        },
        py::arg("strategy"), py::arg("l"), py::arg("n"), py::arg("m"), py::arg("seed") = 0);
    mod.def("randomized_check", &py_randomized_check, py::arg("strategy"), py::arg("l"), py::arg("n"), py::arg("m"),
            py::arg("trials") = 100, py::arg("seed") = 0, py::arg("modulus") = py::none());
    mod.def("count_table", &py_count_table, py::arg("lmax") = 8, py::arg("nmax") = 9, py::arg("mmax") = 8);
    mod.attr("strategies") = [] {
        py::list names;
        for (Strategy s : kConcreteStrategies) names.append(std::string(strategy_name(s)));
        return names;
    }();
}
