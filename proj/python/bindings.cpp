#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "unimod/cli.hpp"
#include "unimod/density.hpp"
#include "unimod/experiments.hpp"
#include "unimod/matrix_io.hpp"
#include "unimod/normal_forms.hpp"

namespace py = pybind11;
using namespace unimod;

namespace {

py::object to_py(const BigInt& v) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

BigInt from_py(const py::handle& h) {
    if (!PyLong_Check(h.ptr())) throw py::type_error("matrix entries must be int");
    return BigInt(py::str(h).cast<std::string>(), 10);
}

IntMatrix matrix_from_py(const py::sequence& rows) {
    if (py::len(rows) == 0) throw DomainError("matrix must have at least one row");
    const std::size_t k = py::len(rows);
    const std::size_t n = py::len(rows[0]);
    std::vector<BigInt> entries;
    entries.reserve(k * n);
    for (const auto& row : rows) {
        auto seq = row.cast<py::sequence>();
        if (py::len(seq) != n) throw DomainError("ragged matrix");
        for (const auto& v : seq) entries.push_back(from_py(v));
    }
    return IntMatrix(k, n, std::move(entries));
}

py::list matrix_to_py(const IntMatrix& m) {
    py::list rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        py::list row;
        for (const auto& v : m.row(i)) row.append(to_py(v));
        rows.append(row);
    }
    return rows;
}

py::object fraction(const Rational& q) {
    return py::module_::import("fractions").attr("Fraction")(to_py(q.get_num()), to_py(q.get_den()));
}

py::dict density_dict(const DensityReport& r) {
    py::dict d;
    if (r.codimension) {
        d["d"] = r.codimension;
    } else {
        d["k"] = r.k;
        d["n"] = r.n;
    }
    d["value"] = to_decimal_string(r.value);
    d["value_float"] = static_cast<double>(r.value);
    d["abs_error_bound"] = static_cast<double>(r.abs_error_bound);
    d["product_cutoff"] = r.product_cutoff;
    return d;
}

py::dict estimate_dict(const EstimateReport& r) {
    py::dict d;
    d["k"] = r.spec.k;
    d["n"] = r.spec.n;
    d["bound"] = r.spec.bound;
    d["samples"] = r.samples;
    d["hits"] = r.hits;
    d["estimate"] = r.estimate;
    d["std_error"] = r.std_error;
    d["seed"] = r.seed;
    d["shards"] = r.shards;
    d["stream"] = to_string(r.stream);
    d["theory_value"] = r.theory_value;
    d["z_score"] = r.z_score ? py::object(py::float_(*r.z_score)) : py::object(py::none());
    return d;
}

SampleStream parse_stream(const std::string& s) {
    if (s == "random") return SampleStream::Random;
    if (s == "enumeration") return SampleStream::Enumeration;
    throw DomainError("stream must be 'random' or 'enumeration'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact unimodularity, Hermite/Smith normal forms, and natural densities of integer matrices";

    static py::exception<NotUnimodular> not_unimodular(m, "NotUnimodular", PyExc_ValueError);
    static py::exception<BudgetExceeded> budget_exceeded(m, "BudgetExceeded", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const NotUnimodular& e) {
            PyErr_SetObject(not_unimodular.ptr(), py::make_tuple(e.what(), to_py(e.minor_gcd())).ptr());
        } catch (const BudgetExceeded& e) {
            PyErr_SetString(budget_exceeded.ptr(), e.what());
        } catch (const ParseError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const DomainError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def("minors", [](const py::sequence& a, std::size_t t) {
        py::list out;
        for (const auto& v : minors(matrix_from_py(a), t).values) out.append(to_py(v));
        return out;
    }, py::arg("matrix"), py::arg("t"));
    m.def("determinant", [](const py::sequence& a) { return to_py(determinant(matrix_from_py(a))); });
    m.def("full_rank_minor_gcd", [](const py::sequence& a) { return to_py(full_rank_minor_gcd(matrix_from_py(a))); });
    m.def("is_unimodular", [](const py::sequence& a) { return is_unimodular(matrix_from_py(a)); });

    m.def("hnf", [](const py::sequence& a) {
        const auto r = hnf(matrix_from_py(a));
        py::dict d;
        d["H"] = matrix_to_py(r.H);
        d["U"] = matrix_to_py(r.U);
        d["det_U"] = r.det_u;
        d["rank"] = r.rank;
        return d;
    });
    m.def("is_trivial_hnf", [](const py::sequence& a) { return is_trivial_hnf(matrix_from_py(a)); });
    m.def("complete_to_gl", [](const py::sequence& a) { return matrix_to_py(complete_to_gl(matrix_from_py(a))); });
    m.def("snf", [](const py::sequence& a) {
        const auto r = snf(matrix_from_py(a));
        py::list inv;
        for (const auto& v : r.invariants) inv.append(to_py(v));
        py::dict d;
        d["S"] = matrix_to_py(r.S);
        d["invariants"] = inv;
        d["L"] = matrix_to_py(r.L);
        d["R"] = matrix_to_py(r.R);
        return d;
    });

    m.def("zeta", [](long j, double tol) {
        const auto z = zeta(j, tol);
        return py::make_tuple(static_cast<double>(z.value), static_cast<double>(z.error_bound));
    }, py::arg("j"), py::arg("tol") = 1e-12);
    m.def("density_exact", [](long k, long n, double tol) { return density_dict(density_exact(k, n, tol)); },
          py::arg("k"), py::arg("n"), py::arg("tol") = 1e-12);
    m.def("density_limit", [](long d, double tol) { return density_dict(density_limit(d, tol)); }, py::arg("d"),
          py::arg("tol") = 1e-12);
    m.def("count_full_rank_mod_p", [](std::uint64_t p, long k, long n) { return to_py(count_full_rank_mod_p(p, k, n)); },
          py::arg("p"), py::arg("k"), py::arg("n"));
    m.def("local_density", [](std::vector<std::uint64_t> primes, long k, long n) {
        return fraction(local_density(PrimeSet(std::move(primes)), k, n));
    }, py::arg("primes"), py::arg("k"), py::arg("n"));
    m.def("divisibility_defect", [](std::uint64_t p, long k, long n) { return fraction(divisibility_defect(p, k, n)); },
          py::arg("p"), py::arg("k"), py::arg("n"));

    m.def("exhaustive_density", [](unsigned k, unsigned n, std::uint64_t bound, std::uint64_t budget, unsigned shards) {
        const auto r = exhaustive_density({k, n, bound}, budget, shards);
        py::dict d;
        d["total"] = to_py(r.total);
        d["hits"] = to_py(r.hits);
        d["density"] = fraction(r.density);
        return d;
    }, py::arg("k"), py::arg("n"), py::arg("bound"), py::arg("budget") = kDefaultEnumerationBudget,
          py::arg("shards") = 1);
    m.def("estimate_density", [](unsigned k, unsigned n, std::uint64_t bound, std::uint64_t samples, std::uint64_t seed,
                                 unsigned shards, const std::string& stream) {
        py::gil_scoped_release release;
        auto r = estimate_density({k, n, bound}, samples, seed, shards, parse_stream(stream));
        py::gil_scoped_acquire acquire;
        return estimate_dict(r);
    }, py::arg("k"), py::arg("n"), py::arg("bound"), py::arg("samples"), py::arg("seed"), py::arg("shards") = 1,
          py::arg("stream") = "random");
    m.def("convergence_sweep", [](unsigned k, unsigned n, std::vector<std::uint64_t> bounds, std::uint64_t samples,
                                  std::uint64_t seed, unsigned shards) {
        py::list out;
        for (const auto& r : convergence_sweep(k, n, bounds, samples, seed, shards)) out.append(estimate_dict(r));
        return out;
    }, py::arg("k"), py::arg("n"), py::arg("bounds"), py::arg("samples"), py::arg("seed"), py::arg("shards") = 1);
    m.def("verify_local_density", [](std::uint64_t p, unsigned k, unsigned n) {
        const auto r = verify_local_density(p, k, n);
        py::dict d;
        d["full_rank"] = to_py(r.full_rank);
        d["total"] = to_py(r.total);
        d["empirical"] = fraction(r.empirical);
        d["theory"] = fraction(r.theory);
        d["agree"] = r.agree;
        return d;
    }, py::arg("p"), py::arg("k"), py::arg("n"));

    m.def("parse_matrix_file", [](const std::string& text) { return matrix_to_py(parse_matrix_file(text)); });
    m.def("format_matrix_file", [](const py::sequence& a) { return format_matrix_file(matrix_from_py(a)); });

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), "Run the command-line tool in-process; returns (exit_code, stdout, stderr).");
}
