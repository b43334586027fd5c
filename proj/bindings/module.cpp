#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

#include "exactseq/cancellative.hpp"
#include "exactseq/catalan.hpp"
#include "exactseq/errors.hpp"
#include "exactseq/golden.hpp"
#include "exactseq/int.hpp"
#include "exactseq/lrs.hpp"
#include "exactseq/quasipoly.hpp"
#include "exactseq/registry.hpp"

namespace py = pybind11;
using namespace exactseq;

namespace pybind11::detail {

template <>
struct type_caster<Int> {
  PYBIND11_TYPE_CASTER(Int, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    PyObject* text = PyObject_Str(src.ptr());
    if (!text) {
      PyErr_Clear();
      return false;
    }
    const char* digits = PyUnicode_AsUTF8(text);
    bool ok = digits && mpz_set_str(value.get_mpz_t(), digits, 10) == 0;
    Py_DECREF(text);
    return ok;
  }

  static handle cast(const Int& src, return_value_policy, handle) {
    return PyLong_FromString(src.get_str().c_str(), nullptr, 10);
  }
};

template <>
struct type_caster<Rat> {
  PYBIND11_TYPE_CASTER(Rat, const_name("Fraction"));

  bool load(handle src, bool) {
    object num, den;
    if (PyLong_Check(src.ptr())) {
      num = reinterpret_borrow<object>(src);
      den = int_(1);
    } else if (hasattr(src, "numerator") && hasattr(src, "denominator")) {
      num = src.attr("numerator");
      den = src.attr("denominator");
    } else {
      return false;
    }
    std::string text = str(num).cast<std::string>() + "/" + str(den).cast<std::string>();
    if (mpq_set_str(value.get_mpq_t(), text.c_str(), 10) != 0) return false;
    value.canonicalize();
    return true;
  }

  static handle cast(const Rat& src, return_value_policy, handle) {
    object fraction = module_::import("fractions").attr("Fraction");
    return fraction(src.get_str()).release();
  }
};

}  // namespace pybind11::detail

namespace {

SequenceParams make_params(long k, long l, long base) {
  SequenceParams params;
  params.k = k;
  params.l = l;
  params.base = base;
  return params;
}

EvalBudget make_budget(long max_order, long oracle_limit) {
  EvalBudget budget;
  budget.max_order = max_order;
  budget.oracle_limit = oracle_limit;
  return budget;
}

const SequenceEntry& entry_or_throw(const std::string& name) {
  const SequenceEntry* entry = find_sequence(name);
  if (!entry) throw std::domain_error("unknown sequence: " + name);
  return *entry;
}

LrsSpec make_spec(const std::vector<Int>& coeffs, const std::vector<Int>& initial) {
  LrsSpec spec{coeffs, initial};
  spec.validate();
  return spec;
}

QuasiPolynomial weighted_from_map(const std::string& variant,
                                  const std::map<long, Rat>& weights) {
  if (variant != "P" && variant != "Q")
    throw std::domain_error("variant must be P or Q");
  return weighted_finite_support(
      weights, variant == "P" ? PartVariant::P : PartVariant::Q);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact integer sequence kernels";

  py::register_exception<budget_error>(m, "BudgetError", PyExc_RuntimeError);
  py::register_exception<consistency_error>(m, "ConsistencyError", PyExc_RuntimeError);
  py::register_exception<class_error>(m, "ClassError", PyExc_RuntimeError);

  m.def("sequence_names", [] {
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& entry : sequence_registry())
      rows.emplace_back(entry.name, entry.summary);
    return rows;
  });

  m.def(
      "seq",
      [](const std::string& name, long n, long k, long l, long base, long max_order,
         long oracle_limit) {
        const SequenceEntry& entry = entry_or_throw(name);
        if (entry.needs_k && k < 1)
          throw std::domain_error("this sequence needs k >= 1");
        return entry.eval(n, make_params(k, l, base), make_budget(max_order, oracle_limit));
      },
      py::arg("name"), py::arg("n"), py::arg("k") = 0, py::arg("l") = 1,
      py::arg("base") = 2, py::arg("max_order") = 100000,
      py::arg("oracle_limit") = 60);

  m.def(
      "seq_range",
      [](const std::string& name, long lo, long hi, long k, long l, long base,
         long max_order, long oracle_limit) {
        const SequenceEntry& entry = entry_or_throw(name);
        if (entry.needs_k && k < 1)
          throw std::domain_error("this sequence needs k >= 1");
        return sequence_range(entry, lo, hi, make_params(k, l, base),
                              make_budget(max_order, oracle_limit));
      },
      py::arg("name"), py::arg("lo"), py::arg("hi"), py::arg("k") = 0,
      py::arg("l") = 1, py::arg("base") = 2, py::arg("max_order") = 100000,
      py::arg("oracle_limit") = 60);

  m.def(
      "lrs_terms",
      [](const std::vector<Int>& coeffs, const std::vector<Int>& initial, long lo,
         long hi) {
        if (lo < 1) throw std::domain_error("indices start at 1");
        LrsSpec spec = make_spec(coeffs, initial);
        auto cls = classify(spec);
        std::vector<Int> out;
        out.reserve(hi >= lo ? hi - lo + 1 : 0);
        for (long n = lo; n <= hi; ++n) out.push_back(lrs_eval(spec, cls, Int(n)));
        return out;
      },
      py::arg("coeffs"), py::arg("initial"), py::arg("lo"), py::arg("hi"));

  m.def(
      "lrs_term",
      [](const std::vector<Int>& coeffs, const std::vector<Int>& initial,
         const Int& n) {
        if (n < 1) throw std::domain_error("indices start at 1");
        return lrs_eval(make_spec(coeffs, initial), n);
      },
      py::arg("coeffs"), py::arg("initial"), py::arg("n"));

  m.def(
      "lrs_classify",
      [](const std::vector<Int>& coeffs, const std::vector<Int>& initial) {
        return classification_summary(classify(make_spec(coeffs, initial)));
      },
      py::arg("coeffs"), py::arg("initial"));

  m.def(
      "part_count_class",
      [](const std::vector<long>& parts) { return qp_to_string(bell_quasipoly(parts)); },
      py::arg("parts"));

  m.def(
      "part_count",
      [](const std::vector<long>& parts, const Int& n) {
        Rat v = qp_eval(bell_quasipoly(parts), n);
        return Int(v.get_num());
      },
      py::arg("parts"), py::arg("n"));

  m.def(
      "weighted_parts_class",
      [](const std::string& variant, const std::map<long, Rat>& weights) {
        return qp_to_string(weighted_from_map(variant, weights));
      },
      py::arg("variant"), py::arg("weights"));

  m.def(
      "verify",
      [](const std::string& suite) {
        VerifyResult res = run_verify_suite(suite);
        return py::make_tuple(res.ok, res.checks, res.message);
      },
      py::arg("suite"));

  m.def("verify_suites", [] { return verify_suite_names(); });

  m.def("catalan_parity_aware", [](const Int& n) { return catalan_parity_aware(n); },
        py::arg("n"));
  m.def("q_pm", [](const Int& n) { return q_pm(n); }, py::arg("n"));
}
