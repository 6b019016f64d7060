#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "permgrid/bounds.hpp"
#include "permgrid/classes.hpp"
#include "permgrid/containment.hpp"
#include "permgrid/decomposition.hpp"
#include "permgrid/error.hpp"
#include "permgrid/extensions.hpp"
#include "permgrid/gridding.hpp"
#include "permgrid/pins.hpp"
#include "permgrid/plot.hpp"
#include "permgrid/structures.hpp"

namespace py = pybind11;
using namespace permgrid;

namespace {

// Permutations cross the boundary as lists of ints.
Permutation perm(const std::vector<int>& v) { return Permutation(v); }
std::vector<int> list(const Permutation& p) { return {p.values().begin(), p.values().end()}; }

Symmetry orient(const std::string& name) {
  auto g = Symmetry::from_name(name);
  if (!g) throw Error(ErrorCode::Param, "unknown orientation: " + name);
  return *g;
}

Chirality chirality(const std::string& s) {
  if (s == "cw") return Chirality::Clockwise;
  if (s == "ccw") return Chirality::Counterclockwise;
  throw Error(ErrorCode::Param, "chirality must be cw or ccw");
}

py::dict pins_dict(const PinSequence& s) {
  std::vector<std::string> dirs;
  for (Direction d : s.directions) dirs.emplace_back(to_string(d));
  py::dict d;
  d["points"] = s.positions;
  d["directions"] = dirs;
  d["turns"] = count_turns(s);
  return d;
}

py::tuple detection(const Detection& d) { return py::make_tuple(d.max, d.witness); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Simple permutations, pin sequences and monotone griddability";

  static py::exception<Error> error(m, "PermgridError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, (std::string(to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  m.def("parse", [](const std::string& s) { return list(parse_permutation(s)); });
  m.def("format", [](const std::vector<int>& v) { return perm(v).to_string(); });
  m.def("is_simple", [](const std::vector<int>& v) { return is_simple(perm(v)); });
  m.def("intervals", [](const std::vector<int>& v) {
    std::vector<std::pair<int, int>> out;
    for (const auto& i : intervals(perm(v))) out.emplace_back(i.first, i.last);
    return out;
  });
  m.def("decompose", [](const std::vector<int>& v) {
    const auto d = substitution_decompose(perm(v));
    std::vector<std::vector<int>> parts;
    for (const auto& p : d.parts) parts.push_back(list(p));
    return py::make_tuple(std::string(to_string(d.kind)), list(d.skeleton), parts);
  });
  m.def("inflate", [](const std::vector<int>& skeleton, const std::vector<std::vector<int>>& parts) {
    std::vector<Permutation> ps;
    for (const auto& p : parts) ps.push_back(perm(p));
    return list(inflate(perm(skeleton), ps));
  });
  m.def("contains", [](const std::vector<int>& text, const std::vector<int>& pattern) {
    return contains(perm(text), perm(pattern));
  });

  m.def("sum_of_21", [](int k) { return list(sum_of_21(k)); });
  m.def("skew_of_12", [](int k) { return list(skew_of_12(k)); });
  m.def("parallel_sawtooth", [](int m_, const std::string& o) {
    return list(gen_parallel_sawtooth(m_, orient(o)));
  }, py::arg("m"), py::arg("orient") = "identity");
  m.def("wedge_sawtooth", [](int m_, const std::string& o) {
    return list(gen_wedge_sawtooth(m_, orient(o)));
  }, py::arg("m"), py::arg("orient") = "identity");
  m.def("sliced_wedge", [](int m_, int t, const std::string& o) {
    return list(gen_sliced_wedge(m_, t, orient(o)));
  }, py::arg("m"), py::arg("type"), py::arg("orient") = "identity");
  m.def("increasing_oscillation", [](int n, int variant) {
    return list(gen_increasing_oscillation(n, variant));
  }, py::arg("n"), py::arg("variant") = 1);
  m.def("longest_sum21", [](const std::vector<int>& v) { return detection(longest_sum21(perm(v))); });
  m.def("longest_skew12", [](const std::vector<int>& v) { return detection(longest_skew12(perm(v))); });
  m.def("rho", [](const std::vector<int>& v) { return rho(perm(v)); });

  m.def("validate_pins", [](const std::vector<int>& host, const std::vector<int>& pins) -> py::object {
    const auto r = validate_pin_sequence(perm(host), pins);
    if (const auto* s = std::get_if<PinSequence>(&r)) return pins_dict(*s);
    const auto& v = std::get<PinViolation>(r);
    return py::make_tuple(std::string(to_string(v.clause)), v.index);
  });
  m.def("enumerate_pins", [](const std::vector<int>& host, int p1, int p2, int max_len) {
    py::list out;
    for (const auto& s : enumerate_pin_sequences(perm(host), p1, p2, max_len)) out.append(pins_dict(s));
    return out;
  });
  m.def("right_reaching", [](const std::vector<int>& host, int p1, int p2) {
    return pins_dict(right_reaching(perm(host), p1, p2));
  });
  m.def("realize_word", [](const std::string& start, const std::string& letters) {
    const auto r = realize_pin_word(parse_pin_word(start, letters));
    py::dict d = pins_dict(r.sequence);
    d["perm"] = list(r.perm);
    return d;
  });
  m.def("spiral", [](const std::string& c, int length, const std::vector<std::tuple<int, int, int>>& ext) {
    std::vector<ExtensionSpec> specs;
    for (const auto& [pin, type, placement] : ext) specs.push_back({pin, type, placement});
    const auto x = gen_spiral_with_extensions(chirality(c), length, specs);
    py::list records;
    for (const auto& r : x.extensions) {
      py::dict d;
      d["pin"] = r.pin;
      d["type"] = r.type;
      d["points"] = r.points;
      records.append(d);
    }
    py::dict d = pins_dict(x.spiral);
    d["perm"] = list(x.perm);
    d["extensions"] = records;
    return d;
  }, py::arg("chirality"), py::arg("length"), py::arg("extensions") = std::vector<std::tuple<int, int, int>>{});

  m.def("find_gridding", [](const std::vector<int>& v, int h, int v_) -> py::object {
    const auto g = find_monotone_gridding(perm(v), h, v_);
    if (!g) return py::none();
    std::vector<std::vector<std::string>> cells;
    for (int c = 0; c < g->columns(); ++c) {
      cells.emplace_back();
      for (int r = 0; r < g->rows(); ++r) cells.back().emplace_back(to_string(g->cell(c, r)));
    }
    py::dict d;
    d["h_cuts"] = g->h_cuts;
    d["v_cuts"] = g->v_cuts;
    d["cells"] = cells;
    return d;
  });

  // Exact values as decimal strings, converted to Python ints.
  auto big = [](const BoundValue& v) { return py::int_(py::str(to_string(v))); };
  m.def("bound_g", [big](long m_, long s) { return big(bound_g(m_, s)); });
  m.def("bound_f", [big](long n) { return big(bound_f(n)); });
  m.def("bound_h", [big](long m_, long p, long s) { return big(bound_h(m_, p, s)); });
  m.def("bound_rect", [big](long L, long m_) { return big(bound_rect(L, m_)); });

  m.def("criterion_scan", [](const std::string& basis, int n_max) {
    py::list out;
    for (const auto& r : criterion_scan(ClassSpec::parse(basis), n_max)) {
      out.append(py::make_tuple(r.n, r.sum21.max, r.skew12.max));
    }
    return out;
  });

  m.def("plot_svg", [](const std::vector<int>& v, const std::vector<int>& hollow, int size) {
    PlotSpec s;
    s.perm = perm(v);
    s.hollow = hollow;
    s.size = size;
    return plot_svg(s);
  }, py::arg("perm"), py::arg("hollow") = std::vector<int>{}, py::arg("size") = 400);
}
