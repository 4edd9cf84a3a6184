// Python bindings: the main operations, with JSON-shaped dict/list values
// matching the CLI's serialization.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dominokl/cells.hpp"
#include "dominokl/json_io.hpp"

namespace py = pybind11;
using namespace dkl;

namespace {

py::object fromJson(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null: return py::none();
    case Json::value_t::boolean: return py::bool_(j.get<bool>());
    case Json::value_t::number_integer: return py::int_(j.get<long long>());
    case Json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case Json::value_t::number_float: return py::float_(j.get<double>());
    case Json::value_t::string: return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const auto& v : j) out.append(fromJson(v));
      return out;
    }
    case Json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it)
        out[py::str(it.key())] = fromJson(it.value());
      return out;
    }
    default: throw std::runtime_error("unsupported json value");
  }
}

Json tableauJsonFromPy(const py::dict& d) {
  Json j;
  j["rank"] = d["rank"].cast<int>();
  Json ds = Json::array();
  for (auto item : d["dominoes"].cast<py::list>()) {
    auto dd = item.cast<py::dict>();
    Json e;
    e["label"] = dd["label"].cast<int>();
    auto sq = dd["squares"].cast<std::vector<std::vector<int>>>();
    e["squares"] = sq;
    ds.push_back(e);
  }
  j["dominoes"] = ds;
  return j;
}

DominoTableau tableauFromPy(const py::dict& d) { return tableauFromJson(tableauJsonFromPy(d)); }

SignedPermutation permFromPy(const py::object& w) {
  if (py::isinstance<py::str>(w)) return SignedPermutation::parse(w.cast<std::string>());
  return SignedPermutation(w.cast<std::vector<int>>());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact rank-r domino tableau combinatorics and Kazhdan-Lusztig cells of type B";

  m.def("rank_and_core", [](const std::vector<int>& parts) {
    auto rc = rankAndCore(Partition(parts));
    py::dict out;
    out["rank"] = rc.rank;
    out["core"] = rc.core.parts();
    out["dominoes"] = rc.dominoes;
    return out;
  }, py::arg("parts"), "rank and 2-core of a partition");

  m.def("transpose", [](const std::vector<int>& parts) {
    return Partition(parts).transpose().parts();
  }, py::arg("parts"));

  m.def("rank_partitions", [](int n, int r) {
    std::vector<std::vector<int>> out;
    for (const auto& p : rankPartitions(n, r)) out.push_back(p.parts());
    return out;
  }, py::arg("n"), py::arg("rank"), "all partitions of rank r with n dominoes");

  m.def("bipartitions", [](int n) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    for (const auto& bp : enumerateBipartitions(n)) out.push_back({bp.d.parts(), bp.f.parts()});
    return out;
  }, py::arg("n"));

  m.def("tableaux", [](const std::vector<int>& shape) {
    Json j = Json::array();
    for (const auto& t : enumerateTableaux(Partition(shape))) j.push_back(toJson(t));
    return fromJson(j);
  }, py::arg("shape"), "standard domino tableaux of the shape, as dicts");

  m.def("tableau_cycles", [](const py::dict& tab) {
    Json j = Json::array();
    for (const auto& c : cycles(tableauFromPy(tab))) j.push_back(toJson(c));
    return fromJson(j);
  }, py::arg("tableau"));

  m.def("move_through", [](const py::dict& tab, const std::vector<int>& labels) {
    DominoTableau t = tableauFromPy(tab);
    auto cs = cycles(t);
    std::set<const Cycle*> chosen;
    for (int label : labels) chosen.insert(&cycleOf(cs, label));
    std::vector<Cycle> sel;
    for (const Cycle* c : chosen) sel.push_back(*c);
    DominoTableau moved = sel.size() == 1 ? moveThrough(t, sel[0]) : moveThroughSet(t, sel);
    return fromJson(toJson(moved));
  }, py::arg("tableau"), py::arg("labels"),
     "move through the cycles containing the given labels");

  m.def("g_r", [](const py::object& w, int rank) {
    return fromJson(toJson(gR(permFromPy(w), rank)));
  }, py::arg("word"), py::arg("rank"), "generalized Robinson-Schensted tableau pair");

  m.def("g_r_inverse", [](const py::dict& pair) {
    TableauPair tp{tableauFromPy(pair["left"].cast<py::dict>()),
                   tableauFromPy(pair["right"].cast<py::dict>())};
    return gRInverse(tp).window();
  }, py::arg("pair"));

  m.def("symbols", [](const std::vector<int>& parts, long long a, long long b) {
    auto wp = weightParams(a, b);
    Partition p(parts);
    Symbol s = partitionToSymbol(p, wp);
    Bipartition bp = symbolToBipartition(s);
    Json j;
    j["partition"] = toJson(p);
    j["symbol"] = toJson(s);
    j["bipartition"] = toJson(bp);
    j["sign_partition"] = toJson(p.transpose());
    j["sign_bipartition"] = toJson(signOnBipartition(bp));
    return fromJson(j);
  }, py::arg("parts"), py::arg("a"), py::arg("b"));

  m.def("bipartition_to_partition",
        [](const std::vector<int>& d, const std::vector<int>& f, int r) {
          return bipartitionToPartition(Bipartition{Partition(d), Partition(f)}, r).parts();
        }, py::arg("d"), py::arg("f"), py::arg("rank"));

  m.def("truncated_induction",
        [](const std::vector<int>& parts, int l, long long a, long long b) {
          std::vector<std::vector<int>> out;
          for (const auto& q : truncatedInductionShapes(Partition(parts), l, weightParams(a, b)))
            out.push_back(q.parts());
          return out;
        }, py::arg("parts"), py::arg("l"), py::arg("a"), py::arg("b"));

  m.def("kl_cells", [](int n, long long a, long long b, const std::string& side,
                       const std::string& cacheDir, int maxN) {
    const WGroup& W = wgroup(n);
    KLTable kl(W, {a, b}, maxN, cacheDir);
    CellPartition::Side s = side == "left" ? CellPartition::Side::Left
                            : side == "right" ? CellPartition::Side::Right
                                              : CellPartition::Side::TwoSided;
    std::vector<std::vector<std::string>> out;
    for (const auto& blk : klCells(kl, s).blocks) {
      std::vector<std::string> cell;
      for (int x : blk) cell.push_back(W.element(x).toString());
      out.push_back(std::move(cell));
    }
    return out;
  }, py::arg("n"), py::arg("a"), py::arg("b"), py::arg("side") = "left",
     py::arg("cache_dir") = "", py::arg("max_n") = 5);

  m.def("combinatorial_cells", [](int n, int rank, const std::string& kind) {
    const WGroup& W = wgroup(n);
    return fromJson(cellsToJson(W, combinatorialCells(W, rank, kind == "irreducible")));
  }, py::arg("n"), py::arg("rank"), py::arg("kind") = "irreducible");

  m.def("character_table_csv", [](int n) { return CharacterTable(n).toCsv(); }, py::arg("n"));

  m.def("verify", [](int n, long long a, long long b, const std::string& what,
                     const std::string& cacheDir) {
    Verifier v(n, {a, b}, cacheDir);
    VerificationReport rep;
    rep.n = n;
    rep.a = a;
    rep.b = b;
    rep.wp = v.params();
    if (what == "conjecture" || what == "all") rep.conjecture = v.verifyConjecture();
    if (what == "modules" || what == "all") rep.modules = v.verifyModuleStructure();
    if (what == "hom" || what == "all") rep.hom = v.verifyHomDims();
    if (what == "properties" || (what == "all" && n <= 3)) rep.properties = v.verifyProperties();
    return fromJson(toJson(rep));
  }, py::arg("n"), py::arg("a"), py::arg("b"), py::arg("what") = "all",
     py::arg("cache_dir") = "");

  m.def("longest_element", [](int n) { return SignedPermutation::longestElement(n).window(); },
        py::arg("n"));

  m.def("length_stats", [](const py::object& w) {
    auto st = lengthStats(permFromPy(w));
    py::dict out;
    out["ell"] = st.ell;
    out["ell_t"] = st.ell_t;
    out["ell_s"] = st.ell_s;
    return out;
  }, py::arg("word"));
}
