#include "dominokl/json_io.hpp"

#include <sstream>

namespace dkl {

Json toJson(const Partition& p) { return Json(p.parts()); }

Json toJson(const Bipartition& bp) {
  Json j;
  j["d"] = toJson(bp.d);
  j["f"] = toJson(bp.f);
  return j;
}

Json toJson(const DominoTableau& t) {
  Json j;
  j["rank"] = t.rank();
  j["shape"] = toJson(t.shape());
  Json ds = Json::array();
  for (const auto& d : t.dominoes()) {
    Json dj;
    dj["label"] = d.label;
    dj["squares"] = Json::array({Json::array({d.first.row, d.first.col}),
                                 Json::array({d.second.row, d.second.col})});
    ds.push_back(std::move(dj));
  }
  j["dominoes"] = std::move(ds);
  return j;
}

Json toJson(const Cycle& c) {
  Json j;
  j["labels"] = c.labels;
  j["kind"] = c.open ? "open" : "closed";
  j["core_open"] = c.coreOpen;
  if (c.open) {
    j["s_b"] = Json::array({c.sb->row, c.sb->col});
    j["s_f"] = Json::array({c.sf->row, c.sf->col});
  }
  return j;
}

Json toJson(const Symbol& s) {
  Json j;
  j["epsilon"] = s.epsNum == 0 ? "0" : std::to_string(s.epsNum) + "/" + std::to_string(s.epsDen);
  j["top"] = s.top;
  j["bottom"] = s.bottom;
  return j;
}

Json toJson(const Laurent& p) {
  Json j = Json::array();
  for (const auto& [e, c] : p.terms()) j.push_back(Json::array({e, c}));
  return j;
}

Json toJson(const TableauPair& pair) {
  Json j;
  j["left"] = toJson(pair.left);
  j["right"] = toJson(pair.right);
  return j;
}

Json cellsToJson(const WGroup& W, const CellPartition& cells) {
  Json j;
  switch (cells.side) {
    case CellPartition::Side::Left: j["side"] = "left"; break;
    case CellPartition::Side::Right: j["side"] = "right"; break;
    case CellPartition::Side::TwoSided: j["side"] = "two-sided"; break;
  }
  Json blocks = Json::array();
  for (const auto& b : cells.blocks) {
    Json block = Json::array();
    for (int x : b) block.push_back(W.element(x).toString());
    blocks.push_back(std::move(block));
  }
  j["cells"] = std::move(blocks);
  return j;
}

Json cellsToJson(const WGroup& W, const std::vector<CombinatorialCell>& cells) {
  Json j = Json::array();
  for (const auto& c : cells) {
    Json cj;
    cj["kind"] = c.irreducible ? "irreducible" : "reducible";
    cj["rank"] = c.rank;
    Json members = Json::array();
    for (int x : c.members) members.push_back(W.element(x).toString());
    cj["members"] = std::move(members);
    Json tabs = Json::array();
    for (const auto& t : c.tableaux) tabs.push_back(toJson(t));
    cj["tableaux"] = std::move(tabs);
    j.push_back(std::move(cj));
  }
  return j;
}

Json toJson(const PropertyReport& rep) {
  Json j;
  j["all_pass"] = rep.allPass();
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    if (!c.pass) cj["witness"] = c.witness;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  return j;
}

Json toJson(const VerificationReport& rep) {
  Json j;
  Json params;
  params["n"] = rep.n;
  params["a"] = rep.a;
  params["b"] = rep.b;
  params["s"] = rep.wp.sString();
  params["r"] = rep.wp.r;
  params["epsilon"] = rep.wp.epsString();
  j["params"] = std::move(params);
  if (rep.conjecture) {
    Json c;
    c["match"] = rep.conjecture->match;
    c["kl_cells"] = rep.conjecture->klCells;
    c["comb_cells"] = rep.conjecture->combCells;
    if (!rep.conjecture->match) c["first_diff"] = rep.conjecture->firstDiff;
    if (rep.conjecture->disjointShapes) {
      Json d;
      d["pass"] = rep.conjecture->disjointShapes->pass;
      if (!rep.conjecture->disjointShapes->pass)
        d["detail"] = rep.conjecture->disjointShapes->detail;
      c["disjoint_shapes"] = std::move(d);
    }
    j["conjecture"] = std::move(c);
  } else {
    j["conjecture"] = nullptr;
  }
  if (rep.modules) {
    Json m;
    m["all_match"] = rep.modules->allMatch;
    m["cells_checked"] = rep.modules->cellsChecked;
    m["mismatches"] = rep.modules->mismatches;
    j["modules"] = std::move(m);
  } else {
    j["modules"] = nullptr;
  }
  if (rep.hom) {
    Json h;
    h["match"] = rep.hom->match;
    h["total"] = rep.hom->total;
    if (!rep.hom->match) h["first_diff"] = rep.hom->firstDiff;
    j["hom"] = std::move(h);
  } else {
    j["hom"] = nullptr;
  }
  j["properties"] = rep.properties ? toJson(*rep.properties) : Json(nullptr);
  if (rep.totalMs) {
    Json t;
    t["total_ms"] = *rep.totalMs;
    j["timings"] = std::move(t);
  } else {
    j["timings"] = nullptr;  // deterministic output by default
  }
  return j;
}

std::string reportCsvHeader() {
  return "n,a,b,s,r,epsilon,conjecture,disjoint_shapes,modules,hom,properties,pass";
}

namespace {
std::string flag(bool present, bool value) { return present ? (value ? "pass" : "FAIL") : ""; }
}  // namespace

std::string reportCsvRow(const VerificationReport& rep) {
  std::ostringstream out;
  out << rep.n << ',' << rep.a << ',' << rep.b << ',' << rep.wp.sString() << ',' << rep.wp.r
      << ',' << rep.wp.epsString() << ',';
  out << flag(rep.conjecture.has_value(), rep.conjecture && rep.conjecture->match) << ',';
  bool hasDisjoint = rep.conjecture && rep.conjecture->disjointShapes.has_value();
  out << flag(hasDisjoint, hasDisjoint && rep.conjecture->disjointShapes->pass) << ',';
  out << flag(rep.modules.has_value(), rep.modules && rep.modules->allMatch) << ',';
  out << flag(rep.hom.has_value(), rep.hom && rep.hom->match) << ',';
  out << flag(rep.properties.has_value(), rep.properties && rep.properties->allPass()) << ',';
  out << (rep.pass() ? "pass" : "FAIL");
  return out.str();
}

Partition partitionFromJson(const Json& j) {
  std::vector<int> parts = j.get<std::vector<int>>();
  return Partition(std::move(parts));
}

DominoTableau tableauFromJson(const Json& j) {
  int rank = j.at("rank").get<int>();
  std::vector<Domino> ds;
  for (const auto& dj : j.at("dominoes")) {
    Domino d;
    d.label = dj.at("label").get<int>();
    d.first = {dj.at("squares")[0][0].get<int>(), dj.at("squares")[0][1].get<int>()};
    d.second = {dj.at("squares")[1][0].get<int>(), dj.at("squares")[1][1].get<int>()};
    ds.push_back(d);
  }
  return DominoTableau::fromDominoes(rank, ds);
}

}  // namespace dkl
