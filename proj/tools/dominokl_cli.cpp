// Command-line front end: exact domino-tableau combinatorics, the
// unequal-parameter KL engine for type B, and the verification driver.
//
// Exit codes: 0 all requested checks pass, 1 a verification mismatch,
// 2 usage or resource errors.
#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dominokl/cells.hpp"
#include "dominokl/json_io.hpp"

using namespace dkl;

namespace {

struct Options {
  std::string format = "text";  // text | json | csv
  std::string cacheDir = "./cache";
  int maxNkl = 4;
  int maxNasym = 3;
  std::string out;
  bool timings = false;
};

std::ostream& output(const Options& opt, std::ofstream& file) {
  if (opt.out.empty()) return std::cout;
  file.open(opt.out, std::ios::trunc);
  if (!file) throw CLI::ValidationError("--out", "cannot open " + opt.out);
  return file;
}

Partition parseParts(const std::string& text) {
  std::vector<int> parts;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ','))
    if (!tok.empty()) parts.push_back(std::stoi(tok));
  return Partition(std::move(parts));
}

DominoTableau readTableau(const std::string& path) {
  Json j;
  if (path == "-") {
    std::cin >> j;
  } else {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--in", "cannot open " + path);
    in >> j;
  }
  return tableauFromJson(j);
}

void printTableau(std::ostream& os, const DominoTableau& t, const std::string& format) {
  if (format == "json") os << toJson(t).dump(2) << "\n";
  else os << t.toGrid();
}

int gMaxNkl = 4;

constexpr int kHardCeiling = 5;

void checkBounds(int n, int maxNkl) {
  if (maxNkl > kHardCeiling) throw ResourceError("--max-n-kl exceeds the hard ceiling 5");
  if (n > maxNkl)
    throw ResourceError("n=" + std::to_string(n) + " exceeds --max-n-kl=" +
                        std::to_string(maxNkl) + " (hard ceiling 5)");
}

std::vector<std::pair<long long, long long>> defaultWeights(int n) {
  // minimal (a,b) for s in {1/2, 1, 3/2, 2, 5/2, 3, n-1/2, n, n+1}
  std::vector<std::pair<long long, long long>> out;
  auto add = [&](long long a, long long b) {
    for (auto& [pa, pb] : out)
      if (pa * b == pb * a) return;
    out.push_back({a, b});
  };
  add(2, 1);
  add(1, 1);
  add(2, 3);
  add(1, 2);
  add(2, 5);
  add(1, 3);
  add(2, 2LL * n - 1);
  add(1, n);
  add(1, n + 1LL);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact rank-r domino tableau combinatorics and Kazhdan-Lusztig cells of type B"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "output format: text, json, csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--cache-dir", opt.cacheDir, "KL table cache directory (default ./cache)");
  app.add_option("--max-n-kl", opt.maxNkl, "largest n the KL engine accepts (default 4, max 5)");
  app.add_option("--max-n-asym", opt.maxNasym,
                 "largest n for the full structure-constant table (default 3, max 4)");
  app.add_option("--out", opt.out, "write output to this file instead of stdout");
  app.add_flag("--timings", opt.timings, "include wall-clock timings in reports");

  // ---- rank ----------------------------------------------------------
  auto* rankCmd = app.add_subcommand("rank", "rank and 2-core of a partition");
  std::vector<int> rankParts;
  rankCmd->add_option("parts", rankParts, "partition parts, e.g. 4 3 3 1");

  // ---- rs ------------------------------------------------------------
  auto* rsCmd = app.add_subcommand("rs", "generalized Robinson-Schensted insertion");
  std::string rsWord;
  int rsRank = 0;
  bool rsTrace = false, rsInvert = false;
  rsCmd->add_option("--word", rsWord, "signed window, e.g. \"-3 1 -2\" (may be empty)");
  rsCmd->add_option("--rank", rsRank, "tableau rank r")->check(CLI::NonNegativeNumber);
  rsCmd->add_flag("--trace", rsTrace, "dump per-step insertion snapshots as JSON");
  rsCmd->add_flag("--invert", rsInvert, "read a tableau pair as JSON on stdin and print the word");

  // ---- tableaux ------------------------------------------------------
  auto* tabCmd = app.add_subcommand("tableaux", "standard domino tableaux of a shape");
  std::string tabShape;
  bool tabCount = false;
  tabCmd->add_option("--shape", tabShape, "partition, e.g. 4,3,3,1")->required();
  tabCmd->add_flag("--count", tabCount, "print only the number of tableaux");

  // ---- cycles --------------------------------------------------------
  auto* cycCmd = app.add_subcommand("cycles", "cycle structure of a tableau");
  std::string cycIn, cycWord;
  int cycRank = 0;
  cycCmd->add_option("--in", cycIn, "tableau JSON file, or - for stdin");
  cycCmd->add_option("--word", cycWord, "use the right tableau of this signed window");
  cycCmd->add_option("--rank", cycRank, "rank for --word")->check(CLI::NonNegativeNumber);

  // ---- mt ------------------------------------------------------------
  auto* mtCmd = app.add_subcommand("mt", "move a tableau through cycles");
  std::string mtIn, mtWord;
  int mtRank = 0;
  std::vector<int> mtLabels;
  bool mtAllOpen = false;
  mtCmd->add_option("--in", mtIn, "tableau JSON file, or - for stdin");
  mtCmd->add_option("--word", mtWord, "use the right tableau of this signed window");
  mtCmd->add_option("--rank", mtRank, "rank for --word")->check(CLI::NonNegativeNumber);
  mtCmd->add_option("--cycle", mtLabels, "move the cycle containing this label (repeatable)");
  mtCmd->add_flag("--all-open", mtAllOpen, "move through every non-core open cycle");

  // ---- symbols -------------------------------------------------------
  auto* symCmd = app.add_subcommand("symbols", "symbol and bipartition of a partition");
  std::string symPartition;
  long long symA = 1, symB = 1;
  symCmd->add_option("--partition", symPartition, "partition, e.g. 4,3,2,2")->required();
  symCmd->add_option("--a", symA, "weight of the type-A generators")->required();
  symCmd->add_option("--b", symB, "weight of the sign generator")->required();

  // ---- cells-comb ----------------------------------------------------
  auto* ccCmd = app.add_subcommand("cells-comb", "combinatorial left cells of W_n");
  int ccN = 1, ccRank = 0;
  std::string ccKind = "irreducible";
  ccCmd->add_option("--n", ccN, "group size n")->required();
  ccCmd->add_option("--rank", ccRank, "tableau rank r")->check(CLI::NonNegativeNumber);
  ccCmd->add_option("--kind", ccKind, "irreducible or reducible")
      ->check(CLI::IsMember({"irreducible", "reducible"}));

  // ---- cells-kl ------------------------------------------------------
  auto* ckCmd = app.add_subcommand("cells-kl", "Kazhdan-Lusztig cells of W_n");
  int ckN = 1;
  long long ckA = 1, ckB = 1;
  std::string ckSide = "left";
  ckCmd->add_option("--n", ckN, "group size n")->required();
  ckCmd->add_option("--a", ckA, "weight of the type-A generators")->required();
  ckCmd->add_option("--b", ckB, "weight of the sign generator")->required();
  ckCmd->add_option("--side", ckSide, "left, right or two-sided")
      ->check(CLI::IsMember({"left", "right", "two-sided"}));
  ckCmd->alias("cells");

  // ---- verify --------------------------------------------------------
  auto* verCmd = app.add_subcommand("verify", "run verification checks at one (n, a, b)");
  std::string verWhat = "all";
  int verN = 1;
  long long verA = 1, verB = 1;
  verCmd->add_option("what", verWhat, "conjecture, modules, hom, properties or all")
      ->check(CLI::IsMember({"conjecture", "modules", "hom", "properties", "all"}));
  verCmd->add_option("--n", verN, "group size n")->required();
  verCmd->add_option("--a", verA, "weight of the type-A generators")->required();
  verCmd->add_option("--b", verB, "weight of the sign generator")->required();

  // ---- report --------------------------------------------------------
  auto* repCmd = app.add_subcommand("report", "verification sweep over the default weights");
  int repN = 2;
  std::string repCsv;
  repCmd->add_option("--n", repN, "group size n")->required();
  repCmd->add_option("--csv", repCsv, "also write the CSV summary to this file");

  // ---- chartable -----------------------------------------------------
  auto* chCmd = app.add_subcommand("chartable", "irreducible character table of W_n as CSV");
  int chN = 1;
  chCmd->add_option("--n", chN, "group size n")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  gMaxNkl = opt.maxNkl;
  std::ofstream outFile;
  try {
    std::ostream& os = output(opt, outFile);

    if (*rankCmd) {
      auto rc = rankAndCore(Partition(rankParts));
      if (opt.format == "json") {
        Json j;
        j["rank"] = rc.rank;
        j["core"] = toJson(rc.core);
        j["dominoes"] = rc.dominoes;
        os << j.dump(2) << "\n";
      } else {
        os << "rank " << rc.rank << ", core " << rc.core.toString() << ", dominoes "
           << rc.dominoes << "\n";
      }
    } else if (*rsCmd) {
      if (rsInvert) {
        Json j;
        std::cin >> j;
        TableauPair pair{tableauFromJson(j.at("left")), tableauFromJson(j.at("right"))};
        os << gRInverse(pair).toString() << "\n";
      } else {
        SignedPermutation w = SignedPermutation::parse(rsWord);
        if (rsTrace) {
          Json steps = Json::array();
          for (const auto& step : gRTrace(w, rsRank)) steps.push_back(toJson(step));
          os << steps.dump(2) << "\n";
        } else {
          auto pair = gR(w, rsRank);
          if (opt.format == "json") {
            os << toJson(pair).dump(2) << "\n";
          } else {
            os << "left:\n" << pair.left.toGrid() << "right:\n" << pair.right.toGrid();
          }
        }
      }
    } else if (*tabCmd) {
      auto ts = enumerateTableaux(parseParts(tabShape));
      if (tabCount) {
        os << ts.size() << "\n";
      } else if (opt.format == "json") {
        Json j = Json::array();
        for (const auto& t : ts) j.push_back(toJson(t));
        os << j.dump(2) << "\n";
      } else {
        os << ts.size() << " tableaux\n";
        for (const auto& t : ts) os << t.toGrid() << "\n";
      }
    } else if (*cycCmd) {
      DominoTableau t = cycIn.empty() ? gR(SignedPermutation::parse(cycWord), cycRank).right
                                      : readTableau(cycIn);
      auto cs = cycles(t);
      if (opt.format == "json") {
        Json j = Json::array();
        for (const auto& c : cs) j.push_back(toJson(c));
        os << j.dump(2) << "\n";
      } else {
        for (const auto& c : cs) {
          os << (c.open ? (c.coreOpen ? "core-open" : "open") : "closed") << " {";
          for (size_t i = 0; i < c.labels.size(); ++i) os << (i ? "," : "") << c.labels[i];
          os << "}";
          if (c.open) os << " s_b=" << c.sb->toString() << " s_f=" << c.sf->toString();
          os << "\n";
        }
      }
    } else if (*mtCmd) {
      DominoTableau t = mtIn.empty() ? gR(SignedPermutation::parse(mtWord), mtRank).right
                                     : readTableau(mtIn);
      auto cs = cycles(t);
      std::vector<Cycle> selected;
      if (mtAllOpen) {
        selected = openNonCoreCycles(t);
      } else {
        std::set<const Cycle*> chosen;
        for (int label : mtLabels) chosen.insert(&cycleOf(cs, label));
        for (const Cycle* c : chosen) selected.push_back(*c);
      }
      DominoTableau moved =
          selected.size() == 1 ? moveThrough(t, selected[0]) : moveThroughSet(t, selected);
      printTableau(os, moved, opt.format);
    } else if (*symCmd) {
      auto wp = weightParams(symA, symB);
      Partition p = parseParts(symPartition);
      Symbol s = partitionToSymbol(p, wp);
      Bipartition bp = symbolToBipartition(s);
      if (opt.format == "json") {
        Json j;
        j["partition"] = toJson(p);
        j["symbol"] = toJson(s);
        j["bipartition"] = toJson(bp);
        j["sign"] = Json();
        j["sign"]["partition"] = toJson(p.transpose());
        j["sign"]["symbol"] = toJson(signOnSymbol(s));
        j["sign"]["bipartition"] = toJson(signOnBipartition(bp));
        os << j.dump(2) << "\n";
      } else {
        os << "partition  " << p.toString() << "  (rank " << rankAndCore(p).rank << ", s=" << wp.sString()
           << ", eps=" << wp.epsString() << ")\n";
        os << "symbol     " << s.toString() << "\n";
        os << "bipartition " << bp.toString() << "\n";
        os << "tensor sgn  " << p.transpose().toString() << "  " << signOnSymbol(s).toString()
           << "  " << signOnBipartition(bp).toString() << "\n";
      }
    } else if (*ccCmd) {
      const WGroup& W = wgroup(ccN);
      auto cells = combinatorialCells(W, ccRank, ccKind == "irreducible");
      if (opt.format == "json") {
        os << cellsToJson(W, cells).dump(2) << "\n";
      } else {
        os << cells.size() << " " << ccKind << " combinatorial left cells of rank " << ccRank
           << "\n";
        for (const auto& c : cells) {
          os << "{";
          for (size_t i = 0; i < c.members.size(); ++i)
            os << (i ? "; " : "") << W.element(c.members[i]).toString();
          os << "} shapes";
          for (const auto& t : c.tableaux) os << " " << t.shape().toString();
          os << "\n";
        }
      }
    } else if (*ckCmd) {
      checkBounds(ckN, opt.maxNkl);
      const WGroup& W = wgroup(ckN);
      std::filesystem::create_directories(opt.cacheDir);
      KLTable kl(W, {ckA, ckB}, opt.maxNkl, opt.cacheDir);
      CellPartition::Side side = ckSide == "left" ? CellPartition::Side::Left
                                 : ckSide == "right" ? CellPartition::Side::Right
                                                     : CellPartition::Side::TwoSided;
      auto cells = klCells(kl, side);
      if (opt.format == "json") {
        os << cellsToJson(W, cells).dump(2) << "\n";
      } else {
        os << cells.blockCount() << " " << ckSide << " cells of W_" << ckN << " at (a=" << ckA
           << ", b=" << ckB << ")\n";
        for (const auto& blk : cells.blocks) {
          os << "{";
          for (size_t i = 0; i < blk.size(); ++i)
            os << (i ? "; " : "") << W.element(blk[i]).toString();
          os << "}\n";
        }
      }
    } else if (*verCmd) {
      checkBounds(verN, opt.maxNkl);
      std::filesystem::create_directories(opt.cacheDir);
      if (opt.maxNasym > 4) throw ResourceError("--max-n-asym exceeds the hard ceiling 4");
      auto t0 = std::chrono::steady_clock::now();
      Verifier v(verN, {verA, verB}, opt.cacheDir, opt.maxNkl);
      VerificationReport rep;
      rep.n = verN;
      rep.a = verA;
      rep.b = verB;
      rep.wp = v.params();
      if (verWhat == "conjecture" || verWhat == "all") rep.conjecture = v.verifyConjecture();
      if (verWhat == "modules" || verWhat == "all") rep.modules = v.verifyModuleStructure();
      if (verWhat == "hom" || verWhat == "all") rep.hom = v.verifyHomDims();
      if (verWhat == "properties" || (verWhat == "all" && verN <= opt.maxNasym))
        rep.properties = v.verifyProperties(opt.maxNasym);
      if (opt.timings)
        rep.totalMs = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
      if (opt.format == "csv") {
        os << reportCsvHeader() << "\n" << reportCsvRow(rep) << "\n";
      } else if (opt.format == "json") {
        os << toJson(rep).dump(2) << "\n";
      } else {
        os << reportCsvHeader() << "\n" << reportCsvRow(rep) << "\n";
        if (rep.conjecture && !rep.conjecture->match)
          os << "first difference:\n" << rep.conjecture->firstDiff << "\n";
        if (rep.modules)
          for (const auto& m : rep.modules->mismatches) os << m << "\n";
        if (rep.hom && !rep.hom->match) os << rep.hom->firstDiff << "\n";
        if (rep.properties)
          for (const auto& c : rep.properties->checks)
            if (!c.pass) os << c.name << ": " << c.witness << "\n";
      }
      return rep.pass() ? 0 : 1;
    } else if (*repCmd) {
      checkBounds(repN, opt.maxNkl);
      std::filesystem::create_directories(opt.cacheDir);
      Json all = Json::array();
      std::ostringstream csv;
      csv << reportCsvHeader() << "\n";
      bool pass = true;
      for (auto [a, b] : defaultWeights(repN)) {
        auto t0 = std::chrono::steady_clock::now();
        Verifier v(repN, {a, b}, opt.cacheDir, opt.maxNkl);
        auto rep = v.runAll(true, opt.maxNasym);
        if (opt.timings)
          rep.totalMs = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
        pass = pass && rep.pass();
        all.push_back(toJson(rep));
        csv << reportCsvRow(rep) << "\n";
      }
      if (!repCsv.empty()) {
        std::ofstream f(repCsv, std::ios::trunc);
        f << csv.str();
      }
      if (opt.format == "csv") os << csv.str();
      else os << all.dump(2) << "\n";
      return pass ? 0 : 1;
    } else if (*chCmd) {
      CharacterTable ct(chN);
      os << ct.toCsv();
    }
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
