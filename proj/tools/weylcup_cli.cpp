// Command-line frontend: exact criteria for cup products of line-bundle
// cohomology on full flag varieties, tensor-product component classification,
// Schubert intersection numbers, partition functions, and the classical
// parabolic order-extension check.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "weylcup/bwb.hpp"
#include "weylcup/charmod.hpp"
#include "weylcup/cupcrit.hpp"
#include "weylcup/lrprv.hpp"
#include "weylcup/parshape.hpp"
#include "weylcup/schubert.hpp"
#include "weylcup/vecpart.hpp"

using json = nlohmann::ordered_json;
using namespace weylcup;

namespace {

constexpr int kSchemaVersion = 1;

struct Options {
  bool rootCoords = false;
  size_t weylCap = 50000;
  std::string dimCap = "1000000000000";
  int mMax = 4;
  int jobs = 1;
  unsigned seed = 0;
  std::string format = "json";
};

Weight readWeight(const RootSystem& rs, const std::string& text, const Options& opt) {
  if (!opt.rootCoords) {
    Weight w = parseWeight(text);
    if (w.rank() != rs.rank()) throw ParseError("weight rank mismatch: " + text);
    return w;
  }
  // Root-coordinate input: a bracketed list of rationals.
  std::string body = text;
  if (body.size() < 2 || body.front() != '[' || body.back() != ']')
    throw ParseError("weight must look like [a,b,...]: " + text);
  body = body.substr(1, body.size() - 2);
  std::vector<mpq_class> rc;
  std::istringstream is(body);
  std::string tok;
  while (std::getline(is, tok, ',')) rc.emplace_back(tok);
  if (static_cast<int>(rc.size()) != rs.rank()) throw ParseError("weight rank mismatch: " + text);
  for (auto& q : rc) q.canonicalize();
  std::vector<mpq_class> fc = rs.fromRootCoords(rc);
  std::vector<long long> c;
  for (const auto& q : fc) {
    if (q.get_den() != 1) throw ParseError("root coordinates give a non-integral weight: " + text);
    c.push_back(q.get_num().get_si());
  }
  return Weight(c);
}

json weightOut(const RootSystem& rs, const Weight& w, const Options& opt) {
  json arr = json::array();
  if (!opt.rootCoords) {
    for (int i = 0; i < w.rank(); ++i) arr.push_back(w[i]);
  } else {
    for (const auto& q : rs.toRootCoords(w)) {
      std::ostringstream os;
      os << q;
      arr.push_back(os.str());
    }
  }
  return arr;
}

json bwbOut(const RootSystem& rs, const BwbAnswer& a, const Options& opt) {
  json out;
  out["vanishing"] = a.vanishing;
  if (!a.vanishing) {
    out["degree"] = a.degree;
    out["weight"] = weightOut(rs, a.dualHighestWeight, opt);
    out["word"] = a.w.wordString(rs);
  }
  return out;
}

void emit(const json& payload) { std::cout << payload.dump(2) << "\n"; }

json witnessOut(const WeylGroup& W, const WitnessTuple& t) {
  json out;
  json ws = json::array();
  for (int u : t.ws) ws.push_back(W.element(u).wordString(W.rootSystem()));
  out["ws"] = ws;
  out["w"] = W.element(t.w).wordString(W.rootSystem());
  return out;
}

json componentOut(const WeylGroup& W, const ComponentReport& rep, const Options& opt) {
  const RootSystem& rs = W.rootSystem();
  json out;
  out["mu"] = weightOut(rs, rep.mu, opt);
  out["mult"] = rep.multiplicity.get_str();
  out["genPRV"] = rep.genPRV;
  if (rep.prvWitness) out["prvWitness"] = witnessOut(W, *rep.prvWitness);
  out["cohomological"] = rep.cohomological;
  if (rep.cohWitness) out["cohWitness"] = witnessOut(W, *rep.cohWitness);
  json probe = json::object();
  for (const auto& [m, v] : rep.stableProbe) probe[std::to_string(m)] = v.get_str();
  out["stableProbe"] = probe;
  out["markers"] = markerName(rep.marker);
  return out;
}

std::string csvProbe(const ComponentReport& rep) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, v] : rep.stableProbe) {
    if (!first) os << ';';
    os << v.get_str();
    first = false;
  }
  return os.str();
}

ParabolicDatum readDatum(const std::string& algebra, const std::string& partition,
                         const std::string& i0text, const std::string& signs) {
  ParabolicDatum d;
  size_t pos = 0;
  while (pos < algebra.size() && !std::isdigit(static_cast<unsigned char>(algebra[pos]))) ++pos;
  if (pos == 0 || pos == algebra.size()) throw ParseError("bad algebra label '" + algebra + "'");
  d.algebra = parseClassicalType(algebra.substr(0, pos));
  d.n = std::stoi(algebra.substr(pos));

  auto readPart = [&](const std::string& text) {
    std::vector<int> part;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      int idx = std::stoi(tok);
      if (idx < 1 || idx > d.n) throw BadIndex("partition index out of range");
      part.push_back(idx - 1);
    }
    return part;
  };
  std::istringstream is(partition);
  std::string tok;
  while (std::getline(is, tok, '|'))
    if (!tok.empty()) d.parts.push_back(readPart(tok));
  if (!i0text.empty()) {
    d.typeII = true;
    d.i0 = readPart(i0text);
  }
  d.sigma.assign(static_cast<size_t>(d.n), 1);
  if (!signs.empty()) {
    if (signs.size() != static_cast<size_t>(d.n))
      throw ParseError("signs must have one +- per index");
    for (int a = 0; a < d.n; ++a)
      d.sigma[static_cast<size_t>(a)] = signs[static_cast<size_t>(a)] == '-' ? -1 : 1;
    for (int a : d.i0) d.sigma[static_cast<size_t>(a)] = 1;
  }
  d.validate();
  return d;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cup-product, tensor-component and Schubert combinatorics"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--root-coords", opt.rootCoords,
               "weights are read and written in simple-root coordinates");
  app.add_option("--weyl-cap", opt.weylCap, "Weyl group enumeration cap")
      ->envname("WEYLCUP_WEYL_CAP");
  app.add_option("--dim-cap", opt.dimCap, "dimension budget for probes")
      ->envname("WEYLCUP_DIM_CAP");
  app.add_option("--mmax", opt.mMax, "scaling probe depth")->envname("WEYLCUP_MMAX");
  app.add_option("--jobs", opt.jobs, "worker threads for sweeps")->envname("WEYLCUP_JOBS");
  app.add_option("--seed", opt.seed, "seed for any sampling")->envname("WEYLCUP_SEED");

  // --- bwb ---------------------------------------------------------------
  std::string sysLabel, weightText;
  auto* cbwb = app.add_subcommand("bwb", "classify the cohomology of a line bundle");
  cbwb->add_option("system", sysLabel)->required();
  cbwb->add_option("lambda", weightText)->required();

  // --- decompose ----------------------------------------------------------
  std::string dSys, dMu1, dMu2;
  auto* cdec = app.add_subcommand("decompose", "decompose a tensor product of irreducibles");
  cdec->add_option("system", dSys)->required();
  cdec->add_option("mu1", dMu1)->required();
  cdec->add_option("mu2", dMu2)->required();
  cdec->add_option("--format", opt.format, "json or csv");

  // --- cup-check ----------------------------------------------------------
  std::string cSys;
  std::vector<std::string> cLambdas;
  auto* ccup = app.add_subcommand("cup-check", "surjectivity verdict for a cup product");
  ccup->add_option("system", cSys)->required();
  ccup->add_option("--lambda", cLambdas, "twisting weight (repeatable)")
      ->required()
      ->allow_extra_args(false);

  // --- enum-partitions ------------------------------------------------------
  std::string eSys, eW;
  int eK = 2;
  auto* cenum = app.add_subcommand("enum-partitions", "enumerate inversion-set partition tuples");
  cenum->add_option("system", eSys)->required();
  cenum->add_option("-k,--k", eK, "number of factors");
  cenum->add_option("--w", eW, "target element word (default: longest)");

  // --- schubert -------------------------------------------------------------
  std::string sSys, sX;
  std::vector<std::string> sOmegas;
  auto* csch = app.add_subcommand("schubert", "intersection number of dual classes against a cycle");
  csch->add_option("system", sSys)->required();
  csch->add_option("--omega", sOmegas, "dual class word (repeatable)")->required();
  csch->add_option("--x", sX, "cycle word")->required();

  // --- prv -------------------------------------------------------------------
  std::string pSys, pMu1, pMu2, pMu;
  auto* cprv = app.add_subcommand("prv", "classify one tensor-product component");
  cprv->add_option("system", pSys)->required();
  cprv->add_option("mu1", pMu1)->required();
  cprv->add_option("mu2", pMu2)->required();
  cprv->add_option("--mu", pMu, "component highest weight")->required();

  // --- table -------------------------------------------------------------------
  std::string tSys, tMu1, tMu2;
  auto* ctab = app.add_subcommand("table", "classify every component of a rank-2 product");
  ctab->add_option("system", tSys)->required();
  ctab->add_option("mu1", tMu1)->required();
  ctab->add_option("mu2", tMu2)->required();
  ctab->add_option("--format", opt.format, "json or csv");

  // --- kostant ---------------------------------------------------------------
  std::string kSys, kGamma, kMultiset;
  auto* ckos = app.add_subcommand("kostant", "partition-function value");
  ckos->add_option("system", kSys)->required();
  ckos->add_option("gamma", kGamma)->required();
  ckos->add_option("--multiset", kMultiset, "root multiset {a1:2, a1+a2:1}; default all roots");

  // --- bound -------------------------------------------------------------------
  std::string bSys, bX, bTarget;
  std::vector<std::string> bWs, bMus;
  auto* cbnd = app.add_subcommand("bound", "partition-function bound on a multiplicity");
  cbnd->add_option("system", bSys)->required();
  cbnd->add_option("--w", bWs, "factor element word (repeatable)")->required();
  cbnd->add_option("--x", bX, "target element word")->required();
  cbnd->add_option("--mu", bMus, "factor highest weight (repeatable)")
      ->required()
      ->allow_extra_args(false);
  cbnd->add_option("--target", bTarget, "component highest weight")->required();

  // --- lr-member ---------------------------------------------------------------
  std::string lSys, lTarget;
  std::vector<std::string> lMus;
  auto* clrm = app.add_subcommand("lr-member", "necessary cone inequalities for a component");
  clrm->add_option("system", lSys)->required();
  clrm->add_option("--mu", lMus, "factor highest weight (repeatable)")
      ->required()
      ->allow_extra_args(false);
  clrm->add_option("--target", lTarget)->required();

  // --- face-check ---------------------------------------------------------------
  std::string fSys, fX;
  std::vector<std::string> fWs;
  std::vector<int> fI;
  auto* cfc = app.add_subcommand("face-check", "check regular-face conditions for a tuple");
  cfc->add_option("system", fSys)->required();
  cfc->add_option("--i", fI, "simple-root index in I (repeatable)");
  cfc->add_option("--w", fWs, "factor element word (repeatable)")->required();
  cfc->add_option("--x", fX, "target element word")->required();

  // --- appendix-check ---------------------------------------------------------------
  std::string aAlg, aPartition, aI0, aSigns, aSat;
  auto* capp = app.add_subcommand("appendix-check", "parabolic order-extension check");
  capp->add_option("algebra", aAlg, "gl3, B3, C3, D4, ...")->required();
  capp->add_option("--partition", aPartition, "a-parts, e.g. \"1,2|3\"")->required();
  capp->add_option("--i0", aI0, "distinguished largest part (Type II)");
  capp->add_option("--signs", aSigns, "sign string over 1..n, e.g. \"+-+\"");
  capp->add_option("--sat", aSat, "comma list of a-roots, e.g. \"d1-d2,d2-d3\"");

  CLI11_PARSE(app, argc, argv);

  try {
    json payload;
    payload["schema_version"] = kSchemaVersion;

    if (*cbwb) {
      RootSystem rs = RootSystem::parse(sysLabel);
      payload["bwb"] = bwbOut(rs, bwbClassify(rs, readWeight(rs, weightText, opt)), opt);
      emit(payload);
    } else if (*cdec) {
      RootSystem rs = RootSystem::parse(dSys);
      Decomposition dec =
          tensorDecompose(rs, readWeight(rs, dMu1, opt), readWeight(rs, dMu2, opt));
      if (opt.format == "csv") {
        std::cout << "mu,mult\n";
        for (const auto& [mu, m] : dec) {
          std::string s = mu.str();
          std::cout << '"' << s << "\"," << m.get_str() << "\n";
        }
      } else {
        json list = json::array();
        for (const auto& [mu, m] : dec) {
          json item;
          item["component"] = weightOut(rs, mu, opt);
          item["multiplicity"] = m.get_str();
          list.push_back(item);
        }
        payload["decomposition"] = list;
        emit(payload);
      }
    } else if (*ccup) {
      RootSystem rs = RootSystem::parse(cSys);
      std::vector<Weight> lambdas;
      for (const auto& t : cLambdas) lambdas.push_back(readWeight(rs, t, opt));
      WeylGroup W = WeylGroup::enumerate(rs, opt.weylCap);
      SchubertCalc calc(W);
      CupProblem p = makeCupProblem(rs, lambdas);
      Verdict v = surjectivityVerdict(rs, W, calc, p);
      json out;
      out["verdict"] = verdictName(v.kind);
      out["partition"] = v.partition;
      out["intersection"] = v.intersection.get_str();
      json factors = json::array();
      for (const BwbAnswer& f : p.factors) factors.push_back(bwbOut(rs, f, opt));
      out["factors"] = factors;
      out["target"] = bwbOut(rs, p.target, opt);
      payload["cup"] = out;
      emit(payload);
    } else if (*cenum) {
      RootSystem rs = RootSystem::parse(eSys);
      WeylGroup W = WeylGroup::enumerate(rs, opt.weylCap);
      std::optional<int> target;
      if (!eW.empty())
        target = W.indexOf(WeylElement::fromWord(rs, parseWord(eW, rs.rank())));
      auto tuples = enumeratePartitionTuples(W, eK, target);
      json list = json::array();
      for (const auto& t : tuples) {
        json row = json::array();
        for (int u : t) row.push_back(W.element(u).wordString(rs));
        list.push_back(row);
      }
      payload["count"] = tuples.size();
      payload["tuples"] = list;
      emit(payload);
    } else if (*csch) {
      RootSystem rs = RootSystem::parse(sSys);
      WeylGroup W = WeylGroup::enumerate(rs, opt.weylCap);
      SchubertCalc calc(W);
      std::vector<int> ws;
      for (const auto& t : sOmegas)
        ws.push_back(W.indexOf(WeylElement::fromWord(rs, parseWord(t, rs.rank()))));
      int x = W.indexOf(WeylElement::fromWord(rs, parseWord(sX, rs.rank())));
      std::cout << calc.intersectionNumber(ws, x).get_str() << "\n";
    } else if (*cprv) {
      RootSystem rs = RootSystem::parse(pSys);
      WeylGroup W = WeylGroup::enumerate(rs, opt.weylCap);
      Weight mu1 = readWeight(rs, pMu1, opt), mu2 = readWeight(rs, pMu2, opt),
             mu = readWeight(rs, pMu, opt);
      mpz_class mult = tensorMultiplicity(rs, {mu1, mu2}, mu);
      ComponentReport rep = classifyComponent(W, {mu1, mu2}, mu, mult, opt.mMax);
      payload["report"] = componentOut(W, rep, opt);
      emit(payload);
    } else if (*ctab) {
      RootSystem rs = RootSystem::parse(tSys);
      WeylGroup W = WeylGroup::enumerate(rs, opt.weylCap);
      auto table =
          multiplicityTable(W, readWeight(rs, tMu1, opt), readWeight(rs, tMu2, opt), opt.mMax);
      if (opt.format == "csv") {
        std::cout << "mu1,mu2,mult,genPRV,cohomological,stable_probe\n";
        for (const auto& rep : table)
          std::cout << rep.mu[0] << ',' << rep.mu[1] << ',' << rep.multiplicity.get_str() << ','
                    << (rep.genPRV ? 1 : 0) << ',' << (rep.cohomological ? 1 : 0) << ','
                    << csvProbe(rep) << "\n";
      } else {
        json list = json::array();
        for (const auto& rep : table) list.push_back(componentOut(W, rep, opt));
        payload["table"] = list;
        emit(payload);
      }
    } else if (*ckos) {
      RootSystem rs = RootSystem::parse(kSys);
      Weight gamma = readWeight(rs, kGamma, opt);
      RootMultiset S = kMultiset.empty() ? RootMultiset::allPositive(rs)
                                         : parseRootMultiset(rs, kMultiset);
      payload["value"] = partitionCount(rs, S, gamma).get_str();
      payload["multiset"] = multisetString(rs, S);
      emit(payload);
    } else if (*cbnd) {
      RootSystem rs = RootSystem::parse(bSys);
      WeylGroup W = WeylGroup::enumerate(rs, opt.weylCap);
      SchubertCalc calc(W);
      std::vector<int> ws;
      for (const auto& t : bWs)
        ws.push_back(W.indexOf(WeylElement::fromWord(rs, parseWord(t, rs.rank()))));
      int x = W.indexOf(WeylElement::fromWord(rs, parseWord(bX, rs.rank())));
      std::vector<Weight> mus;
      for (const auto& t : bMus) mus.push_back(readWeight(rs, t, opt));
      Weight mu = readWeight(rs, bTarget, opt);
      payload["bound"] = multiplicityBound(W, calc, ws, x, mus, mu).get_str();
      payload["mult"] = tensorMultiplicity(rs, mus, mu).get_str();
      emit(payload);
    } else if (*clrm) {
      RootSystem rs = RootSystem::parse(lSys);
      WeylGroup W = WeylGroup::enumerate(rs, opt.weylCap);
      SchubertCalc calc(W);
      std::vector<Weight> mus;
      for (const auto& t : lMus) mus.push_back(readWeight(rs, t, opt));
      Weight mu = readWeight(rs, lTarget, opt);
      ConeMembership cm = bsMembership(W, calc, mus, mu);
      payload["member"] = cm.member;
      json fails = json::array();
      for (const auto& f : cm.failures) {
        json item;
        json ws = json::array();
        for (int u : f.ws) ws.push_back(W.element(u).wordString(rs));
        item["ws"] = ws;
        item["w"] = W.element(f.w).wordString(rs);
        json deficit = json::array();
        for (const auto& q : f.deficit) {
          std::ostringstream os;
          os << q;
          deficit.push_back(os.str());
        }
        item["deficit"] = deficit;
        fails.push_back(item);
      }
      payload["failures"] = fails;
      emit(payload);
    } else if (*cfc) {
      RootSystem rs = RootSystem::parse(fSys);
      WeylGroup W = WeylGroup::enumerate(rs, opt.weylCap);
      SchubertCalc calc(W);
      std::vector<int> ws;
      for (const auto& t : fWs)
        ws.push_back(W.indexOf(WeylElement::fromWord(rs, parseWord(t, rs.rank()))));
      int x = W.indexOf(WeylElement::fromWord(rs, parseWord(fX, rs.rank())));
      FaceDatum fd = ressayreFaceCheck(W, calc, fI, ws, x);
      payload["lengthAndIntersection"] = fd.lengthAndIntersection;
      payload["minimalInCosets"] = fd.minimalInCosets;
      payload["rhoSpanCondition"] = fd.rhoSpanCondition;
      payload["valid"] = fd.valid();
      payload["codimension"] = fd.codimension;
      emit(payload);
    } else if (*capp) {
      ParabolicDatum d = readDatum(aAlg, aPartition, aI0, aSigns);
      ARootSet R = aRoots(d);
      std::vector<DeltaVec> S0;
      if (!aSat.empty()) {
        std::istringstream is(aSat);
        std::string tok;
        while (std::getline(is, tok, ',')) S0.push_back(parseDeltaExpr(tok, d.k()));
      }
      AppendixResult res = appendixCheck(d, S0);
      payload["datum"] = d.str();
      json sat = json::array();
      for (const auto& v : res.saturatedS) sat.push_back(deltaString(v));
      payload["saturated"] = sat;
      payload["extendable"] = res.extendable;
      if (res.order) {
        OrderGraph g = orderGraph(d, R, res.saturatedS);
        json ord = json::array();
        for (int node : *res.order) ord.push_back(g.nodeName(node));
        payload["order"] = ord;
        json parts = json::array();
        for (const auto& part : res.parabolic->orderedParts) {
          json p = json::array();
          for (int a : part) p.push_back(a + 1);
          parts.push_back(p);
        }
        payload["parabolic"] = {{"parts", parts}, {"roots", res.parabolic->rootList.size()}};
        payload["containment"] = res.containmentVerified;
      }
      if (res.cycle) {
        OrderGraph g = orderGraph(d, R, res.saturatedS);
        json cyc = json::array();
        for (int node : *res.cycle) cyc.push_back(g.nodeName(node));
        payload["cycle"] = cyc;
        json wit = json::array();
        for (const auto& [nu, mult] : res.witness->multiset)
          wit.push_back(json{{"root", deltaString(nu)}, {"mult", mult}});
        payload["witness"] = wit;
        json sum = json::array();
        for (int x : res.witness->deltaSum) sum.push_back(x);
        payload["witnessSum"] = sum;
      }
      emit(payload);
    }
  } catch (const BudgetError& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
