#include "revcat/laws.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace revcat::cat {

bool LawReport::pass() const {
  for (const auto& r : laws)
    if (!r.pass()) return false;
  return true;
}

void LawReport::merge(const LawReport& other) {
  for (const auto& r : other.laws) laws.push_back(r);
}

nlohmann::ordered_json LawReport::toJson() const {
  nlohmann::ordered_json j;
  j["instance"] = instance;
  j["pass"] = pass();
  j["laws"] = nlohmann::ordered_json::array();
  for (const auto& r : laws) {
    nlohmann::ordered_json jr;
    jr["law"] = r.law;
    jr["cases"] = r.cases;
    if (r.informational) jr["informational"] = true;
    jr["failures"] = nlohmann::ordered_json::array();
    for (const auto& f : r.failures) {
      nlohmann::ordered_json jf;
      jf["inputs"] = f.inputs;
      jf["lhs"] = f.lhs;
      jf["rhs"] = f.rhs;
      jr["failures"].push_back(jf);
    }
    j["laws"].push_back(jr);
  }
  return j;
}

std::string LawReport::toText() const {
  std::ostringstream out;
  out << "instance: " << instance << "\n";
  for (const auto& r : laws) {
    out << "  " << (r.pass() ? "PASS" : "FAIL") << "  " << r.law << "  (" << r.cases << " cases";
    if (!r.failures.empty()) out << ", " << r.failures.size() << " failures";
    if (r.informational) out << ", informational";
    out << ")\n";
    for (size_t i = 0; i < r.failures.size() && i < 3; ++i)
      out << "        " << r.failures[i].inputs << "\n          lhs " << r.failures[i].lhs
          << "\n          rhs " << r.failures[i].rhs << "\n";
  }
  out << (pass() ? "all laws hold" : "LAW VIOLATIONS FOUND") << "\n";
  return out.str();
}

namespace {

struct Check {
  const Category& C;
  LawResult result;

  explicit Check(const Category& C, std::string law) : C(C) { result.law = std::move(law); }

  void eq(const Mor& lhs, const Mor& rhs, const std::vector<const Mor*>& inputs) {
    ++result.cases;
    if (lhs == rhs) return;
    LawFailure f;
    std::ostringstream in;
    for (size_t i = 0; i < inputs.size(); ++i) {
      if (i) in << " ; ";
      in << C.morToString(*inputs[i]);
    }
    f.inputs = in.str();
    f.lhs = C.morToString(lhs);
    f.rhs = C.morToString(rhs);
    result.failures.push_back(std::move(f));
  }

  void holds(bool ok, const std::vector<const Mor*>& inputs, const std::string& what) {
    ++result.cases;
    if (ok) return;
    LawFailure f;
    std::ostringstream in;
    for (size_t i = 0; i < inputs.size(); ++i) {
      if (i) in << " ; ";
      in << C.morToString(*inputs[i]);
    }
    f.inputs = in.str();
    f.lhs = what;
    f.rhs = "expected to hold";
    result.failures.push_back(std::move(f));
  }
};

template <class T>
void capList(std::vector<T>& xs, size_t cap) {
  if (xs.size() > cap) xs.resize(cap);
}

bool defaultExhaustive(const Category& C) {
  const std::string n = C.name();
  return n == "pids" || n == "subpid" || n == "example56" || n == "example513";
}

Samples buildExhaustive(const Category& C, const SampleOptions& options) {
  Samples s;
  s.exhaustive = true;
  std::vector<Obj> objs = C.universeObjects();
  std::map<std::pair<size_t, size_t>, std::vector<Mor>> homs;
  for (size_t a = 0; a < objs.size(); ++a)
    for (size_t b = 0; b < objs.size(); ++b) {
      homs[{a, b}] = C.enumerateHom(objs[a], objs[b]);
      s.homPairs.emplace_back(objs[a], objs[b]);
    }
  for (const auto& [key, hom] : homs)
    for (const auto& f : hom) s.morphisms.push_back(f);

  auto homsFrom = [&](size_t a) {
    std::vector<Mor> out;
    for (size_t b = 0; b < objs.size(); ++b)
      for (const auto& f : homs.at({a, b})) out.push_back(f);
    return out;
  };
  auto homsInto = [&](size_t a) {
    std::vector<Mor> out;
    for (size_t b = 0; b < objs.size(); ++b)
      for (const auto& f : homs.at({b, a})) out.push_back(f);
    return out;
  };

  for (size_t a = 0; a < objs.size(); ++a) {
    std::vector<Mor> from = homsFrom(a);
    for (const auto& f : from)
      for (const auto& g : from) s.sameSource.emplace_back(f, g);
    std::vector<Mor> into = homsInto(a);
    for (const auto& f : into)
      for (const auto& h : from) s.composable.emplace_back(h, f);
  }

  const size_t sideCap = 60;
  for (size_t a = 0; a < objs.size(); ++a) {
    for (size_t b = 0; b < objs.size(); ++b) {
      const auto& hom = homs.at({a, b});
      std::vector<Mor> post = homsFrom(b), pre = homsInto(a);
      capList(post, sideCap);
      capList(pre, sideCap);
      for (const auto& f : hom) {
        for (const auto& g : hom) {
          if (leq(C, f, g)) {
            LeqSample t{f, g, post, pre};
            s.leqTriples.push_back(std::move(t));
          }
        }
      }
      for (size_t i = 0; i < hom.size(); ++i) {
        for (size_t j = i; j < hom.size(); ++j) {
          if (!inverseCompatible(C, hom[i], hom[j])) continue;
          CompatFamilySample fam;
          fam.family = {hom[i], hom[j]};
          for (const auto& t : hom)
            if (leq(C, hom[i], t) && leq(C, hom[j], t)) fam.upperBounds.push_back(t);
          fam.post = post;
          fam.pre = pre;
          s.families.push_back(std::move(fam));
        }
      }
      for (const auto& f : hom) {
        for (const auto& g : hom) {
          if (!disjoint(C, f, g)) continue;
          DisjointSample d{f, g, post, post, pre};
          s.disjointPairs.push_back(std::move(d));
        }
      }
    }
  }
  (void)options;
  return s;
}

Samples buildSeeded(const Category& C, const SampleOptions& options) {
  Samples s;
  util::Rng rng(options.seed);
  const int cases = options.cases;
  auto randomPost = [&](const Obj& from) {
    std::vector<Mor> out;
    for (int k = 0; k < 2; ++k) out.push_back(C.randomMor(rng, from, C.randomObj(rng)));
    return out;
  };
  auto randomPre = [&](const Obj& into) {
    std::vector<Mor> out;
    for (int k = 0; k < 2; ++k) out.push_back(C.randomMor(rng, C.randomObj(rng), into));
    return out;
  };
  for (int i = 0; i < cases; ++i) {
    Obj a = C.randomObj(rng), b = C.randomObj(rng), c = C.randomObj(rng), d = C.randomObj(rng);
    s.morphisms.push_back(C.randomMor(rng, a, b));
    s.sameSource.emplace_back(C.randomMor(rng, a, b), C.randomMor(rng, a, c));
    s.composable.emplace_back(C.randomMor(rng, b, c), C.randomMor(rng, a, b));
    s.homPairs.emplace_back(a, b);

    Mor parent = C.randomMor(rng, a, b);
    Mor sub = C.randomSubMor(rng, parent);
    s.leqTriples.push_back(LeqSample{sub, parent, randomPost(b), randomPre(a)});

    CompatFamilySample fam;
    size_t k = 2 + rng.below(2);
    for (size_t j = 0; j < k; ++j) fam.family.push_back(C.randomSubMor(rng, parent));
    fam.upperBounds = {parent};
    fam.post = randomPost(b);
    fam.pre = randomPre(a);
    s.families.push_back(std::move(fam));

    // disjoint pair: shrink one side until the restrictions clash nowhere
    Mor f = C.randomMor(rng, a, b);
    Mor g = C.randomMor(rng, a, d);
    bool found = false;
    for (int tries = 0; tries < 24 && !found; ++tries) {
      if (disjoint(C, f, g)) {
        found = true;
        break;
      }
      g = C.randomSubMor(rng, g);
      if (disjoint(C, f, g)) found = true;
      if (!found && tries % 6 == 5) f = C.randomSubMor(rng, f);
    }
    if (!found) g = C.zero(a, d);
    DisjointSample dj{f, g, randomPost(b), randomPost(d), randomPre(a)};
    s.disjointPairs.push_back(std::move(dj));
  }
  return s;
}

}  // namespace

Samples buildSamples(const Category& C, const SampleOptions& options) {
  bool exhaustive = options.exhaustive ? *options.exhaustive : defaultExhaustive(C);
  return exhaustive ? buildExhaustive(C, options) : buildSeeded(C, options);
}

LawReport checkRestrictionAxioms(const Category& C, const Samples& s) {
  LawReport report;
  report.instance = C.name();

  Check restId(C, "restriction identity: f . r(f) = f");
  for (const auto& f : s.morphisms) restId.eq(C.compose(f, C.restriction(f)), f, {&f});
  report.add(std::move(restId.result));

  Check restComm(C, "restrictions commute: r(f) . r(g) = r(g) . r(f)");
  for (const auto& [f, g] : s.sameSource) {
    Mor rf = C.restriction(f), rg = C.restriction(g);
    restComm.eq(C.compose(rf, rg), C.compose(rg, rf), {&f, &g});
  }
  report.add(std::move(restComm.result));

  Check restAbsorb(C, "restriction absorption: r(f . r(g)) = r(f) . r(g)");
  for (const auto& [f, g] : s.sameSource) {
    Mor rg = C.restriction(g);
    restAbsorb.eq(C.restriction(C.compose(f, rg)), C.compose(C.restriction(f), rg), {&f, &g});
  }
  report.add(std::move(restAbsorb.result));

  Check restExch(C, "restriction exchange: r(h) . f = f . r(r(h) . f)");
  for (const auto& [h, f] : s.composable) {
    Mor rhf = C.compose(C.restriction(h), f);
    restExch.eq(rhf, C.compose(f, C.restriction(rhf)), {&h, &f});
  }
  report.add(std::move(restExch.result));

  // A variant reading scopes the overline over the whole left-hand side of
  // the exchange axiom; it only typechecks for endomorphisms and is not an
  // axiom. Recorded for transparency, never asserted.
  Check restExchVar(C, "restriction exchange, overlined-lhs variant (endo only)");
  restExchVar.result.informational = true;
  for (const auto& [h, f] : s.composable) {
    if (!(f.dom == f.cod)) continue;
    Mor rhf = C.compose(C.restriction(h), f);
    restExchVar.eq(C.restriction(rhf), C.compose(f, C.restriction(rhf)), {&h, &f});
  }
  report.add(std::move(restExchVar.result));
  return report;
}

LawReport checkInverseAxioms(const Category& C, const Samples& s) {
  LawReport report;
  report.instance = C.name();

  Check post(C, "inv(f) . f = r(f)");
  Check pre(C, "f . inv(f) = r(inv(f))");
  for (const auto& f : s.morphisms) {
    Mor inv = C.inverse(f);
    post.eq(C.compose(inv, f), C.restriction(f), {&f});
    pre.eq(C.compose(f, inv), C.restriction(inv), {&f});
  }
  report.add(std::move(post.result));
  report.add(std::move(pre.result));

  Check idinv(C, "inv(id) = id");
  for (const auto& a : C.universeObjects()) {
    Mor id = C.identity(a);
    idinv.eq(C.inverse(id), id, {&id});
  }
  report.add(std::move(idinv.result));

  Check unique(C, "partial inverse unique (hom-enumerable)");
  long long budget = 200;
  for (const auto& f : s.morphisms) {
    if (budget-- <= 0) break;
    if (!C.homEnumerable(f.cod, f.dom)) continue;
    Mor inv = C.inverse(f);
    int count = 0;
    for (const auto& g : C.enumerateHom(f.cod, f.dom)) {
      if (C.compose(g, f) == C.restriction(f) && C.compose(f, g) == C.restriction(g)) ++count;
    }
    unique.holds(count == 1, {&f}, "exactly one candidate satisfies both equations");
  }
  report.add(std::move(unique.result));
  return report;
}

LawReport checkJoinAxioms(const Category& C, const Samples& s) {
  LawReport report;
  report.instance = C.name();

  Check joinUb(C, "join upper bound: s <= join(S)");
  Check joinLeast(C, "join least upper bound: join(S) <= t");
  Check joinRestr(C, "join restriction: r(join(S)) = join of restrictions");
  Check joinLeft(C, "join left composition: f . join(S) = join of f . s");
  Check joinRight(C, "join right composition: join(S) . g = join of s . g");
  for (const auto& fam : s.families) {
    const Obj& dom = fam.family.front().dom;
    const Obj& cod = fam.family.front().cod;
    Mor J = C.join(fam.family, dom, cod);
    for (const auto& m : fam.family) joinUb.holds(leq(C, m, J), {&m, &J}, "s <= join(S)");
    for (const auto& t : fam.upperBounds) joinLeast.holds(leq(C, J, t), {&J, &t}, "join(S) <= t");

    std::vector<Mor> restrictions;
    for (const auto& m : fam.family) restrictions.push_back(C.restriction(m));
    joinRestr.eq(C.restriction(J), C.join(restrictions, dom, dom), {&J});

    for (const auto& f : fam.post) {
      std::vector<Mor> composed;
      for (const auto& m : fam.family) composed.push_back(C.compose(f, m));
      joinLeft.eq(C.compose(f, J), C.join(composed, dom, f.cod), {&f, &J});
    }
    for (const auto& g : fam.pre) {
      std::vector<Mor> composed;
      for (const auto& m : fam.family) composed.push_back(C.compose(m, g));
      joinRight.eq(C.compose(J, g), C.join(composed, g.dom, cod), {&J, &g});
    }
  }
  report.add(std::move(joinUb.result));
  report.add(std::move(joinLeast.result));
  report.add(std::move(joinRestr.result));
  report.add(std::move(joinLeft.result));
  report.add(std::move(joinRight.result));

  Check empty(C, "join of the empty family = zero");
  for (const auto& [a, b] : s.homPairs) empty.eq(C.join({}, a, b), C.zero(a, b), {});
  report.add(std::move(empty.result));
  return report;
}

LawReport checkZeroLaws(const Category& C, const Samples& s) {
  LawReport report;
  report.instance = C.name();

  Check left(C, "f . 0 = 0");
  Check right(C, "0 . g = 0");
  for (const auto& f : s.morphisms) {
    left.eq(C.compose(f, C.zero(f.cod, f.dom)), C.zero(f.cod, f.cod), {&f});
    left.eq(C.compose(f, C.zero(f.dom, f.dom)), C.zero(f.dom, f.cod), {&f});
    right.eq(C.compose(C.zero(f.cod, f.dom), f), C.zero(f.dom, f.dom), {&f});
    right.eq(C.compose(C.zero(f.cod, f.cod), f), C.zero(f.dom, f.cod), {&f});
  }
  report.add(std::move(left.result));
  report.add(std::move(right.result));

  Check inv(C, "inv(0_{A,B}) = 0_{B,A}");
  Check restr(C, "r(0_{A,B}) = 0_{A,A}");
  for (const auto& [a, b] : s.homPairs) {
    Mor z = C.zero(a, b);
    inv.eq(C.inverse(z), C.zero(b, a), {&z});
    restr.eq(C.restriction(z), C.zero(a, a), {&z});
  }
  report.add(std::move(inv.result));
  report.add(std::move(restr.result));
  return report;
}

LawReport checkOrderComposition(const Category& C, const Samples& s) {
  LawReport report;
  report.instance = C.name();
  Check post(C, "f <= g implies h.f <= h.g");
  Check pre(C, "f <= g implies f.h <= g.h");
  for (const auto& t : s.leqTriples) {
    for (const auto& h : t.post)
      post.holds(leq(C, C.compose(h, t.f), C.compose(h, t.g)), {&t.f, &t.g, &h}, "h.f <= h.g");
    for (const auto& h : t.pre)
      pre.holds(leq(C, C.compose(t.f, h), C.compose(t.g, h)), {&t.f, &t.g, &h}, "f.h <= g.h");
  }
  report.add(std::move(post.result));
  report.add(std::move(pre.result));
  return report;
}

LawReport checkRigStructure(const Category& C, const Samples& s) {
  LawReport report;
  report.instance = C.name();
  if (!C.hasTensor() || s.morphisms.empty()) return report;

  std::vector<Obj> objs = C.universeObjects();
  capList(objs, size_t{4});

  Check totalIso(C, "structural morphisms are total isos");
  for (const auto& a : objs) {
    for (const auto& b : objs) {
      Mor sym = C.symmetry(a, b);
      totalIso.holds(isTotal(C, sym) && isTotalIso(C, sym), {&sym}, "symmetry total iso");
      for (const auto& c : objs) {
        Mor assoc = C.associator(a, b, c);
        totalIso.holds(isTotal(C, assoc) && isTotalIso(C, assoc), {&assoc}, "associator total iso");
      }
    }
    Mor lu = C.leftUnitor(a), ru = C.rightUnitor(a);
    totalIso.holds(isTotalIso(C, lu), {&lu}, "left unitor total iso");
    totalIso.holds(isTotalIso(C, ru), {&ru}, "right unitor total iso");
  }
  report.add(std::move(totalIso.result));

  Check tensorRestr(C, "r(f (x) g) = r(f) (x) r(g)");
  Check tensorJoin(C, "(x) preserves joins");
  {
    size_t budget = std::min<size_t>(s.morphisms.size(), 400);
    for (size_t i = 0; i + 1 < budget; i += 2) {
      const Mor& f = s.morphisms[i];
      const Mor& g = s.morphisms[i + 1];
      tensorRestr.eq(C.restriction(C.tensorMor(f, g)),
                     C.tensorMor(C.restriction(f), C.restriction(g)), {&f, &g});
    }
    size_t famBudget = std::min<size_t>(s.families.size(), 150);
    for (size_t i = 0; i < famBudget; ++i) {
      const auto& fam = s.families[i];
      const Mor& g = s.morphisms[i % s.morphisms.size()];
      Mor J = C.join(fam.family, fam.family.front().dom, fam.family.front().cod);
      std::vector<Mor> tensored;
      for (const auto& m : fam.family) tensored.push_back(C.tensorMor(m, g));
      tensorJoin.eq(C.tensorMor(J, g),
                    C.join(tensored, C.tensorObj(J.dom, g.dom), C.tensorObj(J.cod, g.cod)),
                    {&J, &g});
    }
  }
  report.add(std::move(tensorRestr.result));
  report.add(std::move(tensorJoin.result));

  if (!C.hasSum()) return report;

  Check injTotal(C, "injections are total");
  Check injDisjoint(C, "injection images are disjoint");
  for (const auto& a : objs) {
    for (const auto& b : objs) {
      Mor il = C.injLeft(a, b), ir = C.injRight(a, b);
      injTotal.holds(isTotal(C, il) && isTotal(C, ir), {&il, &ir}, "r(inj) = id");
      Obj sum = C.sumObj(a, b);
      injDisjoint.eq(C.compose(rangeIdempotent(C, il), rangeIdempotent(C, ir)),
                     C.zero(sum, sum), {&il, &ir});
    }
  }
  report.add(std::move(injTotal.result));
  report.add(std::move(injDisjoint.result));

  Check sumRestr(C, "r(f (+) g) = r(f) (+) r(g)");
  Check sumJoin(C, "(+) preserves joins");
  {
    size_t budget = std::min<size_t>(s.morphisms.size(), 400);
    for (size_t i = 0; i + 1 < budget; i += 2) {
      const Mor& f = s.morphisms[i];
      const Mor& g = s.morphisms[i + 1];
      sumRestr.eq(C.restriction(C.sumMor(f, g)), C.sumMor(C.restriction(f), C.restriction(g)),
                  {&f, &g});
    }
    size_t famBudget = std::min<size_t>(s.families.size(), 150);
    for (size_t i = 0; i < famBudget; ++i) {
      const auto& fam = s.families[i];
      const Mor& g = s.morphisms[(i + 1) % s.morphisms.size()];
      Mor J = C.join(fam.family, fam.family.front().dom, fam.family.front().cod);
      std::vector<Mor> summed;
      for (const auto& m : fam.family) summed.push_back(C.sumMor(m, g));
      sumJoin.eq(C.sumMor(J, g),
                 C.join(summed, C.sumObj(J.dom, g.dom), C.sumObj(J.cod, g.cod)), {&J, &g});
    }
  }
  report.add(std::move(sumRestr.result));
  report.add(std::move(sumJoin.result));

  Check distIso(C, "distributor is a total iso");
  for (const auto& a : objs)
    for (const auto& b : objs)
      for (const auto& c : objs) {
        Mor d = C.distributor(a, b, c);
        distIso.holds(isTotal(C, d) && isTotalIso(C, d), {&d}, "delta total iso");
      }
  report.add(std::move(distIso.result));
  return report;
}

LawReport checkDisjointnessLemmas(const Category& C, const Samples& s) {
  LawReport report;
  report.instance = C.name();
  Check postDisj(C, "disjointness is preserved by post-composition");
  Check preDisj(C, "disjointness is preserved by pre-composition");
  Check disjCompat(C, "disjoint morphisms are compatible");
  for (const auto& d : s.disjointPairs) {
    for (const auto& g1 : d.post1)
      for (const auto& g2 : d.post2) {
        Mor c1 = C.compose(g1, d.f), c2 = C.compose(g2, d.g);
        postDisj.eq(C.compose(C.restriction(c1), C.restriction(c2)), C.zero(d.f.dom, d.f.dom),
               {&d.f, &d.g, &g1, &g2});
      }
    for (const auto& h : d.pre) {
      Mor c1 = C.compose(d.f, h), c2 = C.compose(d.g, h);
      preDisj.eq(C.compose(C.restriction(c1), C.restriction(c2)), C.zero(h.dom, h.dom),
             {&d.f, &d.g, &h});
    }
    if (d.f.cod == d.g.cod)
      disjCompat.holds(restrictionCompatible(C, d.f, d.g), {&d.f, &d.g}, "f (smile) g");
  }
  report.add(std::move(postDisj.result));
  report.add(std::move(preDisj.result));
  report.add(std::move(disjCompat.result));
  return report;
}

LawReport checkAllLaws(const Category& C, const SampleOptions& options) {
  Samples s = buildSamples(C, options);
  LawReport report;
  report.instance = C.name();
  report.merge(checkRestrictionAxioms(C, s));
  report.merge(checkInverseAxioms(C, s));
  report.merge(checkJoinAxioms(C, s));
  report.merge(checkZeroLaws(C, s));
  report.merge(checkOrderComposition(C, s));
  report.merge(checkRigStructure(C, s));
  report.merge(checkDisjointnessLemmas(C, s));
  return report;
}

}  // namespace revcat::cat
