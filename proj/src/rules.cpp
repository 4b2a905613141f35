#include "rules.hpp"

#include <set>
#include <unordered_map>

namespace pdlmt {
namespace {

enum Flag : unsigned { kDerived = 1, kDisplay = 2, kCut = 4 };

using Fills = std::vector<std::pair<std::string, std::string>>;

std::string fill(std::string s, const Fills& f) {
  for (const auto& [key, val] : f) {
    std::size_t at = 0;
    while ((at = s.find(key, at)) != std::string::npos) {
      s.replace(at, key.size(), val);
      at += val.size();
    }
  }
  return s;
}

const char* SS(int i) { return i ? "ACT" : "TACT"; }
const char* OS(int i) { return i ? "Act" : "TAct"; }
const char* letter(int i) { return i ? "A" : "T"; }

bool introduced(const Term& t) { return !is_meta(t) && !is_atom(t) && info(t->op).level == Level::Oper; }

int principal_of(const Sequent& c) {
  bool id = is_meta(c.ant) && equal(c.ant, c.suc) && !is_structural(c.ant->msort);
  if (id || (introduced(c.ant) && introduced(c.suc))) return 2;
  if (introduced(c.ant)) return 0;
  if (introduced(c.suc)) return 1;
  return -1;
}

class Builder {
 public:
  std::vector<Schema> rules;

  void add(const std::string& id, const std::string& group, const std::string& vars,
           const std::vector<std::string>& prems, const std::string& concl, unsigned flags = 0) {
    rules.push_back(make(id, group, vars, prems, concl, flags));
  }

  // Double-line rule: id reads top-to-bottom, id_inv bottom-to-top.
  void dbl(const std::string& id, const std::string& group, const std::string& vars, const std::string& top,
           const std::string& bottom, unsigned flags = 0) {
    Schema a = make(id, group, vars, {top}, bottom, flags);
    Schema b = make(id + "_inv", group, vars, {bottom}, top, flags);
    a.invertible = b.invertible = true;
    a.inverse = b.id;
    b.inverse = a.id;
    rules.push_back(std::move(a));
    rules.push_back(std::move(b));
  }

  void omega(const std::string& id, const std::string& group, const std::string& vars, const std::string& member,
             const std::string& concl, unsigned flags = 0) {
    Schema s = make(id, group, vars, {member}, concl, flags);
    s.omega_meta = "Pi";
    rules.push_back(std::move(s));
  }

 private:
  Signature empty_;

  Schema make(const std::string& id, const std::string& group, const std::string& vars,
              const std::vector<std::string>& prems, const std::string& concl, unsigned flags) {
    Schema s;
    s.id = id;
    s.group = group;
    s.metas = parse_meta_decls(vars);
    ParseContext ctx{&empty_, &s.metas, false};
    try {
      for (const auto& p : prems) s.premises.push_back(parse_sequent(p, ctx));
      s.conclusion = parse_sequent(concl, ctx);
    } catch (const Error& e) {
      throw Error(Errc::Internal, "catalogue entry " + id + ": " + e.what());
    }
    s.derived = flags & kDerived;
    s.display = flags & kDisplay;
    s.is_cut = flags & kCut;
    s.is_virtual = contains_virtual(s.conclusion.ant) || contains_virtual(s.conclusion.suc);
    for (const auto& p : s.premises) s.is_virtual = s.is_virtual || contains_virtual(p.ant) || contains_virtual(p.suc);
    s.principal_side = s.is_cut ? -1 : principal_of(s.conclusion);
    return s;
  }
};

void identity_and_cut(Builder& b) {
  b.add("Id_p", "Identity Rules", "p:Prop", {}, "$p |- $p");
  b.add("Id_pi", "Identity Rules", "pi:ActAtom", {}, "$pi |- $pi");
  b.add("cut_Fm", "Cut Rules", "X:FM Y:FM A:Fm", {"$X |- $A", "$A |- $Y"}, "$X |- $Y", kCut);
  b.add("cut_Act", "Cut Rules", "Pi:ACT Sg:ACT al:Act", {"$Pi |- $al", "$al |- $Sg"}, "$Pi |- $Sg", kCut);
  b.add("cut_TAct", "Cut Rules", "G:TACT D:TACT d:TAct", {"$G |- $d", "$d |- $D"}, "$G |- $D", kCut);
}

void heterogeneous(Builder& b) {
  for (int i : {0, 1}) {
    Fills f{{"{i}", std::to_string(i)}, {"{S}", SS(i)}, {"{s}", OS(i)}};
    auto A = [&](const char* id, const char* group, const char* vars, std::vector<std::string> prems,
                 const char* concl, unsigned flags = 0) {
      for (auto& p : prems) p = fill(p, f);
      b.add(fill(id, f), group, fill(vars, f), prems, fill(concl, f), flags);
    };
    auto D = [&](const char* id, const char* group, const char* vars, const char* top, const char* bottom,
                 unsigned flags = 0) { b.dbl(fill(id, f), group, fill(vars, f), fill(top, f), fill(bottom, f), flags); };

    const char* op = "Actions-Propositions Operational Rules";
    A("wtri{i}_L", op, "a:{s} B:Fm Z:FM", {"$a swtri{i} $B |- $Z"}, "$a wtri{i} $B |- $Z");
    A("wtri{i}_R", op, "x:{S} Y:FM a:{s} B:Fm", {"$x |- $a", "$Y |- $B"}, "$x swtri{i} $Y |- $a wtri{i} $B");
    A("btri{i}_L", op, "a:{s} B:Fm Z:FM", {"$a sbtri{i} $B |- $Z"}, "$a btri{i} $B |- $Z");
    A("btri{i}_R", op, "x:{S} Y:FM a:{s} B:Fm", {"$x |- $a", "$Y |- $B"}, "$x sbtri{i} $Y |- $a btri{i} $B");
    A("fbox{i}_L", op, "x:{S} Y:FM a:{s} B:Fm", {"$x |- $a", "$B |- $Y"}, "$a fbox{i} $B |- $x swbox{i} $Y");
    A("fbox{i}_R", op, "a:{s} B:Fm Z:FM", {"$Z |- $a swbox{i} $B"}, "$Z |- $a fbox{i} $B");
    A("bbox{i}_L", op, "x:{S} Y:FM a:{s} B:Fm", {"$x |- $a", "$B |- $Y"}, "$a bbox{i} $B |- $x sbbox{i} $Y");
    A("bbox{i}_R", op, "a:{s} B:Fm Z:FM", {"$Z |- $a sbbox{i} $B"}, "$Z |- $a bbox{i} $B");

    const char* dp = "Actions-Propositions Display Postulates";
    D("dp_wtri{i}_bbox{i}", dp, "x:{S} Y:FM Z:FM", "$x swtri{i} $Y |- $Z", "$Y |- $x sbbox{i} $Z", kDisplay);
    D("dp_btri{i}_wbox{i}", dp, "x:{S} Y:FM Z:FM", "$x sbtri{i} $Y |- $Z", "$Y |- $x swbox{i} $Z", kDisplay);

    const char* nec = "Necessitation Rules";
    A("nec{i}_wtri", nec, "x:{S} W:FM", {"I |- $W"}, "$x swtri{i} I |- $W");
    A("nec{i}_btri", nec, "x:{S} W:FM", {"I |- $W"}, "$x sbtri{i} I |- $W");
    A("nec{i}_wbox", nec, "x:{S} W:FM", {"$W |- I"}, "$W |- $x swbox{i} I", kDerived);
    A("nec{i}_bbox", nec, "x:{S} W:FM", {"$W |- I"}, "$W |- $x sbbox{i} I", kDerived);

    const char* conj = "Conjugation Rules";
    const char* v4 = "x:{S} Y:FM Z:FM W:FM";
    A("conj{i}_wtri", conj, v4, {"$x swtri{i} (($x sbtri{i} $Y) , $Z) |- $W"}, "$Y , ($x swtri{i} $Z) |- $W");
    A("conj{i}_wbox", conj, v4, {"$W |- $x swbox{i} (($x sbbox{i} $Y) , $Z)"}, "$W |- $Y , ($x swbox{i} $Z)");
    A("conj{i}_btri", conj, v4, {"$x sbtri{i} (($x swtri{i} $Y) , $Z) |- $W"}, "$Y , ($x sbtri{i} $Z) |- $W");
    A("conj{i}_bbox", conj, v4, {"$W |- $x sbbox{i} (($x swbox{i} $Y) , $Z)"}, "$W |- $Y , ($x sbbox{i} $Z)");

    const char* fs = "Fischer-Servi Rules";
    A("FS{i}_wtri", fs, v4, {"($x swbox{i} $Y) > ($x swtri{i} $Z) |- $W"}, "$x swtri{i} ($Y > $Z) |- $W");
    A("FS{i}_wbox", fs, v4, {"$W |- ($x swtri{i} $Y) > ($x swbox{i} $Z)"}, "$W |- $x swbox{i} ($Y > $Z)");
    A("FS{i}_btri", fs, v4, {"($x sbbox{i} $Y) > ($x sbtri{i} $Z) |- $W"}, "$x sbtri{i} ($Y > $Z) |- $W");
    A("FS{i}_bbox", fs, v4, {"$W |- ($x sbtri{i} $Y) > ($x sbbox{i} $Z)"}, "$W |- $x sbbox{i} ($Y > $Z)");

    const char* mon = "Monotonicity Rules";
    A("mon{i}_wtri", mon, v4, {"($x swtri{i} $Y) , ($x swtri{i} $Z) |- $W"}, "$x swtri{i} ($Y , $Z) |- $W");
    A("mon{i}_wbox", mon, v4, {"$W |- ($x swbox{i} $Y) , ($x swbox{i} $Z)"}, "$W |- $x swbox{i} ($Y , $Z)");
    A("mon{i}_btri", mon, v4, {"($x sbtri{i} $Y) , ($x sbtri{i} $Z) |- $W"}, "$x sbtri{i} ($Y , $Z) |- $W");
    A("mon{i}_bbox", mon, v4, {"$W |- ($x sbbox{i} $Y) , ($x sbbox{i} $Z)"}, "$W |- $x sbbox{i} ($Y , $Z)");

    const char* to = "Test and Iteration Operational Rules";
    A("test{i}_L", to, "A:Fm x:{S}", {"$A ?b{i} |- $x"}, "$A ?{i} |- $x");
    A("test{i}_R", to, "A:Fm X:FM", {"$X |- $A"}, "$X ?b{i} |- $A ?{i}");

    D("dp_stest{i}_srtest{i}", "Test and Iteration Display Postulates", "X:FM x:{S}", "$X ?b{i} |- $x",
      "$X |- $x ?r{i}", kDisplay);

    const char* ts = "Test Structural Rules";
    const char* v3 = "X:FM Y:FM Z:FM";
    D("test{i}_wtri", ts, v3, "$X , $Y |- $Z", "($X ?b{i}) swtri{i} $Y |- $Z");
    D("test{i}_btri", ts, v3, "$X , $Y |- $Z", "($Y ?b{i}) sbtri{i} $X |- $Z");
    D("test{i}_wbox", ts, v3, "$Y |- $X > $Z", "$Y |- ($X ?b{i}) swbox{i} $Z", kDerived);
    D("test{i}_bbox", ts, v3, "$Y |- $X > $Z", "$Y |- ($X ?b{i}) sbbox{i} $Z", kDerived);
  }

  const char* dp = "Actions-Propositions Display Postulates";
  b.dbl("dp_wtri1_bleft1", dp, "x:ACT Y:FM Z:FM", "$x swtri1 $Y |- $Z", "$x |- $Z sbleft1 $Y", kDisplay);
  b.dbl("dp_btri1_wleft1", dp, "x:ACT Y:FM Z:FM", "$x sbtri1 $Y |- $Z", "$x |- $Z swleft1 $Y", kDisplay);
  b.dbl("dp_wtri0_vbleft0", dp, "x:TACT Y:FM Z:FM", "$x swtri0 $Y |- $Z", "$x |- $Z vbleft0 $Y", kDisplay);
  b.dbl("dp_btri0_vwleft0", dp, "x:TACT Y:FM Z:FM", "$x sbtri0 $Y |- $Z", "$x |- $Z vwleft0 $Y", kDisplay);
}

void actions(Builder& b) {
  const char* group = "Actions Rules";
  for (int ix : {1, 0})
    for (int iy : {1, 0}) {
      int j = pair_index(ix ? Sort::ACT : Sort::TACT, iy ? Sort::ACT : Sort::TACT);
      int jr = pair_index(iy ? Sort::ACT : Sort::TACT, ix ? Sort::ACT : Sort::TACT);
      Fills f{{"{ix}", std::to_string(ix)}, {"{iy}", std::to_string(iy)}, {"{j}", std::to_string(j)},
              {"{jr}", std::to_string(jr)}};
      std::string vars = fill("x:{X} y:{Y} Z:FM W:FM", {{"{X}", SS(ix)}, {"{Y}", SS(iy)}});
      b.dbl(fill("act{j}_wtri", f), group, vars, fill("$x swtri{ix} ($y swtri{iy} $Z) |- $W", f),
            fill("($x ;b{j} $y) swtri1 $Z |- $W", f));
      b.dbl(fill("act{jr}_btri", f), group, vars, fill("$x sbtri{ix} ($y sbtri{iy} $Z) |- $W", f),
            fill("($y ;b{jr} $x) sbtri1 $Z |- $W", f));
      b.dbl(fill("act{j}_wbox", f), group, vars, fill("$W |- $x swbox{ix} ($y swbox{iy} $Z)", f),
            fill("$W |- ($x ;b{j} $y) swbox1 $Z", f), kDerived);
      b.dbl(fill("act{jr}_bbox", f), group, vars, fill("$W |- $x sbbox{ix} ($y sbbox{iy} $Z)", f),
            fill("$W |- ($y ;b{jr} $x) sbbox1 $Z", f), kDerived);
    }
}

void iteration(Builder& b) {
  const char* to = "Test and Iteration Operational Rules";
  b.add("plus_L", to, "al:Act D:TACT", {"$al^op |- $D"}, "$al+ |- $D");
  b.add("plus_R", to, "Ps:ACT al:Act", {"$Ps |- $al"}, "$Ps^op |- $al+");
  b.add("minus_L", to, "d:TAct D:TACT", {"$d |- $D"}, "$d- |- $D^om");
  b.add("minus_R", to, "Ps:ACT d:TAct", {"$Ps |- $d^om"}, "$Ps |- $d-");
  b.dbl("dp_oplus_ominus", "Test and Iteration Display Postulates", "Pi:ACT D:TACT", "$Pi^op |- $D", "$Pi |- $D^om",
        kDisplay);

  const char* ab = "Absorption Rules";
  b.add("abs1", ab, "Pi:ACT Sg:ACT D:TACT", {"$Pi |- $D^om", "$Sg |- $D^om"}, "$Pi ;b1 $Sg |- $D^om");
  b.add("abs4", ab, "G:TACT Xi:TACT D:TACT", {"$G |- $D", "$Xi |- $D"}, "$G ;b4 $Xi |- $D^om");
  b.add("abs2", ab, "G:TACT Sg:ACT D:TACT", {"$G |- $D", "$Sg |- $D^om"}, "$G ;b2 $Sg |- $D^om");
  b.add("abs3", ab, "Sg:ACT G:TACT D:TACT", {"$Sg |- $D^om", "$G |- $D"}, "$Sg ;b3 $G |- $D^om");

  const char* pd = "Promotion/Demotion Rules";
  const char* v = "G:TACT Sg:ACT Pi:ACT";
  b.dbl("prodem_semi2_1", pd, v, "$G ;b2 $Sg |- $Pi", "($G^om) ;b1 $Sg |- $Pi");
  b.dbl("prodem_btw2_1", pd, v, "$Pi |- $G btw2 $Sg", "$Pi |- ($G^om) btw1 $Sg");
  b.dbl("prodem_semi3_1", pd, v, "$Sg ;b3 $G |- $Pi", "$Sg ;b1 ($G^om) |- $Pi");
  b.dbl("prodem_btw3_1", pd, v, "$Pi |- $Sg btw3 $G", "$Pi |- $Sg btw1 ($G^om)");
  const char* w = "D:TACT G:TACT Pi:ACT";
  b.dbl("prodem_semi4_2", pd, w, "$D ;b4 $G |- $Pi", "$D ;b2 ($G^om) |- $Pi");
  b.dbl("prodem_btw4_2", pd, w, "$Pi |- $D btw4 $G", "$Pi |- $D btw2 ($G^om)");
  b.dbl("prodem_semi4_3", pd, w, "$D ;b4 $G |- $Pi", "($D^om) ;b3 $G |- $Pi");
  b.dbl("prodem_btw4_3", pd, w, "$Pi |- $D btw4 $G", "$Pi |- ($D^om) btw3 $G");
  b.dbl("prodem_stest", pd, "X:FM D:TACT", "$X ?b0 |- $D", "$X ?b1 |- $D^om");

  const char* vd = "Pi:ACT X:FM Y:FM";
  b.add("dem_wtri", pd, vd, {"($Pi^op) swtri0 $X |- $Y"}, "$Pi swtri1 $X |- $Y");
  b.add("dem_btri", pd, vd, {"($Pi^op) sbtri0 $X |- $Y"}, "$Pi sbtri1 $X |- $Y");
  b.add("dem_wbox", pd, vd, {"$X |- ($Pi^op) swbox0 $Y"}, "$X |- $Pi swbox1 $Y", kDerived);
  b.add("dem_bbox", pd, vd, {"$X |- ($Pi^op) sbbox0 $Y"}, "$X |- $Pi sbbox1 $Y", kDerived);
  b.add("dem_wleft", pd, vd, {"$Pi^op |- $X vwleft0 $Y"}, "$Pi |- $X swleft1 $Y", kDerived);
  b.add("dem_bleft", pd, vd, {"$Pi^op |- $X vbleft0 $Y"}, "$Pi |- $X sbleft1 $Y", kDerived);

  const char* fp = "Fixed Point Structural Rules";
  b.add("FP_wtri", fp, vd, {"$Pi swtri1 $X |- $Y", "($Pi ;b3 ($Pi^op)) swtri1 $X |- $Y"}, "($Pi^op) swtri0 $X |- $Y");
  b.add("FP_btri", fp, vd, {"$Pi sbtri1 $X |- $Y", "($Pi ;b3 ($Pi^op)) sbtri1 $X |- $Y"}, "($Pi^op) sbtri0 $X |- $Y");
  b.add("FP_wbox", fp, vd, {"$X |- $Pi swbox1 $Y", "$X |- ($Pi ;b3 ($Pi^op)) swbox1 $Y"}, "$X |- ($Pi^op) swbox0 $Y",
        kDerived);
  b.add("FP_bbox", fp, vd, {"$X |- $Pi sbbox1 $Y", "$X |- ($Pi ;b3 ($Pi^op)) sbbox1 $Y"}, "$X |- ($Pi^op) sbbox0 $Y",
        kDerived);
  b.add("FP_wleft", fp, vd, {"$Pi |- $Y swleft1 $X", "$Pi ;b3 ($Pi^op) |- $Y swleft1 $X"}, "$Pi^op |- $Y vwleft0 $X",
        kDerived);
  b.add("FP_bleft", fp, vd, {"$Pi |- $Y sbleft1 $X", "$Pi ;b3 ($Pi^op) |- $Y sbleft1 $X"}, "$Pi^op |- $Y vbleft0 $X",
        kDerived);

  const char* om = "Omega-Iteration Structural Rules";
  b.omega("omega_wtri", om, vd, "$Pi swtri1 $X |- $Y", "($Pi^op) swtri0 $X |- $Y");
  b.omega("omega_btri", om, vd, "$Pi sbtri1 $X |- $Y", "($Pi^op) sbtri0 $X |- $Y");
  b.omega("omega_wbox", om, vd, "$X |- $Pi swbox1 $Y", "$X |- ($Pi^op) swbox0 $Y", kDerived);
  b.omega("omega_bbox", om, vd, "$X |- $Pi sbbox1 $Y", "$X |- ($Pi^op) sbbox0 $Y", kDerived);
  b.omega("omega_wleft", om, vd, "$Pi |- $Y swleft1 $X", "$Pi^op |- $Y vwleft0 $X", kDerived);
  b.omega("omega_bleft", om, vd, "$Pi |- $Y sbleft1 $X", "$Pi^op |- $Y vbleft0 $X", kDerived);
}

void units(Builder& b) {
  const char* gi = "gI-Rules";
  const char* xy = "x:ACT y:ACT";
  const char* dg = "D:TACT G:TACT";
  b.dbl("gI1_1R", gi, xy, "$x |- $y", "$x |- gI_1 btw1 $y");
  b.dbl("gI2_1R", gi, xy, "$x |- $y", "$x |- gI_0 btw2 $y");
  b.dbl("gI3_1R", gi, dg, "$D |- $G", "$D^om |- gI_1 btw3 $G");
  b.dbl("gI4_1R", gi, dg, "$D |- $G", "$D^om |- gI_0 btw4 $G");
  b.dbl("gI1_2R", gi, xy, "$x |- $y", "$x |- $y btw1 gI_1");
  b.dbl("gI3_2R", gi, xy, "$x |- $y", "$x |- $y btw3 gI_0");
  b.dbl("gI2_2R", gi, dg, "$D |- $G", "$D^om |- $G btw2 gI_1");
  b.dbl("gI4_2R", gi, dg, "$D |- $G", "$D^om |- $G btw4 gI_0");

  const char* ph = "Phi-Rules";
  b.dbl("Phi1_1L", ph, xy, "$x |- $y", "Phi_1 ;b1 $x |- $y");
  b.dbl("Phi2_1L", ph, xy, "$x |- $y", "Phi_0 ;b2 $x |- $y");
  b.dbl("Phi3_1L", ph, dg, "$D |- $G", "Phi_1 ;b3 $D |- $G^om");
  b.dbl("Phi4_1L", ph, dg, "$D |- $G", "Phi_0 ;b4 $D |- $G^om");
  b.dbl("Phi1_2L", ph, xy, "$x |- $y", "$x ;b1 Phi_1 |- $y");
  b.dbl("Phi3_2L", ph, xy, "$x |- $y", "$x ;b3 Phi_0 |- $y");
  b.dbl("Phi2_2L", ph, dg, "$D |- $G", "$D ;b2 Phi_1 |- $G^om");
  b.dbl("Phi4_2L", ph, dg, "$D |- $G", "$D ;b4 Phi_0 |- $G^om");

  const char* wk = "Weakening Rules for Actions";
  b.add("W1_1R", wk, "x:ACT y:ACT z:ACT", {"$x |- $y"}, "$x |- $z btw1 $y");
  b.add("W2_1R", wk, "x:ACT y:ACT z:TACT", {"$x |- $y"}, "$x |- $z btw2 $y");
  b.add("W3_1R", wk, "D:TACT G:TACT Pi:ACT", {"$D |- $G"}, "$D^om |- $Pi btw3 $G");
  b.add("W4_1R", wk, "D:TACT G:TACT Gp:TACT", {"$D |- $G"}, "$D^om |- $Gp btw4 $G");
  b.add("W1_2R", wk, "x:ACT y:ACT z:ACT", {"$x |- $y"}, "$x |- $y btw1 $z");
  b.add("W3_2R", wk, "x:ACT y:ACT z:TACT", {"$x |- $y"}, "$x |- $y btw3 $z");
  b.add("W2_2R", wk, "D:TACT G:TACT Pi:ACT", {"$D |- $G"}, "$D^om |- $G btw2 $Pi");
  b.add("W4_2R", wk, "D:TACT G:TACT Gp:TACT", {"$D |- $G"}, "$D^om |- $G btw4 $Gp");

  b.add("C1_R", "Contraction Rule for Actions", "x:ACT y:ACT", {"$y |- $x btw1 $x"}, "$y |- $x");
  b.add("C4_R", "Contraction Rule for Actions", "y:ACT x:TACT", {"$y |- $x btw4 $x"}, "$y |- $x^om");

  const char* ex = "Exchange Rules for Actions";
  b.dbl("E23_R", ex, "Sg:ACT Pi:ACT D:TACT", "$Sg |- $D btw2 $Pi", "$Sg |- $Pi btw3 $D");
  b.add("E11_R", ex, "z:ACT x:ACT y:ACT", {"$z |- $x btw1 $y"}, "$z |- $y btw1 $x");
  b.add("E44_R", ex, "z:ACT x:TACT y:TACT", {"$z |- $x btw4 $y"}, "$z |- $y btw4 $x");

  const char* as = "Associativity Rules for Actions";
  for (int ix : {1, 0})
    for (int iy : {1, 0})
      for (int iz : {1, 0}) {
        Sort sx = ix ? Sort::ACT : Sort::TACT, sy = iy ? Sort::ACT : Sort::TACT, sz = iz ? Sort::ACT : Sort::TACT;
        std::string tag = std::string(letter(ix)) + letter(iy) + letter(iz);
        std::string vars = std::string("x:") + SS(ix) + " y:" + SS(iy) + " z:" + SS(iz) + " w:ACT";
        auto n = [](int j) { return std::to_string(j); };
        int in_yz = pair_index(sy, sz), out_x = pair_index(sx, Sort::ACT);
        int in_xy = pair_index(sx, sy), out_z = pair_index(Sort::ACT, sz);
        b.add("A_L_act_" + tag, as, vars, {"$x ;b" + n(out_x) + " ($y ;b" + n(in_yz) + " $z) |- $w"},
              "($x ;b" + n(in_xy) + " $y) ;b" + n(out_z) + " $z |- $w");
        // right form: z btw (y btw x) from (z btw y) btw x
        int r_zy = pair_index(sz, sy), r_out_x = pair_index(Sort::ACT, sx);
        int r_yx = pair_index(sy, sx), r_out_z = pair_index(sz, Sort::ACT);
        b.add("A_R_act_" + tag, as, vars, {"$w |- ($z btw" + n(r_zy) + " $y) btw" + n(r_out_x) + " $x"},
              "$w |- $z btw" + n(r_out_z) + " ($y btw" + n(r_yx) + " $x)");
      }

  const char* ch = "Structural Rules for Non-Deterministic Choice";
  const char* v = "Ps:ACT X:FM Y:FM Z:FM";
  b.add("choice_bleft1_L", ch, v, {"$Ps |- ($Y sbleft1 $X) btw1 ($Z sbleft1 $X)"}, "$Ps |- ($Y , $Z) sbleft1 $X");
  b.add("choice_wleft1_L", ch, v, {"$Ps |- ($Y swleft1 $X) btw1 ($Z swleft1 $X)"}, "$Ps |- ($Y , $Z) swleft1 $X");
  b.add("choice_bleft1_R", ch, v, {"$Ps |- ($X sbleft1 $Y) btw1 ($X sbleft1 $Z)"}, "$Ps |- $X sbleft1 ($Y , $Z)");
  b.add("choice_wleft1_R", ch, v, {"$Ps |- ($X swleft1 $Y) btw1 ($X swleft1 $Z)"}, "$Ps |- $X swleft1 ($Y , $Z)");
}

void choice_and_composition(Builder& b) {
  const char* dp = "Display Postulates for Non-Deterministic Choice and Sequential Composition";
  const char* op = "Operational Rules for Non-Deterministic Choice and Sequential Composition";
  for (int j = 1; j <= 4; ++j) {
    const OpInfo& seq = info(indexed(";", j));
    int il = het_index(seq.arg[0]), ir = het_index(seq.arg[1]);
    std::string J = std::to_string(j);
    Fills f{{"{j}", J}};
    std::string vars = std::string("x:") + SS(il) + " y:" + SS(ir) + " z:ACT";
    const char* succ = (j <= 2) ? "succ" : "vsucc";
    const char* prec = (j == 1 || j == 3) ? "prec" : "vprec";
    b.dbl("dp_btw" + J + "_resR" + J, dp, vars, fill("$z |- $x btw{j} $y", f), fill("$x resR{j} $z |- $y", f),
          kDisplay);
    b.dbl("dp_btw" + J + "_resL" + J, dp, vars, fill("$z |- $x btw{j} $y", f), fill("$z resL{j} $y |- $x", f),
          kDisplay);
    b.dbl("dp_semi" + J + "_" + succ + J, dp, vars, fill("$x ;b{j} $y |- $z", f),
          fill("$y |- $x " + std::string(succ) + "{j} $z", f), kDisplay);
    b.dbl("dp_semi" + J + "_" + prec + J, dp, vars, fill("$x ;b{j} $y |- $z", f),
          fill("$x |- $z " + std::string(prec) + "{j} $y", f), kDisplay);

    std::string ov = std::string("f:") + OS(il) + " g:" + OS(ir) + " x:" + SS(il) + " y:" + SS(ir) + " z:ACT";
    b.add("cup" + J + "_L", op, ov, {"$f |- $x", "$g |- $y"}, fill("$f cup{j} $g |- $x btw{j} $y", f));
    b.add("cup" + J + "_R", op, ov, {fill("$z |- $f btw{j} $g", f)}, fill("$z |- $f cup{j} $g", f));
    b.add("seq" + J + "_L", op, ov, {fill("$f ;b{j} $g |- $z", f)}, fill("$f ;{j} $g |- $z", f));
    b.add("seq" + J + "_R", op, ov, {"$x |- $f", "$y |- $g"}, fill("$x ;b{j} $y |- $f ;{j} $g", f));
  }
}

void propositional(Builder& b) {
  const char* st = "Propositions Structural Rules";
  const char* xy = "X:FM Y:FM";
  const char* xyz = "X:FM Y:FM Z:FM";
  const char* xyzw = "X:FM Y:FM Z:FM W:FM";
  b.dbl("I1_L", st, xy, "$X |- $Y", "I |- $Y < $X");
  b.dbl("I1_R", st, xy, "$X |- $Y", "$X < $Y |- I");
  b.dbl("I2_L", st, xy, "$X |- $Y", "I |- $X > $Y");
  b.dbl("I2_R", st, xy, "$X |- $Y", "$Y > $X |- I");
  b.add("W1_L", st, xyz, {"$X |- $Z"}, "$Y |- $Z < $X");
  b.add("W1_R", st, xyz, {"$X |- $Z"}, "$X < $Z |- $Y");
  b.add("W2_L", st, xyz, {"$X |- $Z"}, "$Y |- $X > $Z");
  b.add("W2_R", st, xyz, {"$X |- $Z"}, "$Z > $X |- $Y");
  b.add("C_L", st, xy, {"$X , $X |- $Y"}, "$X |- $Y");
  b.add("C_R", st, xy, {"$Y |- $X , $X"}, "$Y |- $X");
  b.add("A_L", st, xyzw, {"$X , ($Y , $Z) |- $W"}, "($X , $Y) , $Z |- $W");
  b.add("A_R", st, xyzw, {"$W |- ($Z , $Y) , $X"}, "$W |- $Z , ($Y , $X)");
  b.add("E_L", st, xyz, {"$Y , $X |- $Z"}, "$X , $Y |- $Z");
  b.add("E_R", st, xyz, {"$Z |- $X , $Y"}, "$Z |- $Y , $X");
  b.dbl("Gri_L", st, xyzw, "$X > ($Y , $Z) |- $W", "($X > $Y) , $Z |- $W");
  b.dbl("Gri_R", st, xyzw, "$W |- $X > ($Y , $Z)", "$W |- ($X > $Y) , $Z");

  const char* dp = "Propositions Display Postulates";
  b.dbl("dp_comma_gt_L", dp, xyz, "$X , $Y |- $Z", "$Y |- $X > $Z", kDisplay);
  b.dbl("dp_comma_gt_R", dp, xyz, "$Z |- $X , $Y", "$X > $Z |- $Y", kDisplay);
  b.dbl("dp_comma_lt_L", dp, xyz, "$X , $Y |- $Z", "$X |- $Z < $Y", kDisplay);
  b.dbl("dp_comma_lt_R", dp, xyz, "$Z |- $X , $Y", "$Z < $Y |- $X", kDisplay);

  const char* op = "Propositions Operational Rules";
  const char* ab = "A:Fm B:Fm X:FM Y:FM Z:FM";
  b.add("bot_L", op, "", {}, "bot |- I");
  b.add("bot_R", op, "X:FM", {"$X |- I"}, "$X |- bot");
  b.add("top_L", op, "X:FM", {"I |- $X"}, "top |- $X");
  b.add("top_R", op, "", {}, "I |- top");
  b.add("and_L", op, ab, {"$A , $B |- $X"}, "$A & $B |- $X");
  b.add("and_R", op, ab, {"$X |- $A", "$Y |- $B"}, "$X , $Y |- $A & $B");
  b.add("or_L", op, ab, {"$A |- $X", "$B |- $Y"}, "$A | $B |- $X , $Y");
  b.add("or_R", op, ab, {"$X |- $A , $B"}, "$X |- $A | $B");
  b.add("imp_L", op, ab, {"$X |- $A", "$B |- $Y"}, "$A -> $B |- $X > $Y");
  b.add("imp_R", op, ab, {"$X |- $A > $B"}, "$X |- $A -> $B");
  b.add("limp_L", op, ab, {"$B |- $Y", "$X |- $A"}, "$B <- $A |- $Y < $X");
  b.add("limp_R", op, ab, {"$Z |- $B < $A"}, "$Z |- $B <- $A");
  b.add("dimp_L", op, ab, {"$A > $B |- $Z"}, "$A >- $B |- $Z");
  b.add("dimp_R", op, ab, {"$A |- $X", "$Y |- $B"}, "$X > $Y |- $A >- $B");
  b.add("ldimp_L", op, ab, {"$B < $A |- $X"}, "$B -< $A |- $X");
  b.add("ldimp_R", op, ab, {"$Y |- $B", "$A |- $X"}, "$Y < $X |- $B -< $A");
}

std::vector<Schema> build() {
  Builder b;
  identity_and_cut(b);
  heterogeneous(b);
  actions(b);
  iteration(b);
  units(b);
  choice_and_composition(b);
  propositional(b);
  return std::move(b.rules);
}

}  // namespace

const std::vector<Schema>& catalog() {
  static const std::vector<Schema> rules = build();
  return rules;
}

const Schema* find_schema(std::string_view id) {
  static const std::unordered_map<std::string, const Schema*> index = [] {
    std::unordered_map<std::string, const Schema*> m;
    for (const auto& r : catalog()) m.emplace(r.id, &r);
    return m;
  }();
  auto it = index.find(std::string(id));
  return it == index.end() ? nullptr : it->second;
}

const Schema& schema(std::string_view id) {
  const Schema* s = find_schema(id);
  if (!s) throw Error(Errc::UnknownRule, "unknown rule '" + std::string(id) + "'");
  return *s;
}

// ---------------------------------------------------------------- matching

static bool binds(const Node& meta, const Term& t) {
  if (t->sort == Sort::Bad) return false;
  if (is_structural(meta.msort)) return lift(t->sort) == meta.msort;
  if (t->sort != meta.msort) return false;
  if (meta.atom_only) return is_atom(t) || (is_meta(t) && t->atom_only);
  return true;
}

bool match(const Term& pat, const Term& t, Subst& s) {
  if (pat->op == Op::Meta) {
    auto it = s.find(pat->name);
    if (it != s.end()) return equal(it->second, t);
    if (!binds(*pat, t)) return false;
    s.emplace(pat->name, t);
    return true;
  }
  if (pat->op != t->op || pat->name != t->name || pat->kids.size() != t->kids.size()) return false;
  for (std::size_t i = 0; i < pat->kids.size(); ++i)
    if (!match(pat->kids[i], t->kids[i], s)) return false;
  return true;
}

bool match(const Sequent& pat, const Sequent& t, Subst& s) {
  Subst trial = s;
  if (!match(pat.ant, t.ant, trial) || !match(pat.suc, t.suc, trial)) return false;
  s = std::move(trial);
  return true;
}

std::vector<Subst> match_conclusion(const Schema& r, const Sequent& s) {
  Subst sub;
  if (!match(r.conclusion, s, sub)) return {};
  return {sub};
}

Term instantiate(const Term& pat, const Subst& s) {
  if (pat->op == Op::Meta) {
    auto it = s.find(pat->name);
    if (it == s.end()) throw Error(Errc::BadMatch, "metavariable $" + pat->name + " is unbound");
    if (!binds(*pat, it->second))
      throw Error(Errc::Sort, "binding for $" + pat->name + " has sort " + sort_name(it->second->sort) +
                                  ", expected " + sort_name(pat->msort));
    return it->second;
  }
  if (pat->kids.empty()) return pat;
  std::vector<Term> kids;
  kids.reserve(pat->kids.size());
  for (const auto& k : pat->kids) kids.push_back(instantiate(k, s));
  return mk(pat->op, std::move(kids));
}

Sequent instantiate(const Sequent& pat, const Subst& s) { return {instantiate(pat.ant, s), instantiate(pat.suc, s)}; }

Term power(const Term& pi, int n) {
  if (n < 1) throw Error(Errc::Omega, "power needs n >= 1");
  Term out = pi;
  for (int i = 1; i < n; ++i) out = mk(Op::SSeq1, pi, out);
  return out;
}

Sequent omega_member(const Schema& r, const Subst& s, int n) {
  if (!r.is_omega()) throw Error(Errc::Omega, r.id + " is not an omega schema");
  auto it = s.find(r.omega_meta);
  if (it == s.end()) throw Error(Errc::BadMatch, "metavariable $" + r.omega_meta + " is unbound");
  Subst sn = s;
  sn[r.omega_meta] = power(it->second, n);
  return instantiate(r.premises[0], sn);
}

std::vector<Sequent> premises_of(const Schema& r, const Subst& s, int omega_bound) {
  std::vector<Sequent> out;
  if (r.is_omega()) {
    if (omega_bound < 1) throw Error(Errc::Omega, r.id + " needs an omega bound");
    for (int n = 1; n <= omega_bound; ++n) out.push_back(omega_member(r, s, n));
    return out;
  }
  for (const auto& p : r.premises) out.push_back(instantiate(p, s));
  return out;
}

std::string render_schema(const Schema& r) {
  std::string out;
  if (r.is_omega()) out += "{n >= 1} ";
  for (std::size_t i = 0; i < r.premises.size(); ++i) out += (i ? " ;; " : "") + render(r.premises[i]);
  out += r.invertible ? " == " : " -- ";
  out += render(r.conclusion);
  return out;
}

// ---------------------------------------------------------------- audit

namespace {

struct Occ {
  std::string name;
  Sort slot;  // lifted sort the context expects
  Pos pos;
  Sort msort;
  bool atom_only;
};

// Parametric occurrences: structural-sort metavariables reachable without
// entering an operational term.
void occurrences(const Term& t, Sort slot, Pos pos, std::vector<Occ>& out) {
  if (is_meta(t)) {
    if (is_structural(t->msort)) out.push_back({t->name, lift(slot), pos, t->msort, t->atom_only});
    return;
  }
  if (is_operational(t->sort)) return;
  const OpInfo& oi = info(t->op);
  for (int i = 0; i < oi.arity; ++i)
    occurrences(t->kids[i], oi.arg[i], oi.flip[i] ? flip(pos) : pos, out);
}

std::vector<Occ> occurrences(const Sequent& s) {
  std::vector<Occ> out;
  occurrences(s.ant, lift(s.ant->sort), Pos::Ant, out);
  occurrences(s.suc, lift(s.suc->sort), Pos::Suc, out);
  return out;
}

void collect_metas(const Term& t, std::set<std::string>& out) {
  if (is_meta(t)) out.insert(t->name);
  for (const auto& k : t->kids) collect_metas(k, out);
}

void collect_subterms(const Term& t, std::vector<Term>& out) {
  out.push_back(t);
  for (const auto& k : t->kids) collect_subterms(k, out);
}

bool occurs_in(const Term& needle, const Term& hay) {
  if (equal(needle, hay)) return true;
  for (const auto& k : hay->kids)
    if (occurs_in(needle, k)) return true;
  return false;
}

}  // namespace

bool ConditionReport::all_pass() const {
  for (const auto& [name, ok] : checks)
    if (!ok) return false;
  return true;
}

ConditionReport audit_schema(const Schema& r) {
  ConditionReport rep;
  rep.id = r.id;

  std::vector<Sequent> prems = r.premises;
  if (r.is_omega()) {
    Subst self;
    for (const auto& [name, d] : r.metas) self[name] = mk_meta(name, d.sort, d.atom_only);
    prems = {omega_member(r, self, 1), omega_member(r, self, 2)};
  }

  bool wf = is_type_uniform(r.conclusion);
  for (const auto& p : prems) wf = wf && is_type_uniform(p);
  rep.checks.push_back({"wf", wf});

  // C1: premise material reappears in the conclusion (cut formulas exempt).
  std::set<std::string> concl_metas;
  collect_metas(r.conclusion.ant, concl_metas);
  collect_metas(r.conclusion.suc, concl_metas);
  bool c1 = true;
  for (const auto& p : prems) {
    std::vector<Term> subs;
    collect_subterms(p.ant, subs);
    collect_subterms(p.suc, subs);
    for (const auto& t : subs) {
      if (is_meta(t)) {
        if (!concl_metas.count(t->name) && !(r.is_cut && !is_structural(t->msort))) {
          c1 = false;
          rep.notes.push_back("C1: $" + t->name + " does not occur in the conclusion");
        }
      } else if (is_operational(t->sort) && !r.is_cut) {
        if (!occurs_in(t, r.conclusion.ant) && !occurs_in(t, r.conclusion.suc)) {
          c1 = false;
          rep.notes.push_back("C1: operational term " + render(t) + " is lost");
        }
      }
    }
  }
  rep.checks.push_back({"C1", c1});

  std::vector<Occ> all;
  std::vector<Occ> concl_occ = occurrences(r.conclusion);
  for (const auto& p : prems) {
    auto o = occurrences(p);
    all.insert(all.end(), o.begin(), o.end());
  }
  std::set<std::string> in_premises;
  for (const auto& o : all) in_premises.insert(o.name);
  all.insert(all.end(), concl_occ.begin(), concl_occ.end());

  std::map<std::string, const Occ*> first;
  bool c2 = true, c2p = true, c4 = true;
  for (const auto& o : all) {
    auto [it, fresh] = first.emplace(o.name, &o);
    if (fresh) continue;
    const Occ& f = *it->second;
    if (f.msort != o.msort || f.atom_only != o.atom_only) c2 = false;
    if (f.slot != o.slot || lift(o.msort) != o.slot) c2p = false;
    if (f.pos != o.pos) {
      c4 = false;
      rep.notes.push_back("C4: $" + o.name + " occurs in both antecedent and succedent position");
    }
  }
  for (const auto& o : all)
    if (lift(o.msort) != o.slot) c2p = false;
  rep.checks.push_back({"C2", c2});
  rep.checks.push_back({"C'2", c2p});

  // C3: a premise parameter is congruent to at most one conclusion constituent.
  std::map<std::string, int> concl_count;
  for (const auto& o : concl_occ) ++concl_count[o.name];
  bool c3 = true;
  for (const auto& name : in_premises)
    if (concl_count[name] > 1) {
      c3 = false;
      rep.notes.push_back("C3: $" + name + " proliferates in the conclusion");
    }
  rep.checks.push_back({"C3", c3});
  rep.checks.push_back({"C4", c4});

  // C5: an introduced operational term is a whole side of the conclusion.
  bool c5 = true;
  for (const auto& e : substructures(r.conclusion)) {
    if (e.path.size() > 1 && introduced(e.term)) {
      c5 = false;
      rep.notes.push_back("C5: " + render(e.term) + " is not displayed");
    }
  }
  rep.checks.push_back({"C5", c5});

  if (r.is_cut) {
    bool c10 = r.premises.size() == 2 && is_type_uniform(r.premises[0]) && is_type_uniform(r.premises[1]) &&
               is_type_uniform(r.conclusion) && lift(r.premises[0].ant->sort) == lift(r.conclusion.ant->sort) &&
               lift(r.premises[1].suc->sort) == lift(r.conclusion.suc->sort) &&
               lift(r.premises[0].suc->sort) == lift(r.conclusion.ant->sort);
    rep.checks.push_back({"C10", c10});
  }
  return rep;
}

}  // namespace pdlmt
