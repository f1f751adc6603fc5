#include "slimcon/builtins.hpp"

#include <functional>

#include "slimcon/poset.hpp"

namespace slimcon {

namespace {

using F = Formula;

Term v(const std::string& name) { return Term::var(name); }
Term joinT(Term a, Term b) { return Term::app("join", {std::move(a), std::move(b)}); }

F leq(Term a, Term b) { return F::rel("<=", {std::move(a), std::move(b)}); }
F eq(Term a, Term b) { return F::eq(std::move(a), std::move(b)); }
F neq(Term a, Term b) { return F::lnot(eq(std::move(a), std::move(b))); }
F lt(Term a, Term b) { return F::land({leq(a, b), F::lnot(eq(a, b))}); }

// Fresh bound-variable names, unique across one builtin construction so that
// nesting never captures.
struct VarGen {
  int k = 0;
  std::string fresh(const std::string& base) { return base + std::to_string(++k); }
};

// y is join-irreducible: y has a strictly smaller element (y != 0) and y is
// not a join of two strictly smaller elements.
F jirF(const Term& y, VarGen& g) {
  auto w = g.fresh("w");
  auto a = g.fresh("a");
  auto b = g.fresh("b");
  return F::land({
      F::exists(w, lt(v(w), y)),
      F::forall(a, F::forall(b, F::implies(eq(y, joinT(v(a), v(b))),
                                           F::lor({eq(y, v(a)), eq(y, v(b))})))),
  });
}

// y is a maximal join-irreducible element.
F mjirMaxF(const Term& y, VarGen& g) {
  auto t = g.fresh("t");
  return F::land({
      jirF(y, g),
      F::forall(t, F::implies(F::land({leq(y, v(t)), jirF(v(t), g)}), eq(y, v(t)))),
  });
}

// rho_mjir(y, x): y in maxJir and y <= x. The y <= x gate comes first so the
// evaluator prunes before touching the join-irreducibility subformulas.
F mjirF(const Term& y, const Term& x, VarGen& g) {
  return F::land({leq(y, x), mjirMaxF(y, g)});
}

// rho_jir(y, x): y in Jir and y <= x.
F jirAtF(const Term& y, const Term& x, VarGen& g) {
  return F::land({leq(y, x), jirF(y, g)});
}

// z is a lower cover of u inside J(D): z < u with no join-irreducible
// strictly between. Callers establish that z and u are join-irreducible.
F jCoverF(const Term& z, const Term& u, VarGen& g) {
  auto w = g.fresh("w");
  return F::land({
      lt(z, u),
      F::lnot(F::exists(w, F::land({lt(z, v(w)), lt(v(w), u), jirF(v(w), g)}))),
  });
}

// Some join-irreducible is a common lower cover of u and w inside J(D). This
// cover form of the edge witness is what makes the Two-cover Property bite:
// the witness then has exactly the two endpoints as covers.
F commonJirCoverF(const Term& u, const Term& w, VarGen& g) {
  auto z = g.fresh("z");
  return F::exists(z, F::land({leq(v(z), u), leq(v(z), w), jirF(v(z), g),
                               jCoverF(v(z), u, g), jCoverF(v(z), w, g)}));
}

// rho*_edge(y1, y2, x): y1 and y2 are endpoints of an edge of the graph on
// maxJir restricted to the principal ideal of x.
F edgeF(const Term& y1, const Term& y2, const Term& x, VarGen& g) {
  auto z = g.fresh("z");
  return F::land({
      mjirF(y1, x, g),
      mjirF(y2, x, g),
      neq(y1, y2),
      F::exists(z, F::land({leq(v(z), y1), leq(v(z), y2), jirAtF(v(z), x, g),
                            jCoverF(v(z), y1, g), jCoverF(v(z), y2, g)})),
  });
}

// rho*_exists2(x): every vertex of that graph meets at least two edges.
F exists2F(const Term& x, VarGen& g) {
  auto y = g.fresh("y");
  auto y1 = g.fresh("y");
  auto y2 = g.fresh("y");
  return F::forall(
      y, F::implies(mjirF(v(y), x, g),
                    F::exists(y1, F::land({edgeF(v(y), v(y1), x, g),
                                           F::exists(y2, F::land({neq(v(y2), v(y1)),
                                                                  edgeF(v(y), v(y2), x, g)}))}))));
}

// rho*_atmost2(x): every vertex meets at most two edges, written with the
// explicit equality disjunction. The edge tests are curried so each
// quantifier level prunes before the next one opens.
F atmost2F(const Term& x, VarGen& g) {
  auto y = g.fresh("y");
  auto y1 = g.fresh("y");
  auto y2 = g.fresh("y");
  auto y3 = g.fresh("y");
  F distinctOrEq = F::lor({eq(v(y1), v(y2)), eq(v(y1), v(y3)), eq(v(y2), v(y3))});
  F inner3 = F::forall(y3, F::implies(edgeF(v(y), v(y3), x, g), std::move(distinctOrEq)));
  F inner2 = F::forall(y2, F::implies(edgeF(v(y), v(y2), x, g), std::move(inner3)));
  F inner1 = F::forall(y1, F::implies(edgeF(v(y), v(y1), x, g), std::move(inner2)));
  return F::forall(y, F::implies(mjirF(v(y), x, g), std::move(inner1)));
}

F eq2F(const Term& x, VarGen& g) { return F::land({exists2F(x, g), atmost2F(x, g)}); }

// Every join-irreducible below x lies below a maximal join-irreducible below
// x; on a distributive lattice this says x is the join of maxJir below x.
F joinOfMaxJirF(const Term& x, VarGen& g) {
  auto y = g.fresh("y");
  auto z = g.fresh("z");
  return F::forall(y, F::implies(jirAtF(v(y), x, g),
                                 F::exists(z, F::land({mjirF(v(z), x, g), leq(v(y), v(z))}))));
}

// rho_mcyclic(x): the graph on maxJir below x is nonempty with every vertex of
// degree exactly two, and x is the join of its vertices.
F mcyclicF(const Term& x, VarGen& g) {
  auto y = g.fresh("y");
  return F::land({
      F::exists(y, mjirF(v(y), x, g)),
      eq2F(x, g),
      joinOfMaxJirF(x, g),
  });
}

// V-set of x containing p and u.
F vsetF(const Term& p, const Term& u, const Term& x, VarGen& g) {
  return F::land({mjirF(p, x, g), mjirF(u, x, g), neq(p, u), commonJirCoverF(p, u, g)});
}

// (y0, y1, y2, y3) written in path order is a W-set of x: consecutive members
// share a join-irreducible lower bound, non-consecutive ones do not.
F wsetF(const Term& y0, const Term& y1, const Term& y2, const Term& y3, const Term& x,
        VarGen& g) {
  return F::land({
      mjirF(y0, x, g), mjirF(y1, x, g), mjirF(y2, x, g), mjirF(y3, x, g),
      neq(y0, y1), neq(y0, y2), neq(y0, y3), neq(y1, y2), neq(y1, y3), neq(y2, y3),
      commonJirCoverF(y0, y1, g),
      commonJirCoverF(y1, y2, g),
      commonJirCoverF(y2, y3, g),
      F::lnot(commonJirCoverF(y0, y2, g)),
      F::lnot(commonJirCoverF(y0, y3, g)),
      F::lnot(commonJirCoverF(y1, y3, g)),
  });
}

// {p, u1, u2, u3} is a W-set of x. Reversal symmetry lets p sit in the first
// or second path position without loss of generality.
F wmemF(const Term& p, const Term& u1, const Term& u2, const Term& u3, const Term& x,
        VarGen& g) {
  return F::lor({wsetF(p, u1, u2, u3, x, g), wsetF(u1, p, u2, u3, x, g)});
}

F sameSet3F(const Term& u1, const Term& u2, const Term& u3, const Term& w1, const Term& w2,
            const Term& w3) {
  auto among = [&](const Term& w) {
    return F::lor({eq(w, u1), eq(w, u2), eq(w, u3)});
  };
  return F::land({among(w1), among(w2), among(w3)});
}

// p lies in exactly one W-set of x (as a set). The mjir guards are implied by
// wmemF; they are stated separately so the quantifier loops prune early.
F uniqueWF(const Term& p, const Term& x, VarGen& g) {
  auto u1 = g.fresh("u");
  auto u2 = g.fresh("u");
  auto u3 = g.fresh("u");
  auto w1 = g.fresh("v");
  auto w2 = g.fresh("v");
  auto w3 = g.fresh("v");
  F sameSet = sameSet3F(v(u1), v(u2), v(u3), v(w1), v(w2), v(w3));
  F all3 = F::implies(wmemF(p, v(w1), v(w2), v(w3), x, g), std::move(sameSet));
  F all2 = F::forall(w3, F::implies(mjirF(v(w3), x, g), std::move(all3)));
  F all1 = F::forall(w2, F::implies(mjirF(v(w2), x, g), std::move(all2)));
  F uniqueness = F::forall(w1, F::implies(mjirF(v(w1), x, g), std::move(all1)));
  F core = F::land({wmemF(p, v(u1), v(u2), v(u3), x, g), std::move(uniqueness)});
  F ex3 = F::exists(u3, F::land({mjirF(v(u3), x, g), std::move(core)}));
  F ex2 = F::exists(u2, F::land({mjirF(v(u2), x, g), std::move(ex3)}));
  return F::exists(u1, F::land({mjirF(v(u1), x, g), std::move(ex2)}));
}

F noWF(const Term& p, const Term& x, VarGen& g) {
  auto u1 = g.fresh("u");
  auto u2 = g.fresh("u");
  auto u3 = g.fresh("u");
  F ex3 = F::exists(u3, F::land({mjirF(v(u3), x, g), wmemF(p, v(u1), v(u2), v(u3), x, g)}));
  F ex2 = F::exists(u2, F::land({mjirF(v(u2), x, g), std::move(ex3)}));
  return F::lnot(F::exists(u1, F::land({mjirF(v(u1), x, g), std::move(ex2)})));
}

// p lies in exactly one V-set of x.
F uniqueVF(const Term& p, const Term& x, VarGen& g) {
  auto u = g.fresh("u");
  auto w = g.fresh("w");
  return F::exists(u, F::land({vsetF(p, v(u), x, g),
                               F::forall(w, F::implies(vsetF(p, v(w), x, g), eq(v(w), v(u))))}));
}

// rho_vw(x): x is a VW-element. Each maximal join-irreducible below x either
// lies in exactly one W-set, or lies in no W-set and exactly one V-set. (The
// witness partitions of the decomposition theorem put four consecutive circle
// members into one W-set whose adjacent pairs are also V-sets, so W-set
// membership takes precedence over the V-set count.)
F vwF(const Term& x, VarGen& g) {
  auto w = g.fresh("w");
  auto p = g.fresh("p");
  F nonzero = F::exists(w, lt(v(w), x));
  F perElement = F::forall(
      p, F::implies(mjirF(v(p), x, g),
                    F::lor({uniqueWF(v(p), x, g),
                            F::land({noWF(v(p), x, g), uniqueVF(v(p), x, g)})})));
  return F::land({nonzero, joinOfMaxJirF(x, g), perElement});
}

// The Decomposable Cyclic Elements Property as a sentence: every multicyclic
// element is the join of two VW-elements whose principal ideals share no
// maximal join-irreducible.
F psiDcepF() {
  VarGen g;
  auto x = g.fresh("x");
  auto y = g.fresh("y");
  auto z = g.fresh("z");
  auto t = g.fresh("t");
  F noSharedMax = F::lnot(
      F::exists(t, F::land({mjirF(v(t), v(y), g), mjirF(v(t), v(z), g)})));
  F decomposition = F::exists(
      y, F::exists(z, F::land({eq(v(x), joinT(v(y), v(z))), vwF(v(y), g), vwF(v(z), g),
                               noSharedMax})));
  return F::forall(x, F::implies(mcyclicF(v(x), g), decomposition));
}

F lambdaF(int k) {
  if (k == -1) {
    // The identically false sentence EX x. (x = x & ~(x = x)).
    return F::exists("x", F::land({eq(v("x"), v("x")), F::lnot(eq(v("x"), v("x")))}));
  }
  if (k < 1) throw InvalidParameter("lambda requires k >= 1 or k = -1");
  std::vector<std::string> names;
  for (int i = 1; i <= k; ++i) names.push_back("x" + std::to_string(i));
  std::vector<F> distinct;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) distinct.push_back(neq(v(names[i]), v(names[j])));
  F body = distinct.empty() ? eq(v(names[0]), v(names[0])) : F::land(std::move(distinct));
  for (int i = k - 1; i >= 0; --i) body = F::exists(names[i], std::move(body));
  return body;
}

Term sumOf(const std::string& var, int occurrences) {
  Term t = v(var);
  for (int i = 1; i < occurrences; ++i) t = Term::app("+", {std::move(t), v(var)});
  return t;
}

F etaF(int k) {
  if (k < 1) throw InvalidParameter("eta requires k >= 1");
  return F::forall("x", F::exists("y", eq(sumOf("y", k), v("x"))));
}

F tauF(int k) {
  if (k < 1) throw InvalidParameter("tau requires k >= 1");
  return F::forall(
      "x", F::implies(eq(sumOf("x", k + 1), v("x")),
                      F::forall("y", eq(Term::app("+", {v("x"), v("y")}), v("y")))));
}

F alphaF(const Term& x, VarGen& g) {
  auto y = g.fresh("y");
  return F::forall(y, F::implies(leq(x, v(y)), leq(v(y), x)));
}

F betaF(const Term& x, VarGen& g) {
  auto y = g.fresh("y");
  return F::forall(y, F::implies(leq(v(y), x), leq(x, v(y))));
}

F delta1F() {
  VarGen g;
  auto x = g.fresh("x");
  F a = alphaF(v(x), g);
  F b = betaF(v(x), g);
  return F::forall(x, F::land({F::lor({a, b}), F::lnot(F::land({a, b}))}));
}

// Exactly two elements y satisfy cond(y).
F exactlyTwoF(VarGen& g, const std::function<F(const Term&)>& cond) {
  auto y1 = g.fresh("y");
  auto y2 = g.fresh("y");
  auto y3 = g.fresh("y");
  return F::exists(
      y1, F::exists(y2, F::land({neq(v(y1), v(y2)), cond(v(y1)), cond(v(y2)),
                                 F::forall(y3, F::implies(cond(v(y3)),
                                                          F::lor({eq(v(y3), v(y1)),
                                                                  eq(v(y3), v(y2))})))})));
}

F delta2F() {
  VarGen g;
  auto x = g.fresh("x");
  return F::forall(x, F::implies(alphaF(v(x), g), exactlyTwoF(g, [&](const Term& y) {
                                   return F::land({betaF(y, g), leq(y, v(x))});
                                 })));
}

F delta3F() {
  VarGen g;
  auto x = g.fresh("x");
  return F::forall(x, F::implies(betaF(v(x), g), exactlyTwoF(g, [&](const Term& y) {
                                   return F::land({alphaF(y, g), leq(v(x), y)});
                                 })));
}

// xi_m: no 2m elements form a subset order-isomorphic to the m-crown. The
// pattern constraints are interleaved with the quantifiers (each new variable
// is checked against all earlier ones immediately), so refutation search
// prunes instead of expanding all 2m quantifiers first.
F xiF(int m) {
  if (m < 2 || m > 12) throw InvalidParameter("xi requires 2 <= m <= 12");
  Poset k = crown(m);
  // Interleave maximal and minimal pattern elements: a_0, b_0, a_1, b_1, ...
  // so consecutive variables are comparable in the pattern.
  std::vector<int> order;
  for (int i = 0; i < m; ++i) {
    order.push_back(i);      // a_i
    order.push_back(m + i);  // b_i
  }
  std::vector<std::string> names(order.size());
  for (std::size_t t = 0; t < order.size(); ++t) names[t] = "x" + std::to_string(t + 1);
  // Build from innermost quantifier outwards; the innermost level always has
  // constraints because the interleaving makes m >= 2 give >= 4 variables.
  std::optional<F> body;
  for (int t = static_cast<int>(order.size()) - 1; t >= 0; --t) {
    std::vector<F> constraints;
    for (int s = 0; s < t; ++s) {
      const Term xs = v(names[s]);
      const Term xt = v(names[t]);
      constraints.push_back(k.leq(order[s], order[t]) ? leq(xs, xt) : F::lnot(leq(xs, xt)));
      constraints.push_back(k.leq(order[t], order[s]) ? leq(xt, xs) : F::lnot(leq(xt, xs)));
    }
    if (body) constraints.push_back(std::move(*body));
    F inner = constraints.empty() ? eq(v(names[t]), v(names[t])) : F::land(std::move(constraints));
    body = F::exists(names[t], std::move(inner));
  }
  return F::lnot(std::move(*body));
}

}  // namespace

const std::vector<BuiltinInfo>& builtinCatalog() {
  static const std::vector<BuiltinInfo> catalog = [] {
    Signature none{{}, {}};
    Signature ord = orderSignature();
    Signature lat = latticeSignature();
    Signature grp = groupSignature();
    std::vector<BuiltinInfo> c;
    c.push_back({"lambda", true, none, {}, "at least k distinct elements (k = -1: identically false)"});
    c.push_back({"lambda_false", false, none, {}, "the identically false sentence"});
    c.push_back({"eta", true, grp, {}, "every element is divisible by k"});
    c.push_back({"tau", true, grp, {}, "only the unit solves kx = 0"});
    c.push_back({"alpha", false, ord, {"x"}, "x is a maximal element"});
    c.push_back({"beta", false, ord, {"x"}, "x is a minimal element"});
    c.push_back({"delta1", false, ord, {}, "every element is maximal or minimal, not both"});
    c.push_back({"delta2", false, ord, {}, "each maximal element has exactly two minimals below"});
    c.push_back({"delta3", false, ord, {}, "each minimal element has exactly two maximals above"});
    c.push_back({"xi", true, ord, {}, "no subset is order-isomorphic to the m-crown"});
    c.push_back({"jir", false, lat, {"x", "y"}, "y is join-irreducible and y <= x"});
    c.push_back({"mjir", false, lat, {"x", "y"}, "y is a maximal join-irreducible and y <= x"});
    c.push_back({"rho_edge", false, lat, {"x", "y1", "y2"}, "edge of the maxJir graph below x"});
    c.push_back({"vset", false, lat, {"x", "y0", "y1"}, "{y0,y1} is a V-set of x"});
    c.push_back({"wset", false, lat, {"x", "y0", "y1", "y2", "y3"}, "W-set path of x"});
    c.push_back({"rho_exists2", false, lat, {"x"}, "every maxJir vertex below x has >= 2 edges"});
    c.push_back({"rho_atmost2", false, lat, {"x"}, "every maxJir vertex below x has <= 2 edges"});
    c.push_back({"rho_eq2", false, lat, {"x"}, "every maxJir vertex below x has exactly 2 edges"});
    c.push_back({"rho_mcyclic", false, lat, {"x"}, "x is a multicyclic element"});
    c.push_back({"vw", false, lat, {"x"}, "x is a VW-element"});
    c.push_back({"psi_dcep", false, lat, {}, "the Decomposable Cyclic Elements Property"});
    return c;
  }();
  return catalog;
}

Formula builtinFormula(const std::string& name, std::optional<int> param) {
  auto requireParam = [&]() {
    if (!param) throw InvalidParameter("builtin " + name + " needs a parameter");
    return *param;
  };
  auto noParam = [&]() {
    if (param) throw InvalidParameter("builtin " + name + " takes no parameter");
  };

  if (name == "lambda") return lambdaF(requireParam());
  if (name == "lambda_false") {
    noParam();
    return lambdaF(-1);
  }
  if (name == "eta") return etaF(requireParam());
  if (name == "tau") return tauF(requireParam());
  if (name == "alpha") {
    noParam();
    VarGen g;
    return alphaF(v("x"), g);
  }
  if (name == "beta") {
    noParam();
    VarGen g;
    return betaF(v("x"), g);
  }
  if (name == "delta1") {
    noParam();
    return delta1F();
  }
  if (name == "delta2") {
    noParam();
    return delta2F();
  }
  if (name == "delta3") {
    noParam();
    return delta3F();
  }
  if (name == "xi") return xiF(requireParam());

  VarGen g;
  if (name == "jir") {
    noParam();
    return jirAtF(v("y"), v("x"), g);
  }
  if (name == "mjir") {
    noParam();
    return mjirF(v("y"), v("x"), g);
  }
  if (name == "rho_edge") {
    noParam();
    return edgeF(v("y1"), v("y2"), v("x"), g);
  }
  if (name == "vset") {
    noParam();
    return vsetF(v("y0"), v("y1"), v("x"), g);
  }
  if (name == "wset") {
    noParam();
    return wsetF(v("y0"), v("y1"), v("y2"), v("y3"), v("x"), g);
  }
  if (name == "rho_exists2") {
    noParam();
    return exists2F(v("x"), g);
  }
  if (name == "rho_atmost2") {
    noParam();
    return atmost2F(v("x"), g);
  }
  if (name == "rho_eq2") {
    noParam();
    return eq2F(v("x"), g);
  }
  if (name == "rho_mcyclic") {
    noParam();
    return mcyclicF(v("x"), g);
  }
  if (name == "vw") {
    noParam();
    return vwF(v("x"), g);
  }
  if (name == "psi_dcep") {
    noParam();
    return psiDcepF();
  }
  throw InvalidParameter("unknown builtin formula: " + name);
}

}  // namespace slimcon
