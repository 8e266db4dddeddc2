#!/usr/bin/env python3
"""Generates the DBL derivation corpus (corpus/*.json).

Propositions are tuples over the four core constructors; the Proof builder tracks
every step's sequent so rule applications compute their own conclusions. The C++
checker (`bayesext dbl check`) is the judge of validity.
"""

import json
import sys
from pathlib import Path

BOT = ("bot",)


def atom(name):
    return ("atom", name)


def imp(a, b):
    return ("impl", a, b)


def cond(a, b):
    return ("cond", a, b)


def neg(a):
    return imp(a, BOT)


TOP = neg(BOT)


def disj(a, b):
    return imp(neg(a), b)


def conj(a, b):
    return neg(disj(neg(a), neg(b)))


def iff(a, b):
    return conj(imp(a, b), imp(b, a))


def chain_imp(premises, goal):
    out = goal
    for p in reversed(premises):
        out = imp(p, out)
    return out


# Printer mirroring the C++ one: sugar restored, minimal parentheses.
IFF, IMPL, OR, AND, UNARY, ATOM = 1, 2, 3, 4, 5, 6


def as_neg(p):
    return p[1] if p[0] == "impl" and p[2] == BOT else None


def as_disj(p):
    if p[0] != "impl":
        return None
    a = as_neg(p[1])
    return None if a is None else (a, p[2])


def as_conj(p):
    inner = as_neg(p)
    if inner is None:
        return None
    d = as_disj(inner)
    if d is None:
        return None
    a, b = as_neg(d[0]), as_neg(d[1])
    return None if a is None or b is None else (a, b)


def as_iff(p):
    c = as_conj(p)
    if c is None or c[0][0] != "impl" or c[1][0] != "impl":
        return None
    f, s = c
    if f[1] == s[2] and f[2] == s[1]:
        return (f[1], f[2])
    return None


def render(p):
    kind = p[0]
    if kind == "bot":
        return "F", ATOM
    if kind == "atom":
        return p[1], ATOM
    if kind == "cond":
        return "[" + text(p[1], 0) + "]" + text(p[2], UNARY), UNARY
    if p == TOP:
        return "T", ATOM
    e = as_iff(p)
    if e:
        return text(e[0], IFF + 1) + " <-> " + text(e[1], IFF + 1), IFF
    c = as_conj(p)
    if c:
        return text(c[0], AND) + " & " + text(c[1], AND + 1), AND
    n = as_neg(p)
    if n is not None:
        return "~" + text(n, UNARY), UNARY
    d = as_disj(p)
    if d:
        return text(d[0], OR) + " | " + text(d[1], OR + 1), OR
    return text(p[1], IMPL + 1) + " -> " + text(p[2], IMPL), IMPL


def text(p, min_prec):
    s, prec = render(p)
    return "(" + s + ")" if prec < min_prec else s


def show(p):
    return render(p)[0]


def show_seq(seq):
    return " || ".join(show(p) for p in seq)


def remove_one(seq, member):
    out = list(seq)
    out.remove(member)
    return out


class Proof:
    def __init__(self, name, description):
        self.name = name
        self.description = description
        self.steps = []

    def _add(self, rule, conclusion, premises=()):
        self.steps.append({"rule": rule, "premises": list(premises), "conclusion": list(conclusion)})
        return len(self.steps)

    def seq(self, i):
        return self.steps[i - 1]["conclusion"]

    # Rules -------------------------------------------------------------------
    def hyp(self, *members):
        return self._add("HYP", members)

    def taut(self, p):
        return self._add("TAUT", [p])

    def ax(self, rule, p):
        return self._add(rule, [p])

    def mp(self, minor, major, x=None):
        """Modus ponens: member x of `minor`, member x -> y of `major`."""
        for m in self.seq(major):
            if m[0] != "impl":
                continue
            if x is not None and m[1] != x:
                continue
            if m[1] in self.seq(minor):
                out = remove_one(self.seq(minor), m[1]) + remove_one(self.seq(major), m) + [m[2]]
                return self._add("MP", out, [minor, major])
        raise ValueError(f"{self.name}: MP mismatch between steps {minor} and {major}")

    def mw(self, i, p):
        return self._add("mW", self.seq(i) + [p], [i])

    def contract(self, i):
        """Applies mC until no member is repeated."""
        while True:
            seq = self.seq(i)
            dup = next((m for k, m in enumerate(seq) if m in seq[:k]), None)
            if dup is None:
                return i
            i = self._add("mC", remove_one(seq, dup), [i])

    def infcond(self, i, member):
        """From G || X -> Y infer G || ~X || [X]Y."""
        x, y = member[1], member[2]
        return self._add("AxInfCond", remove_one(self.seq(i), member) + [neg(x), cond(x, y)], [i])

    def ind(self, first, second, x, y, z):
        """From G || Y <-> ~X and G || [X]Z <-> Z infer G || [Y]Z <-> Z."""
        gamma = remove_one(self.seq(first), iff(y, neg(x)))
        return self._add("AxInd", gamma + [iff(cond(y, z), z)], [first, second])

    # Derived patterns --------------------------------------------------------
    def weaken(self, i, members):
        for m in members:
            i = self.mw(i, m)
        return i

    def combine(self, premises, goal):
        """From steps holding members m1..mk derive goal via TAUT m1 -> ... -> goal and MP."""
        step = self.taut(chain_imp([m for _, m in premises], goal))
        for (i, m) in premises:
            step = self.mp(i, step, m)
        return self.contract(step)

    def full_universe_chain(self, x, y):
        """|- X -> ([X]Y <-> Y)"""
        a1 = self.ax("AxCondInf", imp(cond(x, y), imp(x, y)))
        a2 = self.ax("AxCondInf", imp(cond(x, neg(y)), imp(x, neg(y))))
        a3 = self.ax("AxNeg", iff(cond(x, neg(y)), neg(cond(x, y))))
        return self.combine(
            [(a1, self.seq(a1)[0]), (a2, self.seq(a2)[0]), (a3, self.seq(a3)[0])],
            imp(x, iff(cond(x, y), y)),
        )

    def empty_universe(self, i, x, y):
        """Step i holds G || ~X; derive G || [X]Y <-> Y."""
        c = self.full_universe_chain(neg(x), y)
        s = self.mp(i, c, neg(x))
        gamma = remove_one(self.seq(s), iff(cond(neg(x), y), y))
        p = self.weaken(self.taut(iff(x, neg(neg(x)))), gamma)
        return self.ind(p, s, neg(x), x, y)

    def necessitate(self, i, a, x):
        """Step i holds G || A; derive G || [X]A."""
        gamma = remove_one(self.seq(i), a)
        s = self.mp(i, self.taut(imp(a, imp(x, a))), a)
        s = self.infcond(s, imp(x, a))
        s = self.empty_universe(s, x, a)  # G || [X]A || [X]A <-> A
        u = self.mp(i, self.taut(imp(a, imp(iff(cond(x, a), a), cond(x, a)))), a)
        v = self.mp(s, u, iff(cond(x, a), a))
        v = self.contract(v)
        assert sorted(map(repr, self.seq(v))) == sorted(map(repr, gamma + [cond(x, a)])), self.name
        return v

    def cond_impl(self, x, y, z):
        """|- [X](Y -> Z) <-> ([X]Y -> [X]Z)"""
        k = cond(x, imp(y, z))
        t1 = self.taut(imp(neg(y), imp(y, z)))
        n1 = self.necessitate(t1, self.seq(t1)[0], x)
        k1 = self.ax("AxK", imp(cond(x, imp(neg(y), imp(y, z))), imp(cond(x, neg(y)), k)))
        from_not_y = self.mp(n1, k1)
        t2 = self.taut(imp(z, imp(y, z)))
        n2 = self.necessitate(t2, self.seq(t2)[0], x)
        k2 = self.ax("AxK", imp(cond(x, imp(z, imp(y, z))), imp(cond(x, z), k)))
        from_z = self.mp(n2, k2)
        negation = self.ax("AxNeg", iff(cond(x, neg(y)), neg(cond(x, y))))
        axk = self.ax("AxK", imp(k, imp(cond(x, y), cond(x, z))))
        return self.combine(
            [(s, self.seq(s)[0]) for s in (from_not_y, from_z, negation, axk)],
            iff(k, imp(cond(x, y), cond(x, z))),
        )

    def cond_neg(self, x, y):
        s = self.ax("AxNeg", iff(cond(x, neg(y)), neg(cond(x, y))))
        return s, self.seq(s)[0]

    def cond_or(self, x, y, z):
        """|- [X](Y | Z) <-> ([X]Y | [X]Z)"""
        d = self.cond_impl(x, neg(y), z)
        n = self.cond_neg(x, y)
        return self.combine(
            [(d, self.seq(d)[0]), n], iff(cond(x, disj(y, z)), disj(cond(x, y), cond(x, z)))
        )

    def cond_and(self, x, y, z):
        """|- [X](Y & Z) <-> ([X]Y & [X]Z)"""
        inner = imp(neg(neg(y)), neg(z))  # Y & Z is ~inner
        n0 = self.cond_neg(x, inner)
        d = self.cond_impl(x, neg(neg(y)), neg(z))
        n1 = self.cond_neg(x, neg(y))
        n2 = self.cond_neg(x, y)
        n3 = self.cond_neg(x, z)
        return self.combine(
            [n0, (d, self.seq(d)[0]), n1, n2, n3],
            iff(cond(x, conj(y, z)), conj(cond(x, y), cond(x, z))),
        )

    def cond_iff(self, x, y, z):
        """|- [X](Y <-> Z) <-> ([X]Y <-> [X]Z)"""
        a, b = imp(y, z), imp(z, y)
        inner = imp(neg(neg(a)), neg(b))
        n0 = self.cond_neg(x, inner)
        d0 = self.cond_impl(x, neg(neg(a)), neg(b))
        n1 = self.cond_neg(x, neg(a))
        n2 = self.cond_neg(x, a)
        n3 = self.cond_neg(x, b)
        d1 = self.cond_impl(x, y, z)
        d2 = self.cond_impl(x, z, y)
        return self.combine(
            [n0, (d0, self.seq(d0)[0]), n1, n2, n3, (d1, self.seq(d1)[0]), (d2, self.seq(d2)[0])],
            iff(cond(x, iff(y, z)), iff(cond(x, y), cond(x, z))),
        )

    def right_equivalence(self, i, x, y, z):
        """Step i holds G || Y <-> Z; derive G || [X]Y <-> [X]Z."""
        n = self.necessitate(i, iff(y, z), x)
        d = self.cond_iff(x, y, z)
        return self.combine([(n, cond(x, iff(y, z))), (d, self.seq(d)[0])], iff(cond(x, y), cond(x, z)))

    def conditional_inference(self, x, y):
        """|- (X & [X]Y) <-> (X & Y)"""
        a1 = self.ax("AxCondInf", imp(cond(x, y), imp(x, y)))
        a2 = self.ax("AxCondInf", imp(cond(x, neg(y)), imp(x, neg(y))))
        a3 = self.cond_neg(x, y)
        return self.combine(
            [(a1, self.seq(a1)[0]), (a2, self.seq(a2)[0]), a3],
            iff(conj(x, cond(x, y)), conj(x, y)),
        )

    def introspection(self, x):
        """|- ~X || [X]X"""
        t = self.taut(imp(x, x))
        return self.infcond(t, imp(x, x))

    def idempotence(self, x, y):
        """|- [X][X]Y <-> [X]Y"""
        ci = self.conditional_inference(x, y)
        re = self.right_equivalence(ci, x, conj(x, cond(x, y)), conj(x, y))
        a1 = self.cond_and(x, x, cond(x, y))
        a2 = self.cond_and(x, x, y)
        target = iff(cond(x, cond(x, y)), cond(x, y))
        core = self.combine(
            [(re, self.seq(re)[0]), (a1, self.seq(a1)[0]), (a2, self.seq(a2)[0])],
            imp(cond(x, x), target),
        )
        intro = self.introspection(x)
        s = self.mp(intro, core, cond(x, x))  # ~X || target
        s = self.empty_universe(s, x, cond(x, y))  # target || target
        return self.contract(s)


G, X, Y, Z, W = (atom(n) for n in "GXYZW")


def build_corpus():
    proofs = []

    def new(name, description):
        p = Proof(name, description)
        proofs.append(p)
        return p

    p = new("full_universe", "From G || X derive G || [X]Y <-> Y.")
    h = p.hyp(G, X)
    p.mp(h, p.full_universe_chain(X, Y), X)

    p = new("full_universe_top", "[T]Y <-> Y.")
    t = p.taut(TOP)
    p.mp(t, p.full_universe_chain(TOP, Y), TOP)

    p = new("empty_universe", "From G || ~X derive G || [X]Y <-> Y.")
    p.empty_universe(p.hyp(G, neg(X)), X, Y)

    p = new("empty_universe_bot", "[F]Y <-> Y.")
    p.empty_universe(p.taut(neg(BOT)), BOT, Y)

    p = new("trivial_universe", "From G || X || ~X derive G || [X]Y <-> Y.")
    h = p.hyp(G, X, neg(X))
    s = p.mp(h, p.full_universe_chain(X, Y), X)  # G || ~X || [X]Y <-> Y
    s = p.empty_universe(s, X, Y)
    p.contract(s)

    p = new("tautology_under_condition", "From G || Y derive G || [X]Y.")
    p.necessitate(p.hyp(G, Y), Y, X)

    p = new("tautology_under_condition_neg", "From G || ~Y derive G || ~[X]Y.")
    n = p.necessitate(p.hyp(G, neg(Y)), neg(Y), X)
    p.combine([(n, cond(X, neg(Y))), p.cond_neg(X, Y)], neg(cond(X, Y)))

    p = new("contradiction", "[X]F is never true: ~[X]F.")
    n = p.necessitate(p.taut(TOP), TOP, X)
    p.combine([(n, cond(X, TOP)), p.cond_neg(X, BOT)], neg(cond(X, BOT)))

    p = new("conditional_distributes_impl", "[X](Y -> Z) <-> ([X]Y -> [X]Z).")
    p.cond_impl(X, Y, Z)

    p = new("conditional_distributes_and", "[X](Y & Z) <-> ([X]Y & [X]Z).")
    p.cond_and(X, Y, Z)

    p = new("conditional_distributes_or", "[X](Y | Z) <-> ([X]Y | [X]Z).")
    p.cond_or(X, Y, Z)

    p = new("conditional_distributes_iff", "[X](Y <-> Z) <-> ([X]Y <-> [X]Z).")
    p.cond_iff(X, Y, Z)

    p = new("right_equivalence", "From G || Y <-> Z derive G || [X]Y <-> [X]Z.")
    p.right_equivalence(p.hyp(G, iff(Y, Z)), X, Y, Z)

    p = new("conditional_inference", "(X & [X]Y) <-> (X & Y).")
    p.conditional_inference(X, Y)

    p = new("introspection", "~X || [X]X.")
    p.introspection(X)

    p = new("idempotence", "[X][X]Y <-> [X]Y.")
    p.idempotence(X, Y)

    p = new("left_equivalence", "From G || W <-> X and G || Y <-> Z derive G || [W]Y <-> [X]Z.")
    h1 = p.hyp(G, iff(W, X))
    h2 = p.hyp(G, iff(Y, Z))
    xy = cond(X, Y)
    # G || [~W][X]Y <-> [X]Y, then G || [W][X]Y <-> [X]Y
    nw = p.combine([(h1, iff(W, X))], iff(neg(W), neg(X)))
    idem_x = p.idempotence(X, Y)
    idem_x = p.weaken(idem_x, [G])
    s = p.ind(nw, idem_x, X, neg(W), xy)
    ww = p.weaken(p.taut(iff(W, neg(neg(W)))), [G])
    wxy = p.ind(ww, s, neg(W), W, xy)  # G || [W][X]Y <-> [X]Y
    # G || (W & [X]Y) <-> (W & [W]Y)
    ci_x = p.conditional_inference(X, Y)
    ci_w = p.conditional_inference(W, Y)
    a, b = conj(W, xy), conj(W, cond(W, Y))
    eq = p.combine([(h1, iff(W, X)), (ci_x, p.seq(ci_x)[0]), (ci_w, p.seq(ci_w)[0])], iff(a, b))
    n = p.necessitate(eq, iff(a, b), W)
    d = p.cond_iff(W, a, b)
    da = p.cond_and(W, W, xy)
    db = p.cond_and(W, W, cond(W, Y))
    idem_w = p.idempotence(W, Y)
    r = iff(cond(W, Y), xy)
    core = p.combine(
        [(n, cond(W, iff(a, b))), (d, p.seq(d)[0]), (da, p.seq(da)[0]), (db, p.seq(db)[0]),
         (idem_w, p.seq(idem_w)[0]), (wxy, iff(cond(W, xy), xy))],
        imp(cond(W, W), r),
    )
    s = p.mp(p.introspection(W), core, cond(W, W))  # G || ~W || R
    # When ~W: [W]Y <-> Y, and ~X so [X]Y <-> Y.
    nx = p.combine([(s, neg(W)), (h1, iff(W, X))], neg(X))  # G || R || ~X
    ex = p.empty_universe(nx, X, Y)  # G || R || [X]Y <-> Y
    ew = p.empty_universe(s, W, Y)  # G || R || [W]Y <-> Y
    left = p.combine([(ew, iff(cond(W, Y), Y)), (ex, iff(xy, Y))], r)  # G || R
    right = p.right_equivalence(h2, X, Y, Z)  # G || [X]Y <-> [X]Z
    p.combine([(left, r), (right, iff(xy, cond(X, Z)))], iff(cond(W, Y), cond(X, Z)))

    p = new("introspection_fixpoint", "From G || [X]X <-> X derive G || ~X || X.")
    h = p.hyp(G, iff(cond(X, X), X))
    p.combine([(p.introspection(X), cond(X, X)), (h, iff(cond(X, X), X))], X)

    p = new("independent_implication", "From G || [X]Y <-> Y and G || X -> Y derive G || ~X || Y.")
    h1 = p.hyp(G, iff(cond(X, Y), Y))
    h2 = p.hyp(G, imp(X, Y))
    s = p.infcond(h2, imp(X, Y))
    p.combine([(s, cond(X, Y)), (h1, iff(cond(X, Y), Y))], Y)

    p = new("independent_disjunction", "From G || [X]Y <-> Y and G || X | Y derive G || X || Y.")
    h1 = p.hyp(G, iff(cond(X, Y), Y))
    h2 = p.hyp(G, disj(X, Y))
    same = p.weaken(p.taut(iff(neg(X), neg(X))), [G])
    nxy = p.ind(same, h1, X, neg(X), Y)  # G || [~X]Y <-> Y
    s = p.infcond(h2, disj(X, Y))  # G || ~~X || [~X]Y
    s = p.combine([(s, cond(neg(X), Y)), (nxy, iff(cond(neg(X), Y), Y))], Y)
    p.combine([(s, neg(neg(X)))], X)

    p = new("independent_factor",
            "From G || (X & Y) -> (X & Z), G || [X]Y <-> Y and G || [X]Z <-> Z derive G || ~X || Y -> Z.")
    h1 = p.hyp(G, imp(conj(X, Y), conj(X, Z)))
    h2 = p.hyp(G, iff(cond(X, Y), Y))
    h3 = p.hyp(G, iff(cond(X, Z), Z))
    s = p.combine([(h1, imp(conj(X, Y), conj(X, Z)))], imp(X, imp(Y, Z)))
    s = p.infcond(s, imp(X, imp(Y, Z)))
    d = p.cond_impl(X, Y, Z)
    p.combine(
        [(s, cond(X, imp(Y, Z))), (d, p.seq(d)[0]), (h2, iff(cond(X, Y), Y)), (h3, iff(cond(X, Z), Z))],
        imp(Y, Z),
    )
    return proofs


def to_json(proof):
    steps = []
    for s in proof.steps:
        out = {"rule": s["rule"]}
        if s["premises"]:
            out["premises"] = s["premises"]
        out["conclusion"] = show_seq(s["conclusion"])
        steps.append(out)
    return {
        "name": proof.name,
        "description": proof.description,
        "proves": show_seq(proof.steps[-1]["conclusion"]),
        "steps": steps,
    }


def main():
    out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "corpus"
    out_dir.mkdir(parents=True, exist_ok=True)
    for proof in build_corpus():
        path = out_dir / f"{proof.name}.json"
        path.write_text(json.dumps(to_json(proof), indent=1) + "\n")
        print(f"{path.name}: {len(proof.steps)} steps, proves {show_seq(proof.steps[-1]['conclusion'])}")


if __name__ == "__main__":
    main()
