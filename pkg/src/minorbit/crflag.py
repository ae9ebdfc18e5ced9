"""Core decision machinery for minimal orbits: parabolic root data Q_Phi,
characteristic real roots, exact Levi matrices, the common kernel set K_Phi,
finite type, the root-chain sufficient condition, and the authoritative
bracket-module span decision in the real form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .chevalley import StructureConstants, build_chevalley
from .exactla import DefinitenessClass, hermitian_classify
from .gaussq import QQi, I_POW
from .realform import Conjugation, SatakeDiagram, build_conjugation, find_form
from .rootsys import RootSystem, add


class SufficiencyViolation(RuntimeError):
    """The chain condition held but the span condition failed: impossible by
    the sufficiency theorem, so it signals an implementation bug."""


class FormContext:
    """Immutable bundle of the algebraic data of one catalog real form."""

    def __init__(self, diag: SatakeDiagram, gauge_seed: int | None = None):
        self.diag = diag
        self.rs: RootSystem = diag.root_system()
        sc = build_chevalley(self.rs)
        if gauge_seed is not None:
            sc = sc.sign_gauge(gauge_seed)
        self.sc: StructureConstants = sc
        self.conj: Conjugation = build_conjugation(diag, self.rs, sc)
        self.gauge_seed = gauge_seed
        self._nroots = len(self.rs.roots)
        self._sum_idx = {}
        for ia in range(self._nroots):
            for ib in range(self._nroots):
                s = add(self.rs.roots[ia], self.rs.roots[ib])
                si = self.rs.index.get(s)
                if si is not None:
                    self._sum_idx[(ia, ib)] = si

    def c(self, ia: int) -> int:
        return self.conj.c_index[ia]

    def negi(self, ia: int) -> int:
        return self.conj.neg_index[ia]

    def summed(self, ia: int, ib: int):
        return self._sum_idx.get((ia, ib))


_CTX_CACHE: dict = {}


def get_context(name: str, gauge_seed: int | None = None,
                max_rank: int = 8) -> FormContext:
    key = (name, gauge_seed)
    if key not in _CTX_CACHE:
        _CTX_CACHE[key] = FormContext(find_form(name, max_rank), gauge_seed)
    return _CTX_CACHE[key]


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ParabolicData:
    phi: frozenset          # 1-based simple indices
    Q: frozenset            # root indices
    Qn: frozenset
    Qr: frozenset
    Qbar: frozenset


def parabolic(ctx: FormContext, phi) -> ParabolicData:
    phi = frozenset(phi)
    rs = ctx.rs
    if not phi <= set(range(1, rs.rank + 1)):
        raise ValueError(f"phi {sorted(phi)} outside the simple basis")
    Q, Qn, Qr = set(), set(), set()
    for ia, r in enumerate(rs.roots):
        supp = {j + 1 for j, c in enumerate(r) if c}
        meets = bool(supp & phi)
        if sum(r) > 0:
            Q.add(ia)
            (Qn if meets else Qr).add(ia)
        else:
            if not meets:
                Q.add(ia)
                Qr.add(ia)
    Qbar = {ctx.c(ia) for ia in Q}
    return ParabolicData(phi, frozenset(Q), frozenset(Qn), frozenset(Qr),
                         frozenset(Qbar))


def characteristic_real_roots(ctx: FormContext, pd: ParabolicData) -> list[int]:
    """Positive real roots in Qn (automatically in conj(Qn))."""
    out = [ia for ia in sorted(pd.Qn) if ctx.c(ia) == ia]
    return out


# -- Levi matrices -----------------------------------------------------------


def _entry(ctx: FormContext, x: int, y: int, kpair: Fraction) -> QQi:
    # i * t_y * N(x, c(y)) * kappa(Z_g, Z_-g)
    nval = ctx.sc.n(x, ctx.c(y))
    return QQi(0, 1) * I_POW[ctx.conj.t_exp[y]] * nval * kpair


def levi_matrix(ctx: FormContext, pd: ParabolicData, gamma: int,
                mirrored: bool = False):
    """Hermitian Levi matrix of the real characteristic root `gamma`.

    Default convention: rows and columns indexed by conj(Q) \\ Q, entry at
    (x, y) iff x + conj(y) = -gamma.  The mirrored convention indexes
    Q \\ conj(Q) (the same covector, presented on the parabolic side); the
    two matrices are unitarily congruent and must classify identically.
    Returns (index list, matrix).
    """
    rs = ctx.rs
    if ctx.c(gamma) != gamma:
        raise ValueError("levi_matrix needs a real root")
    if gamma not in pd.Qn:
        raise ValueError("levi_matrix needs a characteristic root")
    if mirrored:
        index = sorted(pd.Q - pd.Qbar)
    else:
        index = sorted(pd.Qbar - pd.Q)
    target = ctx.negi(gamma)
    kpair = ctx.sc.killing_z_pair(gamma)
    pos = {ia: k for k, ia in enumerate(index)}
    n = len(index)
    m = [[QQi(0)] * n for _ in range(n)]
    tgt = rs.roots[target]
    for x in index:
        rest = tuple(t - v for t, v in zip(tgt, rs.roots[x]))
        if rest not in rs.index:
            continue
        y = ctx.c(rs.idx(rest))
        if y in pos:
            m[pos[x]][pos[y]] = _entry(ctx, x, y, kpair)
    return index, m


def q_form(ctx: FormContext, pd: ParabolicData, target: int):
    """Levi form on the parabolic subalgebra itself: rows and columns over Q,
    entry at (x, y) iff x + conj(y) = target (a real root, either sign).
    Support-restricted; used for the kernel-set test."""
    rs = ctx.rs
    rows = []
    tgt = rs.roots[target]
    for x in sorted(pd.Q):
        rest = tuple(t - v for t, v in zip(tgt, rs.roots[x]))
        if rest not in rs.index:
            continue
        y = ctx.c(rs.idx(rest))
        if y in pd.Q:
            rows.append((x, y))
    index = sorted({x for x, _ in rows} | {y for _, y in rows})
    pos = {ia: k for k, ia in enumerate(index)}
    kpair = ctx.sc.killing_z_pair(target)
    n = len(index)
    m = [[QQi(0)] * n for _ in range(n)]
    for x, y in rows:
        m[pos[x]][pos[y]] = _entry(ctx, x, y, kpair)
    return index, m


def structural_category(m) -> str:
    """The proof partition of Hermitian shapes by entry pattern."""
    n = len(m)
    diag = any(m[i][i] for i in range(n))
    off = any(m[i][j] for i in range(n) for j in range(n) if i != j)
    if not diag:
        return "zero-diagonal"
    if not off:
        cls = hermitian_classify(m)
        return "diagonal-semidefinite" if cls.is_semidefinite() else \
            "diagonal-indefinite"
    return "mixed"


def classify_levi(m) -> tuple[DefinitenessClass, str]:
    return hermitian_classify(m), structural_category(m)


# -- kernel set, finite type, reachability -----------------------------------


def k_phi(ctx: FormContext, pd: ParabolicData) -> frozenset:
    """Roots a in Q with Z_a in the common kernel of all semidefinite
    characteristic Levi forms: a + conj(a) not a root (imaginary counts as
    not a root), or -(a + conj(a)) outside Q, or the form at a + conj(a)
    indefinite."""
    rs = ctx.rs
    cls_cache: dict[int, DefinitenessClass] = {}

    def form_class(target: int) -> DefinitenessClass:
        if target not in cls_cache:
            _, m = q_form(ctx, pd, target)
            cls_cache[target] = hermitian_classify(m)
        return cls_cache[target]

    out = set()
    for a in pd.Q:
        ca = ctx.c(a)
        beta = ctx.summed(a, ca)
        if beta is None:
            out.add(a)
            continue
        if ctx.negi(beta) not in pd.Q:
            out.add(a)
            continue
        if form_class(beta) is DefinitenessClass.INDEFINITE:
            out.add(a)
    return frozenset(out)


def finite_type(ctx: FormContext, pd: ParabolicData) -> bool:
    """Root-addition closure of Q u conj(Q) covers all roots; stands in for
    the iterated-bracket finite type condition."""
    s = set(pd.Q) | set(pd.Qbar)
    frontier = list(s)
    while frontier:
        nxt = []
        for a in frontier:
            for b in list(s):
                t = ctx.summed(a, b)
                if t is not None and t not in s:
                    s.add(t)
                    nxt.append(t)
        frontier = nxt
    return len(s) == len(ctx.rs.roots)


def hlc_reachability(ctx: FormContext, pd: ParabolicData, kphi: frozenset,
                     gamma: int, toward_minus: bool = True) -> dict:
    """Breadth-first chain search: start at any root of conj(Q), repeatedly
    add elements of K u conj(K) staying inside the root set, reach -gamma
    (or +gamma).  Returns reached flag plus witness chain or a failure
    certificate."""
    rs = ctx.rs
    target = ctx.negi(gamma) if toward_minus else gamma
    moves = sorted(set(kphi) | {ctx.c(a) for a in kphi})
    start = sorted(pd.Qbar)
    parent: dict[int, tuple] = {a: (None, None) for a in start}
    frontier = list(start)
    while frontier and target not in parent:
        nxt = []
        for cur in frontier:
            for mv in moves:
                t = ctx.summed(cur, mv)
                if t is not None and t not in parent:
                    parent[t] = (cur, mv)
                    nxt.append(t)
        frontier = nxt
    if target in parent:
        chain = []
        cur = target
        while cur is not None:
            prev, mv = parent[cur]
            chain.append(mv if mv is not None else cur)
            cur = prev
        chain.reverse()
        return {"reached": True,
                "chain": [list(rs.roots[a]) for a in chain]}
    # certificate: a simple-root coordinate bounded below along every chain
    tgt = rs.roots[target]
    for j in range(rs.rank):
        if all(rs.roots[mv][j] >= 0 for mv in moves):
            lo = min(rs.roots[a][j] for a in start)
            if tgt[j] < lo:
                return {"reached": False,
                        "certificate": {"kind": "coefficient-bound",
                                        "coordinate": j + 1,
                                        "start_minimum": lo,
                                        "target_coefficient": tgt[j]}}
    return {"reached": False,
            "certificate": {"kind": "closure-exhausted",
                            "reachable_count": len(parent)}}


def verify_no_triples(ctx: FormContext) -> int:
    """Exhaustive scan for triples (a, b, g) with a+conj(a), b+conj(b),
    g+conj(g) all roots, a+conj(a) != b+conj(b), a+conj(b) = g+conj(g).
    Must return 0."""
    rs = ctx.rs
    B = [a for a in range(len(rs.roots)) if ctx.summed(a, ctx.c(a)) is not None]
    bar_sums = {}
    for g in B:
        bar_sums.setdefault(ctx.summed(g, ctx.c(g)), []).append(g)
    count = 0
    for a in B:
        sa = ctx.summed(a, ctx.c(a))
        for b in B:
            if ctx.summed(b, ctx.c(b)) == sa:
                continue
            t = ctx.summed(a, ctx.c(b))
            if t is not None and t in bar_sums:
                count += len(bar_sums[t])
    return count


# -- the span decision in the real form --------------------------------------


def _scale_integral(elt: dict) -> dict[int, tuple[int, int]]:
    den = 1
    for v in elt.values():
        den = den * v.re.denominator // math.gcd(den, v.re.denominator)
        den = den * v.im.denominator // math.gcd(den, v.im.denominator)
    return {k: (int(v.re * den), int(v.im * den)) for k, v in elt.items()}


class _BlockEchelon:
    """Echelon store for the span iteration, block-decomposed along the
    conjugation orbits {a, c(a), -a, -c(a)} (the full-torus isotypics), so
    every reduction happens in at most 8 integer coordinates."""

    def __init__(self, ctx: FormContext):
        self.ctx = ctx
        rk = ctx.rs.rank
        self.block_of_key = {}
        self.blocks: dict[tuple, list[int]] = {}
        for i in range(rk):
            self.block_of_key[i] = ("h",)
        for r in range(len(ctx.rs.roots)):
            orb = tuple(sorted({r, ctx.c(r), ctx.negi(r), ctx.negi(ctx.c(r))}))
            self.block_of_key[rk + r] = orb
            self.blocks.setdefault(orb, [rk + rr for rr in orb])
        self.blocks[("h",)] = list(range(rk))
        self.rows: dict[tuple, list[list[int]]] = {b: [] for b in self.blocks}
        self.dim = 0

    def _coords(self, block, comp: dict) -> list[int]:
        out = []
        for k in self.blocks[block]:
            a, b = comp.get(k, (0, 0))
            out.append(a)
            out.append(b)
        return out

    def insert(self, elt: dict) -> list[dict]:
        """Split into block components and insert each; returns the newly
        independent components as sparse QQi elements."""
        comps: dict[tuple, dict] = {}
        intelt = _scale_integral(elt)
        for k, ab in intelt.items():
            if ab != (0, 0):
                comps.setdefault(self.block_of_key[k], {})[k] = ab
        added = []
        for block, comp in comps.items():
            v = self._coords(block, comp)
            rows = self.rows[block]
            for row in rows:
                p = next(i for i, x in enumerate(row) if x)
                if v[p]:
                    f, g = row[p], v[p]
                    v = [x * f - y * g for x, y in zip(v, row)]
            if any(v):
                gg = 0
                for x in v:
                    gg = math.gcd(gg, x)
                v = [x // gg for x in v]
                p = next(i for i, x in enumerate(v) if x)
                if v[p] < 0:
                    v = [-x for x in v]
                rows.append(v)
                rows.sort(key=lambda r: next(i for i, x in enumerate(r) if x))
                self.dim += 1
                keys = self.blocks[block]
                added.append({keys[i // 2]: QQi(v[i], v[i + 1])
                              for i in range(0, len(v), 2)
                              if v[i] or v[i + 1]})
        return added


def t_module_span(ctx: FormContext, pd: ParabolicData,
                  kphi: frozenset) -> tuple[bool, list[int]]:
    """Decide whether the iterated bracket module of the kernel directions
    acting on the real parts of the parabolic spans the whole real form.

    Generators: for each basis Z of the kernel subalgebra (Cartan plus Z_a,
    a in K_Phi) the real-form elements Z + sigma(Z) and i(Z - sigma(Z)).
    Start space: the same construction over the whole parabolic.  Iterate
    T(h) = [generators, T(h-1)], accumulating to a fixpoint."""
    sc, conj, rs = ctx.sc, ctx.conj, ctx.rs
    rk = rs.rank

    def real_pair(elt: dict) -> list[dict]:
        s = conj.sigma(elt)
        u: dict[int, QQi] = {}
        for k in set(elt) | set(s):
            v = elt.get(k, QQi(0)) + s.get(k, QQi(0))
            if v:
                u[k] = v
        w: dict[int, QQi] = {}
        for k in set(elt) | set(s):
            v = QQi(0, 1) * (elt.get(k, QQi(0)) - s.get(k, QQi(0)))
            if v:
                w[k] = v
        return [x for x in (u, w) if x]

    gens: list[dict] = []
    for i in range(rk):
        gens.extend(real_pair({i: QQi(1)}))
    for a in sorted(kphi):
        gens.extend(real_pair({rk + a: QQi(1)}))

    ech = _BlockEchelon(ctx)
    worklist: list[dict] = []
    for i in range(rk):
        for e in real_pair({i: QQi(1)}):
            worklist.extend(ech.insert(e))
    for a in sorted(pd.Q):
        for e in real_pair({rk + a: QQi(1)}):
            worklist.extend(ech.insert(e))
    full = sc.dim
    dims = [ech.dim]
    while worklist and ech.dim < full:
        produced = []
        for x in worklist:
            for g in gens:
                w = sc.bracket(g, x)
                if w:
                    produced.extend(ech.insert(w))
        worklist = produced
        dims.append(ech.dim)
    return ech.dim == full, dims


# -- full pipeline ------------------------------------------------------------


@dataclass
class ConcavityVerdict:
    form: str
    phi: tuple
    finite_type: bool
    gammas: list            # (root, class name, structural category)
    k_phi: list             # root coefficient vectors
    mot_satisfied: bool
    mot_details: list       # per semidefinite gamma, both directions
    span_satisfied: bool
    span_dims: list
    verdict: bool
    annotation: str = ""
    gauge_seed: int | None = None

    def to_doc(self) -> dict:
        return {
            "form": self.form,
            "phi": sorted(self.phi),
            "finite_type": self.finite_type,
            "gammas": [{"root": g, "class": c, "category": cat}
                       for g, c, cat in self.gammas],
            "k_phi": self.k_phi,
            "mot_satisfied": self.mot_satisfied,
            "mot_details": self.mot_details,
            "span_satisfied": self.span_satisfied,
            "span_dims": self.span_dims,
            "verdict": self.verdict,
            "annotation": self.annotation,
            "gauge_seed": self.gauge_seed,
        }


def concavity_verdict(form: str, phi, gauge_seed: int | None = None,
                      check: str = "all", max_rank: int = 8) -> ConcavityVerdict:
    ctx = get_context(form, gauge_seed, max_rank)
    rs = ctx.rs
    pd = parabolic(ctx, phi)
    ft = finite_type(ctx, pd)
    kphi = k_phi(ctx, pd)

    gammas = []
    semidef = []
    for g in characteristic_real_roots(ctx, pd):
        _, m = levi_matrix(ctx, pd, g)
        cls, cat = classify_levi(m)
        gammas.append((list(rs.roots[g]), cls.value, cat))
        if cls.is_semidefinite():
            semidef.append(g)

    mot_details = []
    mot = True
    if check in ("mot", "all"):
        for g in semidef:
            res_minus = hlc_reachability(ctx, pd, kphi, g, toward_minus=True)
            res_plus = hlc_reachability(ctx, pd, kphi, g, toward_minus=False)
            mot_details.append({"kind": "real", "gamma": list(rs.roots[g]),
                                "toward_minus": res_minus,
                                "toward_plus": res_plus})
            if not res_minus["reached"]:
                mot = False
        # complex characteristic pairs whose Levi form vanishes identically
        # still span semidefinite (zero) covector directions; a chain must
        # reach one of the two conjugate targets for each such pair
        seen_pairs = set()
        for b in sorted(pd.Qn):
            cb = ctx.c(b)
            if cb == b or cb == ctx.negi(b) or b in seen_pairs:
                continue
            if cb not in pd.Qn:
                continue
            seen_pairs.add(b)
            seen_pairs.add(cb)
            _, mform = q_form(ctx, pd, ctx.negi(b))
            if any(x for row in mform for x in row):
                continue
            res_b = hlc_reachability(ctx, pd, kphi, b, toward_minus=True)
            res_cb = hlc_reachability(ctx, pd, kphi, cb, toward_minus=True)
            mot_details.append({"kind": "complex-zero-pair",
                                "beta": list(rs.roots[b]),
                                "toward_minus_beta": res_b,
                                "toward_minus_conj_beta": res_cb})
            if not (res_b["reached"] or res_cb["reached"]):
                mot = False
    else:
        mot = False

    span, dims = (True, [])
    if check in ("span", "all"):
        span, dims = t_module_span(ctx, pd, kphi)
    if check == "all" and mot and not span:
        raise SufficiencyViolation(f"{form} phi={sorted(set(phi))}: chain "
                                   f"condition held but span failed")

    authority = span if check in ("span", "all") else mot
    annotation = "orbit is a point (elliptic, empty cross set)" if not phi else ""
    return ConcavityVerdict(
        form=form,
        phi=tuple(sorted(set(phi))),
        finite_type=ft,
        gammas=gammas,
        k_phi=[list(rs.roots[a]) for a in sorted(kphi)],
        mot_satisfied=mot if check in ("mot", "all") else False,
        mot_details=mot_details,
        span_satisfied=span if check in ("span", "all") else False,
        span_dims=dims,
        verdict=ft and authority,
        annotation=annotation,
        gauge_seed=gauge_seed,
    )
