"""Chevalley basis {H_i} u {Z_a} for the complex semisimple Lie algebra of a
RootSystem: integer structure constants, brackets, adjoint matrices and the
Killing form, all exact.

Normalization: [H_a, Z_a] = 2 Z_a, [Z_a, Z_-a] = -H_a, and the linear map
H -> -H, Z_a -> Z_-a is an automorphism (so N(-a,-b) = N(a,b)).  Signs are
fixed by making N positive on extraspecial pairs in a standard basis and
transporting; any consistent sign gauge is equally valid and the sign_gauge
hook below re-randomizes it for robustness tests.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .gaussq import QQi, ZERO
from .rootsys import RootSystem, Root, add, neg

# basis keys: 0..rank-1 are H_1..H_rank, rank + r is Z_{roots[r]}


class StructureConstants:
    def __init__(self, rs: RootSystem, ntable: dict, coroots: list):
        self.rs = rs
        self.rank = rs.rank
        self.dim = rs.rank + len(rs.roots)
        self.ntable = ntable        # (ia, ib) -> int, for root pairs with a+b a root
        self.coroots = coroots      # per root index: integer vector over simple coroots
        self._killing_zz: dict[int, Fraction] = {}
        self._killing_hh: tuple | None = None

    # -- basis bracket -----------------------------------------------------
    def n(self, ia: int, ib: int) -> int:
        return self.ntable.get((ia, ib), 0)

    def bracket_basis(self, k1: int, k2: int) -> list[tuple[int, int]]:
        """[basis_k1, basis_k2] as a list of (key, integer coeff)."""
        rk, rs = self.rank, self.rs
        if k1 < rk and k2 < rk:
            return []
        if k1 < rk:  # [H_i, Z_b] = pairing(a_i, b) Z_b
            b = rs.roots[k2 - rk]
            c = sum(rs.cartan[k1][j] * b[j] for j in range(rk))
            return [(k2, c)] if c else []
        if k2 < rk:
            b = rs.roots[k1 - rk]
            c = sum(rs.cartan[k2][j] * b[j] for j in range(rk))
            return [(k1, -c)] if c else []
        ia, ib = k1 - rk, k2 - rk
        a, b = rs.roots[ia], rs.roots[ib]
        s = add(a, b)
        if all(x == 0 for x in s):
            # [Z_a, Z_-a] = -H_a
            return [(j, -c) for j, c in enumerate(self.coroots[ia]) if c]
        si = rs.index.get(s)
        if si is None:
            return []
        return [(rk + si, self.ntable[(ia, ib)])]

    # -- elements ------------------------------------------------------------
    def bracket(self, x: dict, y: dict) -> dict:
        """Bilinear bracket of sparse elements {key: QQi}."""
        out: dict[int, QQi] = {}
        for k1, c1 in x.items():
            if not c1:
                continue
            for k2, c2 in y.items():
                if not c2:
                    continue
                for k3, m in self.bracket_basis(k1, k2):
                    v = out.get(k3, ZERO) + c1 * c2 * m
                    if v:
                        out[k3] = v
                    elif k3 in out:
                        del out[k3]
        return out

    def h(self, i: int) -> dict:
        return {i: QQi(1)}

    def z(self, root) -> dict:
        return {self.rank + self.rs.idx(root): QQi(1)}

    # -- adjoint / killing -----------------------------------------------------
    def adjoint_matrix(self, x: dict) -> list[list[QQi]]:
        n = self.dim
        m = [[ZERO] * n for _ in range(n)]
        for k in range(n):
            col = self.bracket(x, {k: QQi(1)})
            for k3, v in col.items():
                m[k3][k] = v
        return m

    def _ad_sparse(self, k: int) -> dict[int, list[tuple[int, int]]]:
        out: dict[int, list[tuple[int, int]]] = {}
        for k2 in range(self.dim):
            img = self.bracket_basis(k, k2)
            if img:
                out[k2] = img
        return out

    def killing_hh(self) -> tuple:
        if self._killing_hh is None:
            rk, rs = self.rank, self.rs
            tab = [[Fraction(0)] * rk for _ in range(rk)]
            # kappa(H_i, H_j) = sum_b b(H_i) b(H_j)
            for i in range(rk):
                for j in range(rk):
                    tot = 0
                    for b in rs.roots:
                        bi = sum(rs.cartan[i][t] * b[t] for t in range(rk))
                        bj = sum(rs.cartan[j][t] * b[t] for t in range(rk))
                        tot += bi * bj
                    tab[i][j] = Fraction(tot)
            self._killing_hh = tuple(tuple(r) for r in tab)
        return self._killing_hh

    def killing_z_pair(self, ia: int) -> Fraction:
        """kappa(Z_a, Z_-a), cached; computed as an explicit adjoint trace."""
        if ia not in self._killing_zz:
            rs = self.rs
            ineg = rs.idx(neg(rs.roots[ia]))
            ad1 = self._ad_sparse(self.rank + ia)
            ad2 = self._ad_sparse(self.rank + ineg)
            tot = Fraction(0)
            for k in range(self.dim):
                for k2, c2 in ad2.get(k, ()):
                    for k3, c3 in ad1.get(k2, ()):
                        if k3 == k:
                            tot += c2 * c3
            self._killing_zz[ia] = tot
            self._killing_zz[ineg] = tot
        return self._killing_zz[ia]

    def killing(self, x: dict, y: dict) -> QQi:
        """trace(ad x . ad y), bilinear over the cached basis tables."""
        rk, rs = self.rank, self.rs
        tot = QQi(0)
        hh = self.killing_hh()
        for k1, c1 in x.items():
            for k2, c2 in y.items():
                if k1 < rk and k2 < rk:
                    tot = tot + c1 * c2 * hh[k1][k2]
                elif k1 >= rk and k2 >= rk:
                    a, b = rs.roots[k1 - rk], rs.roots[k2 - rk]
                    if add(a, b) == tuple([0] * rk):
                        tot = tot + c1 * c2 * self.killing_z_pair(k1 - rk)
        return tot

    # -- serialization ------------------------------------------------------------
    def ntable_json(self) -> str:
        """Canonical JSON dump of the bracket constant table."""
        import json
        rows = []
        for (ia, ib), v in sorted(self.ntable.items()):
            rows.append([list(self.rs.roots[ia]), list(self.rs.roots[ib]), v])
        return json.dumps({"n": rows}, sort_keys=True, separators=(",", ":"))

    # -- gauge ------------------------------------------------------------------
    def sign_gauge(self, seed: int) -> "StructureConstants":
        """New table with Z_a -> u_a Z_a, u_a = u_-a = +-1 random; a different
        but equally valid Chevalley basis (used by robustness tests)."""
        rng = random.Random(seed)
        rs = self.rs
        u = {}
        for r in rs.positives:
            s = 1 if rng.random() < 0.5 else -1
            u[rs.idx(r)] = s
            u[rs.idx(neg(r))] = s
        nt = {}
        for (ia, ib), v in self.ntable.items():
            s = add(rs.roots[ia], rs.roots[ib])
            nt[(ia, ib)] = u[ia] * u[ib] * u[rs.idx(s)] * v
        return StructureConstants(rs, nt, self.coroots)


def _coroot_vector(rs: RootSystem, root: Root) -> tuple[int, ...]:
    # coroot(a) = sum_i k_i * (a_i|a_i)/(a|a) * coroot(a_i)
    nn = rs.inner(root, root)
    out = []
    for i in range(rs.rank):
        c = Fraction(root[i]) * rs.gram[i][i] / nn
        assert c.denominator == 1
        out.append(int(c))
    return tuple(out)


def build_chevalley(rs: RootSystem) -> StructureConstants:
    """Structure constants via the extraspecial-pair recursion, then
    transported to the normalization [Z_a, Z_-a] = -H_a whose footprint is
    that H -> -H, Z_a -> Z_-a is an automorphism."""
    pos = rs.positives
    pos_set = {tuple(r) for r in pos}
    order = {tuple(r): k for k, r in enumerate(pos)}  # already (height, lex) sorted
    nn = {tuple(r): rs.inner(r, r) for r in rs.roots}

    def p_down(a, b):
        p = 0
        cur = tuple(x - y for x, y in zip(b, a))
        while cur in rs.index:
            p += 1
            cur = tuple(x - y for x, y in zip(cur, a))
        return p

    npos: dict[tuple[Root, Root], int] = {}

    def n_std(a, b):
        """n(a,b) for arbitrary roots with a+b a root, from the positive table."""
        s = add(a, b)
        if s not in rs.index:
            return 0
        if sum(a) > 0 and sum(b) > 0:
            v = npos.get((a, b))
            if v is None:
                v = -npos[(b, a)]
            return v
        if sum(a) < 0 and sum(b) < 0:
            return -n_std(neg(a), neg(b))
        # mixed signs: rotate the zero-sum triple (a, b, -s) to a same-sign pair
        # using N(a,b)/|c|^2 = N(b,c)/|a|^2 = N(c,a)/|b|^2
        c = neg(s)
        if (sum(b) > 0) == (sum(c) > 0):
            v = n_std(b, c)
            out = Fraction(v) * nn[s] / nn[a]
        else:
            v = n_std(c, a)
            out = Fraction(v) * nn[s] / nn[b]
        assert out.denominator == 1
        return int(out)

    # extraspecial pairs, processed by height of the sum
    for g in pos:
        if sum(g) == 1:
            continue
        es = None
        for a in pos:
            if order[a] >= order[g]:
                break
            b = tuple(x - y for x, y in zip(g, a))
            if b in pos_set and order[a] < order[b]:
                es = (a, b)
                break
        assert es is not None, f"no extraspecial pair for {g}"
        a1, b1 = es
        npos[(a1, b1)] = p_down(a1, b1) + 1
        npos[(b1, a1)] = -npos[(a1, b1)]
        # remaining special pairs for g via the four-root relation against (a1, b1)
        for a in pos:
            if order[a] <= order[a1] or order[a] >= order[g]:
                continue
            b = tuple(x - y for x, y in zip(g, a))
            if b not in pos_set or order[a] >= order[b]:
                continue
            # a + b - a1 - b1 = 0, no two opposite
            t2 = Fraction(0)
            if tuple(x - y for x, y in zip(b, a1)) in rs.index:
                t2 = Fraction(n_std(b, neg(a1)) * n_std(a, neg(b1))) / nn[tuple(x - y for x, y in zip(b, a1))]
            t3 = Fraction(0)
            if tuple(x - y for x, y in zip(a, a1)) in rs.index:
                t3 = Fraction(n_std(neg(a1), a) * n_std(b, neg(b1))) / nn[tuple(x - y for x, y in zip(a, a1))]
            val = nn[g] * (t2 + t3) / npos[(a1, b1)]
            assert val.denominator == 1, (g, a, b)
            v = int(val)
            assert v != 0
            npos[(a, b)] = v
            npos[(b, a)] = -v

    # full table in the target normalization: N(a,b) = e_a e_b e_{a+b} n(a,b)
    ntable: dict[tuple[int, int], int] = {}
    for a in rs.roots:
        for b in rs.roots:
            s = add(a, b)
            if s in rs.index and a != neg(b):
                ea = 1 if sum(a) > 0 else -1
                eb = 1 if sum(b) > 0 else -1
                es_ = 1 if sum(s) > 0 else -1
                ntable[(rs.idx(a), rs.idx(b))] = ea * eb * es_ * n_std(a, b)

    coroots = [_coroot_vector(rs, r) for r in rs.roots]
    return StructureConstants(rs, ntable, coroots)
