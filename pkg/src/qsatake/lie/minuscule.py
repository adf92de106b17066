"""Minuscule modules built from the weight poset.

For a minuscule highest weight every weight has multiplicity one and
<nu, alpha_i^vee> lies in {-1, 0, 1}.  With e_nu = X_{-alpha_i} e_{nu+alpha_i}
the simple root vectors act by 0/1 matrices: X_{-alpha_i} e_nu = e_{nu-alpha_i}
and X_{alpha_i} e_nu = e_{nu+alpha_i} whenever the target is a weight.
"""

from __future__ import annotations

from collections import deque
from typing import Dict, List, Optional, Tuple

import numpy as np

from .roots import RootSystem

Weight = Tuple[int, ...]  # Dynkin labels


class MinusculeModule:
    def __init__(self, rs: RootSystem, node: int = 1):
        self.rs = rs
        self.node = node
        if rs.highest_root[node - 1] != 1:
            raise ValueError("omega_%d is not minuscule for %s" % (node, rs.name))
        C = rs.cartan
        r = rs.rank
        top = tuple(1 if j == node - 1 else 0 for j in range(r))
        weights: List[Weight] = [top]
        depth = {top: 0}
        edges: List[Tuple[Weight, Weight, int]] = []
        queue = deque([top])
        while queue:
            nu = queue.popleft()
            for i in range(r):
                if nu[i] == 1:
                    mu = tuple(nu[j] - C[i][j] for j in range(r))
                    edges.append((nu, mu, i + 1))
                    if mu not in depth:
                        depth[mu] = depth[nu] + 1
                        weights.append(mu)
                        queue.append(mu)
                elif nu[i] not in (-1, 0):
                    raise ValueError("weight %s is not minuscule" % (nu,))
        weights.sort(key=lambda w: (depth[w], [-x for x in w]))
        self.weights = weights
        self.depth = depth
        self.edges = edges
        self.index: Dict[Weight, int] = {w: k for k, w in enumerate(weights)}
        N = len(weights)
        self.E: Dict[int, np.ndarray] = {}
        self.F: Dict[int, np.ndarray] = {}
        self.H: Dict[int, np.ndarray] = {}
        for i in range(1, r + 1):
            E = np.zeros((N, N), dtype=np.int64)
            F = np.zeros((N, N), dtype=np.int64)
            for hi, lo, lab in edges:
                if lab == i:
                    F[self.index[lo], self.index[hi]] = 1
                    E[self.index[hi], self.index[lo]] = 1
            self.E[i], self.F[i] = E, F
            self.H[i] = np.diag([w[i - 1] for w in weights]).astype(np.int64)
        self.check_relations()

    @property
    def dim(self) -> int:
        return len(self.weights)

    @property
    def highest(self) -> Weight:
        return self.weights[0]

    def check_relations(self) -> None:
        """Chevalley-Serre relations; they certify that the 0/1 matrices define
        a representation, i.e. that the basis e_nu does not depend on the path."""
        r = self.rs.rank
        C = self.rs.cartan

        def br(a, b):
            return a @ b - b @ a

        for i in range(1, r + 1):
            for j in range(1, r + 1):
                EF = br(self.E[i], self.F[j])
                if not (np.array_equal(EF, self.H[i]) if i == j else not np.any(EF)):
                    raise AssertionError("[E%d, F%d] relation fails" % (i, j))
                if not np.array_equal(br(self.H[i], self.E[j]), C[i - 1][j - 1] * self.E[j]):
                    raise AssertionError("[H%d, E%d] relation fails" % (i, j))
                if not np.array_equal(br(self.H[i], self.F[j]), -C[i - 1][j - 1] * self.F[j]):
                    raise AssertionError("[H%d, F%d] relation fails" % (i, j))
                if i != j:
                    for X in (self.E, self.F):
                        m = X[j]
                        for _ in range(1 - C[i - 1][j - 1]):
                            m = br(X[i], m)
                        if np.any(m):
                            raise AssertionError("Serre relation fails for (%d, %d)" % (i, j))

    # ------------------------------------------------------------ labels

    def step(self, nu: Weight, i: int) -> Optional[Weight]:
        """nu - alpha_i if that is again a weight (a step down the poset)."""
        if nu[i - 1] != 1:
            return None
        C = self.rs.cartan
        return tuple(nu[j] - C[i - 1][j] for j in range(self.rs.rank))

    def weight_of_word(self, word: str) -> Weight:
        """Weight reached from the highest weight by the simple reflections of a
        reduced word; the rightmost letter acts first."""
        nu = self.highest
        for ch in reversed(self.split_word(word)):
            nxt = self.step(nu, ch)
            if nxt is None:
                raise ValueError("%s is not a reduced word for this module" % word)
            nu = nxt
        return nu

    def split_word(self, word: str) -> List[int]:
        if self.rs.rank >= 10:
            raise ValueError("digit words need rank < 10")
        return [int(c) for c in word]

    def word(self, nu: Weight) -> str:
        """A reduced word for nu: climb back to the top, taking at each step the
        smallest simple root that keeps us in the poset."""
        letters = []
        C = self.rs.cartan
        r = self.rs.rank
        cur = nu
        while cur != self.highest:
            for i in range(1, r + 1):
                up = tuple(cur[j] + C[i - 1][j] for j in range(r))
                if up in self.index and self.depth[up] == self.depth[cur] - 1:
                    letters.append(i)
                    cur = up
                    break
            else:  # pragma: no cover - poset is connected
                raise AssertionError("no upward edge from %s" % (cur,))
        return "".join(str(i) for i in letters)

    def vector(self, coeffs: Dict[Weight, object]) -> np.ndarray:
        v = np.zeros(self.dim, dtype=object)
        for w, c in coeffs.items():
            v[self.index[w]] = c
        return v


def minuscule_module(rs: RootSystem, node: int = 1) -> MinusculeModule:
    return MinusculeModule(rs, node)
