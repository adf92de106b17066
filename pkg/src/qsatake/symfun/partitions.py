"""Partitions, strict partitions and border rims.

Partitions are plain tuples of positive integers in weakly decreasing
order; the empty tuple is the empty partition.  Rims are found on the
abacus: with beta numbers beta_i = lam_i + m - i, adding a rim of size l
moves one bead from x to x + l, and the rim height is the number of beads
strictly between the two positions.
"""

from __future__ import annotations

import re
from functools import lru_cache
from itertools import combinations
from typing import Iterator, List, Optional, Sequence, Tuple

Partition = Tuple[int, ...]

_PART_RE = re.compile(r"^\(\s*(\d+(\s*,\s*\d+)*)?\s*,?\s*\)$")


def normalize(parts: Sequence[int]) -> Partition:
    p = tuple(int(x) for x in parts if int(x) != 0)
    if any(x < 0 for x in p):
        raise ValueError("negative part in %r" % (parts,))
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError("parts must be weakly decreasing: %r" % (parts,))
    return p


def parse_partition(text: str) -> Partition:
    """Parse "(4,3,1)" or "()"; whitespace is ignored."""
    s = "".join(text.split())
    if not _PART_RE.match(s):
        col = next((i for i, ch in enumerate(s) if ch not in "0123456789,()"), len(s))
        raise ValueError("cannot parse partition %r near position %d" % (text, col))
    body = s[1:-1].strip(",")
    if not body:
        return ()
    return normalize(int(x) for x in body.split(","))


def format_partition(p: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in p) + ")"


def size(p: Sequence[int]) -> int:
    return sum(p)


def conjugate(p: Sequence[int]) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > j) for j in range(p[0]))


def in_box(p: Sequence[int], a: int, b: int) -> bool:
    return len(p) <= a and (not p or p[0] <= b)


def contains(big: Sequence[int], small: Sequence[int]) -> bool:
    if len(small) > len(big):
        return False
    return all(big[i] >= small[i] for i in range(len(small)))


@lru_cache(maxsize=None)
def partitions_of(n: int, max_part: Optional[int] = None) -> Tuple[Partition, ...]:
    """All partitions of n, in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_in_box(a: int, b: int) -> List[Partition]:
    """Partitions with at most a rows and b columns, ordered by size then reverse lex."""
    out = []
    for k in range(a * b + 1):
        out.extend(p for p in partitions_of(k, b) if len(p) <= a)
    return out


def strict_partitions(n: int) -> List[Partition]:
    """Strict partitions with parts in {1, ..., n - 1}, ordered by size then reverse lex."""
    subsets = []
    for k in range(n):
        subsets.extend(tuple(sorted(c, reverse=True)) for c in combinations(range(1, n), k))
    return sorted(subsets, key=lambda p: (sum(p), [-x for x in p]))


def strict_complement(p: Sequence[int], n: int) -> Partition:
    """Parts of {1, ..., n - 1} missing from p, as a strict partition."""
    s = set(p)
    return tuple(k for k in range(n - 1, 0, -1) if k not in s)


def _beta(p: Sequence[int], m: int) -> List[int]:
    padded = list(p) + [0] * (m - len(p))
    return [padded[i] + m - 1 - i for i in range(m)]


def _from_beta(beta: Sequence[int]) -> Partition:
    b = sorted(beta, reverse=True)
    m = len(b)
    return normalize([b[i] - (m - 1 - i) for i in range(m)])


def add_border_rims(lam: Sequence[int], size: int, box: Optional[Tuple[int, int]] = None
                    ) -> List[Tuple[Partition, int]]:
    """All (mu, height) with mu / lam a border rim of the given size.

    With ``box=(a, b)`` only shapes with at most a rows and b columns are kept.
    """
    if size < 1:
        raise ValueError("rim size must be positive")
    lam = normalize(lam)
    m = len(lam) + size
    beta = _beta(lam, m)
    occupied = set(beta)
    out = []
    for x in beta:
        y = x + size
        if y in occupied:
            continue
        height = sum(1 for z in beta if x < z < y)
        mu = _from_beta([y if z == x else z for z in beta])
        if box is None or in_box(mu, *box):
            out.append((mu, height))
    out.sort(key=lambda t: (t[1], [-v for v in t[0]]))
    return out


def remove_border_rims(lam: Sequence[int], size: int) -> List[Tuple[Partition, int]]:
    """All (nu, height) with lam / nu a border rim of the given size."""
    if size < 1:
        raise ValueError("rim size must be positive")
    lam = normalize(lam)
    m = len(lam)
    beta = _beta(lam, m)
    occupied = set(beta)
    out = []
    for x in beta:
        y = x - size
        if y < 0 or y in occupied:
            continue
        height = sum(1 for z in beta if y < z < x)
        out.append((_from_beta([y if z == x else z for z in beta]), height))
    out.sort(key=lambda t: (t[1], [-v for v in t[0]]))
    return out


def skew_cells(big: Sequence[int], small: Sequence[int]) -> List[Tuple[int, int]]:
    small = list(small) + [0] * (len(big) - len(small))
    return [(i, j) for i in range(len(big)) for j in range(small[i], big[i])]


def is_border_rim(big: Sequence[int], small: Sequence[int]) -> bool:
    """Connected skew shape with no 2x2 square (direct cell test)."""
    if not contains(big, small):
        return False
    cells = set(skew_cells(big, small))
    if not cells:
        return False
    for (i, j) in cells:
        if {(i + 1, j), (i, j + 1), (i + 1, j + 1)} <= cells:
            return False
    start = next(iter(cells))
    seen = {start}
    stack = [start]
    while stack:
        i, j = stack.pop()
        for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(cells)


def rim_height(big: Sequence[int], small: Sequence[int]) -> int:
    rows = {i for i, _ in skew_cells(big, small)}
    return len(rows) - 1


def is_horizontal_strip(big: Sequence[int], small: Sequence[int]) -> bool:
    if not contains(big, small) or len(big) > len(small) + 1:
        return False
    small = list(small) + [0] * (len(big) - len(small))
    return all(big[i + 1] <= small[i] for i in range(len(big) - 1))


def horizontal_strips(lam: Sequence[int], r: int, max_rows: Optional[int] = None,
                      max_cols: Optional[int] = None) -> Iterator[Partition]:
    """Partitions mu with mu / lam a horizontal strip of r cells."""
    lam = list(lam)
    rows = len(lam) + 1
    if max_rows is not None:
        rows = min(rows, max_rows)
    lam_p = lam + [0] * (rows - len(lam))

    def rec(i, left, acc):
        if i == rows:
            if left == 0:
                yield normalize(acc)
            return
        upper = lam_p[i - 1] if i > 0 else (max_cols if max_cols is not None else lam_p[0] + left)
        top = min(upper, lam_p[i] + left)
        for v in range(top, lam_p[i] - 1, -1):
            yield from rec(i + 1, left - (v - lam_p[i]), acc + [v])

    if max_rows is not None and len(lam) > max_rows:
        return
    yield from rec(0, r, [])
