"""Explicit zero-signed-sum certificates per family.

A certificate is a list of blocks; each block is a partial sign assignment
over a disjoint subset of root indices whose partial signed sum is zero,
and together the blocks cover every root index exactly once.  Flipping any
subset of blocks therefore yields 2^{#blocks} distinct full sign vectors
with zero signed sum, which lower-bounds the number of solutions.

Every block formula is translated once into (index, sign) pairs against the
canonical root order; ``verify`` re-checks the result by direct coordinate
summation, independently of the translation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InternalCheckError
from .rootsys import FamilyRank, RootSystem, positive_roots, root_index_map

Block = tuple[tuple[int, int], ...]  # ((root_index, sign), ...)


@dataclass(frozen=True)
class CertificateFamily:
    system_id: FamilyRank
    blocks: tuple[Block, ...]

    @property
    def lower_bound(self) -> int:
        """Number of zero signed sums certified by the blocks alone."""
        return 2 ** len(self.blocks)


def lower_bound(fr: FamilyRank) -> int:
    """Published lower bound on the count of zero signed sums (0 = none exist).

    For E6, F4 and G2 this is the exact count; for E8 it is 369600, which is
    strictly larger than what the assembled certificate's blocks certify.
    """
    n = fr.rank
    if fr.family == "A":
        return 2 ** (n // 2) if n % 2 == 0 else 0
    if fr.family == "B":
        return 0
    if fr.family == "C":
        return 2 ** ((n + 1) // 4) if n % 4 in (0, 3) else 0
    if fr.family == "D":
        return 2 ** ((n + 1) // 4) if n % 4 in (0, 1) else 0
    if fr.family == "E":
        return {6: 13697920, 7: 0, 8: 369600}[n]
    if fr.family == "F":
        return 34432
    return 4  # G2


def _alternating_blocks(k: int, pair_idx, extra_idx) -> list[list[tuple[int, int]]]:
    """Blocks over difference roots of 2k indices plus one extra root per index.

    ``pair_idx(i, j)`` resolves the root behaving like l_i - l_j (1-based,
    i < j <= 2k) and ``extra_idx(i)`` the extra root attached to index i.
    The identities are linear, so they survive any such reinterpretation of
    the symbols (used verbatim for even A ranks and index-shifted inside E8).
    """
    blocks: list[list[tuple[int, int]]] = []
    for l in range(1, k):
        block: list[tuple[int, int]] = []
        for j in range(2 * l + 1, 2 * k + 1):
            block.append((pair_idx(2 * l, j), (-1) ** j))
        for j in range(2 * l + 2, 2 * k + 1):
            block.append((pair_idx(2 * l + 1, j), -((-1) ** j)))
        blocks.append(block)
    tail = [(extra_idx(1), 1)]
    for j in range(2, 2 * k + 1):
        s = (-1) ** j
        tail.append((pair_idx(1, j), -s))
        tail.append((extra_idx(j), -s))
    blocks.append(tail)
    return blocks


def _blocks_a(n: int) -> list[list[tuple[int, int]]]:
    idx = root_index_map(positive_roots(FamilyRank("A", n)))

    def pair(i: int, j: int) -> int:
        v = [0] * n
        v[i - 1] += 1
        v[j - 1] -= 1
        return idx[tuple(v)]

    def extra(i: int) -> int:
        v = [1] * n
        v[i - 1] += 1
        return idx[tuple(v)]

    return _alternating_blocks(n // 2, pair, extra)


def _bcd_lookups(fr: FamilyRank):
    n = fr.rank
    idx = root_index_map(positive_roots(fr))

    def minus(i: int, j: int) -> int:
        v = [0] * n
        v[i - 1] += 1
        v[j - 1] -= 1
        return idx[tuple(v)]

    def plus(i: int, j: int) -> int:
        v = [0] * n
        v[i - 1] += 1
        v[j - 1] += 1
        return idx[tuple(v)]

    def double(i: int) -> int:
        v = [0] * n
        v[i - 1] = 2
        return idx[tuple(v)]

    return minus, plus, double


def _blocks_c(n: int) -> list[list[tuple[int, int]]]:
    k, eps = divmod(n, 4)
    if eps not in (0, 3):
        raise AssertionError("C blocks exist only for n = 0, 3 mod 4")
    minus, plus, double = _bcd_lookups(FamilyRank("C", n))
    blocks = []
    for l in range(k):
        a, b, c, d = 4 * l + 1, 4 * l + 2, 4 * l + 3, 4 * l + 4
        block = [(minus(a, b), 1), (plus(a, b), 1)]
        for j in range(a + 2, n + 1):
            block += [(plus(a, j), 1), (minus(a, j), -1)]
        block += [(minus(b, c), 1), (plus(b, c), 1)]
        for j in range(b + 2, n + 1):
            block += [(plus(b, j), -1), (minus(b, j), 1)]
        for j in range(c + 1, n + 1):
            block += [(plus(c, j), 1), (minus(c, j), -1)]
        for j in range(d + 1, n + 1):
            block += [(plus(d, j), -1), (minus(d, j), 1)]
        block += [(double(a), -1), (double(b), -1), (double(c), -1), (double(d), -1)]
        blocks.append(block)
    if eps == 3:
        p, q, s = 4 * k + 1, 4 * k + 2, 4 * k + 3
        blocks.append(
            [
                (minus(p, q), 1),
                (minus(p, s), -1),
                (minus(q, s), 1),
                (plus(p, q), 1),
                (plus(p, s), 1),
                (plus(q, s), 1),
                (double(p), -1),
                (double(q), -1),
                (double(s), -1),
            ]
        )
    return blocks


def _blocks_d(n: int) -> list[list[tuple[int, int]]]:
    k, eps = divmod(n, 4)
    if eps not in (0, 1):
        raise AssertionError("D blocks exist only for n = 0, 1 mod 4")
    minus, plus, _ = _bcd_lookups(FamilyRank("D", n))
    blocks = []
    for l in range(k):
        a, b, c, d = 4 * l + 1, 4 * l + 2, 4 * l + 3, 4 * l + 4
        block: list[tuple[int, int]] = []
        # Alternating signs use the literal global subscript j.
        for j in range(a + 1, n + 1):
            s = (-1) ** j
            block += [(minus(a, j), s), (plus(a, j), -s)]
        block += [(minus(b, c), 1), (plus(b, c), 1)]
        for j in range(b + 2, n + 1):
            s = (-1) ** j
            block += [(minus(b, j), -s), (plus(b, j), s)]
        block += [(minus(c, d), -1), (plus(c, d), -1)]
        for j in range(c + 2, n + 1):
            s = (-1) ** j
            block += [(minus(c, j), s), (plus(c, j), -s)]
        for j in range(d + 1, n + 1):
            s = (-1) ** j
            block += [(minus(d, j), -s), (plus(d, j), s)]
        blocks.append(block)
    return blocks


# Explicit sign lists for the one-block exceptional certificates, in
# canonical root order.
_E6_PAIR_SIGNS = (-1, 1, 1, 1, -1, 1, 1, -1, 1, -1, 1, -1, -1, -1, 1)
_E6_TRIPLE_SIGNS = (
    -1, -1, -1, -1, -1, 1, 1, 1, 1, -1,
    1, -1, 1, 1, -1, -1, 1, 1, -1, -1,
)
_F4_MINUS_SIGNS = (-1, -1, -1, -1, -1, -1)
_F4_PLUS_SIGNS = (-1, 1, -1, 1, 1, -1)
_F4_SINGLE_SIGNS = (1, -1, -1, -1)
_F4_HALF_SIGNS = (1, 1, 1, 1, -1, 1, 1, 1)
_G2_SIGNS = (1, 1, 1, -1, -1, 1)


def _blocks_e6() -> list[list[tuple[int, int]]]:
    signs = _E6_PAIR_SIGNS + _E6_TRIPLE_SIGNS + (1,)
    return [[(i, s) for i, s in enumerate(signs)]]


def _blocks_f4() -> list[list[tuple[int, int]]]:
    signs = _F4_MINUS_SIGNS + _F4_PLUS_SIGNS + _F4_SINGLE_SIGNS + _F4_HALF_SIGNS
    return [[(i, s) for i, s in enumerate(signs)]]


def _blocks_g2() -> list[list[tuple[int, int]]]:
    return [[(i, s) for i, s in enumerate(_G2_SIGNS)]]


def _blocks_e8() -> list[list[tuple[int, int]]]:
    idx = root_index_map(positive_roots(FamilyRank("E", 8)))

    def pair(i: int, j: int) -> int:
        v = [0] * 8
        v[i - 1] += 1
        v[j - 1] -= 1
        return idx[tuple(v)]

    def triple(i: int, j: int, k: int) -> int:
        v = [0] * 8
        v[i - 1] = v[j - 1] = v[k - 1] = 1
        return idx[tuple(v)]

    def nu_plus(i: int) -> int:
        v = [1] * 8
        v[i - 1] += 1
        return idx[tuple(v)]

    def nu_minus(i: int, j: int) -> int:
        v = [1] * 8
        v[i - 1] -= 1
        v[j - 1] -= 1
        return idx[tuple(v)]

    # All triples minus all (nu - l_i - l_j): both sum to 21*nu.
    bulk = [
        (triple(i, j, k), 1)
        for i in range(1, 9)
        for j in range(i + 1, 9)
        for k in range(j + 1, 9)
    ]
    bulk += [(nu_minus(i, j), -1) for i in range(1, 9) for j in range(i + 1, 9)]

    # Alternating identity tying the l_1 - l_j fan to the nu + l_i fan.
    fan = [(pair(1, j), (-1) ** j) for j in range(2, 9)]
    fan += [(nu_plus(i), (-1) ** i) for i in range(1, 9)]

    # The 21 remaining differences among indices 2..8 carry the shifted
    # even-rank-6 construction, reading l_{i+1} - l_8 for the extra roots.
    shifted = _alternating_blocks(
        3,
        lambda i, j: pair(i + 1, j + 1),
        lambda i: pair(i + 1, 8),
    )
    return [bulk, fan] + shifted


def certificate(fr: FamilyRank) -> CertificateFamily | None:
    """Verified block certificate, or None exactly when no zero sum exists."""
    n = fr.rank
    if fr.family == "A":
        blocks = _blocks_a(n) if n % 2 == 0 else None
    elif fr.family == "B":
        blocks = None
    elif fr.family == "C":
        blocks = _blocks_c(n) if n % 4 in (0, 3) else None
    elif fr.family == "D":
        blocks = _blocks_d(n) if n % 4 in (0, 1) else None
    elif fr.family == "E":
        blocks = {6: _blocks_e6, 7: lambda: None, 8: _blocks_e8}[n]()
    elif fr.family == "F":
        blocks = _blocks_f4()
    else:
        blocks = _blocks_g2()
    if blocks is None:
        return None
    cert = CertificateFamily(fr, tuple(tuple(b) for b in blocks))
    ok, diagnostic = verify_report(positive_roots(fr), cert)
    if not ok:
        raise InternalCheckError(f"certificate construction for {fr} is broken: {diagnostic}")
    return cert


def verify_report(system: RootSystem, cert: CertificateFamily) -> tuple[bool, str]:
    """Check a certificate against a system; returns (ok, diagnostic)."""
    if cert.system_id != system.id:
        return False, f"certificate for {cert.system_id} applied to {system.id}"
    seen: set[int] = set()
    for b, block in enumerate(cert.blocks):
        indices = [i for i, _ in block]
        if any(i < 0 or i >= system.r for i in indices):
            return False, f"block {b} references a root index out of range"
        if len(set(indices)) != len(indices) or seen.intersection(indices):
            return False, f"block {b} overlaps another block or repeats an index"
        seen.update(indices)
        if any(s not in (-1, 1) for _, s in block):
            return False, f"block {b} carries a sign outside {{+1, -1}}"
        partial = np.zeros(system.ambient_dim, dtype=np.int64)
        for i, s in block:
            partial += s * system.roots[i]
        if np.any(partial != 0):
            return False, f"block {b} has non-zero partial sum {partial.tolist()}"
    if len(seen) != system.r:
        return False, f"blocks cover {len(seen)} of {system.r} root indices"
    return True, "ok"


def verify(system: RootSystem, cert: CertificateFamily) -> bool:
    """True iff the blocks partition the index range and each sums to zero."""
    return verify_report(system, cert)[0]


def assembled_witness(cert: CertificateFamily) -> np.ndarray:
    """The full sign vector taking every block in its + orientation."""
    r = sum(len(b) for b in cert.blocks)
    signs = np.zeros(r, dtype=np.int64)
    for block in cert.blocks:
        for i, s in block:
            signs[i] = s
    if np.any(signs == 0):
        raise InternalCheckError("certificate blocks do not cover all roots")
    return signs
