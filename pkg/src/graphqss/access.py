"""Coalition classification for graph-state secret sharing.

A coalition B is *accessing* when some D inside B has its odd neighborhood
inside B and odd overlap with the encoding set A, and *blind* when some C in
the complement of B reproduces A's pattern on B.  Exactly one of the two
always holds, decided by whether the A-pattern on B lies in the row space of
the cut matrix.  Quantum accessibility combines the verdicts of B and its
complement.  Everything here is exact GF(2) arithmetic on bitmasks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from math import comb
from multiprocessing import Pool
from typing import NamedTuple, Optional

from . import gf2
from .errors import NoWitnessError, ResourceLimitError
from .gf2 import BitMatrix, BitVector
from .graphs import Graph, VertexSet, odd_neighborhood

DEFAULT_ENUMERATION_LIMIT = 26
DEFAULT_KERNEL_DIM_LIMIT = 24
_PARALLEL_MIN_WORK = 200_000


class CVerdict(Enum):
    ACCESSING = "Accessing"
    BLIND = "Blind"


class QVerdict(Enum):
    Q_ACCESSING = "QAccessing"
    Q_BLIND = "QBlind"
    PARTIAL = "Partial"


class CClassification(NamedTuple):
    verdict: CVerdict
    witness: VertexSet


@dataclass(frozen=True)
class WitnessPair:
    d: Optional[VertexSet] = None
    c: Optional[VertexSet] = None


@dataclass(frozen=True)
class AccessReport:
    coalition: VertexSet
    c_verdict: CVerdict
    q_verdict: QVerdict
    witnesses: WitnessPair
    rank_residual: int


@dataclass(frozen=True)
class ScanResult:
    """Outcome of checking every coalition of one size."""

    all_accessing: bool
    first_failure: Optional[VertexSet]
    checked: int


@dataclass(frozen=True)
class ThresholdReport:
    k_star: int
    certificate_fail: Optional[VertexSet]
    sets_checked: int


# -- helpers -------------------------------------------------------------------


def _compress(mask: int, members: tuple[int, ...]) -> int:
    out = 0
    for idx, u in enumerate(members):
        if (mask >> u) & 1:
            out |= 1 << idx
    return out


def _decompress(bits: int, members: tuple[int, ...], universe: int) -> VertexSet:
    mask = 0
    for idx, u in enumerate(members):
        if (bits >> idx) & 1:
            mask |= 1 << u
    return VertexSet(universe, mask)


def _check_inputs(g: Graph, a: VertexSet, b: VertexSet) -> None:
    if a.universe != g.n or b.universe != g.n:
        raise ValueError("vertex set universe != graph order")
    if not a:
        raise ValueError("encoding set A must be non-empty")


def _combination_rank(members: tuple[int, ...], n: int) -> int:
    """Position of a sorted k-subset in the lexicographic enumeration."""
    k = len(members)
    r = 0
    prev = -1
    for i, c in enumerate(members):
        for v in range(prev + 1, c):
            r += comb(n - 1 - v, k - 1 - i)
        prev = c
    return r


def _q_accessing_masks(adj: tuple[int, ...], mask_a: int, mask_b: int, full: int) -> bool:
    """Hot path: B accessing and complement(B) blind, all on raw bitmasks."""
    mask_bbar = full ^ mask_b
    # B accessing <=> A&B outside the span of the cut rows (rows of B-bar
    # restricted to B); zero columns outside B do not affect the span.
    basis: dict[int, int] = {}
    m = mask_bbar
    while m:
        v = (m & -m).bit_length() - 1
        m &= m - 1
        r = adj[v] & mask_b
        while r:
            h = r.bit_length() - 1
            p = basis.get(h)
            if p is None:
                basis[h] = r
                break
            r ^= p
    t = mask_a & mask_b
    while t:
        p = basis.get(t.bit_length() - 1)
        if p is None:
            break
        t ^= p
    if t == 0:
        return False
    # complement blind <=> A&B-bar inside the span of the opposite cut rows
    basis = {}
    m = mask_b
    while m:
        v = (m & -m).bit_length() - 1
        m &= m - 1
        r = adj[v] & mask_bbar
        while r:
            h = r.bit_length() - 1
            p = basis.get(h)
            if p is None:
                basis[h] = r
                break
            r ^= p
    t = mask_a & mask_bbar
    while t:
        p = basis.get(t.bit_length() - 1)
        if p is None:
            return False
        t ^= p
    return True


# -- classification ------------------------------------------------------------


def cut_matrix(g: Graph, b: VertexSet) -> BitMatrix:
    """Adjacency submatrix with columns b and rows its complement.

    Rows and columns are ordered by ascending vertex label; entry (v, u) is
    the edge indicator for v outside b, u inside b.
    """
    if b.universe != g.n:
        raise ValueError("vertex set universe != graph order")
    cols = b.members()
    rows = tuple(_compress(g.adj[v], cols) for v in b.complement().members())
    return BitMatrix(len(cols), rows)


def rank_residual(g: Graph, a: VertexSet, b: VertexSet) -> int:
    """Rank of the cut matrix stacked with the A-pattern, minus the cut rank.

    1 means the coalition is accessing, 0 that it is blind.
    """
    _check_inputs(g, a, b)
    mask_b = b.mask
    basis = gf2.echelon_basis(g.adj[v] & mask_b for v in b.complement().members())
    return 0 if gf2.in_span(a.mask & mask_b, basis) else 1


def classify_c(g: Graph, a: VertexSet, b: VertexSet) -> CClassification:
    """Classify one coalition against a classical secret and certify it.

    Accessing comes with D inside b (odd neighborhood inside b, odd overlap
    with a); blind comes with C outside b whose odd neighborhood reproduces
    a's pattern on b.  The returned witness is re-verified by direct
    neighborhood computation; ties in the underlying solver are broken
    lexicographically so runs are reproducible.
    """
    _check_inputs(g, a, b)
    n = g.n
    members_b = b.members()
    members_bbar = b.complement().members()
    mask_b = b.mask
    mask_bbar = b.complement().mask

    # accessing: solve [A&B pattern ; cut rows] . D = (1, 0, ..)
    stacked = BitMatrix(
        len(members_b),
        (_compress(a.mask & mask_b, members_b),)
        + tuple(_compress(g.adj[v] & mask_b, members_b) for v in members_bbar),
    )
    x = gf2.solve(stacked, BitVector(stacked.nrows, 1))
    if x is not None:
        d = _decompress(x.bits, members_b, n)
        odd = odd_neighborhood(g, d)
        if not (d.is_subset_of(b) and odd.is_subset_of(b) and len(d & a) % 2 == 1):
            raise RuntimeError("accessing witness failed verification")
        return CClassification(CVerdict.ACCESSING, d)

    # blind: solve rows-of-B system for C outside b with Odd(C) & b == a & b
    transposed = BitMatrix(
        len(members_bbar),
        tuple(_compress(g.adj[v] & mask_bbar, members_bbar) for v in members_b),
    )
    target = BitVector(len(members_b), _compress(a.mask & mask_b, members_b))
    y = gf2.solve(transposed, target)
    if y is None:
        raise RuntimeError("coalition is neither accessing nor blind; adjacency corrupt?")
    c = _decompress(y.bits, members_bbar, n)
    if not (c.is_subset_of(b.complement()) and (odd_neighborhood(g, c) & b) == (a & b)):
        raise RuntimeError("blind witness failed verification")
    return CClassification(CVerdict.BLIND, c)


def q_accessing(g: Graph, a: VertexSet, b: VertexSet) -> bool:
    """True iff b can reconstruct a quantum secret: b accessing, complement blind."""
    _check_inputs(g, a, b)
    return _q_accessing_masks(g.adj, a.mask, b.mask, (1 << g.n) - 1)


def q_classify(g: Graph, a: VertexSet, b: VertexSet) -> QVerdict:
    _check_inputs(g, a, b)
    full = (1 << g.n) - 1
    qa = _q_accessing_masks(g.adj, a.mask, b.mask, full)
    qb = _q_accessing_masks(g.adj, a.mask, full ^ b.mask, full)
    if qa and qb:
        raise RuntimeError("coalition and complement both quantum-accessing")
    if qa:
        return QVerdict.Q_ACCESSING
    if qb:
        return QVerdict.Q_BLIND
    return QVerdict.PARTIAL


def access_report(g: Graph, a: VertexSet, b: VertexSet) -> AccessReport:
    """Full classification of one coalition with certifying sets."""
    c = classify_c(g, a, b)
    q = q_classify(g, a, b)
    residual = rank_residual(g, a, b)
    if (residual == 1) != (c.verdict is CVerdict.ACCESSING):
        raise RuntimeError("rank residual disagrees with witness classification")
    pair = (
        WitnessPair(d=c.witness)
        if c.verdict is CVerdict.ACCESSING
        else WitnessPair(c=c.witness)
    )
    return AccessReport(b, c.verdict, q, pair, residual)


def reconstruction_witnesses(g: Graph, a: VertexSet, b: VertexSet) -> tuple[VertexSet, VertexSet]:
    """The pair (D, C) inside b that drives quantum reconstruction.

    D has odd overlap with a and odd neighborhood inside b; C's odd
    neighborhood matches a's pattern on the complement of b.  Raises
    NoWitnessError unless b is quantum-accessing.
    """
    _check_inputs(g, a, b)
    got_d = classify_c(g, a, b)
    if got_d.verdict is not CVerdict.ACCESSING:
        raise NoWitnessError("coalition cannot access a classical secret")
    got_c = classify_c(g, a, b.complement())
    if got_c.verdict is not CVerdict.BLIND:
        raise NoWitnessError("coalition complement is accessing; no quantum reconstruction")
    d, c = got_d.witness, got_c.witness
    bbar = b.complement()
    if not c.is_subset_of(b) or (odd_neighborhood(g, c) & bbar) != (a & bbar):
        raise RuntimeError("reconstruction witness C failed verification")
    return d, c


# -- coalition scans and thresholds ---------------------------------------------

_W_ADJ: tuple[int, ...] = ()
_W_MASK_A = 0
_W_FULL = 0
_W_N = 0


def _scan_init(adj: tuple[int, ...], mask_a: int, full: int, n: int) -> None:
    global _W_ADJ, _W_MASK_A, _W_FULL, _W_N
    _W_ADJ, _W_MASK_A, _W_FULL, _W_N = adj, mask_a, full, n


def _scan_chunk(task: tuple[int, tuple[int, ...]]) -> Optional[tuple[int, ...]]:
    """First non-accessing coalition in one lexicographic chunk, or None."""
    k, prefix = task
    prefix_mask = 0
    for v in prefix:
        prefix_mask |= 1 << v
    rest = k - len(prefix)
    lo = prefix[-1] + 1 if prefix else 0
    for tail in itertools.combinations(range(lo, _W_N), rest):
        mask = prefix_mask
        for v in tail:
            mask |= 1 << v
        if not _q_accessing_masks(_W_ADJ, _W_MASK_A, mask, _W_FULL):
            return prefix + tail
    return None


def _chunk_prefixes(n: int, k: int, depth: int):
    for prefix in itertools.combinations(range(n), depth):
        if n - 1 - prefix[-1] >= k - depth:
            yield (k, prefix)


def scan_size_k(
    g: Graph,
    a: VertexSet,
    k: int,
    jobs: Optional[int] = None,
) -> ScanResult:
    """Check every size-k coalition for quantum accessibility.

    The scan runs in lexicographic coalition order (possibly split across
    worker processes); the reported failure is always the lexicographically
    smallest one and ``checked`` counts canonical serial work (position of
    the first failure, or C(n, k) when all pass), so the result is identical
    under any scheduling.
    """
    _check_inputs(g, a, g.vertices())
    if not 0 <= k <= g.n:
        raise ValueError(f"k={k} outside 0..{g.n}")
    n = g.n
    adj, mask_a, full = g.adj, a.mask, (1 << n) - 1
    total = comb(n, k)

    failure: Optional[tuple[int, ...]] = None
    use_pool = jobs != 1 and k > 2 and total >= _PARALLEL_MIN_WORK
    if use_pool:
        tasks = list(_chunk_prefixes(n, k, 2))
        with Pool(jobs, initializer=_scan_init, initargs=(adj, mask_a, full, n)) as pool:
            for result in pool.imap(_scan_chunk, tasks):
                if result is not None:
                    failure = result
                    break
    else:
        for combo in itertools.combinations(range(n), k):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if not _q_accessing_masks(adj, mask_a, mask, full):
                failure = combo
                break

    if failure is None:
        return ScanResult(True, None, total)
    return ScanResult(
        False,
        VertexSet.from_iterable(n, failure),
        _combination_rank(failure, n) + 1,
    )


def qstar_threshold(
    g: Graph,
    a: Optional[VertexSet] = None,
    *,
    limit: int = DEFAULT_ENUMERATION_LIMIT,
    jobs: Optional[int] = None,
) -> ThresholdReport:
    """Smallest k such that every size-k coalition is quantum-accessing.

    Scans sizes upward (quantum accessibility is upward monotone, a property
    the test suite verifies exhaustively on small graphs), stopping at the
    first size with no failure.  The failing set recorded for size k_star - 1
    certifies minimality.
    """
    if a is None:
        a = VertexSet.full(g.n)
    _check_inputs(g, a, g.vertices())
    if g.n > limit:
        raise ResourceLimitError(f"n={g.n} exceeds enumeration limit {limit}")
    prev_fail = VertexSet.empty(g.n)  # the empty coalition is always blind
    checked = 1
    for k in range(1, g.n + 1):
        scan = scan_size_k(g, a, k, jobs=jobs)
        checked += scan.checked
        if scan.all_accessing:
            return ThresholdReport(k, prev_fail, checked)
        prev_fail = scan.first_failure
    raise RuntimeError("the full vertex set must be quantum-accessing when A is non-empty")


def product_threshold_bound(n1: int, k1: int, n2: int, k2: int) -> tuple[int, int]:
    """Threshold parameters guaranteed for a lexicographic product of schemes."""
    if not (0 < k1 <= n1 and 0 < k2 <= n2):
        raise ValueError("need 0 < k_i <= n_i")
    n = n1 * n2
    return n, n - (n1 - k1 + 1) * (n2 - k2 + 1) + 1


# -- minimal parity witnesses ---------------------------------------------------


def small_witness(
    g: Graph,
    b: VertexSet,
    *,
    max_kernel_dim: int = DEFAULT_KERNEL_DIM_LIMIT,
) -> tuple[VertexSet, str]:
    """Minimum-size X in b that is odd-wise of odd size, or even-wise.

    Odd-wise means X and its odd neighborhood stay inside b (X is in the
    kernel of the cut map); even-wise means the odd neighborhood of X covers
    everything outside b.  Both families are enumerated through the kernel
    and its affine coset; refuses kernels wider than ``max_kernel_dim``.
    """
    if b.universe != g.n:
        raise ValueError("vertex set universe != graph order")
    members_b = b.members()
    members_bbar = b.complement().members()
    m = BitMatrix(
        len(members_b),
        tuple(_compress(g.adj[v] & b.mask, members_b) for v in members_bbar),
    )
    kern = gf2.kernel_basis(m)
    if len(kern) > max_kernel_dim:
        raise ResourceLimitError(
            f"kernel dimension {len(kern)} exceeds limit {max_kernel_dim}"
        )
    basis = [v.bits for v in kern]
    ones = BitVector(m.nrows, (1 << m.nrows) - 1)
    particular = gf2.solve(m, ones)  # even-wise coset, may be absent

    best_odd: Optional[int] = None
    best_even: Optional[int] = None

    width = len(members_b)

    def better(cur: Optional[int], cand: int) -> bool:
        if cur is None:
            return True
        cw, nw = cur.bit_count(), cand.bit_count()
        if nw != cw:
            return nw < cw
        return _member_key(cand, width) < _member_key(cur, width)

    vec = 0
    coset = particular.bits if particular is not None else None
    for i in range(1 << len(basis)):
        if i:
            vec ^= basis[(i & -i).bit_length() - 1]
            if coset is not None:
                coset ^= basis[(i & -i).bit_length() - 1]
        if vec.bit_count() % 2 == 1 and better(best_odd, vec):
            best_odd = vec
        if coset is not None and coset != 0 and better(best_even, coset):
            best_even = coset

    if best_odd is None and best_even is None:
        raise NoWitnessError("coalition has no odd-size odd-wise and no even-wise set")
    odd_w = best_odd.bit_count() if best_odd is not None else None
    even_w = best_even.bit_count() if best_even is not None else None
    if best_even is None or (best_odd is not None and odd_w <= even_w):
        return _decompress(best_odd, members_b, g.n), "odd-wise-odd-size"
    return _decompress(best_even, members_b, g.n), "even-wise"


def _member_key(bits: int, width: int) -> tuple[int, ...]:
    # lexicographic tie-break on ascending member lists
    return tuple(i for i in range(width) if (bits >> i) & 1)


# -- exhaustive search over labelled graphs --------------------------------------


def exhaustive_graph_search(n: int, *, limit: int = 7) -> list[tuple[Graph, int]]:
    """Threshold of every labelled graph on n vertices, in edge-mask order.

    The edge bit order is (0,1), (0,2), ..., (0,n-1), (1,2), ... so results
    are reproducible.  Exponential in n(n-1)/2; refuses n beyond ``limit``.
    """
    if n > limit:
        raise ResourceLimitError(f"n={n} exceeds exhaustive search limit {limit}")
    if n < 1:
        raise ValueError("n must be >= 1")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    a = VertexSet.full(n)
    out = []
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        for idx, (i, j) in enumerate(pairs):
            if (mask >> idx) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        g = Graph(n, tuple(adj))
        out.append((g, qstar_threshold(g, a, jobs=1).k_star))
    return out
