"""Binary support matrices and the structural checks on them.

A k x n binary matrix M is a candidate nonzero pattern for a generator
matrix.  Three properties matter:

  (P1) every row has weight n - k + 1  (the sparsest any MDS generator
       row can be);
  (P2) column weights differ pairwise by at most 1 (balance);
  (P3) every nonempty row set I covers at least n - k + |I| columns.

(P3) is what makes the pattern realizable as an MDS generator over a
large enough field.  It has two equivalent reformulations, both provided
here as independent oracles: a Hall-type condition on column supports,
and perfect matchability of every k-column induced subgraph of the
bipartite row/column graph.  A fourth, polynomial-time check reduces
(P3) under (P1) to one saturating-matching problem per row.

Rows and columns are 0-indexed throughout the library API.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

__all__ = [
    "SupportMatrix",
    "P3Witness",
    "BipartiteGraph",
    "initial_cyclic_matrix",
    "column_weights",
    "check_p1",
    "check_p2",
    "check_p3_bruteforce",
    "check_p3_matching",
    "check_hall_columns",
    "check_all_k_subsets_matchable",
    "max_bipartite_matching",
    "parse_sm",
    "format_sm",
]


class SupportMatrix:
    """A k x n binary matrix stored as one bitmask per row (bit j = column j)."""

    __slots__ = ("k", "n", "row_masks")

    def __init__(self, n: int, k: int, row_masks: list[int]):
        if k < 1 or k > n:
            raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
        if len(row_masks) != k:
            raise ValueError(f"expected {k} row masks, got {len(row_masks)}")
        full = (1 << n) - 1
        for i, m in enumerate(row_masks):
            if m & ~full:
                raise ValueError(f"row {i} has bits outside [0, {n})")
        self.k = k
        self.n = n
        self.row_masks = list(row_masks)

    @classmethod
    def from_rows(cls, rows: list[list[int]]) -> "SupportMatrix":
        """Build from a list of 0/1 rows."""
        if not rows:
            raise ValueError("empty matrix")
        n = len(rows[0])
        masks = []
        for row in rows:
            if len(row) != n:
                raise ValueError("ragged rows")
            mask = 0
            for j, b in enumerate(row):
                if b not in (0, 1):
                    raise ValueError(f"entry {b!r} is not 0/1")
                if b:
                    mask |= 1 << j
            masks.append(mask)
        return cls(n, len(rows), masks)

    def to_rows(self) -> list[list[int]]:
        return [[(m >> j) & 1 for j in range(self.n)] for m in self.row_masks]

    def bit(self, i: int, j: int) -> int:
        return (self.row_masks[i] >> j) & 1

    def row_support(self, i: int) -> frozenset[int]:
        return frozenset(j for j in range(self.n) if self.bit(i, j))

    def column_support(self, j: int) -> frozenset[int]:
        return frozenset(i for i in range(self.k) if self.bit(i, j))

    def row_weight(self, i: int) -> int:
        return self.row_masks[i].bit_count()

    def with_swap(self, i: int, j_clear: int, j_set: int) -> "SupportMatrix":
        """Copy with bit (i, j_clear) cleared and (i, j_set) set."""
        if not self.bit(i, j_clear):
            raise ValueError(f"bit ({i}, {j_clear}) is not set")
        if self.bit(i, j_set):
            raise ValueError(f"bit ({i}, {j_set}) is already set")
        masks = list(self.row_masks)
        masks[i] = (masks[i] & ~(1 << j_clear)) | (1 << j_set)
        return SupportMatrix(self.n, self.k, masks)

    def __eq__(self, other):
        return (
            isinstance(other, SupportMatrix)
            and self.n == other.n
            and self.row_masks == other.row_masks
        )

    def __hash__(self):
        return hash((self.n, tuple(self.row_masks)))

    def __repr__(self):
        return f"SupportMatrix({self.k}x{self.n})"


@dataclass(frozen=True)
class P3Witness:
    """A row set I violating the cover condition: |union of R_i| < n - k + |I|."""

    violating_rows: tuple[int, ...]
    union_size: int
    required: int

    def __post_init__(self):
        if self.union_size >= self.required:
            raise ValueError("not a genuine witness: union_size >= required")


@dataclass
class BipartiteGraph:
    """Bipartite graph with left vertices 0..left_count-1 and adjacency lists."""

    left_count: int
    right_count: int
    adj: list[list[int]]

    def __post_init__(self):
        if len(self.adj) != self.left_count:
            raise ValueError("adjacency list count != left_count")
        for nbrs in self.adj:
            for v in nbrs:
                if not 0 <= v < self.right_count:
                    raise ValueError(f"right vertex {v} out of range")


def initial_cyclic_matrix(n: int, k: int) -> SupportMatrix:
    """The cyclic-shift start matrix: row i supported on columns i..i+n-k.

    Every row has weight n - k + 1 and the pattern satisfies (P1) and (P3);
    it is the canonical input to the balancing pass.
    """
    if k < 1 or k > n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    w = n - k + 1
    base = (1 << w) - 1
    return SupportMatrix(n, k, [base << i for i in range(k)])


def column_weights(m: SupportMatrix) -> list[int]:
    """Number of ones in each column."""
    return [sum((mask >> j) & 1 for mask in m.row_masks) for j in range(m.n)]


def check_p1(m: SupportMatrix) -> bool:
    """Every row weight equals n - k + 1."""
    w = m.n - m.k + 1
    return all(mask.bit_count() == w for mask in m.row_masks)


def check_p2(m: SupportMatrix) -> bool:
    """Column weights differ pairwise by at most one."""
    weights = column_weights(m)
    return max(weights) - min(weights) <= 1


def check_p3_bruteforce(m: SupportMatrix) -> tuple[bool, P3Witness | None]:
    """Enumerate every nonempty row set I in increasing size.

    Returns (True, None) if |union of R_i over I| >= n - k + |I| always
    holds, else (False, witness) for a minimum-size violating I.
    """
    if m.k > 20:
        raise ValueError(f"k={m.k} too large for 2^k enumeration")
    base = m.n - m.k
    for size in range(1, m.k + 1):
        for rows in combinations(range(m.k), size):
            union = 0
            for i in rows:
                union |= m.row_masks[i]
            usize = union.bit_count()
            if usize < base + size:
                return False, P3Witness(rows, usize, base + size)
    return True, None


def check_hall_columns(m: SupportMatrix) -> bool:
    """Hall condition on column supports: |union of C_j over J| >= |J|
    for every J of at most k columns.  Enumeration oracle, n <= 20.
    """
    if m.n > 20:
        raise ValueError(f"n={m.n} too large for 2^n enumeration")
    col_masks = [0] * m.n
    for i, mask in enumerate(m.row_masks):
        mm = mask
        while mm:
            j = (mm & -mm).bit_length() - 1
            col_masks[j] |= 1 << i
            mm &= mm - 1
    for size in range(1, m.k + 1):
        for cols in combinations(range(m.n), size):
            union = 0
            for j in cols:
                union |= col_masks[j]
            if union.bit_count() < size:
                return False
    return True


def max_bipartite_matching(g: BipartiteGraph) -> tuple[int, list[int]]:
    """Maximum-cardinality matching via augmenting paths.

    Returns (size, pairing) where pairing[u] is the right partner of
    left vertex u, or -1 if unmatched.
    """
    match_l = [-1] * g.left_count
    match_r = [-1] * g.right_count

    def augment(u: int, seen: list[bool]) -> bool:
        for v in g.adj[u]:
            if not seen[v]:
                seen[v] = True
                if match_r[v] == -1 or augment(match_r[v], seen):
                    match_l[u] = v
                    match_r[v] = u
                    return True
        return False

    size = 0
    for u in range(g.left_count):
        if augment(u, [False] * g.right_count):
            size += 1
    return size, match_l


def _mask_matching_size(adj_masks: list[int], right_count: int) -> int:
    """Max matching where adjacency is one bitmask per left vertex."""
    match_r = [-1] * right_count

    def augment(u: int, seen: int) -> tuple[bool, int]:
        avail = adj_masks[u] & ~seen
        while avail:
            v = (avail & -avail).bit_length() - 1
            avail &= avail - 1
            seen |= 1 << v
            if match_r[v] == -1:
                match_r[v] = u
                return True, seen
            ok, seen = augment(match_r[v], seen)
            if ok:
                match_r[v] = u
                return True, seen
        return False, seen

    size = 0
    for u in range(len(adj_masks)):
        ok, _ = augment(u, 0)
        if ok:
            size += 1
    return size


def check_all_k_subsets_matchable(m: SupportMatrix) -> bool:
    """Every k-column induced subgraph of the row/column bipartite graph
    has a perfect matching.  Enumeration oracle, C(n, k) <= 10^6.
    """
    if comb(m.n, m.k) > 10**6:
        raise ValueError(f"C({m.n},{m.k}) too large for subset enumeration")
    for cols in combinations(range(m.n), m.k):
        pos = {j: p for p, j in enumerate(cols)}
        adj = []
        for mask in m.row_masks:
            a = 0
            for j in cols:
                if (mask >> j) & 1:
                    a |= 1 << pos[j]
            adj.append(a)
        if _mask_matching_size(adj, m.k) < m.k:
            return False
    return True


def check_p3_matching(m: SupportMatrix) -> tuple[bool, P3Witness | None]:
    """Polynomial-time (P3) check for matrices satisfying (P1).

    For each row i, build the bipartite graph H_i with left vertices the
    other k-1 rows and right vertices the columns outside R_i (edges at
    ones).  (P3) restricted to row sets containing i is exactly Hall's
    condition in H_i, so it holds iff some matching saturates all k-1
    left vertices.  On failure the unsaturated side yields a genuine
    violating row set via alternating-path reachability.
    """
    if not check_p1(m):
        raise ValueError("check_p3_matching requires (P1): every row weight n-k+1")
    full = (1 << m.n) - 1
    for i in range(m.k):
        others = [r for r in range(m.k) if r != i]
        outside = full & ~m.row_masks[i]
        # Compact the right side to the columns outside R_i.
        right_cols = [j for j in range(m.n) if (outside >> j) & 1]
        pos = {j: p for p, j in enumerate(right_cols)}
        adj = []
        for r in others:
            a = 0
            rm = m.row_masks[r] & outside
            while rm:
                j = (rm & -rm).bit_length() - 1
                a |= 1 << pos[j]
                rm &= rm - 1
            adj.append(a)
        g = BipartiteGraph(
            len(others),
            len(right_cols),
            [[v for v in range(len(right_cols)) if (a >> v) & 1] for a in adj],
        )
        size, match_l = max_bipartite_matching(g)
        if size < len(others):
            witness = _deficiency_witness(m, i, others, right_cols, g, match_l)
            return False, witness
    return True, None


def _deficiency_witness(
    m: SupportMatrix,
    i: int,
    others: list[int],
    right_cols: list[int],
    g: BipartiteGraph,
    match_l: list[int],
) -> P3Witness:
    """Extract a violating row set from an unsaturated matching in H_i.

    Left vertices reachable by alternating paths from unmatched left
    vertices form a Hall violator S with |N(S)| < |S|; then {i} union S
    violates the cover condition in M.
    """
    match_r = [-1] * g.right_count
    for u, v in enumerate(match_l):
        if v != -1:
            match_r[v] = u
    reach_l = [u for u in range(g.left_count) if match_l[u] == -1]
    seen_l = set(reach_l)
    seen_r: set[int] = set()
    queue = list(reach_l)
    while queue:
        u = queue.pop()
        for v in g.adj[u]:
            if v not in seen_r:
                seen_r.add(v)
                w = match_r[v]
                if w != -1 and w not in seen_l:
                    seen_l.add(w)
                    queue.append(w)
    rows = tuple(sorted([i] + [others[u] for u in seen_l]))
    union = 0
    for r in rows:
        union |= m.row_masks[r]
    return P3Witness(rows, union.bit_count(), m.n - m.k + len(rows))


def format_sm(m: SupportMatrix) -> str:
    """Serialize to the `.sm` text format: "k n" then k rows of 0/1 chars."""
    lines = [f"{m.k} {m.n}"]
    for row in m.to_rows():
        lines.append("".join(str(b) for b in row))
    return "\n".join(lines) + "\n"


def parse_sm(text: str) -> SupportMatrix:
    """Parse the `.sm` format.  Rejects ragged rows and foreign characters."""
    lines = [ln for ln in text.splitlines() if ln.strip() != ""]
    if not lines:
        raise ValueError("empty .sm input")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError(f"bad .sm header: {lines[0]!r}")
    try:
        k, n = int(header[0]), int(header[1])
    except ValueError:
        raise ValueError(f"bad .sm header: {lines[0]!r}") from None
    if len(lines) - 1 != k:
        raise ValueError(f"expected {k} rows, got {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        if len(ln) != n:
            raise ValueError(f"row {ln!r} has length {len(ln)}, expected {n}")
        if set(ln) - {"0", "1"}:
            raise ValueError(f"row {ln!r} contains characters other than 0/1")
        rows.append([int(c) for c in ln])
    return SupportMatrix.from_rows(rows)
