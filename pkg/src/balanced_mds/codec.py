"""From a valid support pattern to a working MDS code over GF(q).

Instantiation is randomized: draw the nonzero entries uniformly from
GF(q) \\ {0}, check every k x k minor, retry on failure.  With
q > C(n-1, k-1) a successful assignment exists, and at that field size
a uniform draw succeeds with good probability, so a small attempt
budget suffices in practice.

Decoding is generic: erasure decoding solves a k x k system on any k
known positions, and error decoding searches error supports of
increasing size up to t = floor((n-k)/2).  No Reed-Solomon structure is
assumed; the codes here have arbitrary prescribed supports.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .field import (
    FieldElement,
    FieldMatrix,
    PrimeField,
    SingularMatrixError,
    _det_mod,
    field_size_bound,
    smallest_prime_above,
    solve_linear,
)
from .support import SupportMatrix

__all__ = [
    "GeneratorMatrix",
    "DecodeResult",
    "InconsistentWordError",
    "InstantiationError",
    "instantiate",
    "verify_mds",
    "encode",
    "erasure_decode",
    "error_decode",
    "minimum_distance_bruteforce",
    "support_of",
    "format_gm",
    "parse_gm",
]


class InconsistentWordError(ValueError):
    """Known positions admit no message: errors present, not just erasures."""


class InstantiationError(RuntimeError):
    """Random search for an MDS assignment exhausted its attempt budget."""


@dataclass(frozen=True)
class GeneratorMatrix:
    """A k x n matrix over GF(q), stored as integer residues.

    `seed` records the randomness that produced it (0 for hand-built
    matrices) so serialized copies are reproducible.
    """

    field: PrimeField
    rows: tuple[tuple[int, ...], ...]
    seed: int = 0

    def __post_init__(self):
        q = self.field.q
        n = len(self.rows[0])
        for row in self.rows:
            if len(row) != n:
                raise ValueError("ragged rows")
            for v in row:
                if not 0 <= v < q:
                    raise ValueError(f"entry {v} outside [0, {q})")

    @classmethod
    def from_lists(cls, field: PrimeField, data: list[list[int]], seed: int = 0):
        return cls(field, tuple(tuple(v % field.q for v in row) for row in data), seed)

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])

    @property
    def t(self) -> int:
        """Guaranteed correction radius floor((n-k)/2)."""
        return (self.n - self.k) // 2


@dataclass(frozen=True)
class DecodeResult:
    message: tuple[int, ...] | None
    error_positions: frozenset[int]
    status: str  # "unique" or "failure"


def support_of(g: GeneratorMatrix) -> SupportMatrix:
    """The 0/1 nonzero pattern of G."""
    return SupportMatrix.from_rows(
        [[1 if v else 0 for v in row] for row in g.rows]
    )


def verify_mds(g: GeneratorMatrix) -> tuple[bool, tuple[int, ...] | None]:
    """True iff all C(n, k) k x k minors are nonzero.

    On failure returns the lexicographically first singular column subset.
    """
    if comb(g.n, g.k) > 10**7:
        raise ValueError(f"C({g.n},{g.k}) minors is too many to enumerate")
    q = g.field.q
    for cols in combinations(range(g.n), g.k):
        sub = [[row[j] for j in cols] for row in g.rows]
        if _det_mod(sub, q) == 0:
            return False, cols
    return True, None


def instantiate(
    m: SupportMatrix,
    q: int | None = None,
    seed: int = 0,
    max_attempts: int = 64,
    force_small_q: bool = False,
) -> tuple[GeneratorMatrix, int]:
    """Fill the support with random nonzero GF(q) entries until the result
    passes verify_mds.  Returns (G, attempts used).

    With q=None the field is the smallest prime exceeding C(n-1, k-1),
    the size at which a valid assignment is guaranteed to exist.  An
    explicit q at or below that bound is rejected unless force_small_q.
    """
    bound = field_size_bound(m.n, m.k)
    if q is None:
        q = smallest_prime_above(bound)
    elif q <= bound and not force_small_q:
        raise ValueError(
            f"q={q} does not exceed C(n-1, k-1) = {bound}; existence is not "
            "guaranteed (pass force_small_q to try anyway)"
        )
    fld = PrimeField(q)
    supports = [[j for j in range(m.n) if m.bit(i, j)] for i in range(m.k)]
    for attempt in range(1, max_attempts + 1):
        rng = random.Random(f"{seed}:{attempt}")
        rows = [[0] * m.n for _ in range(m.k)]
        for i, cols in enumerate(supports):
            for j in cols:
                rows[i][j] = rng.randrange(1, q)
        g = GeneratorMatrix.from_lists(fld, rows, seed=seed)
        ok, _ = verify_mds(g)
        if ok:
            return g, attempt
    raise InstantiationError(
        f"no MDS assignment found in {max_attempts} attempts over GF({q}); "
        "a larger field raises the per-attempt success probability"
    )


def encode(g: GeneratorMatrix, x: list[int]) -> list[int]:
    """Codeword c with c_j = <x, column j of G>."""
    q = g.field.q
    if len(x) != g.k:
        raise ValueError(f"message length {len(x)} != k={g.k}")
    for v in x:
        if not 0 <= v < q:
            raise ValueError(f"message symbol {v} outside [0, {q})")
    return [sum(x[i] * g.rows[i][j] for i in range(g.k)) % q for j in range(g.n)]


def erasure_decode(g: GeneratorMatrix, known: dict[int, int]) -> list[int]:
    """Recover x from at least k known codeword positions.

    Solves on the first k known positions, then checks the remaining ones;
    an inconsistency means symbol errors, reported as
    InconsistentWordError.
    """
    q = g.field.q
    if len(known) < g.k:
        raise ValueError(f"need at least k={g.k} known positions, got {len(known)}")
    positions = sorted(known)
    for j in positions:
        if not 0 <= j < g.n:
            raise ValueError(f"position {j} out of range")
        if not 0 <= known[j] < q:
            raise ValueError(f"value {known[j]} outside [0, {q})")
    solve_pos = positions[: g.k]
    a = FieldMatrix.from_ints(g.field, [[g.rows[i][j] for i in range(g.k)] for j in solve_pos])
    b = [g.field.element(known[j]) for j in solve_pos]
    try:
        xs = solve_linear(a, b)
    except SingularMatrixError:
        # Cannot happen for a verified-MDS generator; surface it regardless.
        raise
    x = [e.value for e in xs]
    for j in positions[g.k:]:
        if sum(x[i] * g.rows[i][j] for i in range(g.k)) % q != known[j]:
            raise InconsistentWordError(
                f"known position {j} disagrees with the unique solution; "
                "the word contains errors, not just erasures"
            )
    return x


def error_decode(g: GeneratorMatrix, y: list[int]) -> DecodeResult:
    """Bounded-distance decode within radius t = floor((n-k)/2).

    Tries error supports E of increasing size; the first support whose
    complement is consistent gives the unique nearest codeword.  Beyond
    radius t the search fails and status is "failure".
    """
    if len(y) != g.n:
        raise ValueError(f"received length {len(y)} != n={g.n}")
    for E_size in range(g.t + 1):
        for E in combinations(range(g.n), E_size):
            known = {j: y[j] for j in range(g.n) if j not in E}
            try:
                x = erasure_decode(g, known)
            except InconsistentWordError:
                continue
            c = encode(g, x)
            errors = frozenset(j for j in range(g.n) if c[j] != y[j])
            return DecodeResult(tuple(x), errors, "unique")
    return DecodeResult(None, frozenset(), "failure")


def minimum_distance_bruteforce(g: GeneratorMatrix) -> int:
    """Minimum codeword weight over all q^k - 1 nonzero messages."""
    q = g.field.q
    if q**g.k > 10**6:
        raise ValueError(f"q^k = {q**g.k} too large to enumerate")
    best = g.n + 1
    x = [0] * g.k
    for _ in range(q**g.k - 1):
        # Odometer increment over GF(q)^k.
        for i in range(g.k):
            x[i] += 1
            if x[i] < q:
                break
            x[i] = 0
        w = sum(1 for v in encode(g, x) if v)
        if w < best:
            best = w
            if best == 1:
                break
    return best


def format_gm(g: GeneratorMatrix) -> str:
    """Serialize to the `.gm` format: "k n q seed" then k rows of decimals."""
    lines = [f"{g.k} {g.n} {g.field.q} {g.seed}"]
    for row in g.rows:
        lines.append(" ".join(str(v) for v in row))
    return "\n".join(lines) + "\n"


def parse_gm(text: str) -> GeneratorMatrix:
    """Parse the `.gm` format.  Rejects values outside [0, q)."""
    lines = [ln for ln in text.splitlines() if ln.strip() != ""]
    if not lines:
        raise ValueError("empty .gm input")
    header = lines[0].split()
    if len(header) != 4:
        raise ValueError(f"bad .gm header: {lines[0]!r}")
    try:
        k, n, q, seed = (int(h) for h in header)
    except ValueError:
        raise ValueError(f"bad .gm header: {lines[0]!r}") from None
    if len(lines) - 1 != k:
        raise ValueError(f"expected {k} rows, got {len(lines) - 1}")
    fld = PrimeField(q)
    rows = []
    for ln in lines[1:]:
        vals = [int(v) for v in ln.split()]
        if len(vals) != n:
            raise ValueError(f"row has {len(vals)} values, expected {n}")
        for v in vals:
            if not 0 <= v < q:
                raise ValueError(f"entry {v} outside [0, {q})")
        rows.append(vals)
    return GeneratorMatrix.from_lists(fld, rows, seed=seed)
