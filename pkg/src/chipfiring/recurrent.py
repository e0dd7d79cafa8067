"""Recurrence testing, enumeration of recurrent configurations, and their statistics.

On an Eulerian host the burning test decides recurrence: c is recurrent iff
adding one sink firing's worth of chips and stabilizing returns c, in which
case every non-sink vertex fires exactly once.  Enumeration exhausts the
stable cube prod_v [0, outdeg(v)-1] with that filter and cross-checks the count
against the reduced-Laplacian determinant.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from functools import lru_cache

from .dynamics import Configuration, add, beta, stabilize
from .errors import ConfigurationError, GraphError, InternalCheckError, SizeCapError
from .graph import MultiDigraph, is_eulerian, remove_loops

DEFAULT_CELL_CAP = 20_000_000


def cell_cap() -> int:
    """Enumeration cap in stable-cube cells; override with CFG_CAP_CELLS."""
    return int(os.environ.get("CFG_CAP_CELLS", DEFAULT_CELL_CAP))


# --------------------------------------------------------------------- algebra
def reduced_laplacian(g: MultiDigraph, s: str) -> list[list[int]]:
    """Laplacian of the loopless host with the row and column of s removed.

    Rows and columns follow the canonical order of V \\ {s}; the diagonal holds
    the loopless out-degrees, off-diagonal entries are -d(v_i, v_j).
    """
    g.vertex_index(s)
    others = [v for v in g.vertices if v != s]
    return [
        [
            g.outdeg(v) - g.loops_at(v) if v == u else -g.multiplicity(v, u)
            for u in others
        ]
        for v in others
    ]


def bareiss_determinant(rows) -> int:
    """Exact integer determinant by fraction-free Bareiss elimination."""
    m = [list(map(int, r)) for r in rows]
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot is None:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


@lru_cache(maxsize=None)
def recurrent_count(g: MultiDigraph, s: str) -> int:
    """Order of the sandpile group with sink s: det of the reduced Laplacian."""
    return bareiss_determinant(reduced_laplacian(g, s))


# -------------------------------------------------------------- burning test
def _require_eulerian(g: MultiDigraph) -> None:
    if not is_eulerian(g):
        raise GraphError("operation requires an Eulerian graph")


def is_recurrent(g: MultiDigraph, s: str, c: Configuration) -> bool:
    """Burning test: stable c is recurrent iff stabilize(c + beta) == c.

    Valid on Eulerian hosts, loops allowed.  When the test succeeds, the firing
    record is additionally required to show each non-sink vertex firing exactly
    once; anything else is an internal bug.
    """
    _require_eulerian(g)
    if c.sink != s or c.host.vertices != g.vertices:
        raise ConfigurationError("configuration does not belong to this sink game")
    stable, _ = stabilize(g, c)
    if stable.chips != c.chips:
        raise ConfigurationError("burning test requires a stable configuration")
    result, record = stabilize(g, add(c, beta(g, s)))
    if result.chips != c.chips:
        return False
    if any(record.count(v) != 1 for v in c.domain):
        raise InternalCheckError(
            f"burning run of a recurrent configuration fired {record.as_dict()}, "
            "expected exactly one firing per non-sink vertex"
        )
    return True


@lru_cache(maxsize=None)
def _recurrent_vectors(g: MultiDigraph, s: str) -> tuple[tuple[int, ...], ...]:
    """Chip vectors of all recurrent configurations, in lexicographic order."""
    _require_eulerian(g)
    domain = tuple(v for v in g.vertices if v != s)
    bounds = [g.outdeg(v) for v in domain]
    cells = math.prod(bounds)
    if cells > cell_cap():
        raise SizeCapError(
            f"stable cube has {cells} cells, above the cap of {cell_cap()}; "
            "use a smaller instance or raise CFG_CAP_CELLS"
        )
    b = beta(g, s)
    found = []
    for combo in itertools.product(*(range(k) for k in bounds)):
        candidate = Configuration(g, s, combo)
        result, record = stabilize(g, add(candidate, b))
        if result.chips == combo:
            if any(record.count(v) != 1 for v in domain):
                raise InternalCheckError("burning run did not fire each vertex exactly once")
            found.append(combo)
    expected = recurrent_count(g, s)
    if len(found) != expected:
        raise InternalCheckError(
            f"enumerated {len(found)} recurrent configurations, "
            f"determinant predicts {expected}"
        )
    return tuple(found)


@lru_cache(maxsize=None)
def kappa(g: MultiDigraph) -> int:
    """Minimum of outdeg(s) + total chips over recurrents of the loopless host.

    Computed once per host with the canonical first vertex as sink; by sink
    independence of the sum multiset any other sink gives the same value.
    """
    bare, _ = remove_loops(g)
    _require_eulerian(bare)
    s = bare.vertices[0]
    vectors = _recurrent_vectors(bare, s)
    return bare.outdeg(s) + min(sum(vec) for vec in vectors)


# ---------------------------------------------------------------- result type
@dataclass(frozen=True)
class RecurrentSet:
    """All recurrent configurations for one sink, with sums, kappa, and levels.

    ``sums[i]`` is outdeg(sink) + total chips of ``configs[i]``; ``levels[i]``
    is ``sums[i] - kappa``.  Configurations are sorted lexicographically by
    chip vector under the canonical vertex order.
    """

    host: MultiDigraph
    sink: str
    configs: tuple[Configuration, ...]
    sums: tuple[int, ...]
    kappa: int
    levels: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.configs)

    def __iter__(self):
        return iter(self.configs)

    def __contains__(self, c: Configuration) -> bool:
        return self.index(c) is not None

    def index(self, c: Configuration) -> int | None:
        for i, member in enumerate(self.configs):
            if member.chips == c.chips and member.sink == c.sink:
                return i
        return None

    def to_json_dict(self) -> dict:
        return {
            "sink": self.sink,
            "kappa": self.kappa,
            "configs": [
                {"chips": c.as_dict(), "sum": s, "level": l}
                for c, s, l in zip(self.configs, self.sums, self.levels)
            ],
        }


def enumerate_recurrents(g: MultiDigraph, s: str) -> RecurrentSet:
    """Enumerate every recurrent configuration of the sink game (g, s)."""
    g.vertex_index(s)
    vectors = _recurrent_vectors(g, s)
    k = kappa(g)
    out_s = g.outdeg(s)
    sums = tuple(out_s + sum(vec) for vec in vectors)
    levels = tuple(total - k for total in sums)
    if any(level < 0 for level in levels):
        raise InternalCheckError("negative level; kappa inconsistent with enumeration")
    if g.loop_count == 0 and levels and min(levels) != 0:
        raise InternalCheckError("loopless host must attain level 0")
    configs = tuple(Configuration(g, s, vec) for vec in vectors)
    return RecurrentSet(g, s, configs, sums, k, levels)


def level(g: MultiDigraph, s: str, c: Configuration) -> int:
    """Level of a recurrent configuration: its sum statistic minus kappa."""
    if not is_recurrent(g, s, c):
        raise ConfigurationError("level is defined for recurrent configurations only")
    return g.outdeg(s) + c.total() - kappa(g)


def loop_lift(g: MultiDigraph, s: str, c: Configuration) -> Configuration:
    """Transport a recurrent configuration of the loopless host onto g.

    Bijectively adds d(v, v) chips at every non-sink vertex; the image is
    recurrent on g and the chip total shifts by the non-sink loop count.
    """
    bare, _ = remove_loops(g)
    base = Configuration(bare, s, c.chips)
    if not is_recurrent(bare, s, base):
        raise ConfigurationError("input must be recurrent on the loopless host")
    return Configuration(g, s, tuple(x + g.loops_at(v) for v, x in zip(base.domain, base.chips)))


def support_after_sink_fire(g: MultiDigraph, s: str, c: Configuration) -> frozenset[str]:
    """Out-neighbors of s that become firable when s fires from c."""
    return frozenset(
        v for v in g.out_neighbors(s) if c.chip(v) >= g.outdeg(v) - g.multiplicity(s, v)
    )


def _require_member(rs: RecurrentSet, c: Configuration) -> int:
    i = rs.index(c)
    if i is None:
        raise ConfigurationError("configuration is not in the recurrent set")
    return i


def is_minimal(rs: RecurrentSet, c: Configuration) -> bool:
    """No other member of the set is pointwise <= c."""
    i = _require_member(rs, c)
    for j, other in enumerate(rs.configs):
        if j != i and all(a <= b for a, b in zip(other.chips, c.chips)):
            return False
    return True


def is_minimum(rs: RecurrentSet, c: Configuration) -> bool:
    """c attains the minimum chip total over the set."""
    i = _require_member(rs, c)
    return rs.sums[i] == min(rs.sums)
