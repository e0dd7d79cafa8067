"""Sum-preserving transport of recurrent configurations between two sinks.

Starting from a recurrent configuration for sink s1, put outdeg(s1) + i chips
on s1 and stabilize against sink s2.  The swap number is the least i for which
s2 ends up holding exactly outdeg(s2) + i chips; at that i the restriction to
V \\ {s2} is recurrent for s2 and has the same sum statistic as the input.
Comparing the resulting sum multisets across all sinks is the sink-independence
check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dynamics import Configuration, add_chips, augment_sink, restrict, stabilize
from .errors import ConfigurationError, InternalCheckError, PropertyViolationError
from .graph import MultiDigraph, delete_out_arcs
from .recurrent import enumerate_recurrents, is_recurrent, recurrent_count


@dataclass(frozen=True)
class SwapResult:
    """One application of the sink-swapping map."""

    source_sink: str
    target_sink: str
    input: Configuration
    swap_number: int
    image: Configuration

    def to_json_dict(self) -> dict:
        return {
            "source_sink": self.source_sink,
            "target_sink": self.target_sink,
            "input": self.input.as_dict(),
            "swap_number": self.swap_number,
            "image": self.image.as_dict(),
        }


def _swap_search(g: MultiDigraph, s1: str, s2: str, c: Configuration):
    """Find the least i with stabilized chip count outdeg(s2) + i on s2.

    Each increment reuses the previous stabilization: adding one chip to s1 and
    stabilizing again equals stabilizing the freshly augmented configuration.
    The search is certified to stop before the sandpile group order.
    """
    if s1 == s2:
        raise ConfigurationError("source and target sink must differ")
    if not is_recurrent(g, s1, c):
        raise ConfigurationError(f"input configuration is not recurrent for sink {s1!r}")
    host = delete_out_arcs(g, s2)
    target_base = g.outdeg(s2)
    limit = recurrent_count(g, s2)
    state, _ = stabilize(host, augment_sink(c, 0))
    i = 0
    while state.chip(s2) != target_base + i:
        i += 1
        if i >= limit:
            raise InternalCheckError(
                f"no swap number below the group order {limit}; this cannot happen"
            )
        state, _ = stabilize(host, add_chips(state, s1))
    return i, state


def swap_number(g: MultiDigraph, s1: str, s2: str, c: Configuration) -> int:
    """Least i such that augmenting by i and stabilizing toward s2 leaves
    outdeg(s2) + i chips on s2."""
    i, _ = _swap_search(g, s1, s2, c)
    return i


def theta(g: MultiDigraph, s1: str, s2: str, c: Configuration) -> SwapResult:
    """Transport c from sink s1 to sink s2, preserving the sum statistic."""
    i, state = _swap_search(g, s1, s2, c)
    image = restrict(state, s2)
    if not is_recurrent(g, s2, image):
        raise InternalCheckError("swap image is not recurrent; this cannot happen")
    if g.outdeg(s1) + c.total() != g.outdeg(s2) + image.total():
        raise InternalCheckError("swap image does not preserve the sum statistic")
    return SwapResult(s1, s2, c, i, image)


def check_sink_independence(g: MultiDigraph) -> tuple[int, ...]:
    """Assert that the sorted sum multiset (and hence the level multiset)
    agrees across every choice of sink; return the common sum multiset."""
    sums: dict[str, tuple[int, ...]] = {}
    levels: dict[str, tuple[int, ...]] = {}
    for s in g.vertices:
        rs = enumerate_recurrents(g, s)
        sums[s] = tuple(sorted(rs.sums))
        levels[s] = tuple(sorted(rs.levels))
    reference = g.vertices[0]
    for s in g.vertices[1:]:
        if sums[s] != sums[reference]:
            raise PropertyViolationError(
                f"sum multisets differ between sinks {reference!r} and {s!r}",
                details={reference: sums[reference], s: sums[s]},
            )
        if levels[s] != levels[reference]:
            raise PropertyViolationError(
                f"level multisets differ between sinks {reference!r} and {s!r}",
                details={reference: levels[reference], s: levels[s]},
            )
    return sums[reference]
