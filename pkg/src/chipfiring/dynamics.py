"""The chip-firing engine: configurations, single firings, and stabilization.

Two kinds of configuration exist.  A *sink game* configuration declares a sink
vertex and lives on the domain V \\ {sink}; chips reaching the sink vanish (the
stabilization record counts them).  A *full-domain* configuration (sink None)
assigns chips to every vertex; nothing vanishes, so on a host with a global
sink the chips simply pile up there.  The second form is what sink-swapping
needs: stabilize against one sink while reading off the chip count on it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import ConfigurationError, FiringError, NonTerminationError
from .graph import MultiDigraph


@dataclass(frozen=True)
class Configuration:
    """Chip assignment over a host graph, on the full vertex set or minus a sink.

    ``chips`` is aligned with the domain: the host's vertices in canonical
    order, skipping the sink when one is declared.  Configurations compare,
    add, and so on only when host, sink, and domain coincide.
    """

    host: MultiDigraph
    sink: str | None
    chips: tuple[int, ...]

    def __post_init__(self):
        if self.sink is not None:
            self.host.vertex_index(self.sink)
        if len(self.chips) != len(self.domain):
            raise ConfigurationError(
                f"expected {len(self.domain)} chip counts, got {len(self.chips)}"
            )
        for v, c in zip(self.domain, self.chips):
            if not isinstance(c, int) or c < 0:
                raise ConfigurationError(f"chip count on {v!r} must be a nonnegative integer")

    @cached_property
    def domain(self) -> tuple[str, ...]:
        if self.sink is None:
            return self.host.vertices
        return tuple(v for v in self.host.vertices if v != self.sink)

    @cached_property
    def _slot(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.domain)}

    # ------------------------------------------------------------ constructors
    @classmethod
    def zeros(cls, g: MultiDigraph, sink: str | None = None) -> "Configuration":
        n = g.n_vertices - (0 if sink is None else 1)
        return cls(g, sink, (0,) * n)

    @classmethod
    def of(cls, g: MultiDigraph, chips: dict[str, int], sink: str | None = None) -> "Configuration":
        """Build from a mapping; omitted vertices default to 0 chips."""
        for v in chips:
            g.vertex_index(v)
            if v == sink:
                raise ConfigurationError(f"vertex {v!r} is the sink and carries no chips")
        domain = g.vertices if sink is None else tuple(v for v in g.vertices if v != sink)
        return cls(g, sink, tuple(int(chips.get(v, 0)) for v in domain))

    # ----------------------------------------------------------------- queries
    def chip(self, v: str) -> int:
        try:
            return self.chips[self._slot[v]]
        except KeyError:
            raise ConfigurationError(f"vertex {v!r} is not in the configuration domain") from None

    def as_dict(self) -> dict[str, int]:
        return dict(zip(self.domain, self.chips))

    def total(self) -> int:
        return sum(self.chips)

    def leq(self, other: "Configuration") -> bool:
        """Pointwise comparison; requires identical host and domain."""
        _check_same_domain(self, other)
        return all(a <= b for a, b in zip(self.chips, other.chips))

    def __add__(self, other: "Configuration") -> "Configuration":
        return add(self, other)

    def __repr__(self):
        body = ", ".join(f"{v}={c}" for v, c in zip(self.domain, self.chips))
        return f"Configuration(sink={self.sink!r}, {body})"


@dataclass(frozen=True)
class FiringRecord:
    """Per-vertex firing counts of one stabilization, plus the chips it lost to the sink."""

    vertices: tuple[str, ...]
    counts: tuple[int, ...]
    chips_to_sink: int

    def count(self, v: str) -> int:
        try:
            return self.counts[self.vertices.index(v)]
        except ValueError:
            raise ConfigurationError(f"unknown vertex {v!r}") from None

    def as_dict(self) -> dict[str, int]:
        return dict(zip(self.vertices, self.counts))

    @property
    def total_firings(self) -> int:
        return sum(self.counts)


def _check_same_domain(c: Configuration, d: Configuration) -> None:
    if c.host != d.host or c.sink != d.sink:
        raise ConfigurationError("configurations live on different hosts or domains")


def _check_host(g: MultiDigraph, c: Configuration) -> None:
    if g.vertices != c.host.vertices:
        raise ConfigurationError("configuration does not match the given graph's vertex set")


def add(c: Configuration, d: Configuration) -> Configuration:
    """Pointwise sum of two configurations with the same host and domain."""
    _check_same_domain(c, d)
    return Configuration(c.host, c.sink, tuple(a + b for a, b in zip(c.chips, d.chips)))


def scale(c: Configuration, m: int) -> Configuration:
    if m < 0:
        raise ConfigurationError("scale factor must be nonnegative")
    return Configuration(c.host, c.sink, tuple(m * a for a in c.chips))


def add_chips(c: Configuration, v: str, k: int = 1) -> Configuration:
    """Return c with k extra chips on v."""
    i = c._slot.get(v)
    if i is None:
        raise ConfigurationError(f"vertex {v!r} is not in the configuration domain")
    chips = list(c.chips)
    chips[i] += k
    return Configuration(c.host, c.sink, tuple(chips))


def beta(g: MultiDigraph, s: str) -> Configuration:
    """The chips one firing of s would distribute: d(s, v) on every v != s."""
    g.vertex_index(s)
    return Configuration(
        g, s, tuple(g.multiplicity(s, v) for v in g.vertices if v != s)
    )


def augment_sink(c: Configuration, extra: int = 0) -> Configuration:
    """Switch a sink-game configuration to the full domain, placing
    outdeg(sink) + extra chips on the sink."""
    if c.sink is None:
        raise ConfigurationError("configuration has no sink to augment")
    if extra < 0:
        raise ConfigurationError("extra chips must be nonnegative")
    on_sink = c.host.outdeg(c.sink) + extra
    chips = []
    it = iter(c.chips)
    for v in c.host.vertices:
        chips.append(on_sink if v == c.sink else next(it))
    return Configuration(c.host, None, tuple(chips))


def restrict(c: Configuration, sink: str) -> Configuration:
    """Drop one vertex from a full-domain configuration, declaring it the sink."""
    if c.sink is not None:
        raise ConfigurationError("configuration already has a sink")
    c.host.vertex_index(sink)
    return Configuration(
        c.host, sink, tuple(x for v, x in zip(c.host.vertices, c.chips) if v != sink)
    )


def is_firable(g: MultiDigraph, c: Configuration, v: str) -> bool:
    """Whether v can fire: it holds outdeg(v) chips and has a non-loop out-arc.

    The sink of a sink-game configuration never fires; asking about it is an
    error rather than False.
    """
    _check_host(g, c)
    if v == c.sink:
        raise ConfigurationError(f"{v!r} is the sink and never fires")
    out = g.outdeg(v)
    return c.chip(v) >= out and out - g.loops_at(v) >= 1


def fire(g: MultiDigraph, c: Configuration, v: str) -> Configuration:
    """Fire v once: v loses outdeg(v) - d(v,v) chips, each other vertex u gains
    d(v, u).  Chips sent to a declared sink vanish."""
    if not is_firable(g, c, v):
        raise FiringError(f"vertex {v!r} is not firable")
    slot = c._slot
    chips = list(c.chips)
    chips[slot[v]] -= g.outdeg(v) - g.loops_at(v)
    for u in g.out_neighbors(v):
        if u != c.sink:
            chips[slot[u]] += g.multiplicity(v, u)
    return Configuration(c.host, c.sink, tuple(chips))


def is_stable(g: MultiDigraph, c: Configuration) -> bool:
    return not any(
        is_firable(g, c, v) for v in c.domain
    )


def firing_bound(g: MultiDigraph, c: Configuration) -> int:
    """Crude certified bound on the number of firings of a convergent game."""
    n = g.n_vertices
    max_out = max((g.outdeg(v) for v in g.vertices), default=0)
    return (c.total() + g.n_arcs) * max(n, 1) * (max_out + 1) * 2**n


def stabilize(g: MultiDigraph, c: Configuration) -> tuple[Configuration, FiringRecord]:
    """Fire until no vertex is firable; returns the stable configuration and a record.

    The effective host must converge: either c declares a sink (which never
    fires), or g itself has a global sink, e.g. a ``delete_out_arcs`` result.
    The schedule sweeps the domain in canonical vertex order, firing each vertex
    to exhaustion; by the abelian property the outcome and the per-vertex
    firing counts are schedule independent.  If the total number of firings
    exceeds the certified bound the game cannot converge and an error is raised.
    """
    _check_host(g, c)
    slot = c._slot
    chips = list(c.chips)
    counts = dict.fromkeys(g.vertices, 0)
    sink = c.sink
    vanished = 0

    active = []
    for v in c.domain:
        out = g.outdeg(v)
        if out - g.loops_at(v) >= 1:
            active.append((v, out, out - g.loops_at(v)))

    bound = firing_bound(g, c)
    fired_total = 0
    progress = True
    while progress:
        progress = False
        for v, out, drop in active:
            i = slot[v]
            if chips[i] < out:
                continue
            # batched consecutive firings of v; identical to firing one by one
            k = (chips[i] - out) // drop + 1
            chips[i] -= k * drop
            for u in g.out_neighbors(v):
                gain = k * g.multiplicity(v, u)
                if u == sink:
                    vanished += gain
                else:
                    chips[slot[u]] += gain
            counts[v] += k
            fired_total += k
            progress = True
            if fired_total > bound:
                raise NonTerminationError(
                    f"more than {bound} firings; the host graph has no global sink"
                )
    record = FiringRecord(g.vertices, tuple(counts[v] for v in g.vertices), vanished)
    return Configuration(c.host, c.sink, tuple(chips)), record


def parse_config_literal(g: MultiDigraph, text: str, sink: str | None = None) -> Configuration:
    """Parse a ``v1=3,v2=0`` chip literal; omitted vertices default to 0."""
    chips: dict[str, int] = {}
    text = text.strip()
    if text:
        for part in text.split(","):
            if "=" not in part:
                raise ConfigurationError(f"bad configuration entry {part!r}, expected name=count")
            name, _, value = part.partition("=")
            name = name.strip()
            try:
                count = int(value.strip())
            except ValueError:
                raise ConfigurationError(f"chip count {value.strip()!r} is not an integer") from None
            if count < 0:
                raise ConfigurationError(f"chip count on {name!r} must be nonnegative")
            if not g.has_vertex(name):
                raise ConfigurationError(f"unknown vertex {name!r} in configuration literal")
            if name in chips:
                raise ConfigurationError(f"vertex {name!r} listed twice")
            chips[name] = count
    return Configuration.of(g, chips, sink)
