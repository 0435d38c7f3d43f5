"""Graph family containers and the JSON interchange file format.

A family file is a JSON document
``{"version": 1, "n": <int>, "edge_order": "colex-1based", "graphs": [<hex>, ...]}``
with optional ``"role"`` ("basis" or "factorization") and ``"provenance"``
entries.  Each graph is its edge bit vector packed little-endian within bytes
(slot k at byte k//8, bit k%8) and hex-encoded lowercase.  Serialization is
canonical (sorted keys, two-space indent, trailing newline) so that a loaded
file re-serializes byte-identically.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from pathlib import Path

from .core import LabeledGraph, edge_slots
from .errors import DomainError

FORMAT_VERSION = 1
EDGE_ORDER = "colex-1based"


@dataclass(frozen=True, slots=True)
class GraphFamily:
    """Ordered, duplicate-free collection of graphs on a common vertex set."""

    n: int
    graphs: tuple[LabeledGraph, ...]
    provenance: dict = field(default_factory=dict, compare=False)
    claimed_size: int | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "graphs", tuple(self.graphs))
        seen = set()
        for g in self.graphs:
            if g.n != self.n:
                raise DomainError(f"member on {g.n} vertices in a family on {self.n}")
            if g.bits in seen:
                raise DomainError("duplicate graph in family")
            seen.add(g.bits)
        if self.claimed_size is not None and len(self.graphs) != self.claimed_size:
            raise DomainError(
                f"construction produced {len(self.graphs)} graphs, "
                f"expected {self.claimed_size}"
            )

    def __len__(self) -> int:
        return len(self.graphs)

    def __iter__(self):
        return iter(self.graphs)

    def __getitem__(self, idx: int) -> LabeledGraph:
        return self.graphs[idx]

    def masks(self) -> list[int]:
        return [g.bits for g in self.graphs]


@dataclass(frozen=True, slots=True)
class ImplicitFamily:
    """A family too large to enumerate: all graphs of the form
    ``base | (x & free)``, i.e. fixed bits outside ``free_mask`` and free
    choice inside it.  Carries a closed-form size plus membership/sampling."""

    n: int
    base_bits: int
    free_mask: int
    provenance: dict = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        if self.base_bits & self.free_mask:
            raise DomainError("base bits must avoid the free slots")
        if (self.base_bits | self.free_mask) >> edge_slots(self.n):
            raise DomainError("slot masks out of range")

    @property
    def log2_size(self) -> int:
        return self.free_mask.bit_count()

    @property
    def size(self) -> int:
        return 1 << self.log2_size

    def contains(self, g: LabeledGraph) -> bool:
        return g.n == self.n and (g.bits & ~self.free_mask) == self.base_bits

    def sample(self, rng: random.Random) -> LabeledGraph:
        bits = self.base_bits | (rng.getrandbits(edge_slots(self.n)) & self.free_mask)
        return LabeledGraph(self.n, bits)


@dataclass(frozen=True, slots=True)
class LoadedFamily:
    """Raw contents of a family file, before interpretation."""

    n: int
    graphs: tuple[LabeledGraph, ...]
    role: str | None
    provenance: dict

    def to_graph_family(self) -> GraphFamily:
        return GraphFamily(self.n, self.graphs, provenance=dict(self.provenance))


def family_to_json(
    n: int,
    graphs,
    role: str | None = None,
    provenance: dict | None = None,
) -> str:
    doc: dict = {
        "version": FORMAT_VERSION,
        "n": n,
        "edge_order": EDGE_ORDER,
        "graphs": [g.to_hex() for g in graphs],
    }
    if role is not None:
        doc["role"] = role
    if provenance:
        doc["provenance"] = provenance
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def save_family(
    path,
    n: int,
    graphs,
    role: str | None = None,
    provenance: dict | None = None,
) -> None:
    Path(path).write_text(family_to_json(n, graphs, role=role, provenance=provenance))


def load_family(path) -> LoadedFamily:
    doc = json.loads(Path(path).read_text())
    if doc.get("version") != FORMAT_VERSION:
        raise DomainError(f"unsupported family file version {doc.get('version')!r}")
    if doc.get("edge_order") != EDGE_ORDER:
        raise DomainError(f"unsupported edge order {doc.get('edge_order')!r}")
    n = doc["n"]
    if not isinstance(n, int) or n < 1:
        raise DomainError("bad vertex count in family file")
    graphs = tuple(LabeledGraph.from_hex(n, h) for h in doc["graphs"])
    return LoadedFamily(
        n=n,
        graphs=graphs,
        role=doc.get("role"),
        provenance=doc.get("provenance", {}),
    )
