"""Directed graph of canonical DOWs connected by insertions.

Nodes are the canonical representatives of all equivalence classes up to a
size bound; an edge [w] -> [v] carries every insertion spec that sends w to
a word equivalent to v.  Builds are deterministic: node ids are dense in
(size, lexicographic) order and edge labels are sorted, so exports are
byte-identical across runs and across worker counts.
"""
from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .insertions import InsertionKind, InsertionSpec, insert, parse_spec
from .words import (
    Word,
    all_canonical_dows,
    dow_size,
    format_word,
    is_ascending,
    is_dow,
    normalize,
    parse_word,
)

DEFAULT_NODE_CAP = 20000


def _resolve_threads(threads: int | None) -> int:
    if threads is None:
        env = os.environ.get("DOWKIT_THREADS", "").strip()
        threads = int(env) if env else (os.cpu_count() or 1)
    if threads < 1:
        raise ValueError("thread count must be >= 1")
    return threads


def _expand(args: tuple[Word, int]) -> list[tuple[Word, InsertionSpec, Word]]:
    """All insertions into w up to the nu bound, with normalized results."""
    w, max_nu = args
    out = []
    for nu in range(1, max_nu + 1):
        # a trivial return insertion is the same map as the trivial repeat,
        # so nu = 1 contributes only repeat labels
        kinds = (
            (InsertionKind.REPEAT,)
            if nu == 1
            else (InsertionKind.REPEAT, InsertionKind.RETURN)
        )
        for kind in kinds:
            for k in range(1, len(w) + 2):
                for ell in range(k, len(w) + 2):
                    spec = InsertionSpec(kind, nu, k, ell)
                    out.append((w, spec, normalize(insert(w, spec))))
    return out


@dataclass
class WordGraph:
    """Insertion graph over canonical DOWs of size <= max_size.

    edges maps (source id, target id) to the sorted tuple of specs realizing
    the step; nu on any edge from a size-s node is capped by
    min(nu_cap, max_size - s) so every target stays inside the graph.
    """

    max_size: int
    nu_cap: int
    nodes: tuple[Word, ...]
    edges: dict[tuple[int, int], tuple[InsertionSpec, ...]]
    _ids: dict[Word, int] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        self._ids = {w: i for i, w in enumerate(self.nodes)}

    def node_id(self, w: Word) -> int:
        if not is_dow(w):
            raise ValueError(f"not a DOW: {format_word(w)!r}")
        canon = normalize(w)
        if canon not in self._ids:
            raise ValueError(
                f"{format_word(canon)!r} has size {dow_size(canon)}, "
                f"outside this graph (max_size={self.max_size})"
            )
        return self._ids[canon]

    def count_classes(self, n: int) -> int:
        """Number of equivalence classes of size n in the graph."""
        if not 0 <= n <= self.max_size:
            raise ValueError(f"size {n} outside 0..{self.max_size}")
        return sum(1 for w in self.nodes if len(w) // 2 == n)

    def distance_table(self) -> dict[int, int]:
        """BFS hops from the empty word to every node id."""
        start = self._ids[()]
        dist = {start: 0}
        frontier = [start]
        succ: dict[int, list[int]] = {}
        for (src, dst) in self.edges:
            succ.setdefault(src, []).append(dst)
        while frontier:
            nxt = []
            for node in frontier:
                for other in succ.get(node, ()):
                    if other not in dist:
                        dist[other] = dist[node] + 1
                        nxt.append(other)
            frontier = nxt
        return dist

    def distance(self, w: Word) -> int:
        """Insertion count of a shortest route from the empty word to [w]."""
        node = self.node_id(w)
        dist = self.distance_table()
        if node not in dist:
            raise ValueError(f"{format_word(normalize(w))!r} is unreachable")
        return dist[node]

    def shortest_path(self, w: Word) -> list[tuple[Word, InsertionSpec]]:
        """One shortest insertion route from the empty word to [w].

        Each step pairs a source node with the spec applied to it; ties are
        broken toward the smallest (nu, kind, k, ell, source id) so the
        route is reproducible.
        """
        target = self.node_id(w)
        dist = self.distance_table()
        if target not in dist:
            raise ValueError(f"{format_word(normalize(w))!r} is unreachable")
        steps: list[tuple[Word, InsertionSpec]] = []
        node = target
        while dist[node] > 0:
            best = None
            for (src, dst), specs in self.edges.items():
                if dst != node or dist.get(src) != dist[node] - 1:
                    continue
                for spec in specs:
                    key = (spec.nu, spec.kind.value, spec.k, spec.ell, src)
                    if best is None or key < best[0]:
                        best = (key, src, spec)
            assert best is not None
            steps.append((self.nodes[best[1]], best[2]))
            node = best[1]
        steps.reverse()
        return steps

    def to_json_bytes(self) -> bytes:
        payload = {
            "max_size": self.max_size,
            "nu_cap": self.nu_cap,
            "nodes": [
                {"id": i, "word": format_word(w) or "-"}
                for i, w in enumerate(self.nodes)
            ],
            "edges": [
                {
                    "from": src,
                    "to": dst,
                    "labels": [str(spec) for spec in self.edges[(src, dst)]],
                }
                for src, dst in sorted(self.edges)
            ],
        }
        return (json.dumps(payload, indent=2) + "\n").encode()

    @classmethod
    def from_json_bytes(cls, data: bytes) -> "WordGraph":
        payload = json.loads(data.decode())
        for i, entry in enumerate(payload["nodes"]):
            if entry["id"] != i:
                raise ValueError("node ids must be dense and ascending")
        nodes = tuple(parse_word(entry["word"]) for entry in payload["nodes"])
        if nodes != build_nodes(payload["max_size"]):
            raise ValueError("node list is not in canonical (size, lex) order")
        edges = {
            (entry["from"], entry["to"]): tuple(
                parse_spec(text) for text in entry["labels"]
            )
            for entry in payload["edges"]
        }
        for src, dst in edges:
            if not (0 <= src < len(nodes) and 0 <= dst < len(nodes)):
                raise ValueError(f"edge ({src}, {dst}) references a missing node")
        return cls(payload["max_size"], payload["nu_cap"], nodes, edges)

    def to_dot_bytes(self) -> bytes:
        lines = ["digraph words {"]
        for i, w in enumerate(self.nodes):
            lines.append(f'  n{i} [label="{format_word(w) or "-"}"];')
        for src, dst in sorted(self.edges):
            specs = self.edges[(src, dst)]
            label = str(specs[0]) if len(specs) == 1 else f"{specs[0]} x{len(specs)}"
            lines.append(f'  n{src} -> n{dst} [label="{label}"];')
        lines.append("}")
        return ("\n".join(lines) + "\n").encode()


def build_nodes(max_size: int) -> tuple[Word, ...]:
    """Canonical DOWs of size 0..max_size in (size, lex) order."""
    nodes: list[Word] = []
    for size in range(max_size + 1):
        nodes.extend(all_canonical_dows(size))
    return tuple(nodes)


def build(
    max_size: int,
    nu_cap: int,
    threads: int | None = None,
    node_cap: int = DEFAULT_NODE_CAP,
) -> WordGraph:
    """Build the insertion graph up to max_size.

    threads > 1 fans the per-node insertion sweep out to a thread pool;
    results are merged in node order, so the graph does not depend on the
    worker count.  threads = None reads DOWKIT_THREADS, defaulting to 1.
    """
    if max_size < 0:
        raise ValueError("max_size must be >= 0")
    if nu_cap < 1:
        raise ValueError("nu_cap must be >= 1")
    workers = _resolve_threads(threads)
    nodes = build_nodes(max_size)
    if len(nodes) > node_cap:
        raise ValueError(
            f"{len(nodes)} nodes exceeds node_cap={node_cap}; "
            "raise the cap explicitly to build this graph"
        )
    ids = {w: i for i, w in enumerate(nodes)}
    tasks = [
        (w, min(nu_cap, max_size - len(w) // 2))
        for w in nodes
        if len(w) // 2 < max_size
    ]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            batches = list(pool.map(_expand, tasks))
    else:
        batches = [_expand(task) for task in tasks]
    edges: dict[tuple[int, int], list[InsertionSpec]] = {}
    for batch in batches:
        for w, spec, result in batch:
            edges.setdefault((ids[w], ids[result]), []).append(spec)
    return WordGraph(
        max_size,
        nu_cap,
        nodes,
        {
            key: tuple(sorted(specs, key=str))
            for key, specs in sorted(edges.items())
        },
    )


def export_graph(g: WordGraph, fmt: str) -> bytes:
    """Serialize a graph as 'json' or 'dot' bytes."""
    fmt = fmt.lower()
    if fmt == "json":
        return g.to_json_bytes()
    if fmt == "dot":
        return g.to_dot_bytes()
    raise ValueError(f"unknown export format {fmt!r}")
