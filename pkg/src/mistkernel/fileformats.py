"""On-disk formats: the edge-list graph format and the JSON reduction trace.

Edge lists look like::

    # optional comments
    p <n> <m>
    e <u> <v>        (0 <= u < v < n, one line per edge, m lines)

Serialization is canonical (edges sorted lexicographically) so identical
graphs produce identical bytes.  The trace document records every
reduction step with enough detail to replay the kernelization bit-exactly
and to lift kernel solutions offline.
"""

from __future__ import annotations

import json

from .graph import Graph, InvariantError, SpanningTree, internal_count
from .kernelizer import KernelResult, ReductionRecord, replay_reduction

TRACE_FORMAT = "mist-trace-v1"


class FormatError(ValueError):
    """Malformed input file."""


def parse_edge_list(text: str) -> Graph:
    lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        lines.append(line)
    if not lines:
        raise FormatError("empty document")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "p":
        raise FormatError(f"bad header line: {lines[0]!r}")
    try:
        n, m = int(head[1]), int(head[2])
    except ValueError:
        raise FormatError(f"bad header line: {lines[0]!r}") from None
    if n < 0 or m < 0:
        raise FormatError("negative counts in header")
    if len(lines) - 1 != m:
        raise FormatError(f"header promises {m} edges, found {len(lines) - 1}")
    edges = []
    seen = set()
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 3 or parts[0] != "e":
            raise FormatError(f"bad edge line: {line!r}")
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise FormatError(f"bad edge line: {line!r}") from None
        if not (0 <= u < v < n):
            raise FormatError(f"edge ({u}, {v}) violates 0 <= u < v < n")
        if (u, v) in seen:
            raise FormatError(f"duplicate edge ({u}, {v})")
        seen.add((u, v))
        edges.append((u, v))
    return Graph(n, edges)


def serialize_edge_list(g: Graph) -> str:
    lines = [f"p {g.n} {g.m}"]
    lines.extend(f"e {u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Trace documents


def _record_to_obj(rec: ReductionRecord) -> dict:
    return {
        "s": sorted(rec.s),
        "l": sorted(rec.l),
        "v_s": rec.v_s,
        "v_l": rec.v_l,
        "neighbor_map": sorted(rec.neighbor_map),
        "index_map": [[old, new] for old, new in sorted(rec.index_map.items())],
        "bsl_tree": [[u, v] for u, v in sorted(rec.bsl_tree.edges)],
        "delta_k": rec.delta_k,
    }


def _record_from_obj(obj: dict) -> ReductionRecord:
    try:
        s = frozenset(obj["s"])
        l = frozenset(obj["l"])
        tree = SpanningTree(s | l, [tuple(e) for e in obj["bsl_tree"]])
        return ReductionRecord(
            s=s,
            l=l,
            v_s=obj["v_s"],
            v_l=obj["v_l"],
            neighbor_map=frozenset(obj["neighbor_map"]),
            index_map={old: new for old, new in obj["index_map"]},
            bsl_tree=tree,
            delta_k=obj["delta_k"],
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad reduction record: {exc}") from None


def trace_to_json(result: KernelResult, k_original: int) -> str:
    doc = {
        "format": TRACE_FORMAT,
        "k_original": k_original,
        "outcome": result.outcome,
        "k_prime": result.k_prime,
        "kernel_vertices": result.graph.n if result.graph is not None else None,
        "kernel_edges": result.graph.m if result.graph is not None else None,
        "reductions": [_record_to_obj(r) for r in result.trace],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def trace_from_json(text: str):
    """Parse a trace document; returns (meta dict, list of ReductionRecords)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"trace is not valid JSON: {exc}") from None
    if not isinstance(doc, dict) or doc.get("format") != TRACE_FORMAT:
        raise FormatError("not a recognized trace document")
    records = [_record_from_obj(o) for o in doc.get("reductions", [])]
    meta = {k: doc.get(k) for k in
            ("k_original", "outcome", "k_prime", "kernel_vertices", "kernel_edges")}
    return meta, records


def verify_trace(g: Graph, meta: dict, records, kernel: Graph) -> None:
    """Replay a trace against its input graph and check the kernel matches.

    Raises InvariantError naming the first violated invariant;
    replay_reduction checks the per-record certificate invariants.
    """
    cur = g
    for rec in records:
        cur = replay_reduction(cur, rec)
    if cur != kernel:
        raise InvariantError("replayed kernel differs from the kernel file")
    if meta.get("outcome") != "kernel":
        raise InvariantError(f"trace outcome is {meta.get('outcome')!r}, not a kernel")
    if meta.get("kernel_vertices") != kernel.n or meta.get("kernel_edges") != kernel.m:
        raise InvariantError("kernel size in the trace differs from the kernel file")
    delta = sum(rec.delta_k for rec in records)
    if meta.get("k_original") is not None and meta.get("k_prime") is not None:
        if meta["k_original"] - delta != meta["k_prime"]:
            raise InvariantError("k' is inconsistent with the recorded reductions")
