"""Invariant-key censuses: bucket graphs by exact invariants and count
the ones sharing a bucket with at least one other graph.

A spec is an ordered list of (matrix kind, invariant type) parts,
written ``"A:sp"`` or ``"DL:sp,DQ:in"``.  The key of a graph under a
spec is the concatenation of canonical byte encodings of each part --
the full integer characteristic polynomial for ``sp``, the invariant
factors plus zero count for ``in`` -- so two graphs share a bucket
exactly when they agree on every listed invariant simultaneously.
"""

from __future__ import annotations

import enum
import hashlib
import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from snfcensus.exact import char_poly, snf
from snfcensus.gen import GraphStream
from snfcensus.graphio import Graph
from snfcensus.matrices import DisconnectedGraphError, MatrixKind, build_matrix


class CensusError(ValueError):
    """Input stream violated census preconditions (record context included)."""


class InvariantType(enum.Enum):
    SP = "sp"  # spectrum: characteristic polynomial
    IN = "in"  # invariant factors: Smith normal form


Part = tuple[MatrixKind, InvariantType]

# one tag byte per part; lowercase for spectra, uppercase for SNFs
_TAGS: dict[Part, bytes] = {}
for _k, _sp_tag in zip(MatrixKind, b"alqdef"):
    _TAGS[(_k, InvariantType.SP)] = bytes([_sp_tag])
    _TAGS[(_k, InvariantType.IN)] = bytes([_sp_tag]).upper()


@dataclass(frozen=True)
class InvariantSpec:
    parts: tuple[Part, ...]

    def __post_init__(self):
        if not self.parts:
            raise ValueError("spec needs at least one part")

    @property
    def label(self) -> str:
        return ",".join(f"{k.value}:{t.value}" for k, t in self.parts)

    def __str__(self) -> str:
        return self.label


def parse_spec(text: str) -> InvariantSpec:
    """Parse ``"KIND:sp|in[,KIND:sp|in...]"`` into an InvariantSpec."""
    parts = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            raise ValueError(f"empty part in spec {text!r}")
        kind_s, sep, type_s = chunk.partition(":")
        if not sep:
            raise ValueError(f"part {chunk!r} lacks ':' (want KIND:sp or KIND:in)")
        kind = MatrixKind.parse(kind_s)
        type_s = type_s.strip().lower()
        try:
            itype = InvariantType(type_s)
        except ValueError:
            raise ValueError(f"invariant type {type_s!r} must be 'sp' or 'in'") from None
        parts.append((kind, itype))
    return InvariantSpec(tuple(parts))


def _encode_ints(values) -> bytes:
    """Length-prefixed decimal encoding; self-delimiting, so injective."""
    return b"".join(b"%d:%d" % (len(str(v)), v) for v in values)


def part_key(g: Graph, part: Part) -> bytes:
    kind, itype = part
    m = build_matrix(g, kind)
    if itype is InvariantType.SP:
        return _TAGS[part] + _encode_ints(char_poly(m).coeffs)
    res = snf(m)
    return _TAGS[part] + _encode_ints(list(res.factors) + [res.zeros])


def key_of(g: Graph, spec: InvariantSpec) -> bytes:
    """Canonical census key: concatenation of the part encodings."""
    return b"".join(part_key(g, p) for p in spec.parts)


@dataclass(frozen=True)
class SpecResult:
    spec: str
    mates_count: int
    ratio: float
    histogram: dict[int, int]  # bucket size -> number of buckets


@dataclass(frozen=True)
class CensusReport:
    n: int
    universe: int
    results: tuple[SpecResult, ...]


def _mates_and_histogram(counter: Counter) -> tuple[int, dict[int, int]]:
    mates = 0
    hist: Counter = Counter()
    for c in counter.values():
        hist[c] += 1
        if c >= 2:
            mates += c
    return mates, dict(sorted(hist.items()))


def _keys_for_chunk(args) -> list[list[bytes]]:
    start, graphs, all_parts, part_lists = args
    out = []
    for offset, g in enumerate(graphs):
        try:
            cache = {p: part_key(g, p) for p in all_parts}
        except DisconnectedGraphError as e:
            raise CensusError(
                f"record {start + offset + 1}: disconnected graph in stream ({e})"
            ) from None
        out.append([b"".join(cache[p] for p in plist) for plist in part_lists])
    return out


def _iter_spec_keys(stream: GraphStream, specs: list[InvariantSpec], jobs: int):
    """Yield per-graph lists of spec keys, sharing part computations."""
    all_parts: list[Part] = []
    for s in specs:
        for p in s.parts:
            if p not in all_parts:
                all_parts.append(p)
    part_lists = [s.parts for s in specs]
    if jobs <= 1:
        recno = 0
        for g in stream:
            recno += 1
            try:
                cache = {p: part_key(g, p) for p in all_parts}
            except DisconnectedGraphError as e:
                raise CensusError(
                    f"record {recno}: disconnected graph in stream ({e})") from None
            yield [b"".join(cache[p] for p in plist) for plist in part_lists]
        return

    def chunks():
        buf = []
        start = 0
        for g in stream:
            buf.append(g)
            if len(buf) == 2048:
                yield (start, buf, all_parts, part_lists)
                start += len(buf)
                buf = []
        if buf:
            yield (start, buf, all_parts, part_lists)

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for block in pool.map(_keys_for_chunk, chunks()):
            yield from block


def run_census(stream: GraphStream, specs, *, two_pass: bool = False,
               jobs: int = 1) -> CensusReport:
    """Count, for every spec, the graphs whose key bucket has size >= 2.

    One representative per isomorphism class must arrive on the
    stream.  ``two_pass`` buckets 128-bit key digests first and
    re-verifies exact keys only inside candidate buckets, trading a
    second stream pass for a much smaller working set (meant for the
    n = 10 universe); both modes produce identical reports.
    """
    specs = [parse_spec(s) if isinstance(s, str) else s for s in specs]
    if not two_pass:
        counters: list[Counter] = [Counter() for _ in specs]
        universe = 0
        for keys in _iter_spec_keys(stream, specs, jobs):
            universe += 1
            for c, k in zip(counters, keys):
                c[k] += 1
        exact = counters
    else:
        hashed: list[Counter] = [Counter() for _ in specs]
        universe = 0
        for keys in _iter_spec_keys(stream, specs, jobs):
            universe += 1
            for c, k in zip(hashed, keys):
                c[hashlib.blake2b(k, digest_size=16).digest()] += 1
        hot = [frozenset(h for h, c in counter.items() if c >= 2)
               for counter in hashed]
        exact = [Counter() for _ in specs]
        second = 0
        for keys in _iter_spec_keys(stream, specs, jobs):
            second += 1
            for i, k in enumerate(keys):
                if hashlib.blake2b(k, digest_size=16).digest() in hot[i]:
                    exact[i][k] += 1
        if second != universe:
            raise CensusError(
                f"stream changed between passes: {universe} then {second} records")

    results = []
    for s, counter in zip(specs, exact):
        mates, hist = _mates_and_histogram(counter)
        if two_pass:
            # graphs outside hot digest buckets are exact singletons
            # (equal keys always share a digest), so restore them here
            leftovers = universe - sum(counter.values())
            if leftovers:
                hist[1] = hist.get(1, 0) + leftovers
        ratio = mates / universe if universe else 0.0
        results.append(SpecResult(s.label, mates, ratio, hist))
    return CensusReport(stream.n, universe, tuple(results))


def emit_report(report: CensusReport, format: str = "tsv") -> bytes:
    """Render a report deterministically as TSV or JSON.

    Ratios carry 15 significant digits; all counts are exact decimals.
    """
    fmt = format.lower()
    if fmt == "tsv":
        lines = ["n\tuniverse\tspec\tmates\tratio"]
        for r in report.results:
            lines.append(f"{report.n}\t{report.universe}\t{r.spec}\t"
                         f"{r.mates_count}\t{r.ratio:.15g}")
        return ("\n".join(lines) + "\n").encode()
    if fmt == "json":
        doc = {
            "n": report.n,
            "universe": report.universe,
            "results": [
                {
                    "spec": r.spec,
                    "mates": r.mates_count,
                    "ratio": float(f"{r.ratio:.15g}"),
                    "histogram": {str(k): v for k, v in sorted(r.histogram.items())},
                }
                for r in report.results
            ],
        }
        return (json.dumps(doc, indent=2, sort_keys=True) + "\n").encode()
    raise ValueError(f"unknown format {format!r} (want tsv or json)")
