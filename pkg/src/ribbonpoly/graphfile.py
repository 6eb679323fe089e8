"""Text serialization of ribbon graphs.

Grammar (one record per line, ``#`` starts a comment anywhere):

    ribbon <vertex_count> <edge_count>
    rot <i>: <half-edge ids, cyclic order, space-separated>
    edge <j>: <ha> <hb> <twisted|untwisted>

The canonical form has no comments, single spaces, and lists all rot lines
in ascending vertex order followed by all edge lines in ascending edge
order; parse followed by write reproduces it byte for byte.
"""

from __future__ import annotations

from .ribbon import RibbonGraph, RibbonGraphError, build_ribbon_graph


class GraphFileError(ValueError):
    """Malformed graph file; message carries the offending line number."""


def parse_graph_file(text) -> RibbonGraph:
    header = None
    rotations = {}
    edges = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        kind = fields[0]
        if kind == "ribbon":
            if header is not None:
                raise GraphFileError("line %d: duplicate header" % lineno)
            if len(fields) != 3:
                raise GraphFileError(
                    "line %d: header must be 'ribbon <vertices> <edges>'" % lineno)
            try:
                header = (int(fields[1]), int(fields[2]))
            except ValueError:
                raise GraphFileError("line %d: non-integer header counts" % lineno)
            if header[0] < 0 or header[1] < 0:
                raise GraphFileError("line %d: negative counts" % lineno)
        elif kind == "rot":
            if header is None:
                raise GraphFileError("line %d: 'rot' before header" % lineno)
            if len(fields) < 2 or not fields[1].endswith(":"):
                raise GraphFileError(
                    "line %d: expected 'rot <i>: ...'" % lineno)
            try:
                index = int(fields[1][:-1])
                ids = [int(tok) for tok in fields[2:]]
            except ValueError:
                raise GraphFileError("line %d: non-integer field" % lineno)
            if not 0 <= index < header[0]:
                raise GraphFileError(
                    "line %d: vertex %d outside 0..%d"
                    % (lineno, index, header[0] - 1))
            if index in rotations:
                raise GraphFileError(
                    "line %d: duplicate rotation for vertex %d" % (lineno, index))
            rotations[index] = tuple(ids)
        elif kind == "edge":
            if header is None:
                raise GraphFileError("line %d: 'edge' before header" % lineno)
            if len(fields) != 5 or not fields[1].endswith(":"):
                raise GraphFileError(
                    "line %d: expected 'edge <j>: <ha> <hb> <twisted|untwisted>'"
                    % lineno)
            try:
                index = int(fields[1][:-1])
                ha, hb = int(fields[2]), int(fields[3])
            except ValueError:
                raise GraphFileError("line %d: non-integer field" % lineno)
            if fields[4] not in ("twisted", "untwisted"):
                raise GraphFileError(
                    "line %d: twist flag must be 'twisted' or 'untwisted'"
                    % lineno)
            if not 0 <= index < header[1]:
                raise GraphFileError(
                    "line %d: edge %d outside 0..%d"
                    % (lineno, index, header[1] - 1))
            if index in edges:
                raise GraphFileError(
                    "line %d: duplicate record for edge %d" % (lineno, index))
            edges[index] = (ha, hb, fields[4] == "twisted")
        else:
            raise GraphFileError(
                "line %d: unknown record type %r" % (lineno, kind))
    if header is None:
        raise GraphFileError("missing 'ribbon' header line")
    nv, ne = header
    if len(rotations) != nv:
        raise GraphFileError(
            "header declares %d vertices but %d rot lines given"
            % (nv, len(rotations)))
    if len(edges) != ne:
        raise GraphFileError(
            "header declares %d edges but %d edge lines given"
            % (ne, len(edges)))
    try:
        return build_ribbon_graph(
            nv,
            [rotations[i] for i in range(nv)],
            [edges[j] for j in range(ne)],
        )
    except RibbonGraphError as exc:
        raise GraphFileError(str(exc)) from exc


def write_graph_file(G) -> str:
    """Canonical text of a ribbon graph."""
    lines = ["ribbon %d %d" % (G.vertex_count, len(G.edges))]
    for i, rot in enumerate(G.rotations):
        lines.append(("rot %d:" % i) + "".join(" %d" % h for h in rot))
    for j, (a, b, t) in enumerate(G.edges):
        lines.append("edge %d: %d %d %s"
                     % (j, a, b, "twisted" if t else "untwisted"))
    return "\n".join(lines) + "\n"
