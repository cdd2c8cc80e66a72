"""Ice quivers: the combinatorial substrate for every seed.

A quiver stores the *doubled* skew form eps2[i][j] = 2*eps_ij as integers,
so half-integer entries (allowed only between frozen vertices) never
require fractional arithmetic.  Vertex ids are stable tokens that survive
mutation unchanged.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import (
    DuplicateGlueTarget,
    FrozenMutation,
    GlueNonFrozen,
    UnknownVertex,
)


@dataclass(frozen=True)
class Vertex:
    id: str
    frozen: bool
    label: str = ""


class IceQuiver:
    """Vertices with a frozen subset and the doubled skew form 2*eps."""

    def __init__(self, vertices, eps2):
        self.vertices = tuple(vertices)
        self.eps2 = tuple(tuple(row) for row in eps2)
        self.index = {v.id: i for i, v in enumerate(self.vertices)}
        if len(self.index) != len(self.vertices):
            raise ValueError("vertex ids must be unique")
        self._validate()

    def _validate(self):
        m = len(self.vertices)
        for i in range(m):
            if len(self.eps2[i]) != m:
                raise ValueError("eps2 must be square")
            if self.eps2[i][i] != 0:
                raise ValueError("eps2 diagonal must vanish")
            for j in range(i + 1, m):
                if self.eps2[i][j] != -self.eps2[j][i]:
                    raise ValueError("eps2 must be skew-symmetric")
                if self.eps2[i][j] % 2 and not (
                    self.vertices[i].frozen and self.vertices[j].frozen
                ):
                    raise ValueError(
                        "eps may be half-integral only between frozen vertices"
                    )

    # -- basic queries -----------------------------------------------------

    def __len__(self):
        return len(self.vertices)

    def ids(self):
        return [v.id for v in self.vertices]

    def vertex(self, vid):
        try:
            return self.vertices[self.index[vid]]
        except KeyError:
            raise UnknownVertex(vid) from None

    def is_frozen(self, vid):
        return self.vertex(vid).frozen

    def mutable_ids(self):
        return [v.id for v in self.vertices if not v.frozen]

    def frozen_ids(self):
        return [v.id for v in self.vertices if v.frozen]

    def eps2_entry(self, i_id, j_id):
        return self.eps2[self.index[i_id]][self.index[j_id]]

    def __eq__(self, other):
        return (
            isinstance(other, IceQuiver)
            and self.vertices == other.vertices
            and self.eps2 == other.eps2
        )

    def __hash__(self):
        return hash((self.vertices, self.eps2))

    def __repr__(self):
        frozen = sum(1 for v in self.vertices if v.frozen)
        return f"IceQuiver({len(self.vertices)} vertices, {frozen} frozen)"


def mutate_quiver(quiver, k):
    """Quiver mutation at the mutable vertex id k (three-case eps rule)."""
    if k not in quiver.index:
        raise UnknownVertex(k)
    ki = quiver.index[k]
    if quiver.vertices[ki].frozen:
        raise FrozenMutation(f"vertex {k!r} is frozen")
    m = len(quiver.vertices)
    old = quiver.eps2
    col = [old[i][ki] for i in range(m)]
    row = old[ki]
    new = [list(r) for r in old]
    for i in range(m):
        if i == ki:
            for j in range(m):
                new[i][j] = -old[i][j]
            continue
        e_ik = col[i]
        new[i][ki] = -e_ik
        if e_ik == 0:
            continue
        # k is mutable, so eps_ik is integral and e_ik = 2*eps_ik is even
        half = abs(e_ik) // 2
        for j in range(m):
            if j == ki or j == i:
                continue
            e_kj = row[j]
            if e_ik * e_kj > 0:
                new[i][j] += half * e_kj
    return IceQuiver(quiver.vertices, new)


def mutate_along(quiver, path):
    for k in path:
        quiver = mutate_quiver(quiver, k)
    return quiver


def amalgamate(q1, q2, glue, defrost=True):
    """Glue two quivers along pairs of frozen vertices.

    Each glue pair (a, b) takes a from q1 and b from q2; the merged vertex
    keeps a's id, eps entries add (so opposite arrows cancel), and the
    merged vertex is unfrozen when defrost is set.
    """
    for a, b in glue:
        if not (q1.is_frozen(a) and q2.is_frozen(b)):
            raise GlueNonFrozen(f"glue pair ({a!r}, {b!r}) must be frozen")
    firsts = [a for a, _ in glue]
    seconds = [b for _, b in glue]
    if len(set(firsts)) != len(firsts) or len(set(seconds)) != len(seconds):
        raise DuplicateGlueTarget("glue pairs must be disjoint")
    partner = dict(zip(seconds, firsts))

    clash = (set(q2.ids()) - set(seconds)) & set(q1.ids())
    if clash:
        raise ValueError(f"unglued vertex ids collide: {sorted(clash)}")

    merged = set(firsts)
    vertices = []
    for v in q1.vertices:
        if v.id in merged and defrost:
            vertices.append(Vertex(v.id, False, v.label))
        else:
            vertices.append(v)
    vertices += [v for v in q2.vertices if v.id not in partner]

    pos = {v.id: i for i, v in enumerate(vertices)}
    m = len(vertices)
    eps2 = [[0] * m for _ in range(m)]
    for i_id in q1.ids():
        ii = pos[i_id]
        for j_id in q1.ids():
            eps2[ii][pos[j_id]] += q1.eps2_entry(i_id, j_id)
    for i_id in q2.ids():
        ii = pos[partner.get(i_id, i_id)]
        for j_id in q2.ids():
            eps2[ii][pos[partner.get(j_id, j_id)]] += q2.eps2_entry(i_id, j_id)
    return IceQuiver(vertices, eps2)


def quiver_equal_upto(q1, q2, perm):
    """True iff eps entries of q1 match q2 under the vertex bijection perm.

    perm maps q1 ids to q2 ids, must be total, and must preserve the
    frozen flag.
    """
    if set(perm.keys()) != set(q1.ids()) or set(perm.values()) != set(q2.ids()):
        return False
    for vid, wid in perm.items():
        if q1.is_frozen(vid) != q2.is_frozen(wid):
            return False
    for i_id in q1.ids():
        for j_id in q1.ids():
            if q1.eps2_entry(i_id, j_id) != q2.eps2_entry(perm[i_id], perm[j_id]):
                return False
    return True


# -- serialization ----------------------------------------------------------


def quiver_to_dict(quiver):
    return {
        "vertices": [
            {"id": v.id, "frozen": v.frozen, "label": v.label} for v in quiver.vertices
        ],
        "eps2": [list(row) for row in quiver.eps2],
    }


def quiver_from_dict(data):
    vertices = [
        Vertex(v["id"], bool(v["frozen"]), v.get("label", ""))
        for v in data["vertices"]
    ]
    return IceQuiver(vertices, data["eps2"])


def quiver_to_json(quiver):
    return json.dumps(quiver_to_dict(quiver), separators=(",", ":"), sort_keys=True)


def quiver_from_json(text):
    return quiver_from_dict(json.loads(text))
