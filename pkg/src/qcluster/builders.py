"""Seed builders: the triangle quiver of a reduced word, and the
once-punctured-disk seed obtained by gluing two triangles.

Construction conventions (frozen by the golden tests and by the
quantum-group relation suite, which pins the global orientation):

* Every Dynkin level i carries one chamber per gap between consecutive
  occurrences of i in the word (n_i + 1 chambers, ends frozen).
* Intra-level arrows point from earlier chamber to later chamber, weight 1.
* For Dynkin-adjacent levels, chambers u = (a, b) and v = (c, d) interact by
  eps_uv = -1/2 * [ (c<b<d) + (a<c<b) - (a<d<b) - (c<a<d) ],
  reading chambers as open position intervals with infinite ends.
* Each simple root beta_k = alpha_m in the induced root sequence attaches a
  red frozen vertex at letter position k, with weight-1 arrows
  red -> (chamber ending at k) and (chamber starting at k) -> red.
* Red-red arrows carry eps = 1/2 from the earlier-attached to the
  later-attached vertex, for Dynkin-adjacent simple roots only.

A braid move on the word is realized by a single mutation at the enclosed
chamber plus a role relabeling; a commutation move is a pure relabeling.
DiskWordChart tracks the roles so quantum-group generators can be written
in a chart adapted to any reduced word and transported back.
"""

from __future__ import annotations

from dataclasses import dataclass

from .quiver import IceQuiver, Vertex, amalgamate
from .rootdata import star_involution, validate_reduced_word

NEG = -(10**9)
POS = 10**9


@dataclass
class TriangleQuiver:
    quiver: IceQuiver
    side_markers: dict  # {"left": [...], "right": [...], "red": [...]}
    level_of: dict  # vertex id -> Dynkin index
    letter_of: dict  # vertex id -> word position of its left crossing / attachment
    word: tuple


@dataclass
class DiskSeed:
    quiver: IceQuiver
    boundary_frozen: tuple  # ([A_1..A_r], [A'_1..A'_r]) vertex ids
    internal_vertices: tuple  # glued edge vertices (e-line + f-line)
    kappa_anchors: dict  # i -> {"e": (e1,e2,e3), "f": (f1,f2,f3)}
    cartan: object
    word: tuple
    chambers: dict  # {"L"/"R": {(level, t): vertex id}}


def _chamber_intervals(word, rank):
    """Per level: crossing positions (1-based) and chamber intervals."""
    occ = {i: [] for i in range(1, rank + 1)}
    for pos, letter in enumerate(word, start=1):
        occ[letter].append(pos)
    intervals = {}
    for i in range(1, rank + 1):
        bounds = [NEG] + occ[i] + [POS]
        intervals[i] = list(zip(bounds[:-1], bounds[1:]))
    return occ, intervals


def _inter_level_eps2(u, v):
    """Doubled eps between interval-chambers of Dynkin-adjacent levels."""
    a, b = u
    c, d = v
    val = 0
    if c < b < d:
        val += 1
    if a < c < b:
        val += 1
    if a < d < b:
        val -= 1
    if c < a < d:
        val -= 1
    return -val


def build_triangle(c, word):
    """The triangle quiver Q_{v,s} for a validated reduced word of w0."""
    seq = validate_reduced_word(c, word)
    word = seq.word
    occ, intervals = _chamber_intervals(word, c.rank)

    vertices = []
    level_of = {}
    letter_of = {}
    chamber_id = {}
    for i in range(1, c.rank + 1):
        n_i = len(occ[i])
        for t in range(n_i + 1):
            vid = f"c{i}_{t}"
            frozen = t == 0 or t == n_i
            vertices.append(Vertex(vid, frozen, label=f"level {i} chamber {t}"))
            chamber_id[(i, t)] = vid
            level_of[vid] = i
            letter_of[vid] = 0 if t == 0 else occ[i][t - 1]

    # red vertex per simple root in the induced root sequence
    red_pos = {}
    for k, beta in enumerate(seq.roots, start=1):
        if sum(beta) == 1:
            m = beta.index(1) + 1
            red_pos[m] = k
    assert len(red_pos) == c.rank, "every simple root occurs exactly once"
    for m in range(1, c.rank + 1):
        vid = f"r{m}"
        vertices.append(Vertex(vid, True, label=f"red alpha_{m}"))
        level_of[vid] = m
        letter_of[vid] = red_pos[m]

    pos_of = {v.id: idx for idx, v in enumerate(vertices)}
    m_total = len(vertices)
    eps2 = [[0] * m_total for _ in range(m_total)]

    def bump(u, v, val):
        iu, iv = pos_of[u], pos_of[v]
        eps2[iu][iv] += val
        eps2[iv][iu] -= val

    # intra-level: earlier chamber -> later chamber, weight 1
    for i in range(1, c.rank + 1):
        for t in range(len(occ[i])):
            bump(chamber_id[(i, t)], chamber_id[(i, t + 1)], 2)

    # inter-level for Dynkin-adjacent pairs
    for i in range(1, c.rank + 1):
        for j in range(i + 1, c.rank + 1):
            if c.a(i, j) != -1:
                continue
            for t, u in enumerate(intervals[i]):
                for s, v in enumerate(intervals[j]):
                    val = _inter_level_eps2(u, v)
                    if val:
                        bump(chamber_id[(i, t)], chamber_id[(j, s)], val)

    # red attachments
    for m in range(1, c.rank + 1):
        k = red_pos[m]
        lvl = word[k - 1]
        t_end = occ[lvl].index(k) + 1  # chamber t_end starts at k
        bump(f"r{m}", chamber_id[(lvl, t_end - 1)], 2)
        bump(chamber_id[(lvl, t_end)], f"r{m}", 2)

    # red-red: earlier attachment -> later, eps = 1/2, Dynkin-adjacent roots only
    for m1 in range(1, c.rank + 1):
        for m2 in range(m1 + 1, c.rank + 1):
            if c.a(m1, m2) != -1:
                continue
            early, late = (m1, m2) if red_pos[m1] < red_pos[m2] else (m2, m1)
            bump(f"r{early}", f"r{late}", 1)

    quiver = IceQuiver(vertices, eps2)
    side_markers = {
        "left": [chamber_id[(i, 0)] for i in range(1, c.rank + 1)],
        "right": [chamber_id[(i, len(occ[i]))] for i in range(1, c.rank + 1)],
        "red": [f"r{m}" for m in range(1, c.rank + 1)],
    }
    return TriangleQuiver(quiver, side_markers, level_of, letter_of, word)


def rename_quiver(quiver, mapping):
    vertices = [
        Vertex(mapping.get(v.id, v.id), v.frozen, v.label) for v in quiver.vertices
    ]
    return IceQuiver(vertices, quiver.eps2)


def build_disk_seed(c, word):
    """The once-punctured-disk seed: two triangles glued along both
    internal edges, glued vertices defrosted, red sides left frozen as the
    two boundary lists.

    The second copy carries the REVERSED word: the 180-degree rotation that
    places it reverses its intrinsic wiring direction.  The first chambers
    of one copy glue to the last chambers of the other.  For words whose
    reversal is commutation-equivalent to themselves (such as 123121),
    this agrees with gluing two equal copies.
    """
    tri = build_triangle(c, word)
    word = tri.word
    rword = tuple(reversed(word))
    tri2 = build_triangle(c, rword)
    occ, _ = _chamber_intervals(word, c.rank)
    n_of = {i: len(occ[i]) for i in range(1, c.rank + 1)}

    def names(copy):
        m = {}
        for i in range(1, c.rank + 1):
            m[f"c{i}_0"] = f"e{i}" if copy == "L" else f"R.first{i}"
            m[f"c{i}_{n_of[i]}"] = f"f{i}" if copy == "L" else f"R.last{i}"
            for t in range(1, n_of[i]):
                m[f"c{i}_{t}"] = f"{copy}.c{i}_{t}"
            m[f"r{i}"] = ("AL" if copy == "L" else "AR") + str(i)
        return m

    left = rename_quiver(tri.quiver, names("L"))
    right = rename_quiver(tri2.quiver, names("R"))
    glue = [(f"e{i}", f"R.last{i}") for i in range(1, c.rank + 1)]
    glue += [(f"f{i}", f"R.first{i}") for i in range(1, c.rank + 1)]
    quiver = amalgamate(left, right, glue, defrost=True)

    # the boundary coordinate A_i lives on the red vertex attached at the
    # simple root alpha_{i*} of its own copy's word; the e-edge vertex of
    # index i is the glued (t1 last | t2 first) line of level i (all fixed
    # by the theta-stability tests; see README, Conventions)
    boundary = (
        [f"AL{star_involution(c, i)}" for i in range(1, c.rank + 1)],
        [f"AR{star_involution(c, i)}" for i in range(1, c.rank + 1)],
    )
    anchors = {}
    for i in range(1, c.rank + 1):
        istar = star_involution(c, i)
        anchors[i] = {
            "e": (f"AL{istar}", f"f{i}", f"AR{i}"),
            "f": (f"AR{istar}", f"e{i}", f"AL{i}"),
        }
    chambers = {"L": {}, "R": {}}
    nm_l = names("L")
    for i in range(1, c.rank + 1):
        for t in range(n_of[i] + 1):
            chambers["L"][(i, t)] = nm_l[f"c{i}_{t}"]
    # R-chambers are keyed by (level, t) of the REVERSED word; the glued
    # identifications are e_i = R-last, f_i = R-first
    for i in range(1, c.rank + 1):
        for t in range(n_of[i] + 1):
            if t == 0:
                vid = f"f{i}"
            elif t == n_of[i]:
                vid = f"e{i}"
            else:
                vid = f"R.c{i}_{t}"
            chambers["R"][(i, t)] = vid
    internal = tuple(
        [f"e{i}" for i in range(1, c.rank + 1)] + [f"f{i}" for i in range(1, c.rank + 1)]
    )
    return DiskSeed(quiver, boundary, internal, anchors, c, word, chambers)


class DiskWordChart:
    """Chamber-role bookkeeping while elementary word moves are applied to
    a disk seed.  A braid move mutates one chamber per triangle copy (the
    second copy sees the mirrored move on its reversed word); a commutation
    move touches nothing."""

    def __init__(self, disk):
        self.cartan = disk.cartan
        self.word = tuple(disk.word)
        self.chambers = {
            "L": dict(disk.chambers["L"]),
            "R": dict(disk.chambers["R"]),
        }

    def _apply_braid_copy(self, copy, word, k):
        """Braid rewrite at 0-based position k of `word`, which indexes the
        chambers of the given copy; returns the mutation vertex."""
        i, j = word[k], word[k + 1]
        assert word[k + 2] == i and self.cartan.a(i, j) == -1
        t_i = sum(1 for p in range(k + 1) if word[p] == i)
        t_j = sum(1 for p in range(k + 1) if word[p] == j)
        ch = self.chambers[copy]
        braid_vertex = ch[(i, t_i)]
        n_i = sum(1 for p in word if p == i)
        n_j = sum(1 for p in word if p == j)
        lev_i = [ch[(i, t)] for t in range(n_i + 1)]
        lev_j = [ch[(j, t)] for t in range(n_j + 1)]
        # level i loses the enclosed chamber; level j gains it between
        # its occurrences t_j+1 and t_j+2 of the rewritten word
        new_i = lev_i[:t_i] + lev_i[t_i + 1 :]
        new_j = lev_j[: t_j + 1] + [braid_vertex] + lev_j[t_j + 1 :]
        for t in range(n_i + 1):
            del ch[(i, t)]
        for t in range(n_j + 1):
            del ch[(j, t)]
        for t, vid in enumerate(new_i):
            ch[(i, t)] = vid
        for t, vid in enumerate(new_j):
            ch[(j, t)] = vid
        return braid_vertex

    def apply_move(self, move):
        """Apply one elementary move; return the mutation vertex ids (0 or 2)."""
        kind, k = move
        word = self.word
        if kind == "comm":
            i, j = word[k], word[k + 1]
            assert i != j and self.cartan.a(i, j) == 0
            self.word = word[:k] + (j, i) + word[k + 2 :]
            return []
        assert kind == "braid"
        n = len(word)
        rword = tuple(reversed(word))
        steps = [
            self._apply_braid_copy("L", word, k),
            self._apply_braid_copy("R", rword, n - 3 - k),
        ]
        i, j = word[k], word[k + 1]
        self.word = word[:k] + (j, i, j) + word[k + 3 :]
        return steps

    def role_bijection(self, fresh_disk):
        """Map fresh_disk vertex ids (built from self.word) to current ids."""
        out = {}
        for copy in ("L", "R"):
            for key, vid in fresh_disk.chambers[copy].items():
                out[vid] = self.chambers[copy][key]
        for i in range(1, self.cartan.rank + 1):
            out[f"AL{i}"] = f"AL{i}"
            out[f"AR{i}"] = f"AR{i}"
        return out
