"""Tropical A-points, tropicalized exchange, Lusztig data, the weight map,
potentials, lattice dimension counts, and the orbit normal form."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FrozenMutation
from .quiver import mutate_quiver
from .rootdata import longest_word, star_involution, validate_reduced_word, weyl_act


class TropicalPoint:
    """Integer coordinate vector on a cluster K2 chart."""

    __slots__ = ("chart", "coords")

    def __init__(self, chart, coords):
        self.chart = chart
        if isinstance(coords, dict):
            vec = [0] * len(chart)
            for vid, x in coords.items():
                vec[chart.index[vid]] = x
            coords = tuple(vec)
        self.coords = tuple(coords)

    @staticmethod
    def basis(chart, vid):
        """The point with coordinate 1 at vid and 0 elsewhere."""
        return TropicalPoint(chart, {vid: 1})

    def coord(self, vid):
        return self.coords[self.chart.index[vid]]

    def as_dict(self):
        return {v.id: x for v, x in zip(self.chart.vertices, self.coords) if x}

    def __eq__(self, other):
        return (
            isinstance(other, TropicalPoint)
            and self.chart == other.chart
            and self.coords == other.coords
        )

    def __repr__(self):
        return f"TropicalPoint({self.as_dict()})"


def trop_mutate(p, k):
    """Tropicalized cluster K2 exchange at the mutable vertex k."""
    chart = p.chart
    ki = chart.index[k]
    if chart.vertices[ki].frozen:
        raise FrozenMutation(f"vertex {k!r} is frozen")
    row = chart.eps2[ki]
    plus = sum((row[j] // 2) * x for j, x in enumerate(p.coords) if row[j] > 0)
    minus = sum((-row[j] // 2) * x for j, x in enumerate(p.coords) if row[j] < 0)
    new = list(p.coords)
    new[ki] = min(plus, minus) - p.coords[ki]
    return TropicalPoint(mutate_quiver(chart, k), new)


def trop_eval(expr, p):
    """Tropical value of a positive expression at p.

    expr is a list of monomials, each a {vertex id: exponent} map (positive
    coefficients are tropically invisible and therefore not represented).
    """
    best = None
    for mono in expr:
        val = sum(e * p.coord(vid) for vid, e in mono.items())
        best = val if best is None else min(best, val)
    if best is None:
        raise ValueError("positive expressions have at least one monomial")
    return best


# -- Lusztig data --------------------------------------------------------------


@dataclass(frozen=True)
class LusztigDatum:
    cartan: object
    word: tuple
    a: tuple  # N^n
    lam: tuple  # Z^r
    c: tuple  # N^n
    mu: tuple  # Z^r

    def __post_init__(self):
        n, r = len(self.word), self.cartan.rank
        if len(self.a) != n or len(self.c) != n:
            raise ValueError("a and c must have the word's length")
        if len(self.lam) != r or len(self.mu) != r:
            raise ValueError("lam and mu must have rank-many entries")
        if any(x < 0 for x in self.a) or any(x < 0 for x in self.c):
            raise ValueError("Lusztig coordinates a, c must be nonnegative")


def _root_sequences(c, word):
    seq = validate_reduced_word(c, word)
    starred = tuple(star_involution(c, i) for i in word)
    seq_star = validate_reduced_word(c, starred)
    return seq.roots, seq_star.roots


def lusztig_weight(d):
    """The pair of weights graded by a Lusztig datum.

    (sum_k a_k alpha_{i,k} + sum_i (lam_i+mu_i) alpha_i,
     sum_i (lam_i+mu_i) alpha_{i*} + sum_k c_k alpha*_{i,k}).
    """
    c = d.cartan
    roots, roots_star = _root_sequences(c, d.word)
    r = c.rank
    w1 = [0] * r
    w2 = [0] * r
    for k, ak in enumerate(d.a):
        if ak:
            for t in range(r):
                w1[t] += ak * roots[k][t]
    for k, ck in enumerate(d.c):
        if ck:
            for t in range(r):
                w2[t] += ck * roots_star[k][t]
    for i in range(r):
        s = d.lam[i] + d.mu[i]
        if s:
            w1[i] += s
            w2[star_involution(c, i + 1) - 1] += s
    return tuple(w1), tuple(w2)


def iter_weight_tuples(c, word, lam_pair):
    """All (a, b, cc, d) in N^{2n+2r} whose Lusztig weight equals lam_pair.

    Components are bounded because every contribution is a nonnegative root
    vector; enumeration prunes on the remaining budget per coordinate.
    """
    lam1, lam2 = tuple(lam_pair[0]), tuple(lam_pair[1])
    if any(x < 0 for x in lam1) or any(x < 0 for x in lam2):
        return
    roots, roots_star = _root_sequences(c, word)
    n, r = len(word), c.rank
    star = [star_involution(c, i + 1) - 1 for i in range(r)]

    def sub(budget, vec, mult):
        if mult == 0:
            return budget
        out = tuple(x - mult * y for x, y in zip(budget, vec))
        return None if any(x < 0 for x in out) else out

    def rec_a(k, rem1, acc):
        if k == n:
            yield from rec_s(0, rem1, tuple(lam2), acc, [])
            return
        beta = roots[k]
        top = min(
            (rem1[t] // beta[t] for t in range(r) if beta[t]), default=0
        )
        for ak in range(top + 1):
            nxt = sub(rem1, beta, ak)
            if nxt is not None:
                yield from rec_a(k + 1, nxt, acc + [ak])

    def rec_s(i, rem1, rem2, a_acc, s_acc):
        if i == r:
            if any(rem1):
                return
            yield from rec_c(0, rem2, a_acc, s_acc, [])
            return
        top = min(rem1[i], rem2[star[i]])
        for s in range(top + 1):
            r1 = list(rem1)
            r1[i] -= s
            r2 = list(rem2)
            r2[star[i]] -= s
            yield from rec_s(i + 1, tuple(r1), tuple(r2), a_acc, s_acc + [s])

    def rec_c(k, rem2, a_acc, s_acc, c_acc):
        if k == n:
            if any(rem2):
                return
            for b in _splits(s_acc):
                d = tuple(s - x for s, x in zip(s_acc, b))
                yield tuple(a_acc), b, tuple(c_acc), d
            return
        beta = roots_star[k]
        top = min(
            (rem2[t] // beta[t] for t in range(r) if beta[t]), default=0
        )
        for ck in range(top + 1):
            nxt = sub(rem2, beta, ck)
            if nxt is not None:
                yield from rec_c(k + 1, nxt, a_acc, s_acc, c_acc + [ck])

    yield from rec_a(0, lam1, [])


def _splits(s):
    """All componentwise splits s = b + d with b, d >= 0."""
    if not s:
        yield ()
        return
    for rest in _splits(s[1:]):
        for b0 in range(s[0] + 1):
            yield (b0,) + rest


def count_F0_dim(c, word, lam_pair):
    """Number of PBW weight tuples at lam_pair (the F^0 dimension count)."""
    return sum(1 for _ in iter_weight_tuples(c, word, lam_pair))


def potential_trop(d, i):
    """Tropical partial potential: min over the i*-letters of a and the
    i-letters of c."""
    c = d.cartan
    istar = star_involution(c, i)
    vals = [d.a[k] for k, letter in enumerate(d.word) if letter == istar]
    vals += [d.c[k] for k, letter in enumerate(d.word) if letter == i]
    return min(vals)


def orbit_normal_form(d):
    """The unique representative of the Casimir Z^r-orbit with mu = 0.

    The action shifts (a, lam, c, mu) |-> (a, lam + lam_t, c, mu - w0(lam_t));
    solving mu - w0(lam_t) = 0 gives lam_t = w0(mu).
    """
    c = d.cartan
    lam_t = weyl_act(c, longest_word(c), d.mu)
    new_lam = tuple(x + y for x, y in zip(d.lam, lam_t))
    return LusztigDatum(c, d.word, d.a, new_lam, d.c, tuple(0 for _ in d.mu))
