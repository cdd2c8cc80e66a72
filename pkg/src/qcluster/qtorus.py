"""The quantum torus algebra attached to an ice quiver.

Elements are L-linear combinations of normalized monomials X_a; the
exponent vector a is a dense integer tuple aligned with the seed's vertex
order (vertex ids are stable under mutation, so elements over mutation-
related charts share the same index space).  The whole multiplication law
is X_a * X_b = q^{<a,b>} X_{a+b} with <a,b> = sum a_i eps_ij b_j; this is
derived from the normalized-monomial definition and is cross-checked
against brute-force ordered-product expansion in the tests.
"""

from __future__ import annotations

import json

from .errors import MixedWeight, SeedMismatch
from .scalars import Scalar


def pairing2(seed, a, b):
    """2*<a,b> = sum_ij a_i eps2[i][j] b_j, the half-exponent of q^<a,b>."""
    eps2 = seed.eps2
    total = 0
    for i, ai in enumerate(a):
        if ai:
            row = eps2[i]
            total += ai * sum(row[j] * bj for j, bj in enumerate(b) if bj)
    return total


def vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vec_neg(a):
    return tuple(-x for x in a)


class TorusElement:
    """Finite L-linear combination of normalized monomials over one seed."""

    __slots__ = ("seed", "terms")

    def __init__(self, seed, terms=None):
        self.seed = seed
        self.terms = {}
        if terms:
            for a, c in terms.items():
                if c:
                    self.terms[tuple(a)] = c

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(seed):
        return TorusElement(seed)

    @staticmethod
    def monomial(seed, exps, coeff=None):
        """X_a with a given as a vector or a sparse {vertex id: exponent} map."""
        if isinstance(exps, dict):
            vec = [0] * len(seed)
            for vid, e in exps.items():
                vec[seed.index[vid]] = e
            exps = tuple(vec)
        else:
            exps = tuple(exps)
        c = Scalar.one() if coeff is None else coeff
        return TorusElement(seed, {exps: c})

    @staticmethod
    def unit(seed):
        return TorusElement.monomial(seed, (0,) * len(seed))

    def _check(self, other):
        if self.seed is not other.seed and self.seed != other.seed:
            raise SeedMismatch("elements live over different seeds")

    # -- linear structure ----------------------------------------------------

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for a, c in other.terms.items():
            s = terms.get(a)
            s = c if s is None else s + c
            if s:
                terms[a] = s
            elif a in terms:
                del terms[a]
        out = TorusElement.__new__(TorusElement)
        out.seed, out.terms = self.seed, terms
        return out

    def __sub__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for a, c in other.terms.items():
            s = terms.get(a)
            s = -c if s is None else s - c
            if s:
                terms[a] = s
            elif a in terms:
                del terms[a]
        out = TorusElement.__new__(TorusElement)
        out.seed, out.terms = self.seed, terms
        return out

    def __neg__(self):
        out = TorusElement.__new__(TorusElement)
        out.seed = self.seed
        out.terms = {a: -c for a, c in self.terms.items()}
        return out

    def scale(self, scalar):
        terms = {}
        for a, c in self.terms.items():
            s = c * scalar
            if s:
                terms[a] = s
        out = TorusElement.__new__(TorusElement)
        out.seed, out.terms = self.seed, terms
        return out

    def __eq__(self, other):
        return (
            isinstance(other, TorusElement)
            and self.seed == other.seed
            and self.terms == other.terms
        )

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __repr__(self):
        return f"TorusElement({len(self.terms)} terms)"

    # -- multiplication -------------------------------------------------------

    def __mul__(self, other):
        self._check(other)
        seed = self.seed
        acc = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                h = pairing2(seed, a, b)
                c = (ca * cb).shifted(h)
                key = vec_add(a, b)
                s = acc.get(key)
                s = c if s is None else s + c
                if s:
                    acc[key] = s
                elif key in acc:
                    del acc[key]
        out = TorusElement.__new__(TorusElement)
        out.seed, out.terms = seed, acc
        return out

    def mul_monomial(self, b, coeff=None, side="right"):
        """Multiply by coeff * X_b on the given side (exact, term-by-term)."""
        seed = self.seed
        terms = {}
        for a, c in self.terms.items():
            h = pairing2(seed, a, b) if side == "right" else pairing2(seed, b, a)
            s = c.shifted(h)
            if coeff is not None:
                s = s * coeff
            if s:
                terms[vec_add(a, b)] = s
        out = TorusElement.__new__(TorusElement)
        out.seed, out.terms = seed, terms
        return out

    # -- involutions and predicates ---------------------------------------------

    def star(self):
        """The *-anti-automorphism: normalized monomials are fixed, q -> 1/q."""
        out = TorusElement.__new__(TorusElement)
        out.seed = self.seed
        out.terms = {a: c.bar() for a, c in self.terms.items()}
        return out

    def coefficients_positive(self):
        return all(c.is_positive() for c in self.terms.values())


def is_global_monomial(seed, a):
    """sum_i a_i eps_ij >= 0 at every mutable j."""
    a = _as_vec(seed, a)
    for j, v in enumerate(seed.vertices):
        if v.frozen:
            continue
        if sum(a[i] * seed.eps2[i][j] for i in range(len(a)) if a[i]) < 0:
            return False
    return True


def is_casimir(seed, a):
    """sum_i a_i eps_ij = 0 at every j (central, monomial in every chart)."""
    a = _as_vec(seed, a)
    for j in range(len(a)):
        if sum(a[i] * seed.eps2[i][j] for i in range(len(a)) if a[i]) != 0:
            return False
    return True


def _as_vec(seed, a):
    if isinstance(a, dict):
        vec = [0] * len(seed)
        for vid, e in a.items():
            vec[seed.index[vid]] = e
        return tuple(vec)
    return tuple(a)


def frozen_weight(disk, f):
    """Read the boundary grading (sum a_i alpha_i, sum a'_i alpha_i).

    disk must expose boundary_frozen = (left ids, right ids); every monomial
    of f must carry the same boundary exponents, else MixedWeight.
    """
    left, right = disk.boundary_frozen
    seed = f.seed
    li = [seed.index[v] for v in left]
    ri = [seed.index[v] for v in right]
    weight = None
    for a in f.terms:
        w = (tuple(a[i] for i in li), tuple(a[i] for i in ri))
        if weight is None:
            weight = w
        elif weight != w:
            raise MixedWeight(f"monomials disagree: {weight} vs {w}")
    if weight is None:
        raise MixedWeight("the zero element has no boundary weight")
    return weight


# -- serialization -------------------------------------------------------------


def element_to_dict(f, seed_name=""):
    terms = []
    for a in sorted(f.terms):
        sparse = {
            f.seed.vertices[i].id: e for i, e in enumerate(a) if e
        }
        terms.append({"a": sparse, "coef": f.terms[a].render()})
    return {"seed": seed_name, "terms": terms}


def element_from_dict(seed, data):
    terms = {}
    for t in data["terms"]:
        vec = [0] * len(seed)
        for vid, e in t["a"].items():
            vec[seed.index[vid]] = int(e)
        terms[tuple(vec)] = Scalar.parse(t["coef"])
    return TorusElement(seed, terms)


def element_to_json(f, seed_name=""):
    return json.dumps(element_to_dict(f, seed_name), separators=(",", ":"), sort_keys=True)


def render_element(f):
    """Human-readable rendering, monomials by exponent order."""
    if not f.terms:
        return "0"
    parts = []
    for a in sorted(f.terms):
        coef = f.terms[a].render()
        names = []
        for i, e in enumerate(a):
            if e:
                vid = f.seed.vertices[i].id
                names.append(f"X[{vid}]" + (f"^{e}" if e != 1 else ""))
        mono = "*".join(names) if names else "1"
        if coef == "1":
            parts.append(mono)
        elif mono == "1":
            parts.append(f"({coef})")
        else:
            parts.append(f"({coef})*{mono}")
    return " + ".join(parts)
