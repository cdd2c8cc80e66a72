"""Quantum cluster mutation as exact cross-chart re-expression of elements.

One transport step from chart Q to Q' = mu_k(Q) substitutes every old
variable by its expression in the new chart.  The involutive quantum
transition (the only assignment under which charts compose; see README,
Conventions) is

    X_k          = X'_k^{-1}
    X_i (e >= 0) = X'_i * prod_{r=1..e} (1 + q^{2r-1} X'_k)
    X_i (e < 0)  = X'_i * prod_{r=1..|e|} (1 + q^{2r-1} X'_k^{-1})^{-1}

with e = eps_ik read from the OLD chart.  All binomials live in the single
commuting X'_k-zone: they are collected in factored form, matching
plain/inverse pairs cancel, X'_k^{-1}-binomials rewrite into X'_k ones,
and the surviving inverse binomials are cancelled by divide_right on the
summed numerator.  A failed division raises NotLaurent, a meaningful
outcome: the element is not Laurent in the target chart.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    FrozenMutation,
    NonCasimirRelation,
    NotDivisible,
    NotLaurent,
    SeedMismatch,
)
from .quiver import mutate_quiver
from .qtorus import TorusElement, is_casimir, pairing2, vec_add, vec_neg
from .scalars import Scalar


@dataclass(frozen=True)
class MutationPath:
    base: object  # IceQuiver
    steps: tuple

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))


def _binomial_element(quiver, k_vec, m, sigma):
    """1 + q^(m/2) X_{sigma e_k} as a TorusElement."""
    zero = tuple(0 for _ in k_vec)
    xk = k_vec if sigma > 0 else vec_neg(k_vec)
    return TorusElement(quiver, {zero: Scalar.one(), xk: Scalar.q_half(m)})


def mutation_images(quiver, k):
    """Per-vertex transition elements, expanded to normalized-monomial
    form: X'_k = X_{-e_k}, X'_i = X_i prod(1+q^{2r-1}X_k) for eps_ik < 0
    and X'_i = X_i prod(1+q^{1-2r}X_k^{-1}) for eps_ik >= 0.

    Display/bookkeeping elements: the positive branch here is the
    polynomial convention, which is NOT the involutive transition that
    transport uses internally (that branch is not Laurent)."""
    ki = quiver.index[k]
    if quiver.vertices[ki].frozen:
        raise FrozenMutation(f"vertex {k!r} is frozen")
    n = len(quiver)
    k_vec = tuple(1 if j == ki else 0 for j in range(n))
    out = {}
    for i, v in enumerate(quiver.vertices):
        if i == ki:
            out[v.id] = TorusElement.monomial(quiver, vec_neg(k_vec))
            continue
        el = TorusElement.monomial(
            quiver, tuple(1 if j == i else 0 for j in range(n))
        )
        eps_ik = quiver.eps2[i][ki] // 2
        if eps_ik < 0:
            for r in range(1, -eps_ik + 1):
                el = el * _binomial_element(quiver, k_vec, 2 * (2 * r - 1), 1)
        else:
            for r in range(1, eps_ik + 1):
                el = el * _binomial_element(quiver, k_vec, 2 * (1 - 2 * r), -1)
        out[v.id] = el
    return out


def divide_right(f, k, m):
    """Return g with g * (1 + q^(m/2) X_{e_k}) = f, else NotDivisible.

    Solves stratum by stratum in the X_k-degree, lowest first.
    """
    if f.is_zero():
        return f
    seed = f.seed
    ki = seed.index[k]
    k_vec = tuple(1 if j == ki else 0 for j in range(len(seed)))
    degs = [a[ki] for a in f.terms]
    dmin, dmax = min(degs), max(degs)
    rem = dict(f.terms)
    out = {}
    for d in range(dmin, dmax):
        stratum = [(a, c) for a, c in rem.items() if a[ki] == d]
        for a, c in stratum:
            out[a] = c
            del rem[a]
            up = vec_add(a, k_vec)
            shift = pairing2(seed, a, k_vec) + m
            c2 = rem.get(up, Scalar.zero()) - c.shifted(shift)
            if c2:
                rem[up] = c2
            elif up in rem:
                del rem[up]
    if rem:
        raise NotDivisible(f"element is not divisible by (1 + q^({m}/2) X_{k})")
    return TorusElement(seed, out)


class _StepContext:
    """Cached data for one transport step Qcur -> Qnext = mu_k(Qcur).

    For every old variable, `factored[vid]` holds (mono, plains, invs):
    the image in T_{Qnext} is X_mono * prod(plains) * prod(invs)^{-1},
    every binomial being (1 + q^(m/2) X_{sigma e_k}).
    """

    def __init__(self, qcur, k):
        ki = qcur.index[k]
        if qcur.vertices[ki].frozen:
            raise FrozenMutation(f"vertex {k!r} is frozen")
        self.qcur = qcur
        self.k = k
        self.ki = ki
        self.qnext = mutate_quiver(qcur, k)
        n = len(qcur)
        self.k_vec = tuple(1 if j == ki else 0 for j in range(n))
        self.factored = {}
        for i, v in enumerate(qcur.vertices):
            if i == ki:
                self.factored[v.id] = (vec_neg(self.k_vec), (), ())
                continue
            mono = tuple(1 if j == i else 0 for j in range(n))
            e = qcur.eps2[i][ki] // 2
            if e >= 0:
                plains = tuple((2 * (2 * r - 1), 1) for r in range(1, e + 1))
                invs = ()
            else:
                plains = ()
                invs = tuple((2 * (2 * r - 1), -1) for r in range(1, -e + 1))
            self.factored[v.id] = (mono, plains, invs)

    def pair_k(self, w):
        """pair2(w, e_k) over Qnext."""
        return pairing2(self.qnext, w, self.k_vec)


def _shift_bins(bins, delta):
    """Move a monomial w with pair2(w, e_k) = delta leftward past binomials."""
    if not delta or not bins:
        return list(bins)
    return [(m - 2 * sigma * delta, sigma) for m, sigma in bins]


def _norm2(quiver, a):
    """Half-exponent of the normalized-monomial prefactor of X_a."""
    eps2 = quiver.eps2
    total = 0
    nz = [i for i, x in enumerate(a) if x]
    for u, i in enumerate(nz):
        for j in nz[u + 1 :]:
            total += a[i] * a[j] * eps2[i][j]
    return -total


def _transport_term(ctx, a, coeff):
    """Express coeff * X_a (over Qcur) inside T_{Qnext} in factored form.

    Returns (numerator TorusElement over Qnext, list of half-exponents m of
    pending right factors (1 + q^(m/2) X_k)^{-1}).
    """
    qnext = ctx.qnext
    n = len(a)
    h = _norm2(ctx.qcur, a)
    mono = tuple(0 for _ in range(n))
    plains = []
    invs = []
    for i in range(n):
        e = a[i]
        if not e:
            continue
        w, pl_w, inv_w = ctx.factored[ctx.qcur.vertices[i].id]
        if e > 0:
            fac = (w, list(pl_w), list(inv_w))
        else:
            # (X_w P I^{-1})^{-1} = X_{-w} shift(I) shift(P)^{-1}
            neg = vec_neg(w)
            d = ctx.pair_k(neg)
            fac = (neg, _shift_bins(inv_w, d), _shift_bins(pl_w, d))
        for _ in range(abs(e)):
            w2, pl2, in2 = fac
            d = ctx.pair_k(w2)
            plains = _shift_bins(plains, d)
            invs = _shift_bins(invs, d)
            h += pairing2(qnext, mono, w2)
            mono = vec_add(mono, w2)
            plains += pl2
            invs += in2

    # cancel matching plain / inverse binomials (they all commute)
    if plains and invs:
        counts = {}
        for b in invs:
            counts[b] = counts.get(b, 0) + 1
        keep = []
        for b in plains:
            if counts.get(b, 0) > 0:
                counts[b] -= 1
            else:
                keep.append(b)
        plains = keep
        invs = []
        for b, c in counts.items():
            invs.extend([b] * c)

    # rewrite X_k^{-1}-binomials into X_k ones, collecting monomial factors
    k_extra = 0
    for idx, (m, sigma) in enumerate(plains):
        if sigma < 0:
            # (1+q^{m/2}X_{-k}) = q^{m/2} X_{-k} (1+q^{-m/2} X_k)
            h += m
            k_extra -= 1
            plains[idx] = (-m, 1)
    denom = []
    for m, sigma in invs:
        if sigma < 0:
            # (1+q^{m/2}X_{-k})^{-1} = q^{-m/2} X_k (1+q^{-m/2} X_k)^{-1}
            h -= m
            k_extra += 1
            denom.append(-m)
        else:
            denom.append(m)
    if k_extra:
        k_part = tuple(k_extra if j == ctx.ki else 0 for j in range(n))
        h += pairing2(qnext, mono, k_part)
        mono = vec_add(mono, k_part)

    num = TorusElement.monomial(qnext, mono, coeff.shifted(h))
    for m, _ in plains:
        num = num * _binomial_element(qnext, ctx.k_vec, m, 1)
    return num, denom


def transport_step(f, k):
    """Re-express f (over Q) in the chart mu_k(Q); exact or NotLaurent."""
    ctx = _StepContext(f.seed, k)
    pieces = []
    union = {}
    for a, c in f.terms.items():
        num, denom = _transport_term(ctx, a, c)
        counts = {}
        for m in denom:
            counts[m] = counts.get(m, 0) + 1
        for m, cnt in counts.items():
            if union.get(m, 0) < cnt:
                union[m] = cnt
        pieces.append((num, counts))

    total = TorusElement.zero(ctx.qnext)
    for num, counts in pieces:
        for m, cnt in union.items():
            missing = cnt - counts.get(m, 0)
            for _ in range(missing):
                num = num * _binomial_element(ctx.qnext, ctx.k_vec, m, 1)
        total = total + num
    try:
        for m, cnt in union.items():
            for _ in range(cnt):
                total = divide_right(total, k, m)
    except NotDivisible as exc:
        raise NotLaurent(
            f"element is not Laurent in the chart mu_{k}: {exc}"
        ) from None
    return total


def transport(f, path):
    """Transport f along a MutationPath, one exact step at a time."""
    if f.seed != path.base:
        raise SeedMismatch("element does not live over the path's base chart")
    for k in path.steps:
        f = transport_step(f, k)
    return f


# -- Casimir-lattice quotient -------------------------------------------------


def _row_hnf(rows):
    """Row Hermite normal form with positive pivots (small exact matrices)."""
    mat = [list(r) for r in rows]
    mat = [r for r in mat if any(r)]
    ncols = len(rows[0]) if rows else 0
    hnf = []
    col = 0
    while mat and col < ncols:
        pivots = [r for r in mat if r[col] != 0]
        if not pivots:
            col += 1
            continue
        rest = [r for r in mat if r[col] == 0]
        while len(pivots) > 1:
            pivots.sort(key=lambda r: abs(r[col]))
            base = pivots[0]
            out = [base]
            for r in pivots[1:]:
                q = r[col] // base[col]
                r2 = [x - q * y for x, y in zip(r, base)]
                if r2[col] != 0:
                    out.append(r2)
                elif any(r2):
                    rest.append(r2)
            pivots = out
        pivot = pivots[0]
        if pivot[col] < 0:
            pivot = [-x for x in pivot]
        hnf.append(pivot)
        mat = rest
        col += 1
    # reduce entries above each pivot for a unique normal form
    for idx in range(len(hnf) - 1, -1, -1):
        prow = hnf[idx]
        pcol = next(i for i, x in enumerate(prow) if x)
        for jdx in range(idx):
            t = hnf[jdx][pcol] // prow[pcol]
            if t:
                hnf[jdx] = [x - t * y for x, y in zip(hnf[jdx], prow)]
    return hnf


class QuotientTorus:
    """Quantum torus modulo X_{c_i} = 1 for Casimir exponent vectors c_i.

    Reduction is an exact exponent-lattice projection: because the c_i are
    Casimirs, X_{a - c} X_c = X_a with no q-power, so coefficients merge
    untwisted.
    """

    def __init__(self, seed, relations):
        self.seed = seed
        self.relations = [tuple(r) for r in relations]
        for r in self.relations:
            if not is_casimir(seed, r):
                raise NonCasimirRelation(f"{r} is not a Casimir vector")
        self.hnf = _row_hnf(self.relations)
        self.pivots = [
            (next(i for i, x in enumerate(row) if x), row) for row in self.hnf
        ]

    def reduce_vec(self, a):
        a = list(a)
        for pcol, row in self.pivots:
            t = a[pcol] // row[pcol]
            if t:
                for j, y in enumerate(row):
                    a[j] -= t * y
        return tuple(a)

    def reduce(self, f):
        if f.seed != self.seed:
            raise SeedMismatch("element over a different seed")
        terms = {}
        for a, c in f.terms.items():
            key = self.reduce_vec(a)
            s = terms.get(key)
            s = c if s is None else s + c
            if s:
                terms[key] = s
            elif key in terms:
                del terms[key]
        return TorusElement(self.seed, terms)


def quotient_reduce(qt, f):
    return qt.reduce(f)


def filtration_level_heuristic(disk, f):
    """Leading-exponent bound for the internal-edge filtration.

    HEURISTIC ONLY: reads min over monomials of the minimal exponent on the
    glued internal-edge vertices and negates it.  This bounds the filtration
    level of a theta-type element through its leading term; it is not an
    exact membership test (none is specified by the construction).
    """
    idx = [f.seed.index[v] for v in disk.internal_vertices]
    if not f.terms:
        return 0
    return -min(min(a[i] for i in idx) for a in f.terms)
