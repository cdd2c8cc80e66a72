"""Exact arithmetic in the ground ring L = Z[q^(1/2), q^(-1/2)].

A scalar is stored as a dict mapping *half-exponents* to integer
coefficients: the key h stands for q^(h/2), so every key is an honest
integer and no fractional exponents ever appear.  Zero coefficients are
never stored; equality is structural equality of this canonical form.
"""

from __future__ import annotations

import re

from .errors import NotDivisible


class Scalar:
    """An element of Z[q^(1/2), q^(-1/2)] in canonical form."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms:
            self.terms = {h: c for h, c in terms.items() if c}
        else:
            self.terms = {}

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero():
        return Scalar()

    @staticmethod
    def one():
        return Scalar({0: 1})

    @staticmethod
    def from_int(n):
        return Scalar({0: n})

    @staticmethod
    def q_half(h, coeff=1):
        """coeff * q^(h/2) for an integer half-exponent h."""
        return Scalar({h: coeff})

    @staticmethod
    def q_power(n, coeff=1):
        """coeff * q^n for an integer n."""
        return Scalar({2 * n: coeff})

    # -- ring structure --------------------------------------------------

    def __add__(self, other):
        terms = dict(self.terms)
        for h, c in other.terms.items():
            c2 = terms.get(h, 0) + c
            if c2:
                terms[h] = c2
            elif h in terms:
                del terms[h]
        out = Scalar.__new__(Scalar)
        out.terms = terms
        return out

    def __sub__(self, other):
        terms = dict(self.terms)
        for h, c in other.terms.items():
            c2 = terms.get(h, 0) - c
            if c2:
                terms[h] = c2
            elif h in terms:
                del terms[h]
        out = Scalar.__new__(Scalar)
        out.terms = terms
        return out

    def __neg__(self):
        out = Scalar.__new__(Scalar)
        out.terms = {h: -c for h, c in self.terms.items()}
        return out

    def __mul__(self, other):
        if isinstance(other, int):
            other = Scalar.from_int(other)
        terms = {}
        for h1, c1 in self.terms.items():
            for h2, c2 in other.terms.items():
                h = h1 + h2
                c = terms.get(h, 0) + c1 * c2
                if c:
                    terms[h] = c
                elif h in terms:
                    del terms[h]
        out = Scalar.__new__(Scalar)
        out.terms = terms
        return out

    __rmul__ = __mul__

    def shifted(self, h):
        """Multiply by q^(h/2): shift every half-exponent by h."""
        if not h:
            return self
        out = Scalar.__new__(Scalar)
        out.terms = {k + h: c for k, c in self.terms.items()}
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == ({0: other} if other else {})
        return isinstance(other, Scalar) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    # -- predicates and involutions ---------------------------------------

    def bar(self):
        """The bar involution q^(1/2) -> q^(-1/2)."""
        out = Scalar.__new__(Scalar)
        out.terms = {-h: c for h, c in self.terms.items()}
        return out

    def is_positive(self):
        """True iff every coefficient is >= 0 (membership in N[q^(1/2), q^(-1/2)])."""
        return all(c >= 0 for c in self.terms.values())

    # -- exact division ----------------------------------------------------

    def div_exact(self, other):
        """Return c with other * c == self, or raise NotDivisible.

        Single-variable polynomial long division in q^(1/2) after shifting
        both operands to lowest exponent 0.
        """
        if other.is_zero():
            raise ZeroDivisionError("division by the zero scalar")
        if self.is_zero():
            return Scalar.zero()
        va = min(self.terms)
        vb = min(other.terms)
        da = max(self.terms) - va
        db = max(other.terms) - vb
        if da < db:
            raise NotDivisible(f"{self} is not divisible by {other}")
        # dense ascending coefficient lists, valuation shifted away
        a = [0] * (da + 1)
        for h, c in self.terms.items():
            a[h - va] = c
        b = [0] * (db + 1)
        for h, c in other.terms.items():
            b[h - vb] = c
        lead = b[db]
        quot = [0] * (da - db + 1)
        for d in range(da - db, -1, -1):
            top = a[d + db]
            if top % lead:
                raise NotDivisible(f"{self} is not divisible by {other}")
            q = top // lead
            quot[d] = q
            if q:
                for j, bj in enumerate(b):
                    a[d + j] -= q * bj
        if any(a):
            raise NotDivisible(f"{self} is not divisible by {other}")
        return Scalar({d + va - vb: c for d, c in enumerate(quot) if c})

    # -- text form ----------------------------------------------------------

    def render(self):
        """Canonical text form, summands c*q^(h/2) from highest exponent down."""
        if not self.terms:
            return "0"
        parts = []
        for h in sorted(self.terms, reverse=True):
            c = self.terms[h]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if h == 0:
                body = str(mag)
            else:
                if h % 2 == 0:
                    power = "q" if h == 2 else f"q^{h // 2}"
                else:
                    power = f"q^({h}/2)"
                body = power if mag == 1 else f"{mag}*{power}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"Scalar({self.render()})"

    @staticmethod
    def parse(text):
        """Parse the render() grammar (also accepts unreduced q^(h/2) forms)."""
        s = text.strip().replace(" ", "")
        if s in ("0", ""):
            return Scalar.zero()
        # split at top-level +/- only (not the sign inside an exponent)
        pieces = []
        start = 0
        for i in range(1, len(s)):
            if s[i] in "+-" and s[i - 1] not in "^(":
                pieces.append(s[start:i])
                start = i
        pieces.append(s[start:])
        out = {}
        for piece in pieces:
            sign, term = "", piece
            if piece and piece[0] in "+-":
                sign, term = piece[0], piece[1:]
            neg = sign == "-"
            m = re.fullmatch(
                r"(?:(\d+)\*?)?(?:q(?:\^(?:(-?\d+)|\((-?\d+)(?:/2)?\)))?)?", term
            )
            if not m or not term:
                raise ValueError(f"cannot parse scalar term {term!r}")
            coeff_s, int_exp, paren_exp = m.groups()
            has_q = "q" in term
            coeff = int(coeff_s) if coeff_s else 1
            if not has_q:
                if coeff_s is None:
                    raise ValueError(f"cannot parse scalar term {term!r}")
                h = 0
            elif int_exp is not None:
                h = 2 * int(int_exp)
            elif paren_exp is not None:
                h = int(paren_exp) if "/2" in term else 2 * int(paren_exp)
            else:
                h = 2
            c = -coeff if neg else coeff
            out[h] = out.get(h, 0) + c
        return Scalar(out)


ZERO = Scalar.zero()
ONE = Scalar.one()
Q = Scalar.q_power(1)
QINV = Scalar.q_power(-1)


def scalar_arith(a, b, op):
    """Dispatch wrapper used by the CLI/JSON surface."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")
