"""Multivariate Laurent polynomials with arbitrary-precision integer coefficients.

A LaurentPoly stores a map from exponent vectors (tuples of ints, negative
entries allowed) to nonzero integer coefficients.  Values are immutable and
canonical: two polynomials are equal exactly when their term maps are equal,
so they can serve as dictionary keys and set members, which the exchange-graph
machinery relies on for deduplicating clusters.

Printing and iteration use a fixed graded-lexicographic term order (total
degree first, then lexicographic on exponent tuples, both descending) so that
serialized output is deterministic.
"""

from __future__ import annotations

from .errors import InexactDivisionError

Exponents = tuple  # tuple[int, ...], one entry per variable


def _grlex_key(exps):
    return (sum(exps), exps)


class LaurentPoly:
    """Immutable Laurent polynomial in `n_vars` variables over the integers."""

    __slots__ = ("n_vars", "_terms", "_hash")

    def __init__(self, n_vars, terms=None):
        if n_vars <= 0:
            raise ValueError("n_vars must be positive")
        self.n_vars = n_vars
        clean = {}
        for exps, coef in (terms or {}).items():
            if len(exps) != n_vars:
                raise ValueError(f"exponent vector {exps} has wrong length")
            if coef:
                clean[tuple(exps)] = int(coef)
        self._terms = clean
        self._hash = None

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, n_vars):
        return cls(n_vars)

    @classmethod
    def one(cls, n_vars):
        return cls(n_vars, {(0,) * n_vars: 1})

    @classmethod
    def constant(cls, n_vars, c):
        return cls(n_vars, {(0,) * n_vars: c})

    @classmethod
    def variable(cls, n_vars, i):
        """The coordinate monomial x_{i+1} (index `i` is 0-based)."""
        exps = [0] * n_vars
        exps[i] = 1
        return cls(n_vars, {tuple(exps): 1})

    @classmethod
    def monomial(cls, n_vars, exps, coef=1):
        return cls(n_vars, {tuple(exps): coef})

    # -- basic protocol ---------------------------------------------------

    def terms(self):
        """Terms as (exponents, coefficient) pairs in descending graded-lex order."""
        return sorted(self._terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def is_zero(self):
        return not self._terms

    def is_one(self):
        return self._terms == {(0,) * self.n_vars: 1}

    def is_monomial(self):
        return len(self._terms) == 1

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        return (isinstance(other, LaurentPoly)
                and self.n_vars == other.n_vars
                and self._terms == other._terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n_vars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly({self.n_vars}, {self.to_str()!r})"

    # -- arithmetic -------------------------------------------------------

    def _check_compatible(self, other):
        if not isinstance(other, LaurentPoly):
            raise TypeError(f"expected LaurentPoly, got {type(other).__name__}")
        if self.n_vars != other.n_vars:
            raise ValueError(
                f"variable-count mismatch: {self.n_vars} vs {other.n_vars}")

    def __add__(self, other):
        self._check_compatible(other)
        out = dict(self._terms)
        for exps, coef in other._terms.items():
            s = out.get(exps, 0) + coef
            if s:
                out[exps] = s
            else:
                out.pop(exps, None)
        return LaurentPoly(self.n_vars, out)

    def __neg__(self):
        return LaurentPoly(self.n_vars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check_compatible(other)
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return LaurentPoly(self.n_vars, out)

    def __pow__(self, k):
        if k < 0:
            if not self.is_monomial():
                raise ValueError("negative powers only for monomials")
            (exps, coef), = self._terms.items()
            if coef * coef != 1:
                raise ValueError("negative powers need a unit coefficient")
            return LaurentPoly(self.n_vars,
                               {tuple(k * e for e in exps):
                                coef if k % 2 else 1})
        result = LaurentPoly.one(self.n_vars)
        base = self
        e = k
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def shift(self, exps):
        """Multiply by the monomial x^exps."""
        return LaurentPoly(
            self.n_vars,
            {tuple(a + b for a, b in zip(e, exps)): c
             for e, c in self._terms.items()})

    # -- Laurent structure --------------------------------------------------

    def min_exponents(self):
        """Componentwise minimum exponent over all terms (zero poly: error)."""
        if self.is_zero():
            raise ValueError("zero polynomial has no exponent range")
        its = iter(self._terms)
        mins = list(next(its))
        for exps in its:
            for i, e in enumerate(exps):
                if e < mins[i]:
                    mins[i] = e
        return tuple(mins)

    def denominator_vector(self):
        """d_k = -(minimum exponent of variable k); raises on the zero polynomial."""
        return tuple(-m for m in self.min_exponents())

    # -- serialization ------------------------------------------------------

    def to_str(self):
        """Deterministic textual form: `coef * x1^e1 ... xn^en` terms joined by ` + `."""
        if self.is_zero():
            return "0"
        parts = []
        for exps, coef in self.terms():
            factors = [f"x{i + 1}^{e}" if e != 1 else f"x{i + 1}"
                       for i, e in enumerate(exps) if e != 0]
            if not factors:
                parts.append(str(coef))
            elif coef == 1:
                parts.append(" * ".join(factors))
            elif coef == -1:
                parts.append("-" + " * ".join(factors))
            else:
                parts.append(f"{coef} * " + " * ".join(factors))
        return " + ".join(parts)


# -- module-level operation surface ------------------------------------------


def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def _leading(terms_dict):
    exps = max(terms_dict, key=_grlex_key)
    return exps, terms_dict[exps]


def divide_exact(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Exact quotient in the Laurent ring: returns q with q * den == num.

    Both operands are shifted by monomials until they are honest polynomials
    with per-variable minimum exponent zero; exactness is then equivalent to
    polynomial divisibility (with integer coefficient quotients), decided by
    leading-term division in graded-lex order.  Raises InexactDivisionError
    when no quotient exists.
    """
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if num.n_vars != den.n_vars:
        raise ValueError(f"variable-count mismatch: {num.n_vars} vs {den.n_vars}")
    n = num.n_vars
    if num.is_zero():
        return num
    num_min = num.min_exponents()
    den_min = den.min_exponents()
    num0 = {tuple(a - b for a, b in zip(e, num_min)): c
            for e, c in num._terms.items()}
    den0 = {tuple(a - b for a, b in zip(e, den_min)): c
            for e, c in den._terms.items()}
    den_lead_e, den_lead_c = _leading(den0)

    quotient = {}
    rem = num0
    while rem:
        lead_e, lead_c = _leading(rem)
        q_e = tuple(a - b for a, b in zip(lead_e, den_lead_e))
        if any(e < 0 for e in q_e) or lead_c % den_lead_c != 0:
            raise InexactDivisionError(
                "inexact division: remainder has no divisible leading term")
        q_c = lead_c // den_lead_c
        quotient[q_e] = q_c
        for e, c in den0.items():
            te = tuple(a + b for a, b in zip(q_e, e))
            s = rem.get(te, 0) - q_c * c
            if s:
                rem[te] = s
            else:
                rem.pop(te, None)
    shift = tuple(a - b for a, b in zip(num_min, den_min))
    return LaurentPoly(n, {tuple(a + b for a, b in zip(e, shift)): c
                           for e, c in quotient.items()})


def denominator_vector(p: LaurentPoly):
    return p.denominator_vector()
