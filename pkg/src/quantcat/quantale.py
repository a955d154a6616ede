"""Exact arithmetic for commutative unital quantales.

Two carrier realizations:

* ``FiniteQuantale`` — a finite complete lattice given by tables; elements are
  interned as indices into the name list, equality is index equality.
* ``LawvereQuantale`` — the extended nonnegative rationals ``[0, inf]`` ordered
  by the *greater-or-equal* relation (so join is numeric min and bottom is
  ``inf``), with tensor either addition (unit 0) or multiplication (unit 1).
  Values are ``fractions.Fraction`` or the ``INF`` mark; no floats anywhere.

All operations are pure; quantale objects are immutable after construction.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Iterable, Iterator, Sequence

from .common import CarrierMismatch, Report, DEFAULT_BUDGET, guard_count


class _Infinity:
    """The top-of-the-reals mark; a singleton, compared by identity."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


def as_extended_rational(x: Any) -> Fraction | _Infinity:
    """Parse ``x`` into an exact extended nonnegative rational.

    Accepts Fraction, int, strings like ``"3"``, ``"1/2"``, ``"inf"``.
    Floats are rejected: the kernel is exact.
    """
    if isinstance(x, _Infinity):
        return INF
    if isinstance(x, bool):
        raise CarrierMismatch(f"not an extended rational: {x!r}")
    if isinstance(x, Fraction):
        value = x
    elif isinstance(x, int):
        value = Fraction(x)
    elif isinstance(x, str):
        s = x.strip().lower()
        if s in ("inf", "infinity", "∞", "oo"):
            return INF
        value = Fraction(s)
    else:
        raise CarrierMismatch(f"not an extended rational: {x!r}")
    if value < 0:
        raise CarrierMismatch(f"negative value outside [0, inf]: {x!r}")
    return value


class FiniteQuantale:
    """A commutative unital quantale on a finite carrier, given by tables.

    ``elements`` are names; internally an element is its index.  ``leq`` is the
    order as a boolean matrix, ``tensor`` the multiplication table (entries are
    names or indices), ``unit`` the tensor-neutral element.  The tables are
    taken on trust here; ``validate_quantale`` checks the axioms.
    """

    is_finite = True

    def __init__(self, elements: Sequence[str], leq, tensor, unit):
        self.names = tuple(str(e) for e in elements)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate element names")
        self._index = {n: i for i, n in enumerate(self.names)}
        n = len(self.names)
        self._leq = tuple(tuple(bool(x) for x in row) for row in leq)
        if len(self._leq) != n or any(len(r) != n for r in self._leq):
            raise ValueError("leq matrix shape does not match element count")
        self._tensor = tuple(
            tuple(self._coerce(x) for x in row) for row in tensor
        )
        if len(self._tensor) != n or any(len(r) != n for r in self._tensor):
            raise ValueError("tensor matrix shape does not match element count")
        self.unit = self._coerce(unit)
        self._join2: dict[tuple[int, int], int | None] = {}
        self._meet2: dict[tuple[int, int], int | None] = {}
        self._bottom: int | None = None
        self._top: int | None = None

    def _coerce(self, x) -> int:
        if isinstance(x, bool):
            raise CarrierMismatch(f"not an element: {x!r}")
        if isinstance(x, int):
            if not 0 <= x < len(self.names):
                raise CarrierMismatch(f"element index out of range: {x}")
            return x
        if isinstance(x, str):
            if x not in self._index:
                raise CarrierMismatch(f"unknown element name: {x!r}")
            return self._index[x]
        raise CarrierMismatch(f"not an element: {x!r}")

    # -- carrier ----------------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.names)

    def carrier(self) -> range:
        return range(len(self.names))

    def el(self, name: str) -> int:
        return self._coerce(name)

    def name(self, u: int) -> str:
        return self.names[self.check(u)]

    def check(self, u) -> int:
        return self._coerce(u)

    def parse(self, raw) -> int:
        """Parse a file-format value: element names only (no numerals)."""
        if isinstance(raw, str):
            return self._coerce(raw)
        raise CarrierMismatch(
            f"finite quantale elements must be referenced by name, got {raw!r}"
        )

    def format(self, u) -> str:
        return self.name(u)

    # -- order ------------------------------------------------------------

    def leq(self, u, v) -> bool:
        return self._leq[self.check(u)][self.check(v)]

    def _lub(self, u: int, v: int) -> int | None:
        key = (u, v) if u <= v else (v, u)
        if key in self._join2:
            return self._join2[key]
        ubs = [w for w in self.carrier() if self._leq[u][w] and self._leq[v][w]]
        least = None
        for c in ubs:
            if all(self._leq[c][w] for w in ubs):
                least = c
                break
        self._join2[key] = least
        return least

    def _glb(self, u: int, v: int) -> int | None:
        key = (u, v) if u <= v else (v, u)
        if key in self._meet2:
            return self._meet2[key]
        lbs = [w for w in self.carrier() if self._leq[w][u] and self._leq[w][v]]
        greatest = None
        for c in lbs:
            if all(self._leq[w][c] for w in lbs):
                greatest = c
                break
        self._meet2[key] = greatest
        return greatest

    @property
    def bottom(self) -> int:
        if self._bottom is None:
            for u in self.carrier():
                if all(self._leq[u][v] for v in self.carrier()):
                    self._bottom = u
                    break
            else:
                raise ValueError("carrier has no bottom element")
        return self._bottom

    @property
    def top(self) -> int:
        if self._top is None:
            for u in self.carrier():
                if all(self._leq[v][u] for v in self.carrier()):
                    self._top = u
                    break
            else:
                raise ValueError("carrier has no top element")
        return self._top

    def join(self, values: Iterable) -> int:
        acc = None
        for v in values:
            v = self.check(v)
            if acc is None:
                acc = v
            else:
                acc = self._lub(acc, v)
                if acc is None:
                    raise ValueError("join does not exist (not a lattice)")
        return self.bottom if acc is None else acc

    def meet(self, values: Iterable) -> int:
        acc = None
        for v in values:
            v = self.check(v)
            if acc is None:
                acc = v
            else:
                acc = self._glb(acc, v)
                if acc is None:
                    raise ValueError("meet does not exist (not a lattice)")
        return self.top if acc is None else acc

    # -- tensor and residuation --------------------------------------------

    def tensor(self, u, v) -> int:
        return self._tensor[self.check(u)][self.check(v)]

    def hom(self, u, v) -> int:
        """The residual: the largest w with w ⊗ u ≤ v."""
        u, v = self.check(u), self.check(v)
        return self.join(
            w for w in self.carrier() if self._leq[self._tensor[w][u]][v]
        )

    # -- subsets ------------------------------------------------------------

    def subsets(self, budget: int = DEFAULT_BUDGET) -> Iterator[tuple[int, ...]]:
        """All subsets of the carrier, smallest masks first."""
        n = self.size
        guard_count(1 << n, budget, f"subset exhaustion over {n} elements")
        for mask in range(1 << n):
            yield tuple(i for i in range(n) if mask >> i & 1)

    # -- misc ---------------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, FiniteQuantale)
            and self.names == other.names
            and self._leq == other._leq
            and self._tensor == other._tensor
            and self.unit == other.unit
        )

    def __hash__(self):
        return hash((self.names, self._leq, self._tensor, self.unit))

    def __repr__(self):
        return f"FiniteQuantale({list(self.names)!r}, unit={self.names[self.unit]!r})"


class LawvereQuantale:
    """``[0, inf]`` ordered by ≥, with tensor + (unit 0) or · (unit 1).

    The order is the opposite of the numeric one: join is numeric infimum,
    bottom is ``inf``, top is 0.  The tensor preserves the bottom, so
    ``u ⊗ inf = inf`` in both modes — including ``0 · inf = inf``.
    """

    is_finite = False

    def __init__(self, mode: str):
        if mode not in ("additive", "multiplicative"):
            raise ValueError(f"unknown Lawvere mode: {mode!r}")
        self.mode = mode
        self.unit = Fraction(0) if mode == "additive" else Fraction(1)

    @property
    def bottom(self):
        return INF

    @property
    def top(self):
        return Fraction(0)

    def check(self, u):
        return as_extended_rational(u)

    def parse(self, raw):
        if isinstance(raw, float):
            raise CarrierMismatch(f"floats are not exact values: {raw!r}")
        return as_extended_rational(raw)

    def format(self, u) -> str:
        u = self.check(u)
        return "inf" if u is INF else str(u)

    def leq(self, u, v) -> bool:
        u, v = self.check(u), self.check(v)
        if u is INF:
            return True
        if v is INF:
            return False
        return u >= v

    def join(self, values: Iterable):
        best = INF
        for v in values:
            v = self.check(v)
            if v is not INF and (best is INF or v < best):
                best = v
        return best

    def meet(self, values: Iterable):
        best = Fraction(0)
        for v in values:
            v = self.check(v)
            if v is INF:
                return INF
            if v > best:
                best = v
        return best

    def tensor(self, u, v):
        u, v = self.check(u), self.check(v)
        if u is INF or v is INF:
            return INF
        return u + v if self.mode == "additive" else u * v

    def hom(self, u, v):
        """Residuation: truncated difference (additive) or the ratio v/u."""
        u, v = self.check(u), self.check(v)
        if self.mode == "additive":
            if u is INF:
                return Fraction(0)
            if v is INF:
                return INF
            return v - u if v > u else Fraction(0)
        if u is INF:
            return Fraction(0)
        if u == 0:
            return Fraction(0) if v == 0 else INF
        if v is INF:
            return INF
        return v / u

    def __eq__(self, other):
        return isinstance(other, LawvereQuantale) and self.mode == other.mode

    def __hash__(self):
        return hash(("LawvereQuantale", self.mode))

    def __repr__(self):
        return f"LawvereQuantale({self.mode!r})"


Quantale = FiniteQuantale | LawvereQuantale


def same_quantale(p: Quantale, q: Quantale) -> bool:
    return p is q or p == q


def require_same_quantale(p: Quantale, q: Quantale) -> None:
    if not same_quantale(p, q):
        raise CarrierMismatch(f"quantale mismatch: {p!r} vs {q!r}")


def require_finite(q: Quantale, what: str) -> FiniteQuantale:
    if not q.is_finite:
        raise ValueError(f"{what} requires a finite carrier, got {q!r}")
    return q


# --------------------------------------------------------------------------
# axiom validation


def validate_quantale(q: FiniteQuantale, budget: int = DEFAULT_BUDGET) -> Report:
    """Check the quantale axioms exhaustively on a finite table.

    Join-distributivity is exhausted over all subsets while ``2**|V|`` fits
    the budget; beyond that it falls back to all pairs plus the empty set,
    and the check name records the fallback.
    """
    report = Report()
    els = list(q.carrier())
    n = len(els)

    refl = next((u for u in els if not q.leq(u, u)), None)
    report.add("order-reflexive", refl is None, None if refl is None else q.name(refl))

    antisym = next(
        ((u, v) for u in els for v in els if u != v and q.leq(u, v) and q.leq(v, u)),
        None,
    )
    report.add(
        "order-antisymmetric",
        antisym is None,
        None if antisym is None else tuple(q.name(x) for x in antisym),
    )

    trans = next(
        (
            (u, v, w)
            for u in els
            for v in els
            for w in els
            if q.leq(u, v) and q.leq(v, w) and not q.leq(u, w)
        ),
        None,
    )
    report.add(
        "order-transitive",
        trans is None,
        None if trans is None else tuple(q.name(x) for x in trans),
    )

    if not report.ok:
        return report

    missing_join = None
    missing_meet = None
    for u in els:
        for v in els:
            if q._lub(u, v) is None:
                missing_join = (u, v)
            if q._glb(u, v) is None:
                missing_meet = (u, v)
    try:
        q.bottom
    except ValueError:
        missing_join = missing_join or ("empty",)
    try:
        q.top
    except ValueError:
        missing_meet = missing_meet or ("empty",)
    report.add(
        "lattice-joins",
        missing_join is None,
        None if missing_join is None else str(missing_join),
    )
    report.add(
        "lattice-meets",
        missing_meet is None,
        None if missing_meet is None else str(missing_meet),
    )
    if not report.ok:
        return report

    comm = next(
        ((u, v) for u in els for v in els if q.tensor(u, v) != q.tensor(v, u)), None
    )
    report.add(
        "tensor-commutative",
        comm is None,
        None if comm is None else tuple(q.name(x) for x in comm),
    )

    assoc = next(
        (
            (u, v, w)
            for u in els
            for v in els
            for w in els
            if q.tensor(q.tensor(u, v), w) != q.tensor(u, q.tensor(v, w))
        ),
        None,
    )
    report.add(
        "tensor-associative",
        assoc is None,
        None if assoc is None else tuple(q.name(x) for x in assoc),
    )

    unit_bad = next((u for u in els if q.tensor(q.unit, u) != u), None)
    report.add(
        "tensor-unit", unit_bad is None, None if unit_bad is None else q.name(unit_bad)
    )

    if (1 << n) <= budget:
        dist_name = "tensor-join-distributive"
        subsets: list[tuple[int, ...]] = list(q.subsets(budget))
    else:
        dist_name = "tensor-join-distributive (pairs only)"
        subsets = [()] + [(u,) for u in els] + [(u, v) for u in els for v in els if u < v]
    dist_bad = None
    for u in els:
        for S in subsets:
            lhs = q.tensor(u, q.join(S))
            rhs = q.join(q.tensor(u, s) for s in S)
            if lhs != rhs:
                dist_bad = (q.name(u), tuple(q.name(s) for s in S))
                break
        if dist_bad:
            break
    report.add(dist_name, dist_bad is None, dist_bad)
    return report


# --------------------------------------------------------------------------
# totally-below machinery (finite carriers only)


def totally_below(q: Quantale, u, v, budget: int = DEFAULT_BUDGET) -> bool:
    """u ⋘ v: every subset whose join dominates v has a member above u."""
    if not q.is_finite:
        raise ValueError(
            "totally-below is only decided on finite carriers; the Lawvere "
            "carriers would need subsets of an infinite lattice"
        )
    u, v = q.check(u), q.check(v)
    for S in q.subsets(budget):
        if q.leq(v, q.join(S)) and not any(q.leq(u, s) for s in S):
            return False
    return True


def unit_approximated_from_totally_below(
    q: Quantale, budget: int = DEFAULT_BUDGET
) -> bool:
    """Whether unit = join of everything totally below the unit."""
    q = require_finite(q, "unit_approximated_from_totally_below")
    below = [u for u in q.carrier() if totally_below(q, u, q.unit, budget)]
    return q.join(below) == q.unit


# --------------------------------------------------------------------------
# built-in carriers


def _meet_chain(names: Sequence[str]) -> FiniteQuantale:
    n = len(names)
    leq = [[i <= j for j in range(n)] for i in range(n)]
    tensor = [[min(i, j) for j in range(n)] for i in range(n)]
    return FiniteQuantale(names, leq, tensor, names[-1])


def bool2() -> FiniteQuantale:
    return _meet_chain(["0", "1"])


def chain3() -> FiniteQuantale:
    return _meet_chain(["0", "m", "1"])


def chain4() -> FiniteQuantale:
    return _meet_chain(["0", "a", "b", "1"])


def bool4() -> FiniteQuantale:
    """The four-element Boolean algebra with tensor = meet, unit = top."""
    names = ["bot", "a", "b", "top"]
    order = {("bot", x) for x in names} | {(x, "top") for x in names}
    order |= {(x, x) for x in names}
    leq = [[(u, v) in order for v in names] for u in names]
    meet = {
        ("bot", "bot"): "bot", ("bot", "a"): "bot", ("bot", "b"): "bot",
        ("bot", "top"): "bot", ("a", "a"): "a", ("a", "b"): "bot",
        ("a", "top"): "a", ("b", "b"): "b", ("b", "top"): "b",
        ("top", "top"): "top",
    }

    def m(u, v):
        return meet.get((u, v)) or meet[(v, u)]

    tensor = [[m(u, v) for v in names] for u in names]
    return FiniteQuantale(names, leq, tensor, "top")


def trivial() -> FiniteQuantale:
    return FiniteQuantale(["k"], [[True]], [["k"]], "k")


def lawvere_plus() -> LawvereQuantale:
    return LawvereQuantale("additive")


def lawvere_times() -> LawvereQuantale:
    return LawvereQuantale("multiplicative")


BUILTIN_QUANTALES = {
    "bool2": bool2,
    "chain3": chain3,
    "chain4": chain4,
    "bool4": bool4,
    "one": trivial,
    "lawvere-plus": lawvere_plus,
    "lawvere-times": lawvere_times,
}


def builtin_quantale(name: str) -> Quantale:
    try:
        return BUILTIN_QUANTALES[name]()
    except KeyError:
        raise ValueError(
            f"unknown built-in quantale {name!r}; known: {sorted(BUILTIN_QUANTALES)}"
        )
