"""Finite rings with identity as explicit Cayley tables.

Elements are dense indices ``0..size-1``; all structure is table lookups so
that exhaustive quantifier elimination stays O(1) per probe.  Rings are
immutable after construction and every query is a pure function, so shared
concurrent reads are safe.
"""

from __future__ import annotations

from dataclasses import dataclass

from .verdicts import AnnihPair, InnerInverse, OrderVerdict

MAX_RING_SIZE = 256
FULL_CHECK_SIZE = 64  # beyond this the size^3 axiom loops run only when forced


class AxiomError(ValueError):
    """A structure table violates one of its defining laws."""


class SpecError(ValueError):
    """A ring/module definition is malformed."""


class FiniteRing:
    """Ring with identity on ``0..size-1``, given by add/mul tables.

    ``involution`` is an optional permutation satisfying (a*)* = a,
    (a+b)* = a* + b* and (ab)* = b* a*.  When none is supplied and the
    multiplication is commutative, the identity map is installed (it is an
    involution exactly in the commutative case); noncommutative rings carry
    an involution only if one is given explicitly.
    """

    def __init__(self, add, mul, *, involution=None, name=None,
                 check=True, force_full_check=False):
        self.size = len(add)
        if self.size < 1:
            raise AxiomError("ring carrier is empty")
        if self.size > MAX_RING_SIZE:
            raise AxiomError(f"ring size {self.size} exceeds cap {MAX_RING_SIZE}")
        self.add = [list(row) for row in add]
        self.mul = [list(row) for row in mul]
        self.name = name or f"ring{self.size}"
        self._check_shape()
        self.zero = self._find_additive_identity()
        self.one = self._find_multiplicative_identity()
        self.neg = self._additive_inverses()
        if involution is None and self.is_commutative():
            involution = list(range(self.size))
        self.involution = list(involution) if involution is not None else None
        if self.involution is not None and len(self.involution) != self.size:
            raise AxiomError("involution table has wrong length")
        if check:
            self.validate(force=force_full_check)

    # -- construction-time checks -------------------------------------------------

    def _check_shape(self):
        n = self.size
        for label, table in (("add", self.add), ("mul", self.mul)):
            if len(table) != n or any(len(row) != n for row in table):
                raise AxiomError(f"{label} table is not {n}x{n}")
            for i, row in enumerate(table):
                for j, v in enumerate(row):
                    if not (0 <= v < n):
                        raise AxiomError(f"{label}[{i}][{j}] = {v} out of range")

    def _find_additive_identity(self):
        for e in range(self.size):
            if all(self.add[e][x] == x == self.add[x][e] for x in range(self.size)):
                return e
        raise AxiomError("no additive identity")

    def _find_multiplicative_identity(self):
        for e in range(self.size):
            if all(self.mul[e][x] == x == self.mul[x][e] for x in range(self.size)):
                return e
        raise AxiomError("no multiplicative identity")

    def _additive_inverses(self):
        neg = []
        for x in range(self.size):
            try:
                neg.append(self.add[x].index(self.zero))
            except ValueError:
                raise AxiomError(f"element {x} has no additive inverse") from None
        return neg

    def validate(self, *, force=False):
        """Check all ring axioms; cubic loops only for size <= 64 unless forced."""
        n = self.size
        rng = range(n)
        for a in rng:
            for b in rng:
                if self.add[a][b] != self.add[b][a]:
                    raise AxiomError(f"addition not commutative at (a,b)=({a},{b})")
        if force or n <= FULL_CHECK_SIZE:
            for a in rng:
                for b in rng:
                    ab, mab = self.add[a][b], self.mul[a][b]
                    for c in rng:
                        if self.add[ab][c] != self.add[a][self.add[b][c]]:
                            raise AxiomError(f"addition not associative at (a,b,c)=({a},{b},{c})")
                        if self.mul[mab][c] != self.mul[a][self.mul[b][c]]:
                            raise AxiomError(f"multiplication not associative at (a,b,c)=({a},{b},{c})")
                        bc = self.add[b][c]
                        if self.mul[a][bc] != self.add[self.mul[a][b]][self.mul[a][c]]:
                            raise AxiomError(f"left distributivity fails at (a,b,c)=({a},{b},{c})")
                        if self.mul[bc][a] != self.add[self.mul[b][a]][self.mul[c][a]]:
                            raise AxiomError(f"right distributivity fails at (a,b,c)=({a},{b},{c})")
        if self.involution is not None:
            inv = self.involution
            for a in rng:
                if inv[inv[a]] != a:
                    raise AxiomError(f"involution not self-inverse at {a}")
                for b in rng:
                    if inv[self.add[a][b]] != self.add[inv[a]][inv[b]]:
                        raise AxiomError(f"involution not additive at (a,b)=({a},{b})")
                    if inv[self.mul[a][b]] != self.mul[inv[b]][inv[a]]:
                        raise AxiomError(f"involution not anti-multiplicative at (a,b)=({a},{b})")

    # -- basic structure ----------------------------------------------------------

    def is_commutative(self) -> bool:
        return all(self.mul[a][b] == self.mul[b][a]
                   for a in range(self.size) for b in range(self.size))

    def sub(self, a: int, b: int) -> int:
        return self.add[a][self.neg[b]]

    def star(self, a: int) -> int:
        if self.involution is None:
            raise ValueError(f"{self.name} has no involution")
        return self.involution[a]

    def idempotents(self) -> frozenset[int]:
        return frozenset(e for e in range(self.size) if self.mul[e][e] == e)

    def units(self) -> frozenset[int]:
        out = set()
        for u in range(self.size):
            for v in range(self.size):
                if self.mul[u][v] == self.one == self.mul[v][u]:
                    out.add(u)
                    break
        return frozenset(out)

    def inverse(self, u: int) -> int:
        for v in range(self.size):
            if self.mul[u][v] == self.one == self.mul[v][u]:
                return v
        raise ValueError(f"{u} is not a unit of {self.name}")

    def projections(self) -> frozenset[int]:
        """Self-adjoint idempotents; requires an involution."""
        if self.involution is None:
            raise ValueError(f"{self.name} has no involution; projections undefined")
        return frozenset(e for e in self.idempotents() if self.involution[e] == e)

    # -- annihilators and principal one-sided ideals ------------------------------

    def left_ann(self, a: int) -> frozenset[int]:
        """{x : x*a = 0}"""
        return frozenset(x for x in range(self.size) if self.mul[x][a] == self.zero)

    def right_ann(self, a: int) -> frozenset[int]:
        """{x : a*x = 0}"""
        return frozenset(x for x in range(self.size) if self.mul[a][x] == self.zero)

    def principal_right(self, e: int) -> frozenset[int]:
        """e*R"""
        return frozenset(self.mul[e][x] for x in range(self.size))

    def principal_left(self, e: int) -> frozenset[int]:
        """R*e"""
        return frozenset(self.mul[x][e] for x in range(self.size))


# -- constructors ------------------------------------------------------------


def same_ring(a: FiniteRing, b: FiniteRing) -> bool:
    """Structural identity: same carrier size and the same operation tables."""
    return a is b or (a.size == b.size and a.add == b.add and a.mul == b.mul)


def build_zn(n: int, *, check=True) -> FiniteRing:
    """Integers mod n.  n = 1 gives the zero ring (zero = one)."""
    if n < 1:
        raise SpecError("modulus must be positive")
    add = [[(a + b) % n for b in range(n)] for a in range(n)]
    mul = [[a * b % n for b in range(n)] for a in range(n)]
    return FiniteRing(add, mul, name=f"Z{n}", check=check)


def build_product(r1: FiniteRing, r2: FiniteRing, *, check=True) -> FiniteRing:
    """Componentwise product; element (x, y) sits at index x*|r2| + y."""
    n2 = r2.size
    size = r1.size * n2

    def enc(x, y):
        return x * n2 + y

    add = [[enc(r1.add[i // n2][j // n2], r2.add[i % n2][j % n2])
            for j in range(size)] for i in range(size)]
    mul = [[enc(r1.mul[i // n2][j // n2], r2.mul[i % n2][j % n2])
            for j in range(size)] for i in range(size)]
    involution = None
    if r1.involution is not None and r2.involution is not None:
        involution = [enc(r1.involution[i // n2], r2.involution[i % n2])
                      for i in range(size)]
    return FiniteRing(add, mul, involution=involution,
                      name=f"{r1.name}x{r2.name}", check=check)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p ** 0.5) + 1))


def build_matrix_ring(p: int, k: int = 2, *, check=True) -> FiniteRing:
    """2x2 matrices over Z_p with transpose as involution.

    Matrix ((a,b),(c,d)) sits at index a*p^3 + b*p^2 + c*p + d.  Only k = 2
    is supported and p must be prime (so the entries form a field).
    """
    if k != 2:
        raise SpecError("only 2x2 matrix rings are supported")
    if not _is_prime(p):
        raise SpecError(f"{p} is not prime")
    if p ** 4 > MAX_RING_SIZE:
        raise SpecError(f"M2(Z{p}) has {p ** 4} elements, beyond cap {MAX_RING_SIZE}")

    def dec(i):
        a, rest = divmod(i, p ** 3)
        b, rest = divmod(rest, p ** 2)
        c, d = divmod(rest, p)
        return a, b, c, d

    def enc(a, b, c, d):
        return ((a * p + b) * p + c) * p + d

    size = p ** 4
    mats = [dec(i) for i in range(size)]
    add = [[enc(*[(u + v) % p for u, v in zip(x, y)]) for y in mats] for x in mats]
    mul = [[enc((x[0] * y[0] + x[1] * y[2]) % p, (x[0] * y[1] + x[1] * y[3]) % p,
                (x[2] * y[0] + x[3] * y[2]) % p, (x[2] * y[1] + x[3] * y[3]) % p)
            for y in mats] for x in mats]
    transpose = [enc(x[0], x[2], x[1], x[3]) for x in mats]
    return FiniteRing(add, mul, involution=transpose, name=f"M2(Z{p})", check=check)


def build_ring_from_tables(add, mul, *, involution=None, name=None,
                           force_full_check=False) -> FiniteRing:
    """Validated ring from raw tables; axiom failures name the violating tuple."""
    return FiniteRing(add, mul, involution=involution, name=name or "tables",
                      check=True, force_full_check=force_full_check)


def ring_to_spec(ring: FiniteRing) -> dict:
    """Definition-file form of any ring (always the explicit-tables kind)."""
    spec = {"kind": "tables", "name": ring.name, "size": ring.size,
            "add": [list(row) for row in ring.add],
            "mul": [list(row) for row in ring.mul]}
    if ring.involution is not None:
        spec["involution"] = list(ring.involution)
    return spec


def ring_from_spec(spec: dict) -> FiniteRing:
    """Build a ring from its definition-file form (already JSON-decoded)."""
    if not isinstance(spec, dict) or "kind" not in spec:
        raise SpecError("ring spec must be an object with a 'kind' field")
    kind = spec["kind"]
    if kind == "Zn":
        return build_zn(int(spec["n"]))
    if kind == "product":
        factors = spec.get("factors", [])
        if len(factors) != 2:
            raise SpecError("product spec needs exactly two factors")
        return build_product(ring_from_spec(factors[0]), ring_from_spec(factors[1]))
    if kind == "matrix2":
        return build_matrix_ring(int(spec["p"]))
    if kind == "tables":
        try:
            add, mul = spec["add"], spec["mul"]
        except KeyError as exc:
            raise SpecError(f"tables spec missing {exc}") from None
        return build_ring_from_tables(add, mul, involution=spec.get("involution"),
                                      name=spec.get("name"))
    raise SpecError(f"unknown ring kind {kind!r}")


# -- element-level predicates and relations -----------------------------------


def vn_regular_witness(ring: FiniteRing, a: int):
    """First x with a*x*a = a, or None when a has no inner inverse."""
    for x in range(ring.size):
        if ring.mul[ring.mul[a][x]][a] == a:
            return x
    return None


def hartwig_minus_le(ring: FiniteRing, a: int, b: int) -> OrderVerdict:
    """Hartwig's minus order: some inner inverse x of a with xa = xb and ax = bx."""
    for x in range(ring.size):
        if ring.mul[ring.mul[a][x]][a] != a:
            continue
        if ring.mul[x][a] == ring.mul[x][b] and ring.mul[a][x] == ring.mul[b][x]:
            return OrderVerdict("hartwig", (a, b), True, InnerInverse(x))
    return OrderVerdict("hartwig", (a, b), False)


def ring_minus_le_annih(ring: FiniteRing, a: int, b: int) -> OrderVerdict:
    """Annihilator form of the ring minus order.

    Looks for idempotents p, q with l(a) = R(1-p), r(a) = (1-q)R, pa = pb
    and aq = bq.
    """
    idems = sorted(ring.idempotents())
    lann, rann = ring.left_ann(a), ring.right_ann(a)
    for p in idems:
        if ring.principal_left(ring.sub(ring.one, p)) != lann:
            continue
        if ring.mul[p][a] != ring.mul[p][b]:
            continue
        for q in idems:
            if ring.principal_right(ring.sub(ring.one, q)) != rann:
                continue
            if ring.mul[a][q] == ring.mul[b][q]:
                return OrderVerdict("ring-annih", (a, b), True, AnnihPair(p, q))
    return OrderVerdict("ring-annih", (a, b), False)


def idempotent_annih_identity(ring: FiniteRing, p: int) -> bool:
    """R(1-p) = l(p) and (1-p)R = r(p); must hold for every idempotent p."""
    if ring.mul[p][p] != p:
        raise ValueError(f"{p} is not idempotent in {ring.name}")
    comp = ring.sub(ring.one, p)
    return (ring.principal_left(comp) == ring.left_ann(p)
            and ring.principal_right(comp) == ring.right_ann(p))


# -- whole-ring certificates ---------------------------------------------------


@dataclass(frozen=True)
class RickartCert:
    """Per-element idempotent (or projection) generators of both annihilators.

    ``witnesses[a] = (p, q)`` with r(a) = pR and l(a) = Rq.  ``failure`` names
    the first element with no such pair.
    """

    holds: bool
    witnesses: dict[int, tuple[int, int]]
    failure: int | None = None


def _rickart_cert(ring: FiniteRing, generators) -> RickartCert:
    gens = sorted(generators)
    right_of = {e: ring.principal_right(e) for e in gens}
    left_of = {e: ring.principal_left(e) for e in gens}
    witnesses = {}
    for a in range(ring.size):
        rann, lann = ring.right_ann(a), ring.left_ann(a)
        p = next((e for e in gens if right_of[e] == rann), None)
        q = next((e for e in gens if left_of[e] == lann), None)
        if p is None or q is None:
            return RickartCert(False, witnesses, failure=a)
        witnesses[a] = (p, q)
    return RickartCert(True, witnesses)


def is_rickart(ring: FiniteRing) -> RickartCert:
    """Every one-sided annihilator of an element is a principal ideal on an idempotent."""
    return _rickart_cert(ring, ring.idempotents())


def is_rickart_star(ring: FiniteRing) -> RickartCert:
    """Every one-sided annihilator is generated by a projection."""
    return _rickart_cert(ring, ring.projections())


def is_proper_star(ring: FiniteRing) -> bool:
    """a a* = 0 implies a = 0."""
    if ring.involution is None:
        raise ValueError(f"{ring.name} has no involution")
    return all(ring.mul[a][ring.involution[a]] != ring.zero
               for a in range(ring.size) if a != ring.zero)


def revalidate_ring(verdict: OrderVerdict, ring: FiniteRing) -> bool:
    """Replay a ring-level verdict's witness against the defining equations."""
    if not verdict.holds:
        return True
    a, b = verdict.operands
    w = verdict.witness
    if verdict.relation == "hartwig":
        x = w.value
        return (ring.mul[ring.mul[a][x]][a] == a
                and ring.mul[x][a] == ring.mul[x][b]
                and ring.mul[a][x] == ring.mul[b][x])
    if verdict.relation == "ring-annih":
        p, q = w.p, w.q
        return (ring.mul[p][p] == p and ring.mul[q][q] == q
                and ring.principal_left(ring.sub(ring.one, p)) == ring.left_ann(a)
                and ring.principal_right(ring.sub(ring.one, q)) == ring.right_ann(a)
                and ring.mul[p][a] == ring.mul[p][b]
                and ring.mul[a][q] == ring.mul[b][q])
    raise ValueError(f"not a ring-level relation: {verdict.relation}")
