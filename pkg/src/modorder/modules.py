"""Finite right modules over finite rings, as carrier + addition + action tables."""

from __future__ import annotations

from dataclasses import dataclass

from .rings import AxiomError, FiniteRing, SpecError, build_zn, ring_from_spec

MAX_MODULE_SIZE = 64


class FiniteModule:
    """Unitary right R-module on ``0..size-1``.

    ``action`` is a size x |R| table: ``action[m][r]`` is m.r.  Validation
    checks the abelian-group laws of the addition and the four action laws
    m(r+s) = mr + ms, (m+n)r = mr + nr, m(rs) = (mr)s and m1 = m.
    """

    def __init__(self, ring: FiniteRing, add, action, *, name=None,
                 check=True, force_full_check=False):
        self.ring = ring
        self.size = len(add)
        if self.size < 1:
            raise AxiomError("module carrier is empty")
        if self.size > MAX_MODULE_SIZE:
            raise AxiomError(f"module size {self.size} exceeds cap {MAX_MODULE_SIZE}")
        self.add = [list(row) for row in add]
        self.action = [list(row) for row in action]
        self.name = name or f"module{self.size}"
        self._check_shape()
        self.zero = self._find_zero()
        self.neg = self._inverses()
        if check:
            self.validate(force=force_full_check)

    def _check_shape(self):
        n, r = self.size, self.ring.size
        if len(self.add) != n or any(len(row) != n for row in self.add):
            raise AxiomError(f"addition table is not {n}x{n}")
        if len(self.action) != n or any(len(row) != r for row in self.action):
            raise AxiomError(f"action table is not {n}x{r}")
        for table, width in ((self.add, n), (self.action, n)):
            for i, row in enumerate(table):
                for j, v in enumerate(row):
                    if not (0 <= v < n):
                        raise AxiomError(f"table entry [{i}][{j}] = {v} out of range")

    def _find_zero(self):
        for e in range(self.size):
            if all(self.add[e][x] == x == self.add[x][e] for x in range(self.size)):
                return e
        raise AxiomError("module has no additive identity")

    def _inverses(self):
        neg = []
        for x in range(self.size):
            try:
                neg.append(self.add[x].index(self.zero))
            except ValueError:
                raise AxiomError(f"module element {x} has no additive inverse") from None
        return neg

    def validate(self, *, force=False):
        n, R = self.size, self.ring
        rng, rr = range(n), range(R.size)
        for x in rng:
            for y in rng:
                if self.add[x][y] != self.add[y][x]:
                    raise AxiomError(f"module addition not commutative at ({x},{y})")
        deep = force or (n <= MAX_MODULE_SIZE and R.size <= 64)
        if deep:
            for x in rng:
                for y in rng:
                    xy = self.add[x][y]
                    for z in rng:
                        if self.add[xy][z] != self.add[x][self.add[y][z]]:
                            raise AxiomError(f"module addition not associative at ({x},{y},{z})")
        for x in rng:
            if self.action[x][R.one] != x:
                raise AxiomError(f"unitality fails: {x}.1 = {self.action[x][R.one]}")
        if deep:
            for x in rng:
                for r in rr:
                    xr = self.action[x][r]
                    for s in rr:
                        if self.action[x][R.add[r][s]] != self.add[xr][self.action[x][s]]:
                            raise AxiomError(f"m(r+s) law fails at (m,r,s)=({x},{r},{s})")
                        if self.action[x][R.mul[r][s]] != self.action[xr][s]:
                            raise AxiomError(f"m(rs) law fails at (m,r,s)=({x},{r},{s})")
            for x in rng:
                for y in rng:
                    xy = self.add[x][y]
                    for r in rr:
                        if self.action[xy][r] != self.add[self.action[x][r]][self.action[y][r]]:
                            raise AxiomError(f"(m+n)r law fails at (m,n,r)=({x},{y},{r})")

    def act(self, m: int, r: int) -> int:
        return self.action[m][r]

    def sub(self, x: int, y: int) -> int:
        return self.add[x][self.neg[y]]


# -- submodule sets ------------------------------------------------------------


@dataclass(frozen=True)
class Submodule:
    """A materialized submodule: the full member set, tied to its parent."""

    module: FiniteModule
    members: frozenset[int]

    def __post_init__(self):
        M = self.module
        if M.zero not in self.members:
            raise AxiomError("submodule misses zero")
        for x in self.members:
            for y in self.members:
                if M.add[x][y] not in self.members:
                    raise AxiomError(f"set not closed under addition at ({x},{y})")
            for r in range(M.ring.size):
                if M.action[x][r] not in self.members:
                    raise AxiomError(f"set not closed under action at ({x},{r})")

    def sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))


def cyclic_submodule(M: FiniteModule, m: int) -> Submodule:
    """mR = {m.r : r in R}"""
    return Submodule(M, frozenset(M.action[m][r] for r in range(M.ring.size)))


def right_ann(M: FiniteModule, m: int) -> frozenset[int]:
    """r_R(m) = {r : m.r = 0}"""
    return frozenset(r for r in range(M.ring.size) if M.action[m][r] == M.zero)


def _same_parent(a: Submodule, b: Submodule):
    if a.module is not b.module:
        raise ValueError("submodules belong to different modules")


def sum_of_sets(a: Submodule, b: Submodule) -> Submodule:
    _same_parent(a, b)
    M = a.module
    return Submodule(M, frozenset(M.add[x][y] for x in a.members for y in b.members))


def intersect(a: Submodule, b: Submodule) -> Submodule:
    _same_parent(a, b)
    return Submodule(a.module, a.members & b.members)


def is_internal_direct_sum(a: Submodule, b: Submodule, target: Submodule) -> bool:
    """A + B = target with A intersect B = {0}."""
    _same_parent(a, b)
    _same_parent(a, target)
    M = a.module
    if a.members & b.members != frozenset([M.zero]):
        return False
    return sum_of_sets(a, b).members == target.members


# -- constructors ----------------------------------------------------------------


def build_zm_over_zn(m: int, n: int, *, check=True) -> FiniteModule:
    """Z_m as a Z_n-module via x.r = x*(r mod m); requires m | n."""
    if m < 1 or n < 1:
        raise SpecError("moduli must be positive")
    if n % m != 0:
        raise SpecError(f"action ill-defined: {m} does not divide {n}")
    ring = build_zn(n)
    add = [[(x + y) % m for y in range(m)] for x in range(m)]
    action = [[x * r % m for r in range(n)] for x in range(m)]
    return FiniteModule(ring, add, action, name=f"Z{m}/Z{n}", check=check)


def build_ring_as_module(ring: FiniteRing, *, check=True) -> FiniteModule:
    """R as a right module over itself (action = ring multiplication)."""
    return FiniteModule(ring, ring.add, ring.mul, name=f"{ring.name}_R", check=check)


def build_module_from_tables(ring: FiniteRing, add, action, *, name=None,
                             force_full_check=False) -> FiniteModule:
    """Validated module from raw tables; failures name the violated law."""
    return FiniteModule(ring, add, action, name=name or "tables",
                        check=True, force_full_check=force_full_check)


def module_to_spec(module: FiniteModule) -> dict:
    """Definition-file form of any module (always the explicit-tables kind)."""
    from .rings import ring_to_spec
    return {"kind": "tables", "name": module.name, "ring": ring_to_spec(module.ring),
            "size": module.size,
            "add": [list(row) for row in module.add],
            "action": [list(row) for row in module.action]}


def module_from_spec(spec: dict) -> FiniteModule:
    """Build a module from its definition-file form (already JSON-decoded)."""
    if not isinstance(spec, dict) or "kind" not in spec:
        raise SpecError("module spec must be an object with a 'kind' field")
    kind = spec["kind"]
    if kind == "ZmOverZn":
        return build_zm_over_zn(int(spec["m"]), int(spec["n"]))
    if kind == "ringAsModule":
        return build_ring_as_module(ring_from_spec(spec["ring"]))
    if kind == "tables":
        try:
            ring, add, action = spec["ring"], spec["add"], spec["action"]
        except KeyError as exc:
            raise SpecError(f"tables spec missing {exc}") from None
        return build_module_from_tables(ring_from_spec(ring), add, action,
                                        name=spec.get("name"))
    raise SpecError(f"unknown module kind {kind!r}")
